#include <doctest.h>

#include <cmath>

#include "cotlar/multipliers.hpp"
#include "cotlar/ncalgebra.hpp"
#include "oracles.hpp"
#include "systems.hpp"

using namespace cotlar;

namespace {

using Exact = GroupAlgebraElement<CoxeterSystem>;
using Float = GroupAlgebraElement<CoxeterSystem, std::complex<double>>;

Exact random_exact(oracle::Gen& gen, const std::vector<CanonicalElement>& ball, std::size_t support) {
  Exact f;
  for (std::size_t i = 0; i < support; ++i) {
    f.add(ball[gen.below(ball.size())], ExactComplex(Rational(gen.between(-3, 3)), Rational(gen.between(-3, 3))));
  }
  return f;
}

Float to_float(const Exact& f) {
  Float out;
  for (const auto& [g, c] : f.coefficients()) out.add(g, c.to_complex());
  return out;
}

}  // namespace

TEST_CASE("convolution, adjoint and trace") {
  const auto sys = pgl2z();
  const auto g = sys.reduce({0, 2});
  const auto h = sys.reduce({1, 2, 1});
  CHECK(ga_mul(sys, Exact::delta(g), Exact::delta(h)) == Exact::delta(sys.multiply(g, h)));
  CHECK(ga_adjoint(sys, Exact::delta(g, ExactComplex(Rational(2), Rational(1)))) ==
        Exact::delta(sys.invert(g), ExactComplex(Rational(2), Rational(-1))));

  oracle::Gen gen(3);
  const auto ball = sys.ball(3);
  for (int i = 0; i < 30; ++i) {
    const auto f = random_exact(gen, ball, 5);
    Rational norm2 = 0;
    for (const auto& [x, c] : f.coefficients()) norm2 += c.norm();
    CHECK(plancherel_trace(sys, ga_mul(sys, ga_adjoint(sys, f), f)) == ExactComplex(norm2));
    const auto a = random_exact(gen, ball, 3);
    const auto b = random_exact(gen, ball, 3);
    CHECK(ga_adjoint(sys, ga_mul(sys, a, b)) == ga_mul(sys, ga_adjoint(sys, b), ga_adjoint(sys, a)));
    CHECK(ga_mul(sys, ga_mul(sys, a, b), f) == ga_mul(sys, a, ga_mul(sys, b, f)));
  }
}

TEST_CASE("conditional expectation is a projection") {
  const auto sys = pgl2z();
  const auto g0 = commuting_parabolic(sys, 0);
  oracle::Gen gen(8);
  const auto f = random_exact(gen, sys.ball(3), 12);
  const auto e = conditional_expectation<CoxeterSystem>(g0, f);
  CHECK(conditional_expectation<CoxeterSystem>(g0, e) == e);
  for (const auto& [g, c] : e.coefficients()) CHECK(g0.contains(g));
}

TEST_CASE("L4 norm of delta_e + delta_s") {
  const auto sys = dinfty();
  const auto f = Exact::delta(sys.identity()) + Exact::delta(sys.reduce({0}));
  const auto n = lp_norm_even(sys, f, 2);
  CHECK(n.trace_power == ExactComplex(8));
  CHECK(n.norm == doctest::Approx(std::pow(8.0, 0.25)).epsilon(1e-12));
  CHECK(lp_norm_even(sys, f, 1).norm == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("Cotlar residual vanishes for D-infinity") {
  const auto sys = dinfty();
  const auto m = mw_symbol(sys, 0);
  const auto g0 = trivial_membership(sys.identity());
  const auto ball = sys.ball(3);
  oracle::Gen gen(101);
  for (int i = 0; i < 100; ++i) {
    const auto r = cotlar_residual(sys, m, g0, random_exact(gen, ball, 4));
    CHECK(r.is_zero());
    CHECK(r.numeric_mode == "exact");
  }
}

TEST_CASE("defect matches the coefficient formula") {
  const auto sys = a2tilde();
  const auto m = mw_symbol(sys, 0);
  const auto g0 = trivial_membership(sys.identity());
  const auto ball = sys.ball(3);
  oracle::Gen gen(77);
  for (int i = 0; i < 20; ++i) {
    const auto f = random_exact(gen, ball, 4);
    Exact expected;
    for (const auto& [g, x] : f.coefficients()) {
      for (const auto& [h, y] : f.coefficients()) {
        const auto k = sys.multiply(g, sys.invert(h));
        if (g0.contains(k)) continue;
        expected.add(k, x * y.conj() * (m(g) - m(k)) * (m(h) - m(sys.invert(k))));
      }
    }
    CHECK(cotlar_defect(sys, m, g0, f) == expected);
  }
}

TEST_CASE("A2~ violating element has nonzero residual") {
  const auto sys = a2tilde();
  const auto m = mw_symbol(sys, 0);
  const auto g0 = trivial_membership(sys.identity());
  const auto report = verify_cotlar(sys, m, g0, 3);
  REQUIRE_FALSE(report.violations.empty());
  const auto& v = report.violations.front();
  const auto f = Exact::delta(v.h) + Exact::delta(sys.multiply(sys.invert(v.g), v.h));
  const auto r = cotlar_residual(sys, m, g0, f);
  CHECK_FALSE(r.is_zero());
  CHECK(*r.residual_sup_squared > 0);
}

TEST_CASE("float mode agrees with exact mode") {
  const auto sys = a2tilde();
  const auto m = mw_symbol(sys, 0);
  const auto g0 = trivial_membership(sys.identity());
  oracle::Gen gen(5);
  const auto ball = sys.ball(3);
  for (int i = 0; i < 20; ++i) {
    const auto f = random_exact(gen, ball, 4);
    const auto exact = cotlar_residual(sys, m, g0, f);
    const auto approx = cotlar_residual(sys, m, g0, to_float(f));
    CHECK(approx.numeric_mode == "float");
    CHECK(approx.residual_sup == doctest::Approx(exact.residual_sup).epsilon(1e-9));
    CHECK(exact.residual_sup == doctest::Approx(std::sqrt(exact.residual_sup_squared->convert_to<double>())));
  }
}

TEST_CASE("ratio report") {
  const auto sys = pentagon();
  const RatioSpec spec{40, 2, 3, 9};
  const auto a = ratio_report(sys, mw_symbol(sys, 0), 2, spec);
  const auto b = ratio_report(sys, mw_symbol(sys, 0), 2, spec);
  CHECK(a.max_ratio == b.max_ratio);
  CHECK(a.mean_ratio == b.mean_ratio);
  CHECK(a.argmax_sample == b.argmax_sample);
  CHECK(a.alpha == doctest::Approx(std::log2(1.0 + std::sqrt(2.0))));
  CHECK(a.reference == doctest::Approx(std::pow(16.0 / 3.0, a.alpha)));
  CHECK(a.min_ratio <= a.mean_ratio);
  CHECK(a.mean_ratio <= a.max_ratio);

  const auto id = ratio_report(sys, constant_symbol<CanonicalElement>(ExactComplex(1)), 2, spec);
  CHECK(id.max_ratio == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(id.min_ratio == doctest::Approx(1.0).epsilon(1e-12));

  const auto f1 = random_element<CoxeterSystem>(sys.ball(2), 3, 9, 4);
  const auto f2 = random_element<CoxeterSystem>(sys.ball(2), 3, 9, 4);
  CHECK(f1 == f2);
  CHECK(f1.size() == 3);
}
