#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cotlar/exact.hpp"
#include "cotlar/group.hpp"
#include "cotlar/multipliers.hpp"
#include "cotlar/parallel.hpp"

// Finitely supported elements of the group algebra ℂ[G] ≅ λ(C_c(G)), with
// coefficients either exact (ExactComplex) or std::complex<double>.
namespace cotlar {

template <Group G, class Scalar = ExactComplex>
class GroupAlgebraElement {
 public:
  using Element = typename G::Element;
  using Traits = ScalarTraits<Scalar>;

  GroupAlgebraElement() = default;

  static GroupAlgebraElement delta(const Element& g, Scalar c = Traits::from_exact(ExactComplex(1))) {
    GroupAlgebraElement a;
    a.add(g, c);
    return a;
  }

  /// coefficient(g) += c; zero coefficients are dropped.
  void add(const Element& g, const Scalar& c) {
    if (Traits::is_zero(c)) return;
    auto [it, inserted] = coeffs_.try_emplace(g, c);
    if (inserted) return;
    it->second += c;
    if (Traits::is_zero(it->second)) coeffs_.erase(it);
  }

  Scalar coefficient(const Element& g) const {
    auto it = coeffs_.find(g);
    return it == coeffs_.end() ? Traits::from_exact(ExactComplex(0)) : it->second;
  }
  const std::map<Element, Scalar>& coefficients() const noexcept { return coeffs_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  bool empty() const noexcept { return coeffs_.empty(); }

  GroupAlgebraElement& operator+=(const GroupAlgebraElement& o) {
    for (const auto& [g, c] : o.coeffs_) add(g, c);
    return *this;
  }
  GroupAlgebraElement& operator-=(const GroupAlgebraElement& o) {
    for (const auto& [g, c] : o.coeffs_) add(g, -c);
    return *this;
  }
  friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a += b; }
  friend GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a -= b; }
  friend GroupAlgebraElement operator*(const Scalar& c, const GroupAlgebraElement& a) {
    GroupAlgebraElement out;
    for (const auto& [g, x] : a.coeffs_) out.add(g, c * x);
    return out;
  }
  friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  std::map<Element, Scalar> coeffs_;
};

/// Convolution: (a·b)(k) = Σ_{gh=k} a(g)b(h).
template <Group G, class Scalar>
GroupAlgebraElement<G, Scalar> ga_mul(const G& group, const GroupAlgebraElement<G, Scalar>& a,
                                      const GroupAlgebraElement<G, Scalar>& b) {
  GroupAlgebraElement<G, Scalar> out;
  for (const auto& [g, x] : a.coefficients()) {
    for (const auto& [h, y] : b.coefficients()) out.add(group.multiply(g, h), x * y);
  }
  return out;
}

/// a*(g) = conj(a(g⁻¹)).
template <Group G, class Scalar>
GroupAlgebraElement<G, Scalar> ga_adjoint(const G& group, const GroupAlgebraElement<G, Scalar>& a) {
  GroupAlgebraElement<G, Scalar> out;
  for (const auto& [g, x] : a.coefficients()) out.add(group.invert(g), ScalarTraits<Scalar>::conj(x));
  return out;
}

/// τ(a) = a(e), the unnormalized Plancherel trace.
template <Group G, class Scalar>
Scalar plancherel_trace(const G& group, const GroupAlgebraElement<G, Scalar>& a) {
  return a.coefficient(group.identity());
}

/// T_m(a)(g) = m(g)·a(g).
template <Group G, class Scalar>
GroupAlgebraElement<G, Scalar> apply_multiplier(const Symbol<typename G::Element>& m,
                                                const GroupAlgebraElement<G, Scalar>& a) {
  GroupAlgebraElement<G, Scalar> out;
  for (const auto& [g, x] : a.coefficients()) out.add(g, ScalarTraits<Scalar>::from_exact(m(g)) * x);
  return out;
}

/// E(a) = a restricted to G₀.
template <Group G, class Scalar>
GroupAlgebraElement<G, Scalar> conditional_expectation(const SubgroupMembership<typename G::Element>& g0,
                                                       const GroupAlgebraElement<G, Scalar>& a) {
  GroupAlgebraElement<G, Scalar> out;
  for (const auto& [g, x] : a.coefficients()) {
    if (g0.contains(g)) out.add(g, x);
  }
  return out;
}

struct ResidualReport {
  std::string numeric_mode;  // "exact" or "float"
  /// max_g |defect(g)|.
  double residual_sup = 0.0;
  /// max_g |defect(g)|², exact mode only.
  std::optional<Rational> residual_sup_squared;
  std::size_t defect_support_size = 0;

  bool is_zero() const { return defect_support_size == 0; }
};

/// E⊥[T(f)T(f)* − T(f·T(f)*) − T(f·T(f)*)* + T(T(f·f*)*)].
template <Group G, class Scalar>
GroupAlgebraElement<G, Scalar> cotlar_defect(const G& group, const Symbol<typename G::Element>& m,
                                             const SubgroupMembership<typename G::Element>& g0,
                                             const GroupAlgebraElement<G, Scalar>& f) {
  const auto tf = apply_multiplier<G>(m, f);
  const auto tf_star = ga_adjoint(group, tf);
  const auto mixed = apply_multiplier<G>(m, ga_mul(group, f, tf_star));
  auto defect = ga_mul(group, tf, tf_star);
  defect -= mixed;
  defect -= ga_adjoint(group, mixed);
  defect += apply_multiplier<G>(m, ga_adjoint(group, apply_multiplier<G>(m, ga_mul(group, f, ga_adjoint(group, f)))));
  return defect - conditional_expectation<G>(g0, defect);
}

template <Group G, class Scalar>
ResidualReport cotlar_residual(const G& group, const Symbol<typename G::Element>& m,
                               const SubgroupMembership<typename G::Element>& g0,
                               const GroupAlgebraElement<G, Scalar>& f) {
  const auto defect = cotlar_defect(group, m, g0, f);
  ResidualReport report;
  report.numeric_mode = ScalarTraits<Scalar>::exact ? "exact" : "float";
  report.defect_support_size = defect.size();
  if constexpr (ScalarTraits<Scalar>::exact) report.residual_sup_squared = Rational(0);
  for (const auto& [g, c] : defect.coefficients()) {
    report.residual_sup = std::max(report.residual_sup, ScalarTraits<Scalar>::magnitude(c));
    if constexpr (ScalarTraits<Scalar>::exact) {
      report.residual_sup_squared = std::max(*report.residual_sup_squared, c.norm());
    }
  }
  return report;
}

template <class Scalar>
struct LpNorm {
  /// τ((f*f)^k).
  Scalar trace_power;
  /// τ((f*f)^k)^{1/(2k)}.
  double norm = 0.0;
};

/// ‖λ(f)‖_{2k} through τ((f*f)^k). Requires k ≥ 1.
template <Group G, class Scalar>
LpNorm<Scalar> lp_norm_even(const G& group, const GroupAlgebraElement<G, Scalar>& f, unsigned k) {
  const auto ff = ga_mul(group, ga_adjoint(group, f), f);
  auto power = ff;
  for (unsigned i = 1; i < k; ++i) power = ga_mul(group, power, ff);
  LpNorm<Scalar> out{plancherel_trace(group, power), 0.0};
  const double t = ScalarTraits<Scalar>::to_complex(out.trace_power).real();
  out.norm = t <= 0.0 ? 0.0 : std::pow(t, 1.0 / (2.0 * k));
  return out;
}

/// SplitMix64 step; also used to derive independent per-sample seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

struct RatioSpec {
  std::size_t samples = 1000;
  std::size_t radius = 3;
  std::size_t support_size = 4;
  std::uint64_t seed = 0;
};

struct RatioStats {
  unsigned k = 1;
  double p = 2.0;
  std::size_t samples = 0;
  double max_ratio = 0.0;
  double mean_ratio = 0.0;
  double min_ratio = 0.0;
  std::size_t argmax_sample = 0;
  /// log₂(1 + √2).
  double alpha = 0.0;
  /// (p²/(p − 1))^α.
  double reference = 0.0;
};

/// Random f with `support_size` distinct ball elements and coefficients with
/// real and imaginary parts uniform in [−1, 1]. Sample i depends only on
/// (seed, i).
template <Group G>
GroupAlgebraElement<G, std::complex<double>> random_element(const std::vector<typename G::Element>& ball,
                                                           std::size_t support_size, std::uint64_t seed,
                                                           std::size_t index) {
  std::mt19937_64 rng(splitmix64(seed ^ splitmix64(index)));
  std::vector<std::size_t> order(ball.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  const std::size_t n = std::min(support_size, ball.size());
  for (std::size_t i = 0; i < n; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, order.size() - 1);
    std::swap(order[i], order[pick(rng)]);
  }
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  GroupAlgebraElement<G, std::complex<double>> f;
  for (std::size_t i = 0; i < n; ++i) {
    const double re = unit(rng);
    const double im = unit(rng);
    f.add(ball[order[i]], {re, im});
  }
  return f;
}

/// ‖T_m f‖_{2k} / ‖f‖_{2k} over seeded random f, in floating point. Reports
/// only; the bound's constant is not known.
template <Group G>
RatioStats ratio_report(const G& group, const Symbol<typename G::Element>& m, unsigned k, const RatioSpec& spec) {
  const auto ball = group.ball(spec.radius);
  std::vector<double> ratios(spec.samples, 0.0);
  parallel_for(spec.samples, worker_count(spec.samples), [&](std::size_t i, std::size_t) {
    const auto f = random_element<G>(ball, spec.support_size, spec.seed, i);
    const double denom = lp_norm_even(group, f, k).norm;
    const double numer = lp_norm_even(group, apply_multiplier<G>(m, f), k).norm;
    ratios[i] = denom == 0.0 ? 0.0 : numer / denom;
  });

  RatioStats stats;
  stats.k = k;
  stats.p = 2.0 * k;
  stats.samples = spec.samples;
  stats.alpha = std::log2(1.0 + std::sqrt(2.0));
  stats.reference = std::pow(stats.p * stats.p / (stats.p - 1.0), stats.alpha);
  if (ratios.empty()) return stats;
  double sum = 0.0;
  stats.min_ratio = ratios.front();
  for (std::size_t i = 0; i < ratios.size(); ++i) {
    sum += ratios[i];
    stats.min_ratio = std::min(stats.min_ratio, ratios[i]);
    if (ratios[i] > stats.max_ratio) {
      stats.max_ratio = ratios[i];
      stats.argmax_sample = i;
    }
  }
  stats.mean_ratio = sum / static_cast<double>(ratios.size());
  return stats;
}

}  // namespace cotlar
