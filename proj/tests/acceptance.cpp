#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "cli/app.hpp"
#include "cli/descriptor_io.hpp"
#include "cotlar/a2tilde.hpp"
#include "cotlar/buildings.hpp"
#include "cotlar/error.hpp"
#include "cotlar/geometry.hpp"
#include "cotlar/multipliers.hpp"
#include "cotlar/ncalgebra.hpp"
#include "oracles.hpp"
#include "systems.hpp"

using namespace cotlar;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_ms, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out.pass = false;
    out.detail = std::string("exception: ") + e.what();
  }
  const double elapsed = ms_since(start);
  if (elapsed >= limit_ms) out.require(false, "took " + std::to_string(elapsed) + " ms");
  if (!out.pass) ++failures;
  std::printf("criterion %2d: %s  %s  [%.1f ms, limit %.0f ms]%s%s\n", id, out.pass ? "PASS" : "FAIL", title.c_str(),
              elapsed, limit_ms, out.detail.empty() ? "" : "  ", out.detail.c_str());
  std::fflush(stdout);
}

CanonicalElement parse(const CoxeterSystem& sys, const std::string& letters) {
  std::vector<std::string> names;
  for (char c : letters) names.emplace_back(1, c);
  return sys.reduce(sys.parse_word(names));
}

std::vector<CoxeterSystem> random_right_angled(std::size_t count, std::uint64_t seed) {
  oracle::Gen gen(seed);
  std::vector<CoxeterSystem> out;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = 2 + gen.below(6);
    Matrix m(n, std::vector<std::uint32_t>(n, 1));
    std::vector<std::string> names;
    for (std::size_t a = 0; a < n; ++a) {
      names.push_back("g" + std::to_string(a));
      for (std::size_t b = a + 1; b < n; ++b) m[a][b] = m[b][a] = gen.below(2) == 0 ? 2 : kInf;
    }
    out.push_back(CoxeterSystem::validate(names, m));
  }
  return out;
}

std::string fixture(const std::string& name) { return std::string(COTLAR_FIXTURE_DIR) + "/" + name; }

}  // namespace

int main() {
  std::printf("acceptance suite: exact arithmetic throughout; float tolerance 1e-9 where floats appear\n");

  criterion(1, "nested-condition table", 100.0, [] {
    Outcome o;
    double worst = 0.0;
    auto timed = [&](const CoxeterSystem& sys, Generator s) {
      const auto start = Clock::now();
      const bool nested = nested_condition(sys, s);
      worst = std::max(worst, ms_since(start));
      return nested;
    };
    const auto p = pgl2z();
    o.require(timed(p, p.generator("s")), "PGL2(Z) not nested at s");
    o.require(!timed(p, p.generator("t")), "PGL2(Z) nested at t");
    o.require(!timed(p, p.generator("u")), "PGL2(Z) nested at u");
    const auto a = a2tilde();
    for (Generator s = 0; s < 3; ++s) o.require(!timed(a, s), "A2~ nested at " + a.name(s));
    auto systems = random_right_angled(40, 1);
    systems.push_back(dinfty());
    systems.push_back(pentagon());
    for (const auto& sys : systems) {
      for (Generator s = 0; s < sys.rank(); ++s) o.require(timed(sys, s), "right-angled system not nested");
    }
    o.require(worst < 1.0, "a single check took >= 1 ms");
    o.detail += (o.detail.empty() ? "" : "; ") + std::string("42 right-angled systems; slowest check ") +
                std::to_string(worst) + " ms < 1 ms";
    return o;
  });

  criterion(2, "nested Cotlar brute force (D_inf R=6, pentagon R=6, PGL2(Z) R=5; G0 = W_{T_s})", 90000.0, [] {
    Outcome o;
    for (const auto& [name, sys, radius] : {std::tuple{"D_inf", dinfty(), 6}, std::tuple{"pentagon", pentagon(), 6},
                                            std::tuple{"PGL2(Z)", pgl2z(), 5}}) {
      const auto start = Clock::now();
      const auto r = verify_cotlar(sys, mw_symbol(sys, 0), commuting_parabolic(sys, 0), radius);
      const double t = ms_since(start);
      o.require(r.violations.empty(), std::string(name) + ": " + std::to_string(r.violations.size()) + " violations");
      o.require(r.invariance_violations.empty(), std::string(name) + ": invariance failures");
      o.require(t < 30000.0, std::string(name) + " over 30 s");
      o.detail += (o.detail.empty() ? "" : "; ") + std::string(name) + " " + std::to_string(r.pairs_checked) + " pairs";
    }
    return o;
  });

  criterion(3, "A2~ refutation (G0 = {e}, R=4; root relations for u, t, tu, sut at R=6)", 10000.0, [] {
    Outcome o;
    const auto sys = a2tilde();
    const auto r = verify_cotlar(sys, mw_symbol(sys, 0), trivial_membership(sys.identity()), 4);
    o.require(!r.violations.empty(), "no Cotlar violation at radius 4");
    if (!r.violations.empty()) {
      o.detail = "first violation g=" + sys.label(r.violations.front().g) + " h=" + sys.label(r.violations.front().h);
    }
    for (const auto* g : {"u", "t", "tu", "sut"}) {
      const auto w = root_relation_check(sys, 0, parse(sys, g), 6);
      bool witnesses = true;
      for (const auto& x : w.intersections) witnesses = witnesses && x.has_value();
      o.require(w.refuted() && witnesses, std::string(g) + " not refuted");
      if (w.refuted()) {
        o.detail += std::string("; ") + g + " witnesses";
        for (const auto& x : w.intersections) o.detail += " " + sys.label(*x);
      }
    }
    return o;
  });

  criterion(4, "six-class oracle equivalence (D_inf, pentagon; every g in ball(6), check radius 6)", 60000.0, [] {
    Outcome o;
    std::size_t checked = 0;
    for (const auto& sys : {dinfty(), pentagon()}) {
      for (const auto& g : sys.ball(6)) {
        const auto w = root_relation_check(sys, 0, g, 6);
        ++checked;
        if (!w.relation || *w.relation != classify(sys, 0, g)) o.require(false, "mismatch at " + sys.label(g));
      }
    }
    o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(checked) + " elements";
    return o;
  });

  criterion(5, "A2~ translation subgroup and lattice symbol (|a|,|b| <= 3)", 60000.0, [] {
    Outcome o;
    const auto sys = a2tilde();
    const auto sub = A2TildeSubgroup::build(sys);
    const auto& inner = sub.system();
    o.require(inner.multiply(sub.alpha(), sub.beta()) == inner.multiply(sub.beta(), sub.alpha()),
              "alpha beta != beta alpha");
    o.require(sub.coset_reps().size() == 6, "coset count " + std::to_string(sub.coset_reps().size()));
    for (const auto& g : sys.ball(6)) {
      std::size_t hits = 0;
      for (const auto& rep : sub.coset_reps()) hits += sub.z2_membership(inner.multiply(inner.invert(rep), g)) ? 1 : 0;
      if (hits != 1) o.require(false, "factorization count " + std::to_string(hits) + " at " + sys.label(g));
    }
    const auto m = sub.extension_symbol(0);
    std::optional<ExactComplex> on_line, above, below;
    bool constant = true;
    auto same = [&](std::optional<ExactComplex>& slot, const ExactComplex& v) {
      if (!slot) slot = v;
      constant = constant && *slot == v;
    };
    for (long long a = -3; a <= 3; ++a) {
      for (long long b = -3; b <= 3; ++b) {
        const auto v = m(sub.power(a, b));
        same(a == b ? on_line : (a > b ? above : below), v);
      }
    }
    o.require(constant, "extension symbol not constant on <alpha beta> and on each side of a = b");
    const LatticeZ2 lattice;
    const auto r = verify_cotlar(lattice, sub.lattice_symbol(0), diagonal_membership(), 3);
    o.require(r.passed(), "lattice Cotlar: " + std::to_string(r.violations.size()) + " violations");
    o.detail += (o.detail.empty() ? "" : "; ") + std::string("values: a=b ") + to_string(*on_line) + ", a>b " +
                to_string(*above) + ", a<b " + to_string(*below) + "; lattice pairs " +
                std::to_string(r.pairs_checked);
    return o;
  });

  {
    const auto sub = A2TildeSubgroup::build(a2tilde());
    const auto m = sub.extension_symbol(0);
    std::string witness;
    for (long long a = -3; a <= 3 && witness.empty(); ++a) {
      for (long long b = -3; b <= 3 && witness.empty(); ++b) {
        if (a + b <= 0) continue;
        for (long long c = -3; c <= 3 && witness.empty(); ++c) {
          for (long long d = -3; d <= 3; ++d) {
            if (c + d > 0 && !(m(sub.power(a, b)) == m(sub.power(c, d)))) {
              witness = "(" + std::to_string(a) + "," + std::to_string(b) + ") vs (" + std::to_string(c) + "," +
                        std::to_string(d) + ")";
              break;
            }
          }
        }
      }
    }
    std::printf("  info: literal split along a+b=0 is %s%s\n", witness.empty() ? "consistent" : "refuted by ",
                witness.c_str());
  }

  criterion(6, "building axioms (pairs ball(4), triples ball(3)); corrupted table fails B2", 60000.0, [] {
    Outcome o;
    auto check = [&](const std::string& name, const AxiomReport& r) {
      o.require(r.passed(), name + ": " + std::to_string(r.failures.size()) + " failures");
    };
    check("thin D_inf", check_axioms(ThinBuilding(dinfty()), 4, 3));
    check("Z2*Z3", check_axioms(GraphProductBuilding(z2_free_z3()), 4, 3));
    check("path a-b-c", check_axioms(GraphProductBuilding(path_abc()), 4, 3));
    check("Z2xZ2", check_axioms(GraphProductBuilding(z2_times_z2()), 4, 3));
    const auto input = cli::load_descriptor(fixture("a2_corrupted_table.json"));
    const auto r = check_axioms(std::get<TableBuilding>(input), 4, 3);
    const AxiomFailure* b2 = nullptr;
    for (const auto& f : r.failures) {
      if (f.axiom == "B2" && b2 == nullptr) b2 = &f;
    }
    o.require(b2 != nullptr, "corrupted table passed B2");
    if (b2 != nullptr) {
      o.detail += (o.detail.empty() ? "" : "; ") + std::string("B2 witness (E,C,D) = (") + b2->chambers[0] + "," +
                  b2->chambers[1] + "," + b2->chambers[2] + ")";
    }
    return o;
  });

  criterion(7, "graph-product building symbol (Z2*Z3 each vertex R=4, path u=a R=3) and m = m' on the balls", 60000.0, [] {
    Outcome o;
    const auto free = z2_free_z3();
    for (Generator u = 0; u < 2; ++u) {
      const auto r = verify_theorem_c(free, u, 4);
      o.require(r.passed(), "Z2*Z3 u=" + free.name(u) + " failed");
      const auto m = building_symbol(GraphProductBuilding(free), u);
      for (const auto& g : free.ball(4)) {
        if (!(m(g) == amalgam_symbol_value(free, g, u))) o.require(false, "m != m' at " + free.label(g));
      }
    }
    const auto path = path_abc();
    o.require(verify_theorem_c(path, 0, 3).passed(), "path u=a failed");
    const auto m = building_symbol(GraphProductBuilding(path), 0);
    for (const auto& g : path.ball(3)) {
      if (!(m(g) == amalgam_symbol_value(path, g, 0))) o.require(false, "m != m' at " + path.label(g));
    }
    return o;
  });

  criterion(8, "transitivity on all chamber triples of ball(3) (Z2*Z3, thin D_inf)", 120000.0, [] {
    Outcome o;
    auto check = [&](const std::string& name, const TransitivityReport& r) {
      o.require(r.passed(), name + ": " + std::to_string(r.failures.size()) + " failures");
      o.detail += (o.detail.empty() ? "" : "; ") + name + " fired " + std::to_string(r.fired[0]) + "/" +
                  std::to_string(r.fired[1]) + "/" + std::to_string(r.fired[2]) + "/" + std::to_string(r.fired[3]);
    };
    const GraphProductBuilding free(z2_free_z3());
    check("Z2*Z3 u=a", transitivity_table_check(free, 0, 3));
    check("Z2*Z3 u=b", transitivity_table_check(free, 1, 3));
    check("thin D_inf u=s", transitivity_table_check(ThinBuilding(dinfty()), 0, 3));
    return o;
  });

  criterion(9, "finer model (Z3*Z2, values (+1,-1,-1), R=4; n=2 matches building symbol on ball(5))", 60000.0, [] {
    Outcome o;
    const auto gp = z3_free_z2();
    const auto model = finer_symbol(gp, 0, {ExactComplex(1), ExactComplex(-1), ExactComplex(-1)}, 4);
    o.require(model.constraints.passed(), "constraint audit failed");
    const auto r = verify_cotlar(gp, model.symbol, model.g0, 4);
    o.require(r.passed(), std::to_string(r.violations.size()) + " violations");
    const auto two = z2_free_z3();
    const auto binary = finer_symbol(two, 0, {ExactComplex(1), ExactComplex(-1)}, 5);
    const auto m = building_symbol(GraphProductBuilding(two), 0);
    for (const auto& g : two.ball(5)) {
      if (!(binary.symbol(g) == m(g))) o.require(false, "n=2 mismatch at " + two.label(g));
    }
    return o;
  });

  criterion(10, "operator Cotlar identity (exact)", 120000.0, [] {
    Outcome o;
    using Exact = GroupAlgebraElement<CoxeterSystem>;
    const auto d = dinfty();
    const auto m = mw_symbol(d, 0);
    const auto g0 = trivial_membership(d.identity());
    const auto ball = d.ball(3);
    oracle::Gen gen(2024);
    std::size_t zero = 0;
    for (int i = 0; i < 100; ++i) {
      Exact f;
      for (int k = 0; k < 4; ++k) {
        f.add(ball[gen.below(ball.size())], ExactComplex(Rational(gen.between(-3, 3)), Rational(gen.between(-3, 3))));
      }
      zero += cotlar_residual(d, m, g0, f).is_zero() ? 1 : 0;
    }
    o.require(zero == 100, std::to_string(100 - zero) + " nonzero residuals on D_inf");

    const auto a = a2tilde();
    const auto ma = mw_symbol(a, 0);
    const auto ga = trivial_membership(a.identity());
    const auto report = verify_cotlar(a, ma, ga, 3);
    o.require(!report.violations.empty(), "no A2~ violation to build f from");
    if (!report.violations.empty()) {
      const auto& v = report.violations.front();
      const auto f = Exact::delta(v.h) + Exact::delta(a.multiply(a.invert(v.g), v.h));
      const auto r = cotlar_residual(a, ma, ga, f);
      o.require(!r.is_zero(), "A2~ residual is zero");
      o.detail = "A2~ sup|defect|^2 = " + to_string(*r.residual_sup_squared);
    }

    const auto n = lp_norm_even(d, Exact::delta(d.identity()) + Exact::delta(d.reduce({0})), 2);
    o.require(n.trace_power == ExactComplex(8), "tau((f*f)^2) = " + to_string(n.trace_power));
    o.detail += "; tau((f*f)^2) = " + to_string(n.trace_power);
    return o;
  });

  criterion(11, "determinism (byte-identical reports, two runs each)", 60000.0, [] {
    Outcome o;
    const std::vector<std::vector<std::string>> commands = {
        {"nested", "--config", fixture("a2tilde.json"), "--generator", "s"},
        {"verify-cotlar", "--config", fixture("a2tilde.json"), "--generator", "s", "--radius", "4", "--g0", "trivial"},
        {"verify-cotlar", "--config", fixture("z3_free_z2.json"), "--generator", "a", "--values", "1,-1,-1",
         "--radius", "4"},
        {"residual", "--config", fixture("dinfty.json"), "--generator", "s", "--g0", "trivial", "--seed", "11"},
        {"lp-ratio", "--config", fixture("pentagon.json"), "--generator", "a", "--seed", "11", "--samples", "200"},
        {"axioms", "--config", fixture("a2_corrupted_table.json"), "--radius", "3"},
        {"classify", "--config", fixture("pentagon.json"), "--generator", "a", "--radius", "4"},
        {"export-dot", "--config", fixture("a2tilde.json"), "--generator", "s", "--radius", "3", "--color", "side"},
    };
    for (const auto& args : commands) {
      std::ostringstream out1, err1, out2, err2;
      const int c1 = cli::run(args, out1, err1);
      const int c2 = cli::run(args, out2, err2);
      o.require(c1 == c2 && out1.str() == out2.str() && !out1.str().empty(), "differs: " + args.front());
    }
    o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(commands.size()) + " commands";
    return o;
  });

  std::printf("acceptance: %d of 11 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
