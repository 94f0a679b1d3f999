#pragma once

#include <array>
#include <concepts>
#include <cstdint>
#include <string>
#include <vector>

#include "cotlar/coxeter.hpp"
#include "cotlar/error.hpp"
#include "cotlar/geometry.hpp"
#include "cotlar/graph_product.hpp"
#include "cotlar/multipliers.hpp"

// W-metric buildings at the chamber level. Apartments and retractions are
// never built: everything is phrased through the Weyl distance δ.
namespace cotlar {

template <class B>
concept Building = requires(const B& b, const typename B::Chamber& c, std::size_t radius, Generator s) {
  typename B::Chamber;
  { b.type_system() } -> std::convertible_to<const CoxeterSystem&>;
  { b.base_chamber() } -> std::convertible_to<typename B::Chamber>;
  { b.chambers(radius) } -> std::convertible_to<std::vector<typename B::Chamber>>;
  { b.weyl_distance(c, c) } -> std::convertible_to<CanonicalElement>;
  /// Chambers E ≠ C with δ(E, C) = s among chambers(radius).
  { b.panel(c, s, radius) } -> std::convertible_to<std::vector<typename B::Chamber>>;
  { b.label(c) } -> std::convertible_to<std::string>;
};

/// The standard thin building: chambers are W, δ(g, h) = g⁻¹h.
class ThinBuilding {
 public:
  using Chamber = CanonicalElement;

  explicit ThinBuilding(CoxeterSystem system) : system_(std::move(system)) {}

  const CoxeterSystem& type_system() const { return system_; }
  CanonicalElement base_chamber() const { return system_.identity(); }
  std::vector<CanonicalElement> chambers(std::size_t radius) const { return system_.ball(radius); }
  CanonicalElement weyl_distance(const CanonicalElement& c, const CanonicalElement& d) const {
    return system_.multiply(system_.invert(c), d);
  }
  std::vector<CanonicalElement> panel(const CanonicalElement& c, Generator s, std::size_t radius) const;
  std::string label(const CanonicalElement& c) const { return system_.label(c); }

 private:
  CoxeterSystem system_;
};

/// The building of a graph product: chambers are group elements, δ(g, g′) is
/// the vertex word of g⁻¹g′ read in W_Γ.
class GraphProductBuilding {
 public:
  using Chamber = GPElement;

  explicit GraphProductBuilding(GraphProduct group) : group_(std::move(group)) {}

  const GraphProduct& group() const { return group_; }
  const CoxeterSystem& type_system() const { return group_.type_system(); }
  GPElement base_chamber() const { return group_.identity(); }
  std::vector<GPElement> chambers(std::size_t radius) const { return group_.ball(radius); }
  CanonicalElement weyl_distance(const GPElement& c, const GPElement& d) const {
    return group_.type_system().reduce(group_.vertex_word(group_.multiply(group_.invert(c), d)));
  }
  std::vector<GPElement> panel(const GPElement& c, Generator s, std::size_t radius) const;
  std::string label(const GPElement& c) const { return group_.label(c); }

 private:
  GraphProduct group_;
};

/// A finite chamber set with an explicit δ table, used to exercise the axiom
/// checker on data that need not come from a group.
class TableBuilding {
 public:
  using Chamber = std::size_t;

  /// delta[i][j] is δ(chamber i, chamber j) as a word over the type system.
  /// Errors: InvalidDescriptor (shape), InvalidGenerator, WordTooLong.
  TableBuilding(CoxeterSystem type, std::vector<std::string> names, const std::vector<std::vector<Word>>& delta);

  const CoxeterSystem& type_system() const { return type_; }
  std::size_t base_chamber() const { return 0; }
  /// Every chamber, whatever the radius.
  std::vector<std::size_t> chambers(std::size_t radius) const;
  CanonicalElement weyl_distance(std::size_t c, std::size_t d) const { return delta_[c * names_.size() + d]; }
  std::vector<std::size_t> panel(std::size_t c, Generator s, std::size_t radius) const;
  std::string label(std::size_t c) const { return names_.at(c); }

 private:
  CoxeterSystem type_;
  std::vector<std::string> names_;
  std::vector<CanonicalElement> delta_;
};

struct AxiomFailure {
  std::string axiom;  // "B1", "inverse", "B2", "B3"
  std::vector<std::string> chambers;
  std::string detail;
};

struct AxiomReport {
  std::size_t pair_radius = 0;
  std::size_t triple_radius = 0;
  std::uint64_t pairs_checked = 0;
  std::uint64_t triples_checked = 0;
  std::uint64_t b3_checked = 0;
  std::vector<AxiomFailure> failures;

  bool passed() const { return failures.empty(); }
};

/// B1 and δ(C,D) = δ(D,C)⁻¹ on pairs of chambers(pair_radius); B2 (both
/// parts) on triples (E, C, D) of chambers(triple_radius) with δ(E, C) ∈ S;
/// B3 for every pair of chambers(pair_radius) and every s, searching the
/// s-panel of C inside chambers(pair_radius + 1).
template <Building B>
AxiomReport check_axioms(const B& building, std::size_t pair_radius, std::size_t triple_radius) {
  const auto& type = building.type_system();
  AxiomReport report;
  report.pair_radius = pair_radius;
  report.triple_radius = triple_radius;
  auto fail = [&](std::string axiom, std::vector<std::string> chambers, std::string detail) {
    report.failures.push_back({std::move(axiom), std::move(chambers), std::move(detail)});
  };

  const auto pair_ball = building.chambers(pair_radius);
  for (const auto& c : pair_ball) {
    for (const auto& d : pair_ball) {
      ++report.pairs_checked;
      const auto w = building.weyl_distance(c, d);
      if (w.is_identity() != (c == d)) {
        fail("B1", {building.label(c), building.label(d)}, "delta = " + type.label(w));
      }
      const auto back = building.weyl_distance(d, c);
      if (!(type.invert(back) == w)) {
        fail("inverse", {building.label(c), building.label(d)},
             "delta(C,D) = " + type.label(w) + ", delta(D,C) = " + type.label(back));
      }
      for (std::size_t i = 0; i < type.rank(); ++i) {
        const auto s = static_cast<Generator>(i);
        ++report.b3_checked;
        const auto target = type.multiply(type.generator_element(s), w);
        bool found = false;
        for (const auto& e : building.panel(c, s, pair_radius + 1)) {
          if (building.weyl_distance(e, d) == target) {
            found = true;
            break;
          }
        }
        if (!found) {
          fail("B3", {building.label(c), building.label(d)},
               "no E with delta(E,C) = " + type.name(s) + " and delta(E,D) = " + type.label(target));
        }
      }
    }
  }

  const auto triple_ball = building.chambers(triple_radius);
  const std::size_t n = triple_ball.size();
  std::vector<CanonicalElement> delta(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) delta[i * n + j] = building.weyl_distance(triple_ball[i], triple_ball[j]);
  }
  for (std::size_t e = 0; e < n; ++e) {
    for (std::size_t c = 0; c < n; ++c) {
      const auto& ec = delta[e * n + c];
      if (ec.length() != 1) continue;
      const auto s = type.generator_element(ec.word().front());
      for (std::size_t d = 0; d < n; ++d) {
        ++report.triples_checked;
        const auto& w = delta[c * n + d];
        const auto& ed = delta[e * n + d];
        const auto sw = type.multiply(s, w);
        const bool longer = sw.length() > w.length();
        if (!(ed == w || ed == sw) || (longer && !(ed == sw))) {
          fail("B2", {building.label(triple_ball[e]), building.label(triple_ball[c]), building.label(triple_ball[d])},
               "delta(E,C) = " + type.label(s) + ", delta(C,D) = " + type.label(w) + ", delta(E,D) = " +
                   type.label(ed));
        }
      }
    }
  }
  return report;
}

/// m(g) = −1 iff u is a left descent of δ(C₀, g·C₀); chambers double as
/// group elements acting by left multiplication. Throws
/// NestedConditionViolated unless the type system is nested relative to u.
template <Building B>
Symbol<typename B::Chamber> building_symbol(const B& building, Generator u) {
  const auto& type = building.type_system();
  if (!nested_condition(type, u)) {
    throw Error(ErrorCode::NestedConditionViolated, "type system is not nested relative to '" + type.name(u) + "'");
  }
  return {[building, u](const typename B::Chamber& g) {
            const auto w = building.weyl_distance(building.base_chamber(), g);
            return ExactComplex(building.type_system().is_left_descent(u, w) ? -1 : 1);
          },
          BuildingRule{type.name(u)}};
}

/// G₀ = {g : δ(C₀, g·C₀) ∈ W_{T_u}}.
template <Building B>
SubgroupMembership<typename B::Chamber> theorem_c_membership(const B& building, Generator u) {
  const auto& type = building.type_system();
  const auto tu = type.commuting_set(u);
  std::string names;
  for (auto t : tu.members()) names += (names.empty() ? "" : ",") + type.name(t);
  return {[building, tu](const typename B::Chamber& g) {
            return building.type_system().in_parabolic(tu, building.weyl_distance(building.base_chamber(), g));
          },
          "delta-parabolic{" + names + "}"};
}

/// verify_cotlar with building_symbol(u) and theorem_c_membership(u).
CotlarReport<GPElement> verify_theorem_c(const GraphProduct& group, Generator u, std::size_t radius);

/// m′(g) = −1 iff some shuffle of g's syllables starts with a u-syllable,
/// found by exhaustive search over adjacent commuting swaps. Independent of
/// the normal form and of descents in W_Γ.
ExactComplex amalgam_symbol_value(const GraphProduct& group, const GPElement& g, Generator u);

struct TransitivityFailure {
  std::string statement;  // "i", "ii", "iii", "iv"
  std::array<std::string, 3> chambers;  // C, D, E
  std::array<SixClass, 3> classes;      // w = δ(D,C), w₁ = δ(D,E), w₂ = δ(C,E)
  std::string detail;
};

struct TransitivityReport {
  std::size_t radius = 0;
  std::uint64_t triples_checked = 0;
  /// Times each of (i)–(iv) had its hypotheses met.
  std::array<std::uint64_t, 4> fired{};
  std::vector<TransitivityFailure> failures;

  bool passed() const { return failures.empty(); }
};

/// Checks, for the classes of w = δ(D,C), w₁ = δ(D,E), w₂ = δ(C,E) and all
/// signs †, †′, σ:
///   (i)   w·H^† ⊊ H⁺ and H⁺ ⊊ w₁·H^†′  ⇒  H^† ⊊ w₂·H^†′
///   (ii)  w·H^† ⊊ H⁻ and H⁻ ⊊ w₁·H^†′  ⇒  H^† ⊊ w₂·H^†′
///   (iii) w·H⁺ = H⁻ and H⁻ ⊊ w₁·H^σ    ⇒  H⁺ ⊊ w₂·H^σ
///   (iv)  w·H^σ ⊊ H⁺ and H⁺ = w₁·H⁻    ⇒  H^σ ⊊ w₂·H⁻
/// where H ⊊ v·H′ is read as v·(H′)ᶜ ⊊ Hᶜ. Appends failures to `report`.
void check_transitivity_triple(const CoxeterSystem& type, const CanonicalElement& w,
                                             const CanonicalElement& w1, const CanonicalElement& w2, Generator u,
                                             TransitivityReport& report);

template <Building B>
TransitivityReport transitivity_table_check(const B& building, Generator u, std::size_t radius) {
  const auto& type = building.type_system();
  if (!nested_condition(type, u)) {
    throw Error(ErrorCode::NestedConditionViolated, "type system is not nested relative to '" + type.name(u) + "'");
  }
  TransitivityReport report;
  report.radius = radius;
  const auto ball = building.chambers(radius);
  const std::size_t n = ball.size();
  std::vector<CanonicalElement> delta(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) delta[i * n + j] = building.weyl_distance(ball[i], ball[j]);
  }
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t d = 0; d < n; ++d) {
      for (std::size_t e = 0; e < n; ++e) {
        const auto before = report.failures.size();
        check_transitivity_triple(type, delta[d * n + c], delta[d * n + e], delta[c * n + e], u, report);
        for (auto i = before; i < report.failures.size(); ++i) {
          report.failures[i].chambers = {building.label(ball[c]), building.label(ball[d]), building.label(ball[e])};
        }
      }
    }
  }
  return report;
}

enum class FinerSubgroup {
  RootStabilizer,  // δ(C₀, gC₀) ∈ W_{T_u}
  WallStabilizer,  // δ(C₀, gC₀) ∈ W_{T_u ∪ {u}}
};

struct FinerConstraintViolation {
  std::string g;
  std::int64_t component = 0;  // i: the representative u^i·C₀
  std::int64_t image = 0;      // component of g·u^i·C₀
};

struct FinerConstraintReport {
  std::size_t radius = 0;
  std::uint64_t elements_checked = 0;
  std::vector<FinerConstraintViolation> violations;

  bool passed() const { return violations.empty(); }
};

struct FinerModel {
  Generator u = 0;
  std::vector<ExactComplex> values;
  Symbol<GPElement> symbol;
  SubgroupMembership<GPElement> g0;
  FinerConstraintReport constraints;

  /// Throws ConstraintViolated if the orbit audit failed.
  void require_consistent() const;
};

/// Component of g·C₀ in the complement of the wall: the exponent of the
/// frontable u-syllable of g, or 0.
std::int64_t finer_component(const GraphProduct& group, const GPElement& g, Generator u);

/// Multi-valued symbol m(g) = values[component(g)], with the G₀-orbit audit
/// over ball(radius) ∩ G₀. Errors: InvalidDescriptor (u of infinite order or
/// wrong number of values).
FinerModel finer_symbol(const GraphProduct& group, Generator u, std::vector<ExactComplex> values, std::size_t radius,
                        FinerSubgroup subgroup = FinerSubgroup::RootStabilizer);
/// As above with an arbitrary G₀; the audit runs over ball(radius) ∩ G₀.
FinerModel finer_symbol(const GraphProduct& group, Generator u, std::vector<ExactComplex> values, std::size_t radius,
                        SubgroupMembership<GPElement> g0);
/// G₀ = {g : δ(C₀, g·C₀) ∈ W_T}.
SubgroupMembership<GPElement> delta_parabolic_membership(const GraphProduct& group, GeneratorSet subset);

}  // namespace cotlar
