#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "cotlar/coxeter.hpp"

// Chamber-level geometry of the wall H_s: every chamber is a group element g
// (the chamber gK), and its side of H_s is read off from lengths.
namespace cotlar {

enum class HalfSpaceSide { Positive, Negative };

inline HalfSpaceSide opposite(HalfSpaceSide side) {
  return side == HalfSpaceSide::Positive ? HalfSpaceSide::Negative : HalfSpaceSide::Positive;
}

/// Root relations of g·H_s^± against H_s^±.
enum class SixClass {
  InWT,      // g·H⁺ = H⁺
  InWTs,     // g·H⁺ = H⁻
  NsTimesS,  // g·H⁺ ⊊ H⁺
  SNsS,      // g·H⁺ ⊊ H⁻
  InNs,      // g·H⁻ ⊊ H⁺
  SNs,       // g·H⁻ ⊊ H⁻
};

inline constexpr std::array<SixClass, 6> kAllSixClasses{
    SixClass::InWT, SixClass::InWTs, SixClass::NsTimesS, SixClass::SNsS, SixClass::InNs, SixClass::SNs};

std::string_view to_string(HalfSpaceSide side);
std::string_view to_string(SixClass c);
/// Human-readable relation, e.g. "g·H+ ⊊ H-".
std::string_view relation_text(SixClass c);

/// The class describing the strict inclusion g·H^x ⊊ H^y.
SixClass strict_class(HalfSpaceSide x, HalfSpaceSide y);
/// True iff class c asserts g·H^x ⊊ H^y.
bool asserts_strict(SixClass c, HalfSpaceSide x, HalfSpaceSide y);
/// Class of g⁻¹ given the class of g.
SixClass inverse_class(SixClass c);

/// Positive iff s is not a left descent of g.
HalfSpaceSide halfspace_side(const CoxeterSystem& system, Generator s, const CanonicalElement& g);

/// Every m_su (u ≠ s) lies in {2, ∞}.
bool nested_condition(const CoxeterSystem& system, Generator s);
/// The pairs (u, m_su) that break the nested condition, in generator order.
std::vector<std::pair<Generator, std::uint32_t>> nested_offenders(const CoxeterSystem& system,
                                                                  Generator s);

/// Throws NestedConditionViolated unless nested_condition(system, s).
SixClass classify(const CoxeterSystem& system, Generator s, const CanonicalElement& g);

/// Finite certificate for the relation between g·H_s and H_s.
struct InclusionWitness {
  /// Relation consistent with every scanned chamber; nullopt when all six
  /// are refuted.
  std::optional<SixClass> relation;
  std::size_t verified_radius = 0;
  /// First scanned chamber hK in H^x ∩ g·H^y, indexed by
  /// 2·[x = Negative] + [y = Negative]; nullopt if none was seen.
  std::array<std::optional<CanonicalElement>, 4> intersections;

  bool refuted() const { return !relation.has_value(); }
};

/// Brute-force comparison of g·H_s^± and H_s^± over the chambers of
/// ball(radius) followed by g·ball(radius), so both walls are seen to depth radius.
/// Throws WordTooLong unless radius + l(g) + 1 ≤ max_word_len.
InclusionWitness root_relation_check(const CoxeterSystem& system, Generator s,
                                     const CanonicalElement& g, std::size_t radius);

struct StabilizerResult {
  bool stabilizes = false;
  /// Set when the answer comes from a ball scan instead of the classification.
  std::optional<std::size_t> certified_radius;
};

/// Whether g·H_s⁺ = H_s⁺. Exact under the nested condition; otherwise a
/// radius-bounded certificate over ball(fallback_radius).
StabilizerResult stabilizer_test(const CoxeterSystem& system, Generator s, const CanonicalElement& g,
                                 std::size_t fallback_radius = 4);

}  // namespace cotlar
