#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cotlar/coxeter.hpp"
#include "cotlar/multipliers.hpp"

namespace cotlar {

/// Point (a, b) of ℤ², standing for αᵃβᵇ.
struct LatticePoint {
  std::int64_t a = 0;
  std::int64_t b = 0;

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
  /// Ordered by max(|a|, |b|), then (a, b).
  friend std::strong_ordering operator<=>(const LatticePoint& p, const LatticePoint& q);
};

/// ℤ² written additively, with the box balls {|a|, |b| ≤ R}.
class LatticeZ2 {
 public:
  using Element = LatticePoint;

  LatticePoint identity() const { return {}; }
  LatticePoint multiply(const LatticePoint& p, const LatticePoint& q) const { return {p.a + q.a, p.b + q.b}; }
  LatticePoint invert(const LatticePoint& p) const { return {-p.a, -p.b}; }
  std::vector<LatticePoint> ball(std::size_t radius) const;
  std::string label(const LatticePoint& p) const;
};

/// The diagonal ⟨αβ⟩ = {(k, k)}.
SubgroupMembership<LatticePoint> diagonal_membership();

/// The translation subgroup W₀ = ⟨α, β⟩ ≅ ℤ² of Ã₂ with α = usts, β = sust,
/// together with the six coset representatives of Ã₂ / W₀.
class A2TildeSubgroup {
 public:
  static constexpr std::size_t kDefaultAbBound = 9;
  static constexpr std::size_t kDiscoveryRadius = 5;

  /// Requires the Ã₂ matrix (rank 3, every off-diagonal entry 3); generators
  /// are taken in declaration order as s, t, u. Coset representatives are the
  /// ShortLex-least elements of each coset met while scanning `scan_order`
  /// (ball(5) when empty), so the result does not depend on scan order.
  /// Errors: WrongSystem, RepDiscoveryFailed.
  static A2TildeSubgroup build(const CoxeterSystem& system, std::size_t ab_bound = kDefaultAbBound,
                               std::span<const CanonicalElement> scan_order = {});

  /// The system used internally; its word cap is raised to fit the lattice table.
  const CoxeterSystem& system() const;
  const CanonicalElement& alpha() const;
  const CanonicalElement& beta() const;
  const std::vector<CanonicalElement>& coset_reps() const;
  std::size_t ab_bound() const;

  /// Canonical form of αᵃβᵇ. Throws WordTooLong past the internal cap.
  CanonicalElement power(std::int64_t a, std::int64_t b) const;

  /// (a, b) with αᵃβᵇ = g, searched over |a|, |b| ≤ l(g).
  std::optional<LatticePoint> z2_membership(const CanonicalElement& g) const;

  struct Factorization {
    std::size_t rep = 0;
    LatticePoint h;
  };
  /// g = coset_reps()[rep] · αᵃβᵇ. Throws DecompositionFailed.
  Factorization decompose(const CanonicalElement& g) const;

  /// m(g) = m_{W₀}^s(h) for g = w_i·h, with the inner value read from the
  /// side of H_s containing hK.
  Symbol<CanonicalElement> extension_symbol(Generator s) const;
  /// The inner symbol on ℤ²: (a, b) ↦ ±1 by the side of H_s containing αᵃβᵇK.
  Symbol<LatticePoint> lattice_symbol(Generator s) const;

 private:
  struct Data;
  explicit A2TildeSubgroup(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  std::shared_ptr<const Data> data_;
};

}  // namespace cotlar
