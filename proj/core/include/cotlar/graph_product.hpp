#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cotlar/coxeter.hpp"

namespace cotlar {

/// Order of a ℤ vertex group.
inline constexpr std::uint32_t kInfiniteCyclic = 0;

struct Syllable {
  Generator vertex = 0;
  /// Residue in [1, n) for ℤ_n, nonzero integer for ℤ.
  std::int64_t exponent = 0;

  friend bool operator==(const Syllable&, const Syllable&) = default;
  friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

/// Element of a graph product, stored as its Cartier–Foata syllable normal
/// form: reduced, and among all shuffles of the reduced expression the one
/// obtained by always emitting the frontable syllable of smallest vertex index.
class GPElement {
 public:
  GPElement() = default;

  const std::vector<Syllable>& syllables() const noexcept { return syllables_; }
  std::size_t size() const noexcept { return syllables_.size(); }
  bool is_identity() const noexcept { return syllables_.empty(); }
  /// Word length: 1 per finite-group syllable, |k| per ℤ syllable k.
  std::size_t weight() const noexcept { return weight_; }

  friend bool operator==(const GPElement& a, const GPElement& b) { return a.syllables_ == b.syllables_; }
  /// By weight, then syllable count, then syllables lexicographically.
  friend std::strong_ordering operator<=>(const GPElement& a, const GPElement& b);

 private:
  friend class GraphProduct;
  GPElement(std::vector<Syllable> syllables, std::size_t weight)
      : syllables_(std::move(syllables)), weight_(weight) {}

  std::vector<Syllable> syllables_;
  std::size_t weight_ = 0;
};

/// Graph product of cyclic groups over a simplicial graph.
class GraphProduct {
 public:
  using Element = GPElement;

  struct Vertex {
    std::string name;
    std::uint32_t order = 2;  // kInfiniteCyclic for ℤ
  };

  /// Errors: DuplicateName, InvalidDescriptor (order 1, loops, unknown
  /// endpoints, more than 64 vertices).
  static GraphProduct validate(std::vector<Vertex> vertices,
                               const std::vector<std::pair<std::string, std::string>>& edges);

  std::size_t rank() const noexcept { return vertices_.size(); }
  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  const std::string& name(Generator v) const { return vertices_.at(v).name; }
  std::uint32_t order(Generator v) const { return vertices_.at(v).order; }
  bool adjacent(Generator a, Generator b) const { return type_.order(a, b) == 2; }
  const std::vector<std::pair<Generator, Generator>>& edges() const noexcept { return edges_; }

  std::optional<Generator> find(std::string_view name) const;
  /// Throws InvalidGenerator.
  Generator vertex(std::string_view name) const;

  /// Right-angled Coxeter system W_Γ: m = 2 on edges, ∞ otherwise.
  const CoxeterSystem& type_system() const noexcept { return type_; }

  /// Throws InvalidGenerator for bad vertex indices.
  GPElement normalize(const std::vector<Syllable>& raw) const;
  GPElement identity() const { return {}; }
  GPElement syllable(Generator v, std::int64_t exponent) const { return normalize({{v, exponent}}); }
  GPElement multiply(const GPElement& a, const GPElement& b) const;
  GPElement invert(const GPElement& a) const;
  /// Elements of word length ≤ radius, in element order.
  std::vector<GPElement> ball(std::size_t radius) const;
  std::string label(const GPElement& a) const;

  /// Vertex indices of the syllables of a.
  Word vertex_word(const GPElement& a) const;
  /// Exponent of the u-syllable that can be shuffled to the front, if any.
  std::optional<std::int64_t> leading_exponent(const GPElement& a, Generator u) const;

 private:
  GraphProduct() = default;
  std::size_t syllable_weight(const Syllable& s) const;
  std::int64_t reduce_exponent(Generator v, std::int64_t e) const;

  std::vector<Vertex> vertices_;
  std::vector<std::pair<Generator, Generator>> edges_;
  CoxeterSystem type_ = CoxeterSystem::validate({"_"}, {{1}});
};

}  // namespace cotlar

template <>
struct std::hash<cotlar::GPElement> {
  std::size_t operator()(const cotlar::GPElement& e) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (const auto& s : e.syllables()) {
      h ^= s.vertex + 1;
      h *= 1099511628211ULL;
      h ^= static_cast<std::size_t>(s.exponent);
      h *= 1099511628211ULL;
    }
    return h;
  }
};
