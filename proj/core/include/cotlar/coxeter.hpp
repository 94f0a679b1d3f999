#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cotlar {

using Generator = std::uint8_t;
using Word = std::vector<Generator>;

/// Coxeter matrix entry. Finite orders are stored as-is; m = ∞ uses this sentinel.
inline constexpr std::uint32_t kInfiniteOrder = std::numeric_limits<std::uint32_t>::max();

/// Maximum rank supported by GeneratorSet.
inline constexpr std::size_t kMaxRank = 64;

/// Set of generator indices, stored as a 64-bit mask.
class GeneratorSet {
 public:
  GeneratorSet() = default;
  GeneratorSet(std::initializer_list<Generator> members);

  static GeneratorSet from_mask(std::uint64_t mask) {
    GeneratorSet set;
    set.bits_ = mask;
    return set;
  }

  bool contains(Generator s) const noexcept { return (bits_ >> s) & 1U; }
  void insert(Generator s) noexcept { bits_ |= std::uint64_t{1} << s; }
  void erase(Generator s) noexcept { bits_ &= ~(std::uint64_t{1} << s); }
  bool empty() const noexcept { return bits_ == 0; }
  std::size_t size() const noexcept;
  bool is_subset_of(GeneratorSet other) const noexcept { return (bits_ & ~other.bits_) == 0; }
  std::uint64_t mask() const noexcept { return bits_; }
  std::vector<Generator> members() const;

  friend bool operator==(GeneratorSet, GeneratorSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Group element of a Coxeter system, identified by its ShortLex-least reduced
/// word. Two CanonicalElements of the same system are equal as group elements
/// iff their words are identical. Only CoxeterSystem can mint non-identity
/// values, so every instance satisfies the canonical-form invariant.
class CanonicalElement {
 public:
  CanonicalElement() = default;

  const Word& word() const noexcept { return word_; }
  std::size_t length() const noexcept { return word_.size(); }
  bool is_identity() const noexcept { return word_.empty(); }

  friend bool operator==(const CanonicalElement&, const CanonicalElement&) = default;
  /// ShortLex order: shorter words first, then lexicographic by generator index.
  friend std::strong_ordering operator<=>(const CanonicalElement& a, const CanonicalElement& b);

 private:
  friend class CoxeterSystem;
  explicit CanonicalElement(Word word) : word_(std::move(word)) {}

  Word word_;
};

bool shortlex_less(const Word& a, const Word& b);

struct DescentInfo {
  GeneratorSet left;
  GeneratorSet right;

  friend bool operator==(const DescentInfo&, const DescentInfo&) = default;
};

enum class WordProblemStrategy {
  Auto,         // right-angled shuffle, then integer root action, then closure
  Closure,      // exhaustive M-operation closure (reference path)
  RightAngled,  // syllable shuffling; only valid when every m_st is 2 or ∞
  RootSystem,   // integer root action; only valid when every m_st is in {2,3,4,6,∞}
};

/// A finitely generated Coxeter system (W, S) with a validated Coxeter matrix.
///
/// Values are immutable after construction and every member function is a
/// pure function of its arguments, so a system may be shared freely between
/// threads.
class CoxeterSystem {
 public:
  using Element = CanonicalElement;

  static constexpr std::size_t kDefaultMaxWordLen = 16;

  /// Checks the Coxeter-matrix axioms and builds the system.
  /// Errors: NonSymmetric, BadDiagonal, OffDiagonalOne, DuplicateName,
  /// InvalidDescriptor (non-square, zero entry, rank > 64).
  static CoxeterSystem validate(std::vector<std::string> names,
                                const std::vector<std::vector<std::uint32_t>>& matrix,
                                std::size_t max_word_len = kDefaultMaxWordLen);

  std::size_t rank() const noexcept { return names_.size(); }
  const std::vector<std::string>& generators() const noexcept { return names_; }
  const std::string& name(Generator s) const { return names_.at(s); }
  std::uint32_t order(Generator a, Generator b) const { return matrix_[a * rank() + b]; }
  std::size_t max_word_len() const noexcept { return max_word_len_; }
  CoxeterSystem with_max_word_len(std::size_t cap) const;

  bool is_right_angled() const noexcept { return right_angled_; }
  bool is_crystallographic() const noexcept { return !cartan_.empty(); }
  /// Integer generalized Cartan matrix (row-major) realizing the system, empty
  /// unless is_crystallographic().
  std::span<const std::int64_t> cartan() const noexcept { return cartan_; }

  std::optional<Generator> find(std::string_view name) const;
  /// Throws InvalidGenerator for unknown names.
  Generator generator(std::string_view name) const;
  Word parse_word(const std::vector<std::string>& names) const;

  /// T_s = {t : m_st = 2}.
  GeneratorSet commuting_set(Generator s) const;

  CanonicalElement identity() const { return {}; }
  CanonicalElement generator_element(Generator s) const;

  /// Canonical representative of the element spelled by `word`.
  /// Throws WordTooLong when word.size() > max_word_len().
  CanonicalElement reduce(const Word& word,
                          WordProblemStrategy strategy = WordProblemStrategy::Auto) const;
  CanonicalElement multiply(const CanonicalElement& a, const CanonicalElement& b) const;
  CanonicalElement invert(const CanonicalElement& a) const;
  std::size_t length(const CanonicalElement& a) const noexcept { return a.length(); }

  bool is_left_descent(Generator s, const CanonicalElement& a) const;
  bool is_right_descent(const CanonicalElement& a, Generator s) const;
  DescentInfo descents(const CanonicalElement& a) const;

  /// a ∈ W_T, decided by the support of the canonical word.
  bool in_parabolic(GeneratorSet subset, const CanonicalElement& a) const;

  /// {w : l(w) ≤ radius} in ShortLex order.
  std::vector<CanonicalElement> ball(std::size_t radius) const;

  std::string label(const CanonicalElement& a) const;

  /// Wraps an already-canonical word without re-reducing it. Intended for
  /// the word-problem implementations; misuse breaks element identity.
  CanonicalElement adopt_canonical(Word word) const { return CanonicalElement(std::move(word)); }

 private:
  CoxeterSystem() = default;
  void check_word(const Word& word) const;

  std::vector<std::string> names_;
  std::vector<std::uint32_t> matrix_;
  std::vector<std::int64_t> cartan_;
  std::size_t max_word_len_ = kDefaultMaxWordLen;
  bool right_angled_ = false;
};

}  // namespace cotlar

template <>
struct std::hash<cotlar::CanonicalElement> {
  std::size_t operator()(const cotlar::CanonicalElement& e) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto g : e.word()) {
      h ^= g + 1;
      h *= 1099511628211ULL;
    }
    return h;
  }
};
