#include "cotlar/coxeter.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <unordered_set>

#include "cotlar/error.hpp"
#include "cotlar/word_problem.hpp"

namespace cotlar {

GeneratorSet::GeneratorSet(std::initializer_list<Generator> members) {
  for (auto s : members) insert(s);
}

std::size_t GeneratorSet::size() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }

std::vector<Generator> GeneratorSet::members() const {
  std::vector<Generator> out;
  for (std::size_t i = 0; i < kMaxRank; ++i) {
    if (contains(static_cast<Generator>(i))) out.push_back(static_cast<Generator>(i));
  }
  return out;
}

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::strong_ordering operator<=>(const CanonicalElement& a, const CanonicalElement& b) {
  if (auto c = a.word_.size() <=> b.word_.size(); c != 0) return c;
  return a.word_ <=> b.word_;
}

namespace {

// Generalized Cartan matrix entries (a_ij, a_ji) realizing m_ij, or nullopt
// when m_ij is not crystallographic.
std::optional<std::pair<std::int64_t, std::int64_t>> cartan_pair(std::uint32_t m) {
  switch (m) {
    case 2: return std::pair<std::int64_t, std::int64_t>{0, 0};
    case 3: return std::pair<std::int64_t, std::int64_t>{-1, -1};
    case 4: return std::pair<std::int64_t, std::int64_t>{-1, -2};
    case 6: return std::pair<std::int64_t, std::int64_t>{-1, -3};
    case kInfiniteOrder: return std::pair<std::int64_t, std::int64_t>{-2, -2};
    default: return std::nullopt;
  }
}

}  // namespace

CoxeterSystem CoxeterSystem::validate(std::vector<std::string> names,
                                      const std::vector<std::vector<std::uint32_t>>& matrix,
                                      std::size_t max_word_len) {
  const std::size_t n = names.size();
  if (n == 0) throw Error(ErrorCode::InvalidDescriptor, "at least one generator is required");
  if (n > kMaxRank) throw Error(ErrorCode::InvalidDescriptor, "rank exceeds 64");
  if (max_word_len == 0) throw Error(ErrorCode::InvalidDescriptor, "max_word_len must be positive");
  if (matrix.size() != n) throw Error(ErrorCode::InvalidDescriptor, "matrix must be n x n");
  for (const auto& row : matrix) {
    if (row.size() != n) throw Error(ErrorCode::InvalidDescriptor, "matrix must be n x n");
  }
  {
    std::set<std::string> seen;
    for (const auto& name : names) {
      if (name.empty()) throw Error(ErrorCode::InvalidDescriptor, "empty generator name");
      if (!seen.insert(name).second) throw Error(ErrorCode::DuplicateName, name);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto m = matrix[i][j];
      const auto where = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
      if (m == 0) throw Error(ErrorCode::InvalidDescriptor, "zero entry at " + where);
      if (i == j && m != 1) throw Error(ErrorCode::BadDiagonal, "entry " + where + " must be 1");
      if (i != j && matrix[j][i] != m) throw Error(ErrorCode::NonSymmetric, "entry " + where);
      if (i != j && m == 1) throw Error(ErrorCode::OffDiagonalOne, "entry " + where);
    }
  }

  CoxeterSystem system;
  system.names_ = std::move(names);
  system.max_word_len_ = max_word_len;
  system.matrix_.reserve(n * n);
  system.right_angled_ = true;
  bool crystallographic = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto m = matrix[i][j];
      system.matrix_.push_back(m);
      if (i != j && m != 2 && m != kInfiniteOrder) system.right_angled_ = false;
      if (i != j && !cartan_pair(m)) crystallographic = false;
    }
  }
  if (crystallographic) {
    system.cartan_.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      system.cartan_[i * n + i] = 2;
      for (std::size_t j = i + 1; j < n; ++j) {
        const auto [a_ij, a_ji] = *cartan_pair(matrix[i][j]);
        system.cartan_[i * n + j] = a_ij;
        system.cartan_[j * n + i] = a_ji;
      }
    }
  }
  return system;
}

CoxeterSystem CoxeterSystem::with_max_word_len(std::size_t cap) const {
  if (cap == 0) throw Error(ErrorCode::InvalidDescriptor, "max_word_len must be positive");
  CoxeterSystem copy = *this;
  copy.max_word_len_ = cap;
  return copy;
}

std::optional<Generator> CoxeterSystem::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<Generator>(i);
  }
  return std::nullopt;
}

Generator CoxeterSystem::generator(std::string_view name) const {
  if (auto s = find(name)) return *s;
  throw Error(ErrorCode::InvalidGenerator, "unknown generator '" + std::string(name) + "'");
}

Word CoxeterSystem::parse_word(const std::vector<std::string>& names) const {
  Word word;
  word.reserve(names.size());
  for (const auto& n : names) word.push_back(generator(n));
  return word;
}

GeneratorSet CoxeterSystem::commuting_set(Generator s) const {
  GeneratorSet out;
  for (std::size_t t = 0; t < rank(); ++t) {
    if (t != s && order(s, static_cast<Generator>(t)) == 2) out.insert(static_cast<Generator>(t));
  }
  return out;
}

CanonicalElement CoxeterSystem::generator_element(Generator s) const {
  if (s >= rank()) throw Error(ErrorCode::InvalidGenerator, "index " + std::to_string(s));
  return CanonicalElement(Word{s});
}

void CoxeterSystem::check_word(const Word& word) const {
  if (word.size() > max_word_len_) throw WordTooLong(word.size(), max_word_len_);
  for (auto s : word) {
    if (s >= rank()) throw Error(ErrorCode::InvalidGenerator, "index " + std::to_string(s));
  }
}

CanonicalElement CoxeterSystem::reduce(const Word& word, WordProblemStrategy strategy) const {
  check_word(word);
  switch (strategy) {
    case WordProblemStrategy::Closure:
      return CanonicalElement(word_problem::closure_reduce(*this, word));
    case WordProblemStrategy::RightAngled:
      if (!right_angled_) throw Error(ErrorCode::WrongSystem, "system is not right-angled");
      return CanonicalElement(word_problem::right_angled_reduce(*this, word));
    case WordProblemStrategy::RootSystem: {
      if (!is_crystallographic()) throw Error(ErrorCode::WrongSystem, "system is not crystallographic");
      if (auto w = word_problem::root_system_reduce(*this, word)) return CanonicalElement(std::move(*w));
      return CanonicalElement(word_problem::closure_reduce(*this, word));
    }
    case WordProblemStrategy::Auto:
      break;
  }
  if (right_angled_) return CanonicalElement(word_problem::right_angled_reduce(*this, word));
  if (is_crystallographic()) {
    if (auto w = word_problem::root_system_reduce(*this, word)) return CanonicalElement(std::move(*w));
  }
  return CanonicalElement(word_problem::closure_reduce(*this, word));
}

CanonicalElement CoxeterSystem::multiply(const CanonicalElement& a, const CanonicalElement& b) const {
  if (a.is_identity()) return b;
  if (b.is_identity()) return a;
  const std::size_t total = a.length() + b.length();
  if (total > max_word_len_) throw WordTooLong(total, max_word_len_);
  Word w;
  w.reserve(total);
  w.insert(w.end(), a.word().begin(), a.word().end());
  w.insert(w.end(), b.word().begin(), b.word().end());
  return reduce(w);
}

CanonicalElement CoxeterSystem::invert(const CanonicalElement& a) const {
  Word w(a.word().rbegin(), a.word().rend());
  return reduce(w);
}

bool CoxeterSystem::is_left_descent(Generator s, const CanonicalElement& a) const {
  if (a.is_identity()) return false;
  if (a.word().front() == s) return true;
  if (a.length() + 1 > max_word_len_) throw WordTooLong(a.length() + 1, max_word_len_);
  Word w;
  w.reserve(a.length() + 1);
  w.push_back(s);
  w.insert(w.end(), a.word().begin(), a.word().end());
  return reduce(w).length() < a.length();
}

bool CoxeterSystem::is_right_descent(const CanonicalElement& a, Generator s) const {
  if (a.is_identity()) return false;
  if (a.word().back() == s) return true;
  if (a.length() + 1 > max_word_len_) throw WordTooLong(a.length() + 1, max_word_len_);
  Word w = a.word();
  w.push_back(s);
  return reduce(w).length() < a.length();
}

DescentInfo CoxeterSystem::descents(const CanonicalElement& a) const {
  DescentInfo info;
  for (std::size_t i = 0; i < rank(); ++i) {
    const auto s = static_cast<Generator>(i);
    if (is_left_descent(s, a)) info.left.insert(s);
    if (is_right_descent(a, s)) info.right.insert(s);
  }
  return info;
}

bool CoxeterSystem::in_parabolic(GeneratorSet subset, const CanonicalElement& a) const {
  return std::all_of(a.word().begin(), a.word().end(), [&](Generator s) { return subset.contains(s); });
}

std::vector<CanonicalElement> CoxeterSystem::ball(std::size_t radius) const {
  if (radius > max_word_len_) throw WordTooLong(radius, max_word_len_);
  std::vector<CanonicalElement> out{identity()};
  std::vector<CanonicalElement> level{identity()};
  for (std::size_t r = 1; r <= radius && !level.empty(); ++r) {
    std::set<CanonicalElement> next;
    for (const auto& w : level) {
      for (std::size_t i = 0; i < rank(); ++i) {
        const auto s = static_cast<Generator>(i);
        if (!w.is_identity() && w.word().back() == s) continue;
        Word candidate = w.word();
        candidate.push_back(s);
        auto reduced = reduce(candidate);
        if (reduced.length() == r) next.insert(std::move(reduced));
      }
    }
    level.assign(next.begin(), next.end());
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::string CoxeterSystem::label(const CanonicalElement& a) const {
  if (a.is_identity()) return "e";
  const bool compact = std::all_of(names_.begin(), names_.end(), [](const auto& n) { return n.size() == 1; });
  std::string out;
  for (std::size_t i = 0; i < a.length(); ++i) {
    if (!compact && i > 0) out += ' ';
    out += names_[a.word()[i]];
  }
  return out;
}

}  // namespace cotlar
