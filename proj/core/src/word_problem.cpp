#include "cotlar/word_problem.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace cotlar::word_problem {

namespace {

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto g : w) {
      h ^= g + 1;
      h *= 1099511628211ULL;
    }
    return h;
  }
};

std::size_t adjacent_repeat(const Word& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] == w[i + 1]) return i;
  }
  return w.size();
}

// Calls emit(next) for every word obtained from `w` by one braid move.
template <class Emit>
void for_each_braid_move(const CoxeterSystem& system, const Word& w, Emit&& emit) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    const Generator a = w[i];
    const Generator b = w[i + 1];
    if (a == b) continue;
    const std::uint32_t m = system.order(a, b);
    if (m == kInfiniteOrder || i + m > w.size()) continue;
    bool alternating = true;
    for (std::uint32_t k = 2; k < m && alternating; ++k) {
      alternating = w[i + k] == (k % 2 == 0 ? a : b);
    }
    if (!alternating) continue;
    Word next = w;
    for (std::uint32_t k = 0; k < m; ++k) next[i + k] = (k % 2 == 0 ? b : a);
    emit(std::move(next));
  }
}

// One full M-closure: explore the braid class, restart after every deletion,
// and return the ShortLex-least word once the class is deletion-free.
Word close(const CoxeterSystem& system, Word current) {
  while (true) {
    std::unordered_set<Word, WordHash> seen{current};
    std::deque<Word> queue{current};
    Word best = current;
    bool deleted = false;
    while (!queue.empty()) {
      Word w = std::move(queue.front());
      queue.pop_front();
      if (auto i = adjacent_repeat(w); i < w.size()) {
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(i + 2));
        current = std::move(w);
        deleted = true;
        break;
      }
      if (shortlex_less(w, best)) best = w;
      for_each_braid_move(system, w, [&](Word next) {
        if (seen.insert(next).second) queue.push_back(std::move(next));
      });
    }
    if (!deleted) return best;
  }
}

}  // namespace

Word closure_reduce(const CoxeterSystem& system, const Word& word) {
  // Prefix by prefix: the closure of (reduced prefix)·s is small compared to
  // the closure of an arbitrary non-reduced input.
  Word current;
  current.reserve(word.size());
  for (auto s : word) {
    current.push_back(s);
    current = close(system, std::move(current));
  }
  return current;
}

std::vector<Word> braid_class(const CoxeterSystem& system, const Word& word) {
  std::unordered_set<Word, WordHash> seen{word};
  std::deque<Word> queue{word};
  std::vector<Word> out;
  while (!queue.empty()) {
    Word w = std::move(queue.front());
    queue.pop_front();
    for_each_braid_move(system, w, [&](Word next) {
      if (seen.insert(next).second) queue.push_back(std::move(next));
    });
    out.push_back(std::move(w));
  }
  std::sort(out.begin(), out.end(), shortlex_less);
  return out;
}

Word right_angled_reduce(const CoxeterSystem& system, const Word& word) {
  auto commute = [&](Generator a, Generator b) { return a != b && system.order(a, b) == 2; };

  Word reduced;
  reduced.reserve(word.size());
  for (auto x : word) {
    bool cancelled = false;
    for (std::size_t j = reduced.size(); j-- > 0;) {
      if (reduced[j] == x) {
        reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(j));
        cancelled = true;
        break;
      }
      if (!commute(reduced[j], x)) break;
    }
    if (!cancelled) reduced.push_back(x);
  }

  // Lexicographically least linearization of the commutation class.
  Word out;
  out.reserve(reduced.size());
  std::vector<bool> used(reduced.size(), false);
  for (std::size_t step = 0; step < reduced.size(); ++step) {
    std::size_t pick = reduced.size();
    for (std::size_t i = 0; i < reduced.size(); ++i) {
      if (used[i]) continue;
      bool frontable = true;
      for (std::size_t k = 0; k < i && frontable; ++k) {
        if (!used[k] && !commute(reduced[k], reduced[i])) frontable = false;
      }
      if (frontable && (pick == reduced.size() || reduced[i] < reduced[pick])) pick = i;
    }
    used[pick] = true;
    out.push_back(reduced[pick]);
  }
  return out;
}

namespace {

bool checked_mul_sub(std::int64_t& acc, std::int64_t coeff, std::int64_t value) {
  std::int64_t product = 0;
  if (__builtin_mul_overflow(coeff, value, &product)) return false;
  return !__builtin_sub_overflow(acc, product, &acc);
}

}  // namespace

std::optional<Word> root_system_reduce(const CoxeterSystem& system, const Word& word) {
  const std::size_t n = system.rank();
  const auto cartan = system.cartan();
  // inverse[r * n + c]: coordinate r of g^{-1}(alpha_c), where g is the element
  // still to be spelled out.
  std::vector<std::int64_t> inverse(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) inverse[i * n + i] = 1;

  // g^{-1} = x_k ... x_1, built by left-multiplying simple reflections.
  std::vector<std::int64_t> row(n);
  for (auto x : word) {
    for (std::size_t c = 0; c < n; ++c) {
      std::int64_t pairing = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (!checked_mul_sub(pairing, -cartan[x * n + j], inverse[j * n + c])) return std::nullopt;
      }
      row[c] = pairing;
    }
    for (std::size_t c = 0; c < n; ++c) {
      if (__builtin_sub_overflow(inverse[x * n + c], row[c], &inverse[x * n + c])) return std::nullopt;
    }
  }

  auto column_negative = [&](std::size_t c) {
    for (std::size_t r = 0; r < n; ++r) {
      const auto v = inverse[r * n + c];
      if (v != 0) return v < 0;
    }
    return false;
  };

  Word out;
  out.reserve(word.size());
  std::vector<std::int64_t> pivot(n);
  while (true) {
    std::size_t s = n;
    for (std::size_t c = 0; c < n; ++c) {
      if (column_negative(c)) {
        s = c;
        break;
      }
    }
    if (s == n) break;
    out.push_back(static_cast<Generator>(s));
    // g <- s g, so g^{-1} <- g^{-1} s: col_c -= a_sc * col_s.
    for (std::size_t r = 0; r < n; ++r) pivot[r] = inverse[r * n + s];
    for (std::size_t c = 0; c < n; ++c) {
      const auto coeff = cartan[s * n + c];
      if (coeff == 0) continue;
      for (std::size_t r = 0; r < n; ++r) {
        if (!checked_mul_sub(inverse[r * n + c], coeff, pivot[r])) return std::nullopt;
      }
    }
    if (out.size() > word.size()) return std::nullopt;
  }
  return out;
}

}  // namespace cotlar::word_problem
