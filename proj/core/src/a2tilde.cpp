#include "cotlar/a2tilde.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <unordered_map>

#include "cotlar/error.hpp"
#include "cotlar/geometry.hpp"

namespace cotlar {

std::strong_ordering operator<=>(const LatticePoint& p, const LatticePoint& q) {
  const auto rp = std::max(std::llabs(p.a), std::llabs(p.b));
  const auto rq = std::max(std::llabs(q.a), std::llabs(q.b));
  if (auto c = rp <=> rq; c != 0) return c;
  if (auto c = p.a <=> q.a; c != 0) return c;
  return p.b <=> q.b;
}

std::vector<LatticePoint> LatticeZ2::ball(std::size_t radius) const {
  const auto r = static_cast<std::int64_t>(radius);
  std::vector<LatticePoint> out;
  for (std::int64_t a = -r; a <= r; ++a) {
    for (std::int64_t b = -r; b <= r; ++b) out.push_back({a, b});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string LatticeZ2::label(const LatticePoint& p) const {
  return "(" + std::to_string(p.a) + "," + std::to_string(p.b) + ")";
}

SubgroupMembership<LatticePoint> diagonal_membership() {
  return {[](const LatticePoint& p) { return p.a == p.b; }, "diagonal<alpha*beta>"};
}

struct A2TildeSubgroup::Data {
  CoxeterSystem system;
  CanonicalElement alpha;
  CanonicalElement beta;
  Word alpha_word;
  Word beta_word;
  std::vector<CanonicalElement> reps;
  std::size_t bound = 0;
  std::unordered_map<CanonicalElement, LatticePoint> index;
  std::map<LatticePoint, CanonicalElement> table;

  CanonicalElement compute_power(std::int64_t a, std::int64_t b) const { return compute_power(system, a, b); }

  CanonicalElement compute_power(const CoxeterSystem& sys, std::int64_t a, std::int64_t b) const {
    Word w;
    auto append = [&](const Word& letters, std::int64_t k) {
      for (std::int64_t i = 0; i < std::llabs(k); ++i) {
        if (k > 0) {
          w.insert(w.end(), letters.begin(), letters.end());
        } else {
          w.insert(w.end(), letters.rbegin(), letters.rend());
        }
      }
    };
    append(alpha_word, a);
    append(beta_word, b);
    return sys.reduce(w);
  }

  std::optional<LatticePoint> lookup(const CanonicalElement& g) const {
    if (g.length() % 2 != 0) return std::nullopt;
    if (auto it = index.find(g); it != index.end()) return it->second;
    const auto r = static_cast<std::int64_t>(g.length());
    if (static_cast<std::size_t>(r) <= bound) return std::nullopt;
    const auto wide = system.with_max_word_len(std::max<std::size_t>(system.max_word_len(), 8 * r + 8));
    for (std::int64_t a = -r; a <= r; ++a) {
      for (std::int64_t b = -r; b <= r; ++b) {
        if (std::max(std::llabs(a), std::llabs(b)) <= static_cast<std::int64_t>(bound)) continue;
        if (compute_power(wide, a, b) == g) return LatticePoint{a, b};
      }
    }
    return std::nullopt;
  }
};

A2TildeSubgroup A2TildeSubgroup::build(const CoxeterSystem& system, std::size_t ab_bound,
                                       std::span<const CanonicalElement> scan_order) {
  bool is_a2tilde = system.rank() == 3;
  for (std::size_t i = 0; is_a2tilde && i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      if (i != j && system.order(static_cast<Generator>(i), static_cast<Generator>(j)) != 3) is_a2tilde = false;
    }
  }
  if (!is_a2tilde) throw Error(ErrorCode::WrongSystem, "expected the affine A2 Coxeter matrix");

  auto data = std::make_shared<Data>(Data{
      system.with_max_word_len(std::max<std::size_t>(system.max_word_len(), 8 * ab_bound + 8)), {}, {}, {}, {},
      {}, ab_bound, {}, {}});
  constexpr Generator s = 0, t = 1, u = 2;
  data->alpha_word = {u, s, t, s};
  data->beta_word = {s, u, s, t};
  data->alpha = data->system.reduce(data->alpha_word);
  data->beta = data->system.reduce(data->beta_word);

  const auto bound = static_cast<std::int64_t>(ab_bound);
  for (std::int64_t a = -bound; a <= bound; ++a) {
    for (std::int64_t b = -bound; b <= bound; ++b) {
      auto g = data->compute_power(a, b);
      data->index.emplace(g, LatticePoint{a, b});
      data->table.emplace(LatticePoint{a, b}, std::move(g));
    }
  }
  if (data->index.size() != data->table.size()) {
    throw Error(ErrorCode::RepDiscoveryFailed, "alpha and beta do not generate a free abelian group");
  }

  std::vector<CanonicalElement> default_scan;
  if (scan_order.empty()) {
    default_scan = data->system.ball(kDiscoveryRadius);
    scan_order = default_scan;
  }
  for (const auto& g : scan_order) {
    bool placed = false;
    for (auto& rep : data->reps) {
      if (data->lookup(data->system.multiply(data->system.invert(rep), g))) {
        if (g < rep) rep = g;
        placed = true;
        break;
      }
    }
    if (!placed) data->reps.push_back(g);
  }
  std::sort(data->reps.begin(), data->reps.end());
  if (data->reps.size() != 6) {
    throw Error(ErrorCode::RepDiscoveryFailed,
                "found " + std::to_string(data->reps.size()) + " cosets, expected 6");
  }
  return A2TildeSubgroup(std::move(data));
}

const CoxeterSystem& A2TildeSubgroup::system() const { return data_->system; }
const CanonicalElement& A2TildeSubgroup::alpha() const { return data_->alpha; }
const CanonicalElement& A2TildeSubgroup::beta() const { return data_->beta; }
const std::vector<CanonicalElement>& A2TildeSubgroup::coset_reps() const { return data_->reps; }
std::size_t A2TildeSubgroup::ab_bound() const { return data_->bound; }

CanonicalElement A2TildeSubgroup::power(std::int64_t a, std::int64_t b) const {
  if (auto it = data_->table.find({a, b}); it != data_->table.end()) return it->second;
  return data_->compute_power(a, b);
}

std::optional<LatticePoint> A2TildeSubgroup::z2_membership(const CanonicalElement& g) const {
  return data_->lookup(g);
}

A2TildeSubgroup::Factorization A2TildeSubgroup::decompose(const CanonicalElement& g) const {
  try {
    for (std::size_t i = 0; i < data_->reps.size(); ++i) {
      const auto h = data_->system.multiply(data_->system.invert(data_->reps[i]), g);
      if (auto p = data_->lookup(h)) return {i, *p};
    }
  } catch (const WordTooLong& e) {
    throw Error(ErrorCode::DecompositionFailed, "element " + data_->system.label(g) + ": " + e.what());
  }
  throw Error(ErrorCode::DecompositionFailed, "no coset representative for " + data_->system.label(g));
}

Symbol<CanonicalElement> A2TildeSubgroup::extension_symbol(Generator s) const {
  if (s >= 3) throw Error(ErrorCode::InvalidGenerator, "index " + std::to_string(s));
  std::vector<std::string> reps;
  for (const auto& r : data_->reps) reps.push_back(data_->system.label(r));
  auto self = *this;
  return {[self, s](const CanonicalElement& g) {
            const auto f = self.decompose(g);
            const auto h = self.power(f.h.a, f.h.b);
            return ExactComplex(halfspace_side(self.system(), s, h) == HalfSpaceSide::Positive ? 1 : -1);
          },
          ExtensionRule{data_->system.name(s), std::move(reps)}};
}

Symbol<LatticePoint> A2TildeSubgroup::lattice_symbol(Generator s) const {
  if (s >= 3) throw Error(ErrorCode::InvalidGenerator, "index " + std::to_string(s));
  auto self = *this;
  return {[self, s](const LatticePoint& p) {
            return ExactComplex(halfspace_side(self.system(), s, self.power(p.a, p.b)) == HalfSpaceSide::Positive ? 1
                                                                                                                 : -1);
          },
          LatticeRule{data_->system.name(s)}};
}

}  // namespace cotlar
