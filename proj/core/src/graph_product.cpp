#include "cotlar/graph_product.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "cotlar/error.hpp"

namespace cotlar {

std::strong_ordering operator<=>(const GPElement& a, const GPElement& b) {
  if (auto c = a.weight_ <=> b.weight_; c != 0) return c;
  if (auto c = a.syllables_.size() <=> b.syllables_.size(); c != 0) return c;
  return a.syllables_ <=> b.syllables_;
}

namespace {

constexpr std::size_t kTypeSystemCap = 1024;

}  // namespace

GraphProduct GraphProduct::validate(std::vector<Vertex> vertices,
                                    const std::vector<std::pair<std::string, std::string>>& edges) {
  const std::size_t n = vertices.size();
  if (n == 0) throw Error(ErrorCode::InvalidDescriptor, "at least one vertex is required");
  if (n > kMaxRank) throw Error(ErrorCode::InvalidDescriptor, "more than 64 vertices");
  std::vector<std::string> names;
  for (const auto& v : vertices) {
    if (v.order == 1) throw Error(ErrorCode::InvalidDescriptor, "vertex '" + v.name + "' has trivial group");
    names.push_back(v.name);
  }
  std::vector<std::vector<std::uint32_t>> matrix(n, std::vector<std::uint32_t>(n, kInfiniteOrder));
  for (std::size_t i = 0; i < n; ++i) matrix[i][i] = 1;

  GraphProduct gp;
  auto index = [&](const std::string& name) -> Generator {
    for (std::size_t i = 0; i < n; ++i) {
      if (names[i] == name) return static_cast<Generator>(i);
    }
    throw Error(ErrorCode::InvalidDescriptor, "edge endpoint '" + name + "' is not a vertex");
  };
  std::set<std::pair<Generator, Generator>> edge_set;
  for (const auto& [x, y] : edges) {
    const auto a = index(x);
    const auto b = index(y);
    if (a == b) throw Error(ErrorCode::InvalidDescriptor, "loop at vertex '" + x + "'");
    edge_set.emplace(std::min(a, b), std::max(a, b));
    matrix[a][b] = matrix[b][a] = 2;
  }
  // validate() also rejects duplicate names.
  gp.type_ = CoxeterSystem::validate(std::move(names), matrix, kTypeSystemCap);
  gp.vertices_ = std::move(vertices);
  gp.edges_.assign(edge_set.begin(), edge_set.end());
  return gp;
}

std::optional<Generator> GraphProduct::find(std::string_view name) const { return type_.find(name); }

Generator GraphProduct::vertex(std::string_view name) const {
  if (auto v = find(name)) return *v;
  throw Error(ErrorCode::InvalidGenerator, "unknown vertex '" + std::string(name) + "'");
}

std::size_t GraphProduct::syllable_weight(const Syllable& s) const {
  return order(s.vertex) == kInfiniteCyclic ? static_cast<std::size_t>(std::llabs(s.exponent)) : 1;
}

std::int64_t GraphProduct::reduce_exponent(Generator v, std::int64_t e) const {
  const auto n = order(v);
  if (n == kInfiniteCyclic) return e;
  const auto m = static_cast<std::int64_t>(n);
  return ((e % m) + m) % m;
}

GPElement GraphProduct::normalize(const std::vector<Syllable>& raw) const {
  std::vector<Syllable> reduced;
  reduced.reserve(raw.size());
  for (const auto& input : raw) {
    if (input.vertex >= rank()) throw Error(ErrorCode::InvalidGenerator, "vertex index " + std::to_string(input.vertex));
    const auto e = reduce_exponent(input.vertex, input.exponent);
    if (e == 0) continue;
    bool merged = false;
    for (std::size_t j = reduced.size(); j-- > 0;) {
      if (reduced[j].vertex == input.vertex) {
        const auto sum = reduce_exponent(input.vertex, reduced[j].exponent + e);
        if (sum == 0) {
          reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(j));
        } else {
          reduced[j].exponent = sum;
        }
        merged = true;
        break;
      }
      if (!adjacent(reduced[j].vertex, input.vertex)) break;
    }
    if (!merged) reduced.push_back({input.vertex, e});
  }

  std::vector<Syllable> out;
  out.reserve(reduced.size());
  std::vector<bool> used(reduced.size(), false);
  std::size_t weight = 0;
  for (std::size_t step = 0; step < reduced.size(); ++step) {
    std::size_t pick = reduced.size();
    for (std::size_t i = 0; i < reduced.size(); ++i) {
      if (used[i]) continue;
      bool frontable = true;
      for (std::size_t k = 0; k < i && frontable; ++k) {
        if (!used[k] && !adjacent(reduced[k].vertex, reduced[i].vertex)) frontable = false;
      }
      if (frontable && (pick == reduced.size() || reduced[i].vertex < reduced[pick].vertex)) pick = i;
    }
    used[pick] = true;
    weight += syllable_weight(reduced[pick]);
    out.push_back(reduced[pick]);
  }
  return GPElement(std::move(out), weight);
}

GPElement GraphProduct::multiply(const GPElement& a, const GPElement& b) const {
  if (a.is_identity()) return b;
  if (b.is_identity()) return a;
  std::vector<Syllable> raw = a.syllables();
  raw.insert(raw.end(), b.syllables().begin(), b.syllables().end());
  return normalize(raw);
}

GPElement GraphProduct::invert(const GPElement& a) const {
  std::vector<Syllable> raw;
  raw.reserve(a.size());
  for (auto it = a.syllables().rbegin(); it != a.syllables().rend(); ++it) raw.push_back({it->vertex, -it->exponent});
  return normalize(raw);
}

std::vector<GPElement> GraphProduct::ball(std::size_t radius) const {
  std::vector<GPElement> generators;
  for (std::size_t v = 0; v < rank(); ++v) {
    const auto g = static_cast<Generator>(v);
    if (order(g) == kInfiniteCyclic) {
      generators.push_back(syllable(g, 1));
      generators.push_back(syllable(g, -1));
    } else {
      for (std::uint32_t e = 1; e < order(g); ++e) generators.push_back(syllable(g, e));
    }
  }
  std::vector<GPElement> out{identity()};
  std::vector<GPElement> level{identity()};
  for (std::size_t r = 1; r <= radius && !level.empty(); ++r) {
    std::set<GPElement> next;
    for (const auto& w : level) {
      for (const auto& x : generators) {
        auto product = multiply(w, x);
        if (product.weight() == r) next.insert(std::move(product));
      }
    }
    level.assign(next.begin(), next.end());
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::string GraphProduct::label(const GPElement& a) const {
  if (a.is_identity()) return "e";
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto& s = a.syllables()[i];
    if (i > 0) out += ' ';
    out += name(s.vertex);
    if (!(order(s.vertex) == 2 && s.exponent == 1)) out += "^" + std::to_string(s.exponent);
  }
  return out;
}

Word GraphProduct::vertex_word(const GPElement& a) const {
  Word w;
  w.reserve(a.size());
  for (const auto& s : a.syllables()) w.push_back(s.vertex);
  return w;
}

std::optional<std::int64_t> GraphProduct::leading_exponent(const GPElement& a, Generator u) const {
  for (const auto& s : a.syllables()) {
    if (s.vertex == u) return s.exponent;
    if (!adjacent(s.vertex, u)) return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace cotlar
