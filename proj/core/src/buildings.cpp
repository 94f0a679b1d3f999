#include "cotlar/buildings.hpp"

#include <deque>
#include <set>

namespace cotlar {

std::vector<CanonicalElement> ThinBuilding::panel(const CanonicalElement& c, Generator s, std::size_t radius) const {
  auto e = system_.multiply(c, system_.generator_element(s));
  if (e.length() > radius) return {};
  return {std::move(e)};
}

std::vector<GPElement> GraphProductBuilding::panel(const GPElement& c, Generator s, std::size_t radius) const {
  std::vector<std::int64_t> exponents;
  if (group_.order(s) == kInfiniteCyclic) {
    const auto reach = static_cast<std::int64_t>(c.weight() + radius);
    for (std::int64_t k = 1; k <= reach; ++k) {
      exponents.push_back(k);
      exponents.push_back(-k);
    }
  } else {
    for (std::uint32_t k = 1; k < group_.order(s); ++k) exponents.push_back(k);
  }
  std::vector<GPElement> out;
  for (auto k : exponents) {
    auto e = group_.multiply(c, group_.syllable(s, k));
    if (e.weight() <= radius) out.push_back(std::move(e));
  }
  return out;
}

TableBuilding::TableBuilding(CoxeterSystem type, std::vector<std::string> names,
                             const std::vector<std::vector<Word>>& delta)
    : type_(std::move(type)), names_(std::move(names)) {
  const std::size_t n = names_.size();
  if (n == 0) throw Error(ErrorCode::InvalidDescriptor, "building table has no chambers");
  if (delta.size() != n) throw Error(ErrorCode::InvalidDescriptor, "delta table must be n x n");
  delta_.reserve(n * n);
  for (const auto& row : delta) {
    if (row.size() != n) throw Error(ErrorCode::InvalidDescriptor, "delta table must be n x n");
    for (const auto& w : row) delta_.push_back(type_.reduce(w));
  }
}

std::vector<std::size_t> TableBuilding::chambers(std::size_t) const {
  std::vector<std::size_t> out(names_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = i;
  return out;
}

std::vector<std::size_t> TableBuilding::panel(std::size_t c, Generator s, std::size_t) const {
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < names_.size(); ++e) {
    const auto& w = weyl_distance(e, c);
    if (w.length() == 1 && w.word().front() == s) out.push_back(e);
  }
  return out;
}

CotlarReport<GPElement> verify_theorem_c(const GraphProduct& group, Generator u, std::size_t radius) {
  const GraphProductBuilding building(group);
  return verify_cotlar(group, building_symbol(building, u), theorem_c_membership(building, u), radius);
}

ExactComplex amalgam_symbol_value(const GraphProduct& group, const GPElement& g, Generator u) {
  const auto& start = g.syllables();
  std::set<std::vector<Syllable>> seen{start};
  std::deque<std::vector<Syllable>> queue{start};
  while (!queue.empty()) {
    auto word = std::move(queue.front());
    queue.pop_front();
    if (!word.empty() && word.front().vertex == u) return ExactComplex(-1);
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
      if (word[i].vertex == word[i + 1].vertex || !group.adjacent(word[i].vertex, word[i + 1].vertex)) continue;
      auto next = word;
      std::swap(next[i], next[i + 1]);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return ExactComplex(1);
}

namespace {

constexpr std::array<HalfSpaceSide, 2> kSides{HalfSpaceSide::Positive, HalfSpaceSide::Negative};

// H^a ⊊ v·H^b, restated as v·H^{−b} ⊊ H^{−a}.
bool contained_in_image(SixClass v, HalfSpaceSide a, HalfSpaceSide b) {
  return asserts_strict(v, opposite(b), opposite(a));
}

}  // namespace

void check_transitivity_triple(const CoxeterSystem& type, const CanonicalElement& w,
                                             const CanonicalElement& w1, const CanonicalElement& w2, Generator u,
                                             TransitivityReport& report) {
  const auto cw = classify(type, u, w);
  const auto cw1 = classify(type, u, w1);
  const auto cw2 = classify(type, u, w2);
  ++report.triples_checked;
  auto fail = [&](std::string statement, std::string detail) {
    report.failures.push_back({std::move(statement), {}, {cw, cw1, cw2}, std::move(detail)});
  };
  auto side = [](HalfSpaceSide x) { return x == HalfSpaceSide::Positive ? std::string("+") : std::string("-"); };

  for (auto dagger : kSides) {
    for (auto dagger2 : kSides) {
      const bool conclusion = contained_in_image(cw2, dagger, dagger2);
      const std::string tag = "dagger=" + side(dagger) + ",dagger'=" + side(dagger2);
      if (asserts_strict(cw, dagger, HalfSpaceSide::Positive) &&
          contained_in_image(cw1, HalfSpaceSide::Positive, dagger2)) {
        ++report.fired[0];
        if (!conclusion) fail("i", tag);
      }
      if (asserts_strict(cw, dagger, HalfSpaceSide::Negative) &&
          contained_in_image(cw1, HalfSpaceSide::Negative, dagger2)) {
        ++report.fired[1];
        if (!conclusion) fail("ii", tag);
      }
    }
  }
  for (auto sigma : kSides) {
    const std::string tag = "sign=" + side(sigma);
    if (cw == SixClass::InWTs && contained_in_image(cw1, HalfSpaceSide::Negative, sigma)) {
      ++report.fired[2];
      if (!contained_in_image(cw2, HalfSpaceSide::Positive, sigma)) fail("iii", tag);
    }
    if (asserts_strict(cw, sigma, HalfSpaceSide::Positive) && cw1 == SixClass::InWTs) {
      ++report.fired[3];
      if (!contained_in_image(cw2, sigma, HalfSpaceSide::Negative)) fail("iv", tag);
    }
  }
}

void FinerModel::require_consistent() const {
  if (constraints.passed()) return;
  const auto& v = constraints.violations.front();
  throw Error(ErrorCode::ConstraintViolated, "g = " + v.g + " maps component " + std::to_string(v.component) +
                                                 " to component " + std::to_string(v.image) +
                                                 " with a different value");
}

std::int64_t finer_component(const GraphProduct& group, const GPElement& g, Generator u) {
  return group.leading_exponent(g, u).value_or(0);
}

SubgroupMembership<GPElement> delta_parabolic_membership(const GraphProduct& group, GeneratorSet subset) {
  const GraphProductBuilding building(group);
  std::string names;
  for (auto t : subset.members()) names += (names.empty() ? "" : ",") + group.name(t);
  return {[building, subset](const GPElement& g) {
            return building.type_system().in_parabolic(subset, building.weyl_distance(building.base_chamber(), g));
          },
          "delta-parabolic{" + names + "}"};
}

FinerModel finer_symbol(const GraphProduct& group, Generator u, std::vector<ExactComplex> values, std::size_t radius,
                        FinerSubgroup subgroup) {
  if (u >= group.rank()) throw Error(ErrorCode::InvalidGenerator, "vertex index " + std::to_string(u));
  auto allowed = group.type_system().commuting_set(u);
  if (subgroup == FinerSubgroup::WallStabilizer) allowed.insert(u);
  return finer_symbol(group, u, std::move(values), radius, delta_parabolic_membership(group, allowed));
}

FinerModel finer_symbol(const GraphProduct& group, Generator u, std::vector<ExactComplex> values, std::size_t radius,
                        SubgroupMembership<GPElement> g0) {
  if (u >= group.rank()) throw Error(ErrorCode::InvalidGenerator, "vertex index " + std::to_string(u));
  const auto n = group.order(u);
  if (n == kInfiniteCyclic) {
    throw Error(ErrorCode::InvalidDescriptor, "vertex '" + group.name(u) + "' must have a finite group");
  }
  if (values.size() != n) {
    throw Error(ErrorCode::InvalidDescriptor, "expected " + std::to_string(n) + " values, got " +
                                                  std::to_string(values.size()));
  }
  const auto& type = group.type_system();
  if (!nested_condition(type, u)) {
    throw Error(ErrorCode::NestedConditionViolated, "type system is not nested relative to '" + type.name(u) + "'");
  }

  FinerModel model;
  model.u = u;
  model.values = values;
  model.symbol = {[group, u, values](const GPElement& g) {
                    return values[static_cast<std::size_t>(finer_component(group, g, u))];
                  },
                  FinerRule{group.name(u), values}};
  model.g0 = std::move(g0);

  model.constraints.radius = radius;
  for (const auto& g : group.ball(radius)) {
    if (!model.g0.contains(g)) continue;
    ++model.constraints.elements_checked;
    for (std::uint32_t i = 0; i < n; ++i) {
      const auto rep = group.syllable(u, i);
      const auto j = finer_component(group, group.multiply(g, rep), u);
      if (!(values[i] == values[static_cast<std::size_t>(j)])) {
        model.constraints.violations.push_back({group.label(g), static_cast<std::int64_t>(i), j});
      }
    }
  }
  return model;
}

}  // namespace cotlar
