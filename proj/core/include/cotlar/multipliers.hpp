#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "cotlar/coxeter.hpp"
#include "cotlar/exact.hpp"
#include "cotlar/group.hpp"
#include "cotlar/parallel.hpp"

namespace cotlar {

struct MWRule {
  std::string generator;
};
struct ExtensionRule {
  std::string generator;
  std::vector<std::string> coset_reps;
};
struct LatticeRule {
  std::string generator;
};
struct TableRule {
  std::size_t entries = 0;
  ExactComplex default_value;
};
struct BuildingRule {
  std::string vertex;
};
struct FinerRule {
  std::string vertex;
  std::vector<ExactComplex> values;
};
struct ConstantRule {
  ExactComplex value;
};

using SymbolDescriptor =
    std::variant<MWRule, ExtensionRule, LatticeRule, TableRule, BuildingRule, FinerRule, ConstantRule>;

std::string describe(const SymbolDescriptor& descriptor);

/// A total map from group elements to exact complex scalars.
template <class E>
struct Symbol {
  std::function<ExactComplex(const E&)> evaluate;
  SymbolDescriptor descriptor;

  ExactComplex operator()(const E& g) const { return evaluate(g); }
};

template <class E>
Symbol<E> constant_symbol(ExactComplex value) {
  return {[value](const E&) { return value; }, ConstantRule{value}};
}

template <class E>
Symbol<E> table_symbol(std::map<E, ExactComplex> table, ExactComplex default_value) {
  const std::size_t n = table.size();
  return {[table = std::move(table), default_value](const E& g) {
            auto it = table.find(g);
            return it == table.end() ? default_value : it->second;
          },
          TableRule{n, default_value}};
}

/// m_W^s: +1 if s is not a left descent of g, −1 otherwise.
Symbol<CanonicalElement> mw_symbol(const CoxeterSystem& system, Generator s);

/// Membership predicate for the subgroup G₀, with a description for reports.
template <class E>
struct SubgroupMembership {
  std::function<bool(const E&)> contains;
  std::string description;
};

template <class E>
struct CotlarViolation {
  E g;
  E h;
  /// (m(g) − m(h))(m(g⁻¹h) − m(g⁻¹)).
  ExactComplex value;
};

template <class E>
struct InvarianceViolation {
  E h_prime;
  E h;
  ExactComplex m_product;  // m(h′h)
  ExactComplex m_h;        // m(h)
};

template <class E>
struct CotlarReport {
  std::size_t radius = 0;
  std::string subgroup_descriptor;
  std::string symbol_descriptor;
  std::uint64_t pairs_checked = 0;
  std::vector<CotlarViolation<E>> violations;
  std::vector<InvarianceViolation<E>> invariance_violations;

  bool passed() const { return violations.empty() && invariance_violations.empty(); }
};

/// (m(g) − m(h))(m(g⁻¹h) − m(g⁻¹)) evaluated directly.
template <Group G>
ExactComplex cotlar_product(const G& group, const Symbol<typename G::Element>& m,
                            const typename G::Element& g, const typename G::Element& h) {
  const auto g_inv = group.invert(g);
  return (m(g) - m(h)) * (m(group.multiply(g_inv, h)) - m(g_inv));
}

/// Scans every g ∈ ball(R) \ G₀ against every h ∈ ball(R) and every
/// h′ ∈ ball(R) ∩ G₀ against every h ∈ ball(R). Violations are sorted by
/// (g, h) and (h′, h) in the group's element order.
template <Group G>
CotlarReport<typename G::Element> verify_cotlar(const G& group, const Symbol<typename G::Element>& m,
                                                const SubgroupMembership<typename G::Element>& g0,
                                                std::size_t radius) {
  using E = typename G::Element;
  const auto ball = group.ball(radius);
  std::vector<ExactComplex> values;
  values.reserve(ball.size());
  for (const auto& g : ball) values.push_back(m(g));

  std::vector<std::size_t> outside;
  std::vector<std::size_t> inside;
  for (std::size_t i = 0; i < ball.size(); ++i) (g0.contains(ball[i]) ? inside : outside).push_back(i);

  CotlarReport<E> report;
  report.radius = radius;
  report.subgroup_descriptor = g0.description;
  report.symbol_descriptor = describe(m.descriptor);

  const std::size_t workers = worker_count(outside.size() + inside.size());
  std::vector<std::vector<CotlarViolation<E>>> found(workers);
  std::vector<std::vector<InvarianceViolation<E>>> drift(workers);
  std::vector<std::uint64_t> pairs(workers, 0);

  parallel_for(outside.size(), workers, [&](std::size_t k, std::size_t w) {
    const auto& g = ball[outside[k]];
    const auto& mg = values[outside[k]];
    const auto g_inv = group.invert(g);
    const auto m_g_inv = m(g_inv);
    for (std::size_t j = 0; j < ball.size(); ++j) {
      ++pairs[w];
      const auto first = mg - values[j];
      if (first.is_zero()) continue;
      const auto second = m(group.multiply(g_inv, ball[j])) - m_g_inv;
      if (second.is_zero()) continue;
      found[w].push_back({g, ball[j], first * second});
    }
  });
  parallel_for(inside.size(), workers, [&](std::size_t k, std::size_t w) {
    const auto& h_prime = ball[inside[k]];
    for (std::size_t j = 0; j < ball.size(); ++j) {
      auto moved = m(group.multiply(h_prime, ball[j]));
      if (!(moved == values[j])) drift[w].push_back({h_prime, ball[j], std::move(moved), values[j]});
    }
  });

  for (std::size_t w = 0; w < workers; ++w) {
    report.pairs_checked += pairs[w];
    std::move(found[w].begin(), found[w].end(), std::back_inserter(report.violations));
    std::move(drift[w].begin(), drift[w].end(), std::back_inserter(report.invariance_violations));
  }
  std::sort(report.violations.begin(), report.violations.end(), [](const auto& a, const auto& b) {
    return a.g != b.g ? a.g < b.g : a.h < b.h;
  });
  std::sort(report.invariance_violations.begin(), report.invariance_violations.end(),
            [](const auto& a, const auto& b) { return a.h_prime != b.h_prime ? a.h_prime < b.h_prime : a.h < b.h; });
  return report;
}

/// W_{T_s} membership for a Coxeter system.
SubgroupMembership<CanonicalElement> parabolic_membership(const CoxeterSystem& system, GeneratorSet subset);
SubgroupMembership<CanonicalElement> commuting_parabolic(const CoxeterSystem& system, Generator s);

template <class E>
SubgroupMembership<E> trivial_membership(E identity) {
  return {[identity = std::move(identity)](const E& g) { return g == identity; }, "trivial"};
}

}  // namespace cotlar
