#include "cotlar/multipliers.hpp"

#include "cotlar/error.hpp"
#include "cotlar/geometry.hpp"

namespace cotlar {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += ",";
    out += parts[i];
  }
  return out;
}

}  // namespace

std::string describe(const SymbolDescriptor& descriptor) {
  return std::visit(
      Overloaded{
          [](const MWRule& r) { return "mw(" + r.generator + ")"; },
          [](const ExtensionRule& r) { return "extension(" + r.generator + ";reps=" + join(r.coset_reps) + ")"; },
          [](const LatticeRule& r) { return "lattice(" + r.generator + ")"; },
          [](const TableRule& r) {
            return "table(" + std::to_string(r.entries) + " entries;default=" + to_string(r.default_value) + ")";
          },
          [](const BuildingRule& r) { return "building(" + r.vertex + ")"; },
          [](const FinerRule& r) {
            std::vector<std::string> values;
            for (const auto& v : r.values) values.push_back(to_string(v));
            return "finer(" + r.vertex + ";values=" + join(values) + ")";
          },
          [](const ConstantRule& r) { return "constant(" + to_string(r.value) + ")"; },
      },
      descriptor);
}

Symbol<CanonicalElement> mw_symbol(const CoxeterSystem& system, Generator s) {
  if (s >= system.rank()) throw Error(ErrorCode::InvalidGenerator, "index " + std::to_string(s));
  return {[system, s](const CanonicalElement& g) {
            return ExactComplex(halfspace_side(system, s, g) == HalfSpaceSide::Positive ? 1 : -1);
          },
          MWRule{system.name(s)}};
}

SubgroupMembership<CanonicalElement> parabolic_membership(const CoxeterSystem& system, GeneratorSet subset) {
  std::vector<std::string> names;
  for (auto t : subset.members()) names.push_back(system.name(t));
  return {[system, subset](const CanonicalElement& g) { return system.in_parabolic(subset, g); },
          "parabolic{" + join(names) + "}"};
}

SubgroupMembership<CanonicalElement> commuting_parabolic(const CoxeterSystem& system, Generator s) {
  return parabolic_membership(system, system.commuting_set(s));
}

}  // namespace cotlar
