#include "app.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cotlar/a2tilde.hpp"
#include "cotlar/buildings.hpp"
#include "cotlar/error.hpp"
#include "cotlar/geometry.hpp"
#include "cotlar/multipliers.hpp"
#include "cotlar/ncalgebra.hpp"
#include "descriptor_io.hpp"

namespace cotlar::cli {

using json = nlohmann::ordered_json;

namespace {

constexpr const char* kVersion = "0.1.0";
constexpr double kFloatTolerance = 1e-9;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string config;
  std::string generator;
  std::size_t radius = 3;
  std::optional<std::size_t> triple_radius;
  std::string g0 = "parabolic";
  std::uint64_t seed = 0;
  std::string numeric = "exact";
  std::string values;
  std::string symbol = "auto";
  std::size_t samples = 0;
  unsigned k = 2;
  std::size_t support = 4;
  std::string color = "symbol";
  bool timing = false;
};

std::optional<std::size_t> env_cap() {
  const char* raw = std::getenv("COTLAR_MAX_WORD_LEN");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  const std::string text(raw);
  if (text.find_first_not_of("0123456789") != std::string::npos || text.size() > 9) {
    throw ConfigError("COTLAR_MAX_WORD_LEN must be a positive integer, got '" + text + "'");
  }
  const auto cap = static_cast<std::size_t>(std::stoul(text));
  if (cap == 0) throw ConfigError("COTLAR_MAX_WORD_LEN must be positive");
  return cap;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<ExactComplex> parse_values(const std::string& text) {
  std::vector<ExactComplex> out;
  for (const auto& item : split(text, ',')) out.push_back(parse_exact_complex(item));
  if (out.empty()) throw ConfigError("--values needs at least one value");
  return out;
}

const CoxeterSystem& type_of(const Input& input) {
  return std::visit(
      [](const auto& x) -> const CoxeterSystem& {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, CoxeterSystem>) {
          return x;
        } else {
          return x.type_system();
        }
      },
      input);
}

json descriptor_json(const Input& input) {
  if (const auto* sys = std::get_if<CoxeterSystem>(&input)) return to_json(*sys);
  if (const auto* gp = std::get_if<GraphProduct>(&input)) return to_json(*gp);
  const auto& table = std::get<TableBuilding>(input);
  return {{"type", "building_table"},
          {"type_system", to_json(table.type_system())},
          {"chambers", table.chambers(0).size()}};
}

Generator require_generator(const CoxeterSystem& sys, const Options& o) {
  if (o.generator.empty()) throw ConfigError("--generator is required");
  return sys.generator(o.generator);
}

Generator require_vertex(const GraphProduct& gp, const Options& o) {
  if (o.generator.empty()) throw ConfigError("--generator is required");
  return gp.vertex(o.generator);
}

void check_radius(const CoxeterSystem& sys, std::size_t radius) {
  if (radius > sys.max_word_len()) throw WordTooLong(radius, sys.max_word_len());
}

GeneratorSet parse_name_list(const std::string& list, auto&& lookup) {
  GeneratorSet out;
  for (const auto& name : split(list, ',')) out.insert(lookup(name));
  return out;
}

bool is_list_mode(const std::string& g0) { return g0.rfind("list:", 0) == 0; }

void check_g0_mode(const std::string& g0) {
  if (g0 != "parabolic" && g0 != "trivial" && !is_list_mode(g0)) {
    throw ConfigError("--g0 must be parabolic, trivial or list:NAMES, got '" + g0 + "'");
  }
}

SubgroupMembership<CanonicalElement> coxeter_g0(const CoxeterSystem& sys, Generator s, const std::string& g0) {
  check_g0_mode(g0);
  if (g0 == "parabolic") return commuting_parabolic(sys, s);
  if (g0 == "trivial") return trivial_membership(sys.identity());
  return parabolic_membership(sys, parse_name_list(g0.substr(5), [&](const std::string& n) { return sys.generator(n); }));
}

SubgroupMembership<GPElement> gp_g0(const GraphProduct& gp, Generator u, const std::string& g0) {
  check_g0_mode(g0);
  if (g0 == "parabolic") return theorem_c_membership(GraphProductBuilding(gp), u);
  if (g0 == "trivial") return trivial_membership(gp.identity());
  return delta_parabolic_membership(gp, parse_name_list(g0.substr(5), [&](const std::string& n) { return gp.vertex(n); }));
}

Symbol<CanonicalElement> coxeter_symbol(const CoxeterSystem& sys, Generator s, const std::string& kind) {
  if (kind == "auto" || kind == "mw") return mw_symbol(sys, s);
  if (kind == "extension") return A2TildeSubgroup::build(sys).extension_symbol(s);
  if (kind == "building") return building_symbol(ThinBuilding(sys), s);
  throw ConfigError("--symbol " + kind + " is not available for a Coxeter system");
}

struct GPSymbol {
  Symbol<GPElement> symbol;
  SubgroupMembership<GPElement> g0;
  std::optional<FinerConstraintReport> constraints;
};

GPSymbol gp_symbol(const GraphProduct& gp, Generator u, const Options& o) {
  std::string kind = o.symbol;
  if (kind == "auto") kind = o.values.empty() ? "building" : "finer";
  if (kind == "building") return {building_symbol(GraphProductBuilding(gp), u), gp_g0(gp, u, o.g0), std::nullopt};
  if (kind == "finer") {
    if (o.values.empty()) throw ConfigError("--symbol finer needs --values");
    auto model = finer_symbol(gp, u, parse_values(o.values), o.radius, gp_g0(gp, u, o.g0));
    return {std::move(model.symbol), std::move(model.g0), std::move(model.constraints)};
  }
  throw ConfigError("--symbol " + kind + " is not available for a graph product");
}

json constraints_json(const FinerConstraintReport& r) {
  json violations = json::array();
  for (const auto& v : r.violations) violations.push_back({{"g", v.g}, {"component", v.component}, {"image", v.image}});
  return {{"passed", r.passed()},
          {"radius", r.radius},
          {"elements_checked", r.elements_checked},
          {"violations", std::move(violations)}};
}

template <Group G>
json cotlar_json(const G& group, const CotlarReport<typename G::Element>& r) {
  json violations = json::array();
  for (const auto& v : r.violations) {
    violations.push_back({{"g", group.label(v.g)}, {"h", group.label(v.h)}, {"value", to_string(v.value)}});
  }
  json drift = json::array();
  for (const auto& v : r.invariance_violations) {
    drift.push_back({{"h_prime", group.label(v.h_prime)},
                     {"h", group.label(v.h)},
                     {"m_h_prime_h", to_string(v.m_product)},
                     {"m_h", to_string(v.m_h)}});
  }
  return {{"passed", r.passed()},
          {"radius", r.radius},
          {"subgroup", r.subgroup_descriptor},
          {"symbol", r.symbol_descriptor},
          {"pairs_checked", r.pairs_checked},
          {"violation_count", r.violations.size()},
          {"violations", std::move(violations)},
          {"invariance_violation_count", r.invariance_violations.size()},
          {"invariance_violations", std::move(drift)}};
}

int cmd_nested(const Input& input, const Options& o, json& result) {
  const auto& sys = type_of(input);
  const auto s = require_generator(sys, o);
  const auto offenders = nested_offenders(sys, s);
  json list = json::array();
  for (const auto& [u, m] : offenders) {
    list.push_back({{"generator", sys.name(u)}, {"m", m == kInfiniteOrder ? json("inf") : json(m)}});
  }
  result = {{"generator", sys.name(s)}, {"nested", offenders.empty()}, {"offenders", std::move(list)}};
  return offenders.empty() ? kExitOk : kExitViolations;
}

int cmd_verify(const Input& input, const Options& o, json& result) {
  if (const auto* sys = std::get_if<CoxeterSystem>(&input)) {
    const auto s = require_generator(*sys, o);
    if (o.symbol == "lattice") {
      const auto sub = A2TildeSubgroup::build(*sys);
      check_g0_mode(o.g0);
      if (is_list_mode(o.g0)) throw ConfigError("--g0 list: is not available for the lattice symbol");
      const LatticeZ2 lattice;
      const auto g0 = o.g0 == "trivial" ? trivial_membership(lattice.identity()) : diagonal_membership();
      const auto report = verify_cotlar(lattice, sub.lattice_symbol(s), g0, o.radius);
      result = cotlar_json(lattice, report);
      return report.passed() ? kExitOk : kExitViolations;
    }
    check_radius(*sys, o.radius);
    const auto report = verify_cotlar(*sys, coxeter_symbol(*sys, s, o.symbol), coxeter_g0(*sys, s, o.g0), o.radius);
    result = cotlar_json(*sys, report);
    return report.passed() ? kExitOk : kExitViolations;
  }
  if (const auto* gp = std::get_if<GraphProduct>(&input)) {
    const auto u = require_vertex(*gp, o);
    const auto chosen = gp_symbol(*gp, u, o);
    const auto report = verify_cotlar(*gp, chosen.symbol, chosen.g0, o.radius);
    result = cotlar_json(*gp, report);
    bool ok = report.passed();
    if (chosen.constraints) {
      result["constraints"] = constraints_json(*chosen.constraints);
      ok = ok && chosen.constraints->passed();
    }
    return ok ? kExitOk : kExitViolations;
  }
  throw ConfigError("verify-cotlar needs a coxeter or graph_product descriptor");
}

template <Group G, class Scalar>
GroupAlgebraElement<G, Scalar> seeded_element(const std::vector<typename G::Element>& ball, std::size_t support,
                                              std::uint64_t seed, std::size_t index) {
  std::mt19937_64 rng(splitmix64(seed ^ splitmix64(index)));
  std::vector<std::size_t> order(ball.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  const std::size_t n = std::min(support, ball.size());
  for (std::size_t i = 0; i < n; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, order.size() - 1);
    std::swap(order[i], order[pick(rng)]);
  }
  std::uniform_int_distribution<int> coefficient(-3, 3);
  GroupAlgebraElement<G, Scalar> f;
  for (std::size_t i = 0; i < n; ++i) {
    const int re = coefficient(rng);
    const int im = coefficient(rng);
    if constexpr (ScalarTraits<Scalar>::exact) {
      f.add(ball[order[i]], ExactComplex(Rational(re), Rational(im)));
    } else {
      f.add(ball[order[i]], Scalar(re, im));
    }
  }
  return f;
}

template <Group G>
int residual_run(const G& group, const Symbol<typename G::Element>& m,
                 const SubgroupMembership<typename G::Element>& g0, const Options& o, json& result) {
  if (o.numeric != "exact" && o.numeric != "float") throw ConfigError("--numeric must be exact or float");
  const bool exact = o.numeric == "exact";
  const auto ball = group.ball(o.radius);
  const std::size_t samples = o.samples == 0 ? 100 : o.samples;
  json rows = json::array();
  std::size_t nonzero = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    json row = {{"sample", i}};
    bool zero = true;
    if (exact) {
      const auto f = seeded_element<G, ExactComplex>(ball, o.support, o.seed, i);
      const auto r = cotlar_residual(group, m, g0, f);
      row["support"] = f.size();
      zero = r.is_zero();
      if (zero) {
        row["residual"] = "0 (exact)";
      } else {
        row["residual"] = r.residual_sup;
        row["residual_sup_squared"] = to_string(*r.residual_sup_squared);
        row["defect_support"] = r.defect_support_size;
      }
    } else {
      const auto f = seeded_element<G, std::complex<double>>(ball, o.support, o.seed, i);
      const auto r = cotlar_residual(group, m, g0, f);
      row["support"] = f.size();
      zero = r.residual_sup <= kFloatTolerance;
      row["residual"] = r.residual_sup;
    }
    if (!zero) ++nonzero;
    rows.push_back(std::move(row));
  }
  result = {{"numeric_mode", o.numeric},
            {"subgroup", g0.description},
            {"symbol", describe(m.descriptor)},
            {"radius", o.radius},
            {"samples", samples},
            {"support_size", o.support},
            {"seed", o.seed},
            {"nonzero_count", nonzero},
            {"residuals", std::move(rows)}};
  if (!exact) result["tolerance"] = kFloatTolerance;
  return nonzero == 0 ? kExitOk : kExitViolations;
}

int cmd_residual(const Input& input, const Options& o, json& result) {
  if (const auto* sys = std::get_if<CoxeterSystem>(&input)) {
    const auto s = require_generator(*sys, o);
    check_radius(*sys, o.radius);
    return residual_run(*sys, coxeter_symbol(*sys, s, o.symbol), coxeter_g0(*sys, s, o.g0), o, result);
  }
  if (const auto* gp = std::get_if<GraphProduct>(&input)) {
    const auto chosen = gp_symbol(*gp, require_vertex(*gp, o), o);
    return residual_run(*gp, chosen.symbol, chosen.g0, o, result);
  }
  throw ConfigError("residual needs a coxeter or graph_product descriptor");
}

template <Group G>
json ratio_json(const G& group, const Symbol<typename G::Element>& m, const Options& o) {
  if (o.k == 0) throw ConfigError("--k must be at least 1");
  const RatioSpec spec{o.samples == 0 ? 1000 : o.samples, o.radius, o.support, o.seed};
  const auto stats = ratio_report(group, m, o.k, spec);
  return {{"symbol", describe(m.descriptor)},
          {"k", stats.k},
          {"p", stats.p},
          {"radius", spec.radius},
          {"samples", stats.samples},
          {"support_size", spec.support_size},
          {"seed", spec.seed},
          {"max_ratio", stats.max_ratio},
          {"mean_ratio", stats.mean_ratio},
          {"min_ratio", stats.min_ratio},
          {"argmax_sample", stats.argmax_sample},
          {"alpha", stats.alpha},
          {"reference", stats.reference}};
}

int cmd_lp_ratio(const Input& input, const Options& o, json& result) {
  if (const auto* sys = std::get_if<CoxeterSystem>(&input)) {
    const auto s = require_generator(*sys, o);
    check_radius(*sys, o.radius);
    result = ratio_json(*sys, coxeter_symbol(*sys, s, o.symbol), o);
    return kExitOk;
  }
  if (const auto* gp = std::get_if<GraphProduct>(&input)) {
    result = ratio_json(*gp, gp_symbol(*gp, require_vertex(*gp, o), o).symbol, o);
    return kExitOk;
  }
  throw ConfigError("lp-ratio needs a coxeter or graph_product descriptor");
}

template <Building B>
json axioms_json(const B& building, std::size_t pair_radius, std::size_t triple_radius) {
  const auto report = check_axioms(building, pair_radius, triple_radius);
  json failures = json::array();
  for (const auto& f : report.failures) {
    failures.push_back({{"axiom", f.axiom}, {"chambers", f.chambers}, {"detail", f.detail}});
  }
  return {{"passed", report.passed()},
          {"pair_radius", report.pair_radius},
          {"triple_radius", report.triple_radius},
          {"pairs_checked", report.pairs_checked},
          {"triples_checked", report.triples_checked},
          {"b3_checked", report.b3_checked},
          {"failures", std::move(failures)}};
}

int cmd_axioms(const Input& input, const Options& o, json& result) {
  const auto triple = o.triple_radius.value_or(std::min<std::size_t>(o.radius, 3));
  if (const auto* sys = std::get_if<CoxeterSystem>(&input)) {
    check_radius(*sys, o.radius + 1);
    result = axioms_json(ThinBuilding(*sys), o.radius, triple);
  } else if (const auto* gp = std::get_if<GraphProduct>(&input)) {
    result = axioms_json(GraphProductBuilding(*gp), o.radius, triple);
  } else {
    result = axioms_json(std::get<TableBuilding>(input), o.radius, triple);
  }
  return result["passed"].get<bool>() ? kExitOk : kExitViolations;
}

int cmd_classify(const Input& input, const Options& o, json& result) {
  const auto& sys = type_of(input);
  const auto s = require_generator(sys, o);
  check_radius(sys, o.radius);
  if (!nested_condition(sys, s)) {
    throw Error(ErrorCode::NestedConditionViolated, "type system is not nested relative to '" + sys.name(s) + "'");
  }
  json rows = json::array();
  std::map<std::string, std::size_t> counts;
  for (auto c : kAllSixClasses) counts[std::string(to_string(c))] = 0;
  for (const auto& g : sys.ball(o.radius)) {
    const auto c = classify(sys, s, g);
    ++counts[std::string(to_string(c))];
    rows.push_back({{"element", sys.label(g)},
                    {"class", to_string(c)},
                    {"relation", relation_text(c)},
                    {"side", to_string(halfspace_side(sys, s, g))}});
  }
  json totals = json::object();
  for (auto c : kAllSixClasses) totals[std::string(to_string(c))] = counts[std::string(to_string(c))];
  result = {{"generator", sys.name(s)}, {"radius", o.radius}, {"counts", std::move(totals)}, {"table", std::move(rows)}};
  return kExitOk;
}

const std::vector<std::string>& palette() {
  static const std::vector<std::string> colors = {"#4e79a7", "#e15759", "#59a14f", "#f28e2b",
                                                  "#b07aa1", "#76b7b2", "#edc948", "#9c755f"};
  return colors;
}

std::string quote(const std::string& text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

template <Group G>
std::string render_dot(const G& group, const std::vector<typename G::Element>& ball,
                       const std::vector<std::pair<std::string, typename G::Element>>& steps,
                       const std::vector<std::string>& colors_by_node, const std::string& color_mode) {
  using E = typename G::Element;
  std::map<E, std::size_t> index;
  for (std::size_t i = 0; i < ball.size(); ++i) index.emplace(ball[i], i);

  std::set<std::string> distinct(colors_by_node.begin(), colors_by_node.end());
  std::map<std::string, std::string> fill;
  std::size_t next = 0;
  for (const auto& value : distinct) fill[value] = palette()[next++ % palette().size()];

  std::ostringstream dot;
  dot << "graph chambers {\n";
  dot << "  graph [color_by=" << quote(color_mode) << "];\n";
  dot << "  node [style=filled];\n";
  for (std::size_t i = 0; i < ball.size(); ++i) {
    dot << "  n" << i << " [label=" << quote(group.label(ball[i])) << ", value=" << quote(colors_by_node[i])
        << ", fillcolor=" << quote(fill[colors_by_node[i]]) << "];\n";
  }
  std::set<std::tuple<std::size_t, std::size_t, std::string>> edges;
  for (std::size_t i = 0; i < ball.size(); ++i) {
    for (const auto& [name, step] : steps) {
      auto it = index.find(group.multiply(ball[i], step));
      if (it == index.end() || it->second == i) continue;
      edges.emplace(std::min(i, it->second), std::max(i, it->second), name);
    }
  }
  for (const auto& [a, b, name] : edges) dot << "  n" << a << " -- n" << b << " [label=" << quote(name) << "];\n";
  dot << "}\n";
  return dot.str();
}

std::string export_dot(const Input& input, const Options& o) {
  if (o.color != "symbol" && o.color != "side" && o.color != "class") {
    throw ConfigError("--color must be symbol, side or class");
  }
  if (const auto* sys = std::get_if<CoxeterSystem>(&input)) {
    check_radius(*sys, o.radius);
    const auto ball = sys->ball(o.radius);
    std::vector<std::pair<std::string, CanonicalElement>> steps;
    for (std::size_t i = 0; i < sys->rank(); ++i) {
      steps.emplace_back(sys->name(static_cast<Generator>(i)), sys->generator_element(static_cast<Generator>(i)));
    }
    std::vector<std::string> colors;
    const auto s = require_generator(*sys, o);
    std::optional<Symbol<CanonicalElement>> m;
    if (o.color == "symbol") m = coxeter_symbol(*sys, s, o.symbol);
    for (const auto& g : ball) {
      if (o.color == "symbol") {
        colors.push_back(to_string((*m)(g)));
      } else if (o.color == "side") {
        colors.push_back(std::string(to_string(halfspace_side(*sys, s, g))));
      } else {
        colors.push_back(std::string(to_string(classify(*sys, s, g))));
      }
    }
    return render_dot(*sys, ball, steps, colors, o.color);
  }
  if (const auto* gp = std::get_if<GraphProduct>(&input)) {
    const auto ball = gp->ball(o.radius);
    std::vector<std::pair<std::string, GPElement>> steps;
    for (std::size_t i = 0; i < gp->rank(); ++i) {
      const auto v = static_cast<Generator>(i);
      if (gp->order(v) == kInfiniteCyclic) {
        steps.emplace_back(gp->name(v), gp->syllable(v, 1));
      } else {
        for (std::uint32_t e = 1; e < gp->order(v); ++e) steps.emplace_back(gp->name(v), gp->syllable(v, e));
      }
    }
    const auto u = require_vertex(*gp, o);
    const GraphProductBuilding building(*gp);
    const auto& type = gp->type_system();
    std::optional<Symbol<GPElement>> m;
    if (o.color == "symbol") m = gp_symbol(*gp, u, o).symbol;
    std::vector<std::string> colors;
    for (const auto& g : ball) {
      const auto w = building.weyl_distance(building.base_chamber(), g);
      if (o.color == "symbol") {
        colors.push_back(to_string((*m)(g)));
      } else if (o.color == "side") {
        colors.push_back(std::string(to_string(halfspace_side(type, u, w))));
      } else {
        colors.push_back(std::string(to_string(classify(type, u, w))));
      }
    }
    return render_dot(*gp, ball, steps, colors, o.color);
  }
  throw ConfigError("export-dot needs a coxeter or graph_product descriptor");
}

json config_echo(const std::string& command, const Input& input, const Options& o) {
  json echo = {{"config", o.config}, {"descriptor", descriptor_json(input)}};
  if (!o.generator.empty()) echo["generator"] = o.generator;
  echo["radius"] = o.radius;
  if (command == "verify-cotlar" || command == "residual") echo["g0"] = o.g0;
  if (command == "verify-cotlar" || command == "residual" || command == "lp-ratio") echo["symbol"] = o.symbol;
  if (!o.values.empty()) echo["values"] = o.values;
  if (command == "residual" || command == "lp-ratio") {
    echo["seed"] = o.seed;
    echo["samples"] = o.samples;
    echo["support"] = o.support;
  }
  if (command == "residual") echo["numeric"] = o.numeric;
  if (command == "lp-ratio") echo["k"] = o.k;
  if (command == "axioms") echo["triple_radius"] = o.triple_radius.value_or(std::min<std::size_t>(o.radius, 3));
  return echo;
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--config", o.config, "Descriptor JSON file")->required();
  sub->add_option("--generator", o.generator, "Generator or vertex name");
  sub->add_option("--radius", o.radius, "Ball radius");
  sub->add_flag("--timing", o.timing, "Print elapsed time on stderr");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Cotlar identity and nested-condition verifier for Coxeter groups and buildings", "cotlar"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  auto* nested = app.add_subcommand("nested", "Check the nested condition relative to a generator");
  add_common(nested, o);

  auto* verify = app.add_subcommand("verify-cotlar", "Brute-force the Cotlar identity on a ball");
  add_common(verify, o);
  verify->add_option("--g0", o.g0, "parabolic | trivial | list:NAMES");
  verify->add_option("--symbol", o.symbol, "auto | mw | extension | lattice | building | finer");
  verify->add_option("--values", o.values, "Finer-model values c0,c1,...");

  auto* residual = app.add_subcommand("residual", "Operator Cotlar residual on seeded group-algebra elements");
  add_common(residual, o);
  residual->add_option("--g0", o.g0, "parabolic | trivial | list:NAMES");
  residual->add_option("--symbol", o.symbol, "auto | mw | extension | building | finer");
  residual->add_option("--values", o.values, "Finer-model values c0,c1,...");
  residual->add_option("--seed", o.seed, "Sampling seed");
  residual->add_option("--samples", o.samples, "Number of samples (default 100)");
  residual->add_option("--support", o.support, "Support size of each sample");
  residual->add_option("--numeric", o.numeric, "exact | float");

  auto* ratio = app.add_subcommand("lp-ratio", "Sampled L_p ratios of a multiplier for p = 2k");
  add_common(ratio, o);
  ratio->add_option("--symbol", o.symbol, "auto | mw | extension | building | finer");
  ratio->add_option("--values", o.values, "Finer-model values c0,c1,...");
  ratio->add_option("--seed", o.seed, "Sampling seed");
  ratio->add_option("--samples", o.samples, "Number of samples (default 1000)");
  ratio->add_option("--support", o.support, "Support size of each sample");
  ratio->add_option("--k", o.k, "Exponent k, p = 2k");

  auto* axioms = app.add_subcommand("axioms", "Check building axioms on a ball of chambers");
  add_common(axioms, o);
  axioms->add_option("--triple-radius", o.triple_radius, "Radius for triple checks (default min(radius, 3))");

  auto* cls = app.add_subcommand("classify", "Six-class table of a ball relative to a generator");
  add_common(cls, o);

  auto* dot = app.add_subcommand("export-dot", "Chamber adjacency graph in DOT format");
  add_common(dot, o);
  dot->add_option("--color", o.color, "symbol | side | class");
  dot->add_option("--symbol", o.symbol, "auto | mw | extension | building | finer");
  dot->add_option("--values", o.values, "Finer-model values c0,c1,...");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  }

  const auto* chosen = app.get_subcommands().front();
  const std::string command = chosen->get_name();
  const auto start = std::chrono::steady_clock::now();
  try {
    const auto input = load_descriptor(o.config, env_cap());
    int code = kExitOk;
    if (command == "export-dot") {
      const auto text = export_dot(input, o);
      out << text;
    } else {
      json result;
      if (command == "nested") code = cmd_nested(input, o, result);
      if (command == "verify-cotlar") code = cmd_verify(input, o, result);
      if (command == "residual") code = cmd_residual(input, o, result);
      if (command == "lp-ratio") code = cmd_lp_ratio(input, o, result);
      if (command == "axioms") code = cmd_axioms(input, o, result);
      if (command == "classify") code = cmd_classify(input, o, result);
      json envelope = {{"schema_version", kSchemaVersion},
                       {"tool", "cotlar"},
                       {"version", kVersion},
                       {"command", command},
                       {"config", config_echo(command, input, o)},
                       {"exit_code", code},
                       {"result", std::move(result)}};
      out << envelope.dump(2) << "\n";
    }
    if (o.timing) {
      const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
      err << "elapsed_ms: " << elapsed.count() << "\n";
    }
    return code;
  } catch (const WordTooLong& e) {
    err << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::DecompositionFailed ? kExitCap : kExitConfig;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  }
}

}  // namespace cotlar::cli
