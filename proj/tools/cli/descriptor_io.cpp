#include "descriptor_io.hpp"

#include <fstream>

#include "cotlar/error.hpp"

namespace cotlar::cli {

using json = nlohmann::ordered_json;

namespace {

[[noreturn]] void bad(const std::string& message) { throw Error(ErrorCode::InvalidDescriptor, message); }

const json& field(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) bad(std::string("missing field '") + key + "'");
  return doc.at(key);
}

std::vector<std::string> string_list(const json& value, const char* what) {
  if (!value.is_array()) bad(std::string(what) + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& v : value) {
    if (!v.is_string()) bad(std::string(what) + " must be an array of strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

std::uint32_t matrix_entry(const json& v) {
  if (v.is_string()) {
    if (v.get<std::string>() == "inf") return kInfiniteOrder;
    bad("matrix entries must be positive integers or \"inf\"");
  }
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0 || v.get<std::int64_t>() > 1'000'000) {
    bad("matrix entries must be positive integers or \"inf\"");
  }
  return static_cast<std::uint32_t>(v.get<std::int64_t>());
}

CoxeterSystem parse_coxeter(const json& doc, std::optional<std::size_t> max_word_len) {
  auto names = string_list(field(doc, "generators"), "generators");
  const auto& m = field(doc, "matrix");
  if (!m.is_array()) bad("matrix must be an array of rows");
  std::vector<std::vector<std::uint32_t>> matrix;
  for (const auto& row : m) {
    if (!row.is_array()) bad("matrix must be an array of rows");
    auto& out = matrix.emplace_back();
    for (const auto& v : row) out.push_back(matrix_entry(v));
  }
  std::size_t cap = CoxeterSystem::kDefaultMaxWordLen;
  if (doc.contains("max_word_len")) {
    const auto& v = doc.at("max_word_len");
    if (!v.is_number_unsigned() || v.get<std::size_t>() == 0) bad("max_word_len must be a positive integer");
    cap = v.get<std::size_t>();
  }
  if (max_word_len) cap = *max_word_len;
  return CoxeterSystem::validate(std::move(names), matrix, cap);
}

GraphProduct parse_graph_product(const json& doc) {
  const auto& vs = field(doc, "vertices");
  if (!vs.is_array()) bad("vertices must be an array");
  std::vector<GraphProduct::Vertex> vertices;
  for (const auto& v : vs) {
    const auto& name = field(v, "name");
    if (!name.is_string()) bad("vertex name must be a string");
    const auto& order = field(v, "order");
    GraphProduct::Vertex vertex{name.get<std::string>(), 2};
    if (order.is_string() && order.get<std::string>() == "Z") {
      vertex.order = kInfiniteCyclic;
    } else if (order.is_number_integer() && order.get<std::int64_t>() >= 2 && order.get<std::int64_t>() <= 1'000'000) {
      vertex.order = static_cast<std::uint32_t>(order.get<std::int64_t>());
    } else {
      bad("vertex order must be an integer >= 2 or \"Z\"");
    }
    vertices.push_back(std::move(vertex));
  }
  std::vector<std::pair<std::string, std::string>> edges;
  if (doc.contains("edges")) {
    for (const auto& e : doc.at("edges")) {
      auto ends = string_list(e, "edge");
      if (ends.size() != 2) bad("each edge must list two vertex names");
      edges.emplace_back(ends[0], ends[1]);
    }
  }
  return GraphProduct::validate(std::move(vertices), edges);
}

TableBuilding parse_table(const json& doc, std::optional<std::size_t> max_word_len) {
  auto type = parse_coxeter(field(doc, "type_system"), max_word_len);
  auto names = string_list(field(doc, "chambers"), "chambers");
  const auto& rows = field(doc, "delta");
  if (!rows.is_array()) bad("delta must be an array of rows");
  std::vector<std::vector<Word>> delta;
  for (const auto& row : rows) {
    if (!row.is_array()) bad("delta must be an array of rows");
    auto& out = delta.emplace_back();
    for (const auto& w : row) out.push_back(type.parse_word(string_list(w, "delta entry")));
  }
  return TableBuilding(std::move(type), std::move(names), delta);
}

}  // namespace

Input parse_descriptor(const json& doc, std::optional<std::size_t> max_word_len) {
  const auto& type = field(doc, "type");
  if (!type.is_string()) bad("type must be a string");
  const auto kind = type.get<std::string>();
  if (kind == "coxeter") return parse_coxeter(doc, max_word_len);
  if (kind == "graph_product") return parse_graph_product(doc);
  if (kind == "building_table") return parse_table(doc, max_word_len);
  bad("unknown descriptor type '" + kind + "'");
}

Input load_descriptor(const std::string& path, std::optional<std::size_t> max_word_len) {
  std::ifstream in(path);
  if (!in) bad("cannot open '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    bad("'" + path + "' is not valid JSON: " + e.what());
  }
  return parse_descriptor(doc, max_word_len);
}

json to_json(const CoxeterSystem& system) {
  json matrix = json::array();
  for (std::size_t i = 0; i < system.rank(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < system.rank(); ++j) {
      const auto m = system.order(static_cast<Generator>(i), static_cast<Generator>(j));
      if (m == kInfiniteOrder) {
        row.push_back("inf");
      } else {
        row.push_back(m);
      }
    }
    matrix.push_back(std::move(row));
  }
  return {{"type", "coxeter"},
          {"generators", system.generators()},
          {"matrix", std::move(matrix)},
          {"max_word_len", system.max_word_len()}};
}

json to_json(const GraphProduct& group) {
  json vertices = json::array();
  for (const auto& v : group.vertices()) {
    json order = v.order == kInfiniteCyclic ? json("Z") : json(v.order);
    vertices.push_back({{"name", v.name}, {"order", std::move(order)}});
  }
  json edges = json::array();
  for (const auto& [a, b] : group.edges()) edges.push_back({group.name(a), group.name(b)});
  return {{"type", "graph_product"}, {"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

}  // namespace cotlar::cli
