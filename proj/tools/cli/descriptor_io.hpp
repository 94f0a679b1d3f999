#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>

#include <json.hpp>

#include "cotlar/buildings.hpp"
#include "cotlar/coxeter.hpp"
#include "cotlar/graph_product.hpp"

namespace cotlar::cli {

/// Input of every subcommand: a Coxeter system, a graph product, or an
/// explicit building table.
using Input = std::variant<CoxeterSystem, GraphProduct, TableBuilding>;

/// Parses a descriptor. `max_word_len` overrides the descriptor's own cap.
/// Throws cotlar::Error(InvalidDescriptor, ...) on malformed input.
Input parse_descriptor(const nlohmann::ordered_json& doc, std::optional<std::size_t> max_word_len = std::nullopt);

/// Reads and parses a descriptor file.
Input load_descriptor(const std::string& path, std::optional<std::size_t> max_word_len = std::nullopt);

nlohmann::ordered_json to_json(const CoxeterSystem& system);
nlohmann::ordered_json to_json(const GraphProduct& group);

}  // namespace cotlar::cli
