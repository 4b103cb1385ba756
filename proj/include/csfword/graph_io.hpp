#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "csfword/graph.hpp"

namespace csfword {

/// Text format:
///   vertices: 1 2 3
///   edge: 1 2
///   edge: 2 3
/// Blank lines and lines starting with '#' are ignored. Input whose first
/// non-space character is '{' is read as JSON
///   {"vertices": ["1", "2"], "edges": [["1", "2"]]}.
SimpleGraph parse_graph(std::string_view text);
SimpleGraph parse_graph_text(std::string_view text);
SimpleGraph graph_from_json(const nlohmann::json& j);

/// Sorted, deterministic text rendering (round-trips through parse_graph).
std::string format_graph(const SimpleGraph& g);
nlohmann::json graph_to_json(const SimpleGraph& g);

SimpleGraph read_graph_file(const std::string& path);

}  // namespace csfword
