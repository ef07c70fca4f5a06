#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "lrw1/graph.hpp"
#include "lrw1/thread.hpp"

namespace lrw1 {

enum class GraphFormat { Dimacs, Json };

GraphFormat format_from_string(std::string_view text);  // "dimacs" or "json"; InputError otherwise

/// Text format:
///   c <comment>
///   c name <index> <name>     optional vertex name, 1-based index
///   p lrw1 <n> <m>            exactly once, before any edge
///   e <u> <v>                 1-based endpoints
/// Repeated edges are dropped with a warning, as is a header edge count that
/// disagrees with the edges read. Throws ParseError with line and column.
Graph parse_dimacs(std::string_view text, std::vector<std::string>* warnings = nullptr);
std::string to_dimacs(const Graph& g);

/// {"n": n, "edges": [[u, v], ...], "names": [...]} with 0-based ids; names optional.
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

/// {"anchors": [...], "blocks": [{"order": [...], "labels": ["R", "LR", ..., "L"]}]}
nlohmann::json decomposition_to_json(const ThreadDecomposition& d);
nlohmann::json decomposition_to_json(const NecklaceDecomposition& d);
ThreadDecomposition thread_decomposition_from_json(const nlohmann::json& j);

Graph parse_graph(std::string_view text, GraphFormat format, std::vector<std::string>* warnings = nullptr);
std::string format_graph(const Graph& g, GraphFormat format);

/// The format follows the extension (.json is JSON, anything else DIMACS).
Graph read_graph(const std::string& path, std::vector<std::string>* warnings = nullptr);
void write_graph(const Graph& g, const std::string& path);
GraphFormat format_for_path(const std::string& path);

}  // namespace lrw1
