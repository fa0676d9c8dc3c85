#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "fgl/graph.hpp"

namespace fgl {

enum class GraphFormat { Json, Graph6 };

/// Header-free graph6.
std::string to_graph6(const Graph& g);
/// Accepts an optional ">>graph6<<" header and trailing whitespace. Throws
/// ParseError.
Graph from_graph6(std::string_view text);

/// {"v":N,"edges":[[i,j],...]} with i < j, edges sorted, no whitespace.
std::string to_json_graph(const Graph& g);
/// Throws ParseError on malformed input, loops or out-of-range vertices.
Graph from_json_graph(std::string_view text);

/// ".g6"/".graph6" -> Graph6, anything else -> Json.
GraphFormat format_for_path(const std::filesystem::path& path);
GraphFormat parse_format(std::string_view name);

std::string read_file(const std::filesystem::path& path);
/// Writes to a temporary sibling and renames it into place.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

void write_graph(const std::filesystem::path& path, const Graph& g, GraphFormat format);
/// Picks the parser from the content: JSON if it starts with '{'.
Graph read_graph(const std::filesystem::path& path);

}  // namespace fgl
