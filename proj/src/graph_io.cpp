#include "fgl/graph_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fgl/error.hpp"

namespace fgl {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

void append_size(std::string& out, std::uint64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
    return;
  }
  const int groups = n <= 258047 ? 3 : 6;
  out.append(groups == 3 ? 1 : 2, '~');
  for (int i = groups - 1; i >= 0; --i) out.push_back(static_cast<char>(((n >> (6 * i)) & 0x3f) + 63));
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const Vertex n = g.order();
  std::string out;
  append_size(out, n);
  int filled = 0;
  unsigned chunk = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1u : 0u);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + 63));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + 63));
  return out;
}

Graph from_graph6(std::string_view text) {
  if (text.starts_with(kGraph6Header)) text.remove_prefix(kGraph6Header.size());
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  std::size_t pos = 0;
  auto next6 = [&]() -> unsigned {
    if (pos >= text.size()) throw Error(Errc::ParseError, "graph6 data is truncated");
    const auto ch = static_cast<unsigned char>(text[pos++]);
    if (ch < 63 || ch > 126) throw Error(Errc::ParseError, "graph6 byte out of range");
    return ch - 63u;
  };
  std::uint64_t n = 0;
  if (text.empty()) throw Error(Errc::ParseError, "empty graph6 string");
  if (text[0] != '~') {
    n = next6();
  } else {
    ++pos;
    int groups = 3;
    if (pos < text.size() && text[pos] == '~') {
      ++pos;
      groups = 6;
    }
    for (int i = 0; i < groups; ++i) n = (n << 6) | next6();
  }
  if (n > 0xffffffffull) throw Error(Errc::ParseError, "graph6 order too large");
  Graph g(static_cast<Vertex>(n));
  unsigned chunk = 0;
  int left = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      if (left == 0) {
        chunk = next6();
        left = 6;
      }
      --left;
      if ((chunk >> left) & 1u) g.add_edge(i, j);
    }
  }
  if (pos != text.size()) throw Error(Errc::ParseError, "trailing bytes after graph6 data");
  return g;
}

std::string to_json_graph(const Graph& g) {
  std::string out = "{\"v\":" + std::to_string(g.order()) + ",\"edges\":[";
  bool first = true;
  for (const auto& [i, j] : g.edges()) {
    if (!first) out.push_back(',');
    first = false;
    out += "[" + std::to_string(i) + "," + std::to_string(j) + "]";
  }
  out += "]}";
  return out;
}

Graph from_json_graph(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("v") || !doc["v"].is_number_unsigned() || !doc.contains("edges") ||
      !doc["edges"].is_array()) {
    throw Error(Errc::ParseError, "graph JSON needs an unsigned \"v\" and an \"edges\" array");
  }
  const auto v = doc["v"].get<std::uint64_t>();
  if (v > 0xffffffffull) throw Error(Errc::ParseError, "vertex count too large");
  Graph g(static_cast<Vertex>(v));
  for (const auto& edge : doc["edges"]) {
    if (!edge.is_array() || edge.size() != 2 || !edge[0].is_number_unsigned() || !edge[1].is_number_unsigned()) {
      throw Error(Errc::ParseError, "edge must be a pair of vertex ids");
    }
    const auto i = edge[0].get<std::uint64_t>();
    const auto j = edge[1].get<std::uint64_t>();
    if (i >= v || j >= v) throw Error(Errc::ParseError, "edge endpoint out of range");
    if (i == j) throw Error(Errc::ParseError, "loop at vertex " + std::to_string(i));
    g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  }
  return g;
}

GraphFormat format_for_path(const std::filesystem::path& path) {
  const auto ext = path.extension().string();
  return ext == ".g6" || ext == ".graph6" ? GraphFormat::Graph6 : GraphFormat::Json;
}

GraphFormat parse_format(std::string_view name) {
  if (name == "json") return GraphFormat::Json;
  if (name == "graph6") return GraphFormat::Graph6;
  throw Error(Errc::ParseError, "format must be json or graph6");
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::IoError, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(Errc::IoError, "cannot write " + tmp.string());
    out << content;
    if (!out.flush()) throw Error(Errc::IoError, "short write to " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error(Errc::IoError, "cannot rename " + tmp.string() + ": " + ec.message());
}

void write_graph(const std::filesystem::path& path, const Graph& g, GraphFormat format) {
  write_file_atomic(path, (format == GraphFormat::Graph6 ? to_graph6(g) : to_json_graph(g)) + "\n");
}

Graph read_graph(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  const auto first = std::find_if(text.begin(), text.end(), [](unsigned char c) { return !std::isspace(c); });
  if (first != text.end() && *first == '{') return from_json_graph(text);
  return from_graph6(std::string_view(text).substr(static_cast<std::size_t>(first - text.begin())));
}

}  // namespace fgl
