#include "lrw1/io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "lrw1/errors.hpp"

namespace lrw1 {

GraphFormat format_from_string(std::string_view text) {
  if (text == "dimacs") return GraphFormat::Dimacs;
  if (text == "json") return GraphFormat::Json;
  throw InputError("unknown graph format '" + std::string(text) + "'");
}

namespace {

struct Token {
  std::string_view text;
  int column = 0;  // 1-based
};

std::vector<Token> split_line(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

long long to_integer(const Token& t, int line) {
  long long value = 0;
  const char* end = t.text.data() + t.text.size();
  auto [ptr, ec] = std::from_chars(t.text.data(), end, value);
  if (ec != std::errc() || ptr != end) throw ParseError("expected an integer, got '" + std::string(t.text) + "'", line, t.column);
  return value;
}

}  // namespace

Graph parse_dimacs(std::string_view text, std::vector<std::string>* warnings) {
  auto warn = [&](const std::string& w) {
    if (warnings) warnings->push_back(w);
  };
  int n = -1;
  long long declared_edges = 0;
  Graph g;
  std::set<Edge> seen;
  std::vector<std::pair<long long, std::pair<std::string, int>>> names;  // index, (name, line)
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    const std::vector<Token> tok = split_line(line);
    if (tok.empty()) continue;
    const std::string_view kind = tok[0].text;
    if (kind == "c") {
      if (tok.size() >= 2 && tok[1].text == "name") {
        if (tok.size() != 4) throw ParseError("expected 'c name <index> <name>'", line_no, tok[0].column);
        names.push_back({to_integer(tok[2], line_no), {std::string(tok[3].text), line_no}});
      }
      continue;
    }
    if (kind == "p") {
      if (n >= 0) throw ParseError("second problem line", line_no, tok[0].column);
      if (tok.size() != 4) throw ParseError("expected 'p lrw1 <n> <m>'", line_no, tok[0].column);
      if (tok[1].text != "lrw1" && tok[1].text != "edge")
        throw ParseError("unknown problem type '" + std::string(tok[1].text) + "'", line_no, tok[1].column);
      const long long nn = to_integer(tok[2], line_no);
      declared_edges = to_integer(tok[3], line_no);
      if (nn < 0 || nn > 1'000'000) throw ParseError("vertex count out of range", line_no, tok[2].column);
      if (declared_edges < 0) throw ParseError("negative edge count", line_no, tok[3].column);
      n = static_cast<int>(nn);
      g = Graph(n);
      continue;
    }
    if (kind == "e") {
      if (n < 0) throw ParseError("edge before the problem line", line_no, tok[0].column);
      if (tok.size() != 3) throw ParseError("expected 'e <u> <v>'", line_no, tok[0].column);
      int ends[2];
      for (int i = 0; i < 2; ++i) {
        const Token& t = tok[static_cast<std::size_t>(i + 1)];
        const long long v = to_integer(t, line_no);
        if (v < 1 || v > n) throw ParseError("vertex " + std::string(t.text) + " out of range 1.." + std::to_string(n), line_no, t.column);
        ends[i] = static_cast<int>(v) - 1;
      }
      if (ends[0] == ends[1]) throw ParseError("self-loop", line_no, tok[1].column);
      const Edge e{std::min(ends[0], ends[1]), std::max(ends[0], ends[1])};
      if (!seen.insert(e).second) {
        warn("line " + std::to_string(line_no) + ": duplicate edge " + std::to_string(e.first + 1) + " " +
             std::to_string(e.second + 1) + " ignored");
        continue;
      }
      g.add_edge(e.first, e.second);
      continue;
    }
    throw ParseError("unknown line type '" + std::string(kind) + "'", line_no, tok[0].column);
  }
  if (n < 0) throw ParseError("missing problem line", line_no, 1);
  if (static_cast<long long>(seen.size()) != declared_edges)
    warn("header declares " + std::to_string(declared_edges) + " edges, read " + std::to_string(seen.size()));
  if (!names.empty()) {
    std::vector<std::string> all(static_cast<std::size_t>(n));
    std::vector<bool> given(static_cast<std::size_t>(n), false);
    for (const auto& [index, entry] : names) {
      if (index < 1 || index > n) throw ParseError("named vertex out of range", entry.second, 1);
      all[static_cast<std::size_t>(index - 1)] = entry.first;
      given[static_cast<std::size_t>(index - 1)] = true;
    }
    for (int v = 0; v < n; ++v)
      if (!given[static_cast<std::size_t>(v)]) all[static_cast<std::size_t>(v)] = std::to_string(v + 1);
    g.set_names(std::move(all));
  }
  return g;
}

std::string to_dimacs(const Graph& g) {
  std::ostringstream out;
  const std::vector<Edge> edges = g.edges();
  out << "p lrw1 " << g.order() << ' ' << edges.size() << '\n';
  if (g.has_names())
    for (int v = 0; v < g.order(); ++v) out << "c name " << v + 1 << ' ' << g.name(v) << '\n';
  for (auto [u, v] : edges) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json j;
  j["n"] = g.order();
  j["edges"] = nlohmann::json::array();
  for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
  if (g.has_names()) j["names"] = g.names();
  return j;
}

Graph graph_from_json(const nlohmann::json& j) {
  try {
    const int n = j.at("n").get<int>();
    if (n < 0) throw InputError("negative vertex count");
    Graph g(n);
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw InputError("an edge must be a pair");
      const int u = e[0].get<int>();
      const int v = e[1].get<int>();
      if (u < 0 || v < 0 || u >= n || v >= n) throw InputError("edge endpoint out of range");
      g.add_edge(u, v);
    }
    if (j.contains("names")) {
      auto names = j.at("names").get<std::vector<std::string>>();
      if (static_cast<int>(names.size()) != n) throw InputError("names must list every vertex");
      g.set_names(std::move(names));
    }
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed graph JSON: ") + e.what());
  }
}

namespace {

nlohmann::json blocks_to_json(const std::vector<int>& anchors, const std::vector<ThreadBlock>& blocks) {
  nlohmann::json j;
  j["anchors"] = anchors;
  j["blocks"] = nlohmann::json::array();
  for (const ThreadBlock& b : blocks) {
    std::vector<std::string> labels;
    for (Side s : b.labels) labels.push_back(to_string(s));
    j["blocks"].push_back({{"order", b.order}, {"labels", labels}});
  }
  return j;
}

}  // namespace

nlohmann::json decomposition_to_json(const ThreadDecomposition& d) { return blocks_to_json(d.anchors, d.blocks); }

nlohmann::json decomposition_to_json(const NecklaceDecomposition& d) {
  nlohmann::json j = blocks_to_json(d.anchors, d.blocks);
  j["cyclic"] = true;
  return j;
}

ThreadDecomposition thread_decomposition_from_json(const nlohmann::json& j) {
  try {
    ThreadDecomposition d;
    d.anchors = j.at("anchors").get<std::vector<int>>();
    for (const auto& b : j.at("blocks")) {
      ThreadBlock block;
      block.order = b.at("order").get<std::vector<int>>();
      for (const auto& s : b.at("labels")) block.labels.push_back(side_from_string(s.get<std::string>()));
      if (block.labels.size() != block.order.size()) throw InputError("labels and order differ in length");
      d.blocks.push_back(std::move(block));
    }
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed decomposition JSON: ") + e.what());
  }
}

Graph parse_graph(std::string_view text, GraphFormat format, std::vector<std::string>* warnings) {
  if (format == GraphFormat::Dimacs) return parse_dimacs(text, warnings);
  try {
    return graph_from_json(nlohmann::json::parse(text));
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

std::string format_graph(const Graph& g, GraphFormat format) {
  return format == GraphFormat::Dimacs ? to_dimacs(g) : graph_to_json(g).dump() + "\n";
}

GraphFormat format_for_path(const std::string& path) {
  const std::string ext = ".json";
  const bool json = path.size() >= ext.size() && path.compare(path.size() - ext.size(), ext.size(), ext) == 0;
  return json ? GraphFormat::Json : GraphFormat::Dimacs;
}

Graph read_graph(const std::string& path, std::vector<std::string>* warnings) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str(), format_for_path(path), warnings);
}

void write_graph(const Graph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << format_graph(g, format_for_path(path));
}

}  // namespace lrw1
