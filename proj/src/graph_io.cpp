#include "csfword/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "csfword/error.hpp"

namespace csfword {

namespace {

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::string json_token(const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw ParseError("graph JSON: vertex labels must be strings or integers", 0);
}

}  // namespace

SimpleGraph parse_graph(std::string_view text) {
  auto body = trim(text);
  if (!body.empty() && body.front() == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(body);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(std::string("graph JSON: ") + e.what(), e.byte);
    }
    return graph_from_json(j);
  }
  return parse_graph_text(text);
}

SimpleGraph parse_graph_text(std::string_view text) {
  SimpleGraph g;
  bool have_vertices = false;
  std::size_t line_no = 0, offset = 0;
  while (offset <= text.size()) {
    auto nl = text.find('\n', offset);
    auto raw = text.substr(offset, nl == std::string_view::npos ? text.size() - offset : nl - offset);
    ++line_no;
    auto line = trim(raw);
    const std::size_t line_offset = offset;
    offset = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    if (line.empty() || line.front() == '#') continue;

    auto colon = line.find(':');
    if (colon == std::string_view::npos)
      throw ParseError("expected 'vertices:' or 'edge:'", line_offset, line_no);
    auto key = trim(line.substr(0, colon));
    auto rest = Word::parse(line.substr(colon + 1), WordFormat::tokens);
    if (key == "vertices") {
      if (have_vertices) throw ParseError("duplicate 'vertices:' line", line_offset, line_no);
      have_vertices = true;
      for (const auto& v : rest) g.add_vertex(v);
    } else if (key == "edge") {
      if (!have_vertices) throw ParseError("'edge:' before 'vertices:'", line_offset, line_no);
      if (rest.size() != 2) throw ParseError("'edge:' needs exactly two endpoints", line_offset, line_no);
      if (!g.has_vertex(rest[0]) || !g.has_vertex(rest[1]))
        throw ParseError("edge endpoint is not a declared vertex", line_offset, line_no);
      if (rest[0] == rest[1]) throw ParseError("self-loop", line_offset, line_no);
      g.add_edge(rest[0], rest[1]);
    } else {
      throw ParseError("unknown key '" + std::string(key) + "'", line_offset, line_no);
    }
  }
  if (!have_vertices) throw ParseError("missing 'vertices:' line", 0, 1);
  return g;
}

SimpleGraph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
    throw ParseError("graph JSON: expected an object with a 'vertices' array", 0);
  SimpleGraph g;
  for (const auto& v : j["vertices"]) g.add_vertex(Letter(json_token(v)));
  if (j.contains("edges")) {
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2) throw ParseError("graph JSON: edges are [u, v] pairs", 0);
      Letter u(json_token(e[0])), v(json_token(e[1]));
      if (!g.has_vertex(u) || !g.has_vertex(v))
        throw ParseError("graph JSON: edge endpoint is not a declared vertex", 0);
      if (u == v) throw ParseError("graph JSON: self-loop", 0);
      g.add_edge(u, v);
    }
  }
  return g;
}

std::string format_graph(const SimpleGraph& g) {
  std::string out = "vertices:";
  for (const auto& v : g.vertices()) out += " " + v.token();
  out += '\n';
  for (const auto& [a, b] : g.edges()) out += "edge: " + a.token() + " " + b.token() + "\n";
  return out;
}

nlohmann::json graph_to_json(const SimpleGraph& g) {
  nlohmann::json vs = nlohmann::json::array(), es = nlohmann::json::array();
  for (const auto& v : g.vertices()) vs.push_back(v.token());
  for (const auto& [a, b] : g.edges()) es.push_back({a.token(), b.token()});
  return {{"vertices", vs}, {"edges", es}};
}

SimpleGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open graph file '" + path + "'", 0);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_graph(ss.str());
}

}  // namespace csfword
