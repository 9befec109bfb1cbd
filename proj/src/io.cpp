#include "psg/io.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <set>
#include <sstream>

namespace psg {

namespace {

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char ch : text) {
    if (ch == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  return lines;
}

std::string strip_comment(const std::string& line) {
  const auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

[[noreturn]] void parse_error(std::size_t line, const std::string& reason) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + reason, line);
}

std::optional<std::size_t> to_index(std::string_view tok) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) return std::nullopt;
  return value;
}

std::size_t index_or_fail(std::string_view tok, std::size_t line) {
  const auto v = to_index(tok);
  if (!v) parse_error(line, "expected a non-negative integer, got '" + std::string(tok) + "'");
  return *v;
}

int int_or_fail(std::string_view tok, std::size_t line) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    parse_error(line, "expected an integer, got '" + std::string(tok) + "'");
  return value;
}

Sign sign_or_fail(std::string_view tok, std::size_t line) {
  if (tok == "+") return Sign::Plus;
  if (tok == "-") return Sign::Minus;
  parse_error(line, "expected + or -, got '" + std::string(tok) + "'");
}

}  // namespace

GraphSpec parse_graph_spec(std::string_view text) {
  const auto lines = split_lines(text);
  GraphSpec spec;
  std::map<std::size_t, std::pair<std::vector<VertexId>, std::size_t>> rotations;  // id -> (nbrs, line)
  std::vector<std::pair<SignedEdge, std::size_t>> edges;
  std::optional<std::pair<std::vector<VertexId>, std::size_t>> outer;
  bool header = false;

  for (std::size_t k = 0; k < lines.size(); ++k) {
    const std::size_t line = k + 1;
    const auto tok = tokens(strip_comment(lines[k]));
    if (tok.empty()) continue;
    if (!header) {
      if (tok.size() != 2 || tok[0] != "psg") parse_error(line, "missing 'psg 1' header");
      if (tok[1] != "1") parse_error(line, "unsupported format version " + tok[1]);
      header = true;
      continue;
    }
    if (tok[0] == "vertex") {
      if (tok.size() < 3 || tok[2] != ":") parse_error(line, "expected 'vertex <id> : <neighbours>'");
      const std::size_t id = index_or_fail(tok[1], line);
      std::vector<VertexId> nbrs;
      for (std::size_t t = 3; t < tok.size(); ++t) nbrs.push_back(index_or_fail(tok[t], line));
      if (!rotations.emplace(id, std::make_pair(std::move(nbrs), line)).second)
        parse_error(line, "vertex " + tok[1] + " declared twice");
    } else if (tok[0] == "edge") {
      if (tok.size() != 3 && tok.size() != 4) parse_error(line, "expected 'edge <u> <v> [+|-]'");
      const VertexId u = index_or_fail(tok[1], line);
      const VertexId v = index_or_fail(tok[2], line);
      if (u == v) parse_error(line, "loop edge " + tok[1] + " " + tok[2]);
      const Sign s = tok.size() == 4 ? sign_or_fail(tok[3], line) : Sign::Plus;
      edges.push_back({{u, v, s}, line});
    } else if (tok[0] == "outer") {
      if (tok.size() < 2 || tok[1] != ":") parse_error(line, "expected 'outer : <walk>'");
      if (outer) parse_error(line, "outer face designated twice");
      std::vector<VertexId> walk;
      for (std::size_t t = 2; t < tok.size(); ++t) walk.push_back(index_or_fail(tok[t], line));
      if (walk.size() < 4 || walk.front() != walk.back())
        parse_error(line, "outer walk must be closed (v0 ... v0) with at least 3 vertices");
      outer = std::make_pair(std::move(walk), line);
    } else {
      parse_error(line, "unknown directive '" + tok[0] + "'");
    }
  }
  if (!header) parse_error(1, "missing 'psg 1' header");

  const std::size_t n = rotations.size();
  for (const auto& [id, entry] : rotations) {
    if (id >= n) throw Error(ErrorCode::UnknownVertex, "line " + std::to_string(entry.second) +
                                                           ": vertex ids must be 0.." + std::to_string(n - 1),
                             entry.second);
    for (VertexId w : entry.first)
      if (w >= n)
        throw Error(ErrorCode::UnknownVertex,
                    "line " + std::to_string(entry.second) + ": undeclared vertex " + std::to_string(w),
                    entry.second);
    spec.rotations.push_back(entry.first);
  }
  for (const auto& [e, line] : edges) {
    if (e.u >= n || e.v >= n)
      throw Error(ErrorCode::UnknownVertex, "line " + std::to_string(line) + ": undeclared vertex", line);
    spec.edges.push_back(e);
  }
  if (outer) {
    for (VertexId v : outer->first)
      if (v >= n)
        throw Error(ErrorCode::UnknownVertex,
                    "line " + std::to_string(outer->second) + ": undeclared vertex " + std::to_string(v),
                    outer->second);
    spec.outer = OuterWalk{outer->first};
  }
  return spec;
}

PlaneSignedGraph parse_graph(std::string_view text) { return PlaneSignedGraph::build(parse_graph_spec(text)); }

std::string join_vertices(const std::vector<VertexId>& vertices) {
  std::string out;
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    if (k) out += ' ';
    out += std::to_string(vertices[k]);
  }
  return out;
}

std::string serialize(const PlaneSignedGraph& graph) {
  std::ostringstream out;
  out << "psg 1\n";
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    out << "vertex " << v << " :";
    for (VertexId w : graph.neighbors(v)) out << ' ' << w;
    out << '\n';
  }
  for (EdgeId e : graph.edges()) {
    const auto [u, v] = graph.endpoints(e);
    out << "edge " << u << ' ' << v << ' ' << symbol(graph.sign(e)) << '\n';
  }
  auto walk = graph.face_vertices(graph.outer_face());
  walk.push_back(walk.front());
  out << "outer : " << join_vertices(walk) << '\n';
  return out.str();
}

std::vector<EdgeId> parse_edge_sequence(std::string_view text, const PlaneSignedGraph& graph) {
  std::vector<EdgeId> out;
  const auto lines = split_lines(text);
  for (std::size_t k = 0; k < lines.size(); ++k) {
    const auto tok = tokens(strip_comment(lines[k]));
    if (tok.empty()) continue;
    if (tok.size() != 2) parse_error(k + 1, "expected 'u v'");
    const VertexId u = index_or_fail(tok[0], k + 1);
    const VertexId v = index_or_fail(tok[1], k + 1);
    const auto e = graph.find_edge(u, v);
    if (!e) throw Error(ErrorCode::UnknownEdge, "line " + std::to_string(k + 1) + ": no edge " + tok[0] + " " + tok[1], k + 1);
    out.push_back(*e);
  }
  return out;
}

std::vector<Box> parse_box_sequence(std::string_view text) {
  std::vector<Box> out;
  const auto lines = split_lines(text);
  for (std::size_t k = 0; k < lines.size(); ++k) {
    auto body = strip_comment(lines[k]);
    std::erase(body, ' ');
    std::erase(body, '\t');
    if (body.empty()) continue;
    const auto comma = body.find(',');
    if (body.front() != '[' || body.back() != ']' || comma == std::string::npos)
      parse_error(k + 1, "expected '[i,j]'");
    const int i = int_or_fail(std::string_view(body).substr(1, comma - 1), k + 1);
    const int j = int_or_fail(std::string_view(body).substr(comma + 1, body.size() - comma - 2), k + 1);
    out.push_back({i, j});
  }
  return out;
}

std::map<EdgeLabel, Sign> parse_signing(std::string_view text) {
  std::map<EdgeLabel, Sign> out;
  const auto lines = split_lines(text);
  for (std::size_t k = 0; k < lines.size(); ++k) {
    const std::size_t line = k + 1;
    const auto tok = tokens(strip_comment(lines[k]));
    if (tok.empty()) continue;
    if (tok.size() != 4) parse_error(line, "expected '<h|v|d> i j <+|->'");
    EdgeLabel label;
    if (tok[0] == "h") label.kind = EdgeLabel::Kind::Horizontal;
    else if (tok[0] == "v") label.kind = EdgeLabel::Kind::Vertical;
    else if (tok[0] == "d") label.kind = EdgeLabel::Kind::Diagonal;
    else parse_error(line, "edge kind must be h, v or d");
    label.i = int_or_fail(tok[1], line);
    label.j = int_or_fail(tok[2], line);
    if (!out.emplace(label, sign_or_fail(tok[3], line)).second) parse_error(line, "label " + label.str() + " signed twice");
  }
  return out;
}

std::map<std::string, std::string> parse_key_values(std::string_view text) {
  std::map<std::string, std::string> out;
  const auto lines = split_lines(text);
  for (std::size_t k = 0; k < lines.size(); ++k) {
    auto body = strip_comment(lines[k]);
    std::erase(body, ' ');
    std::erase(body, '\t');
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos || eq == 0) parse_error(k + 1, "expected 'key=value'");
    if (!out.emplace(body.substr(0, eq), body.substr(eq + 1)).second)
      parse_error(k + 1, "key '" + body.substr(0, eq) + "' given twice");
  }
  return out;
}

namespace {

std::vector<std::string> split_commas(const std::string& value) {
  std::vector<std::string> out;
  if (value.empty()) return out;
  std::string cur;
  for (char ch : value) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

class ConfigReader {
 public:
  ConfigReader(std::string_view text, const PlaneSignedGraph& graph)
      : values_(parse_key_values(text)), graph_(graph) {}

  const std::string& raw(const std::string& key) const {
    const auto it = values_.find(key);
    if (it == values_.end()) throw Error(ErrorCode::ParseError, "config key '" + key + "' missing");
    return it->second;
  }
  std::vector<VertexId> vertices(const std::string& key) const {
    std::vector<VertexId> out;
    for (const auto& item : split_commas(raw(key))) {
      const auto v = to_index(item);
      if (!v) throw Error(ErrorCode::ParseError, "config key '" + key + "': bad vertex '" + item + "'");
      out.push_back(*v);
    }
    return out;
  }
  VertexId vertex(const std::string& key) const {
    const auto vs = vertices(key);
    if (vs.size() != 1) throw Error(ErrorCode::ParseError, "config key '" + key + "' needs one vertex");
    return vs.front();
  }
  std::vector<EdgeId> edges(const std::string& key) const {
    std::vector<EdgeId> out;
    const auto it = values_.find(key);
    if (it == values_.end()) return out;
    for (const auto& item : split_commas(it->second)) {
      if (!item.empty() && item.front() == 'e') {
        const auto e = to_index(std::string_view(item).substr(1));
        if (!e) throw Error(ErrorCode::ParseError, "config key '" + key + "': bad edge '" + item + "'");
        out.push_back(*e);
        continue;
      }
      const auto dash = item.find('-');
      const auto u = dash == std::string::npos ? std::nullopt : to_index(std::string_view(item).substr(0, dash));
      const auto v = dash == std::string::npos ? std::nullopt : to_index(std::string_view(item).substr(dash + 1));
      if (!u || !v) throw Error(ErrorCode::ParseError, "config key '" + key + "': bad edge '" + item + "'");
      out.push_back(graph_.edge_between(*u, *v));
    }
    return out;
  }
  void only(const std::set<std::string>& allowed) const {
    for (const auto& [k, v] : values_)
      if (!allowed.contains(k)) throw Error(ErrorCode::ParseError, "unknown config key '" + k + "'");
  }

 private:
  std::map<std::string, std::string> values_;
  const PlaneSignedGraph& graph_;
};

}  // namespace

LadderConfig parse_ladder_config(std::string_view text, const PlaneSignedGraph& graph) {
  const ConfigReader in(text, graph);
  in.only({"C", "i", "p", "q", "EL", "ER"});
  LadderConfig cfg;
  cfg.cycle = in.vertices("C");
  cfg.i = in.vertex("i");
  cfg.p = in.vertices("p");
  cfg.q = in.vertices("q");
  cfg.release_left = in.edges("EL");
  cfg.release_right = in.edges("ER");
  return cfg;
}

HexConfig parse_hex_config(std::string_view text, const PlaneSignedGraph& graph) {
  const ConfigReader in(text, graph);
  in.only({"v1", "v2", "v3", "v4", "r", "p", "q", "EL", "ER"});
  HexConfig cfg;
  cfg.v1 = in.vertex("v1");
  cfg.v2 = in.vertex("v2");
  cfg.v3 = in.vertex("v3");
  cfg.v4 = in.vertex("v4");
  cfg.r = in.vertices("r");
  cfg.p = in.vertices("p");
  cfg.q = in.vertices("q");
  cfg.release_left = in.edges("EL");
  cfg.release_right = in.edges("ER");
  return cfg;
}

std::string to_dot(const PlaneSignedGraph& graph, const std::map<VertexId, std::string>& names) {
  std::ostringstream out;
  out << "graph G {\n";
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    const auto it = names.find(v);
    out << "  v" << v << " [label=\"" << (it == names.end() ? std::to_string(v) : it->second) << "\"];\n";
  }
  for (EdgeId e : graph.edges()) {
    const auto [u, v] = graph.endpoints(e);
    const Sign s = graph.sign(e);
    out << "  v" << u << " -- v" << v << " [label=\"" << symbol(s) << "\"";
    if (s == Sign::Minus) out << ", style=dashed";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace psg
