#include "z3flow/io.hpp"

#include <cctype>
#include <optional>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "z3flow/errors.hpp"

namespace z3flow {

namespace {

using nlohmann::json;

std::string_view trim(std::string_view s) {
  std::size_t a = 0;
  while (a < s.size() && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  std::size_t b = s.size();
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

// Splits a line into tokens, recording the 1-based column of each.
std::vector<std::pair<std::string, int>> tokens(std::string_view line) {
  std::vector<std::pair<std::string, int>> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    out.emplace_back(std::string(line.substr(i, j - i)), static_cast<int>(i) + 1);
    i = j;
  }
  return out;
}

long long to_integer(const std::string& tok, int line, int column) {
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(tok, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != tok.size() || tok.empty()) {
    throw ParseError("expected an integer, got '" + tok + "'", line, column);
  }
  return value;
}

Multigraph parse_edgelist(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }

  Multigraph g;
  long long n = -1, m = -1;
  long long seen = 0;
  for (std::size_t k = 0; k < lines.size(); ++k) {
    const int line = static_cast<int>(k) + 1;
    std::string_view body = trim(lines[k]);
    if (body.empty() || body.front() == '#') continue;
    auto tok = tokens(lines[k]);
    if (tok.size() != 2) {
      throw ParseError("expected two integers, got " + std::to_string(tok.size()) + " fields",
                       line, tok.empty() ? 0 : tok.front().second);
    }
    long long a = to_integer(tok[0].first, line, tok[0].second);
    long long b = to_integer(tok[1].first, line, tok[1].second);
    if (n < 0) {
      if (a < 0 || b < 0) throw ParseError("counts must be nonnegative", line, tok[0].second);
      if (a > 1000000) throw ParseError("vertex count too large", line, tok[0].second);
      n = a;
      m = b;
      g = Multigraph::with_vertices(static_cast<int>(n));
      continue;
    }
    if (seen == m) throw ParseError("more edge lines than announced", line, tok[0].second);
    if (a < 0 || a >= n) throw ParseError("vertex index out of range", line, tok[0].second);
    if (b < 0 || b >= n) throw ParseError("vertex index out of range", line, tok[1].second);
    if (a == b) {
      throw ModelError("line " + std::to_string(line) + ", column " +
                       std::to_string(tok[1].second) + ": loop at vertex " + std::to_string(a));
    }
    g.add_edge(static_cast<VertexId>(a), static_cast<VertexId>(b));
    ++seen;
  }
  if (n < 0) throw ParseError("missing header line 'n m'", 1);
  if (seen != m) {
    throw ParseError("expected " + std::to_string(m) + " edges, found " + std::to_string(seen),
                     static_cast<int>(lines.size()));
  }
  return g;
}

std::pair<int, int> line_column(std::string_view text, std::size_t offset) {
  int line = 1, column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

Multigraph parse_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    auto [line, column] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError("malformed JSON", line, column);
  }
  return graph_from_json(doc);
}

std::vector<bool> graph6_bits(std::string_view body, std::size_t from) {
  std::vector<bool> bits;
  for (std::size_t i = from; i < body.size(); ++i) {
    int c = static_cast<unsigned char>(body[i]) - 63;
    if (c < 0 || c > 63) {
      throw ParseError("invalid graph6 character", 1, static_cast<int>(i) + 1);
    }
    for (int b = 5; b >= 0; --b) bits.push_back((c >> b) & 1);
  }
  return bits;
}

Multigraph parse_graph6(std::string_view text) {
  std::string_view body = trim(text);
  int offset = 0;
  constexpr std::string_view header = ">>graph6<<";
  if (body.substr(0, header.size()) == header) {
    body.remove_prefix(header.size());
    offset = static_cast<int>(header.size());
  }
  if (body.empty()) throw ParseError("empty graph6 string", 1);
  long long n = 0;
  std::size_t pos = 0;
  auto digit = [&](std::size_t i) {
    if (i >= body.size()) throw ParseError("truncated graph6 size", 1, offset + static_cast<int>(i) + 1);
    int c = static_cast<unsigned char>(body[i]) - 63;
    if (c < 0 || c > 63) throw ParseError("invalid graph6 character", 1, offset + static_cast<int>(i) + 1);
    return c;
  };
  if (body[0] != '~') {
    n = digit(0);
    pos = 1;
  } else if (body.size() > 1 && body[1] != '~') {
    n = (digit(1) << 12) | (digit(2) << 6) | digit(3);
    pos = 4;
  } else {
    throw ParseError("graph6 orders above 258047 are not supported", 1, offset + 1);
  }
  std::vector<bool> bits = graph6_bits(body, pos);
  const std::size_t need = static_cast<std::size_t>(n * (n - 1) / 2);
  if (bits.size() < need || bits.size() >= need + 6) {
    throw ParseError("graph6 length does not match the order", 1, offset + static_cast<int>(body.size()));
  }
  Multigraph g = Multigraph::with_vertices(static_cast<int>(n));
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (bits[k++]) g.add_edge(i, j);
    }
  }
  return g;
}

GraphFormat detect(std::string_view text) {
  std::string_view body = trim(text);
  if (!body.empty() && (body.front() == '{' || body.front() == '[')) return GraphFormat::json;
  if (body.substr(0, 10) == ">>graph6<<") return GraphFormat::graph6;
  if (!body.empty() && body.find_first_of(" \t\r\n") == std::string_view::npos) {
    bool printable = true;
    for (char c : body) {
      int x = static_cast<unsigned char>(c);
      if (x < 63 || x > 126) printable = false;
    }
    if (printable) return GraphFormat::graph6;
  }
  return GraphFormat::edgelist;
}

VertexId json_int(const json& v, const std::string& what) {
  if (!v.is_number_integer()) throw ParseError(what + " must be an integer", 0);
  long long x = v.get<long long>();
  if (x < 0 || x > 0x7fffffff) throw ParseError(what + " out of range", 0);
  return static_cast<VertexId>(x);
}

}  // namespace

Multigraph parse_graph(std::string_view text, GraphFormat format) {
  if (format == GraphFormat::detect) format = detect(text);
  switch (format) {
    case GraphFormat::edgelist:
      return parse_edgelist(text);
    case GraphFormat::json:
      return parse_json(text);
    case GraphFormat::graph6:
      return parse_graph6(text);
    default:
      break;
  }
  throw ParseError("unknown graph format", 0);
}

std::string read_text(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path, 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Multigraph read_graph(const std::string& path, GraphFormat format) {
  return parse_graph(read_text(path), format);
}

GraphFormat parse_format_name(const std::string& name) {
  if (name == "auto") return GraphFormat::detect;
  if (name == "edgelist") return GraphFormat::edgelist;
  if (name == "json") return GraphFormat::json;
  if (name == "graph6") return GraphFormat::graph6;
  throw DomainError("unknown format '" + name + "'");
}

std::string to_edgelist(const Multigraph& g) {
  std::ostringstream out;
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << g.index_of(e.u) << ' ' << g.index_of(e.v) << '\n';
  return out.str();
}

nlohmann::json graph_to_json(const Multigraph& g) {
  json doc;
  doc["vertices"] = json::array();
  for (VertexId v : g.vertices()) doc["vertices"].push_back(v);
  doc["edges"] = json::array();
  for (const Edge& e : g.edges()) doc["edges"].push_back({{"id", e.id}, {"u", e.u}, {"v", e.v}});
  return doc;
}

Multigraph graph_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ParseError("graph document must be a JSON object", 0);
  if (!doc.contains("vertices") || !doc["vertices"].is_array()) {
    throw ParseError("graph document needs a 'vertices' array", 0);
  }
  if (!doc.contains("edges") || !doc["edges"].is_array()) {
    throw ParseError("graph document needs an 'edges' array", 0);
  }
  Multigraph g;
  for (const json& v : doc["vertices"]) {
    VertexId id = json_int(v, "vertex id");
    if (g.has_vertex(id)) throw ParseError("duplicate vertex id " + std::to_string(id), 0);
    g.add_vertex(id);
  }
  std::size_t index = 0;
  for (const json& e : doc["edges"]) {
    std::string where = "edge #" + std::to_string(index++);
    VertexId u, v;
    std::optional<EdgeId> id;
    if (e.is_array()) {
      if (e.size() != 2) throw ParseError(where + " must have two endpoints", 0);
      u = json_int(e[0], where + " endpoint");
      v = json_int(e[1], where + " endpoint");
    } else if (e.is_object()) {
      if (!e.contains("u") || !e.contains("v")) throw ParseError(where + " needs 'u' and 'v'", 0);
      u = json_int(e["u"], where + " endpoint");
      v = json_int(e["v"], where + " endpoint");
      if (e.contains("id")) id = json_int(e["id"], where + " id");
    } else {
      throw ParseError(where + " must be an object or a pair", 0);
    }
    if (!g.has_vertex(u) || !g.has_vertex(v)) {
      throw ParseError(where + " uses an undeclared vertex", 0);
    }
    if (u == v) throw ModelError(where + ": loop at vertex " + std::to_string(u));
    if (id) {
      if (g.has_edge(*id)) throw ParseError("duplicate edge id " + std::to_string(*id), 0);
      g.add_edge(*id, u, v);
    } else {
      g.add_edge(u, v);
    }
  }
  return g;
}

std::string to_json_text(const Multigraph& g) { return graph_to_json(g).dump(); }

std::string to_graph6(const Multigraph& g) {
  if (!g.is_simple()) throw DomainError("graph6 encodes simple graphs only");
  const int n = g.num_vertices();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift : {12, 6, 0}) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    throw CapabilityError("graph6 export supports at most 258047 vertices");
  }
  int acc = 0, filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.multiplicity(g.vertices()[i], g.vertices()[j]) > 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

std::string to_dot(const Multigraph& g, const Orientation* orientation, const std::string& name) {
  std::ostringstream out;
  const bool directed = orientation != nullptr;
  out << (directed ? "digraph " : "graph ") << name << " {\n";
  for (VertexId v : g.vertices()) out << "  " << v << ";\n";
  const char* link = directed ? " -> " : " -- ";
  if (directed) {
    for (const Arc& a : orientation->arcs) {
      out << "  " << a.tail << link << a.head << " [label=\"e" << a.edge << "\"];\n";
    }
  } else {
    for (const Edge& e : g.edges()) {
      out << "  " << e.u << link << e.v << " [label=\"e" << e.id << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

nlohmann::json orientation_to_json(const Orientation& o) {
  json out = json::object();
  for (const Arc& a : o.arcs) out[std::to_string(a.edge)] = {a.tail, a.head};
  return out;
}

Z3Boundary parse_boundary(std::string_view text, const Multigraph& g) {
  Z3Boundary b;
  auto reduce = [](long long x) { return static_cast<int>(((x % 3) + 3) % 3); };
  std::string_view body = trim(text);
  if (!body.empty() && body.front() == '{') {
    json doc;
    try {
      doc = json::parse(body.begin(), body.end());
    } catch (const json::parse_error& e) {
      auto [line, column] = line_column(body, e.byte > 0 ? e.byte - 1 : 0);
      throw ParseError("malformed boundary JSON", line, column);
    }
    b.values.assign(g.num_vertices(), 0);
    std::vector<bool> set(g.num_vertices(), false);
    for (auto& [key, value] : doc.items()) {
      VertexId v = static_cast<VertexId>(to_integer(key, 0, 0));
      if (!g.has_vertex(v)) throw ParseError("boundary names unknown vertex " + key, 0);
      if (!value.is_number_integer()) throw ParseError("boundary value for " + key + " must be an integer", 0);
      int i = g.index_of(v);
      b.values[i] = reduce(value.get<long long>());
      set[i] = true;
    }
    for (int i = 0; i < g.num_vertices(); ++i) {
      if (!set[i]) throw ParseError("boundary misses vertex " + std::to_string(g.vertices()[i]), 0);
    }
    return b;
  }
  int line = 1;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    for (auto& [tok, column] : tokens(text.substr(start, end - start))) {
      b.values.push_back(reduce(to_integer(tok, line, column)));
    }
    start = end + 1;
    ++line;
  }
  if (static_cast<int>(b.values.size()) != g.num_vertices()) {
    throw ParseError("boundary has " + std::to_string(b.values.size()) + " values for " +
                         std::to_string(g.num_vertices()) + " vertices", 0);
  }
  return b;
}

nlohmann::json trace_to_json(const ReductionTrace& t) {
  json out;
  out["complete"] = t.complete();
  out["size_cap"] = t.size_cap();
  out["events"] = json::array();
  for (const ContractionEvent& ev : t.events()) {
    out["events"].push_back({{"merged", ev.merged}, {"image", ev.image}});
  }
  json images = json::object();
  for (auto [orig, img] : t.image_map()) images[std::to_string(orig)] = img;
  out["image"] = images;
  return out;
}

}  // namespace z3flow
