#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "z3flow/multigraph.hpp"
#include "z3flow/orientation.hpp"

namespace z3flow {

enum class GraphFormat { detect, edgelist, json, graph6 };

// Edge list: first line "n m", then m lines "u v" with 0-based vertex
// indices. Blank lines and lines starting with '#' are ignored.
// JSON: {"vertices": [ids], "edges": [{"id": e, "u": a, "v": b} | [a, b]]}.
// graph6: the standard encoding of simple graphs, optional >>graph6<< header.
// detect picks JSON for '{', graph6 for a single printable token and edge
// list otherwise. Malformed text throws ParseError, a loop ModelError.
Multigraph parse_graph(std::string_view text, GraphFormat format = GraphFormat::detect);

// Reads path, or standard input for "-". An unreadable file throws
// ParseError with line 0.
Multigraph read_graph(const std::string& path, GraphFormat format = GraphFormat::detect);
std::string read_text(const std::string& path);

GraphFormat parse_format_name(const std::string& name);

// Vertices are written by their index in vertices().
std::string to_edgelist(const Multigraph& g);

nlohmann::json graph_to_json(const Multigraph& g);
Multigraph graph_from_json(const nlohmann::json& doc);
std::string to_json_text(const Multigraph& g);

// Simple graphs only; throws DomainError on parallel edges.
std::string to_graph6(const Multigraph& g);

// Undirected DOT, or a digraph when an orientation is given.
std::string to_dot(const Multigraph& g, const Orientation* orientation = nullptr,
                   const std::string& name = "G");

// {"<edge id>": [tail, head], ...}
nlohmann::json orientation_to_json(const Orientation& o);

// Whitespace separated integers in vertex order, or a JSON object mapping
// vertex ids to values. Values are reduced mod 3.
Z3Boundary parse_boundary(std::string_view text, const Multigraph& g);

nlohmann::json trace_to_json(const ReductionTrace& t);

}  // namespace z3flow
