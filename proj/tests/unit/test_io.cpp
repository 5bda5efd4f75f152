#include "doctest.h"
#include "fixtures.hpp"
#include "z3flow/canonical.hpp"
#include "z3flow/errors.hpp"
#include "z3flow/io.hpp"

using namespace z3flow;

TEST_CASE("edge list digon") {
  Multigraph g = parse_graph("2 2\n0 1\n0 1\n");
  CHECK(g.num_vertices() == 2);
  CHECK(g.multiplicity(0, 1) == 2);
}

TEST_CASE("edge list loop is a model error") {
  CHECK_THROWS_AS(parse_graph("2 1\n0 0\n"), ModelError);
}

TEST_CASE("edge list diagnostics carry a location") {
  try {
    parse_graph("3 2\n0 1\n1 x\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 3);
  }
  CHECK_THROWS_AS(parse_graph("3 2\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("3 1\n0 5\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("3 1\n0 1\n1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_graph(""), ParseError);
}

TEST_CASE("graph6 of K4") {
  Multigraph k4 = parse_graph("C~");
  CHECK(k4.num_vertices() == 4);
  CHECK(k4.num_edges() == 6);
  CHECK(to_graph6(fixtures::complete(4)) == "C~");
  CHECK(parse_graph(">>graph6<<C~\n").num_edges() == 6);
  CHECK_THROWS_AS(to_graph6(fixtures::graph(2, {{0, 1}, {0, 1}})), DomainError);
}

TEST_CASE("graph6 round trip") {
  for (int n = 1; n <= 70; n += 7) {
    Multigraph c = n >= 3 ? fixtures::cycle(n) : Multigraph::with_vertices(n);
    Multigraph back = parse_graph(to_graph6(c), GraphFormat::graph6);
    CHECK(back.num_vertices() == n);
    CHECK(back.num_edges() == c.num_edges());
    CHECK(isomorphic(back, c));
  }
}

TEST_CASE("JSON round trip keeps labels") {
  Multigraph g = fixtures::graph(3, {{0, 1}, {0, 1}, {1, 2}});
  g.remove_edge(0);
  g.add_vertex(10);
  g.add_edge(10, 2);
  Multigraph back = parse_graph(to_json_text(g));
  CHECK(back == g);
}

TEST_CASE("JSON variants and errors") {
  Multigraph g = parse_graph(R"({"vertices":[0,1,2],"edges":[[0,1],[1,2]]})");
  CHECK(g.num_edges() == 2);
  CHECK_THROWS_AS(parse_graph(R"({"vertices":[0,1],"edges":[[0,0]]})"), ModelError);
  CHECK_THROWS_AS(parse_graph(R"({"vertices":[0,1],"edges":[[0,3]]})"), ParseError);
  CHECK_THROWS_AS(parse_graph("{\"vertices\":[0,1],\n\"edges\":[[0,1]"), ParseError);
  CHECK_THROWS_AS(parse_graph(R"({"vertices":[0,0],"edges":[]})"), ParseError);
}

TEST_CASE("edge list round trip") {
  Multigraph g = fixtures::graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {0, 2}});
  CHECK(parse_graph(to_edgelist(g)) == g);
}

TEST_CASE("boundaries") {
  Multigraph g = fixtures::cycle(3);
  CHECK(parse_boundary("1 2 0", g).values == std::vector<int>{1, 2, 0});
  CHECK(parse_boundary("-1 1 0", g).values == std::vector<int>{2, 1, 0});
  CHECK(parse_boundary(R"({"0":1,"1":1,"2":1})", g).values == std::vector<int>{1, 1, 1});
  CHECK_THROWS_AS(parse_boundary("1 2", g), ParseError);
  CHECK_THROWS_AS(parse_boundary(R"({"0":1})", g), ParseError);
}

TEST_CASE("DOT export") {
  Multigraph g = fixtures::graph(2, {{0, 1}});
  CHECK(to_dot(g).find("0 -- 1") != std::string::npos);
  Orientation o{{Arc{0, 1, 0}}};
  CHECK(to_dot(g, &o).find("1 -> 0") != std::string::npos);
  CHECK(orientation_to_json(o).dump() == R"({"0":[1,0]})");
}

TEST_CASE("missing files") {
  CHECK_THROWS_AS(read_graph("/nonexistent/graph.txt"), ParseError);
}
