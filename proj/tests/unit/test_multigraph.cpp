#include "doctest.h"
#include "fixtures.hpp"
#include "z3flow/dense.hpp"
#include "z3flow/errors.hpp"
#include "z3flow/multigraph.hpp"

using namespace z3flow;

TEST_CASE("digon has two parallel edges") {
  Multigraph g = fixtures::graph(2, {{0, 1}, {0, 1}});
  CHECK(g.num_vertices() == 2);
  CHECK(g.num_edges() == 2);
  CHECK(g.multiplicity(0, 1) == 2);
  CHECK_FALSE(g.is_simple());
  CHECK(g.degree(0) == 2);
}

TEST_CASE("loops are rejected") {
  Multigraph g = Multigraph::with_vertices(2);
  CHECK_THROWS_AS(g.add_edge(0, 0), ModelError);
}

TEST_CASE("unknown ids are domain errors") {
  Multigraph g = fixtures::cycle(3);
  CHECK_THROWS_AS(g.add_edge(0, 7), DomainError);
  CHECK_THROWS_AS(g.degree(9), DomainError);
  CHECK_THROWS_AS(g.remove_edge(42), DomainError);
}

TEST_CASE("edge ids are never reused") {
  Multigraph g = fixtures::cycle(4);
  g.remove_edge(3);
  EdgeId e = g.add_edge(0, 2);
  CHECK(e == 4);
  VertexId v = g.add_vertex();
  CHECK(v == 4);
  g.remove_vertex(4);
  CHECK(g.add_vertex() == 5);
}

TEST_CASE("contracting a triangle side") {
  Multigraph k4 = fixtures::complete(4);
  VertexSet s{0, 1};
  ContractionResult r = contract(k4, s);
  CHECK(r.graph.num_vertices() == 3);
  CHECK(r.graph.num_edges() == 5);
  VertexId x = r.trace.image_of(0);
  CHECK(x == 4);
  CHECK(r.trace.image_of(1) == x);
  CHECK(r.trace.image_of(2) == 2);
  CHECK(r.graph.multiplicity(x, 2) == 2);
  CHECK(r.graph.multiplicity(x, 3) == 2);
  CHECK(r.trace.events().size() == 1);
  // Surviving edges keep their ids; the next fresh edge id continues.
  CHECK(r.graph.has_edge(5));
  CHECK_FALSE(r.graph.has_edge(0));
  CHECK(r.graph.next_edge_id() == k4.next_edge_id());
}

TEST_CASE("sequential contractions compose in the trace") {
  Multigraph c5 = fixtures::cycle(5);
  ContractionResult a = contract(c5, VertexSet{0, 1});
  ContractionResult b = contract(a.graph, VertexSet{2, a.trace.image_of(0)});
  ReductionTrace t(c5.vertices());
  t.append(a.trace);
  t.append(b.trace);
  CHECK(t.image_of(0) == t.image_of(2));
  CHECK(t.image_of(1) == t.image_of(2));
  CHECK(t.image_of(3) == 3);
  CHECK(b.graph.num_vertices() == 3);
}

TEST_CASE("lifting") {
  Multigraph g = fixtures::graph(3, {{0, 1}, {1, 2}});
  Multigraph h = lift(g, 1, 0, 1);
  CHECK(h.num_edges() == 1);
  CHECK(h.multiplicity(0, 2) == 1);
  CHECK(h.degree(1) == 0);

  Multigraph d = fixtures::graph(2, {{0, 1}, {0, 1}});
  CHECK_THROWS_AS(lift(d, 1, 0, 1), ModelError);
  CHECK_THROWS_AS(lift(g, 1, 0, 0), DomainError);
  CHECK_THROWS_AS(lift(g, 0, 0, 1), DomainError);
}

TEST_CASE("cuts and induced subgraphs") {
  Multigraph k4 = fixtures::complete(4);
  VertexSet s{0, 1};
  CHECK(boundary_edges(k4, s).size() == 4);
  CHECK(inner_edges(k4, s).size() == 1);
  CHECK(cross_edges(k4, VertexSet{0}, VertexSet{2, 3}).size() == 2);
  CHECK_THROWS_AS(boundary_edges(k4, VertexSet{}), DomainError);
  CHECK_THROWS_AS(boundary_edges(k4, VertexSet{0, 1, 2, 3}), DomainError);
  Multigraph h = induced_subgraph(k4, VertexSet{1, 2, 3});
  CHECK(h.num_edges() == 3);
  CHECK(complement(k4, s) == VertexSet{2, 3});
}

TEST_CASE("underlying simple graph keeps the lowest edge id") {
  Multigraph g = fixtures::graph(3, {{0, 1}, {1, 0}, {1, 2}});
  Multigraph s = underlying_simple(g);
  CHECK(s.num_edges() == 2);
  CHECK(s.has_edge(0));
  CHECK_FALSE(s.has_edge(1));
  CHECK(s.is_simple());
}

TEST_CASE("connectivity and degrees") {
  CHECK(is_connected(fixtures::cycle(5)));
  CHECK_FALSE(is_connected(fixtures::graph(4, {{0, 1}, {2, 3}})));
  CHECK(min_degree(fixtures::wheel(5)) == 3);
}

TEST_CASE("labeled equality ignores endpoint order") {
  Multigraph a = fixtures::graph(2, {{0, 1}});
  Multigraph b = fixtures::graph(2, {{1, 0}});
  CHECK(a == b);
  b.add_edge(0, 1);
  CHECK_FALSE(a == b);
}

TEST_CASE("dense snapshot") {
  Multigraph g = fixtures::graph(3, {{0, 1}, {0, 1}, {1, 2}});
  DenseGraph d(g);
  CHECK(d.multiplicity(0, 1) == 2);
  CHECK(d.cut_size(bit(1)) == 3);
  CHECK(d.inner_edge_count(bit(0) | bit(1)) == 2);
  CHECK(d.to_multigraph() == g);
  DenseGraph sub = d.induced(bit(1) | bit(2));
  CHECK(sub.n() == 2);
  CHECK(sub.m() == 1);
  CHECK(sub.ids()[0] == 1);
}
