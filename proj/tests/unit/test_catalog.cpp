#include <algorithm>

#include "doctest.h"
#include "z3flow/catalog.hpp"
#include "z3flow/canonical.hpp"
#include "z3flow/errors.hpp"
#include "z3flow/reduction.hpp"

using namespace z3flow;
using namespace z3flow::catalog;

namespace {

std::vector<int> degree_sequence(const Multigraph& g) {
  std::vector<int> d = g.degrees();
  std::sort(d.rbegin(), d.rend());
  return d;
}

}  // namespace

TEST_CASE("G3 shape") {
  CatalogEntry g3 = get("G3");
  CHECK(g3.graph.num_vertices() == 6);
  CHECK(g3.graph.num_edges() == 11);
  CHECK(degree_sequence(g3.graph) == std::vector<int>{5, 5, 3, 3, 3, 3});
  // a = 0 and d = 3 are the two degree-5 vertices and they are adjacent.
  CHECK(g3.graph.degree(0) == 5);
  CHECK(g3.graph.degree(3) == 5);
  CHECK(g3.graph.multiplicity(0, 3) == 1);
  CHECK(boundary_edges(g3.graph, VertexSet{0, 3}).size() == 8);
  for (VertexId v : {1, 2, 4, 5}) {
    CHECK(cross_edges(g3.graph, VertexSet{0, 3}, VertexSet{v}).size() == 2);
  }
}

TEST_CASE("G5 is the 5-wheel") {
  CatalogEntry g5 = get("G5");
  CHECK(isomorphic(g5.graph, get("W", 5).graph));
  auto w = find_wheel(g5.graph, WheelParity::odd);
  REQUIRE(w.has_value());
  CHECK(w->center == 5);
  CHECK(g5.graph.degree(5) == 5);
  CHECK(w->rim.size() == 5);
  CHECK(w->odd);
}

TEST_CASE("G18 shape") {
  CatalogEntry g = get("G18");
  CHECK(g.graph.num_edges() == 16);
  CHECK(degree_sequence(g.graph) == std::vector<int>{5, 5, 5, 5, 3, 3, 3, 3});
  CHECK(evaluate(Property::independence_number, g.graph) == 2);
}

TEST_CASE("coinciding entries") {
  CHECK(isomorphic(get("FZ-2").graph, get("G3").graph));
  CHECK(isomorphic(get("FZ-3").graph, get("G5").graph));
  CHECK(isomorphic(get("FZ-5").graph, get("K4").graph));
  CHECK(isomorphic(get("FZ-8").graph, get("G4").graph));
  CHECK(get("FZ-5").graph.num_edges() == 6);
  CHECK(get("FZ-9").graph.num_edges() == 8);
}

TEST_CASE("families") {
  CatalogEntry w4 = get("W", 4);
  CHECK(w4.graph.num_vertices() == 5);
  CHECK(w4.graph.num_edges() == 8);
  CHECK(get("K_5").graph.num_edges() == 10);
  CHECK(get("c2").graph.multiplicity(0, 1) == 2);
  CHECK(get("W2").graph.num_edges() == 4);
  CHECK_THROWS_AS(get("K"), DomainError);
  CHECK_THROWS_AS(get("C", 1), DomainError);
  CHECK_THROWS_AS(get("G3", 2), DomainError);
}

TEST_CASE("unknown names") {
  CHECK_THROWS_AS(get("G7"), LookupError);
  CHECK_THROWS_AS(get("Kx"), LookupError);
  CHECK_THROWS_AS(get("special-18"), LookupError);
}

TEST_CASE("list names every entry") {
  std::vector<std::string> names = list();
  CHECK(names.size() == 21);
  CHECK(std::find(names.begin(), names.end(), "FZ-12") != names.end());
}

TEST_CASE("Ore condition") {
  CHECK(ore_condition(get("C4").graph));
  CHECK_FALSE(ore_condition(get("C5").graph));
}

TEST_CASE("every claim passes") {
  for (const ClaimReport& r : verify_all()) {
    INFO(r.name);
    for (const ClaimCheck& c : r.checks) {
      INFO(property_name(c.claim.property));
      CHECK(c.actual == c.claim.expected);
    }
  }
}
