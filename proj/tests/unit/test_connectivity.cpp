#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "z3flow/connectivity.hpp"
#include "z3flow/errors.hpp"

using namespace z3flow;

namespace {

// Minimum over all nonempty proper shores by direct enumeration.
struct Brute {
  int ec = 1 << 30;
  int odd = 1 << 30;
  int essential = 1 << 30;
};

Brute brute_cuts(const Multigraph& g) {
  Brute b;
  const int n = g.num_vertices();
  for (unsigned s = 1; s + 1 < (1u << n); ++s) {
    VertexSet in;
    for (int i = 0; i < n; ++i) {
      if (s >> i & 1) in.push_back(g.vertices()[i]);
    }
    int cut = static_cast<int>(boundary_edges(g, in).size());
    b.ec = std::min(b.ec, cut);
    if (cut % 2) b.odd = std::min(b.odd, cut);
    if (!inner_edges(g, in).empty() && !inner_edges(g, complement(g, in)).empty()) {
      b.essential = std::min(b.essential, cut);
    }
  }
  return b;
}

Multigraph random_multigraph(std::mt19937_64& rng, int n, int m) {
  Multigraph g = Multigraph::with_vertices(n);
  std::uniform_int_distribution<int> pick(0, n - 1);
  while (g.num_edges() < m) {
    int a = pick(rng), b = pick(rng);
    if (a != b) g.add_edge(a, b);
  }
  return g;
}

}  // namespace

TEST_CASE("edge connectivity of small families") {
  CHECK(edge_connectivity(fixtures::complete(5)).size == 4);
  CHECK(edge_connectivity(fixtures::cycle(6)).size == 2);
  CHECK(edge_connectivity(fixtures::graph(4, {{0, 1}, {2, 3}})).size == 0);
  CHECK(edge_connectivity(fixtures::wheel(5)).size == 3);
}

TEST_CASE("odd connectivity is absent for all-even degrees") {
  CHECK_FALSE(odd_edge_connectivity(fixtures::cycle(5)).has_value());
  auto k4 = odd_edge_connectivity(fixtures::complete(4));
  REQUIRE(k4.has_value());
  CHECK(k4->size == 3);
  CHECK(k4->witness == VertexSet{0});
}

TEST_CASE("essential connectivity") {
  // Two triangles joined by one edge.
  Multigraph g = fixtures::graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {2, 3}});
  auto e = essential_edge_connectivity(g);
  REQUIRE(e.has_value());
  CHECK(e->size == 1);
  CHECK(e->witness == VertexSet{0, 1, 2});
  CHECK_FALSE(essential_edge_connectivity(fixtures::complete(3)).has_value());
}

TEST_CASE("cut routines match brute force on random multigraphs") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 150; ++round) {
    int n = 2 + static_cast<int>(rng() % 8);
    int m = static_cast<int>(rng() % 16);
    Multigraph g = random_multigraph(rng, n, m);
    Brute b = brute_cuts(g);
    CutReport ec = edge_connectivity(g);
    CHECK(ec.size == b.ec);
    if (ec.size > 0 || is_connected(g)) {
      CHECK(static_cast<int>(boundary_edges(g, ec.witness).size()) == ec.size);
    }
    auto odd = odd_edge_connectivity(g);
    CHECK(odd.has_value() == (b.odd < (1 << 30)));
    if (odd) {
      CHECK(odd->size == b.odd);
      CHECK(static_cast<int>(boundary_edges(g, odd->witness).size()) == odd->size);
    }
    auto ess = essential_edge_connectivity(g);
    CHECK(ess.has_value() == (b.essential < (1 << 30)));
    if (ess) CHECK(ess->size == b.essential);
  }
}

TEST_CASE("cut parity identity") {
  // |boundary(S)| has the parity of the degree sum over S.
  std::mt19937_64 rng(11);
  for (int round = 0; round < 100; ++round) {
    Multigraph g = random_multigraph(rng, 7, static_cast<int>(rng() % 14));
    unsigned s = 1 + static_cast<unsigned>(rng() % 126);
    VertexSet in;
    int deg = 0;
    for (int i = 0; i < 7; ++i) {
      if (s >> i & 1) {
        in.push_back(i);
        deg += g.degree(i);
      }
    }
    CHECK(boundary_edges(g, in).size() % 2 == static_cast<std::size_t>(deg % 2));
  }
}

TEST_CASE("subset enumeration cap") {
  CHECK_THROWS_AS(odd_edge_connectivity(fixtures::complete(26)), CapabilityError);
}

TEST_CASE("independence number") {
  CHECK(independence_number(fixtures::complete(6)).size == 1);
  CHECK(independence_number(fixtures::cycle(7)).size == 3);
  CHECK(independence_number(fixtures::k33()).size == 3);
  IndependentSet w = independence_number(fixtures::wheel(5));
  CHECK(w.size == 2);
  Multigraph g = fixtures::wheel(5);
  for (VertexId a : w.members) {
    for (VertexId b : w.members) CHECK((a == b || g.multiplicity(a, b) == 0));
  }
}

TEST_CASE("independence number matches brute force") {
  std::mt19937_64 rng(3);
  for (int round = 0; round < 100; ++round) {
    int n = 1 + static_cast<int>(rng() % 11);
    Multigraph g = random_multigraph(rng, std::max(n, 2), static_cast<int>(rng() % 25));
    n = g.num_vertices();
    int best = 0;
    for (unsigned s = 0; s < (1u << n); ++s) {
      bool ok = true;
      for (const Edge& e : g.edges()) {
        if ((s >> e.u & 1) && (s >> e.v & 1)) ok = false;
      }
      if (ok) best = std::max(best, __builtin_popcount(s));
    }
    CHECK(independence_number(g).size == best);
  }
}

TEST_CASE("neighborhood closure") {
  Multigraph c6 = fixtures::cycle(6);
  CHECK(neighborhood_closure(c6, VertexSet{0}) == VertexSet{0, 1, 5});
  CHECK_THROWS_AS(neighborhood_closure(c6, VertexSet{}), DomainError);
}
