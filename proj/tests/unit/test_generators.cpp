#include <doctest.h>

#include <numeric>

#include "z3flow/canonical.hpp"
#include "z3flow/connectivity.hpp"
#include "z3flow/generators.hpp"
#include "z3flow/reduction.hpp"

using namespace z3flow;

TEST_CASE("instance seeds are stable and distinct") {
  CHECK(gen::instance_seed(1, 0) == gen::instance_seed(1, 0));
  CHECK(gen::instance_seed(1, 0) != gen::instance_seed(1, 1));
  CHECK(gen::instance_seed(1, 0) != gen::instance_seed(2, 0));
}

TEST_CASE("random multigraphs have the requested shape") {
  gen::Rng rng(3);
  for (int i = 0; i < 50; ++i) {
    int n = gen::uniform(rng, 2, 9);
    int m = gen::uniform(rng, 0, 20);
    Multigraph g = gen::random_multigraph(rng, n, m);
    CHECK(g.num_vertices() == n);
    CHECK(g.num_edges() == m);
  }
}

TEST_CASE("admissible imbalances and boundaries") {
  gen::Rng rng(5);
  for (int i = 0; i < 50; ++i) {
    Multigraph g = gen::random_multigraph(rng, 5, gen::uniform(rng, 0, 12));
    ImbalanceSpec l = gen::random_admissible_imbalance(rng, g);
    CHECK_NOTHROW(validate_imbalance(g, l));
    Z3Boundary b = gen::random_boundary(rng, g);
    CHECK_NOTHROW(validate_boundary(g, b));
  }
}

TEST_CASE("odd-5-connected generator") {
  gen::Rng rng(7);
  for (int i = 0; i < 30; ++i) {
    Multigraph g = gen::random_odd5_connected(rng, 2, 10);
    CHECK(is_connected(g));
    auto odd = odd_edge_connectivity(g);
    if (odd) CHECK(odd->size >= 5);
  }
}

TEST_CASE("splitting instances meet the hypotheses") {
  gen::Rng rng(11);
  for (int i = 0; i < 30; ++i) {
    auto [g, v] = gen::random_splitting_instance(rng, 6, 10);
    int d = g.degree(v);
    CHECK(d % 2 == 0);
    CHECK(d >= 4);
    auto odd = odd_edge_connectivity(g);
    REQUIRE(odd);
    CHECK(odd->size == 5);
  }
}

TEST_CASE("wheel instances carry a valid proper odd wheel") {
  gen::Rng rng(13);
  for (int i = 0; i < 20; ++i) {
    gen::WheelInstance a = gen::random_odd_wheel_instance(rng, 10);
    CHECK_NOTHROW(validate_wheel(a.graph, a.wheel));
    CHECK(a.wheel.odd);
    bool proper = static_cast<int>(a.wheel.vertices().size()) < a.graph.num_vertices() ||
                  a.graph.num_edges() > 2 * static_cast<int>(a.wheel.rim.size());
    CHECK(proper);
  }
  for (int i = 0; i < 5; ++i) {
    gen::WheelInstance b = gen::random_dense_wheel_instance(rng, 6, 9);
    CHECK_NOTHROW(validate_wheel(b.graph, b.wheel));
    CHECK(edge_connectivity(b.graph).size >= 5);
    auto ess = essential_edge_connectivity(b.graph);
    if (ess) CHECK(ess->size >= 8);
  }
}

TEST_CASE("shuffling preserves the isomorphism class") {
  gen::Rng rng(17);
  Multigraph g = gen::random_multigraph(rng, 7, 15);
  CHECK(isomorphic(g, gen::shuffled(rng, g)));
}
