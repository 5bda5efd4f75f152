#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "z3flow/errors.hpp"
#include "z3flow/oracle.hpp"
#include "z3flow/orientation.hpp"

using namespace z3flow;

namespace {

bool realizes(const Multigraph& g, const Orientation& o, const std::vector<int>& l) {
  return o.is_orientation_of(g) && o.imbalance(g) == l;
}

bool realizes_mod3(const Multigraph& g, const Orientation& o, const std::vector<int>& b) {
  if (!o.is_orientation_of(g)) return false;
  std::vector<int> imb = o.imbalance(g);
  for (std::size_t i = 0; i < imb.size(); ++i) {
    if (((imb[i] % 3) + 3) % 3 != b[i]) return false;
  }
  return true;
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

TEST_CASE("exact imbalance examples") {
  CHECK(hakimi_feasible(fixtures::complete(2), ImbalanceSpec{{1, -1}}));
  CHECK(hakimi_feasible(fixtures::cycle(3), ImbalanceSpec{{0, 0, 0}}));

  Multigraph k4 = fixtures::complete(4);
  std::vector<int> l{3, -1, -1, -1};
  CHECK(hakimi_feasible(k4, ImbalanceSpec{l}));
  CHECK(oracle::brute_force_imbalance(k4, ImbalanceSpec{l}).has_value());

  std::vector<int> l2{3, -3, 1, -1};
  auto o = orient_with_imbalance(k4, ImbalanceSpec{l2});
  REQUIRE(o.has_value());
  CHECK(realizes(k4, *o, l2));
  CHECK(oracle::brute_force_imbalance(k4, ImbalanceSpec{l2}).has_value());
}

TEST_CASE("star oriented out of its center") {
  Multigraph star = fixtures::graph(4, {{0, 1}, {0, 2}, {0, 3}});
  auto o = orient_with_imbalance(star, ImbalanceSpec{{3, -1, -1, -1}});
  REQUIRE(o.has_value());
  for (const Arc& a : o->arcs) CHECK(a.tail == 0);
}

TEST_CASE("balanced C4 is a directed cycle") {
  Multigraph c4 = fixtures::cycle(4);
  auto o = orient_with_imbalance(c4, ImbalanceSpec{{0, 0, 0, 0}});
  REQUIRE(o.has_value());
  CHECK(realizes(c4, *o, {0, 0, 0, 0}));
}

TEST_CASE("infeasible imbalance yields a violated cut") {
  // {0, 1} must emit four units through a cut of two edges.
  Multigraph p = fixtures::cycle(4);
  ImbalanceSpec l{{2, 2, -2, -2}};
  ImbalanceOutcome out = solve_imbalance(p, l);
  CHECK_FALSE(out.feasible());
  REQUIRE(out.violating_set.has_value());
  int sum = 0;
  for (VertexId v : *out.violating_set) sum += l.values[p.index_of(v)];
  CHECK(std::abs(sum) > static_cast<int>(boundary_edges(p, *out.violating_set).size()));
}

TEST_CASE("invalid imbalance specs are domain errors") {
  Multigraph k4 = fixtures::complete(4);
  CHECK_THROWS_AS(hakimi_feasible(k4, ImbalanceSpec{{1, 1, -1}}), DomainError);
  CHECK_THROWS_AS(hakimi_feasible(k4, ImbalanceSpec{{2, -1, -1, 0}}), DomainError);
  CHECK_THROWS_AS(hakimi_feasible(k4, ImbalanceSpec{{1, 1, 1, 1}}), DomainError);
  CHECK_THROWS_AS(hakimi_feasible(k4, ImbalanceSpec{{5, -3, -1, -1}}), DomainError);
}

TEST_CASE("mod 3 orientations") {
  auto c3 = mod3_orientation(fixtures::cycle(3));
  REQUIRE(c3.has_value());
  CHECK(realizes_mod3(fixtures::cycle(3), *c3, {0, 0, 0}));
  CHECK_FALSE(mod3_orientation(fixtures::complete(4)).has_value());
  CHECK_FALSE(oracle::brute_force_boundary(fixtures::complete(4), Z3Boundary{{0, 0, 0, 0}}));
  CHECK(mod3_orientation(Multigraph::with_vertices(1)).has_value());
}

TEST_CASE("boundary orientations") {
  Multigraph digon = fixtures::graph(2, {{0, 1}, {0, 1}});
  auto o = z3_orientation(digon, Z3Boundary{{2, 1}});
  REQUIRE(o.has_value());
  for (const Arc& a : o->arcs) CHECK(a.tail == 0);
  auto r = z3_orientation(digon, Z3Boundary{{1, 2}});
  REQUIRE(r.has_value());
  for (const Arc& a : r->arcs) CHECK(a.tail == 1);

  CHECK_FALSE(z3_orientation(fixtures::wheel(3), Z3Boundary{{0, 0, 0, 0}}));
  CHECK(z3_orientation(fixtures::wheel(5), Z3Boundary{{1, 2, 0, 0, 0, 0}}));
  CHECK_THROWS_AS(z3_orientation(digon, Z3Boundary{{1, 1}}), DomainError);
  CHECK_THROWS_AS(z3_orientation(digon, Z3Boundary{{3, 0}}), DomainError);
  CHECK_THROWS_AS(z3_orientation(digon, Z3Boundary{{0}}), DomainError);
}

TEST_CASE("Z3-connectivity of small graphs") {
  CHECK(is_z3_connected(fixtures::graph(2, {{0, 1}, {0, 1}})));
  CHECK(is_z3_connected(Multigraph::with_vertices(1)));
  CHECK_FALSE(is_z3_connected(fixtures::complete(4)));
  CHECK(is_z3_connected(fixtures::complete(5)));
  CHECK(is_z3_connected(fixtures::wheel(4)));
  CHECK_FALSE(is_z3_connected(fixtures::wheel(5)));
  CHECK_FALSE(is_z3_connected(fixtures::cycle(3)));
  Z3ConnectivityReport r = z3_connectivity(fixtures::complete(4));
  CHECK_FALSE(r.connected);
  REQUIRE(r.failing_boundary.has_value());
  CHECK(r.failing_boundary->values == std::vector<int>{0, 0, 0, 0});
  CHECK_THROWS_AS(is_z3_connected(fixtures::cycle(25)), CapabilityError);
}

TEST_CASE("flow route, cut condition and brute force agree") {
  std::mt19937_64 rng(2024);
  int feasible = 0;
  for (int round = 0; round < 300; ++round) {
    int n = 2 + static_cast<int>(rng() % 6);
    Multigraph g = random_multigraph(rng, n, static_cast<int>(rng() % 13));
    // Random admissible target: imbalance of a random orientation, then a
    // random walk of +-2 shifts that keeps parity, sum and bounds.
    std::vector<int> l(n, 0);
    for (const Edge& e : g.edges()) {
      if (rng() & 1) { ++l[e.u]; --l[e.v]; } else { --l[e.u]; ++l[e.v]; }
    }
    for (int step = 0; step < 3; ++step) {
      int a = static_cast<int>(rng() % n), b = static_cast<int>(rng() % n);
      if (a != b && l[a] + 2 <= g.degree(a) && l[b] - 2 >= -g.degree(b)) {
        l[a] += 2;
        l[b] -= 2;
      }
    }
    ImbalanceSpec spec{l};
    ImbalanceOutcome flow = solve_imbalance(g, spec);
    bool brute = oracle::brute_force_imbalance(g, spec).has_value();
    bool cut = !oracle::cut_condition_violation(g, spec).has_value();
    CHECK(flow.feasible() == brute);
    CHECK(cut == brute);
    if (flow.feasible()) {
      ++feasible;
      CHECK(realizes(g, *flow.orientation, l));
    }
  }
  CHECK(feasible > 0);
}

TEST_CASE("residue search agrees with brute force") {
  std::mt19937_64 rng(99);
  for (int round = 0; round < 200; ++round) {
    int n = 2 + static_cast<int>(rng() % 6);
    Multigraph g = random_multigraph(rng, n, static_cast<int>(rng() % 13));
    std::vector<int> b(n);
    int sum = 0;
    for (int i = 0; i + 1 < n; ++i) {
      b[i] = static_cast<int>(rng() % 3);
      sum += b[i];
    }
    b[n - 1] = (3 - sum % 3) % 3;
    auto fast = z3_orientation(g, Z3Boundary{b});
    auto slow = oracle::brute_force_boundary(g, Z3Boundary{b});
    CHECK(fast.has_value() == slow.has_value());
    if (fast) CHECK(realizes_mod3(g, *fast, b));
  }
}

TEST_CASE("boundary sweep agrees with brute-force Z3-connectivity") {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 120; ++round) {
    int n = 2 + static_cast<int>(rng() % 5);
    Multigraph g = random_multigraph(rng, n, static_cast<int>(rng() % 14));
    CHECK(is_z3_connected(g) == oracle::brute_force_z3_connected(g));
  }
}
