#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "z3flow/canonical.hpp"

using namespace z3flow;

namespace {

Multigraph relabel(const Multigraph& g, const std::vector<int>& perm) {
  Multigraph h = Multigraph::with_vertices(g.num_vertices());
  for (const Edge& e : g.edges()) h.add_edge(perm[e.u], perm[e.v]);
  return h;
}

}  // namespace

TEST_CASE("relabelings share a canonical form") {
  std::mt19937_64 rng(17);
  for (int round = 0; round < 200; ++round) {
    int n = 1 + static_cast<int>(rng() % 9);
    Multigraph g = Multigraph::with_vertices(n);
    int m = n > 1 ? static_cast<int>(rng() % 20) : 0;
    while (g.num_edges() < m) {
      int a = static_cast<int>(rng() % n), b = static_cast<int>(rng() % n);
      if (a != b) g.add_edge(a, b);
    }
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Multigraph h = relabel(g, perm);
    CHECK(canonical_form(g) == canonical_form(h));
    CHECK(isomorphic(g, h));
    CHECK(isomorphic(to_multigraph(canonical_form(g)), g));
  }
}

TEST_CASE("distinct graphs are told apart") {
  // Two 3-regular graphs on 6 vertices.
  CHECK_FALSE(isomorphic(fixtures::k33(),
                         fixtures::graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3},
                                             {0, 3}, {1, 4}, {2, 5}})));
  CHECK_FALSE(isomorphic(fixtures::cycle(6),
                         fixtures::graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}})));
  CHECK_FALSE(isomorphic(fixtures::graph(2, {{0, 1}, {0, 1}}), fixtures::graph(2, {{0, 1}})));
}

TEST_CASE("labeled graphs on 5 vertices fall into 34 classes") {
  // 2^10 labeled simple graphs on 5 vertices; the number of unlabeled ones
  // is 34.
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < 5; ++i) {
    for (int j = i + 1; j < 5; ++j) slots.emplace_back(i, j);
  }
  std::vector<CanonicalForm> forms;
  for (unsigned mask = 0; mask < 1024; ++mask) {
    Multigraph g = Multigraph::with_vertices(5);
    for (int k = 0; k < 10; ++k) {
      if (mask >> k & 1) g.add_edge(slots[k].first, slots[k].second);
    }
    forms.push_back(canonical_form(g));
  }
  std::sort(forms.begin(), forms.end());
  forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
  CHECK(forms.size() == 34);
}
