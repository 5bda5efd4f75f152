#include "fixtures.hpp"

namespace fixtures {

using z3flow::Multigraph;

Multigraph graph(int n, std::initializer_list<std::pair<int, int>> edges) {
  std::vector<std::pair<int, int>> e(edges);
  return Multigraph::from_pairs(n, e);
}

Multigraph complete(int n) {
  Multigraph g = Multigraph::with_vertices(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  }
  return g;
}

Multigraph cycle(int n) {
  Multigraph g = Multigraph::with_vertices(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Multigraph wheel(int n) {
  Multigraph g = cycle(n);
  g.add_vertex(n);
  for (int i = 0; i < n; ++i) g.add_edge(n, i);
  return g;
}

Multigraph k33() {
  Multigraph g = Multigraph::with_vertices(6);
  for (int i = 0; i < 3; ++i) {
    for (int j = 3; j < 6; ++j) g.add_edge(i, j);
  }
  return g;
}

}  // namespace fixtures
