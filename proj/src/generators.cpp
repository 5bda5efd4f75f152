#include "z3flow/generators.hpp"

#include <algorithm>
#include <numeric>

#include "z3flow/connectivity.hpp"
#include "z3flow/errors.hpp"

namespace z3flow::gen {

std::uint64_t instance_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = (seed ^ (index * 0x9e3779b97f4a7c15ULL)) + 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

int uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Multigraph random_multigraph(Rng& rng, int n, int m) {
  if (n < 2 && m > 0) throw DomainError("edges need at least two vertices");
  Multigraph g = Multigraph::with_vertices(n);
  while (g.num_edges() < m) {
    int a = uniform(rng, 0, n - 1);
    int b = uniform(rng, 0, n - 1);
    if (a != b) g.add_edge(a, b);
  }
  return g;
}

Multigraph random_simple_graph(Rng& rng, int n, double p) {
  Multigraph g = Multigraph::with_vertices(n);
  std::bernoulli_distribution coin(p);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng)) g.add_edge(i, j);
    }
  }
  return g;
}

std::optional<Multigraph> configuration_model(Rng& rng, const std::vector<int>& degrees,
                                              int attempts) {
  std::vector<int> stubs;
  for (std::size_t v = 0; v < degrees.size(); ++v) {
    for (int k = 0; k < degrees[v]; ++k) stubs.push_back(static_cast<int>(v));
  }
  if (stubs.size() % 2) return std::nullopt;
  for (int t = 0; t < attempts; ++t) {
    std::shuffle(stubs.begin(), stubs.end(), rng);
    bool loop = false;
    for (std::size_t i = 0; i < stubs.size() && !loop; i += 2) loop = stubs[i] == stubs[i + 1];
    if (loop) continue;
    Multigraph g = Multigraph::with_vertices(static_cast<int>(degrees.size()));
    for (std::size_t i = 0; i < stubs.size(); i += 2) g.add_edge(stubs[i], stubs[i + 1]);
    return g;
  }
  return std::nullopt;
}

ImbalanceSpec random_admissible_imbalance(Rng& rng, const Multigraph& g) {
  const int n = g.num_vertices();
  std::vector<int> l(n, 0);
  for (const Edge& e : g.edges()) {
    int a = g.index_of(e.u), b = g.index_of(e.v);
    if (rng() & 1) std::swap(a, b);
    ++l[a];
    --l[b];
  }
  std::vector<int> deg = g.degrees();
  const int mode = n >= 2 ? uniform(rng, 0, 2) : 0;
  if (mode > 0) {
    // Independent values of the right parity, then +-2 steps until the sum is
    // zero. Mode 2 saturates a random set first and repairs outside it when
    // it can, which tends to break the cut condition.
    std::vector<char> hot(n, 0);
    int sum = 0;
    for (int i = 0; i < n; ++i) {
      hot[i] = mode == 2 && (rng() & 1);
      l[i] = hot[i] ? deg[i] : -deg[i] + 2 * uniform(rng, 0, deg[i]);
      sum += l[i];
    }
    int cold_room = 0;
    for (int i = 0; i < n; ++i) {
      if (!hot[i]) cold_room += l[i] + deg[i];
    }
    while (sum != 0) {
      int i = uniform(rng, 0, n - 1);
      if (sum > 0 && hot[i] && cold_room > 0) continue;
      if (sum > 0 && l[i] - 2 >= -deg[i]) {
        l[i] -= 2;
        sum -= 2;
        if (!hot[i]) cold_room -= 2;
      } else if (sum < 0 && l[i] + 2 <= deg[i]) {
        l[i] += 2;
        sum += 2;
        if (!hot[i]) cold_room += 2;
      }
    }
    return ImbalanceSpec{l};
  }
  const int steps = uniform(rng, 0, 2 * n);
  for (int s = 0; s < steps && n >= 2; ++s) {
    int a = uniform(rng, 0, n - 1), b = uniform(rng, 0, n - 1);
    if (a != b && l[a] + 2 <= deg[a] && l[b] - 2 >= -deg[b]) {
      l[a] += 2;
      l[b] -= 2;
    }
  }
  return ImbalanceSpec{l};
}

Z3Boundary random_boundary(Rng& rng, const Multigraph& g) {
  const int n = g.num_vertices();
  std::vector<int> b(n, 0);
  int sum = 0;
  for (int i = 0; i + 1 < n; ++i) {
    b[i] = uniform(rng, 0, 2);
    sum += b[i];
  }
  if (n > 0) b[n - 1] = (3 - sum % 3) % 3;
  return Z3Boundary{b};
}

Multigraph random_odd5_connected(Rng& rng, int min_order, int max_order) {
  while (true) {
    int n = uniform(rng, min_order, max_order);
    std::vector<int> deg(n);
    for (int& d : deg) d = uniform(rng, 4, 8);
    int sum = std::accumulate(deg.begin(), deg.end(), 0);
    if (sum % 2) {
      int v = uniform(rng, 0, n - 1);
      deg[v] += deg[v] == 8 ? -1 : 1;
    }
    auto g = configuration_model(rng, deg);
    if (!g || !is_connected(*g)) continue;
    auto odd = odd_edge_connectivity(*g);
    if (!odd || odd->size >= 5) return *g;
  }
}

std::pair<Multigraph, VertexId> random_splitting_instance(Rng& rng, int min_order, int max_order) {
  while (true) {
    int n = uniform(rng, min_order, max_order);
    std::vector<int> deg(n);
    for (int& d : deg) d = uniform(rng, 4, 8);
    deg[0] = 2 * uniform(rng, 2, 4);  // the vertex to split
    deg[1] = 5;
    int sum = std::accumulate(deg.begin(), deg.end(), 0);
    if (sum % 2) {
      int v = uniform(rng, 2, n - 1);
      deg[v] += deg[v] == 8 ? -1 : 1;
    }
    auto g = configuration_model(rng, deg);
    if (!g || !is_connected(*g)) continue;
    auto odd = odd_edge_connectivity(*g);
    if (!odd || odd->size != 5) continue;
    Multigraph h = shuffled(rng, *g);
    for (VertexId v : h.vertices()) {
      int d = h.degree(v);
      if (d % 2 == 0 && d >= 4) return {h, v};
    }
  }
}

namespace {

WheelInstance plant_wheel(Rng& rng, Multigraph g, int rim) {
  const int n = g.num_vertices();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  WheelWitness w;
  w.center = order[0];
  for (int i = 1; i <= rim; ++i) w.rim.push_back(order[i]);
  w.odd = rim % 2 == 1;
  for (int i = 0; i < rim; ++i) {
    if (g.multiplicity(w.center, w.rim[i]) == 0) g.add_edge(w.center, w.rim[i]);
    VertexId next = w.rim[(i + 1) % rim];
    if (g.multiplicity(w.rim[i], next) == 0) g.add_edge(w.rim[i], next);
  }
  return WheelInstance{std::move(g), std::move(w)};
}

}  // namespace

WheelInstance random_odd_wheel_instance(Rng& rng, int max_order) {
  static constexpr int kRims[] = {3, 5, 7};
  int rim = kRims[uniform(rng, 0, 2)];
  while (rim + 1 > max_order) rim -= 2;
  if (rim < 3) throw DomainError("an odd wheel needs at least 4 vertices");
  int n = uniform(rng, rim + 1, std::max(rim + 1, max_order));
  int extra = uniform(rng, 0, 2 * n);
  Multigraph base = n >= 2 ? random_multigraph(rng, n, extra) : Multigraph::with_vertices(n);
  WheelInstance inst = plant_wheel(rng, std::move(base), rim);
  if (inst.graph.num_vertices() == rim + 1 && inst.graph.num_edges() == 2 * rim) {
    inst.graph.add_edge(inst.wheel.rim[0], inst.wheel.rim[1]);
  }
  return inst;
}

WheelInstance random_dense_wheel_instance(Rng& rng, int min_order, int max_order) {
  while (true) {
    int n = uniform(rng, min_order, max_order);
    std::uniform_real_distribution<double> dens(0.6, 1.0);
    Multigraph g = random_simple_graph(rng, n, dens(rng));
    int extra = uniform(rng, 0, n);
    for (int k = 0; k < extra; ++k) {
      int a = uniform(rng, 0, n - 1), b = uniform(rng, 0, n - 1);
      if (a != b) g.add_edge(a, b);
    }
    if (edge_connectivity(g).size < 5) continue;
    auto ess = essential_edge_connectivity(g);
    if (ess && ess->size < 8) continue;
    Multigraph h = shuffled(rng, g);
    auto w = find_wheel(h, WheelParity::odd);
    if (!w) continue;
    if (static_cast<int>(w->rim.size()) + 1 == h.num_vertices() &&
        h.num_edges() <= 2 * static_cast<int>(w->rim.size())) {
      continue;
    }
    return WheelInstance{std::move(h), *w};
  }
}

Multigraph shuffled(Rng& rng, const Multigraph& g) {
  const int n = g.num_vertices();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  Multigraph h = Multigraph::with_vertices(n);
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  std::shuffle(edges.begin(), edges.end(), rng);
  for (const Edge& e : edges) h.add_edge(perm[g.index_of(e.u)], perm[g.index_of(e.v)]);
  return h;
}

}  // namespace z3flow::gen
