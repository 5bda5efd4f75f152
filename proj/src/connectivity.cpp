#include "z3flow/connectivity.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <queue>
#include <string>

#include "z3flow/dense.hpp"
#include "z3flow/errors.hpp"

namespace z3flow {

namespace {

// Unit-capacity max-flow on an undirected multigraph, capacities given by
// edge multiplicities. Small dense instances only.
class UndirectedFlow {
 public:
  explicit UndirectedFlow(const DenseGraph& g) : g_(g), n_(g.n()) {}

  // Returns the flow value and fills source_side with the vertices reachable
  // from s in the final residual graph.
  int run(int s, int t, std::vector<char>& source_side) {
    residual_.assign(static_cast<std::size_t>(n_) * n_, 0);
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) residual_[i * n_ + j] = g_.multiplicity(i, j);
    }
    int flow = 0;
    std::vector<int> parent(n_);
    while (true) {
      std::fill(parent.begin(), parent.end(), -1);
      parent[s] = s;
      std::queue<int> q;
      q.push(s);
      while (!q.empty() && parent[t] < 0) {
        int x = q.front();
        q.pop();
        for (int y = 0; y < n_; ++y) {
          if (parent[y] < 0 && residual_[x * n_ + y] > 0) {
            parent[y] = x;
            q.push(y);
          }
        }
      }
      if (parent[t] < 0) break;
      for (int y = t; y != s; y = parent[y]) {
        --residual_[parent[y] * n_ + y];
        ++residual_[y * n_ + parent[y]];
      }
      ++flow;
    }
    source_side.assign(n_, 0);
    for (int i = 0; i < n_; ++i) source_side[i] = parent[i] >= 0;
    return flow;
  }

 private:
  const DenseGraph& g_;
  int n_;
  std::vector<int> residual_;
};

// Lexicographic order of the sorted index lists of two sets.
bool lex_less(Mask a, Mask b) {
  if (a == b) return false;
  Mask d = a ^ b;
  Mask low = d & (~d + 1);
  Mask above = ~((low << 1) - 1);
  if (a & low) return (b & above) != 0;
  return (a & above) == 0;
}

enum class CutKind { kOdd, kEssential };

// Walks every shore containing vertex 0 in Gray-code order, maintaining the
// cut size and the number of edges inside the shore incrementally.
std::optional<CutReport> enumerate_cuts(const Multigraph& g, CutKind kind) {
  const int n = g.num_vertices();
  if (n < 2) throw DomainError("cut enumeration needs at least two vertices");
  if (n > kMaxSubsetEnumerationOrder) {
    throw CapabilityError("exhaustive cut enumeration supports at most " +
                          std::to_string(kMaxSubsetEnumerationOrder) +
                          " vertices, got " + std::to_string(n));
  }
  DenseGraph d(g);

  // planes[p][v] holds the neighbours u with bit p of multiplicity(v, u) set,
  // so weight(v, S) = sum_p 2^p * popcount(planes[p][v] & S).
  int max_mult = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) max_mult = std::max(max_mult, d.multiplicity(i, j));
  }
  const int num_planes = std::max(1, static_cast<int>(std::bit_width(static_cast<unsigned>(max_mult))));
  std::vector<std::vector<Mask>> planes(num_planes, std::vector<Mask>(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      int mu = d.multiplicity(i, j);
      for (int p = 0; p < num_planes; ++p) {
        if (mu & (1 << p)) planes[p][i] |= bit(j);
      }
    }
  }
  auto weight = [&](int v, Mask s) {
    int w = 0;
    for (int p = 0; p < num_planes; ++p) w += popcount(planes[p][v] & s) << p;
    return w;
  };

  const Mask full = d.all();
  const int total_edges = d.m();
  Mask s = bit(0);
  int cut = d.degree(0);
  int inside = 0;
  bool found = false;
  int best = std::numeric_limits<int>::max();
  Mask best_shore = 0;

  auto consider = [&]() {
    if (s == full) return;
    if (kind == CutKind::kOdd) {
      if (cut % 2 == 0) return;
    } else {
      int outside = total_edges - inside - cut;
      if (inside == 0 || outside == 0) return;
    }
    if (!found || cut < best || (cut == best && lex_less(s, best_shore))) {
      found = true;
      best = cut;
      best_shore = s;
    }
  };

  consider();
  const std::uint64_t steps = std::uint64_t{1} << (n - 1);
  for (std::uint64_t k = 1; k < steps; ++k) {
    int v = std::countr_zero(k) + 1;
    if (s & bit(v)) {
      s &= ~bit(v);
      int w = weight(v, s);
      cut -= d.degree(v) - 2 * w;
      inside -= w;
    } else {
      int w = weight(v, s);
      cut += d.degree(v) - 2 * w;
      inside += w;
      s |= bit(v);
    }
    consider();
  }
  if (!found) return std::nullopt;
  CutReport report{best, d.to_ids(best_shore)};
  if (static_cast<int>(boundary_edges(g, report.witness).size()) != report.size) {
    throw std::logic_error("cut witness does not reproduce the reported size");
  }
  return report;
}

// Upper bound on the independence number of g[cand] via a greedy clique
// cover.
int clique_cover_bound(const DenseGraph& d, Mask cand) {
  int cliques = 0;
  while (cand) {
    int v = std::countr_zero(cand);
    Mask clique = bit(v);
    Mask common = d.neighbors(v) & cand;
    while (common) {
      int u = std::countr_zero(common);
      clique |= bit(u);
      common &= d.neighbors(u);
    }
    cand &= ~clique;
    ++cliques;
  }
  return cliques;
}

class IndependentSetSearch {
 public:
  explicit IndependentSetSearch(const DenseGraph& d) : d_(d) {}

  Mask run() {
    search(d_.all(), 0, 0);
    return best_set_;
  }

 private:
  void search(Mask cand, int size, Mask current) {
    if (cand == 0) {
      if (size > best_) {
        best_ = size;
        best_set_ = current;
      }
      return;
    }
    if (size + popcount(cand) <= best_) return;
    if (size + clique_cover_bound(d_, cand) <= best_) return;

    int min_v = -1, min_deg = 65, max_v = -1, max_deg = -1;
    for (Mask r = cand; r; r &= r - 1) {
      int v = std::countr_zero(r);
      int deg = popcount(d_.neighbors(v) & cand);
      if (deg < min_deg) {
        min_deg = deg;
        min_v = v;
      }
      if (deg > max_deg) {
        max_deg = deg;
        max_v = v;
      }
    }
    // A vertex with at most one neighbour left belongs to some maximum
    // independent set of g[cand].
    if (min_deg <= 1) {
      search(cand & ~(d_.neighbors(min_v) | bit(min_v)), size + 1,
             current | bit(min_v));
      return;
    }
    search(cand & ~(d_.neighbors(max_v) | bit(max_v)), size + 1,
           current | bit(max_v));
    search(cand & ~bit(max_v), size, current);
  }

  const DenseGraph& d_;
  int best_ = -1;
  Mask best_set_ = 0;
};

}  // namespace

CutReport edge_connectivity(const Multigraph& g) {
  const int n = g.num_vertices();
  if (n < 2) throw DomainError("edge connectivity needs at least two vertices");
  DenseGraph d(g);
  UndirectedFlow flow(d);
  int best = std::numeric_limits<int>::max();
  std::vector<char> side, best_side;
  for (int t = 1; t < n; ++t) {
    int value = flow.run(0, t, side);
    if (value < best) {
      best = value;
      best_side = side;
      if (best == 0) break;
    }
  }
  CutReport report;
  report.size = best;
  for (int i = 0; i < n; ++i) {
    if (best_side[i]) report.witness.push_back(d.ids()[i]);
  }
  if (static_cast<int>(boundary_edges(g, report.witness).size()) != report.size) {
    throw std::logic_error("min-cut witness does not reproduce the flow value");
  }
  return report;
}

std::optional<CutReport> odd_edge_connectivity(const Multigraph& g) {
  if (g.num_vertices() < 2) {
    throw DomainError("odd edge connectivity needs at least two vertices");
  }
  std::vector<int> deg = g.degrees();
  if (std::none_of(deg.begin(), deg.end(), [](int x) { return x % 2 != 0; })) {
    return std::nullopt;
  }
  return enumerate_cuts(g, CutKind::kOdd);
}

std::optional<CutReport> essential_edge_connectivity(const Multigraph& g) {
  return enumerate_cuts(g, CutKind::kEssential);
}

IndependentSet independence_number(const Multigraph& g) {
  if (g.num_vertices() == 0) return {};
  if (g.num_vertices() > 64) {
    throw CapabilityError("independence number supports at most 64 vertices");
  }
  DenseGraph d(g);
  Mask best = IndependentSetSearch(d).run();
  return IndependentSet{popcount(best), d.to_ids(best)};
}

VertexSet neighborhood_closure(const Multigraph& g, std::span<const VertexId> x) {
  if (x.empty()) throw DomainError("neighborhood closure of an empty set");
  VertexSet out(x.begin(), x.end());
  for (VertexId v : x) {
    if (!g.has_vertex(v)) {
      throw DomainError("vertex " + std::to_string(v) + " is not in the graph");
    }
  }
  VertexSet base = normalized(out);
  for (const Edge& e : g.edges()) {
    bool in_u = std::binary_search(base.begin(), base.end(), e.u);
    bool in_v = std::binary_search(base.begin(), base.end(), e.v);
    if (in_u && !in_v) out.push_back(e.v);
    if (in_v && !in_u) out.push_back(e.u);
  }
  return normalized(std::move(out));
}

}  // namespace z3flow
