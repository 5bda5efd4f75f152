#include "z3flow/dense.hpp"

#include <algorithm>

#include "z3flow/errors.hpp"

namespace z3flow {

DenseGraph::DenseGraph(const Multigraph& g)
    : n_(g.num_vertices()), ids_(g.vertices().begin(), g.vertices().end()) {
  ends_.reserve(g.edges().size());
  for (const Edge& e : g.edges()) {
    ends_.emplace_back(g.index_of(e.u), g.index_of(e.v));
  }
  finish();
}

DenseGraph::DenseGraph(int n, std::span<const std::pair<int, int>> edges)
    : n_(n), ids_(n), ends_(edges.begin(), edges.end()) {
  for (int i = 0; i < n; ++i) ids_[i] = i;
  for (auto [a, b] : ends_) {
    if (a == b) throw ModelError("loop at vertex " + std::to_string(a));
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw DomainError("edge endpoint out of range");
    }
  }
  finish();
}

void DenseGraph::finish() {
  mult_.assign(static_cast<std::size_t>(n_) * n_, 0);
  degree_.assign(n_, 0);
  adj_.assign(n_ <= 64 ? n_ : 0, 0);
  for (auto [a, b] : ends_) {
    ++mult_[a * n_ + b];
    ++mult_[b * n_ + a];
    ++degree_[a];
    ++degree_[b];
    if (n_ <= 64) {
      adj_[a] |= bit(b);
      adj_[b] |= bit(a);
    }
  }
}

int DenseGraph::inner_edge_count(Mask s) const {
  int twice = 0;
  for (Mask r = s; r; r &= r - 1) {
    int i = std::countr_zero(r);
    for (Mask t = adj_[i] & s; t; t &= t - 1) {
      twice += multiplicity(i, std::countr_zero(t));
    }
  }
  return twice / 2;
}

int DenseGraph::cut_size(Mask s) const {
  int total = 0;
  for (Mask r = s; r; r &= r - 1) total += degree_[std::countr_zero(r)];
  return total - 2 * inner_edge_count(s);
}

DenseGraph DenseGraph::induced(Mask s) const {
  if (n_ > 64) throw CapabilityError("induced() needs at most 64 vertices");
  std::vector<int> index(n_, -1);
  DenseGraph out;
  for (int i = 0; i < n_; ++i) {
    if (s & bit(i)) {
      index[i] = out.n_++;
      out.ids_.push_back(ids_[i]);
    }
  }
  for (auto [a, b] : ends_) {
    if (index[a] >= 0 && index[b] >= 0) out.ends_.emplace_back(index[a], index[b]);
  }
  out.finish();
  return out;
}

VertexSet DenseGraph::to_ids(Mask s) const {
  VertexSet out;
  for (Mask r = s; r; r &= r - 1) out.push_back(ids_[std::countr_zero(r)]);
  return out;
}

Mask DenseGraph::to_mask(std::span<const VertexId> s) const {
  if (n_ > 64) throw CapabilityError("vertex masks need at most 64 vertices");
  Mask out = 0;
  for (VertexId v : s) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
    if (it == ids_.end() || *it != v) {
      throw DomainError("vertex " + std::to_string(v) + " is not in the graph");
    }
    out |= bit(static_cast<int>(it - ids_.begin()));
  }
  return out;
}

Multigraph DenseGraph::to_multigraph() const {
  Multigraph g;
  for (VertexId id : ids_) g.add_vertex(id);
  for (auto [a, b] : ends_) g.add_edge(ids_[a], ids_[b]);
  return g;
}

}  // namespace z3flow
