#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "z3flow/multigraph.hpp"

namespace z3flow {

using Mask = std::uint64_t;

inline int popcount(Mask m) { return std::popcount(m); }
inline Mask bit(int i) { return Mask{1} << i; }
inline Mask low_mask(int n) { return n >= 64 ? ~Mask{0} : bit(n) - 1; }

// Index-based snapshot of a multigraph used by the exact search routines.
// Index i corresponds to ids[i], which follows Multigraph::vertices() order.
// Edge k corresponds to Multigraph::edges()[k].
class DenseGraph {
 public:
  DenseGraph() = default;
  explicit DenseGraph(const Multigraph& g);
  // Builds directly from index pairs; ids are 0..n-1.
  DenseGraph(int n, std::span<const std::pair<int, int>> edges);

  int n() const { return n_; }
  int m() const { return static_cast<int>(ends_.size()); }
  int multiplicity(int i, int j) const { return mult_[i * n_ + j]; }
  int degree(int i) const { return degree_[i]; }
  std::span<const int> degrees() const { return degree_; }
  std::span<const std::pair<int, int>> edge_ends() const { return ends_; }
  std::span<const VertexId> ids() const { return ids_; }

  // Simple adjacency as bitmasks; valid when n <= 64.
  Mask neighbors(int i) const { return adj_[i]; }
  bool has_masks() const { return n_ <= 64; }

  // Number of edges with both ends in s, and |boundary(s)|. Need n <= 64.
  int inner_edge_count(Mask s) const;
  int cut_size(Mask s) const;

  // The subgraph induced by s (n <= 64), reindexed in increasing order;
  // ids() of the result are the original ids.
  DenseGraph induced(Mask s) const;

  Mask all() const { return low_mask(n_); }
  VertexSet to_ids(Mask s) const;
  Mask to_mask(std::span<const VertexId> s) const;

  Multigraph to_multigraph() const;

 private:
  void finish();

  int n_ = 0;
  std::vector<VertexId> ids_;
  std::vector<int> mult_;
  std::vector<int> degree_;
  std::vector<std::pair<int, int>> ends_;
  std::vector<Mask> adj_;
};

}  // namespace z3flow
