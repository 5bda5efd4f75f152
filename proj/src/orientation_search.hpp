#pragma once

// Internal search machinery behind the orientation engine.

#include <span>
#include <vector>

#include "z3flow/dense.hpp"

namespace z3flow {

// Finds an orientation with prescribed out-degrees by augmenting paths.
//
// The current orientation is kept between calls, so consecutive targets that
// differ a little are solved with few path reversals. A surplus vertex is one
// with more out-arcs than its target; reversing a directed path from a
// surplus vertex to a deficit vertex moves one unit of out-degree. When a
// surplus vertex reaches no deficit vertex, the set it reaches has no
// outgoing arc and needs more out-arcs than it has inner edges, so no
// orientation exists.
class PathReversalSolver {
 public:
  explicit PathReversalSolver(const DenseGraph& g);

  // Targets must sum to the edge count. Returns false if no orientation has
  // these out-degrees; stuck_set() then holds a violating vertex set.
  bool solve(std::span<const int> target_out);

  // True if edge k currently points from its first endpoint to its second.
  bool forward(int k) const { return forward_[k] != 0; }
  std::span<const int> stuck_set() const { return stuck_; }

 private:
  int tail(int k) const { return forward_[k] ? first_[k] : second_[k]; }
  int head(int k) const { return forward_[k] ? second_[k] : first_[k]; }

  int n_;
  int m_;
  std::vector<int> first_, second_;
  std::vector<char> forward_;
  std::vector<int> out_;
  std::vector<int> incidence_start_, incidence_;
  std::vector<int> excess_, parent_edge_, queue_, stamp_;
  int epoch_ = 0;
  std::vector<int> stuck_;
};

// Decides whether some orientation realizes prescribed residues mod 3.
//
// Each vertex v of degree d gets the candidate out-degrees o in [0, d] with
// 2o - d congruent to the residue; a combination is viable only if its
// out-degrees sum to the edge count. Vertices are ordered by candidate count
// (largest first). The tail of that order is tabulated by partial sum, the
// head is walked depth-first with range pruning, and each zero-sum
// combination is handed to the path reversal solver.
class ResidueSearch {
 public:
  explicit ResidueSearch(const DenseGraph& g);

  // residue[v] in {0,1,2}. On success the orientation is in solver().
  bool feasible(std::span<const int> residue);

  const PathReversalSolver& solver() const { return solver_; }
  long long combinations_tried() const { return tried_; }

 private:
  bool walk(std::size_t pos, int partial);
  bool try_tail_combinations(int need);

  const DenseGraph& g_;
  PathReversalSolver solver_;
  std::vector<std::vector<int>> candidates_;  // per vertex
  std::vector<int> order_;                    // head vertices, then tail
  std::size_t head_size_ = 0;
  std::vector<int> suffix_min_, suffix_max_;  // over head positions
  int tail_min_ = 0, tail_max_ = 0;
  // (partial sum of the tail, mixed-radix code of the tail choice)
  std::vector<std::pair<int, long long>> tail_table_;
  std::vector<int> target_;
  long long tried_ = 0;
};

}  // namespace z3flow
