#pragma once

#include <optional>

#include "z3flow/multigraph.hpp"

namespace z3flow {

// Largest order accepted by the exhaustive subset enumerations.
inline constexpr int kMaxSubsetEnumerationOrder = 24;

struct CutReport {
  int size = 0;
  VertexSet witness;  // one shore of a cut attaining size

  bool odd() const { return size % 2 != 0; }
};

// Minimum |boundary(S)| over nonempty proper S. Computed with unit-capacity
// max-flow from the first vertex to every other vertex; the witness is the
// source shore of the first minimizing sink. A disconnected graph reports 0
// with the component of the first vertex as witness.
CutReport edge_connectivity(const Multigraph& g);

// Minimum odd cut; nullopt when every degree is even. Exhaustive over
// 2^(n-1) shores, so n <= kMaxSubsetEnumerationOrder. Ties go to the
// lexicographically smallest shore.
std::optional<CutReport> odd_edge_connectivity(const Multigraph& g);

// Minimum cut whose two shores both span at least one edge; nullopt when no
// such cut exists. Same enumeration and tie rule as the odd variant.
std::optional<CutReport> essential_edge_connectivity(const Multigraph& g);

struct IndependentSet {
  int size = 0;
  VertexSet members;
};

// Exact maximum independent set of underlying_simple(g) by branch and bound.
IndependentSet independence_number(const Multigraph& g);

// X together with every vertex adjacent to X.
VertexSet neighborhood_closure(const Multigraph& g, std::span<const VertexId> x);

}  // namespace z3flow
