#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "z3flow/dense.hpp"
#include "z3flow/multigraph.hpp"

namespace z3flow {

// Isomorphism invariant of a multigraph: the lexicographically smallest
// upper triangle of the multiplicity matrix over all relabelings reachable
// by colour refinement and individualization. Two graphs are isomorphic iff
// their forms are equal.
struct CanonicalForm {
  int n = 0;
  std::vector<int> certificate;  // row-major, i < j

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalFormHash {
  std::size_t operator()(const CanonicalForm& f) const;
};

// labeling, if given, receives the canonical position of every index.
CanonicalForm canonical_form(const DenseGraph& g, std::vector<int>* labeling = nullptr);
CanonicalForm canonical_form(const Multigraph& g);

bool isomorphic(const Multigraph& a, const Multigraph& b);

// The canonical representative, on vertices 0..n-1.
Multigraph to_multigraph(const CanonicalForm& f);

}  // namespace z3flow
