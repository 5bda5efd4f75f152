#pragma once

// Exhaustive reference deciders. They share no code with the flow-based
// engine and exist to cross-check it on small instances.

#include <optional>

#include "z3flow/multigraph.hpp"
#include "z3flow/orientation.hpp"

namespace z3flow::oracle {

inline constexpr int kMaxBruteForceEdges = 20;

// Tries all 2^|E| orientations.
std::optional<Orientation> brute_force_imbalance(const Multigraph& g,
                                                 const ImbalanceSpec& spec);
std::optional<Orientation> brute_force_boundary(const Multigraph& g,
                                                const Z3Boundary& b);

// Z3-connected iff every admissible residue vector is hit by some of the
// 2^|E| orientations.
bool brute_force_z3_connected(const Multigraph& g);

// First nonempty proper S (in mask order) with |sum_S l| > |boundary(S)|.
std::optional<VertexSet> cut_condition_violation(const Multigraph& g,
                                                 const ImbalanceSpec& spec);

}  // namespace z3flow::oracle
