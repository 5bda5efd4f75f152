#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "z3flow/multigraph.hpp"
#include "z3flow/orientation.hpp"
#include "z3flow/reduction.hpp"

namespace z3flow::gen {

using Rng = std::mt19937_64;

// Decorrelated per-instance seed (splitmix64 of seed ^ index).
std::uint64_t instance_seed(std::uint64_t seed, std::uint64_t index);

int uniform(Rng& rng, int lo, int hi);  // inclusive

// m edges with endpoints drawn uniformly among distinct pairs.
Multigraph random_multigraph(Rng& rng, int n, int m);
// Erdos-Renyi G(n, p).
Multigraph random_simple_graph(Rng& rng, int n, double p);

// Random pairing of degree stubs; pairings with a loop are redrawn. Returns
// nullopt after `attempts` failures or for an odd degree sum.
std::optional<Multigraph> configuration_model(Rng& rng, const std::vector<int>& degrees,
                                              int attempts = 200);

// Admissible exact imbalance: either a random orientation's imbalance moved
// by random +-2 transfers, or independent values of the right parity pushed
// to sum zero. Values stay within [-deg, deg].
ImbalanceSpec random_admissible_imbalance(Rng& rng, const Multigraph& g);

Z3Boundary random_boundary(Rng& rng, const Multigraph& g);

// Connected multigraph of order in [min_order, max_order] with odd
// edge-connectivity at least 5 (or no odd cut at all).
Multigraph random_odd5_connected(Rng& rng, int min_order, int max_order);

// Odd-edge-connectivity exactly 5 and a vertex of even degree >= 4, which
// is returned alongside.
std::pair<Multigraph, VertexId> random_splitting_instance(Rng& rng, int min_order, int max_order);

struct WheelInstance {
  Multigraph graph;
  WheelWitness wheel;
};

// Random multigraph with a planted odd wheel of rim 3, 5 or 7 on randomly
// chosen vertices, plus at least one vertex or edge outside the wheel.
WheelInstance random_odd_wheel_instance(Rng& rng, int max_order);

// 5-edge-connected, essentially 8-edge-connected graph with an odd wheel
// as a proper subgraph.
WheelInstance random_dense_wheel_instance(Rng& rng, int min_order, int max_order);

// Randomly relabels the vertices (ids stay 0..n-1).
Multigraph shuffled(Rng& rng, const Multigraph& g);

}  // namespace z3flow::gen
