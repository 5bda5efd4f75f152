#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "z3flow/dense.hpp"
#include "z3flow/multigraph.hpp"

namespace z3flow {

// Largest order accepted by the boundary sweep in is_z3_connected.
inline constexpr int kMaxZ3ConnectivityOrder = 24;

struct Arc {
  EdgeId edge;
  VertexId tail;
  VertexId head;
  friend bool operator==(const Arc&, const Arc&) = default;
};

// One direction per edge, sorted by edge id.
struct Orientation {
  std::vector<Arc> arcs;

  // d+(v) - d-(v) for every vertex, aligned with g.vertices().
  std::vector<int> imbalance(const Multigraph& g) const;
  // Every edge of g appears exactly once with its own endpoints.
  bool is_orientation_of(const Multigraph& g) const;
  Orientation reversed() const;
};

// Exact out-minus-in target per vertex, aligned with Multigraph::vertices().
struct ImbalanceSpec {
  std::vector<int> values;
};

// Target residues modulo 3 per vertex, aligned with Multigraph::vertices().
struct Z3Boundary {
  std::vector<int> values;
};

// Throws DomainError unless the target has one entry per vertex, sums to zero,
// matches every degree's parity and stays within [-deg, deg].
void validate_imbalance(const Multigraph& g, const ImbalanceSpec& spec);
// Throws DomainError unless b has one entry per vertex, every entry lies in
// {0, 1, 2} and the entries sum to 0 mod 3.
void validate_boundary(const Multigraph& g, const Z3Boundary& b);

// Outcome of an exact-imbalance query: a witness, or a vertex set S with
// |sum_S l| > |boundary(S)| showing that none exists.
struct ImbalanceOutcome {
  std::optional<Orientation> orientation;
  std::optional<VertexSet> violating_set;

  bool feasible() const { return orientation.has_value(); }
};

// Hakimi feasibility via augmenting paths: starts from an arbitrary
// orientation and reverses directed paths from vertices with too many
// out-arcs to vertices with too few.
ImbalanceOutcome solve_imbalance(const Multigraph& g, const ImbalanceSpec& spec);
bool hakimi_feasible(const Multigraph& g, const ImbalanceSpec& spec);
std::optional<Orientation> orient_with_imbalance(const Multigraph& g,
                                                 const ImbalanceSpec& spec);

// Orientation with every imbalance divisible by 3, if one exists.
std::optional<Orientation> mod3_orientation(const Multigraph& g);

// Orientation with imbalance congruent to b(v) mod 3 at every vertex.
std::optional<Orientation> z3_orientation(const Multigraph& g,
                                          const Z3Boundary& b);

struct Z3ConnectivityReport {
  bool connected = false;
  std::optional<Z3Boundary> failing_boundary;
  std::int64_t boundaries_checked = 0;
};

// Sweeps every admissible boundary up to the b <-> -b symmetry, starting
// with b = 0, and stops at the first one without an orientation.
Z3ConnectivityReport z3_connectivity(const Multigraph& g);
bool is_z3_connected(const Multigraph& g);

// Index-level entry points shared with the reduction engine.
bool is_z3_connected(const DenseGraph& g);
bool has_mod3_orientation(const DenseGraph& g);

}  // namespace z3flow
