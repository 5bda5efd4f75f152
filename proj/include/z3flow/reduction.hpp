#pragma once

#include <cstddef>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "z3flow/canonical.hpp"
#include "z3flow/dense.hpp"
#include "z3flow/multigraph.hpp"

namespace z3flow {

enum class WheelParity { any, odd, even };

struct WheelWitness {
  VertexId center = 0;
  std::vector<VertexId> rim;  // cyclic order
  bool odd = false;           // rim length parity

  VertexSet vertices() const;
};

struct WContractionSpec {
  WheelWitness wheel;
  VertexSet x;
  VertexSet y;
};

// Throws DomainError when w is not a wheel of g (center adjacent to the
// whole rim, consecutive rim vertices adjacent, rim length >= 3, parity flag
// consistent).
void validate_wheel(const Multigraph& g, const WheelWitness& w);

// Smallest center first, then the lexicographically smallest rim written
// from its least vertex towards its smaller neighbour. Searches the
// underlying simple graph. max_rim bounds the rim length (0 = unbounded).
std::optional<WheelWitness> find_wheel(const Multigraph& g,
                                       WheelParity parity = WheelParity::any,
                                       int max_rim = 0);

// Deletes one copy of every wheel edge, contracts X and Y into fresh
// vertices x and y and joins them by a fresh edge.
ContractionResult w_contract(const Multigraph& g, const WContractionSpec& spec);

// Memoized Z3-connectivity verdicts keyed by canonical form. Thread safe.
class Z3ConnectivityCache {
 public:
  bool is_z3_connected(const DenseGraph& g);
  std::size_t size() const;
  std::size_t hits() const;
  void clear();

 private:
  mutable std::mutex mutex_;
  std::unordered_map<CanonicalForm, bool, CanonicalFormHash> verdicts_;
  std::size_t hits_ = 0;
};

Z3ConnectivityCache& default_z3_cache();

// A vertex set S with 2 <= |S| <= size_cap and g[S] Z3-connected. Looks at
// digons, then even wheels, then K5, then every connected induced subgraph
// by increasing size (lexicographic within a size). Throws DomainError for
// size_cap < 2.
std::optional<VertexSet> find_z3_subgraph(const Multigraph& g, int size_cap);

inline constexpr int kDefaultSizeCap = 10;

// Contracts hits of find_z3_subgraph until none is left. The trace is
// complete only if no graph along the way had more than size_cap vertices.
ContractionResult z3_reduce(const Multigraph& g, int size_cap = kDefaultSizeCap);

// No nontrivial Z3-connected subgraph at all (full cap).
bool is_z3_reduced(const Multigraph& g);

struct SplitResult {
  Multigraph graph;
  EdgeId first;
  EdgeId second;
};

// Lifts a pair of edges at v so that the odd-edge-connectivity stays k.
// Requires odd-edge-connectivity exactly k and deg(v) not in {k, 2}.
// Pairs of parallel edges are skipped since their lift would be a loop.
std::optional<SplitResult> split_vertex(const Multigraph& g, VertexId v, int k);

}  // namespace z3flow
