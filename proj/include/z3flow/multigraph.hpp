#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace z3flow {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;

// A set of vertex ids, kept sorted and duplicate free.
using VertexSet = std::vector<VertexId>;

// Returns s sorted with duplicates removed.
VertexSet normalized(VertexSet s);

struct Edge {
  EdgeId id;
  VertexId u;
  VertexId v;

  VertexId other(VertexId w) const { return w == u ? v : u; }
  bool touches(VertexId w) const { return u == w || v == w; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Loopless multigraph with explicit, stable vertex and edge ids.
//
// Vertex ids and edge ids are never reused within one graph's lineage: every
// derived graph (contraction, lifting, ...) continues the id counters of its
// source, so ids in a reduction trace or an orientation stay unambiguous.
// vertices() is always ascending and edges() is always ascending by id.
class Multigraph {
 public:
  Multigraph() = default;

  // Vertices 0..n-1 and no edges.
  static Multigraph with_vertices(int n);

  // Vertices 0..n-1; edges get ids 0..m-1 in the given order.
  static Multigraph from_pairs(int n,
                               std::span<const std::pair<int, int>> pairs);

  VertexId add_vertex();
  void add_vertex(VertexId id);
  EdgeId add_edge(VertexId u, VertexId v);
  void add_edge(EdgeId id, VertexId u, VertexId v);
  void remove_edge(EdgeId id);
  // Removes v together with all incident edges.
  void remove_vertex(VertexId v);

  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  std::span<const VertexId> vertices() const { return vertices_; }
  std::span<const Edge> edges() const { return edges_; }

  bool has_vertex(VertexId v) const;
  bool has_edge(EdgeId e) const;
  const Edge& edge(EdgeId e) const;
  // Position of v in vertices(); throws DomainError for unknown ids.
  int index_of(VertexId v) const;

  int degree(VertexId v) const;
  std::vector<int> degrees() const;  // aligned with vertices()
  std::vector<EdgeId> incident_edges(VertexId v) const;
  std::vector<VertexId> neighbors(VertexId v) const;
  int multiplicity(VertexId u, VertexId v) const;
  bool is_simple() const;

  VertexId next_vertex_id() const { return next_vertex_; }
  EdgeId next_edge_id() const { return next_edge_; }
  // Advances the id counters past those of source, so graphs derived from
  // source never hand out an id source already used.
  void continue_ids_from(const Multigraph& source);

  // Labeled equality: same vertex ids and same (id, endpoints) edge list,
  // with endpoints compared as unordered pairs.
  friend bool operator==(const Multigraph& a, const Multigraph& b);

 private:
  std::vector<VertexId> vertices_;
  std::vector<Edge> edges_;
  VertexId next_vertex_ = 0;
  EdgeId next_edge_ = 0;
};

struct ContractionEvent {
  VertexSet merged;  // ids in the graph the event was applied to
  VertexId image;
};

// Auditable record of a sequence of contractions applied to one graph.
class ReductionTrace {
 public:
  ReductionTrace() = default;
  explicit ReductionTrace(std::span<const VertexId> original);

  void record(VertexSet merged, VertexId image);
  // Appends another trace whose events were applied after this one's.
  void append(const ReductionTrace& later);

  const std::vector<ContractionEvent>& events() const { return events_; }
  const std::map<VertexId, VertexId>& image_map() const { return image_; }
  VertexId image_of(VertexId original) const;

  // False when a size cap kept the search from certifying the final graph
  // as fully reduced.
  bool complete() const { return complete_; }
  void set_complete(bool complete) { complete_ = complete; }
  int size_cap() const { return size_cap_; }
  void set_size_cap(int cap) { size_cap_ = cap; }

 private:
  std::vector<ContractionEvent> events_;
  std::map<VertexId, VertexId> image_;
  bool complete_ = true;
  int size_cap_ = 0;
};

struct ContractionResult {
  Multigraph graph;
  ReductionTrace trace;
};

// Edges with exactly one endpoint in s. Requires s to be a nonempty proper
// subset of V(g).
std::vector<EdgeId> boundary_edges(const Multigraph& g,
                                   std::span<const VertexId> s);

// Edges with one endpoint in u and the other in w; u and w must be disjoint.
std::vector<EdgeId> cross_edges(const Multigraph& g,
                                std::span<const VertexId> u,
                                std::span<const VertexId> w);

// Edges with both endpoints in s.
std::vector<EdgeId> inner_edges(const Multigraph& g,
                                std::span<const VertexId> s);

// Merges s into one fresh vertex. Edges inside s vanish (they would be
// loops); every other edge keeps its id.
ContractionResult contract(const Multigraph& g, std::span<const VertexId> s);

// Replaces e1 = u1v and e2 = u2v by a fresh edge u1u2. Throws ModelError if
// u1 == u2, since that lift would create a loop.
Multigraph lift(const Multigraph& g, VertexId v, EdgeId e1, EdgeId e2);

// One edge (the lowest id) per adjacent pair.
Multigraph underlying_simple(const Multigraph& g);

// g[s] with ids preserved.
Multigraph induced_subgraph(const Multigraph& g, std::span<const VertexId> s);

// V(g) minus s.
VertexSet complement(const Multigraph& g, std::span<const VertexId> s);

int min_degree(const Multigraph& g);
bool is_connected(const Multigraph& g);

}  // namespace z3flow
