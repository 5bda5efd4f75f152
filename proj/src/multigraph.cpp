#include "z3flow/multigraph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "z3flow/errors.hpp"

namespace z3flow {

namespace {

std::string vertex_name(VertexId v) { return "vertex " + std::to_string(v); }

bool contains(std::span<const VertexId> sorted, VertexId v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

// Validates that s (any order) is a duplicate-free subset of V(g) and returns
// it sorted.
VertexSet checked_subset(const Multigraph& g, std::span<const VertexId> s) {
  VertexSet out(s.begin(), s.end());
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
    throw DomainError("vertex set contains a duplicate");
  }
  for (VertexId v : out) {
    if (!g.has_vertex(v)) {
      throw DomainError(vertex_name(v) + " is not in the graph");
    }
  }
  return out;
}

}  // namespace

VertexSet normalized(VertexSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

Multigraph Multigraph::with_vertices(int n) {
  Multigraph g;
  for (int i = 0; i < n; ++i) g.add_vertex();
  return g;
}

Multigraph Multigraph::from_pairs(int n,
                                  std::span<const std::pair<int, int>> pairs) {
  Multigraph g = with_vertices(n);
  for (auto [u, v] : pairs) g.add_edge(u, v);
  return g;
}

VertexId Multigraph::add_vertex() {
  VertexId id = next_vertex_++;
  vertices_.push_back(id);
  return id;
}

void Multigraph::add_vertex(VertexId id) {
  if (id < 0) throw DomainError("vertex ids must be nonnegative");
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), id);
  if (it != vertices_.end() && *it == id) {
    throw DomainError(vertex_name(id) + " already exists");
  }
  vertices_.insert(it, id);
  next_vertex_ = std::max(next_vertex_, id + 1);
}

EdgeId Multigraph::add_edge(VertexId u, VertexId v) {
  EdgeId id = next_edge_;
  add_edge(id, u, v);
  return id;
}

void Multigraph::add_edge(EdgeId id, VertexId u, VertexId v) {
  if (u == v) throw ModelError("loop at " + vertex_name(u));
  if (!has_vertex(u)) throw DomainError(vertex_name(u) + " is not in the graph");
  if (!has_vertex(v)) throw DomainError(vertex_name(v) + " is not in the graph");
  if (id < 0) throw DomainError("edge ids must be nonnegative");
  auto it = std::lower_bound(
      edges_.begin(), edges_.end(), id,
      [](const Edge& e, EdgeId key) { return e.id < key; });
  if (it != edges_.end() && it->id == id) {
    throw DomainError("edge " + std::to_string(id) + " already exists");
  }
  edges_.insert(it, Edge{id, u, v});
  next_edge_ = std::max(next_edge_, id + 1);
}

void Multigraph::remove_edge(EdgeId id) {
  auto it = std::lower_bound(
      edges_.begin(), edges_.end(), id,
      [](const Edge& e, EdgeId key) { return e.id < key; });
  if (it == edges_.end() || it->id != id) {
    throw DomainError("edge " + std::to_string(id) + " is not in the graph");
  }
  edges_.erase(it);
}

void Multigraph::remove_vertex(VertexId v) {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) {
    throw DomainError(vertex_name(v) + " is not in the graph");
  }
  vertices_.erase(it);
  std::erase_if(edges_, [v](const Edge& e) { return e.touches(v); });
}

void Multigraph::continue_ids_from(const Multigraph& source) {
  next_vertex_ = std::max(next_vertex_, source.next_vertex_);
  next_edge_ = std::max(next_edge_, source.next_edge_);
}

bool Multigraph::has_vertex(VertexId v) const { return contains(vertices_, v); }

bool Multigraph::has_edge(EdgeId e) const {
  auto it = std::lower_bound(
      edges_.begin(), edges_.end(), e,
      [](const Edge& x, EdgeId key) { return x.id < key; });
  return it != edges_.end() && it->id == e;
}

const Edge& Multigraph::edge(EdgeId e) const {
  auto it = std::lower_bound(
      edges_.begin(), edges_.end(), e,
      [](const Edge& x, EdgeId key) { return x.id < key; });
  if (it == edges_.end() || it->id != e) {
    throw DomainError("edge " + std::to_string(e) + " is not in the graph");
  }
  return *it;
}

int Multigraph::index_of(VertexId v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) {
    throw DomainError(vertex_name(v) + " is not in the graph");
  }
  return static_cast<int>(it - vertices_.begin());
}

int Multigraph::degree(VertexId v) const {
  index_of(v);
  return static_cast<int>(std::count_if(
      edges_.begin(), edges_.end(), [v](const Edge& e) { return e.touches(v); }));
}

std::vector<int> Multigraph::degrees() const {
  std::vector<int> deg(vertices_.size(), 0);
  for (const Edge& e : edges_) {
    ++deg[index_of(e.u)];
    ++deg[index_of(e.v)];
  }
  return deg;
}

std::vector<EdgeId> Multigraph::incident_edges(VertexId v) const {
  index_of(v);
  std::vector<EdgeId> out;
  for (const Edge& e : edges_) {
    if (e.touches(v)) out.push_back(e.id);
  }
  return out;
}

std::vector<VertexId> Multigraph::neighbors(VertexId v) const {
  index_of(v);
  VertexSet out;
  for (const Edge& e : edges_) {
    if (e.touches(v)) out.push_back(e.other(v));
  }
  return normalized(std::move(out));
}

int Multigraph::multiplicity(VertexId u, VertexId v) const {
  return static_cast<int>(
      std::count_if(edges_.begin(), edges_.end(), [u, v](const Edge& e) {
        return (e.u == u && e.v == v) || (e.u == v && e.v == u);
      }));
}

bool Multigraph::is_simple() const {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  pairs.reserve(edges_.size());
  for (const Edge& e : edges_) pairs.emplace_back(std::minmax(e.u, e.v));
  std::sort(pairs.begin(), pairs.end());
  return std::adjacent_find(pairs.begin(), pairs.end()) == pairs.end();
}

bool operator==(const Multigraph& a, const Multigraph& b) {
  if (a.vertices_ != b.vertices_ || a.edges_.size() != b.edges_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.edges_.size(); ++i) {
    const Edge& x = a.edges_[i];
    const Edge& y = b.edges_[i];
    if (x.id != y.id || std::minmax(x.u, x.v) != std::minmax(y.u, y.v)) {
      return false;
    }
  }
  return true;
}

ReductionTrace::ReductionTrace(std::span<const VertexId> original) {
  for (VertexId v : original) image_[v] = v;
}

void ReductionTrace::record(VertexSet merged, VertexId image) {
  merged = normalized(std::move(merged));
  for (auto& [orig, img] : image_) {
    if (std::binary_search(merged.begin(), merged.end(), img)) img = image;
  }
  events_.push_back(ContractionEvent{std::move(merged), image});
}

void ReductionTrace::append(const ReductionTrace& later) {
  for (const ContractionEvent& ev : later.events()) record(ev.merged, ev.image);
  complete_ = complete_ && later.complete();
  size_cap_ = std::max(size_cap_, later.size_cap());
}

VertexId ReductionTrace::image_of(VertexId original) const {
  auto it = image_.find(original);
  if (it == image_.end()) {
    throw DomainError(vertex_name(original) + " is not an original vertex");
  }
  return it->second;
}

std::vector<EdgeId> boundary_edges(const Multigraph& g,
                                   std::span<const VertexId> s) {
  VertexSet in = checked_subset(g, s);
  if (in.empty() || static_cast<int>(in.size()) == g.num_vertices()) {
    throw DomainError("boundary requires a nonempty proper vertex subset");
  }
  std::vector<EdgeId> out;
  for (const Edge& e : g.edges()) {
    if (contains(in, e.u) != contains(in, e.v)) out.push_back(e.id);
  }
  return out;
}

std::vector<EdgeId> cross_edges(const Multigraph& g,
                                std::span<const VertexId> u,
                                std::span<const VertexId> w) {
  VertexSet a = checked_subset(g, u);
  VertexSet b = checked_subset(g, w);
  VertexSet both;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(both));
  if (!both.empty()) throw DomainError("vertex sets overlap");
  std::vector<EdgeId> out;
  for (const Edge& e : g.edges()) {
    if ((contains(a, e.u) && contains(b, e.v)) ||
        (contains(a, e.v) && contains(b, e.u))) {
      out.push_back(e.id);
    }
  }
  return out;
}

std::vector<EdgeId> inner_edges(const Multigraph& g,
                                std::span<const VertexId> s) {
  VertexSet in = checked_subset(g, s);
  std::vector<EdgeId> out;
  for (const Edge& e : g.edges()) {
    if (contains(in, e.u) && contains(in, e.v)) out.push_back(e.id);
  }
  return out;
}

ContractionResult contract(const Multigraph& g, std::span<const VertexId> s) {
  VertexSet merged = checked_subset(g, s);
  if (merged.empty()) throw DomainError("cannot contract an empty vertex set");

  ContractionResult result;
  Multigraph& out = result.graph;
  for (VertexId v : g.vertices()) {
    if (!contains(merged, v)) out.add_vertex(v);
  }
  VertexId image = g.next_vertex_id();
  out.add_vertex(image);
  auto map = [&](VertexId v) { return contains(merged, v) ? image : v; };
  for (const Edge& e : g.edges()) {
    VertexId a = map(e.u);
    VertexId b = map(e.v);
    if (a != b) out.add_edge(e.id, a, b);
  }
  out.continue_ids_from(g);
  result.trace = ReductionTrace(g.vertices());
  result.trace.record(merged, image);
  return result;
}

Multigraph lift(const Multigraph& g, VertexId v, EdgeId e1, EdgeId e2) {
  if (e1 == e2) throw DomainError("lifting needs two distinct edges");
  const Edge& a = g.edge(e1);
  const Edge& b = g.edge(e2);
  if (!a.touches(v) || !b.touches(v)) {
    throw DomainError("both lifted edges must be incident to " +
                      vertex_name(v));
  }
  VertexId u1 = a.other(v);
  VertexId u2 = b.other(v);
  if (u1 == u2) {
    throw ModelError("lifting edges " + std::to_string(e1) + " and " +
                     std::to_string(e2) + " at " + vertex_name(v) +
                     " would create a loop at " + vertex_name(u1));
  }
  Multigraph out = g;
  out.remove_edge(e1);
  out.remove_edge(e2);
  out.add_edge(u1, u2);
  return out;
}

Multigraph underlying_simple(const Multigraph& g) {
  Multigraph out;
  for (VertexId v : g.vertices()) out.add_vertex(v);
  std::vector<std::pair<VertexId, VertexId>> seen;
  for (const Edge& e : g.edges()) {
    std::pair<VertexId, VertexId> key = std::minmax(e.u, e.v);
    auto it = std::lower_bound(seen.begin(), seen.end(), key);
    if (it != seen.end() && *it == key) continue;
    seen.insert(it, key);
    out.add_edge(e.id, e.u, e.v);
  }
  out.continue_ids_from(g);
  return out;
}

Multigraph induced_subgraph(const Multigraph& g, std::span<const VertexId> s) {
  VertexSet in = checked_subset(g, s);
  Multigraph out;
  for (VertexId v : in) out.add_vertex(v);
  for (const Edge& e : g.edges()) {
    if (contains(in, e.u) && contains(in, e.v)) out.add_edge(e.id, e.u, e.v);
  }
  out.continue_ids_from(g);
  return out;
}

VertexSet complement(const Multigraph& g, std::span<const VertexId> s) {
  VertexSet in = checked_subset(g, s);
  VertexSet out;
  for (VertexId v : g.vertices()) {
    if (!contains(in, v)) out.push_back(v);
  }
  return out;
}

int min_degree(const Multigraph& g) {
  if (g.num_vertices() == 0) return 0;
  std::vector<int> deg = g.degrees();
  return *std::min_element(deg.begin(), deg.end());
}

bool is_connected(const Multigraph& g) {
  const int n = g.num_vertices();
  if (n <= 1) return true;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = n;
  for (const Edge& e : g.edges()) {
    int a = find(g.index_of(e.u));
    int b = find(g.index_of(e.v));
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

}  // namespace z3flow
