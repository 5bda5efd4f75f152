#include "z3flow/reduction.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "z3flow/connectivity.hpp"
#include "z3flow/errors.hpp"
#include "z3flow/orientation.hpp"

namespace z3flow {

namespace {

std::string name(VertexId v) { return "vertex " + std::to_string(v); }

// Depth-first search for the lexicographically first canonical cycle in the
// subgraph of the simple graph d induced on `allowed`.
class RimSearch {
 public:
  RimSearch(const DenseGraph& d, Mask allowed, WheelParity parity, int max_rim)
      : d_(d), allowed_(allowed), parity_(parity), max_rim_(max_rim) {}

  std::optional<std::vector<int>> run() {
    for (Mask rest = allowed_; rest; rest &= rest - 1) {
      int s = std::countr_zero(rest);
      path_ = {s};
      // s is the least rim vertex, so only larger vertices may follow.
      Mask later = allowed_ & ~low_mask(s + 1);
      if (extend(later & ~bit(s))) return path_;
    }
    return std::nullopt;
  }

 private:
  bool wanted(int len) const {
    if (len < 3) return false;
    if (parity_ == WheelParity::odd) return len % 2 == 1;
    if (parity_ == WheelParity::even) return len % 2 == 0;
    return true;
  }

  bool extend(Mask free) {
    int len = static_cast<int>(path_.size());
    int s = path_.front();
    int last = path_.back();
    if (wanted(len) && (d_.neighbors(last) & bit(s)) && path_[1] < last) return true;
    if (max_rim_ > 0 && len >= max_rim_) return false;
    for (Mask next = d_.neighbors(last) & free; next; next &= next - 1) {
      int y = std::countr_zero(next);
      path_.push_back(y);
      if (extend(free & ~bit(y))) return true;
      path_.pop_back();
    }
    return false;
  }

  const DenseGraph& d_;
  Mask allowed_;
  WheelParity parity_;
  int max_rim_;
  std::vector<int> path_;
};

bool connected_mask(const DenseGraph& d, Mask s) {
  if (!s) return true;
  Mask reach = s & (~s + 1);
  Mask frontier = reach;
  while (frontier) {
    Mask grow = 0;
    for (Mask f = frontier; f; f &= f - 1) grow |= d.neighbors(std::countr_zero(f));
    grow &= s & ~reach;
    reach |= grow;
    frontier = grow;
  }
  return reach == s;
}

// Every single edge of g[s] lies on a cycle. Parallel pairs never are bridges.
bool bridgeless_mask(const DenseGraph& d, Mask s) {
  for (Mask a = s; a; a &= a - 1) {
    int i = std::countr_zero(a);
    for (Mask b = d.neighbors(i) & s & ~low_mask(i + 1); b; b &= b - 1) {
      int j = std::countr_zero(b);
      if (d.multiplicity(i, j) != 1) continue;
      // Is j reachable from i in g[s] without the edge ij?
      Mask reach = bit(i);
      Mask frontier = reach;
      while (frontier && !(reach & bit(j))) {
        Mask grow = 0;
        for (Mask f = frontier; f; f &= f - 1) {
          int x = std::countr_zero(f);
          Mask nb = d.neighbors(x);
          if (x == i) nb &= ~bit(j);
          grow |= nb;
        }
        grow &= s & ~reach;
        reach |= grow;
        frontier = grow;
      }
      if (!(reach & bit(j))) return false;
    }
  }
  return true;
}

// Necessary conditions for g[s] to be Z3-connected with |s| >= 3: connected,
// bridgeless, minimum degree 2 and more edges than a cycle.
bool plausible(const DenseGraph& d, Mask s) {
  const int k = popcount(s);
  if (d.inner_edge_count(s) < k + 1) return false;
  for (Mask a = s; a; a &= a - 1) {
    int i = std::countr_zero(a);
    int deg = 0;
    for (Mask b = d.neighbors(i) & s; b; b &= b - 1) {
      deg += d.multiplicity(i, std::countr_zero(b));
    }
    if (deg < 2) return false;
  }
  return connected_mask(d, s) && bridgeless_mask(d, s);
}

std::optional<Mask> find_k5(const DenseGraph& d) {
  const int n = d.n();
  std::vector<int> pick;
  std::function<std::optional<Mask>(Mask, int)> grow = [&](Mask cand, int from) -> std::optional<Mask> {
    if (pick.size() == 5) {
      Mask m = 0;
      for (int v : pick) m |= bit(v);
      return m;
    }
    for (int v = from; v < n; ++v) {
      if (!(cand & bit(v))) continue;
      pick.push_back(v);
      auto hit = grow(cand & d.neighbors(v), v + 1);
      if (hit) return hit;
      pick.pop_back();
    }
    return std::nullopt;
  };
  return grow(d.all(), 0);
}

}  // namespace

VertexSet WheelWitness::vertices() const {
  VertexSet s = rim;
  s.push_back(center);
  return normalized(std::move(s));
}

void validate_wheel(const Multigraph& g, const WheelWitness& w) {
  const std::size_t k = w.rim.size();
  if (k < 3) throw DomainError("a wheel rim needs at least 3 vertices");
  if (w.odd != (k % 2 == 1)) throw DomainError("wheel parity flag does not match the rim length");
  VertexSet all = w.vertices();
  if (all.size() != k + 1) throw DomainError("wheel vertices must be distinct");
  for (VertexId v : all) {
    if (!g.has_vertex(v)) throw DomainError(name(v) + " is not in the graph");
  }
  for (std::size_t i = 0; i < k; ++i) {
    VertexId a = w.rim[i];
    VertexId b = w.rim[(i + 1) % k];
    if (g.multiplicity(w.center, a) == 0) {
      throw DomainError("center is not adjacent to rim " + name(a));
    }
    if (g.multiplicity(a, b) == 0) {
      throw DomainError("rim " + name(a) + " and " + name(b) + " are not adjacent");
    }
  }
}

std::optional<WheelWitness> find_wheel(const Multigraph& g, WheelParity parity, int max_rim) {
  if (g.num_vertices() > 64) throw CapabilityError("find_wheel supports at most 64 vertices");
  DenseGraph d(g);
  for (int c = 0; c < d.n(); ++c) {
    Mask around = d.neighbors(c);
    if (popcount(around) < 3) continue;
    auto rim = RimSearch(d, around, parity, max_rim).run();
    if (!rim) continue;
    WheelWitness w;
    w.center = d.ids()[c];
    for (int i : *rim) w.rim.push_back(d.ids()[i]);
    w.odd = rim->size() % 2 == 1;
    return w;
  }
  return std::nullopt;
}

ContractionResult w_contract(const Multigraph& g, const WContractionSpec& spec) {
  const WheelWitness& w = spec.wheel;
  validate_wheel(g, w);
  if (!w.odd) throw DomainError("W-contraction needs an odd wheel");
  VertexSet x = normalized(spec.x);
  VertexSet y = normalized(spec.y);
  if (x.empty() || y.empty()) throw DomainError("both parts of the partition must be nonempty");
  VertexSet both = x;
  both.insert(both.end(), y.begin(), y.end());
  if (normalized(both) != w.vertices() || both.size() != w.vertices().size()) {
    throw DomainError("X and Y must partition the wheel's vertex set");
  }
  auto rim_pair = [&](const VertexSet& part) {
    if (part.size() != 2) return false;
    const std::size_t k = w.rim.size();
    for (std::size_t i = 0; i < k; ++i) {
      VertexSet p = normalized({w.rim[i], w.rim[(i + 1) % k]});
      if (p == part) return true;
    }
    return false;
  };
  if (!rim_pair(x) && !rim_pair(y)) {
    throw DomainError("one part must be two adjacent rim vertices");
  }
  const int wheel_edges = 2 * static_cast<int>(w.rim.size());
  if (static_cast<int>(w.vertices().size()) == g.num_vertices() && g.num_edges() <= wheel_edges) {
    throw DomainError("the wheel must be a proper subgraph");
  }

  Multigraph h = g;
  auto drop_one = [&](VertexId a, VertexId b) {
    for (const Edge& e : h.edges()) {
      if ((e.u == a && e.v == b) || (e.u == b && e.v == a)) {
        h.remove_edge(e.id);
        return;
      }
    }
  };
  const std::size_t k = w.rim.size();
  for (std::size_t i = 0; i < k; ++i) {
    drop_one(w.center, w.rim[i]);
    drop_one(w.rim[i], w.rim[(i + 1) % k]);
  }

  ContractionResult first = contract(h, x);
  VertexId xi = first.trace.events().back().image;
  ContractionResult second = contract(first.graph, y);
  VertexId yi = second.trace.events().back().image;
  second.graph.add_edge(xi, yi);

  ContractionResult out;
  out.graph = std::move(second.graph);
  out.trace = ReductionTrace(g.vertices());
  out.trace.append(first.trace);
  out.trace.append(second.trace);
  return out;
}

bool Z3ConnectivityCache::is_z3_connected(const DenseGraph& g) {
  CanonicalForm key = canonical_form(g);
  {
    std::lock_guard lock(mutex_);
    auto it = verdicts_.find(key);
    if (it != verdicts_.end()) {
      ++hits_;
      return it->second;
    }
  }
  bool verdict = z3flow::is_z3_connected(g);
  std::lock_guard lock(mutex_);
  verdicts_.emplace(std::move(key), verdict);
  return verdict;
}

std::size_t Z3ConnectivityCache::size() const {
  std::lock_guard lock(mutex_);
  return verdicts_.size();
}

std::size_t Z3ConnectivityCache::hits() const {
  std::lock_guard lock(mutex_);
  return hits_;
}

void Z3ConnectivityCache::clear() {
  std::lock_guard lock(mutex_);
  verdicts_.clear();
  hits_ = 0;
}

Z3ConnectivityCache& default_z3_cache() {
  static Z3ConnectivityCache cache;
  return cache;
}

std::optional<VertexSet> find_z3_subgraph(const Multigraph& g, int size_cap) {
  if (size_cap < 2) throw DomainError("size cap must be at least 2");
  if (g.num_vertices() > 64) throw CapabilityError("subgraph search supports at most 64 vertices");
  DenseGraph d(g);
  const int n = d.n();

  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (d.multiplicity(i, j) >= 2) return d.to_ids(bit(i) | bit(j));
    }
  }
  if (size_cap >= 5) {
    if (auto w = find_wheel(g, WheelParity::even, size_cap - 1)) return w->vertices();
    if (auto k5 = find_k5(d)) return d.to_ids(*k5);
  }

  const int top = std::min(size_cap, n);
  Z3ConnectivityCache& cache = default_z3_cache();
  std::vector<int> pick;
  for (int k = 3; k <= top; ++k) {
    // Lexicographic k-subsets of 0..n-1.
    pick.resize(k);
    for (int i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      Mask s = 0;
      for (int v : pick) s |= bit(v);
      if (plausible(d, s) && cache.is_z3_connected(d.induced(s))) return d.to_ids(s);
      int i = k - 1;
      while (i >= 0 && pick[i] == n - k + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return std::nullopt;
}

ContractionResult z3_reduce(const Multigraph& g, int size_cap) {
  if (size_cap < 2) throw DomainError("size cap must be at least 2");
  ContractionResult out;
  out.graph = g;
  out.trace = ReductionTrace(g.vertices());
  out.trace.set_size_cap(size_cap);
  bool complete = true;
  while (true) {
    if (out.graph.num_vertices() > size_cap) complete = false;
    auto hit = find_z3_subgraph(out.graph, size_cap);
    if (!hit) break;
    ContractionResult step = contract(out.graph, *hit);
    out.graph = std::move(step.graph);
    out.trace.append(step.trace);
  }
  out.trace.set_complete(complete);
  return out;
}

bool is_z3_reduced(const Multigraph& g) {
  return g.num_vertices() < 2 || !find_z3_subgraph(g, g.num_vertices());
}

std::optional<SplitResult> split_vertex(const Multigraph& g, VertexId v, int k) {
  if (!g.has_vertex(v)) throw DomainError(name(v) + " is not in the graph");
  const int deg = g.degree(v);
  if (deg == 2) throw DomainError("splitting does not apply to a vertex of degree 2");
  if (deg == k) throw DomainError("splitting does not apply to a vertex of degree k");
  auto before = odd_edge_connectivity(g);
  if (!before || before->size != k) {
    throw DomainError("graph does not have odd-edge-connectivity " + std::to_string(k));
  }
  std::vector<EdgeId> at = g.incident_edges(v);
  for (std::size_t i = 0; i < at.size(); ++i) {
    for (std::size_t j = i + 1; j < at.size(); ++j) {
      if (g.edge(at[i]).other(v) == g.edge(at[j]).other(v)) continue;
      Multigraph h = lift(g, v, at[i], at[j]);
      auto after = odd_edge_connectivity(h);
      if (after && after->size == k) return SplitResult{std::move(h), at[i], at[j]};
    }
  }
  return std::nullopt;
}

}  // namespace z3flow
