#include "z3flow/oracle.hpp"

#include <bit>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <string>

#include "z3flow/connectivity.hpp"
#include "z3flow/errors.hpp"

namespace z3flow::oracle {

namespace {

struct IndexedEdges {
  std::vector<int> a, b;
  int n = 0;
};

IndexedEdges index_edges(const Multigraph& g) {
  if (g.num_edges() > kMaxBruteForceEdges) {
    throw CapabilityError("brute force supports at most " +
                          std::to_string(kMaxBruteForceEdges) + " edges, got " +
                          std::to_string(g.num_edges()));
  }
  IndexedEdges out;
  out.n = g.num_vertices();
  for (const Edge& e : g.edges()) {
    out.a.push_back(g.index_of(e.u));
    out.b.push_back(g.index_of(e.v));
  }
  return out;
}

// Visits every orientation in Gray-code order. Bit k of the state set means
// edge k points from b to a. visit(state, imbalance) returns true to stop.
std::optional<std::uint32_t> for_each_orientation(
    const IndexedEdges& e,
    const std::function<bool(std::uint32_t, const std::vector<int>&)>& visit) {
  const int m = static_cast<int>(e.a.size());
  std::vector<int> imb(e.n, 0);
  for (int k = 0; k < m; ++k) {
    ++imb[e.a[k]];
    --imb[e.b[k]];
  }
  std::uint32_t state = 0;
  if (visit(state, imb)) return state;
  const std::uint64_t total = std::uint64_t{1} << m;
  for (std::uint64_t i = 1; i < total; ++i) {
    int k = std::countr_zero(i);
    state ^= std::uint32_t{1} << k;
    int delta = (state >> k) & 1 ? -2 : 2;
    imb[e.a[k]] += delta;
    imb[e.b[k]] -= delta;
    if (visit(state, imb)) return state;
  }
  return std::nullopt;
}

Orientation build(const Multigraph& g, std::uint32_t state) {
  Orientation o;
  int k = 0;
  for (const Edge& e : g.edges()) {
    bool flipped = (state >> k++) & 1;
    o.arcs.push_back(flipped ? Arc{e.id, e.v, e.u} : Arc{e.id, e.u, e.v});
  }
  return o;
}

int mod3(int x) { return ((x % 3) + 3) % 3; }

}  // namespace

std::optional<Orientation> brute_force_imbalance(const Multigraph& g,
                                                 const ImbalanceSpec& spec) {
  validate_imbalance(g, spec);
  IndexedEdges e = index_edges(g);
  auto hit = for_each_orientation(e, [&](std::uint32_t, const std::vector<int>& imb) {
    return imb == spec.values;
  });
  if (!hit) return std::nullopt;
  return build(g, *hit);
}

std::optional<Orientation> brute_force_boundary(const Multigraph& g,
                                                const Z3Boundary& b) {
  validate_boundary(g, b);
  IndexedEdges e = index_edges(g);
  auto hit = for_each_orientation(e, [&](std::uint32_t, const std::vector<int>& imb) {
    for (std::size_t i = 0; i < imb.size(); ++i) {
      if (mod3(imb[i]) != b.values[i]) return false;
    }
    return true;
  });
  if (!hit) return std::nullopt;
  return build(g, *hit);
}

bool brute_force_z3_connected(const Multigraph& g) {
  const int n = g.num_vertices();
  if (n <= 1) return true;
  if (n > 13) throw CapabilityError("brute-force Z3 check supports at most 13 vertices");
  IndexedEdges e = index_edges(g);
  // Residue vectors are coded in base 3 over the first n-1 vertices; the
  // last residue is forced by the zero sum.
  std::int64_t codes = 1;
  for (int i = 0; i + 1 < n; ++i) codes *= 3;
  std::vector<char> hit(codes, 0);
  std::int64_t remaining = codes;
  for_each_orientation(e, [&](std::uint32_t, const std::vector<int>& imb) {
    std::int64_t code = 0;
    for (int i = n - 2; i >= 0; --i) code = code * 3 + mod3(imb[i]);
    if (!hit[code]) {
      hit[code] = 1;
      --remaining;
    }
    return remaining == 0;
  });
  return remaining == 0;
}

std::optional<VertexSet> cut_condition_violation(const Multigraph& g,
                                                 const ImbalanceSpec& spec) {
  validate_imbalance(g, spec);
  const int n = g.num_vertices();
  if (n > kMaxSubsetEnumerationOrder) {
    throw CapabilityError("cut condition enumeration supports at most " +
                          std::to_string(kMaxSubsetEnumerationOrder) + " vertices");
  }
  std::vector<std::pair<int, int>> ends;
  for (const Edge& e : g.edges()) ends.emplace_back(g.index_of(e.u), g.index_of(e.v));
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  for (std::uint32_t s = 1; s < full; ++s) {
    int sum = 0;
    for (int i = 0; i < n; ++i) {
      if ((s >> i) & 1) sum += spec.values[i];
    }
    int cut = 0;
    for (auto [a, b] : ends) cut += ((s >> a) & 1) != ((s >> b) & 1);
    if (std::abs(sum) > cut) {
      VertexSet out;
      for (int i = 0; i < n; ++i) {
        if ((s >> i) & 1) out.push_back(g.vertices()[i]);
      }
      return out;
    }
  }
  return std::nullopt;
}

}  // namespace z3flow::oracle
