#include "z3flow/orientation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "orientation_search.hpp"
#include "z3flow/errors.hpp"

namespace z3flow {

namespace {

int mod3(int x) { return ((x % 3) + 3) % 3; }

Orientation to_orientation(const Multigraph& g, const DenseGraph& d,
                           const PathReversalSolver& solver) {
  Orientation o;
  o.arcs.reserve(g.edges().size());
  auto ends = d.edge_ends();
  for (std::size_t k = 0; k < ends.size(); ++k) {
    auto [a, b] = ends[k];
    if (!solver.forward(static_cast<int>(k))) std::swap(a, b);
    o.arcs.push_back(Arc{g.edges()[k].id, d.ids()[a], d.ids()[b]});
  }
  return o;
}

}  // namespace

std::vector<int> Orientation::imbalance(const Multigraph& g) const {
  std::vector<int> out(g.num_vertices(), 0);
  for (const Arc& a : arcs) {
    ++out[g.index_of(a.tail)];
    --out[g.index_of(a.head)];
  }
  return out;
}

bool Orientation::is_orientation_of(const Multigraph& g) const {
  if (arcs.size() != g.edges().size()) return false;
  for (std::size_t k = 0; k < arcs.size(); ++k) {
    const Edge& e = g.edges()[k];
    const Arc& a = arcs[k];
    if (a.edge != e.id) return false;
    if (!((a.tail == e.u && a.head == e.v) || (a.tail == e.v && a.head == e.u))) {
      return false;
    }
  }
  return true;
}

Orientation Orientation::reversed() const {
  Orientation o = *this;
  for (Arc& a : o.arcs) std::swap(a.tail, a.head);
  return o;
}

void validate_imbalance(const Multigraph& g, const ImbalanceSpec& spec) {
  if (static_cast<int>(spec.values.size()) != g.num_vertices()) {
    throw DomainError("imbalance target needs one value per vertex");
  }
  std::vector<int> deg = g.degrees();
  long long sum = 0;
  for (std::size_t i = 0; i < deg.size(); ++i) {
    int l = spec.values[i];
    std::string where = " at vertex " + std::to_string(g.vertices()[i]);
    if (std::abs(l % 2) != deg[i] % 2) {
      throw DomainError("imbalance parity differs from degree parity" + where);
    }
    if (std::abs(l) > deg[i]) {
      throw DomainError("imbalance exceeds degree" + where);
    }
    sum += l;
  }
  if (sum != 0) throw DomainError("imbalance target does not sum to zero");
}

void validate_boundary(const Multigraph& g, const Z3Boundary& b) {
  if (static_cast<int>(b.values.size()) != g.num_vertices()) {
    throw DomainError("boundary needs one value per vertex");
  }
  int sum = 0;
  for (int x : b.values) {
    if (x < 0 || x > 2) throw DomainError("boundary values must lie in {0,1,2}");
    sum += x;
  }
  if (sum % 3 != 0) throw DomainError("boundary does not sum to 0 mod 3");
}

ImbalanceOutcome solve_imbalance(const Multigraph& g, const ImbalanceSpec& spec) {
  validate_imbalance(g, spec);
  DenseGraph d(g);
  std::vector<int> target(d.n());
  for (int i = 0; i < d.n(); ++i) target[i] = (d.degree(i) + spec.values[i]) / 2;

  PathReversalSolver solver(d);
  ImbalanceOutcome outcome;
  if (solver.solve(target)) {
    outcome.orientation = to_orientation(g, d, solver);
    if (outcome.orientation->imbalance(g) != spec.values) {
      throw std::logic_error("orientation witness misses its imbalance target");
    }
    return outcome;
  }
  VertexSet s;
  int sum = 0;
  for (int i : solver.stuck_set()) {
    s.push_back(d.ids()[i]);
    sum += spec.values[i];
  }
  s = normalized(std::move(s));
  int cut = s.size() == static_cast<std::size_t>(g.num_vertices())
                ? 0
                : static_cast<int>(boundary_edges(g, s).size());
  if (std::abs(sum) <= cut) {
    throw std::logic_error("infeasibility certificate violates no cut condition");
  }
  outcome.violating_set = std::move(s);
  return outcome;
}

bool hakimi_feasible(const Multigraph& g, const ImbalanceSpec& spec) {
  return solve_imbalance(g, spec).feasible();
}

std::optional<Orientation> orient_with_imbalance(const Multigraph& g,
                                                 const ImbalanceSpec& spec) {
  return solve_imbalance(g, spec).orientation;
}

std::optional<Orientation> z3_orientation(const Multigraph& g,
                                          const Z3Boundary& b) {
  validate_boundary(g, b);
  DenseGraph d(g);
  ResidueSearch search(d);
  if (!search.feasible(b.values)) return std::nullopt;
  Orientation o = to_orientation(g, d, search.solver());
  std::vector<int> imb = o.imbalance(g);
  for (std::size_t i = 0; i < imb.size(); ++i) {
    if (mod3(imb[i]) != b.values[i]) {
      throw std::logic_error("orientation witness misses its boundary");
    }
  }
  return o;
}

std::optional<Orientation> mod3_orientation(const Multigraph& g) {
  return z3_orientation(g, Z3Boundary{std::vector<int>(g.num_vertices(), 0)});
}

bool has_mod3_orientation(const DenseGraph& g) {
  ResidueSearch search(g);
  std::vector<int> zero(g.n(), 0);
  return search.feasible(zero);
}

namespace {

// Sweeps boundaries b with b(last) fixed by the zero-sum rule, skipping b
// whose first nonzero entry is 2 (those are -b of a checked boundary).
Z3ConnectivityReport sweep_boundaries(const DenseGraph& g) {
  Z3ConnectivityReport report;
  const int n = g.n();
  if (n <= 1) {
    report.connected = true;
    return report;
  }
  if (n > kMaxZ3ConnectivityOrder) {
    throw CapabilityError("Z3-connectivity supports at most " +
                          std::to_string(kMaxZ3ConnectivityOrder) +
                          " vertices, got " + std::to_string(n));
  }
  ResidueSearch search(g);
  std::vector<int> b(n, 0);
  while (true) {
    int partial = 0;
    for (int i = 0; i + 1 < n; ++i) partial += b[i];
    b[n - 1] = mod3(-partial);
    auto first = std::find_if(b.begin(), b.end(), [](int x) { return x != 0; });
    if (first == b.end() || *first == 1) {
      ++report.boundaries_checked;
      if (!search.feasible(b)) {
        report.failing_boundary = Z3Boundary{b};
        return report;
      }
    }
    int i = 0;
    while (i < n - 1 && b[i] == 2) b[i++] = 0;
    if (i == n - 1) break;
    ++b[i];
  }
  report.connected = true;
  return report;
}

}  // namespace

bool is_z3_connected(const DenseGraph& g) { return sweep_boundaries(g).connected; }

Z3ConnectivityReport z3_connectivity(const Multigraph& g) {
  return sweep_boundaries(DenseGraph(g));
}

bool is_z3_connected(const Multigraph& g) { return z3_connectivity(g).connected; }

}  // namespace z3flow
