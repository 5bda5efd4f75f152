#include "z3flow/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <thread>

#include "z3flow/canonical.hpp"
#include "z3flow/connectivity.hpp"
#include "z3flow/errors.hpp"
#include "z3flow/generators.hpp"
#include "z3flow/io.hpp"
#include "z3flow/oracle.hpp"
#include "z3flow/reduction.hpp"

namespace z3flow::verify {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

double since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

bool next_combination(std::uint32_t& mask, std::uint32_t limit) {
  // Gosper's hack: the next larger mask with the same popcount.
  std::uint32_t c = mask & (~mask + 1);
  std::uint32_t r = mask + c;
  if (r >= limit || r == 0) return false;
  mask = (((r ^ mask) >> 2) / c) | r;
  return mask < limit;
}

}  // namespace

RTableRow r_row(int n, bool allow_long, bool full_scan) {
  if (n < 1 || n > kMaxLongRTableOrder || (n > kMaxRTableOrder && !allow_long)) {
    throw CapabilityError("r-table supports n in 1.." + std::to_string(kMaxRTableOrder) +
                          (n == kMaxLongRTableOrder ? " (n = 7 needs the long-running flag)" : ""));
  }
  auto start = Clock::now();
  RTableRow row;
  row.n = n;
  row.r = -1;
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  }
  const int total = static_cast<int>(slots.size());
  const std::uint32_t limit = std::uint32_t{1} << total;
  std::set<CanonicalForm> seen;
  row.max_min_degree = 0;

  for (int m = total; m >= 0; --m) {
    std::uint32_t mask = m == 0 ? 0 : (std::uint32_t{1} << m) - 1;
    bool more = true;
    while (more) {
      ++row.labeled_scanned;
      std::vector<std::pair<int, int>> pairs;
      for (int k = 0; k < total; ++k) {
        if (mask >> k & 1) pairs.push_back(slots[k]);
      }
      DenseGraph d(n, pairs);
      CanonicalForm form = canonical_form(d);
      if (seen.insert(form).second) {
        ++row.classes_checked;
        Multigraph g = d.to_multigraph();
        if (is_z3_reduced(g)) {
          ++row.reduced_classes;
          row.max_min_degree = std::max(row.max_min_degree, min_degree(g));
          if (row.r < 0) row.r = m;
          if (m == row.r) {
            row.extremal.push_back(to_multigraph(form));
            for (const Edge& e : g.edges()) {
              Multigraph h = g;
              h.remove_edge(e.id);
              ++row.monotonicity_checks;
              if (!is_z3_reduced(h)) ++row.monotonicity_failures;
            }
          }
        }
      }
      more = m > 0 && m < total && next_combination(mask, limit);
    }
    if (row.r >= 0 && !full_scan) break;
  }
  row.seconds = since(start);
  return row;
}

FamilyVerdict family_verdict(const Multigraph& g) {
  FamilyVerdict v;
  const int n = g.num_vertices();
  v.order = n;
  const bool f1_order = n >= 2 && n <= 15;
  const bool f2_order = n >= 14 && n <= 20;
  bool f1 = f1_order;
  if (f1) {
    v.edge_connectivity = edge_connectivity(g).size;
    f1 = *v.edge_connectivity <= 3;
  }
  if (f1) {
    v.alpha = independence_number(g).size;
    f1 = *v.alpha <= 4;
  }
  if (f1 || f2_order) {
    if (n > kMaxZ3ConnectivityOrder) throw CapabilityError("graph too large for the family check");
    v.has_mod3 = mod3_orientation(g).has_value();
  }
  if (f1) f1 = !*v.has_mod3;
  if (f1) {
    v.z3_reduced = is_z3_reduced(g);
    f1 = *v.z3_reduced;
  }
  v.in_f1 = f1;
  v.in_f2 = f2_order && !*v.has_mod3;
  v.notes.push_back(
      "F2 is checked as defined: no mod-3 orientation and 14 <= |V| <= 20, without any "
      "connectivity or independence condition");
  return v;
}

ReducedDecision decide_nz3f(const Multigraph& g) {
  const int n = g.num_vertices();
  if (n > kMaxZ3ConnectivityOrder) {
    throw CapabilityError("full reduction supports at most " +
                          std::to_string(kMaxZ3ConnectivityOrder) + " vertices");
  }
  ContractionResult r = z3_reduce(g, std::max(2, n));
  if (!r.trace.complete()) throw CapabilityError("reduction did not complete under the full cap");
  ReducedDecision out;
  out.witness = mod3_orientation(r.graph);
  out.feasible = out.witness.has_value();
  out.reduced = std::move(r.graph);
  out.trace = std::move(r.trace);
  return out;
}

// ---- sweeps ----

namespace {

enum class Outcome { checked, vacuous, violation };

struct InstanceResult {
  Outcome outcome = Outcome::checked;
  json detail;                       // counterexample payload on violation
  std::map<std::string, std::int64_t> stats;
};

using Rng = gen::Rng;
using Runner = std::function<InstanceResult(Rng&)>;

InstanceResult violation(json detail) {
  InstanceResult r;
  r.outcome = Outcome::violation;
  r.detail = std::move(detail);
  return r;
}

bool realizes_residues(const Multigraph& g, const Orientation& o, const std::vector<int>& b) {
  if (!o.is_orientation_of(g)) return false;
  std::vector<int> imb(g.num_vertices(), 0);
  for (const Arc& a : o.arcs) {
    ++imb[g.index_of(a.tail)];
    --imb[g.index_of(a.head)];
  }
  for (std::size_t i = 0; i < imb.size(); ++i) {
    if (((imb[i] % 3) + 3) % 3 != b[i]) return false;
  }
  return true;
}

// r(1..7) for the cut bound; the first six are recomputed by r_row.
constexpr int kR[] = {0, 0, 1, 3, 6, 8, 11, 13};

Multigraph random_reduced(Rng& rng) {
  while (true) {
    int n = gen::uniform(rng, 2, 10);
    Multigraph g = gen::random_multigraph(rng, n, gen::uniform(rng, n, 3 * n));
    Multigraph r = z3_reduce(g, n).graph;
    if (r.num_vertices() >= 2) return r;
  }
}

InstanceResult run_hakimi(Rng& rng) {
  int n = gen::uniform(rng, 2, 7);
  Multigraph g = gen::random_multigraph(rng, n, gen::uniform(rng, n - 1, 12));
  ImbalanceSpec l = gen::random_admissible_imbalance(rng, g);
  ImbalanceOutcome flow = solve_imbalance(g, l);
  bool brute = oracle::brute_force_imbalance(g, l).has_value();
  auto cut = oracle::cut_condition_violation(g, l);
  InstanceResult r;
  r.stats["feasible"] = flow.feasible();
  if (flow.feasible() != brute || cut.has_value() == brute) {
    return violation({{"graph", graph_to_json(g)}, {"imbalance", l.values},
                      {"flow", flow.feasible()}, {"brute_force", brute}, {"cut_condition", !cut}});
  }
  return r;
}

InstanceResult run_reduction(Rng& rng) {
  int n = gen::uniform(rng, 1, 9);
  int m = n < 2 ? 0 : gen::uniform(rng, 0, 3 * n);
  Multigraph g = n < 2 ? Multigraph::with_vertices(n) : gen::random_multigraph(rng, n, m);
  ContractionResult red = z3_reduce(g, std::max(2, n));
  bool before = mod3_orientation(g).has_value();
  bool after = mod3_orientation(red.graph).has_value();
  InstanceResult r;
  r.stats["contracted"] = !red.trace.events().empty();
  r.stats["feasible"] = before;
  if (before != after || !red.trace.complete()) {
    return violation({{"graph", graph_to_json(g)}, {"reduced", graph_to_json(red.graph)},
                      {"mod3_graph", before}, {"mod3_reduced", after}});
  }
  return r;
}

std::vector<WContractionSpec> all_partitions(const WheelWitness& w) {
  std::vector<WContractionSpec> out;
  const std::size_t k = w.rim.size();
  VertexSet all = w.vertices();
  for (std::size_t i = 0; i < k; ++i) {
    VertexSet x = normalized({w.rim[i], w.rim[(i + 1) % k]});
    VertexSet y;
    std::set_difference(all.begin(), all.end(), x.begin(), x.end(), std::back_inserter(y));
    out.push_back(WContractionSpec{w, x, y});
  }
  return out;
}

InstanceResult run_wcontract(Rng& rng) {
  InstanceResult r;
  gen::WheelInstance a = gen::random_odd_wheel_instance(rng, 10);
  bool g_feasible = mod3_orientation(a.graph).has_value();
  for (const WContractionSpec& spec : all_partitions(a.wheel)) {
    Multigraph h = w_contract(a.graph, spec).graph;
    bool h_feasible = mod3_orientation(h).has_value();
    ++r.stats["contractions"];
    r.stats["contraction_feasible"] += h_feasible;
    if (h_feasible && !g_feasible) {
      return violation({{"kind", "soundness"}, {"graph", graph_to_json(a.graph)},
                        {"center", spec.wheel.center}, {"rim", spec.wheel.rim}, {"x", spec.x}});
    }
  }
  gen::WheelInstance b = gen::random_dense_wheel_instance(rng, 6, 10);
  for (const WContractionSpec& spec : all_partitions(b.wheel)) {
    Multigraph h = w_contract(b.graph, spec).graph;
    int ec = edge_connectivity(h).size;
    ++r.stats["dense_contractions"];
    if (ec < 5) {
      return violation({{"kind", "edge-connectivity"}, {"graph", graph_to_json(b.graph)},
                        {"center", spec.wheel.center}, {"rim", spec.wheel.rim}, {"x", spec.x},
                        {"contracted_edge_connectivity", ec}});
    }
  }
  return r;
}

InstanceResult run_order13(Rng& rng) {
  Multigraph g = gen::random_odd5_connected(rng, 2, 12);
  InstanceResult r;
  r.stats["order_" + std::to_string(g.num_vertices())] = 1;
  if (!odd_edge_connectivity(g)) r.stats["no_odd_cut"] = 1;
  if (!mod3_orientation(g)) return violation({{"graph", graph_to_json(g)}});
  return r;
}

InstanceResult run_splitting(Rng& rng) {
  auto [g, v] = gen::random_splitting_instance(rng, 6, 12);
  InstanceResult r;
  r.stats["degree_" + std::to_string(g.degree(v))] = 1;
  auto s = split_vertex(g, v, 5);
  if (!s) return violation({{"graph", graph_to_json(g)}, {"vertex", v}, {"k", 5}});
  return r;
}

InstanceResult run_min_degree(Rng& rng) {
  Multigraph g = random_reduced(rng);
  InstanceResult r;
  r.stats["order_" + std::to_string(g.num_vertices())] = 1;
  if (min_degree(g) > 5) return violation({{"graph", graph_to_json(g)}});
  return r;
}

InstanceResult run_cut_bound(Rng& rng) {
  Multigraph g = random_reduced(rng);
  const int delta = min_degree(g);
  DenseGraph d(g);
  InstanceResult r;
  for (Mask s = 1; s < d.all(); ++s) {
    int k = popcount(s);
    if (k > 7) continue;
    ++r.stats["sets"];
    if (d.cut_size(s) < delta * k - 2 * kR[k]) {
      return violation({{"graph", graph_to_json(g)}, {"set", d.to_ids(s)}});
    }
  }
  return r;
}

InstanceResult run_essential8(Rng& rng) {
  int n = gen::uniform(rng, 6, 12);
  std::vector<int> deg(n);
  for (int& x : deg) x = gen::uniform(rng, 5, 7);
  if (std::accumulate(deg.begin(), deg.end(), 0) % 2) deg[0] = deg[0] == 7 ? 6 : deg[0] + 1;
  auto g = gen::configuration_model(rng, deg);
  InstanceResult r;
  if (!g) {
    r.outcome = Outcome::vacuous;
    return r;
  }
  bool ec5 = edge_connectivity(*g).size >= 5;
  auto ess = essential_edge_connectivity(*g);
  bool ess8 = !ess || ess->size >= 8;
  if (ec5 && ess8) {
    r.stats["conclusion_holds"] = 1;
    return r;
  }
  if (!is_z3_reduced(*g)) {
    r.outcome = Outcome::vacuous;
    return r;
  }
  return violation({{"graph", graph_to_json(*g)}, {"five_edge_connected", ec5},
                    {"essentially_eight", ess8}});
}

InstanceResult run_cut_parity(Rng& rng) {
  int n = gen::uniform(rng, 2, 10);
  Multigraph g = gen::random_multigraph(rng, n, gen::uniform(rng, 0, 3 * n));
  VertexSet s;
  while (s.empty() || static_cast<int>(s.size()) == n) {
    s.clear();
    for (VertexId v : g.vertices()) {
      if (rng() & 1) s.push_back(v);
    }
  }
  int deg = 0;
  for (VertexId v : s) deg += g.degree(v);
  int cut = static_cast<int>(boundary_edges(g, s).size());
  int inner = static_cast<int>(inner_edges(g, s).size());
  if (cut != deg - 2 * inner || cut % 2 != deg % 2) {
    return violation({{"graph", graph_to_json(g)}, {"set", s}});
  }
  return InstanceResult{};
}

InstanceResult run_witness(Rng& rng) {
  int n = gen::uniform(rng, 1, 8);
  Multigraph g = n < 2 ? Multigraph::with_vertices(n)
                       : gen::random_multigraph(rng, n, gen::uniform(rng, 0, 3 * n));
  InstanceResult r;
  Z3Boundary b = gen::random_boundary(rng, g);
  if (auto o = z3_orientation(g, b)) {
    ++r.stats["boundary_witnesses"];
    if (!realizes_residues(g, *o, b.values)) return violation({{"graph", graph_to_json(g)}, {"boundary", b.values}});
  }
  if (auto o = mod3_orientation(g)) {
    ++r.stats["mod3_witnesses"];
    if (!realizes_residues(g, *o, std::vector<int>(n, 0))) return violation({{"graph", graph_to_json(g)}});
  }
  ImbalanceSpec l = gen::random_admissible_imbalance(rng, g);
  if (auto o = orient_with_imbalance(g, l)) {
    ++r.stats["imbalance_witnesses"];
    if (!o->is_orientation_of(g) || o->imbalance(g) != l.values) {
      return violation({{"graph", graph_to_json(g)}, {"imbalance", l.values}});
    }
  }
  return r;
}

InstanceResult run_reversal(Rng& rng) {
  int n = gen::uniform(rng, 2, 9);
  Multigraph g = gen::random_multigraph(rng, n, gen::uniform(rng, 0, 3 * n));
  Z3Boundary b = gen::random_boundary(rng, g);
  Z3Boundary neg = b;
  for (int& x : neg.values) x = (3 - x) % 3;
  auto pos = z3_orientation(g, b);
  auto rev = z3_orientation(g, neg);
  InstanceResult r;
  r.stats["feasible"] = pos.has_value();
  if (pos.has_value() != rev.has_value() ||
      (pos && !realizes_residues(g, pos->reversed(), neg.values))) {
    return violation({{"graph", graph_to_json(g)}, {"boundary", b.values}});
  }
  return r;
}

InstanceResult run_monotonicity(Rng& rng) {
  int n = gen::uniform(rng, 2, 6);
  Multigraph g;
  InstanceResult r;
  for (int attempt = 0;; ++attempt) {
    g = gen::random_multigraph(rng, n, gen::uniform(rng, 2 * n - 1, 4 * n));
    if (is_z3_connected(g)) break;
    if (attempt == 50) {
      r.outcome = Outcome::vacuous;
      return r;
    }
    ++r.stats["rejected_draws"];
  }
  Multigraph h = g;
  int a = gen::uniform(rng, 0, n - 1);
  int b = gen::uniform(rng, 0, n - 2);
  if (b >= a) ++b;
  h.add_edge(a, b);
  if (!is_z3_connected(h)) return violation({{"graph", graph_to_json(g)}, {"added", {a, b}}});
  return r;
}

InstanceResult run_alpha_closure(Rng& rng) {
  int n = gen::uniform(rng, 1, 12);
  std::uniform_real_distribution<double> dens(0.1, 0.9);
  Multigraph g = gen::random_simple_graph(rng, n, dens(rng));
  VertexSet x;
  while (x.empty()) {
    for (VertexId v : g.vertices()) {
      if (gen::uniform(rng, 0, 3) == 0) x.push_back(v);
    }
  }
  VertexSet closed = neighborhood_closure(g, x);
  Multigraph rest = induced_subgraph(g, complement(g, closed));
  int before = independence_number(g).size;
  int after = independence_number(rest).size;
  if (after > before - 1) return violation({{"graph", graph_to_json(g)}, {"x", x}});
  return InstanceResult{};
}

struct SweepDef {
  const char* id;
  const char* statement;
  Runner run;
};

const std::vector<SweepDef>& sweeps() {
  static const std::vector<SweepDef> table = {
      {"hakimi",
       "flow route, subset cut condition and 2^|E| brute force agree on exact imbalance "
       "feasibility (|V| <= 7, |E| <= 12)",
       run_hakimi},
      {"reduction", "mod-3 orientability of G equals that of its full-cap reduction (|V| <= 9)",
       run_reduction},
      {"wcontract",
       "a mod-3 orientable W-contraction implies G is mod-3 orientable; on 5-edge-connected "
       "essentially 8-edge-connected graphs every W-contraction stays 5-edge-connected",
       run_wcontract},
      {"order13", "odd-5-edge-connected graphs of order at most 12 are mod-3 orientable",
       run_order13},
      {"splitting",
       "an even vertex of degree not in {2, 5} in a graph of odd-edge-connectivity 5 has a "
       "lift preserving it",
       run_splitting},
      {"min-degree", "Z3-reduced graphs have minimum degree at most 5", run_min_degree},
      {"cut-bound", "in a Z3-reduced graph |boundary(S)| >= delta |S| - 2 r(|S|) for |S| <= 7",
       run_cut_bound},
      {"essential8",
       "Z3-reduced graphs of order at most 15 with minimum degree 5 are 5-edge-connected and "
       "essentially 8-edge-connected",
       run_essential8},
      {"cut-parity", "|boundary(S)| = sum of degrees over S - 2 |E(S)|", run_cut_parity},
      {"witness", "every returned orientation realizes the requested target", run_witness},
      {"reversal", "b is realizable iff -b is, by reversing every arc", run_reversal},
      {"monotonicity", "adding an edge to a Z3-connected graph keeps it Z3-connected",
       run_monotonicity},
      {"alpha-closure", "alpha(G - (X u N(X))) <= alpha(G) - 1 for nonempty X",
       run_alpha_closure},
  };
  return table;
}

const SweepDef& find_sweep(const std::string& id) {
  for (const SweepDef& d : sweeps()) {
    if (d.id == id) return d;
  }
  throw LookupError("unknown lemma id '" + id + "'");
}

}  // namespace

std::vector<std::string> sweep_ids() {
  std::vector<std::string> out;
  for (const SweepDef& d : sweeps()) out.push_back(d.id);
  return out;
}

std::string sweep_statement(const std::string& id) { return find_sweep(id).statement; }

SweepReport lemma_sweep(const std::string& id, std::int64_t samples, std::uint64_t seed,
                        int threads) {
  const SweepDef& def = find_sweep(id);
  if (samples < 0) throw DomainError("sample count must be nonnegative");
  auto start = Clock::now();
  std::vector<InstanceResult> results(samples);
  std::atomic<std::int64_t> next{0};
  auto work = [&] {
    while (true) {
      std::int64_t i = next++;
      if (i >= samples) return;
      Rng rng(gen::instance_seed(seed, static_cast<std::uint64_t>(i)));
      try {
        results[i] = def.run(rng);
      } catch (const std::exception& e) {
        results[i] = violation({{"error", e.what()}});
      }
    }
  };
  threads = std::max(1, std::min<int>(threads, static_cast<int>(std::max<std::int64_t>(1, samples))));
  if (threads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  SweepReport report;
  report.id = def.id;
  report.statement = def.statement;
  report.samples = samples;
  report.seed = seed;
  std::map<std::string, std::int64_t> stats;
  for (std::int64_t i = 0; i < samples; ++i) {
    InstanceResult& r = results[i];
    switch (r.outcome) {
      case Outcome::checked: ++report.checked; break;
      case Outcome::vacuous: ++report.vacuous; break;
      case Outcome::violation:
        ++report.violations;
        r.detail["index"] = i;
        r.detail["instance_seed"] = gen::instance_seed(seed, static_cast<std::uint64_t>(i));
        report.counterexamples.push_back(std::move(r.detail));
        break;
    }
    for (auto& [k, v] : r.stats) stats[k] += v;
  }
  for (auto& [k, v] : stats) report.stats[k] = v;
  report.seconds = since(start);
  return report;
}

nlohmann::json to_json(const RTableRow& row, bool timing) {
  json out;
  out["n"] = row.n;
  out["r"] = row.r;
  out["extremal"] = json::array();
  for (const Multigraph& g : row.extremal) out["extremal"].push_back(to_graph6(g));
  out["labeled_scanned"] = row.labeled_scanned;
  out["classes_checked"] = row.classes_checked;
  out["reduced_classes"] = row.reduced_classes;
  out["max_min_degree_reduced"] = row.max_min_degree;
  out["monotonicity_checks"] = row.monotonicity_checks;
  out["monotonicity_failures"] = row.monotonicity_failures;
  if (timing) out["seconds"] = row.seconds;
  return out;
}

nlohmann::json to_json(const FamilyVerdict& v) {
  json out;
  out["in_F1"] = v.in_f1;
  out["in_F2"] = v.in_f2;
  json ev;
  ev["order"] = v.order;
  auto put = [&](const char* key, const auto& opt) {
    if (opt) ev[key] = *opt; else ev[key] = nullptr;
  };
  put("z3_reduced", v.z3_reduced);
  put("has_mod3_orientation", v.has_mod3);
  put("independence_number", v.alpha);
  put("edge_connectivity", v.edge_connectivity);
  out["evidence"] = ev;
  out["notes"] = v.notes;
  return out;
}

nlohmann::json to_json(const SweepReport& r, bool timing) {
  json out;
  out["id"] = r.id;
  out["statement"] = r.statement;
  out["samples"] = r.samples;
  out["seed"] = r.seed;
  out["checked"] = r.checked;
  out["vacuous"] = r.vacuous;
  out["violations"] = r.violations;
  out["pass"] = r.pass();
  out["counterexamples"] = r.counterexamples;
  out["stats"] = r.stats;
  if (timing) out["seconds"] = r.seconds;
  return out;
}

}  // namespace z3flow::verify
