#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "z3flow/multigraph.hpp"
#include "z3flow/orientation.hpp"

namespace z3flow::verify {

// ---- r(n): the largest size of a Z3-reduced simple graph of order n ----

inline constexpr int kMaxRTableOrder = 6;
inline constexpr int kMaxLongRTableOrder = 7;

struct RTableRow {
  int n = 0;
  int r = 0;
  std::vector<Multigraph> extremal;      // one canonical graph per class
  std::int64_t labeled_scanned = 0;      // labeled graphs visited
  std::int64_t classes_checked = 0;      // isomorphism classes tested
  std::int64_t reduced_classes = 0;      // of those, Z3-reduced
  int max_min_degree = 0;                // largest minimum degree seen among reduced classes
  std::int64_t monotonicity_checks = 0;  // edge-deleted subgraphs re-checked
  std::int64_t monotonicity_failures = 0;
  double seconds = 0;
};

// Scans labeled simple graphs by decreasing edge count, one test per
// isomorphism class, and stops at the first count with a Z3-reduced graph.
// With full_scan every edge count is visited. n = 7 requires allow_long;
// n outside the supported range throws CapabilityError.
RTableRow r_row(int n, bool allow_long = false, bool full_scan = false);

// ---- F1 / F2 membership ----

struct FamilyVerdict {
  bool in_f1 = false;
  bool in_f2 = false;
  int order = 0;
  std::optional<bool> z3_reduced;
  std::optional<bool> has_mod3;
  std::optional<int> alpha;
  std::optional<int> edge_connectivity;
  std::vector<std::string> notes;
};

// F1: Z3-reduced, no mod-3 orientation, 2 <= |V| <= 15, alpha <= 4 and
// edge-connectivity <= 3. F2: no mod-3 orientation, 14 <= |V| <= 20.
// Conditions are evaluated cheapest first; unevaluated ones stay empty.
FamilyVerdict family_verdict(const Multigraph& g);

// ---- mod-3 orientability through the reduction ----

struct ReducedDecision {
  bool feasible = false;
  std::optional<Orientation> witness;  // on trace-reduced graph
  Multigraph reduced;
  ReductionTrace trace;
};

ReducedDecision decide_nz3f(const Multigraph& g);

// ---- seeded lemma and property sweeps ----

struct SweepReport {
  std::string id;
  std::string statement;
  std::int64_t samples = 0;
  std::uint64_t seed = 0;
  std::int64_t checked = 0;      // instances where the hypothesis was confirmed or not needed
  std::int64_t vacuous = 0;      // hypothesis failed, nothing to check
  std::int64_t violations = 0;
  std::vector<nlohmann::json> counterexamples;
  nlohmann::json stats = nlohmann::json::object();
  double seconds = 0;

  bool pass() const { return violations == 0; }
};

// Known ids, in the order `verify all` runs them.
std::vector<std::string> sweep_ids();
std::string sweep_statement(const std::string& id);

// Instance i draws from gen::instance_seed(seed, i); results are merged by
// index, so the report does not depend on the thread count. Throws
// LookupError for an unknown id.
SweepReport lemma_sweep(const std::string& id, std::int64_t samples, std::uint64_t seed,
                        int threads = 1);

nlohmann::json to_json(const RTableRow& row, bool timing);
nlohmann::json to_json(const FamilyVerdict& v);
nlohmann::json to_json(const SweepReport& r, bool timing);

}  // namespace z3flow::verify
