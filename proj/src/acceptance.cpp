#include "z3flow/acceptance.hpp"

#include <chrono>

#include "z3flow/canonical.hpp"
#include "z3flow/catalog.hpp"
#include "z3flow/orientation.hpp"
#include "z3flow/verifier.hpp"

namespace z3flow::verify {

namespace {

using nlohmann::json;

bool catalog_check(json& d, int) {
  bool ok = true;
  json failed = json::array();
  for (const catalog::ClaimReport& r : catalog::verify_all()) {
    if (!r.pass()) {
      ok = false;
      failed.push_back(r.name);
    }
  }
  d["failed_entries"] = failed;
  auto expect = [&](const std::string& name, bool mod3, bool connected) {
    Multigraph g = catalog::get(name).graph;
    bool has = mod3_orientation(g).has_value();
    bool conn = is_z3_connected(g);
    d["entries"][name] = {{"has_mod3", has}, {"z3_connected", conn}};
    if (has != mod3 || conn != connected) ok = false;
  };
  for (const char* name : {"G3", "G5", "G18"}) expect(name, false, false);
  for (int i = 1; i <= 6; ++i) expect("FZ-" + std::to_string(i), false, false);
  for (int i = 7; i <= 12; ++i) expect("FZ-" + std::to_string(i), true, false);
  return ok;
}

bool r_table_check(json& d, int) {
  const int expected[] = {0, 1, 3, 6, 8, 11};
  bool ok = true;
  json values = json::array();
  for (int n = 1; n <= 6; ++n) {
    RTableRow row = r_row(n);
    values.push_back(row.r);
    if (row.r != expected[n - 1]) ok = false;
    if (n == 6) {
      d["extremal_count"] = row.extremal.size();
      bool iso = row.extremal.size() == 1 &&
                 isomorphic(row.extremal[0], catalog::get("G3").graph);
      d["extremal_is_G3"] = iso;
      ok = ok && iso;
    }
  }
  d["r"] = values;
  return ok;
}

// Every admissible boundary of the wheel, checked one by one.
bool wheel_check(json& d, int) {
  bool ok = true;
  for (int k : {3, 5, 7}) {
    Multigraph w = catalog::get("W", k).graph;
    const int n = w.num_vertices();
    std::int64_t total = 1;
    for (int i = 0; i + 1 < n; ++i) total *= 3;
    std::int64_t failing = 0, zero_failing = 0;
    for (std::int64_t code = 0; code < total; ++code) {
      Z3Boundary b;
      b.values.assign(n, 0);
      std::int64_t rest = code;
      int sum = 0;
      for (int i = 0; i + 1 < n; ++i) {
        b.values[i] = static_cast<int>(rest % 3);
        rest /= 3;
        sum += b.values[i];
      }
      b.values[n - 1] = (3 - sum % 3) % 3;
      bool is_zero = code == 0 && b.values[n - 1] == 0;
      bool feasible = z3_orientation(w, b).has_value();
      if (!feasible) {
        ++failing;
        if (is_zero) ++zero_failing;
      }
      if (feasible == is_zero) ok = false;
    }
    d["W" + std::to_string(k)] = {{"boundaries", total}, {"failing", failing},
                                  {"zero_fails", zero_failing == 1}};
  }
  for (int k : {2, 4, 6, 8}) {
    bool conn = is_z3_connected(catalog::get("W", k).graph);
    d["W" + std::to_string(k)] = {{"z3_connected", conn}};
    ok = ok && conn;
  }
  return ok;
}

std::function<bool(json&, int)> sweep_check(std::vector<std::string> ids, std::int64_t samples,
                                            std::int64_t min_checked) {
  return [ids, samples, min_checked](json& d, int threads) {
    bool ok = true;
    for (const std::string& id : ids) {
      SweepReport r = lemma_sweep(id, samples, kAcceptanceSeed, threads);
      d[id] = to_json(r, false);
      if (!r.pass() || r.checked < min_checked) ok = false;
    }
    return ok;
  };
}

}  // namespace

const std::vector<Criterion>& acceptance_criteria() {
  static const std::vector<Criterion> list = {
      {"catalog", "catalog claims: G3, G5, G18 and FZ-1..6 lack mod-3 orientations, FZ-7..12 have one but are not Z3-connected",
       10, catalog_check},
      {"r-table", "r(n) = 0, 1, 3, 6, 8, 11 for n = 1..6 and the unique order-6 extremal graph is G3",
       600, r_table_check},
      {"wheels", "odd wheels fail exactly at b = 0; even wheels W2..W8 are Z3-connected", 60,
       wheel_check},
      {"hakimi", "1000 Hakimi instances: flow, cut condition and brute force agree", 120,
       sweep_check({"hakimi"}, 1000, 1000)},
      {"reduction", "500 multigraphs keep mod-3 orientability under full reduction", 300,
       sweep_check({"reduction"}, 500, 500)},
      {"wcontract", "200 W-contraction instances: soundness and 5-edge-connectivity", 300,
       sweep_check({"wcontract"}, 200, 200)},
      {"order13", "200 odd-5-edge-connected graphs of order <= 12 are mod-3 orientable", 600,
       sweep_check({"order13"}, 200, 200)},
      {"splitting", "200 splitting instances with k = 5 admit a preserving lift", 300,
       sweep_check({"splitting"}, 200, 200)},
      {"properties", "300 cases each: cut parity, witness revalidation, reversal, monotonicity, alpha closure",
       300,
       sweep_check({"cut-parity", "witness", "reversal", "monotonicity", "alpha-closure"}, 300,
                   300)},
  };
  return list;
}

CriterionResult run_criterion(const Criterion& c, int threads) {
  CriterionResult r;
  r.id = c.id;
  r.title = c.title;
  r.budget_seconds = c.budget_seconds;
  auto start = std::chrono::steady_clock::now();
  bool verdict = false;
  try {
    verdict = c.check(r.details, threads);
  } catch (const std::exception& e) {
    r.details["error"] = e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.pass = verdict && r.within_budget();
  return r;
}

nlohmann::json to_json(const CriterionResult& r, bool timing) {
  json out;
  out["id"] = r.id;
  out["title"] = r.title;
  out["pass"] = r.pass;
  out["budget_seconds"] = r.budget_seconds;
  if (timing) out["seconds"] = r.seconds;
  out["details"] = r.details;
  return out;
}

}  // namespace z3flow::verify
