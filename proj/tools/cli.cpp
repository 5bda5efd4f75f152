#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "z3flow/acceptance.hpp"
#include "z3flow/canonical.hpp"
#include "z3flow/catalog.hpp"
#include "z3flow/connectivity.hpp"
#include "z3flow/errors.hpp"
#include "z3flow/io.hpp"
#include "z3flow/orientation.hpp"
#include "z3flow/reduction.hpp"
#include "z3flow/verifier.hpp"

namespace z3flow::cli {

namespace {

using nlohmann::json;

constexpr std::uint64_t kDefaultSeed = 1;

struct Globals {
  bool json = false;
  bool timing = false;
  int threads = 0;
  std::uint64_t seed = kDefaultSeed;
  std::string format = "auto";
};

// What a command hands back for printing.
struct Outcome {
  int code = kOk;
  std::string verdict;
  json result = json::object();
  json witness = nullptr;
  std::string text;
};

std::string hex(std::uint64_t x) {
  std::ostringstream s;
  s << std::hex;
  s.width(16);
  s.fill('0');
  s << x;
  return s.str();
}

std::string set_text(const VertexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(s[i]);
  }
  return out + "}";
}

class Session {
 public:
  explicit Session(const Globals& g) : g_(g) {}

  Multigraph load(const std::string& path) {
    GraphFormat fmt = g_.format == "auto" ? GraphFormat::detect : parse_format_name(g_.format);
    Multigraph graph = read_graph(path, fmt);
    digest_ = "fnv1a64:" + hex(digest(to_json_text(graph)));
    return graph;
  }

  int threads() const {
    if (g_.threads > 0) return g_.threads;
    return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  }

  std::uint64_t seed() const { return g_.seed; }
  bool timing() const { return g_.timing; }

  void emit(const std::string& command, const json& params, const Outcome& o, double seconds,
            std::ostream& out) const {
    if (g_.json) {
      json rec;
      rec["command"] = command;
      rec["input_digest"] = digest_.empty() ? json(nullptr) : json(digest_);
      rec["parameters"] = params;
      rec["verdict"] = o.verdict;
      rec["exit_code"] = o.code;
      rec["witness"] = o.witness;
      rec["result"] = o.result;
      if (g_.timing) rec["wall_time"] = seconds;
      out << rec.dump(2) << '\n';
      return;
    }
    out << o.text;
    if (g_.timing) out << "wall time: " << seconds << " s\n";
  }

 private:
  Globals g_;
  std::string digest_;
};

// ---- commands ----

Outcome cmd_connectivity(Session& s, const std::string& file, bool odd, bool essential,
                         bool alpha) {
  Multigraph g = s.load(file);
  Outcome o;
  std::ostringstream t;
  CutReport ec = edge_connectivity(g);
  o.result["edge_connectivity"] = {{"size", ec.size}, {"witness", ec.witness}};
  t << "edge-connectivity: " << ec.size << "  shore " << set_text(ec.witness) << '\n';
  if (odd) {
    auto r = odd_edge_connectivity(g);
    o.result["odd_edge_connectivity"] =
        r ? json{{"size", r->size}, {"witness", r->witness}} : json(nullptr);
    t << "odd edge-connectivity: "
      << (r ? std::to_string(r->size) + "  shore " + set_text(r->witness) : "none (no odd cut)")
      << '\n';
  }
  if (essential) {
    auto r = essential_edge_connectivity(g);
    o.result["essential_edge_connectivity"] =
        r ? json{{"size", r->size}, {"witness", r->witness}} : json(nullptr);
    t << "essential edge-connectivity: "
      << (r ? std::to_string(r->size) + "  shore " + set_text(r->witness)
            : "none (no essential cut)")
      << '\n';
  }
  if (alpha) {
    IndependentSet a = independence_number(g);
    o.result["independence_number"] = {{"size", a.size}, {"witness", a.members}};
    t << "independence number: " << a.size << "  set " << set_text(a.members) << '\n';
  }
  o.verdict = "ok";
  o.text = t.str();
  return o;
}

void attach_witness(Outcome& o, const Multigraph& g, const Orientation& w, bool text) {
  std::string dot = to_dot(g, &w, "witness");
  o.witness = {{"orientation", orientation_to_json(w)}, {"dot", dot}};
  if (text) o.text += dot + orientation_to_json(w).dump() + '\n';
}

Outcome cmd_decide(Session& s, const std::string& file, bool mod3, bool z3conn,
                   const std::string& boundary_file, bool via_reduction, bool witness) {
  int modes = int(mod3) + int(z3conn) + int(!boundary_file.empty());
  if (modes != 1) throw DomainError("choose exactly one of --mod3, --z3conn, --boundary");
  Multigraph g = s.load(file);
  Outcome o;
  if (mod3 && via_reduction) {
    verify::ReducedDecision d = verify::decide_nz3f(g);
    o.code = d.feasible ? kOk : kNegative;
    o.result["mode"] = "mod3-via-reduction";
    o.result["feasible"] = d.feasible;
    o.result["reduced_order"] = d.reduced.num_vertices();
    o.result["trace"] = trace_to_json(d.trace);
    o.text = std::string(d.feasible ? "feasible" : "infeasible") +
             ": reduced graph has " + std::to_string(d.reduced.num_vertices()) +
             " vertices\n";
    if (witness && d.witness) attach_witness(o, d.reduced, *d.witness, true);
  } else if (mod3) {
    auto w = mod3_orientation(g);
    o.code = w ? kOk : kNegative;
    o.result["mode"] = "mod3";
    o.result["feasible"] = w.has_value();
    o.text = w ? "feasible: mod-3 orientation exists\n" : "infeasible: no mod-3 orientation\n";
    if (witness && w) attach_witness(o, g, *w, true);
  } else if (z3conn) {
    Z3ConnectivityReport r = z3_connectivity(g);
    o.code = r.connected ? kOk : kNegative;
    o.result["mode"] = "z3conn";
    o.result["z3_connected"] = r.connected;
    o.result["boundaries_checked"] = r.boundaries_checked;
    o.result["failing_boundary"] =
        r.failing_boundary ? json(r.failing_boundary->values) : json(nullptr);
    std::ostringstream t;
    if (r.connected) {
      t << "Z3-connected\n";
    } else {
      t << "not Z3-connected: no orientation for boundary";
      for (int x : r.failing_boundary->values) t << ' ' << x;
      t << '\n';
    }
    o.text = t.str();
  } else {
    Z3Boundary b = parse_boundary(read_text(boundary_file), g);
    auto w = z3_orientation(g, b);
    o.code = w ? kOk : kNegative;
    o.result["mode"] = "boundary";
    o.result["boundary"] = b.values;
    o.result["feasible"] = w.has_value();
    o.text = w ? "feasible: boundary is realized\n" : "infeasible: boundary is not realized\n";
    if (witness && w) attach_witness(o, g, *w, true);
  }
  o.verdict = o.code == kOk ? "feasible" : "infeasible";
  return o;
}

Outcome cmd_reduce(Session& s, const std::string& file, int cap, const std::string& trace_out) {
  Multigraph g = s.load(file);
  ContractionResult r = z3_reduce(g, cap);
  Outcome o;
  json trace = trace_to_json(r.trace);
  if (!trace_out.empty()) {
    std::ofstream f(trace_out);
    if (!f) throw ParseError("cannot write trace file '" + trace_out + "'", 0);
    f << trace.dump(2) << '\n';
  }
  o.result["graph"] = graph_to_json(r.graph);
  o.result["cap"] = cap;
  o.result["cap_binding"] = !r.trace.complete();
  o.result["contractions"] = r.trace.events().size();
  o.result["trace"] = trace;
  std::ostringstream t;
  t << "contractions: " << r.trace.events().size() << '\n'
    << "cap " << cap << (r.trace.complete() ? " not binding" : " binding") << '\n'
    << to_edgelist(r.graph);
  o.text = t.str();
  o.verdict = "ok";
  return o;
}

json wheel_json(const WheelWitness& w) {
  return {{"center", w.center}, {"rim", w.rim}, {"odd", w.odd}};
}

Outcome cmd_wheel(Session& s, const std::string& file, bool odd, bool even, int max_rim) {
  if (odd && even) throw DomainError("--odd and --even are exclusive");
  Multigraph g = s.load(file);
  WheelParity p = odd ? WheelParity::odd : even ? WheelParity::even : WheelParity::any;
  auto w = find_wheel(g, p, max_rim);
  Outcome o;
  o.code = w ? kOk : kNegative;
  o.verdict = w ? "found" : "none";
  o.result["wheel"] = w ? wheel_json(*w) : json(nullptr);
  if (w) {
    o.text = "center " + std::to_string(w->center) + "  rim";
    for (VertexId v : w->rim) o.text += ' ' + std::to_string(v);
    o.text += '\n';
  } else {
    o.text = "no wheel\n";
  }
  return o;
}

Outcome cmd_wcontract(Session& s, const std::string& file, int center,
                      const std::vector<int>& rim, const std::vector<int>& x) {
  Multigraph g = s.load(file);
  WContractionSpec spec;
  spec.wheel.center = center;
  spec.wheel.rim.assign(rim.begin(), rim.end());
  spec.wheel.odd = rim.size() % 2 == 1;
  spec.x = normalized(VertexSet(x.begin(), x.end()));
  VertexSet all = spec.wheel.vertices();
  for (VertexId v : all) {
    if (!std::binary_search(spec.x.begin(), spec.x.end(), v)) spec.y.push_back(v);
  }
  ContractionResult r = w_contract(g, spec);
  Outcome o;
  o.verdict = "ok";
  o.result["graph"] = graph_to_json(r.graph);
  o.result["trace"] = trace_to_json(r.trace);
  o.result["y"] = spec.y;
  o.text = to_edgelist(r.graph);
  return o;
}

catalog::CatalogEntry lookup(const std::string& name, int param) {
  return param > 0 ? catalog::get(name, param) : catalog::get(name);
}

Outcome cmd_catalog_list() {
  Outcome o;
  o.verdict = "ok";
  o.result["entries"] = json::array();
  for (const std::string& name : catalog::list()) {
    std::string desc;
    try {
      desc = catalog::get(name).description;
    } catch (const DomainError&) {
      desc = "family, takes a parameter";
    }
    o.result["entries"].push_back({{"name", name}, {"description", desc}});
    o.text += name + "\t" + desc + "\n";
  }
  return o;
}

Outcome cmd_catalog_show(const std::string& name, int param, bool dot) {
  catalog::CatalogEntry e = lookup(name, param);
  Outcome o;
  o.verdict = "ok";
  o.result["name"] = e.name;
  o.result["description"] = e.description;
  o.result["graph"] = graph_to_json(e.graph);
  o.result["labels"] = e.labels;
  json claims = json::object();
  for (const catalog::Claim& c : e.claims) claims[catalog::property_name(c.property)] = c.expected;
  o.result["claims"] = claims;
  if (dot) {
    o.text = to_dot(e.graph, nullptr, e.name);
    o.result["dot"] = o.text;
    return o;
  }
  std::ostringstream t;
  t << e.name << ": " << e.description << '\n';
  t << "labels:";
  for (std::size_t i = 0; i < e.labels.size(); ++i) t << ' ' << i << '=' << e.labels[i];
  t << "\nclaims:";
  for (auto& [k, v] : claims.items()) t << ' ' << k << '=' << v.get<int>();
  t << '\n' << to_edgelist(e.graph);
  o.text = t.str();
  return o;
}

json claim_report_json(const catalog::ClaimReport& r) {
  json checks = json::array();
  for (const catalog::ClaimCheck& c : r.checks) {
    checks.push_back({{"property", catalog::property_name(c.claim.property)},
                      {"expected", c.claim.expected},
                      {"actual", c.actual},
                      {"pass", c.pass()}});
  }
  return {{"name", r.name}, {"pass", r.pass()}, {"checks", checks}};
}

Outcome cmd_catalog_verify(const std::string& name, int param, bool all) {
  if (all == !name.empty()) throw DomainError("give a catalog name or --all");
  std::vector<catalog::ClaimReport> reports;
  if (all) reports = catalog::verify_all();
  else reports.push_back(catalog::verify_claims(lookup(name, param)));
  Outcome o;
  bool ok = true;
  std::ostringstream t;
  o.result["entries"] = json::array();
  for (const auto& r : reports) {
    ok = ok && r.pass();
    o.result["entries"].push_back(claim_report_json(r));
    t << (r.pass() ? "PASS " : "FAIL ") << r.name;
    for (const auto& c : r.checks) {
      if (!c.pass()) {
        t << "  " << catalog::property_name(c.claim.property) << " expected " << c.claim.expected
          << " got " << c.actual;
      }
    }
    t << '\n';
  }
  o.code = ok ? kOk : kNegative;
  o.verdict = ok ? "pass" : "fail";
  o.text = t.str();
  return o;
}

Outcome cmd_r_table(Session& s, int n, bool allow_long, bool full) {
  const int expected[] = {0, 1, 3, 6, 8, 11};
  if (n < 1) throw DomainError("--n must be positive");
  Outcome o;
  bool ok = true;
  o.result["rows"] = json::array();
  std::ostringstream t;
  t << "n  r(n)  classes  reduced\n";
  for (int k = 1; k <= n; ++k) {
    verify::RTableRow row = verify::r_row(k, allow_long, full);
    json j = verify::to_json(row, s.timing());
    if (k <= 6) {
      j["expected"] = expected[k - 1];
      ok = ok && row.r == expected[k - 1];
    }
    if (k == 6) {
      bool g3 = row.extremal.size() == 1 &&
                isomorphic(row.extremal[0], catalog::get("G3").graph);
      j["extremal_is_G3"] = g3;
      ok = ok && g3;
    }
    o.result["rows"].push_back(j);
    t << k << "  " << row.r << "  " << row.classes_checked << "  " << row.reduced_classes;
    if (k == 6) t << "  extremal " << (j["extremal_is_G3"].get<bool>() ? "is G3" : "is not G3");
    t << '\n';
  }
  o.code = ok ? kOk : kNegative;
  o.verdict = ok ? "pass" : "fail";
  o.text = t.str();
  return o;
}

Outcome cmd_family(Session& s, const std::string& file) {
  Multigraph g = s.load(file);
  verify::FamilyVerdict v = verify::family_verdict(g);
  Outcome o;
  o.verdict = "ok";
  o.result = verify::to_json(v);
  std::ostringstream t;
  t << "F1: " << (v.in_f1 ? "yes" : "no") << "\nF2: " << (v.in_f2 ? "yes" : "no") << '\n';
  for (const auto& n : v.notes) t << "note: " << n << '\n';
  o.text = t.str();
  return o;
}

Outcome cmd_lemma(Session& s, const std::string& id, std::int64_t samples) {
  Outcome o;
  if (id == "list") {
    o.verdict = "ok";
    o.result["lemmas"] = json::array();
    for (const std::string& k : verify::sweep_ids()) {
      o.result["lemmas"].push_back({{"id", k}, {"statement", verify::sweep_statement(k)}});
      o.text += k + "\t" + verify::sweep_statement(k) + "\n";
    }
    return o;
  }
  verify::SweepReport r = verify::lemma_sweep(id, samples, s.seed(), s.threads());
  o.code = r.pass() ? kOk : kNegative;
  o.verdict = r.pass() ? "pass" : "fail";
  o.result = verify::to_json(r, s.timing());
  std::ostringstream t;
  t << (r.pass() ? "PASS " : "FAIL ") << r.id << ": " << r.checked << " checked, " << r.vacuous
    << " vacuous, " << r.violations << " violations (seed " << r.seed << ")\n";
  for (const auto& c : r.counterexamples) t << "counterexample: " << c.dump() << '\n';
  o.text = t.str();
  return o;
}

Outcome cmd_verify_all(Session& s, const std::string& only) {
  Outcome o;
  bool ok = true;
  bool any = false;
  o.result["criteria"] = json::array();
  std::ostringstream t;
  for (const verify::Criterion& c : verify::acceptance_criteria()) {
    if (!only.empty() && c.id != only) continue;
    any = true;
    verify::CriterionResult r = verify::run_criterion(c, s.threads());
    ok = ok && r.pass;
    o.result["criteria"].push_back(verify::to_json(r, s.timing()));
    t << (r.pass ? "PASS " : "FAIL ") << r.id << "  " << r.title;
    if (s.timing()) t << "  (" << r.seconds << " s)";
    t << '\n';
  }
  if (!any) throw LookupError("unknown criterion '" + only + "'");
  o.code = ok ? kOk : kNegative;
  o.verdict = ok ? "pass" : "fail";
  o.text = t.str();
  return o;
}

}  // namespace

std::uint64_t digest(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Globals globals;
  CLI::App app{"Mod-3 orientations, Z3-connectivity and graph reductions", "z3flow"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_flag("--json", globals.json, "machine-readable output");
  app.add_flag("--timing", globals.timing, "report wall time");
  app.add_option("--threads", globals.threads, "worker cap (default: hardware threads)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--seed", globals.seed, "seed for randomized commands")->capture_default_str();
  app.add_option("--format", globals.format, "input format")
      ->check(CLI::IsMember({"auto", "edgelist", "json", "graph6"}))
      ->capture_default_str();

  std::string command;
  json params = json::object();
  std::function<Outcome(Session&)> action;

  // connectivity
  std::string file;
  bool odd = false, essential = false, alpha = false;
  auto* conn = app.add_subcommand("connectivity", "edge-connectivity and related parameters");
  conn->add_option("file", file, "graph file, - for stdin")->required();
  conn->add_flag("--odd", odd, "minimum odd cut");
  conn->add_flag("--essential", essential, "minimum essential cut");
  conn->add_flag("--alpha", alpha, "independence number");
  conn->callback([&] {
    command = "connectivity";
    params = {{"file", file}, {"odd", odd}, {"essential", essential}, {"alpha", alpha}};
    action = [&](Session& s) { return cmd_connectivity(s, file, odd, essential, alpha); };
  });

  // decide
  bool mod3 = false, z3conn = false, via_reduction = false, witness = false;
  std::string boundary_file;
  auto* decide = app.add_subcommand("decide", "mod-3 orientation, boundary or Z3-connectivity");
  decide->add_option("file", file, "graph file, - for stdin")->required();
  auto* m3 = decide->add_flag("--mod3", mod3, "orientation with all imbalances divisible by 3");
  auto* zc = decide->add_flag("--z3conn", z3conn, "Z3-connectivity");
  auto* bd = decide->add_option("--boundary", boundary_file, "realize the boundary in this file");
  m3->excludes(zc)->excludes(bd);
  zc->excludes(bd);
  decide->add_flag("--via-reduction", via_reduction, "with --mod3, decide on the reduced graph");
  decide->add_flag("--witness", witness, "print the orientation (DOT and JSON)");
  decide->callback([&] {
    command = "decide";
    params = {{"file", file}, {"mod3", mod3}, {"z3conn", z3conn},
              {"boundary", boundary_file}, {"via_reduction", via_reduction},
              {"witness", witness}};
    action = [&](Session& s) {
      return cmd_decide(s, file, mod3, z3conn, boundary_file, via_reduction, witness);
    };
  });

  // reduce
  int cap = kDefaultSizeCap;
  std::string trace_out;
  auto* reduce = app.add_subcommand("reduce", "contract Z3-connected subgraphs");
  reduce->add_option("file", file, "graph file, - for stdin")->required();
  reduce->add_option("--cap", cap, "largest subgraph order searched")
      ->check(CLI::Range(2, 64))
      ->capture_default_str();
  reduce->add_option("--trace", trace_out, "write the contraction trace here");
  reduce->callback([&] {
    command = "reduce";
    params = {{"file", file}, {"cap", cap}, {"trace", trace_out}};
    action = [&](Session& s) { return cmd_reduce(s, file, cap, trace_out); };
  });

  // wheel
  bool w_odd = false, w_even = false;
  int max_rim = 0;
  auto* wheel = app.add_subcommand("wheel", "find a wheel subgraph");
  wheel->add_option("file", file, "graph file, - for stdin")->required();
  wheel->add_flag("--odd", w_odd, "odd rim only");
  wheel->add_flag("--even", w_even, "even rim only");
  wheel->add_option("--max-rim", max_rim, "longest rim considered (0: no limit)");
  wheel->callback([&] {
    command = "wheel";
    params = {{"file", file}, {"odd", w_odd}, {"even", w_even}, {"max_rim", max_rim}};
    action = [&](Session& s) { return cmd_wheel(s, file, w_odd, w_even, max_rim); };
  });

  // wcontract
  int center = 0;
  std::vector<int> rim, xs;
  auto* wc = app.add_subcommand("wcontract", "contract an odd wheel along a two-vertex rim arc");
  wc->add_option("file", file, "graph file, - for stdin")->required();
  wc->add_option("--center", center, "wheel center")->required();
  wc->add_option("--rim", rim, "rim in cyclic order")->delimiter(',')->required();
  wc->add_option("--X", xs, "the adjacent rim pair contracted to x")->delimiter(',')->required();
  wc->callback([&] {
    command = "wcontract";
    params = {{"file", file}, {"center", center}, {"rim", rim}, {"X", xs}};
    action = [&](Session& s) { return cmd_wcontract(s, file, center, rim, xs); };
  });

  // catalog
  std::string name;
  int param = 0;
  bool dot = false, all = false;
  auto* cat = app.add_subcommand("catalog", "named graphs and their claims");
  cat->require_subcommand(1);
  auto* cat_list = cat->add_subcommand("list", "list entries");
  cat_list->callback([&] {
    command = "catalog list";
    action = [&](Session&) { return cmd_catalog_list(); };
  });
  auto* cat_show = cat->add_subcommand("show", "print an entry");
  cat_show->add_option("name", name, "entry name, e.g. G3, FZ-7, W5")->required();
  cat_show->add_option("--n", param, "family parameter");
  cat_show->add_flag("--dot", dot, "Graphviz output");
  cat_show->callback([&] {
    command = "catalog show";
    params = {{"name", name}, {"n", param}, {"dot", dot}};
    action = [&](Session&) { return cmd_catalog_show(name, param, dot); };
  });
  auto* cat_verify = cat->add_subcommand("verify", "check recorded claims");
  cat_verify->add_option("name", name, "entry name");
  cat_verify->add_option("--n", param, "family parameter");
  cat_verify->add_flag("--all", all, "every named entry and small family members");
  cat_verify->callback([&] {
    command = "catalog verify";
    params = {{"name", name}, {"n", param}, {"all", all}};
    action = [&](Session&) { return cmd_catalog_verify(name, param, all); };
  });

  // verify
  auto* ver = app.add_subcommand("verify", "exhaustive tables and seeded sweeps");
  ver->require_subcommand(1);
  int rn = verify::kMaxRTableOrder;
  bool allow_long = false, full = false;
  auto* rt = ver->add_subcommand("r-table", "r(n) for n = 1..N");
  rt->add_option("--n", rn, "largest order")->capture_default_str();
  rt->add_flag("--long", allow_long, "allow n = 7");
  rt->add_flag("--full", full, "scan every edge count");
  rt->callback([&] {
    command = "verify r-table";
    params = {{"n", rn}, {"long", allow_long}, {"full", full}};
    action = [&](Session& s) { return cmd_r_table(s, rn, allow_long, full); };
  });
  auto* fam = ver->add_subcommand("family", "F1 / F2 membership");
  fam->add_option("file", file, "graph file, - for stdin")->required();
  fam->callback([&] {
    command = "verify family";
    params = {{"file", file}};
    action = [&](Session& s) { return cmd_family(s, file); };
  });
  std::string lemma_id;
  std::int64_t samples = 200;
  auto* lem = ver->add_subcommand("lemma", "seeded sweep of one statement (id 'list' lists them)");
  lem->add_option("id", lemma_id, "sweep id")->required();
  lem->add_option("--samples", samples, "instances")->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  lem->callback([&] {
    command = "verify lemma";
    params = {{"id", lemma_id}, {"samples", samples}, {"seed", globals.seed}};
    action = [&](Session& s) { return cmd_lemma(s, lemma_id, samples); };
  });
  std::string only;
  auto* vall = ver->add_subcommand("all", "the acceptance suite");
  vall->add_option("--only", only, "run a single criterion");
  vall->callback([&] {
    command = "verify all";
    params = {{"only", only}};
    action = [&](Session& s) { return cmd_verify_all(s, only); };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  Session session(globals);
  auto start = std::chrono::steady_clock::now();
  try {
    Outcome o = action(session);
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    session.emit(command, params, o, seconds, out);
    return o.code;
  } catch (const CapabilityError& e) {
    err << "capability error: " << e.what() << '\n';
    return kCapability;
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << '\n';
  } catch (const ModelError& e) {
    err << "model error: " << e.what() << '\n';
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
  } catch (const LookupError& e) {
    err << "lookup error: " << e.what() << '\n';
  } catch (const nlohmann::json::exception& e) {
    err << "input error: " << e.what() << '\n';
  }
  return kUsage;
}

}  // namespace z3flow::cli
