#include "z3flow/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <sstream>

#include "z3flow/connectivity.hpp"
#include "z3flow/errors.hpp"
#include "z3flow/orientation.hpp"
#include "z3flow/reduction.hpp"

namespace z3flow::catalog {

namespace {

using P = Property;

struct Named {
  const char* name;
  const char* description;
  const char* labels;  // one character per vertex
  const char* edges;   // space separated label pairs
  std::vector<Claim> claims;
};

// Edge lists by vertex label; repeated pairs are listed once.
const std::vector<Named>& named() {
  static const std::vector<Named> table = {
      {"G3", "K4 on abcd plus e, f joined to each other and to both a and d",
       "abcdef", "ad ab ac bc dc bd ae af ed df ef",
       {{P::order, 6}, {P::size, 11}, {P::has_mod3_orientation, 0}, {P::z3_connected, 0},
        {P::z3_reduced, 1}, {P::edge_connectivity, 3}, {P::independence_number, 2}}},
      {"G4", "G3 without the edge ad", "abcdef", "ab ac bc dc bd ae af ed df ef",
       {{P::order, 6}, {P::size, 10}, {P::z3_connected, 0}, {P::z3_reduced, 1}}},
      {"G5", "the 5-wheel, center c", "pqrstc", "pq ps ts tr rq cp cq cr cs ct",
       {{P::order, 6}, {P::size, 10}, {P::has_mod3_orientation, 0}, {P::z3_connected, 0}}},
      {"G10", "two K4 sharing d, plus the edge ae", "abcdefg",
       "ab ac cd db da cb ae ed ef gf eg dg df",
       {{P::order, 7}, {P::size, 13}, {P::z3_connected, 0}, {P::z3_reduced, 1}}},
      {"G11", "two K4 sharing a vertex", "abcdefg", "ab ac cd db da cb ed ef gf eg dg df",
       {{P::order, 7}, {P::size, 12}, {P::z3_connected, 0}, {P::z3_reduced, 1}}},
      {"G18", "8 vertices, degrees 5,5,5,5,3,3,3,3, containing the K4 ABCF", "ABCDEFGH",
       "DA AB BG EF FC CH DE GH DF EA AF AC BC BF GC BH",
       {{P::order, 8}, {P::size, 16}, {P::has_mod3_orientation, 0}, {P::z3_connected, 0}}},
      {"FZ-1", "6 vertices, 10 edges", "abcdef", "ad ab ac bc bf bd ec af ed ef",
       {{P::has_mod3_orientation, 0}, {P::z3_connected, 0}, {P::ore_condition, 1}}},
      {"FZ-2", "same graph as G3", "abcdef", "ad ab ac bc dc bd ae af ed df ef",
       {{P::has_mod3_orientation, 0}, {P::z3_connected, 0}, {P::ore_condition, 1}}},
      {"FZ-3", "the 5-wheel", "pqrstc", "pq ps ts tr rq cp cq cr cs ct",
       {{P::has_mod3_orientation, 0}, {P::z3_connected, 0}, {P::ore_condition, 1}}},
      {"FZ-4", "the triangular prism", "abcdef", "eb fc bc ef db dc ae af ad",
       {{P::has_mod3_orientation, 0}, {P::z3_connected, 0}, {P::ore_condition, 1}}},
      {"FZ-5", "K4", "abcd", "ab ac ad bc bd cd",
       {{P::order, 4}, {P::size, 6}, {P::has_mod3_orientation, 0}, {P::z3_connected, 0},
        {P::ore_condition, 1}}},
      {"FZ-6", "K4 with the edge ab subdivided by e", "abcde", "ac bc cd ad bd ea eb",
       {{P::has_mod3_orientation, 0}, {P::z3_connected, 0}, {P::ore_condition, 1}}},
      {"FZ-7", "K3,3", "abcdef", "ad ae af bd be bf cd ce cf",
       {{P::has_mod3_orientation, 1}, {P::z3_connected, 0}, {P::ore_condition, 1}}},
      {"FZ-8", "same graph as G4", "abcdef", "ab ac bc dc bd ae af ed df ef",
       {{P::has_mod3_orientation, 1}, {P::z3_connected, 0}, {P::ore_condition, 1}}},
      {"FZ-9", "K5 without the edges qs and qt", "pqrst", "ps ts tr rq pq pt rs pr",
       {{P::order, 5}, {P::size, 8}, {P::has_mod3_orientation, 1}, {P::z3_connected, 0},
        {P::z3_reduced, 1}, {P::ore_condition, 1}}},
      {"FZ-10", "K4 minus an edge", "abcd", "ab ac bc bd cd",
       {{P::has_mod3_orientation, 1}, {P::z3_connected, 0}, {P::ore_condition, 1}}},
      {"FZ-11", "the 4-cycle", "abcd", "ab bc cd da",
       {{P::has_mod3_orientation, 1}, {P::z3_connected, 0}, {P::ore_condition, 1}}},
      {"FZ-12", "the triangle", "abc", "ab bc ca",
       {{P::has_mod3_orientation, 1}, {P::z3_connected, 0}, {P::ore_condition, 1}}},
  };
  return table;
}

CatalogEntry build(const Named& n) {
  CatalogEntry e;
  e.name = n.name;
  e.description = n.description;
  std::string labels = n.labels;
  e.graph = Multigraph::with_vertices(static_cast<int>(labels.size()));
  for (char c : labels) e.labels.emplace_back(1, c);
  std::istringstream pairs(n.edges);
  std::string p;
  while (pairs >> p) {
    auto a = labels.find(p[0]);
    auto b = labels.find(p[1]);
    e.graph.add_edge(static_cast<VertexId>(a), static_cast<VertexId>(b));
  }
  e.claims = n.claims;
  return e;
}

std::vector<std::string> numbered(int n, char prefix) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(std::string(1, prefix) + std::to_string(i));
  return out;
}

CatalogEntry complete(int n) {
  if (n < 1) throw DomainError("K_n needs n >= 1");
  if (n > 64) throw CapabilityError("K_n is limited to n <= 64");
  CatalogEntry e;
  e.name = "K" + std::to_string(n);
  e.description = "complete graph on " + std::to_string(n) + " vertices";
  e.graph = Multigraph::with_vertices(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) e.graph.add_edge(i, j);
  }
  e.labels = numbered(n, 'v');
  e.claims = {{P::order, n}, {P::size, n * (n - 1) / 2}};
  if (n <= 8) e.claims.push_back({P::z3_connected, n == 1 || n >= 5});
  return e;
}

CatalogEntry cycle(int n) {
  if (n < 2) throw DomainError("C_n needs n >= 2");
  if (n > 64) throw CapabilityError("C_n is limited to n <= 64");
  CatalogEntry e;
  e.name = "C" + std::to_string(n);
  e.description = n == 2 ? "the digon" : "cycle on " + std::to_string(n) + " vertices";
  e.graph = Multigraph::with_vertices(n);
  for (int i = 0; i < n; ++i) e.graph.add_edge(i, (i + 1) % n);
  e.labels = numbered(n, 'v');
  e.claims = {{P::order, n}, {P::size, n}};
  if (n <= 12) e.claims.push_back({P::z3_connected, n == 2});
  return e;
}

CatalogEntry wheel(int n) {
  if (n < 2) throw DomainError("W_n needs n >= 2");
  if (n > 63) throw CapabilityError("W_n is limited to n <= 63");
  CatalogEntry e;
  e.name = "W" + std::to_string(n);
  e.description = "rim cycle on " + std::to_string(n) + " vertices plus a center joined to all";
  e.graph = Multigraph::with_vertices(n + 1);
  for (int i = 0; i < n; ++i) e.graph.add_edge(i, (i + 1) % n);
  for (int i = 0; i < n; ++i) e.graph.add_edge(n, i);
  e.labels = numbered(n, 'r');
  e.labels.push_back("c");
  e.claims = {{P::order, n + 1}, {P::size, 2 * n}};
  if (n <= 12) {
    e.claims.push_back({P::z3_connected, n % 2 == 0});
    if (n % 2 == 1) e.claims.push_back({P::has_mod3_orientation, 0});
  }
  return e;
}

std::string upper(std::string s) {
  for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

}  // namespace

std::string property_name(Property p) {
  switch (p) {
    case P::has_mod3_orientation: return "has-mod3";
    case P::z3_connected: return "z3-connected";
    case P::z3_reduced: return "z3-reduced";
    case P::edge_connectivity: return "edge-connectivity";
    case P::independence_number: return "independence-number";
    case P::ore_condition: return "ore-condition";
    case P::order: return "order";
    case P::size: return "size";
  }
  return "unknown";
}

CatalogEntry get(const std::string& name, std::optional<int> parameter) {
  std::string key = upper(name);
  for (const Named& n : named()) {
    if (upper(n.name) == key) {
      if (parameter) throw DomainError(std::string(n.name) + " takes no parameter");
      return build(n);
    }
  }
  if (key == "SPECIAL-18") {
    throw LookupError("special-18: the 18 special graphs of order at most 8 have no adjacency data here");
  }
  std::string family;
  std::string digits;
  if (!key.empty() && (key[0] == 'K' || key[0] == 'C' || key[0] == 'W')) {
    family = key.substr(0, 1);
    digits = key.substr(1);
    if (!digits.empty() && digits[0] == '_') digits = digits.substr(1);
    if (digits == "N") digits.clear();
  }
  bool numeric = !digits.empty() && std::all_of(digits.begin(), digits.end(),
                                                [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  if (family.empty() || (!digits.empty() && !numeric)) {
    throw LookupError("unknown catalog entry '" + name + "'");
  }
  if (numeric) {
    if (parameter) throw DomainError("parameter given twice for " + name);
    if (digits.size() > 6) throw DomainError("parameter out of range for " + name);
    parameter = std::stoi(digits);
  }
  if (!parameter) throw DomainError("family " + family + " needs a parameter");
  if (family == "K") return complete(*parameter);
  if (family == "C") return cycle(*parameter);
  return wheel(*parameter);
}

std::vector<std::string> list() {
  std::vector<std::string> out;
  for (const Named& n : named()) out.push_back(n.name);
  out.insert(out.end(), {"K_n", "C_n", "W_n"});
  return out;
}

std::vector<CatalogEntry> verification_set() {
  std::vector<CatalogEntry> out;
  for (const Named& n : named()) out.push_back(build(n));
  for (int n = 1; n <= 7; ++n) out.push_back(complete(n));
  for (int n = 2; n <= 8; ++n) out.push_back(cycle(n));
  for (int n = 2; n <= 8; ++n) out.push_back(wheel(n));
  return out;
}

bool ore_condition(const Multigraph& g) {
  const int n = g.num_vertices();
  Multigraph s = underlying_simple(g);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      VertexId a = s.vertices()[i], b = s.vertices()[j];
      if (s.multiplicity(a, b) == 0 && s.degree(a) + s.degree(b) < n) return false;
    }
  }
  return true;
}

int evaluate(Property p, const Multigraph& g) {
  switch (p) {
    case P::has_mod3_orientation: return mod3_orientation(g).has_value();
    case P::z3_connected: return is_z3_connected(g);
    case P::z3_reduced: return is_z3_reduced(g);
    case P::edge_connectivity: return edge_connectivity(g).size;
    case P::independence_number: return independence_number(g).size;
    case P::ore_condition: return ore_condition(g);
    case P::order: return g.num_vertices();
    case P::size: return g.num_edges();
  }
  throw DomainError("unknown property");
}

bool ClaimReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const ClaimCheck& c) { return c.pass(); });
}

ClaimReport verify_claims(const CatalogEntry& entry) {
  auto start = std::chrono::steady_clock::now();
  ClaimReport r;
  r.name = entry.name;
  for (const Claim& c : entry.claims) r.checks.push_back(ClaimCheck{c, evaluate(c.property, entry.graph)});
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

ClaimReport verify_claims(const std::string& name, std::optional<int> parameter) {
  return verify_claims(get(name, parameter));
}

std::vector<ClaimReport> verify_all() {
  std::vector<ClaimReport> out;
  for (const CatalogEntry& e : verification_set()) out.push_back(verify_claims(e));
  return out;
}

}  // namespace z3flow::catalog
