#pragma once

#include <optional>
#include <string>
#include <vector>

#include "z3flow/multigraph.hpp"

namespace z3flow::catalog {

enum class Property {
  has_mod3_orientation,
  z3_connected,
  z3_reduced,
  edge_connectivity,
  independence_number,
  ore_condition,
  order,
  size,
};

std::string property_name(Property p);

// Booleans are stored as 0 or 1.
struct Claim {
  Property property;
  int expected;
};

struct CatalogEntry {
  std::string name;
  std::string description;
  Multigraph graph;
  std::vector<std::string> labels;  // display name of vertex i
  std::vector<Claim> claims;
};

// Named graphs: G3, G4, G5, G10, G11, G18, FZ-1 ... FZ-12. Families K, C and
// W take a parameter (K_n for n >= 1, C_n and W_n for n >= 2); "K5", "K_5"
// and get("K", 5) are equivalent. Throws LookupError for unknown names and
// DomainError for a missing or out of range parameter.
CatalogEntry get(const std::string& name, std::optional<int> parameter = std::nullopt);

// Named entries followed by the family names K_n, C_n, W_n.
std::vector<std::string> list();

// Entries checked by verify_all: every named graph plus K1..K7, C2..C8
// and W2..W8.
std::vector<CatalogEntry> verification_set();

// Every nonadjacent pair u, v of the underlying simple graph has
// deg(u) + deg(v) >= |V|.
bool ore_condition(const Multigraph& g);

int evaluate(Property p, const Multigraph& g);

struct ClaimCheck {
  Claim claim;
  int actual;
  bool pass() const { return actual == claim.expected; }
};

struct ClaimReport {
  std::string name;
  std::vector<ClaimCheck> checks;
  double seconds = 0;
  bool pass() const;
};

ClaimReport verify_claims(const CatalogEntry& entry);
ClaimReport verify_claims(const std::string& name, std::optional<int> parameter = std::nullopt);
std::vector<ClaimReport> verify_all();

}  // namespace z3flow::catalog
