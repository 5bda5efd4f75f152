#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "z3flow/multigraph.hpp"

namespace fixtures {

z3flow::Multigraph graph(int n, std::initializer_list<std::pair<int, int>> edges);
z3flow::Multigraph complete(int n);
z3flow::Multigraph cycle(int n);
// Center n, rim 0..n-1.
z3flow::Multigraph wheel(int n);
z3flow::Multigraph k33();

}  // namespace fixtures
