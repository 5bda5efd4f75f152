#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace z3flow::cli {

// Exit codes.
inline constexpr int kOk = 0;         // feasible / pass
inline constexpr int kNegative = 1;   // infeasible / fail
inline constexpr int kUsage = 2;      // bad arguments or input
inline constexpr int kCapability = 3; // outside supported sizes

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// FNV-1a, 64 bit.
std::uint64_t digest(std::string_view bytes);

}  // namespace z3flow::cli
