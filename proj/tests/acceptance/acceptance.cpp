#include <cstdio>
#include <cstdlib>
#include <string>
#include <thread>

#include "z3flow/acceptance.hpp"

int main(int argc, char** argv) {
  int threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  std::string only;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--threads" && i + 1 < argc) threads = std::atoi(argv[++i]);
    else if (a == "--only" && i + 1 < argc) only = argv[++i];
  }
  int failures = 0;
  for (const auto& c : z3flow::verify::acceptance_criteria()) {
    if (!only.empty() && c.id != only) continue;
    auto r = z3flow::verify::run_criterion(c, threads);
    if (!r.pass) ++failures;
    std::printf("%s %-11s %8.2fs / %4.0fs  %s\n", r.pass ? "PASS" : "FAIL", r.id.c_str(),
                r.seconds, r.budget_seconds, r.title.c_str());
    if (!r.pass) std::printf("  details: %s\n", r.details.dump().c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
