#pragma once

#include <functional>
#include <string>
#include <vector>

#include "json.hpp"

namespace z3flow::verify {

struct CriterionResult {
  std::string id;
  std::string title;
  bool pass = false;
  double seconds = 0;
  double budget_seconds = 0;
  nlohmann::json details = nlohmann::json::object();

  bool within_budget() const { return seconds < budget_seconds; }
};

struct Criterion {
  std::string id;
  std::string title;
  double budget_seconds;
  // Fills details and returns the verdict, ignoring time.
  std::function<bool(nlohmann::json& details, int threads)> check;
};

inline constexpr std::uint64_t kAcceptanceSeed = 20240601;

const std::vector<Criterion>& acceptance_criteria();

// Runs one criterion; pass requires both the verdict and the time budget.
CriterionResult run_criterion(const Criterion& c, int threads);

nlohmann::json to_json(const CriterionResult& r, bool timing);

}  // namespace z3flow::verify
