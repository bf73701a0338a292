// Exact branch-and-bound solver for configuration and reconfiguration.
#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "reconf/costing.hpp"
#include "reconf/model.hpp"

namespace reconf {

struct SearchBudget {
  std::optional<std::chrono::milliseconds> timeLimit;
  std::optional<std::uint64_t> nodeLimit;
};

enum class SolveStatus { Optimal, FeasibleSuboptimal, Infeasible, Unknown };

const char* to_string(SolveStatus s);

struct Solution {
  Configuration config;
  ActionSet actions;
  CostBreakdown cost;
};

struct ProgressEvent {
  Weight cost = 0;
  std::uint64_t nodes = 0;
  double elapsedMs = 0;
};

struct SolveOptions {
  SearchBudget budget;
  int workers = 1;
  /// When positive, collect up to this many distinct optimal solutions.
  int allOptimal = 0;
  /// Called on every strictly improving incumbent, from the searching thread.
  std::function<void(const ProgressEvent&)> onIncumbent;
};

struct SolveResult {
  SolveStatus status = SolveStatus::Unknown;
  std::optional<Solution> best;
  std::vector<Solution> optima;  // only filled with allOptimal > 0
  std::vector<ProgressEvent> incumbents;
  std::uint64_t nodes = 0;
  double elapsedMs = 0;
};

/// Cheapest configuration from scratch (every atom created).
SolveResult solve_configuration(const Instance& instance, const CostModel& model,
                                const SolveOptions& options = {});

/// Cheapest reconfiguration of problem.legacy into a configuration of
/// problem.instance.
SolveResult solve_reconfiguration(const ReconfigProblem& problem, const CostModel& model,
                                  const SolveOptions& options = {});

}  // namespace reconf
