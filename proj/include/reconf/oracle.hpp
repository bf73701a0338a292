// Brute-force reference solver for tiny instances. It shares nothing with the
// branch-and-bound search: candidates are enumerated directly and judged by
// the validator and the cost functions.
#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>

#include "reconf/costing.hpp"
#include "reconf/model.hpp"

namespace reconf {

class SizeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct OracleLimits {
  int maxThings = 7;
  int maxUpper = 7;
  int maxLegacyAtoms = 20;  // not counting person/thing/ownership atoms
  std::size_t maxOptima = 64;
};

struct OracleResult {
  bool feasible = false;
  Weight cost = 0;
  std::set<Configuration> optima;  // canonical, capped at maxOptima
  std::uint64_t candidates = 0;    // leaves handed to the validator
};

/// Throws SizeError when the instance exceeds `limits`.
OracleResult brute_force_configuration(const Instance& instance, const CostModel& model,
                                       const OracleLimits& limits = {});
OracleResult brute_force_reconfiguration(const ReconfigProblem& problem, const CostModel& model,
                                         const OracleLimits& limits = {});

}  // namespace reconf
