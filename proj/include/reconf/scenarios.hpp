// Deterministic benchmark families: empty, long, new room and swap.
//
// Ids are laid out persons first, then things, then legacy cabinets and legacy
// rooms. Legacy cabinets and rooms take the first ids of the domains the
// pre-change requirements derive, so the legacy configuration is a valid
// configuration of those requirements as written.
#pragma once

#include <string>

#include "reconf/costing.hpp"
#include "reconf/model.hpp"

namespace reconf {

struct Scenario {
  std::string name;
  Instance before;  // requirements the legacy configuration was built for (no lengths)
  Instance after;   // new requirements, bounds not derived
  LegacyConfiguration legacy;
  ReconfigProblem problem;  // make_problem(after, legacy)
};

/// nThings/5 persons owning 5 short things each; empty legacy.
Scenario gen_empty(int nThings);
/// Per person 15 things in 3 cabinets of one room; 5 become long.
Scenario gen_long(int nThings);
/// Per person 12 things in 3 cabinets (4 each) of one room; 6 become long.
Scenario gen_newroom(int nThings);
/// One person, 35 things in 7 cabinets, rooms of 3 and 4 cabinets; one thing
/// in the 4-cabinet room becomes long.
Scenario gen_swap();

/// Dispatch by family name. For "swap" nThings must be 0 or 35.
Scenario generate(const std::string& family, int nThings);

/// Creation costs only: high cabinet 10, small cabinet 5, room 5.
CostModel benchmark_costs();

}  // namespace reconf
