// Shared fixtures: the two-person house example and a generator of small
// random problems.
#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "reconf/costing.hpp"
#include "reconf/facts.hpp"
#include "reconf/model.hpp"
#include "reconf/model_io.hpp"

namespace reconf::testing {

inline std::string data_path(const std::string& name) { return std::string(RECONF_DATA_DIR) + "/" + name; }

inline std::string read_text(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline facts::FactFile load(const std::string& name) { return facts::parse(read_text(data_path(name))); }

struct House {
  Instance instance;             // six things, bounds derived
  CostModel configCosts;
  Configuration solution;        // the hand-made two-cabinet configuration
  ReconfigProblem reconf;        // things 3, 8, 21 long; 21 is new
  Configuration stale;           // old configuration read against the new requirements
  CostModel costsA;              // altering is cheap
  CostModel costsB;              // new cabinets are cheap
};

inline House house() {
  House h;
  h.instance = derive_bounds(instance_from_facts(load("instance.facts")));
  h.configCosts = cost_model_from_facts(load("config_costs.facts"));
  h.solution = configuration_from_facts(load("house_solution.facts"));
  h.reconf = make_problem(instance_from_facts(load("reconf_instance.facts")), legacy_from_facts(load("legacy.facts")));
  h.stale = configuration_from_facts(load("stale_state.facts"));
  h.costsA = cost_model_from_facts(load("costs_a.facts"));
  h.costsB = cost_model_from_facts(load("costs_b.facts"));
  return h;
}

struct RandomCase {
  ReconfigProblem problem;
  CostModel model;
  bool reconfiguration = false;
  std::string describe;
};

/// At most 6 things, 2 persons, 3 legacy cabinets and 2 legacy rooms; every
/// weight drawn from [0,10]. About a quarter of the cases have no legacy.
inline RandomCase random_case(std::mt19937& rng) {
  auto pick = [&rng](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  auto chance = [&rng](double p) { return std::bernoulli_distribution(p)(rng); };

  RandomCase rc;
  Instance in;
  const int persons = pick(1, 2);
  const int things = pick(1, 6);
  for (int p = 1; p <= persons; ++p) in.persons.insert(p);
  for (int k = 0; k < things; ++k) {
    const Id t = persons + 1 + k;
    in.things.insert(t);
    in.owner[t] = pick(1, persons);
  }
  if (chance(0.6)) {
    for (Id t : in.things) in.length[t] = chance(0.3) ? Length::Long : Length::Short;
  }

  LegacyConfiguration legacy;
  rc.reconfiguration = chance(0.75);
  if (rc.reconfiguration) {
    Id next = persons + things + 1;
    legacy.persons = in.persons;
    std::map<Id, Id> oldOwner;
    for (Id t : in.things) {
      if (chance(0.8)) oldOwner[t] = in.owner[t];
    }
    if (chance(0.3)) oldOwner[next++] = 1;  // a thing that is gone now
    for (auto [t, p] : oldOwner) {
      legacy.things.insert(t);
      legacy.personToThing.insert({p, t});
    }
    const int cabinets = pick(0, 3);
    const int rooms = cabinets == 0 ? pick(0, 1) : pick(1, 2);
    std::vector<Id> cabinetIds, roomIds;
    std::map<Id, Id> cabinetOwner;
    for (int k = 0; k < cabinets; ++k) {
      cabinetIds.push_back(next);
      cabinetOwner[next] = pick(1, persons);
      legacy.config.cabinets.insert(next++);
    }
    std::map<Id, Id> roomOwner;
    for (int k = 0; k < rooms; ++k) {
      roomIds.push_back(next);
      legacy.config.rooms.insert(next);
      if (chance(0.9)) {
        roomOwner[next] = pick(1, persons);
        legacy.config.personToRoom.insert({roomOwner[next], next});
      }
      ++next;
    }
    std::map<Id, int> load;
    for (auto [t, p] : oldOwner) {
      std::vector<Id> fits;
      for (Id c : cabinetIds) {
        if (cabinetOwner[c] == p && load[c] < 5) fits.push_back(c);
      }
      if (fits.empty() || !chance(0.85)) continue;
      const Id c = fits[pick(0, static_cast<int>(fits.size()) - 1)];
      ++load[c];
      legacy.config.cabinetToThing.insert({c, t});
    }
    for (Id c : cabinetIds) {
      if (!roomIds.empty() && chance(0.9)) {
        legacy.config.roomToCabinet.insert({roomIds[pick(0, static_cast<int>(roomIds.size()) - 1)], c});
      }
    }
    rc.problem = make_problem(in, legacy, chance(0.8));
  } else {
    rc.problem.instance = derive_bounds(in);
  }

  std::map<std::string, Weight> w;
  for (const std::string& k : known_cost_predicates()) w[k] = pick(0, 10);
  rc.model = CostModel::with(w);

  std::ostringstream d;
  d << facts::serialize(to_facts(in));
  if (rc.reconfiguration) d << facts::serialize(to_facts(rc.problem.legacy));
  d << facts::serialize(to_facts(rc.model));
  rc.describe = d.str();
  return rc;
}

}  // namespace reconf::testing
