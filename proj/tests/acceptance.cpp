// Acceptance gate: one PASS/FAIL line per criterion, non-zero exit if any fails.
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "mutants.hpp"
#include "reconf/oracle.hpp"
#include "reconf/scenarios.hpp"
#include "reconf/solver.hpp"

using namespace reconf;
using namespace reconf::testing;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool ok = true;
  std::ostringstream why;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      why << (why.tellp() > 0 ? "; " : "") << what;
    }
  }
};

bool report(int id, const std::string& title, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = Clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " (" << seconds_since(t0) << " s)";
  if (!o.ok) std::cout << " -- " << o.why.str();
  std::cout << std::endl;
  return o.ok;
}

Id cabinet_of(const Configuration& c, Id thing) {
  for (auto [cab, t] : c.cabinetToThing) {
    if (t == thing) return cab;
  }
  return -1;
}

Id room_of(const Configuration& c, Id cabinet) {
  for (auto [r, cab] : c.roomToCabinet) {
    if (cab == cabinet) return r;
  }
  return -1;
}

Id owner_of(const Configuration& c, Id room) {
  for (auto [p, r] : c.personToRoom) {
    if (r == room) return p;
  }
  return -1;
}

void house_configuration(Outcome& o) {
  const House h = house();
  const auto t0 = Clock::now();
  const SolveResult r = solve_configuration(h.instance, h.configCosts);
  const double took = seconds_since(t0);
  o.require(r.status == SolveStatus::Optimal, "status " + std::string(to_string(r.status)));
  if (!r.best) return;
  const Configuration& c = r.best->config;
  o.require(c.cabinets.size() == 2, "cabinet count");
  o.require(c.rooms.size() == 2, "room count");
  const Id first = cabinet_of(c, 3);
  for (Id t : {4, 5, 6, 7}) o.require(cabinet_of(c, t) == first, "person 1 things split");
  const Id second = cabinet_of(c, 8);
  o.require(second != first && second >= 0, "thing 8 shares a cabinet");
  // Rooms owned as in the hand solution: each person owns the room of their cabinet.
  const Configuration& hand = h.solution;
  o.require(owner_of(c, room_of(c, first)) == owner_of(hand, room_of(hand, cabinet_of(hand, 3))), "owner of room 1");
  o.require(owner_of(c, room_of(c, second)) == owner_of(hand, room_of(hand, cabinet_of(hand, 8))), "owner of room 2");
  o.require(check_configuration(h.instance, c).valid, "invalid");
  o.require(took < 1.0, "took " + std::to_string(took) + " s");
}

void scenario_a(Outcome& o) {
  const House h = house();
  const auto t0 = Clock::now();
  const SolveResult r = solve_reconfiguration(h.reconf, h.costsA);
  const double took = seconds_since(t0);
  o.require(r.status == SolveStatus::Optimal, "status " + std::string(to_string(r.status)));
  if (!r.best) return;
  const Configuration& c = r.best->config;
  o.require(c.cabinetHigh.count(9) && c.cabinetHigh.count(10), "legacy cabinets not both high");
  const Id home = cabinet_of(c, 21);
  o.require(home == 9 || home == 10, "thing 21 not in a reused cabinet");
  std::vector<Id> fresh;
  for (Id cab : c.cabinets) {
    if (cab != 9 && cab != 10) fresh.push_back(cab);
  }
  o.require(fresh.size() == 1 && c.cabinetSmall.count(fresh[0]), "expected exactly one new small cabinet");
  const OracleResult ref = brute_force_reconfiguration(h.reconf, h.costsA);
  o.require(ref.feasible && ref.cost == r.best->cost.total,
            "cost " + std::to_string(r.best->cost.total) + " vs oracle " + std::to_string(ref.cost));
  o.require(check_reconfiguration(h.reconf, c, r.best->actions).valid, "invalid");
  o.require(took < 1.0, "took " + std::to_string(took) + " s");
}

void scenario_b(Outcome& o) {
  const House h = house();
  const SolveResult r = solve_reconfiguration(h.reconf, h.costsB);
  o.require(r.status == SolveStatus::Optimal, "status " + std::string(to_string(r.status)));
  if (!r.best) return;
  const Configuration& c = r.best->config;
  int freshHigh = 0;
  for (Id cab : c.cabinetHigh) freshHigh += h.reconf.instance.cabinet.is_new(cab);
  o.require(freshHigh == 2, "new high cabinets: " + std::to_string(freshHigh));
  for (Id cab : h.reconf.legacy.config.cabinets) {
    o.require(!r.best->actions.del.count({Pred::Cabinet, cab, 0}), "legacy cabinet deleted");
  }
  const OracleResult ref = brute_force_reconfiguration(h.reconf, h.costsB);
  o.require(ref.feasible && ref.cost == 4, "oracle cost " + std::to_string(ref.cost));
  o.require(r.best->cost.total == 4, "cost " + std::to_string(r.best->cost.total));
  o.require(check_reconfiguration(h.reconf, c, r.best->actions).valid, "invalid");
}

void random_equivalence(Outcome& o) {
  const auto t0 = Clock::now();
  std::mt19937 rng(424242);
  int compared = 0, mismatches = 0;
  for (int k = 0; k < 150; ++k) {
    const RandomCase rc = random_case(rng);
    const OracleResult ref = brute_force_reconfiguration(rc.problem, rc.model);
    const SolveResult r = solve_reconfiguration(rc.problem, rc.model);
    bool same;
    if (!ref.feasible) {
      same = r.status == SolveStatus::Infeasible;
    } else {
      same = r.status == SolveStatus::Optimal && r.best->cost.total == ref.cost &&
             check_reconfiguration(rc.problem, r.best->config, r.best->actions).valid;
    }
    if (!same && mismatches++ == 0) std::cerr << "mismatch on\n" << rc.describe;
    ++compared;
  }
  const double took = seconds_since(t0);
  o.require(compared >= 100, "only " + std::to_string(compared) + " instances");
  o.require(mismatches == 0, std::to_string(mismatches) + " mismatches");
  o.require(took < 300, "took " + std::to_string(took) + " s");
}

void mutants_rejected(Outcome& o) {
  const auto all = mutants();
  // Requirements 1-4 and 6-11 plus T1-T5: fifteen checks in all.
  o.require(all.size() == 15, "mutant count " + std::to_string(all.size()));
  for (const Mutant& m : all) {
    const ValidationReport r = m.run();
    o.require(!r.valid && r.has(m.check), "mutant " + m.check + " not caught");
  }
}

struct Bench {
  std::string family;
  int things;
  bool mustProve;
  double proveWithin;
};

void benchmarks(Outcome& o) {
  std::vector<Bench> runs;
  for (int n : {12, 24, 36}) runs.push_back({"newroom", n, true, 600});
  runs.push_back({"swap", 35, true, 600});
  for (int n = 5; n <= 25; n += 5) runs.push_back({"empty", n, true, 600});
  runs.push_back({"long", 15, false, 60});
  for (const Bench& b : runs) {
    const Scenario s = generate(b.family, b.things);
    SolveOptions opt;
    opt.budget.timeLimit = std::chrono::milliseconds(static_cast<long>(b.proveWithin * 1000));
    const SolveResult r = solve_reconfiguration(s.problem, benchmark_costs(), opt);
    const std::string tag = b.family + "(" + std::to_string(b.things) + ")";
    std::cout << "  " << tag << ": " << to_string(r.status) << ", cost "
              << (r.best ? std::to_string(r.best->cost.total) : "-") << ", " << r.elapsedMs << " ms, " << r.nodes
              << " nodes" << std::endl;
    if (b.mustProve) o.require(r.status == SolveStatus::Optimal, tag + " not proven optimal");
    o.require(r.best.has_value(), tag + " has no incumbent");
    o.require(!r.incumbents.empty() && r.incumbents.front().elapsedMs <= 10000, tag + " first incumbent late");
    if (r.best) {
      o.require(check_reconfiguration(s.problem, r.best->config, r.best->actions).valid, tag + " invalid");
    }
  }
}

template <class T, class Parse, class Print>
bool round_trips(const T& value, Parse parse, Print print) {
  const std::string text = facts::serialize(print(value));
  return parse(facts::parse(text)) == value && facts::serialize(print(parse(facts::parse(text)))) == text;
}

void round_trip(Outcome& o) {
  int cases = 0;
  auto instance = [&](const Instance& in) {
    Instance back = instance_from_facts(facts::parse(facts::serialize(to_facts(in))));
    back.cabinet = in.cabinet;
    back.room = in.room;
    o.require(back == in, "instance does not round-trip");
    ++cases;
  };
  auto solution = [&](const ReconfigProblem& p, const Solution& s) {
    o.require(round_trips(s.config, configuration_from_facts, [](const Configuration& c) { return to_facts(c); }),
              "configuration does not round-trip");
    o.require(round_trips(s.actions, actions_from_facts, [](const ActionSet& a) { return to_facts(a); }),
              "actions do not round-trip");
    const Configuration c = configuration_from_facts(facts::parse(facts::serialize(to_facts(s.config))));
    const ActionSet a = actions_from_facts(facts::parse(facts::serialize(to_facts(s.actions))));
    const ValidationReport before = check_reconfiguration(p, s.config, s.actions);
    const ValidationReport after = check_reconfiguration(p, c, a);
    o.require(before.valid == after.valid && before.violations == after.violations, "re-validation disagrees");
    ++cases;
  };

  std::vector<Scenario> scenarios;
  for (int n : {5, 10, 15, 20, 25}) scenarios.push_back(gen_empty(n));
  for (int n : {15, 30}) scenarios.push_back(gen_long(n));
  for (int n : {12, 24, 36}) scenarios.push_back(gen_newroom(n));
  scenarios.push_back(gen_swap());
  for (const Scenario& s : scenarios) {
    instance(s.before);
    instance(s.after);
    o.require(round_trips(s.legacy, legacy_from_facts, [](const LegacyConfiguration& l) { return to_facts(l); }),
              s.name + " legacy does not round-trip");
    ++cases;
    SolveOptions opt;
    opt.budget.timeLimit = std::chrono::seconds(60);
    const SolveResult r = solve_reconfiguration(s.problem, benchmark_costs(), opt);
    if (r.best) solution(s.problem, *r.best);
  }
  const House h = house();
  for (const CostModel* m : {&h.costsA, &h.costsB}) {
    const SolveResult r = solve_reconfiguration(h.reconf, *m);
    if (r.best) solution(h.reconf, *r.best);
  }
  std::mt19937 rng(777);
  for (int k = 0; k < 200; ++k) {
    const RandomCase rc = random_case(rng);
    instance(rc.problem.instance);
    o.require(cost_model_from_facts(facts::parse(facts::serialize(to_facts(rc.model)))).weights == rc.model.weights,
              "cost model does not round-trip");
    SolveOptions opt;
    opt.allOptimal = 4;
    const SolveResult r = solve_reconfiguration(rc.problem, rc.model, opt);
    for (const Solution& s : r.optima) solution(rc.problem, s);
  }
  o.require(cases >= 200, "only " + std::to_string(cases) + " cases");
  std::cout << "  round-trip cases: " << cases << std::endl;
}

}  // namespace

int main() {
  bool ok = true;
  ok &= report(1, "house configuration", house_configuration);
  ok &= report(2, "cheap alteration", scenario_a);
  ok &= report(3, "cheap new cabinets", scenario_b);
  ok &= report(4, "random instances agree with the oracle", random_equivalence);
  ok &= report(5, "validator mutants", mutants_rejected);
  ok &= report(6, "benchmark families", benchmarks);
  ok &= report(7, "parse/serialize round trip", round_trip);
  return ok ? 0 : 1;
}
