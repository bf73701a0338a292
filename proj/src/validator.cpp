#include "reconf/validator.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace reconf {

namespace {

GroundAtom cab_atom(Id c) { return {Pred::Cabinet, c, 0}; }
GroundAtom room_atom(Id r) { return {Pred::Room, r, 0}; }
GroundAtom ctt(Id c, Id t) { return {Pred::CabinetToThing, c, t}; }
GroundAtom rtc(Id r, Id c) { return {Pred::RoomToCabinet, r, c}; }
GroundAtom ptr(Id p, Id r) { return {Pred::PersonToRoom, p, r}; }

std::string id(Id v) { return std::to_string(v); }

void check_bounds(ValidationReport& report, const char* type, const std::set<Id>& ids,
                  const TypeBounds& bounds, const std::set<Id>& legacyIds, Pred pred) {
  const int n = static_cast<int>(ids.size());
  if (n < bounds.lower || n > bounds.upper) {
    std::vector<GroundAtom> atoms;
    for (Id x : ids) atoms.push_back({pred, x, 0});
    report.add("B1", std::move(atoms),
               std::string(type) + " count " + id(n) + " outside [" + id(bounds.lower) + "," +
                   id(bounds.upper) + "]");
  }
  for (Id x : ids) {
    if (!bounds.is_new(x) && !legacyIds.count(x)) {
      report.add("B2", {{pred, x, 0}}, std::string(type) + " " + id(x) + " is outside its domain");
    }
  }
}

}  // namespace

bool ValidationReport::has(std::string_view check) const {
  return std::any_of(violations.begin(), violations.end(),
                     [check](const Violation& v) { return v.check == check; });
}

void ValidationReport::add(std::string check, std::vector<GroundAtom> atoms, std::string message) {
  valid = false;
  violations.push_back({std::move(check), std::move(atoms), std::move(message)});
}

ValidationReport check_configuration(const Instance& in, const Configuration& config,
                                     const LegacyConfiguration* legacy) {
  ValidationReport report;
  const bool heights = in.heights_in_play();

  // S1: every referenced individual exists.
  for (auto [c, t] : config.cabinetToThing) {
    if (!config.cabinets.count(c) || !in.things.count(t)) {
      report.add("S1", {ctt(c, t)}, "cabinetTOthing refers to a missing cabinet or thing");
    }
  }
  for (auto [r, c] : config.roomToCabinet) {
    if (!config.rooms.count(r) || !config.cabinets.count(c)) {
      report.add("S1", {rtc(r, c)}, "roomTOcabinet refers to a missing room or cabinet");
    }
  }
  for (auto [p, r] : config.personToRoom) {
    if (!in.persons.count(p) || !config.rooms.count(r)) {
      report.add("S1", {ptr(p, r)}, "personTOroom refers to a missing person or room");
    }
  }
  for (const auto* hs : {&config.cabinetSmall, &config.cabinetHigh}) {
    for (Id c : *hs) {
      if (!config.cabinets.count(c)) {
        report.add("S1", {{hs == &config.cabinetHigh ? Pred::CabinetHigh : Pred::CabinetSmall, c, 0}},
                   "height given for a missing cabinet");
      }
    }
  }

  std::map<Id, std::vector<Id>> cabinetsOfThing, thingsOfCabinet, roomsOfCabinet, cabinetsOfRoom,
      ownersOfRoom;
  for (auto [c, t] : config.cabinetToThing) {
    cabinetsOfThing[t].push_back(c);
    thingsOfCabinet[c].push_back(t);
  }
  for (auto [r, c] : config.roomToCabinet) {
    roomsOfCabinet[c].push_back(r);
    cabinetsOfRoom[r].push_back(c);
  }
  for (auto [p, r] : config.personToRoom) ownersOfRoom[r].push_back(p);

  // C1: each thing is stored in exactly one cabinet.
  for (Id t : in.things) {
    const auto& cs = cabinetsOfThing[t];
    if (cs.size() != 1) {
      std::vector<GroundAtom> atoms{{Pred::Thing, t, 0}};
      for (Id c : cs) atoms.push_back(ctt(c, t));
      report.add("C1", std::move(atoms),
                 "thing " + id(t) + (cs.empty() ? " is not stored in any cabinet" : " is stored in several cabinets"));
    }
  }
  // C2: a cabinet contains at most 5 things.
  for (const auto& [c, ts] : thingsOfCabinet) {
    if (static_cast<int>(ts.size()) > in.cabinetThingCapacity) {
      std::vector<GroundAtom> atoms;
      for (Id t : ts) atoms.push_back(ctt(c, t));
      report.add("C2", std::move(atoms), "cabinet " + id(c) + " holds " + id(ts.size()) + " things");
    }
  }
  // C3: every cabinet is placed in exactly one room.
  for (Id c : config.cabinets) {
    const auto& rs = roomsOfCabinet[c];
    if (rs.size() != 1) {
      std::vector<GroundAtom> atoms{cab_atom(c)};
      for (Id r : rs) atoms.push_back(rtc(r, c));
      report.add("C3", std::move(atoms),
                 "cabinet " + id(c) + (rs.empty() ? " is not placed in a room" : " is placed in several rooms"));
    }
  }
  // C4 / C10: room capacity, in cabinets or in slots once heights exist.
  for (const auto& [r, cs] : cabinetsOfRoom) {
    std::vector<GroundAtom> atoms;
    for (Id c : cs) atoms.push_back(rtc(r, c));
    if (!heights) {
      if (static_cast<int>(cs.size()) > in.roomSlotCapacity) {
        report.add("C4", std::move(atoms), "room " + id(r) + " contains " + id(cs.size()) + " cabinets");
      }
      continue;
    }
    int slots = 0;
    for (Id c : cs) slots += config.cabinetHigh.count(c) ? in.highSlots : in.smallSlots;
    if (slots > in.roomSlotCapacity) {
      report.add("C10", std::move(atoms), "room " + id(r) + " needs " + id(slots) + " slots");
    }
  }
  // C6: each room belongs to exactly one person.
  for (Id r : config.rooms) {
    const auto& ps = ownersOfRoom[r];
    if (ps.size() != 1) {
      std::vector<GroundAtom> atoms{room_atom(r)};
      for (Id p : ps) atoms.push_back(ptr(p, r));
      report.add("C6", std::move(atoms),
                 "room " + id(r) + (ps.empty() ? " has no owner" : " has several owners"));
    }
  }
  // C7: a room only contains cabinets storing things of its owner.
  for (const auto& [r, cs] : cabinetsOfRoom) {
    for (Id c : cs) {
      for (Id t : thingsOfCabinet[c]) {
        auto owner = in.owner.find(t);
        if (owner == in.owner.end()) continue;
        if (!config.personToRoom.count({owner->second, r})) {
          std::vector<GroundAtom> atoms{ctt(c, t), rtc(r, c)};
          for (Id p : ownersOfRoom[r]) atoms.push_back(ptr(p, r));
          report.add("C7", std::move(atoms),
                     "thing " + id(t) + " of person " + id(owner->second) + " is stored in room " + id(r) +
                         " which the person does not own");
        }
      }
    }
  }
  if (heights) {
    // C8: a cabinet is either small or high.
    for (Id c : config.cabinets) {
      const bool small = config.cabinetSmall.count(c) > 0;
      const bool high = config.cabinetHigh.count(c) > 0;
      if (small == high) {
        std::vector<GroundAtom> atoms{cab_atom(c)};
        if (small) atoms.push_back({Pred::CabinetSmall, c, 0});
        if (high) atoms.push_back({Pred::CabinetHigh, c, 0});
        report.add("C8", std::move(atoms),
                   "cabinet " + id(c) + (small ? " is both small and high" : " has no height"));
      }
    }
    // C9: long things only go into high cabinets.
    for (auto [c, t] : config.cabinetToThing) {
      if (in.is_long(t) && !config.cabinetHigh.count(c)) {
        report.add("C9", {ctt(c, t), {Pred::ThingLong, t, 0}},
                   "long thing " + id(t) + " is stored in cabinet " + id(c) + " which is not high");
      }
    }
  }

  std::set<Id> legacyCabinets, legacyRooms;
  if (legacy) {
    legacyCabinets = legacy->config.cabinets;
    legacyRooms = legacy->config.rooms;
  }
  check_bounds(report, "cabinet", config.cabinets, in.cabinet, legacyCabinets, Pred::Cabinet);
  check_bounds(report, "room", config.rooms, in.room, legacyRooms, Pred::Room);
  return report;
}

ValidationReport check_legacy(const LegacyConfiguration& legacy) {
  ValidationReport report;
  for (Id c : legacy.config.cabinetHigh) {
    report.add("C11", {{Pred::CabinetHigh, c, 0}}, "legacy cabinet " + id(c) + " is not small");
  }
  return report;
}

ValidationReport check_reconfiguration(const ReconfigProblem& problem, const Configuration& config,
                                       const ActionSet& actions) {
  const std::vector<GroundAtom> legacyAtoms = problem.legacy.atoms();
  const std::set<GroundAtom> legacy(legacyAtoms.begin(), legacyAtoms.end());
  for (const GroundAtom& a : legacy) {
    if (!actions.reuse.count(a) && !actions.del.count(a)) {
      throw PreconditionError("action set does not cover legacy atom " + to_string(a));
    }
  }

  ValidationReport report = check_legacy(problem.legacy);

  std::set<GroundAtom> present;
  for (const GroundAtom& a : config.atoms()) present.insert(a);
  for (const GroundAtom& a : instance_atoms(problem.instance)) present.insert(a);

  // T1: reuse and delete partition the legacy atoms; only new atoms are created.
  for (const GroundAtom& a : actions.reuse) {
    if (actions.del.count(a)) report.add("T1", {a}, to_string(a) + " is both reused and deleted");
    if (!legacy.count(a)) report.add("T1", {a}, to_string(a) + " is reused but not a legacy atom");
  }
  for (const GroundAtom& a : actions.del) {
    if (!legacy.count(a)) report.add("T1", {a}, to_string(a) + " is deleted but not a legacy atom");
  }
  for (const GroundAtom& a : actions.create) {
    if (legacy.count(a)) report.add("T1", {a}, to_string(a) + " is created but is a legacy atom");
  }
  for (const GroundAtom& a : config.atoms()) {
    if (legacy.count(a) || actions.create.count(a)) continue;
    const bool height = a.pred == Pred::CabinetSmall || a.pred == Pred::CabinetHigh;
    if (height && actions.reuse.count(cab_atom(a.a))) continue;
    report.add("T1", {a}, to_string(a) + " is neither reused nor created");
  }
  for (const GroundAtom& a : actions.create) {
    if (!present.count(a)) report.add("T1", {a}, to_string(a) + " is created but not in the configuration");
  }

  // T2: reuse(a) implies a; T3: delete(a) excludes a.
  for (const GroundAtom& a : actions.reuse) {
    if (!present.count(a)) report.add("T2", {a}, to_string(a) + " is reused but missing from the configuration");
    if (a.pred == Pred::Cabinet && !problem.policy.allowHeightChange &&
        config.cabinetHigh.count(a.a) && !problem.legacy.config.cabinetHigh.count(a.a)) {
      report.add("T2", {a, {Pred::CabinetHigh, a.a, 0}},
                 "cabinet " + id(a.a) + " changes height but alteration is not permitted");
    }
  }
  for (const GroundAtom& a : actions.del) {
    if (present.count(a)) report.add("T3", {a}, to_string(a) + " is deleted but still in the configuration");
  }
  // T4: persons, things and ownership still required must be reused.
  for (const GroundAtom& a : problem.policy.forcedReuse) {
    if (!actions.reuse.count(a)) report.add("T4", {a}, to_string(a) + " is required and must be reused");
  }
  // T5: a reused relation keeps its endpoint individuals.
  auto endpoints = [](const GroundAtom& a) -> std::vector<GroundAtom> {
    switch (a.pred) {
      case Pred::PersonToThing: return {{Pred::Person, a.a, 0}, {Pred::Thing, a.b, 0}};
      case Pred::CabinetToThing: return {cab_atom(a.a), {Pred::Thing, a.b, 0}};
      case Pred::RoomToCabinet: return {room_atom(a.a), cab_atom(a.b)};
      case Pred::PersonToRoom: return {{Pred::Person, a.a, 0}, room_atom(a.b)};
      default: return {};
    }
  };
  for (const GroundAtom& a : actions.reuse) {
    for (const GroundAtom& end : endpoints(a)) {
      if (actions.del.count(end)) {
        report.add("T5", {a, end}, to_string(a) + " is reused but " + to_string(end) + " is deleted");
      }
    }
  }

  ValidationReport base = check_configuration(problem.instance, config, &problem.legacy);
  for (Violation& v : base.violations) report.add(std::move(v.check), std::move(v.atoms), std::move(v.message));
  return report;
}

std::string to_text(const ValidationReport& report) {
  std::ostringstream os;
  for (const Violation& v : report.violations) {
    os << v.check << '\t';
    for (std::size_t i = 0; i < v.atoms.size(); ++i) os << (i ? " " : "") << to_string(v.atoms[i]);
    os << '\t' << v.message << '\n';
  }
  return os.str();
}

}  // namespace reconf
