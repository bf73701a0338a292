#include "reconf/model.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <tuple>

namespace reconf {

namespace {

constexpr std::array<std::string_view, 12> kPredNames = {
    "person",       "thing",       "personTOthing", "thingLong",
    "thingShort",   "cabinet",     "cabinetSmall",  "cabinetHigh",
    "room",         "cabinetTOthing", "roomTOcabinet", "personTOroom",
};

constexpr Id kNone = std::numeric_limits<Id>::max();

Id ceil_div(Id a, Id b) { return (a + b - 1) / b; }

void add_ids(std::set<Id>& all, const std::set<Id>& ids) { all.insert(ids.begin(), ids.end()); }

}  // namespace

std::string_view pred_name(Pred p) { return kPredNames[static_cast<std::size_t>(p)]; }

std::optional<Pred> pred_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kPredNames.size(); ++i) {
    if (kPredNames[i] == name) return static_cast<Pred>(i);
  }
  return std::nullopt;
}

int pred_arity(Pred p) {
  switch (p) {
    case Pred::PersonToThing:
    case Pred::CabinetToThing:
    case Pred::RoomToCabinet:
    case Pred::PersonToRoom:
      return 2;
    default:
      return 1;
  }
}

std::string to_string(const GroundAtom& atom) {
  std::string s(pred_name(atom.pred));
  s += '(' + std::to_string(atom.a);
  if (pred_arity(atom.pred) == 2) s += ',' + std::to_string(atom.b);
  return s + ')';
}

bool Instance::is_long(Id thing) const {
  auto it = length.find(thing);
  return it != length.end() && it->second == Length::Long;
}

// ---------------------------------------------------------------------------
// Configuration

std::vector<GroundAtom> Configuration::atoms() const {
  std::vector<GroundAtom> out;
  for (Id c : cabinets) out.push_back({Pred::Cabinet, c, 0});
  for (Id c : cabinetSmall) out.push_back({Pred::CabinetSmall, c, 0});
  for (Id c : cabinetHigh) out.push_back({Pred::CabinetHigh, c, 0});
  for (Id r : rooms) out.push_back({Pred::Room, r, 0});
  for (auto [c, t] : cabinetToThing) out.push_back({Pred::CabinetToThing, c, t});
  for (auto [r, c] : roomToCabinet) out.push_back({Pred::RoomToCabinet, r, c});
  for (auto [p, r] : personToRoom) out.push_back({Pred::PersonToRoom, p, r});
  return out;
}

bool Configuration::contains(const GroundAtom& atom) const {
  switch (atom.pred) {
    case Pred::Cabinet: return cabinets.count(atom.a) > 0;
    case Pred::CabinetSmall: return cabinetSmall.count(atom.a) > 0;
    case Pred::CabinetHigh: return cabinetHigh.count(atom.a) > 0;
    case Pred::Room: return rooms.count(atom.a) > 0;
    case Pred::CabinetToThing: return cabinetToThing.count({atom.a, atom.b}) > 0;
    case Pred::RoomToCabinet: return roomToCabinet.count({atom.a, atom.b}) > 0;
    case Pred::PersonToRoom: return personToRoom.count({atom.a, atom.b}) > 0;
    default: return false;
  }
}

bool Configuration::insert(const GroundAtom& atom) {
  switch (atom.pred) {
    case Pred::Cabinet: return cabinets.insert(atom.a).second;
    case Pred::CabinetSmall: return cabinetSmall.insert(atom.a).second;
    case Pred::CabinetHigh: return cabinetHigh.insert(atom.a).second;
    case Pred::Room: return rooms.insert(atom.a).second;
    case Pred::CabinetToThing: return cabinetToThing.insert({atom.a, atom.b}).second;
    case Pred::RoomToCabinet: return roomToCabinet.insert({atom.a, atom.b}).second;
    case Pred::PersonToRoom: return personToRoom.insert({atom.a, atom.b}).second;
    default: return false;
  }
}

bool Configuration::erase(const GroundAtom& atom) {
  switch (atom.pred) {
    case Pred::Cabinet: return cabinets.erase(atom.a) > 0;
    case Pred::CabinetSmall: return cabinetSmall.erase(atom.a) > 0;
    case Pred::CabinetHigh: return cabinetHigh.erase(atom.a) > 0;
    case Pred::Room: return rooms.erase(atom.a) > 0;
    case Pred::CabinetToThing: return cabinetToThing.erase({atom.a, atom.b}) > 0;
    case Pred::RoomToCabinet: return roomToCabinet.erase({atom.a, atom.b}) > 0;
    case Pred::PersonToRoom: return personToRoom.erase({atom.a, atom.b}) > 0;
    default: return false;
  }
}

std::optional<Height> Configuration::height(Id cabinet) const {
  if (cabinetHigh.count(cabinet)) return Height::High;
  if (cabinetSmall.count(cabinet)) return Height::Small;
  return std::nullopt;
}

std::vector<GroundAtom> LegacyConfiguration::atoms() const {
  std::vector<GroundAtom> out;
  for (Id p : persons) out.push_back({Pred::Person, p, 0});
  for (Id t : things) out.push_back({Pred::Thing, t, 0});
  for (auto [p, t] : personToThing) out.push_back({Pred::PersonToThing, p, t});
  for (const GroundAtom& a : config.atoms()) {
    if (a.pred != Pred::CabinetSmall && a.pred != Pred::CabinetHigh) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Bounds

Instance derive_bounds(Instance in, const LegacyConfiguration* legacy) {
  std::set<Id> all;
  add_ids(all, in.persons);
  add_ids(all, in.things);
  if (legacy) {
    add_ids(all, legacy->persons);
    add_ids(all, legacy->things);
    add_ids(all, legacy->config.cabinets);
    add_ids(all, legacy->config.rooms);
  }
  const Id maxId = all.empty() ? 0 : *all.rbegin();

  std::map<Id, Id> owned;
  for (auto [thing, person] : in.owner) ++owned[person];

  TypeBounds cab;
  cab.upper = static_cast<int>(in.things.size());
  cab.lower = 0;
  for (auto [person, n] : owned) cab.lower += static_cast<int>(ceil_div(n, in.cabinetThingCapacity));
  cab.offset = maxId;
  const auto& co = in.cabinetOverride;
  if (co.lower) cab.lower = *co.lower;
  if (co.upper) cab.upper = *co.upper;
  if (co.offset) cab.offset = *co.offset;
  cab.newOffset = co.newOffset.value_or(cab.offset);

  TypeBounds room;
  room.upper = cab.upper;
  room.lower = static_cast<int>(owned.size());
  room.offset = cab.newOffset + cab.upper;
  const auto& ro = in.roomOverride;
  if (ro.lower) room.lower = *ro.lower;
  if (ro.upper) room.upper = *ro.upper;
  if (ro.offset) room.offset = *ro.offset;
  room.newOffset = ro.newOffset.value_or(room.offset);

  in.cabinet = cab;
  in.room = room;
  return in;
}

void check_instance(const Instance& in, const LegacyConfiguration* legacy) {
  for (Id t : in.things) {
    auto it = in.owner.find(t);
    if (it == in.owner.end()) throw ConfigError("thing " + std::to_string(t) + " has no owner");
    if (!in.persons.count(it->second)) {
      throw ConfigError("thing " + std::to_string(t) + " is owned by unknown person " +
                        std::to_string(it->second));
    }
  }
  for (auto [t, p] : in.owner) {
    if (!in.things.count(t)) throw ConfigError("ownership of unknown thing " + std::to_string(t));
  }
  for (auto [t, len] : in.length) {
    if (!in.things.count(t)) throw ConfigError("length given for unknown thing " + std::to_string(t));
  }
  for (const TypeBounds* b : {&in.cabinet, &in.room}) {
    if (b->lower > b->upper || b->lower < 0) {
      throw ConfigError("bounded type has lower bound " + std::to_string(b->lower) +
                        " above upper bound " + std::to_string(b->upper));
    }
  }

  // Every id may belong to one namespace only.
  std::map<Id, std::string> owner_of;
  auto claim = [&owner_of](Id id, const std::string& space) {
    auto [it, fresh] = owner_of.emplace(id, space);
    if (!fresh && it->second != space) {
      throw ConfigError("identifier " + std::to_string(id) + " used both as " + it->second +
                        " and as " + space);
    }
  };
  for (Id p : in.persons) claim(p, "person");
  for (Id t : in.things) claim(t, "thing");
  if (legacy) {
    for (Id p : legacy->persons) claim(p, "person");
    for (Id t : legacy->things) claim(t, "thing");
    for (Id c : legacy->config.cabinets) claim(c, "cabinet");
    for (Id r : legacy->config.rooms) claim(r, "room");
  }
  for (Id c = in.cabinet.first_new(); c <= in.cabinet.last_new(); ++c) claim(c, "cabinet");
  for (Id r = in.room.first_new(); r <= in.room.last_new(); ++r) claim(r, "room");
}

std::vector<GroundAtom> instance_atoms(const Instance& in) {
  std::vector<GroundAtom> out;
  for (Id p : in.persons) out.push_back({Pred::Person, p, 0});
  for (Id t : in.things) out.push_back({Pred::Thing, t, 0});
  for (auto [t, p] : in.owner) out.push_back({Pred::PersonToThing, p, t});
  std::sort(out.begin(), out.end());
  return out;
}

TransformPolicy make_policy(const Instance& in, const LegacyConfiguration& legacy,
                            bool allowHeightChange) {
  TransformPolicy policy;
  policy.allowHeightChange = allowHeightChange;
  const std::vector<GroundAtom> required = instance_atoms(in);
  for (const GroundAtom& a : legacy.atoms()) {
    if (std::binary_search(required.begin(), required.end(), a)) policy.forcedReuse.insert(a);
  }
  return policy;
}

ReconfigProblem make_problem(Instance instance, LegacyConfiguration legacy, bool allowHeightChange) {
  const Configuration& lc = legacy.config;
  for (auto [c, t] : lc.cabinetToThing) {
    if (!lc.cabinets.count(c)) {
      throw ConfigError("legacy cabinetTOthing refers to unknown cabinet " + std::to_string(c));
    }
  }
  for (auto [r, c] : lc.roomToCabinet) {
    if (!lc.rooms.count(r) || !lc.cabinets.count(c)) {
      throw ConfigError("legacy roomTOcabinet(" + std::to_string(r) + "," + std::to_string(c) +
                        ") refers to an unknown individual");
    }
  }
  for (auto [p, r] : lc.personToRoom) {
    if (!lc.rooms.count(r)) {
      throw ConfigError("legacy personTOroom refers to unknown room " + std::to_string(r));
    }
  }
  // Legacy cabinets are small unless stated otherwise.
  for (Id c : lc.cabinets) {
    if (!lc.cabinetHigh.count(c)) legacy.config.cabinetSmall.insert(c);
  }

  ReconfigProblem problem;
  problem.instance = derive_bounds(std::move(instance), &legacy);
  check_instance(problem.instance, &legacy);
  problem.policy = make_policy(problem.instance, legacy, allowHeightChange);
  problem.legacy = std::move(legacy);
  return problem;
}

ActionSet make_actions(const ReconfigProblem& problem, const Configuration& config) {
  const std::vector<GroundAtom> legacy = problem.legacy.atoms();
  std::set<GroundAtom> present;
  for (const GroundAtom& a : config.atoms()) present.insert(a);
  for (const GroundAtom& a : instance_atoms(problem.instance)) present.insert(a);

  ActionSet actions;
  for (const GroundAtom& a : legacy) {
    if (present.count(a)) {
      actions.reuse.insert(a);
    } else {
      actions.del.insert(a);
    }
  }
  for (const GroundAtom& a : config.atoms()) {
    if (std::binary_search(legacy.begin(), legacy.end(), a)) continue;
    const bool height = a.pred == Pred::CabinetSmall || a.pred == Pred::CabinetHigh;
    if (height && actions.reuse.count({Pred::Cabinet, a.a, 0})) continue;
    actions.create.insert(a);
  }
  return actions;
}

// ---------------------------------------------------------------------------
// Canonical renaming of fresh individuals

Configuration rename(const Configuration& config, const std::map<Id, Id>& cabinets,
                     const std::map<Id, Id>& rooms) {
  auto cab = [&cabinets](Id id) {
    auto it = cabinets.find(id);
    return it == cabinets.end() ? id : it->second;
  };
  auto rm = [&rooms](Id id) {
    auto it = rooms.find(id);
    return it == rooms.end() ? id : it->second;
  };
  Configuration out;
  for (Id c : config.cabinets) out.cabinets.insert(cab(c));
  for (Id c : config.cabinetSmall) out.cabinetSmall.insert(cab(c));
  for (Id c : config.cabinetHigh) out.cabinetHigh.insert(cab(c));
  for (Id r : config.rooms) out.rooms.insert(rm(r));
  for (auto [c, t] : config.cabinetToThing) out.cabinetToThing.insert({cab(c), t});
  for (auto [r, c] : config.roomToCabinet) out.roomToCabinet.insert({rm(r), cab(c)});
  for (auto [p, r] : config.personToRoom) out.personToRoom.insert({p, rm(r)});
  return out;
}

Configuration canonicalize(const Configuration& config, const Instance& instance) {
  std::set<Id> cabinets = config.cabinets;
  for (Id c : config.cabinetSmall) cabinets.insert(c);
  for (Id c : config.cabinetHigh) cabinets.insert(c);
  for (auto [c, t] : config.cabinetToThing) cabinets.insert(c);
  for (auto [r, c] : config.roomToCabinet) cabinets.insert(c);
  std::set<Id> rooms = config.rooms;
  for (auto [r, c] : config.roomToCabinet) rooms.insert(r);
  for (auto [p, r] : config.personToRoom) rooms.insert(r);

  std::map<Id, Id> minThing;  // cabinet -> smallest thing inside
  for (auto [c, t] : config.cabinetToThing) {
    auto [it, fresh] = minThing.emplace(c, t);
    if (!fresh) it->second = std::min(it->second, t);
  }
  std::map<Id, Id> roomOf;  // cabinet -> room (first listed)
  for (auto [r, c] : config.roomToCabinet) roomOf.emplace(c, r);
  std::map<Id, Id> ownerOf;  // room -> person (first listed)
  for (auto [p, r] : config.personToRoom) ownerOf.emplace(r, p);
  std::map<Id, Id> roomThing;  // room -> smallest thing stored in it
  for (auto [r, c] : config.roomToCabinet) {
    auto it = minThing.find(c);
    if (it == minThing.end()) continue;
    auto [rt, fresh] = roomThing.emplace(r, it->second);
    if (!fresh) rt->second = std::min(rt->second, it->second);
  }
  auto lookup = [](const std::map<Id, Id>& m, Id k) {
    auto it = m.find(k);
    return it == m.end() ? kNone : it->second;
  };

  using CabKey = std::tuple<Id, Id, int, Id, Id>;
  std::vector<std::pair<CabKey, Id>> freshCabinets;
  for (Id c : cabinets) {
    if (!instance.cabinet.is_new(c)) continue;
    const Id r = lookup(roomOf, c);
    Id roomKey = kNone;
    if (r != kNone) roomKey = instance.room.is_new(r) ? lookup(roomThing, r) : r;
    const auto h = config.height(c);
    const int heightKey = h ? static_cast<int>(*h) : 2;
    freshCabinets.push_back({{lookup(minThing, c), roomKey, heightKey, r == kNone ? kNone : lookup(ownerOf, r), c}, c});
  }
  std::sort(freshCabinets.begin(), freshCabinets.end());
  std::map<Id, Id> cabMap;
  Id next = instance.cabinet.first_new();
  for (const auto& [key, c] : freshCabinets) cabMap[c] = next++;

  std::map<Id, Id> minCabinet;  // room -> smallest (renamed) cabinet
  for (auto [r, c] : config.roomToCabinet) {
    auto it = cabMap.find(c);
    const Id renamed = it == cabMap.end() ? c : it->second;
    auto [mc, fresh] = minCabinet.emplace(r, renamed);
    if (!fresh) mc->second = std::min(mc->second, renamed);
  }
  using RoomKey = std::tuple<Id, Id, Id, Id>;
  std::vector<std::pair<RoomKey, Id>> freshRooms;
  for (Id r : rooms) {
    if (!instance.room.is_new(r)) continue;
    freshRooms.push_back({{lookup(roomThing, r), lookup(minCabinet, r), lookup(ownerOf, r), r}, r});
  }
  std::sort(freshRooms.begin(), freshRooms.end());
  std::map<Id, Id> roomMap;
  next = instance.room.first_new();
  for (const auto& [key, r] : freshRooms) roomMap[r] = next++;

  return rename(config, cabMap, roomMap);
}

}  // namespace reconf
