#include "reconf/search.hpp"

#include <algorithm>
#include <limits>

namespace reconf {

namespace {

int ceil_div(int a, int b) { return a <= 0 ? 0 : (a + b - 1) / b; }

template <typename T>
int index_of(const std::vector<T>& v, const T& x) {
  auto it = std::lower_bound(v.begin(), v.end(), x);
  return it != v.end() && *it == x ? static_cast<int>(it - v.begin()) : -1;
}

}  // namespace

SearchSpace::SearchSpace(const ReconfigProblem& problem, const CostModel& model)
    : problem_(&problem), model_(&model) {
  const Instance& in = problem.instance;
  const LegacyConfiguration& legacy = problem.legacy;
  heights_ = in.heights_in_play();
  allowHeightChange_ = problem.policy.allowHeightChange;

  persons_.assign(in.persons.begin(), in.persons.end());
  cabinetIds_.assign(legacy.config.cabinets.begin(), legacy.config.cabinets.end());
  legacyCabinets_ = static_cast<int>(cabinetIds_.size());
  for (Id c = in.cabinet.first_new(); c <= in.cabinet.last_new(); ++c) cabinetIds_.push_back(c);
  roomIds_.assign(legacy.config.rooms.begin(), legacy.config.rooms.end());
  legacyRooms_ = static_cast<int>(roomIds_.size());
  for (Id r = in.room.first_new(); r <= in.room.last_new(); ++r) roomIds_.push_back(r);

  for (Id t : in.things) {
    ThingInfo info;
    info.id = t;
    info.owner = index_of(persons_, in.owner.at(t));
    info.isLong = in.is_long(t);
    things_.push_back(info);
  }

  cCab_ = model.weight("cabinetCost");
  cSmall_ = model.weight("cabinetSmallCost");
  cHigh_ = model.weight("cabinetHighCost");
  cRoom_ = model.weight("roomCost");
  cCtt_ = model.weight("cabinetTOthingCost");
  cRtc_ = model.weight("roomTOcabinetCost");
  cPtr_ = model.weight("personTOroomCost");
  rSmall_ = model.weight("reuseCabinetAsSmallCost");
  rHigh_ = model.weight("reuseCabinetAsHighCost");
  rRoom_ = model.weight("reuseRoomCost");
  rCtt_ = model.weight("reuseCabinetTOthingCost");
  rRtc_ = model.weight("reuseRoomTOcabinetCost");
  rPtr_ = model.weight("reusePersonTOroomCost");
  dCab_ = model.weight("deleteCabinetCost");
  dRoom_ = model.weight("deleteRoomCost");
  dCtt_ = model.weight("deleteCabinetTOthingCost");
  dRtc_ = model.weight("deleteRoomTOcabinetCost");
  dPtr_ = model.weight("deletePersonTOroomCost");

  legacyThingsOfCabinet_.assign(cabinetIds_.size(), {});
  for (auto [c, t] : legacy.config.cabinetToThing) {
    const int ci = cabinet_index(c);
    const int ti = thing_index(t);
    if (ti < 0) {
      constant_ += dCtt_;  // the thing is gone, so is the relation
      continue;
    }
    things_[ti].legacyCabinets.push_back(ci);
    legacyThingsOfCabinet_[ci].push_back(ti);
  }
  legacyRoomsOfCabinet_.assign(cabinetIds_.size(), {});
  for (auto [r, c] : legacy.config.roomToCabinet) {
    legacyRoomsOfCabinet_[cabinet_index(c)].push_back(room_index(r));
  }
  legacyOwnersOfRoom_.assign(roomIds_.size(), {});
  for (auto [p, r] : legacy.config.personToRoom) {
    legacyOwnersOfRoom_[room_index(r)].push_back(person_index(p));
  }

  std::vector<GroundAtom> required = instance_atoms(in);
  std::sort(required.begin(), required.end());
  for (const GroundAtom& a : legacy.atoms()) {
    if (a.pred != Pred::Person && a.pred != Pred::Thing && a.pred != Pred::PersonToThing) continue;
    constant_ += std::binary_search(required.begin(), required.end(), a) ? model.reuse_weight(a)
                                                                         : model.delete_weight(a);
  }
}

int SearchSpace::cabinet_index(Id id) const {
  auto it = std::find(cabinetIds_.begin(), cabinetIds_.end(), id);
  return it == cabinetIds_.end() ? -1 : static_cast<int>(it - cabinetIds_.begin());
}

int SearchSpace::room_index(Id id) const {
  auto it = std::find(roomIds_.begin(), roomIds_.end(), id);
  return it == roomIds_.end() ? -1 : static_cast<int>(it - roomIds_.begin());
}

int SearchSpace::thing_index(Id id) const {
  auto it = std::lower_bound(things_.begin(), things_.end(), id,
                             [](const ThingInfo& t, Id v) { return t.id < v; });
  return it != things_.end() && it->id == id ? static_cast<int>(it - things_.begin()) : -1;
}

int SearchSpace::person_index(Id id) const { return index_of(persons_, id); }

PartialAssignment SearchSpace::root() const {
  PartialAssignment pa;
  pa.thingCabinet.assign(things_.size(), -1);
  pa.cabinets.assign(cabinetIds_.size(), {});
  pa.rooms.assign(roomIds_.size(), {});
  if (!heights_) {
    for (CabinetState& c : pa.cabinets) c.height = HeightChoice::None;
  }
  return pa;
}

bool SearchSpace::cabinet_present(const PartialAssignment& pa, int c) const {
  if (is_legacy_cabinet(c)) return pa.cabinets[c].fate == Fate::Kept || pa.cabinets[c].count > 0;
  return c - legacyCabinets_ < pa.openCabinets;
}

bool SearchSpace::room_present(const PartialAssignment& pa, int r) const {
  if (is_legacy_room(r)) return pa.rooms[r].fate == Fate::Kept || pa.rooms[r].cabinets > 0;
  return r - legacyRooms_ < pa.openRooms;
}

int SearchSpace::present_cabinets(const PartialAssignment& pa) const {
  int n = pa.openCabinets;
  for (int c = 0; c < legacyCabinets_; ++c) n += cabinet_present(pa, c) ? 1 : 0;
  return n;
}

int SearchSpace::present_rooms(const PartialAssignment& pa) const {
  int n = pa.openRooms;
  for (int r = 0; r < legacyRooms_; ++r) n += room_present(pa, r) ? 1 : 0;
  return n;
}

int SearchSpace::cabinet_owner(const PartialAssignment& pa, int c) const {
  const CabinetState& cs = pa.cabinets[c];
  if (cs.owner >= 0) return cs.owner;
  if (cs.room >= 0) return pa.rooms[cs.room].owner;
  return -1;
}

int SearchSpace::cabinet_slots(const PartialAssignment& pa, int c) const {
  const Instance& in = problem_->instance;
  switch (pa.cabinets[c].height) {
    case HeightChoice::None: return 1;
    case HeightChoice::High: return in.highSlots;
    case HeightChoice::Small: return in.smallSlots;
    case HeightChoice::Unset: return pa.cabinets[c].hasLong ? in.highSlots : in.smallSlots;
  }
  return 1;
}

bool SearchSpace::can_be_high(int c) const {
  return heights_ && (!is_legacy_cabinet(c) || allowHeightChange_);
}

void SearchSpace::place(PartialAssignment& pa, int thing, int cabinet) const {
  CabinetState& cs = pa.cabinets[cabinet];
  const int before = cs.room >= 0 ? cabinet_slots(pa, cabinet) : 0;
  pa.thingCabinet[thing] = cabinet;
  ++cs.count;
  cs.owner = things_[thing].owner;
  cs.hasLong = cs.hasLong || (heights_ && things_[thing].isLong);
  cs.fate = Fate::Kept;
  if (!is_legacy_cabinet(cabinet) && cabinet - legacyCabinets_ == pa.openCabinets) ++pa.openCabinets;
  if (cs.room >= 0) {
    pa.rooms[cs.room].slots += cabinet_slots(pa, cabinet) - before;
    if (pa.rooms[cs.room].owner < 0) pa.rooms[cs.room].owner = cs.owner;
  }
}

void SearchSpace::decide_cabinet(PartialAssignment& pa, int cabinet, Fate fate, HeightChoice height) const {
  CabinetState& cs = pa.cabinets[cabinet];
  const int before = cs.room >= 0 ? cabinet_slots(pa, cabinet) : 0;
  cs.fate = fate;
  if (fate == Fate::Kept) cs.height = height;
  if (fate == Fate::Kept && !is_legacy_cabinet(cabinet) && cabinet - legacyCabinets_ == pa.openCabinets) {
    ++pa.openCabinets;
  }
  if (cs.room >= 0) pa.rooms[cs.room].slots += cabinet_slots(pa, cabinet) - before;
}

void SearchSpace::assign_room(PartialAssignment& pa, int cabinet, int room) const {
  CabinetState& cs = pa.cabinets[cabinet];
  RoomState& rs = pa.rooms[room];
  cs.room = room;
  rs.slots += cabinet_slots(pa, cabinet);
  ++rs.cabinets;
  rs.fate = Fate::Kept;
  if (rs.owner < 0 && cs.owner >= 0) rs.owner = cs.owner;
  if (!is_legacy_room(room) && room - legacyRooms_ == pa.openRooms) ++pa.openRooms;
}

void SearchSpace::decide_room(PartialAssignment& pa, int room, Fate fate, int owner) const {
  RoomState& rs = pa.rooms[room];
  rs.fate = fate;
  if (fate == Fate::Kept) {
    rs.owner = owner;
    if (!is_legacy_room(room) && room - legacyRooms_ == pa.openRooms) ++pa.openRooms;
  }
}

Domains SearchSpace::propagate(const PartialAssignment& pa) const {
  const Instance& in = problem_->instance;
  Domains d;
  d.thingCabinets.assign(things_.size(), {});
  d.cabinetRooms.assign(cabinetIds_.size(), {});

  const int cabinetLimit = std::min<int>(cabinet_count(), legacyCabinets_ + pa.openCabinets + 1);
  const bool mayOpenCabinet = present_cabinets(pa) < in.cabinet.upper;
  for (int t = 0; t < thing_count(); ++t) {
    if (pa.thingCabinet[t] >= 0) continue;
    const ThingInfo& info = things_[t];
    const bool longThing = heights_ && info.isLong;
    for (int c = 0; c < cabinetLimit; ++c) {
      const CabinetState& cs = pa.cabinets[c];
      const bool present = cabinet_present(pa, c);
      if (!present) {
        if (!mayOpenCabinet) continue;
        if (cs.fate == Fate::Deleted) continue;
      }
      if (cs.count >= in.cabinetThingCapacity) continue;
      const int owner = cabinet_owner(pa, c);
      if (owner >= 0 && owner != info.owner) continue;
      if (longThing) {
        if (cs.height == HeightChoice::Small || !can_be_high(c)) continue;
        // Growing from one slot to two must still fit the room.
        if (cs.room >= 0 && cabinet_slots(pa, c) < in.highSlots &&
            pa.rooms[cs.room].slots + in.highSlots - cabinet_slots(pa, c) > in.roomSlotCapacity) {
          continue;
        }
      }
      d.thingCabinets[t].push_back(c);
    }
    if (d.thingCabinets[t].empty()) d.conflict = true;
  }

  const int roomLimit = std::min<int>(room_count(), legacyRooms_ + pa.openRooms + 1);
  const bool mayOpenRoom = present_rooms(pa) < in.room.upper;
  for (int c = 0; c < cabinet_count(); ++c) {
    if (!cabinet_present(pa, c) || pa.cabinets[c].room >= 0) continue;
    const int owner = cabinet_owner(pa, c);
    const int slots = cabinet_slots(pa, c);
    for (int r = 0; r < roomLimit; ++r) {
      const RoomState& rs = pa.rooms[r];
      if (!room_present(pa, r)) {
        if (!mayOpenRoom || rs.fate == Fate::Deleted) continue;
      }
      if (owner >= 0 && rs.owner >= 0 && owner != rs.owner) continue;
      if (heights_) {
        if (rs.slots + slots > in.roomSlotCapacity) continue;
      } else if (rs.cabinets + 1 > in.roomSlotCapacity) {
        continue;
      }
      d.cabinetRooms[c].push_back(r);
    }
    if (d.cabinetRooms[c].empty()) d.conflict = true;
  }
  if (!d.conflict) {
    const Demand need = demand(pa);
    if (need.cabinets > in.cabinet.upper || need.rooms > in.room.upper) d.conflict = true;
  }
  return d;
}

Weight SearchSpace::cabinet_cost(const PartialAssignment& pa, int c) const {
  const CabinetState& cs = pa.cabinets[c];
  if (is_legacy_cabinet(c)) {
    if (cs.fate == Fate::Deleted) return dCab_;
    if (!cabinet_present(pa, c)) return 0;
    switch (cs.height) {
      case HeightChoice::None:
      case HeightChoice::Small: return rSmall_;
      case HeightChoice::High: return rHigh_;
      case HeightChoice::Unset:
        if (cs.hasLong) return rHigh_;
        return can_be_high(c) ? std::min(rSmall_, rHigh_) : rSmall_;
    }
  }
  if (!cabinet_present(pa, c)) return 0;
  switch (cs.height) {
    case HeightChoice::None: return cCab_;
    case HeightChoice::Small: return cCab_ + cSmall_;
    case HeightChoice::High: return cCab_ + cHigh_;
    case HeightChoice::Unset: return cCab_ + (cs.hasLong ? cHigh_ : std::min(cSmall_, cHigh_));
  }
  return 0;
}

Weight SearchSpace::room_cost(const PartialAssignment& pa, int r) const {
  if (is_legacy_room(r)) {
    if (pa.rooms[r].fate == Fate::Deleted) return dRoom_;
    return room_present(pa, r) ? rRoom_ : 0;
  }
  return room_present(pa, r) ? cRoom_ : 0;
}

Weight SearchSpace::committed_individuals(const PartialAssignment& pa) const {
  Weight w = 0;
  for (int c = 0; c < cabinet_count(); ++c) w += cabinet_cost(pa, c);
  for (int r = 0; r < room_count(); ++r) w += room_cost(pa, r);
  return w;
}

Weight SearchSpace::committed_relations(const PartialAssignment& pa) const {
  Weight w = 0;
  for (int t = 0; t < thing_count(); ++t) {
    const int c = pa.thingCabinet[t];
    if (c < 0) continue;
    bool reused = false;
    for (int lc : things_[t].legacyCabinets) {
      if (lc == c) {
        reused = true;
      } else {
        w += dCtt_;
      }
    }
    w += reused ? rCtt_ : cCtt_;
  }
  for (int c = 0; c < cabinet_count(); ++c) {
    const CabinetState& cs = pa.cabinets[c];
    if (cs.room >= 0) {
      bool reused = false;
      for (int lr : legacyRoomsOfCabinet_[c]) {
        if (lr == cs.room) {
          reused = true;
        } else {
          w += dRtc_;
        }
      }
      w += reused ? rRtc_ : cRtc_;
    } else if (cs.fate == Fate::Deleted) {
      w += dRtc_ * static_cast<Weight>(legacyRoomsOfCabinet_[c].size());
    }
  }
  for (int r = 0; r < room_count(); ++r) {
    const RoomState& rs = pa.rooms[r];
    if (rs.fate == Fate::Deleted) {
      w += dPtr_ * static_cast<Weight>(legacyOwnersOfRoom_[r].size());
    } else if (rs.owner >= 0) {
      bool reused = false;
      for (int lp : legacyOwnersOfRoom_[r]) {
        if (lp == rs.owner) {
          reused = true;
        } else {
          w += dPtr_;
        }
      }
      w += reused ? rPtr_ : cPtr_;
    }
  }
  return w;
}

SearchSpace::Demand SearchSpace::demand(const PartialAssignment& pa) const {
  const Instance& in = problem_->instance;
  const int cap = in.cabinetThingCapacity;
  const int np = person_count();

  struct PersonLoad {
    int committedSlots = 0;
    int nonempty = 0;
    int highFixed = 0;
    int longCapFixed = 0;
    int freeAll = 0;
    std::vector<int> flexCaps;
    int remainingLong = 0;
    int remainingShort = 0;
  };
  std::vector<PersonLoad> load(np);
  for (int c = 0; c < cabinet_count(); ++c) {
    const CabinetState& cs = pa.cabinets[c];
    if (cs.count == 0) continue;
    PersonLoad& pl = load[cs.owner];
    const int free = cap - cs.count;
    ++pl.nonempty;
    pl.freeAll += free;
    if (!heights_) {
      ++pl.committedSlots;
    } else if (cs.hasLong || cs.height == HeightChoice::High) {
      pl.committedSlots += in.highSlots;
      ++pl.highFixed;
      pl.longCapFixed += free;
    } else if (cs.height == HeightChoice::Small || !can_be_high(c)) {
      pl.committedSlots += in.smallSlots;
    } else {
      pl.committedSlots += in.smallSlots;
      pl.flexCaps.push_back(free);
    }
  }
  for (int t = 0; t < thing_count(); ++t) {
    if (pa.thingCabinet[t] >= 0) continue;
    PersonLoad& pl = load[things_[t].owner];
    if (heights_ && things_[t].isLong) {
      ++pl.remainingLong;
    } else {
      ++pl.remainingShort;
    }
  }

  int needCabinets = 0;
  int needHigh = 0;
  int needRooms = 0;
  const int grow = in.highSlots - in.smallSlots;
  for (PersonLoad& pl : load) {
    const int remaining = pl.remainingLong + pl.remainingShort;
    if (pl.nonempty == 0 && remaining == 0) continue;
    std::sort(pl.flexCaps.rbegin(), pl.flexCaps.rend());
    int bestSlots = std::numeric_limits<int>::max();
    int bestCabinets = std::numeric_limits<int>::max();
    int bestHigh = std::numeric_limits<int>::max();
    int longCap = pl.longCapFixed;
    for (std::size_t k = 0; k <= pl.flexCaps.size(); ++k) {
      if (k > 0) longCap += pl.flexCaps[k - 1];
      const int newHigh = ceil_div(pl.remainingLong - longCap, cap);
      const int newSmall = ceil_div(remaining - pl.freeAll - newHigh * cap, cap);
      const int slots = pl.committedSlots + static_cast<int>(k) * grow + newHigh * in.highSlots +
                        newSmall * (heights_ ? in.smallSlots : 1);
      bestSlots = std::min(bestSlots, slots);
      bestCabinets = std::min(bestCabinets, pl.nonempty + newHigh + newSmall);
      bestHigh = std::min(bestHigh, pl.highFixed + static_cast<int>(k) + newHigh);
      if (!heights_) break;
    }
    needCabinets += bestCabinets;
    needHigh += heights_ ? bestHigh : 0;
    needRooms += ceil_div(bestSlots, in.roomSlotCapacity);
  }
  return {needCabinets, needHigh, needRooms};
}

Weight SearchSpace::structural_bound(const PartialAssignment& pa) const {
  const auto [needCabinets, needHigh, needRooms] = demand(pa);

  // Cheapest way to supply that many cabinets (high ones included) and rooms
  // from the legacy pool and fresh ids, ignoring which individual goes where.
  const int nl = legacyCabinets_;
  const int maxAltered = heights_ && allowHeightChange_ ? nl : 0;
  const Weight freshHigh = cCab_ + cHigh_;
  const Weight freshAny = cCab_ + (heights_ ? std::min(cSmall_, cHigh_) : 0);
  Weight cabinets = std::numeric_limits<Weight>::max();
  for (int a = 0; a <= maxAltered; ++a) {
    for (int b = 0; a + b <= nl; ++b) {
      const int x = std::max(0, needHigh - a);
      const int y = std::max(0, needCabinets - a - b - x);
      const Weight w = a * rHigh_ + b * rSmall_ + (nl - a - b) * dCab_ + x * freshHigh + y * freshAny;
      cabinets = std::min(cabinets, w);
    }
  }
  const int nr = legacyRooms_;
  Weight rooms = std::numeric_limits<Weight>::max();
  for (int r = 0; r <= nr; ++r) {
    rooms = std::min(rooms, r * rRoom_ + (nr - r) * dRoom_ + std::max(0, needRooms - r) * cRoom_);
  }
  return cabinets + rooms;
}

Weight SearchSpace::lower_bound(const PartialAssignment& pa) const {
  Weight residual = 0;
  for (int t = 0; t < thing_count(); ++t) {
    if (pa.thingCabinet[t] >= 0) continue;
    const auto m = static_cast<Weight>(things_[t].legacyCabinets.size());
    residual += m == 0 ? cCtt_ : std::min(rCtt_ + (m - 1) * dCtt_, cCtt_ + m * dCtt_);
  }
  for (int c = 0; c < cabinet_count(); ++c) {
    if (!cabinet_present(pa, c) || pa.cabinets[c].room >= 0) continue;
    const auto m = static_cast<Weight>(legacyRoomsOfCabinet_[c].size());
    residual += m == 0 ? cRtc_ : std::min(rRtc_ + (m - 1) * dRtc_, cRtc_ + m * dRtc_);
  }
  for (int r = 0; r < room_count(); ++r) {
    if (!room_present(pa, r) || pa.rooms[r].owner >= 0) continue;
    const auto m = static_cast<Weight>(legacyOwnersOfRoom_[r].size());
    residual += m == 0 ? cPtr_ : std::min(rPtr_ + (m - 1) * dPtr_, cPtr_ + m * dPtr_);
  }
  return std::max(committed_individuals(pa), structural_bound(pa)) + committed_relations(pa) +
         residual + constant_;
}

bool SearchSpace::complete(const PartialAssignment& pa) const {
  const Instance& in = problem_->instance;
  for (int c : pa.thingCabinet) {
    if (c < 0) return false;
  }
  for (int c = 0; c < cabinet_count(); ++c) {
    const CabinetState& cs = pa.cabinets[c];
    if (is_legacy_cabinet(c) && cs.fate == Fate::Undecided) return false;
    if (!cabinet_present(pa, c)) continue;
    if (cs.height == HeightChoice::Unset || cs.room < 0) return false;
  }
  for (int r = 0; r < room_count(); ++r) {
    if (is_legacy_room(r) && pa.rooms[r].fate == Fate::Undecided) return false;
    if (room_present(pa, r) && pa.rooms[r].owner < 0) return false;
  }
  const int nc = present_cabinets(pa);
  const int nr = present_rooms(pa);
  return nc >= in.cabinet.lower && nc <= in.cabinet.upper && nr >= in.room.lower && nr <= in.room.upper;
}

Configuration SearchSpace::to_configuration(const PartialAssignment& pa) const {
  Configuration config;
  for (int c = 0; c < cabinet_count(); ++c) {
    if (!cabinet_present(pa, c)) continue;
    const Id id = cabinetIds_[c];
    const CabinetState& cs = pa.cabinets[c];
    config.cabinets.insert(id);
    if (cs.height == HeightChoice::High || (cs.height == HeightChoice::Unset && cs.hasLong)) {
      config.cabinetHigh.insert(id);
    } else if (cs.height != HeightChoice::None) {
      config.cabinetSmall.insert(id);
    }
    if (cs.room >= 0) config.roomToCabinet.insert({roomIds_[cs.room], id});
  }
  for (int t = 0; t < thing_count(); ++t) {
    if (pa.thingCabinet[t] >= 0) config.cabinetToThing.insert({cabinetIds_[pa.thingCabinet[t]], things_[t].id});
  }
  for (int r = 0; r < room_count(); ++r) {
    if (!room_present(pa, r)) continue;
    config.rooms.insert(roomIds_[r]);
    if (pa.rooms[r].owner >= 0) config.personToRoom.insert({persons_[pa.rooms[r].owner], roomIds_[r]});
  }
  return config;
}

}  // namespace reconf
