#include "reconf/oracle.hpp"

#include <algorithm>
#include <map>

#include "reconf/validator.hpp"

namespace reconf {

namespace {

constexpr Id kNobody = -1;

// Enumerates candidate configurations stage by stage. Fresh cabinets and rooms
// are drawn in first-use order, which loses no solution up to renaming. Empty
// fresh individuals are only added to reach a lower bound: an extra empty one
// can be dropped without breaking any requirement or raising the cost.
//
// Every stage adds the price of the atoms it fixes to a running sum. Weights
// are non-negative, so once the sum exceeds the best cost seen the rest of the
// branch cannot tie it and is skipped.
class Enumerator {
 public:
  Enumerator(const ReconfigProblem& problem, const CostModel& model, bool reconfiguration,
             const OracleLimits& limits)
      : problem_(problem), model_(model), reconfiguration_(reconfiguration), limits_(limits) {
    const Instance& in = problem.instance;
    const Configuration& lc = problem.legacy.config;
    things_.assign(in.things.begin(), in.things.end());
    persons_.assign(in.persons.begin(), in.persons.end());
    legacyCabinets_.assign(lc.cabinets.begin(), lc.cabinets.end());
    legacyRooms_.assign(lc.rooms.begin(), lc.rooms.end());
    for (Id c = in.cabinet.first_new(); c <= in.cabinet.last_new(); ++c) freshCabinets_.push_back(c);
    for (Id r = in.room.first_new(); r <= in.room.last_new(); ++r) freshRooms_.push_back(r);
    for (const GroundAtom& a : problem.legacy.atoms()) legacyAtoms_.insert(a);
    // Legacy atoms about persons or things that are gone are deleted in every candidate.
    const std::vector<GroundAtom> kept = instance_atoms(in);
    for (const GroundAtom& a : legacyAtoms_) {
      bool gone = false;
      switch (a.pred) {
        case Pred::Person:
        case Pred::Thing:
        case Pred::PersonToThing: gone = !std::binary_search(kept.begin(), kept.end(), a); break;
        case Pred::CabinetToThing: gone = !in.things.count(a.b); break;
        case Pred::PersonToRoom: gone = !in.persons.count(a.a); break;
        default: break;
      }
      if (gone) constant_ += model_.delete_weight(a);
    }
  }

  OracleResult run() {
    place_thing(0, constant_);
    return std::move(out_);
  }

 private:
  const Instance& in() const { return problem_.instance; }

  bool hopeless(Weight sum) const { return out_.feasible && sum > out_.cost; }

  bool is_legacy(const GroundAtom& a) const { return legacyAtoms_.count(a) > 0; }

  // Price of an atom that will be part of the configuration. Heights of
  // legacy cabinets are folded into the cabinet's reuse price.
  Weight price(const GroundAtom& a) const {
    return is_legacy(a) ? model_.reuse_weight(a) : model_.create_weight(a);
  }

  // Cheapest a present cabinet can cost before its height is known.
  Weight cabinet_floor(Id c) const {
    const GroundAtom a{Pred::Cabinet, c, 0};
    if (!is_legacy(a)) return model_.create_weight(a);
    const Weight small = model_.reuse_weight(a, Height::Small);
    return in().heights_in_play() ? std::min(small, model_.reuse_weight(a, Height::High)) : small;
  }

  // What fixing the height adds on top of cabinet_floor.
  Weight height_extra(Id c, bool high) const {
    const GroundAtom a{Pred::Cabinet, c, 0};
    if (is_legacy(a)) return model_.reuse_weight(a, high ? Height::High : Height::Small) - cabinet_floor(c);
    return model_.create_weight({high ? Pred::CabinetHigh : Pred::CabinetSmall, c, 0});
  }

  void place_thing(std::size_t i, Weight sum) {
    if (hopeless(sum)) return;
    if (i == things_.size()) {
      choose_cabinets(sum);
      return;
    }
    const Id t = things_[i];
    const Id owner = in().owner.at(t);
    std::vector<Id> options = legacyCabinets_;
    for (std::size_t k = 0; k <= usedFreshCabinets_ && k < freshCabinets_.size(); ++k) {
      options.push_back(freshCabinets_[k]);
    }
    for (Id c : options) {
      auto& inside = contents_[c];
      if (static_cast<int>(inside.size()) >= in().cabinetThingCapacity) continue;
      if (!inside.empty() && in().owner.at(inside.front()) != owner) continue;
      Weight add = price({Pred::CabinetToThing, c, t});
      for (Id other : legacyCabinets_) {
        const GroundAtom old{Pred::CabinetToThing, other, t};
        if (other != c && is_legacy(old)) add += model_.delete_weight(old);
      }
      if (inside.empty()) add += cabinet_floor(c);
      const bool opens = inside.empty() && !problem_.legacy.config.cabinets.count(c);
      inside.push_back(t);
      if (opens) ++usedFreshCabinets_;
      place_thing(i + 1, sum + add);
      if (opens) --usedFreshCabinets_;
      inside.pop_back();
    }
  }

  void choose_cabinets(Weight sum) {
    std::vector<Id> used;
    std::vector<Id> emptyLegacy;
    for (Id c : legacyCabinets_) (contents_[c].empty() ? emptyLegacy : used).push_back(c);
    for (std::size_t k = 0; k < usedFreshCabinets_; ++k) used.push_back(freshCabinets_[k]);

    for (std::uint32_t mask = 0; mask < (1u << emptyLegacy.size()); ++mask) {
      std::vector<Id> cabinets = used;
      Weight add = 0;
      for (std::size_t k = 0; k < emptyLegacy.size(); ++k) {
        if (mask & (1u << k)) {
          cabinets.push_back(emptyLegacy[k]);
          add += cabinet_floor(emptyLegacy[k]);
        } else {
          add += model_.delete_weight({Pred::Cabinet, emptyLegacy[k], 0});
          for (Id r : legacyRooms_) {
            const GroundAtom old{Pred::RoomToCabinet, r, emptyLegacy[k]};
            if (is_legacy(old)) add += model_.delete_weight(old);
          }
        }
      }
      std::size_t next = usedFreshCabinets_;
      while (static_cast<int>(cabinets.size()) < in().cabinet.lower && next < freshCabinets_.size()) {
        add += cabinet_floor(freshCabinets_[next]);
        cabinets.push_back(freshCabinets_[next++]);
      }
      if (!hopeless(sum + add)) choose_heights(cabinets, sum + add);
    }
  }

  bool holds_long(Id c) {
    for (Id t : contents_[c]) {
      if (in().is_long(t)) return true;
    }
    return false;
  }

  // Without permission to alter, a reused cabinet keeps its legacy height.
  bool may_be_high(Id c) const {
    const Configuration& lc = problem_.legacy.config;
    return !reconfiguration_ || problem_.policy.allowHeightChange || !lc.cabinets.count(c) || lc.cabinetHigh.count(c);
  }

  void choose_heights(const std::vector<Id>& cabinets, Weight sum) {
    cabinets_ = cabinets;
    roomOf_.assign(cabinets.size(), 0);
    if (!in().heights_in_play()) {
      heights_.assign(cabinets.size(), 1);
      assign_room(0, sum);
      return;
    }
    for (std::uint32_t mask = 0; mask < (1u << cabinets.size()); ++mask) {
      bool ok = true;
      Weight add = 0;
      heights_.assign(cabinets.size(), 1);
      for (std::size_t k = 0; k < cabinets.size(); ++k) {
        const bool high = mask & (1u << k);
        if (!high && holds_long(cabinets[k])) ok = false;  // a long thing needs a high cabinet
        if (high && !may_be_high(cabinets[k])) ok = false;
        heights_[k] = high ? in().highSlots : in().smallSlots;
        add += height_extra(cabinets[k], high);
      }
      if (ok && !hopeless(sum + add)) assign_room(0, sum + add);
    }
  }

  void assign_room(std::size_t k, Weight sum) {
    if (hopeless(sum)) return;
    if (k == cabinets_.size()) {
      choose_rooms(sum);
      return;
    }
    std::vector<Id> options = legacyRooms_;
    for (std::size_t j = 0; j <= usedFreshRooms_ && j < freshRooms_.size(); ++j) options.push_back(freshRooms_[j]);
    const Id c = cabinets_[k];
    const Id owner = cabinet_owner(c);
    for (Id r : options) {
      int& load = roomLoad_[r];
      if (load + heights_[k] > in().roomSlotCapacity) continue;
      if (!shares_owner(r, k, owner)) continue;
      Weight add = price({Pred::RoomToCabinet, r, c});
      for (Id other : legacyRooms_) {
        const GroundAtom old{Pred::RoomToCabinet, other, c};
        if (other != r && is_legacy(old)) add += model_.delete_weight(old);
      }
      if (roomCabinets_[r] == 0) add += price({Pred::Room, r, 0});
      const bool opens = roomCabinets_[r] == 0 && !problem_.legacy.config.rooms.count(r);
      load += heights_[k];
      ++roomCabinets_[r];
      roomOf_[k] = r;
      if (opens) ++usedFreshRooms_;
      assign_room(k + 1, sum + add);
      if (opens) --usedFreshRooms_;
      --roomCabinets_[r];
      load -= heights_[k];
    }
  }

  Id cabinet_owner(Id c) {
    const auto& inside = contents_[c];
    return inside.empty() ? kNobody : in().owner.at(inside.front());
  }

  // Cabinets of two persons never share a room in a valid configuration.
  bool shares_owner(Id room, std::size_t k, Id owner) {
    if (owner == kNobody) return true;
    for (std::size_t j = 0; j < k; ++j) {
      if (roomOf_[j] != room) continue;
      const Id other = cabinet_owner(cabinets_[j]);
      if (other != kNobody && other != owner) return false;
    }
    return true;
  }

  void choose_rooms(Weight sum) {
    std::vector<Id> used;
    std::vector<Id> emptyLegacy;
    for (Id r : legacyRooms_) (roomCabinets_[r] == 0 ? emptyLegacy : used).push_back(r);
    for (std::size_t j = 0; j < usedFreshRooms_; ++j) used.push_back(freshRooms_[j]);
    for (std::uint32_t mask = 0; mask < (1u << emptyLegacy.size()); ++mask) {
      std::vector<Id> rooms = used;
      Weight add = 0;
      for (std::size_t k = 0; k < emptyLegacy.size(); ++k) {
        const GroundAtom a{Pred::Room, emptyLegacy[k], 0};
        if (mask & (1u << k)) {
          rooms.push_back(emptyLegacy[k]);
          add += price(a);
        } else {
          add += model_.delete_weight(a);
          for (Id p : persons_) {
            const GroundAtom old{Pred::PersonToRoom, p, emptyLegacy[k]};
            if (is_legacy(old)) add += model_.delete_weight(old);
          }
        }
      }
      std::size_t next = usedFreshRooms_;
      while (static_cast<int>(rooms.size()) < in().room.lower && next < freshRooms_.size()) {
        add += price({Pred::Room, freshRooms_[next], 0});
        rooms.push_back(freshRooms_[next++]);
      }
      rooms_ = rooms;
      owners_.assign(rooms.size(), {});
      assign_owner(0, sum + add);
    }
  }

  // Rooms holding things get the owners of those things (several owners make
  // an invalid candidate, left to the validator); other rooms try everyone.
  // Price of giving room r the owners `ps`, legacy owners left out included.
  Weight owner_price(Id r, const std::vector<Id>& ps) const {
    Weight w = 0;
    for (Id p : ps) w += price({Pred::PersonToRoom, p, r});
    for (Id p : persons_) {
      const GroundAtom old{Pred::PersonToRoom, p, r};
      if (is_legacy(old) && std::find(ps.begin(), ps.end(), p) == ps.end()) w += model_.delete_weight(old);
    }
    return w;
  }

  void assign_owner(std::size_t k, Weight sum) {
    if (hopeless(sum)) return;
    if (k == rooms_.size()) {
      judge();
      return;
    }
    const Id r = rooms_[k];
    std::set<Id> forced;
    for (std::size_t j = 0; j < cabinets_.size(); ++j) {
      if (roomOf_[j] != r) continue;
      for (Id t : contents_[cabinets_[j]]) forced.insert(in().owner.at(t));
    }
    if (!forced.empty()) {
      owners_[k].assign(forced.begin(), forced.end());
      assign_owner(k + 1, sum + owner_price(r, owners_[k]));
      return;
    }
    for (Id p : persons_) {
      owners_[k] = {p};
      assign_owner(k + 1, sum + owner_price(r, owners_[k]));
    }
  }

  void judge() {
    Configuration config;
    const bool heights = in().heights_in_play();
    for (std::size_t j = 0; j < cabinets_.size(); ++j) {
      const Id c = cabinets_[j];
      config.cabinets.insert(c);
      if (heights) (heights_[j] == in().highSlots ? config.cabinetHigh : config.cabinetSmall).insert(c);
      for (Id t : contents_[c]) config.cabinetToThing.insert({c, t});
      config.roomToCabinet.insert({roomOf_[j], c});
    }
    for (std::size_t k = 0; k < rooms_.size(); ++k) {
      config.rooms.insert(rooms_[k]);
      for (Id p : owners_[k]) config.personToRoom.insert({p, rooms_[k]});
    }
    ++out_.candidates;

    // The exact price and the full validator decide; the running sum above
    // only ever skipped candidates that could not tie.
    Weight cost = 0;
    if (reconfiguration_) {
      const ActionSet actions = make_actions(problem_, config);
      cost = reconfig_cost(problem_.legacy, config, actions, model_).total;
      if (hopeless(cost)) return;
      if (!check_reconfiguration(problem_, config, actions).valid) return;
    } else {
      cost = config_cost(config, model_).total;
      if (hopeless(cost)) return;
      if (!check_configuration(in(), config).valid) return;
    }
    if (!out_.feasible || cost < out_.cost) {
      out_.feasible = true;
      out_.cost = cost;
      out_.optima.clear();
    }
    if (cost == out_.cost && out_.optima.size() < limits_.maxOptima) {
      out_.optima.insert(canonicalize(config, in()));
    }
  }

  const ReconfigProblem& problem_;
  const CostModel& model_;
  bool reconfiguration_;
  OracleLimits limits_;
  OracleResult out_;

  std::vector<Id> things_, persons_;
  std::vector<Id> legacyCabinets_, legacyRooms_, freshCabinets_, freshRooms_;
  std::set<GroundAtom> legacyAtoms_;
  Weight constant_ = 0;
  std::map<Id, std::vector<Id>> contents_;
  std::size_t usedFreshCabinets_ = 0;
  std::vector<Id> cabinets_;
  std::vector<int> heights_;  // slots taken by cabinets_[k]
  std::vector<Id> roomOf_;
  std::map<Id, int> roomLoad_;
  std::map<Id, int> roomCabinets_;
  std::size_t usedFreshRooms_ = 0;
  std::vector<Id> rooms_;
  std::vector<std::vector<Id>> owners_;
};

void check_size(const ReconfigProblem& problem, const OracleLimits& limits) {
  const Instance& in = problem.instance;
  if (static_cast<int>(in.things.size()) > limits.maxThings) {
    throw SizeError("brute force handles at most " + std::to_string(limits.maxThings) + " things, got " +
                    std::to_string(in.things.size()));
  }
  if (in.cabinet.upper > limits.maxUpper || in.room.upper > limits.maxUpper) {
    throw SizeError("brute force handles cabinet and room bounds up to " + std::to_string(limits.maxUpper));
  }
  int legacyAtoms = 0;
  for (const GroundAtom& a : problem.legacy.atoms()) {
    if (a.pred != Pred::Person && a.pred != Pred::Thing && a.pred != Pred::PersonToThing) ++legacyAtoms;
  }
  if (legacyAtoms > limits.maxLegacyAtoms) {
    throw SizeError("brute force handles at most " + std::to_string(limits.maxLegacyAtoms) +
                    " legacy atoms, got " + std::to_string(legacyAtoms));
  }
}

}  // namespace

OracleResult brute_force_configuration(const Instance& instance, const CostModel& model,
                                       const OracleLimits& limits) {
  ReconfigProblem problem;
  problem.instance = derive_bounds(instance);
  check_instance(problem.instance);
  check_size(problem, limits);
  return Enumerator(problem, model, false, limits).run();
}

OracleResult brute_force_reconfiguration(const ReconfigProblem& problem, const CostModel& model,
                                         const OracleLimits& limits) {
  check_size(problem, limits);
  return Enumerator(problem, model, true, limits).run();
}

}  // namespace reconf
