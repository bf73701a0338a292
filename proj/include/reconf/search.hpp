// Search state for the branch-and-bound solver: partial assignments, their
// propagation and an admissible lower bound on the cost of any completion.
#pragma once

#include <vector>

#include "reconf/costing.hpp"
#include "reconf/model.hpp"

namespace reconf {

enum class Fate : std::uint8_t { Undecided, Kept, Deleted };
enum class HeightChoice : std::uint8_t { Unset, Small, High, None };

struct CabinetState {
  Fate fate = Fate::Undecided;
  HeightChoice height = HeightChoice::Unset;
  int room = -1;
  int count = 0;
  int owner = -1;  // person index, from the things inside
  bool hasLong = false;

  bool operator==(const CabinetState&) const = default;
};

struct RoomState {
  Fate fate = Fate::Undecided;
  int owner = -1;
  int slots = 0;
  int cabinets = 0;

  bool operator==(const RoomState&) const = default;
};

/// Decisions taken so far. Cabinet and room slots are indexed legacy first,
/// then fresh ids in ascending order; fresh slots are opened in order.
struct PartialAssignment {
  std::vector<int> thingCabinet;  // -1 while unplaced
  std::vector<CabinetState> cabinets;
  std::vector<RoomState> rooms;
  int openCabinets = 0;  // fresh cabinet slots in use
  int openRooms = 0;

  bool operator==(const PartialAssignment&) const = default;
};

struct Domains {
  bool conflict = false;
  std::vector<std::vector<int>> thingCabinets;  // admissible cabinets per thing (unplaced only)
  std::vector<std::vector<int>> cabinetRooms;   // admissible rooms per roomless present cabinet
};

/// Compiled form of a reconfiguration problem: dense indices for persons,
/// things, cabinets and rooms, and the weights the bound needs.
class SearchSpace {
 public:
  SearchSpace(const ReconfigProblem& problem, const CostModel& model);

  const ReconfigProblem& problem() const { return *problem_; }
  const CostModel& model() const { return *model_; }

  PartialAssignment root() const;

  int thing_count() const { return static_cast<int>(things_.size()); }
  int person_count() const { return static_cast<int>(persons_.size()); }
  int cabinet_count() const { return static_cast<int>(cabinetIds_.size()); }
  int room_count() const { return static_cast<int>(roomIds_.size()); }
  int legacy_cabinets() const { return legacyCabinets_; }
  int legacy_rooms() const { return legacyRooms_; }
  bool heights() const { return heights_; }

  Id thing_id(int t) const { return things_[t].id; }
  int thing_owner(int t) const { return things_[t].owner; }
  bool thing_long(int t) const { return things_[t].isLong; }
  Id person_id(int p) const { return persons_[p]; }
  Id cabinet_id(int c) const { return cabinetIds_[c]; }
  Id room_id(int r) const { return roomIds_[r]; }
  int cabinet_index(Id id) const;
  int room_index(Id id) const;
  int thing_index(Id id) const;
  int person_index(Id id) const;

  bool is_legacy_cabinet(int c) const { return c < legacyCabinets_; }
  bool is_legacy_room(int r) const { return r < legacyRooms_; }
  /// Legacy cabinets holding the thing / legacy rooms holding the cabinet /
  /// legacy owners of the room, as indices.
  const std::vector<int>& legacy_cabinets_of(int t) const { return things_[t].legacyCabinets; }
  const std::vector<int>& legacy_rooms_of(int c) const { return legacyRoomsOfCabinet_[c]; }
  const std::vector<int>& legacy_owners_of(int r) const { return legacyOwnersOfRoom_[r]; }

  /// A cabinet slot counts as part of the configuration.
  bool cabinet_present(const PartialAssignment& pa, int c) const;
  bool room_present(const PartialAssignment& pa, int r) const;
  int present_cabinets(const PartialAssignment& pa) const;
  int present_rooms(const PartialAssignment& pa) const;
  /// Person a cabinet is tied to, via its things or via its room's owner.
  int cabinet_owner(const PartialAssignment& pa, int c) const;
  int cabinet_slots(const PartialAssignment& pa, int c) const;
  bool can_be_high(int c) const;

  // Mutations used by the search; each keeps the derived counters consistent.
  void place(PartialAssignment& pa, int thing, int cabinet) const;
  void decide_cabinet(PartialAssignment& pa, int cabinet, Fate fate, HeightChoice height) const;
  void assign_room(PartialAssignment& pa, int cabinet, int room) const;
  void decide_room(PartialAssignment& pa, int room, Fate fate, int owner) const;

  /// Admissible values under requirements 1-11 and the bounded-type limits.
  /// conflict is set when an unplaced thing has no cabinet or a roomless
  /// cabinet has no room.
  Domains propagate(const PartialAssignment& pa) const;

  /// Admissible bound: never exceeds the cost of any completion of `pa`, and
  /// equals the exact cost on a complete assignment.
  Weight lower_bound(const PartialAssignment& pa) const;

  /// Cost of what `pa` has already fixed, split into individuals and relations.
  Weight committed_individuals(const PartialAssignment& pa) const;
  Weight committed_relations(const PartialAssignment& pa) const;
  /// Bound on cabinet and room costs from how many of each the remaining
  /// things still force.
  Weight structural_bound(const PartialAssignment& pa) const;

  bool complete(const PartialAssignment& pa) const;
  Configuration to_configuration(const PartialAssignment& pa) const;

 private:
  struct ThingInfo {
    Id id = 0;
    int owner = 0;
    bool isLong = false;
    std::vector<int> legacyCabinets;
  };

  // Fewest cabinets, high cabinets and rooms any completion needs: rooms hold
  // one person's cabinets, so each person's minimal slot count is rounded up
  // to whole rooms separately.
  struct Demand {
    int cabinets = 0;
    int high = 0;
    int rooms = 0;
  };
  Demand demand(const PartialAssignment& pa) const;

  Weight cabinet_cost(const PartialAssignment& pa, int c) const;
  Weight room_cost(const PartialAssignment& pa, int r) const;

  const ReconfigProblem* problem_;
  const CostModel* model_;
  bool heights_ = false;
  bool allowHeightChange_ = true;
  std::vector<Id> persons_;
  std::vector<ThingInfo> things_;
  std::vector<Id> cabinetIds_;
  std::vector<Id> roomIds_;
  int legacyCabinets_ = 0;
  int legacyRooms_ = 0;
  std::vector<std::vector<int>> legacyRoomsOfCabinet_;
  std::vector<std::vector<int>> legacyOwnersOfRoom_;
  std::vector<std::vector<int>> legacyThingsOfCabinet_;
  Weight constant_ = 0;  // legacy atoms whose fate no decision can change

  // weights
  Weight cCab_, cSmall_, cHigh_, cRoom_, cCtt_, cRtc_, cPtr_;
  Weight rSmall_, rHigh_, rRoom_, rCtt_, rRtc_, rPtr_;
  Weight dCab_, dRoom_, dCtt_, dRtc_, dPtr_;
};

}  // namespace reconf
