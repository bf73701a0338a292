// Core objects of the house (re)configuration problem: instances,
// configurations, legacy configurations and the reuse/delete/create actions
// that turn one into the other.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace reconf {

using Id = std::int64_t;
using IdPair = std::pair<Id, Id>;

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Predicates of the solution schema. Declaration order is the atom order used
/// for lexicographic comparisons and output.
enum class Pred : std::uint8_t {
  Person,
  Thing,
  PersonToThing,
  ThingLong,
  ThingShort,
  Cabinet,
  CabinetSmall,
  CabinetHigh,
  Room,
  CabinetToThing,
  RoomToCabinet,
  PersonToRoom,
};

std::string_view pred_name(Pred p);
std::optional<Pred> pred_from_name(std::string_view name);
int pred_arity(Pred p);

struct GroundAtom {
  Pred pred = Pred::Person;
  Id a = 0;
  Id b = 0;  // unused for unary predicates

  auto operator<=>(const GroundAtom&) const = default;
};

std::string to_string(const GroundAtom& atom);

enum class Length { Short, Long };
enum class Height { Small, High };

/// Bounds and identifier layout of a bounded type (cabinet or room).
/// Individuals created by the engine draw ids from newOffset+1 .. newOffset+upper.
struct TypeBounds {
  int lower = 0;
  int upper = 0;
  Id offset = 0;
  Id newOffset = 0;

  bool operator==(const TypeBounds&) const = default;
  Id first_new() const { return newOffset + 1; }
  Id last_new() const { return newOffset + upper; }
  bool is_new(Id id) const { return id > newOffset && id <= newOffset + upper; }
};

/// Explicit bounds pinned by the input; anything left unset is derived.
struct BoundOverrides {
  std::optional<int> lower;
  std::optional<int> upper;
  std::optional<Id> offset;
  std::optional<Id> newOffset;

  bool operator==(const BoundOverrides&) const = default;
};

struct Instance {
  std::set<Id> persons;
  std::set<Id> things;
  std::map<Id, Id> owner;        // thing -> person (personTOthing)
  std::map<Id, Length> length;   // empty for problems without long/short things
  TypeBounds cabinet;
  TypeBounds room;
  BoundOverrides cabinetOverride;
  BoundOverrides roomOverride;

  int roomSlotCapacity = 4;
  int cabinetThingCapacity = 5;
  int highSlots = 2;
  int smallSlots = 1;

  bool heights_in_play() const { return !length.empty(); }
  bool is_long(Id thing) const;
  bool operator==(const Instance&) const = default;
};

/// A set of solution-schema atoms. Relations are stored as sets of pairs so
/// that ill-formed candidates (a thing in two cabinets, ...) stay representable.
struct Configuration {
  std::set<Id> cabinets;
  std::set<Id> rooms;
  std::set<Id> cabinetSmall;
  std::set<Id> cabinetHigh;
  std::set<IdPair> cabinetToThing;  // (cabinet, thing)
  std::set<IdPair> roomToCabinet;   // (room, cabinet)
  std::set<IdPair> personToRoom;    // (person, room)

  bool operator==(const Configuration&) const = default;
  bool operator<(const Configuration& other) const { return atoms() < other.atoms(); }

  std::vector<GroundAtom> atoms() const;
  bool contains(const GroundAtom& atom) const;
  bool insert(const GroundAtom& atom);
  bool erase(const GroundAtom& atom);
  std::optional<Height> height(Id cabinet) const;
  bool empty() const { return atoms().empty(); }
};

/// The configuration before the change, together with the person/thing facts
/// it was built for.
struct LegacyConfiguration {
  std::set<Id> persons;
  std::set<Id> things;
  std::set<IdPair> personToThing;  // (person, thing)
  Configuration config;

  bool operator==(const LegacyConfiguration&) const = default;

  /// Atoms subject to the reuse/delete decision. Height atoms are not part of
  /// it: a reused cabinet is priced by the height it ends up with.
  std::vector<GroundAtom> atoms() const;
  bool empty() const { return atoms().empty(); }
  std::set<Id> cabinet_ids() const { return config.cabinets; }
  std::set<Id> room_ids() const { return config.rooms; }
};

struct TransformPolicy {
  std::set<GroundAtom> forcedReuse;
  bool allowHeightChange = true;

  bool operator==(const TransformPolicy&) const = default;
};

struct ActionSet {
  std::set<GroundAtom> reuse;
  std::set<GroundAtom> del;
  std::set<GroundAtom> create;

  bool operator==(const ActionSet&) const = default;
};

struct ReconfigProblem {
  Instance instance;
  LegacyConfiguration legacy;
  TransformPolicy policy;
};

/// Fills cabinet/room bounds and offsets. With a legacy configuration, fresh
/// identifiers start above every id mentioned by the instance or the legacy.
Instance derive_bounds(Instance instance, const LegacyConfiguration* legacy = nullptr);

/// Checks ownership totality and identifier-namespace disjointness.
void check_instance(const Instance& instance, const LegacyConfiguration* legacy = nullptr);

/// Persons, things and their ownership present in the legacy and still
/// required by the new instance must be reused.
TransformPolicy make_policy(const Instance& instance, const LegacyConfiguration& legacy,
                            bool allowHeightChange = true);

/// Builds a ready-to-solve problem: bounds derived, policy computed, legacy
/// cabinets without a height marked small.
ReconfigProblem make_problem(Instance instance, LegacyConfiguration legacy,
                             bool allowHeightChange = true);

/// Person/thing/ownership atoms of the instance.
std::vector<GroundAtom> instance_atoms(const Instance& instance);

/// The unique action set realizing `config` from the legacy configuration.
ActionSet make_actions(const ReconfigProblem& problem, const Configuration& config);

/// Renames newly created cabinets and rooms onto the lowest ids of their fresh
/// domains, ordered by the smallest individual they hold. Legacy ids are kept.
Configuration canonicalize(const Configuration& config, const Instance& instance);

/// Applies an id renaming to every atom of a configuration.
Configuration rename(const Configuration& config, const std::map<Id, Id>& cabinets,
                     const std::map<Id, Id>& rooms);

}  // namespace reconf
