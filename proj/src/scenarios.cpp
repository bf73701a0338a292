#include "reconf/scenarios.hpp"

#include <set>
#include <stdexcept>

namespace reconf {

namespace {

// Per-person shape of a legacy configuration: things per cabinet, cabinets
// per room (consecutive), and which things (by position) become long.
struct Layout {
  std::vector<int> cabinetSizes;
  std::vector<int> roomSizes;
  std::set<int> longThings;
};

void require_multiple(int n, int k, const char* family) {
  if (n <= 0 || n % k != 0) {
    throw std::invalid_argument(std::string(family) + " needs a positive multiple of " + std::to_string(k) +
                                " things, got " + std::to_string(n));
  }
}

Scenario build(const std::string& name, int persons, int thingsPerPerson, const Layout* layout) {
  Scenario s;
  s.name = name;
  Instance& before = s.before;
  for (int p = 1; p <= persons; ++p) before.persons.insert(p);
  Id next = persons + 1;
  std::vector<std::vector<Id>> owned(persons);
  for (int p = 0; p < persons; ++p) {
    for (int k = 0; k < thingsPerPerson; ++k) {
      before.things.insert(next);
      before.owner[next] = p + 1;
      owned[p].push_back(next++);
    }
  }

  s.after = before;
  for (int p = 0; p < persons; ++p) {
    for (int k = 0; k < thingsPerPerson; ++k) {
      s.after.length[owned[p][k]] = layout && layout->longThings.count(k) ? Length::Long : Length::Short;
    }
  }
  if (layout) {
    const Instance derived = derive_bounds(before);
    Id cabinet = derived.cabinet.first_new();
    Id room = derived.room.first_new();
    Configuration& lc = s.legacy.config;
    for (int p = 0; p < persons; ++p) {
      std::vector<Id> cabinets;
      int k = 0;
      for (int size : layout->cabinetSizes) {
        lc.cabinets.insert(cabinet);
        for (int j = 0; j < size; ++j) lc.cabinetToThing.insert({cabinet, owned[p][k++]});
        cabinets.push_back(cabinet++);
      }
      std::size_t c = 0;
      for (int size : layout->roomSizes) {
        lc.rooms.insert(room);
        lc.personToRoom.insert({p + 1, room});
        for (int j = 0; j < size; ++j) lc.roomToCabinet.insert({room, cabinets[c++]});
        ++room;
      }
    }
    s.legacy.persons = before.persons;
    s.legacy.things = before.things;
    for (auto [t, p] : before.owner) s.legacy.personToThing.insert({p, t});
  }
  s.problem = make_problem(s.after, s.legacy);
  return s;
}

}  // namespace

Scenario gen_empty(int nThings) {
  require_multiple(nThings, 5, "empty");
  return build("empty", nThings / 5, 5, nullptr);
}

Scenario gen_long(int nThings) {
  require_multiple(nThings, 15, "long");
  // Two long things in each of the first two cabinets, one in the third.
  const Layout layout{{5, 5, 5}, {3}, {0, 1, 5, 6, 10}};
  return build("long", nThings / 15, 15, &layout);
}

Scenario gen_newroom(int nThings) {
  require_multiple(nThings, 12, "newroom");
  const Layout layout{{4, 4, 4}, {3}, {0, 1, 4, 5, 8, 9}};
  return build("newroom", nThings / 12, 12, &layout);
}

Scenario gen_swap() {
  // The first thing of the fourth cabinet, which stands in the second room.
  const Layout layout{{5, 5, 5, 5, 5, 5, 5}, {3, 4}, {15}};
  return build("swap", 1, 35, &layout);
}

Scenario generate(const std::string& family, int nThings) {
  if (family == "empty") return gen_empty(nThings);
  if (family == "long") return gen_long(nThings);
  if (family == "newroom") return gen_newroom(nThings);
  if (family == "swap") {
    if (nThings != 0 && nThings != 35) throw std::invalid_argument("swap has a fixed size of 35 things");
    return gen_swap();
  }
  throw std::invalid_argument("unknown scenario family " + family);
}

CostModel benchmark_costs() {
  return CostModel::with({{"cabinetHighCost", 10}, {"cabinetSmallCost", 5}, {"roomCost", 5}});
}

}  // namespace reconf
