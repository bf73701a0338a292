#include <gtest/gtest.h>

#include "reconf/model.hpp"
#include "reconf/model_io.hpp"
#include "support.hpp"

namespace reconf {
namespace {

using testing::house;

TEST(Bounds, HouseInstance) {
  const Instance in = house().instance;
  EXPECT_EQ(in.cabinet.lower, 2);
  EXPECT_EQ(in.cabinet.upper, 6);
  EXPECT_EQ(in.cabinet.first_new(), 9);
  EXPECT_EQ(in.cabinet.last_new(), 14);
  EXPECT_EQ(in.room.lower, 2);
  EXPECT_EQ(in.room.first_new(), 15);
  EXPECT_EQ(in.room.last_new(), 20);
}

TEST(Bounds, ReconfigurationDomainsStartAboveEveryKnownId) {
  const Instance& in = house().reconf.instance;
  EXPECT_EQ(in.cabinet.upper, 7);
  EXPECT_EQ(in.cabinet.first_new(), 22);
  EXPECT_EQ(in.cabinet.last_new(), 28);
  EXPECT_EQ(in.room.first_new(), 29);
  EXPECT_EQ(in.room.last_new(), 35);
}

TEST(Bounds, EmptyInstanceHasZeroBounds) {
  const Instance in = derive_bounds(Instance{});
  EXPECT_EQ(in.cabinet.lower, 0);
  EXPECT_EQ(in.cabinet.upper, 0);
  EXPECT_EQ(in.room.upper, 0);
  EXPECT_NO_THROW(check_instance(in));
}

TEST(Bounds, OverridesFromFacts) {
  const auto file = facts::parse(
      "person(1). thing(2). personTOthing(1,2). cabinetDomainNew(50..52). roomLower(2). roomUpper(3).");
  const Instance in = derive_bounds(instance_from_facts(file));
  EXPECT_EQ(in.cabinet.first_new(), 50);
  EXPECT_EQ(in.cabinet.upper, 3);
  EXPECT_EQ(in.room.lower, 2);
  EXPECT_EQ(in.room.upper, 3);
  EXPECT_EQ(in.room.first_new(), 53);
}

TEST(Bounds, NonContiguousDomainIsRejected) {
  const auto file = facts::parse("person(1). cabinetDomainNew(5). cabinetDomainNew(7).");
  EXPECT_THROW(instance_from_facts(file), ConfigError);
}

TEST(Instance, ThingWithoutOwnerIsRejected) {
  Instance in;
  in.persons = {1};
  in.things = {2};
  EXPECT_THROW(check_instance(derive_bounds(in)), ConfigError);
}

TEST(Instance, SharedIdentifierIsRejected) {
  Instance in;
  in.persons = {1};
  in.things = {2};
  in.owner = {{2, 1}};
  LegacyConfiguration legacy;
  legacy.config.cabinets = {2};
  EXPECT_THROW(check_instance(derive_bounds(in, &legacy), &legacy), ConfigError);
}

TEST(Instance, LengthsDefaultToShortOnceAnyIsGiven) {
  const Instance in = house().reconf.instance;
  EXPECT_TRUE(in.is_long(21));
  EXPECT_FALSE(in.is_long(4));
  EXPECT_TRUE(in.heights_in_play());
  EXPECT_FALSE(house().instance.heights_in_play());
}

TEST(Instance, FactsRoundTrip) {
  const Instance in = house().reconf.instance;
  Instance back = instance_from_facts(to_facts(in));
  back.cabinet = in.cabinet;
  back.room = in.room;
  EXPECT_EQ(back, in);
}

TEST(Legacy, MakeProblemMarksCabinetsSmallAndForcesInstanceAtoms) {
  const ReconfigProblem p = house().reconf;
  EXPECT_EQ(p.legacy.config.cabinetSmall, (std::set<Id>{9, 10}));
  EXPECT_TRUE(p.policy.forcedReuse.count({Pred::Person, 1, 0}));
  EXPECT_TRUE(p.policy.forcedReuse.count({Pred::PersonToThing, 2, 8}));
  EXPECT_FALSE(p.policy.forcedReuse.count({Pred::Cabinet, 9, 0}));
}

TEST(Legacy, HeightAtomsAreNotDecided) {
  for (const GroundAtom& a : house().reconf.legacy.atoms()) {
    EXPECT_NE(a.pred, Pred::CabinetSmall);
    EXPECT_NE(a.pred, Pred::CabinetHigh);
  }
}

TEST(Legacy, DanglingRelationIsRejected) {
  LegacyConfiguration legacy;
  legacy.config.cabinets = {9};
  legacy.config.roomToCabinet = {{15, 9}};
  Instance in;
  EXPECT_THROW(make_problem(in, legacy), ConfigError);
}

TEST(Legacy, FactsRoundTrip) {
  const LegacyConfiguration legacy = house().reconf.legacy;
  EXPECT_EQ(legacy_from_facts(to_facts(legacy)), legacy);
}

TEST(Actions, ReusedCabinetHeightIsNotCreated) {
  const ReconfigProblem p = house().reconf;
  Configuration c = p.legacy.config;
  c.cabinetSmall.clear();
  c.cabinetHigh = {9, 10};
  c.cabinetToThing.erase({9, 7});
  c.cabinetToThing.insert({9, 21});
  c.cabinets.insert(22);
  c.cabinetSmall.insert(22);
  c.cabinetToThing.insert({22, 7});
  c.roomToCabinet.insert({15, 22});
  const ActionSet a = make_actions(p, c);
  EXPECT_EQ(a.del, (std::set<GroundAtom>{{Pred::CabinetToThing, 9, 7}}));
  EXPECT_TRUE(a.reuse.count({Pred::Cabinet, 9, 0}));
  EXPECT_FALSE(a.create.count({Pred::CabinetHigh, 9, 0}));
  EXPECT_TRUE(a.create.count({Pred::CabinetSmall, 22, 0}));
  EXPECT_TRUE(a.create.count({Pred::CabinetToThing, 9, 21}));
  EXPECT_EQ(a.create.size(), 5u);  // cabinet, height, two relations, thing 21's relation
}

TEST(Actions, FactsRoundTrip) {
  const ReconfigProblem p = house().reconf;
  const ActionSet a = make_actions(p, p.legacy.config);
  EXPECT_EQ(actions_from_facts(to_facts(a)), a);
}

TEST(Canonical, RenamingFreshIdsDoesNotMatter) {
  const Instance in = house().instance;
  Configuration a;
  a.cabinets = {9, 10};
  a.rooms = {15, 16};
  a.cabinetToThing = {{9, 3}, {10, 8}};
  a.roomToCabinet = {{15, 9}, {16, 10}};
  a.personToRoom = {{1, 15}, {2, 16}};
  const Configuration b = rename(a, {{9, 12}, {10, 11}}, {{15, 20}, {16, 18}});
  EXPECT_NE(a, b);
  EXPECT_EQ(canonicalize(a, in), canonicalize(b, in));
  EXPECT_EQ(canonicalize(canonicalize(b, in), in), canonicalize(b, in));
}

TEST(Canonical, LegacyIdsStay) {
  const ReconfigProblem p = house().reconf;
  EXPECT_EQ(canonicalize(p.legacy.config, p.instance), p.legacy.config);
}

TEST(Configuration, FactsRoundTrip) {
  const Configuration c = house().solution;
  EXPECT_EQ(configuration_from_facts(to_facts(c)), c);
  EXPECT_EQ(c.atoms().size(), 14u);
}

}  // namespace
}  // namespace reconf
