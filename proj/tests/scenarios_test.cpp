#include <gtest/gtest.h>

#include "reconf/scenarios.hpp"
#include "reconf/validator.hpp"
#include "support.hpp"

namespace reconf {
namespace {

int long_things(const Instance& in) {
  int n = 0;
  for (Id t : in.things) n += in.is_long(t);
  return n;
}

TEST(Scenarios, Shapes) {
  const Scenario e = gen_empty(25);
  EXPECT_EQ(e.after.things.size(), 25u);
  EXPECT_EQ(e.after.persons.size(), 5u);
  EXPECT_TRUE(e.legacy.empty());

  const Scenario l = gen_long(30);
  EXPECT_EQ(l.legacy.config.cabinets.size(), 6u);
  EXPECT_EQ(l.legacy.config.rooms.size(), 2u);
  EXPECT_EQ(long_things(l.after), 10);

  const Scenario n = gen_newroom(36);
  EXPECT_EQ(n.legacy.config.cabinets.size(), 9u);
  EXPECT_EQ(long_things(n.after), 18);

  const Scenario s = gen_swap();
  EXPECT_EQ(s.after.things.size(), 35u);
  EXPECT_EQ(s.legacy.config.cabinets.size(), 7u);
  EXPECT_EQ(s.legacy.config.rooms.size(), 2u);
  EXPECT_EQ(long_things(s.after), 1);
}

TEST(Scenarios, BadSizes) {
  EXPECT_THROW(gen_empty(7), std::invalid_argument);
  EXPECT_THROW(gen_long(20), std::invalid_argument);
  EXPECT_THROW(gen_newroom(13), std::invalid_argument);
  EXPECT_THROW(generate("swap", 34), std::invalid_argument);
  EXPECT_THROW(generate("garden", 5), std::invalid_argument);
  EXPECT_NO_THROW(generate("swap", 0));
}

TEST(Scenarios, LegacyFitsTheOldRequirementsOnly) {
  for (const Scenario& s : {gen_long(15), gen_newroom(24), gen_swap()}) {
    const Instance before = derive_bounds(s.before);
    const ValidationReport old = check_configuration(before, s.legacy.config);
    EXPECT_TRUE(old.valid) << s.name << "\n" << to_text(old);
    EXPECT_TRUE(check_legacy(s.legacy).valid) << s.name;
    const ValidationReport now = check_configuration(s.problem.instance, s.legacy.config, &s.legacy);
    EXPECT_TRUE(now.has("C9")) << s.name;
  }
}

TEST(Scenarios, Deterministic) {
  const Scenario a = generate("newroom", 24);
  const Scenario b = generate("newroom", 24);
  EXPECT_EQ(a.after, b.after);
  EXPECT_EQ(a.legacy, b.legacy);
}

TEST(Scenarios, IdsDoNotCollide) {
  for (const Scenario& s : {gen_empty(10), gen_long(45), gen_newroom(36), gen_swap()}) {
    EXPECT_NO_THROW(check_instance(s.problem.instance, &s.problem.legacy)) << s.name;
  }
}

}  // namespace
}  // namespace reconf
