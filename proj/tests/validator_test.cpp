#include <gtest/gtest.h>

#include "reconf/validator.hpp"
#include "mutants.hpp"

namespace reconf {
namespace {

using namespace testing;

TEST(Validator, HandSolutionIsValid) {
  const auto h = house();
  const ValidationReport r = check_configuration(h.instance, h.solution);
  EXPECT_TRUE(r.valid) << to_text(r);
}

TEST(Validator, AlteredHouseIsValid) {
  const ReconfigProblem p = house().reconf;
  const ValidationReport r = check_reconfiguration(p, altered(), make_actions(p, altered()));
  EXPECT_TRUE(r.valid) << to_text(r);
}

TEST(Validator, StaleStateBreaksPlacementAndHeight) {
  const ValidationReport r = check_config(house().stale);
  EXPECT_FALSE(r.valid);
  EXPECT_TRUE(r.has("C1"));
  EXPECT_TRUE(r.has("C9"));
  EXPECT_FALSE(r.has("C2"));
}

TEST(Validator, LegacyIsValidForTheOldRequirements) {
  const auto h = house();
  const ReconfigProblem& p = h.reconf;
  EXPECT_TRUE(check_configuration(h.instance, p.legacy.config).valid);
  EXPECT_TRUE(check_legacy(p.legacy).valid);
}

TEST(Validator, EveryMutantIsRejectedWithItsCheck) {
  const auto all = mutants();
  EXPECT_EQ(all.size(), 15u);
  for (const Mutant& m : all) {
    const ValidationReport r = m.run();
    EXPECT_FALSE(r.valid) << m.check;
    EXPECT_TRUE(r.has(m.check)) << m.check << "\n" << to_text(r);
  }
}

TEST(Validator, UncoveredLegacyAtomIsAPrecondition) {
  EXPECT_THROW(check_actions([](ActionSet& a) { a.reuse.erase({Pred::Room, 15, 0}); }), PreconditionError);
}

TEST(Validator, HeightChangeNeedsPermission) {
  ReconfigProblem p = house().reconf;
  p.policy.allowHeightChange = false;
  const ValidationReport r = check_reconfiguration(p, altered(), make_actions(p, altered()));
  EXPECT_TRUE(r.has("T2"));
}

TEST(Validator, TooManyCabinets) {
  const auto h = house();
  Instance in = h.instance;
  in.cabinet.upper = 1;
  EXPECT_TRUE(check_configuration(in, h.solution).has("B1"));
}

TEST(Validator, IdentifierOutsideDomain) {
  const auto h = house();
  Configuration c = h.solution;
  c = rename(c, {{10, 40}}, {});
  const ValidationReport r = check_configuration(h.instance, c);
  EXPECT_TRUE(r.has("B2"));
}

TEST(Validator, DanglingRelation) {
  const auto h = house();
  Configuration c = h.solution;
  c.roomToCabinet.insert({17, 9});
  EXPECT_TRUE(check_configuration(h.instance, c).has("S1"));
}

TEST(Validator, ReportText) {
  const ValidationReport r = check_config(house().stale);
  const std::string text = to_text(r);
  EXPECT_NE(text.find("C9\tcabinetTOthing(9,3) thingLong(3)"), std::string::npos) << text;
}

}  // namespace
}  // namespace reconf
