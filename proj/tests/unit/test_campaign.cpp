#include <gtest/gtest.h>

#include <set>

#include "lieder/campaign.hpp"

using namespace lieder;

namespace {

TEST(Suite, NamesRoundTrip) {
  for (auto s : {Suite::Solvability, Suite::Degree, Suite::PowerImage, Suite::Key}) {
    EXPECT_EQ(parse_suite(to_string(s)), s);
  }
  EXPECT_THROW(parse_suite("lemma2"), InvalidParameter);
}

TEST(InstanceSeed, SpreadsIndices) {
  std::set<std::uint64_t> seen;
  for (std::size_t i = 0; i < 1000; ++i) seen.insert(instance_seed(7, i));
  EXPECT_EQ(seen.size(), 1000u);
  EXPECT_NE(instance_seed(7, 0), instance_seed(8, 0));
}

TEST(Campaign, FieldRestrictions) {
  CampaignOptions o;
  o.count = 1;
  o.suite = Suite::Degree;
  o.field = FieldSpec::prime(5);
  EXPECT_THROW(run_campaign(o), WrongCharacteristic);
  o.suite = Suite::Solvability;
  o.field = FieldSpec::prime(2);
  EXPECT_THROW(run_campaign(o), InvalidParameter);
}

TEST(Campaign, SolvabilityOverGFpRespectsDepth) {
  CampaignOptions o;
  o.count = 40;
  o.field = FieldSpec::prime(5);
  const auto r = run_campaign(o);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.applicable, 40u);
  for (const auto& rec : r.records) EXPECT_LE(rec.ideal_length, 2u);
}

TEST(Campaign, KeySuiteMarksDivisibleCasesInapplicable) {
  CampaignOptions o;
  o.suite = Suite::Key;
  o.count = 30;
  o.field = FieldSpec::prime(3);  // 3 | C(4,2) = 6 but 3 does not divide C(2,1) or C(8,4) = 70
  const auto r = run_campaign(o);
  bool saw_excluded = false;
  for (const auto& rec : r.records) {
    for (std::size_t i = 0; i < rec.observations.size(); ++i) {
      EXPECT_EQ(rec.observations[i].applicable, i + 1 != 2) << rec.description;
      saw_excluded = saw_excluded || i + 1 == 2;
    }
  }
  EXPECT_TRUE(saw_excluded);
  EXPECT_TRUE(r.ok());
}

TEST(Campaign, SameSeedSameRecords) {
  for (auto suite : {Suite::Solvability, Suite::Degree, Suite::PowerImage, Suite::Key}) {
    CampaignOptions o;
    o.suite = suite;
    o.seed = 99;
    o.count = 15;
    const auto a = run_campaign(o);
    const auto b = run_campaign(o);
    ASSERT_EQ(a.records.size(), b.records.size());
    for (std::size_t i = 0; i < a.records.size(); ++i) {
      EXPECT_EQ(a.records[i].description, b.records[i].description);
      ASSERT_EQ(a.records[i].observations.size(), b.records[i].observations.size());
      for (std::size_t j = 0; j < a.records[i].observations.size(); ++j) {
        EXPECT_EQ(a.records[i].observations[j].detail, b.records[i].observations[j].detail);
      }
    }
    EXPECT_TRUE(a.ok()) << to_string(suite);
  }
}

}  // namespace
