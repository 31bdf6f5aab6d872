#include <gtest/gtest.h>

#include "crlab/paperlab.hpp"
#include "crlab/properties.hpp"

using namespace crlab;

class Seeded : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(Seeded, CollectionConfluenceD4) {
  auto r = collection_confluence(RootSystem::D4(), GetParam(), 150);
  EXPECT_TRUE(r.ok()) << r.failures << " failures, first: " << r.first_failure;
}

TEST_P(Seeded, CollectionConfluenceA3) {
  auto r = collection_confluence(RootSystem::A(3), GetParam(), 150);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}

TEST_P(Seeded, ActionLawD4) {
  auto r = action_law(RootSystem::D4(), GetParam(), 60);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}

TEST_P(Seeded, AdHomomorphismD4) {
  auto r = ad_homomorphism(RootSystem::D4(), GetParam(), 60);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}

TEST_P(Seeded, AdHomomorphismA2) {
  auto r = ad_homomorphism(RootSystem::A(2), GetParam(), 60);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}

TEST_P(Seeded, OracleEquivalence) {
  auto r = oracle_equivalence(GetParam(), 60, 8);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}

INSTANTIATE_TEST_SUITE_P(Seeds, Seeded, ::testing::Values(1, 2, 3, kDefaultSeed));

TEST(Properties, DefaultSeedFullSize) {
  EXPECT_EQ(collection_confluence(RootSystem::D4(), kDefaultSeed, 500).failures, 0);
  EXPECT_EQ(action_law(RootSystem::D4(), kDefaultSeed, 200).failures, 0);
  EXPECT_EQ(ad_homomorphism(RootSystem::D4(), kDefaultSeed, 200).failures, 0);
  EXPECT_EQ(oracle_equivalence(kDefaultSeed, 200, 8).failures, 0);
}

TEST(Properties, SamplerIsReproducible) {
  auto sys = RootSystem::D4();
  auto reg = property_registry();
  WordSampler a(sys, reg, 9), b(sys, reg, 9);
  for (int i = 0; i < 20; ++i) EXPECT_EQ(render(sys, a.word(6)), render(sys, b.word(6)));
}
