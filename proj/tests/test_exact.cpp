#include <gtest/gtest.h>

#include "prefalloc/error.hpp"
#include "prefalloc/exact.hpp"
#include "prefalloc/io.hpp"
#include "support/naive.hpp"

namespace {

using namespace prefalloc;

std::set<naive::Profile> as_vectors(const std::set<DissatisfactionProfile>& profiles) {
  std::set<naive::Profile> out;
  for (const auto& p : profiles) out.insert(p.values);
  return out;
}

TEST(Oracle, WorkedExample) {
  const Instance inst = parse_instance(R"({"items": ["a", "b", "c"], "agents": [
      {"id": "1", "items": ["a", "b", "c"]}, {"id": "2", "items": ["b"]}, {"id": "3", "items": ["c"]}]})")
                            .instance;
  EXPECT_EQ(exact::brute_force(inst, Objective::Max).value, 1);
  EXPECT_EQ(exact::brute_force(inst, Objective::Sum).value, 2);
  EXPECT_FALSE(exact::decide(inst, Objective::Max, 0).has_value());
  const auto yes = exact::decide(inst, Objective::Max, 1);
  ASSERT_TRUE(yes.has_value());
  EXPECT_LE(objective_value(inst, *yes, Objective::Max), 1);
}

TEST(Oracle, MatchesNaiveEnumeration) {
  gen::Rng rng(31);
  for (int round = 0; round < 120; ++round) {
    const Instance inst = naive::random_instance(gen::RandomClass::Dag, 7, 3, rng);
    for (Objective objective : {Objective::Sum, Objective::Max}) {
      const auto expected = naive::optimum(inst, objective);
      const auto got = exact::brute_force(inst, objective);
      EXPECT_EQ(got.value, expected.value);
      EXPECT_EQ(got.explored, expected.vectors);
      EXPECT_EQ(objective_value(inst, got.witness, objective), got.value);
      EXPECT_TRUE(validate_allocation(inst, got.witness).empty());
    }
  }
}

TEST(Oracle, ThreadCountDoesNotChangeResult) {
  gen::Rng rng(32);
  for (int round = 0; round < 30; ++round) {
    const Instance inst = naive::random_instance(gen::RandomClass::Dag, 8, 3, rng);
    exact::OracleOptions serial;
    exact::OracleOptions parallel;
    parallel.threads = 4;
    for (Objective objective : {Objective::Sum, Objective::Max}) {
      const auto a = exact::brute_force(inst, objective, serial);
      const auto b = exact::brute_force(inst, objective, parallel);
      EXPECT_EQ(a.value, b.value);
      EXPECT_EQ(a.witness, b.witness);
    }
  }
}

TEST(Oracle, MinimalOnlyKeepsOptimum) {
  gen::Rng rng(33);
  for (int round = 0; round < 60; ++round) {
    const Instance inst = naive::random_instance(gen::RandomClass::OutTree, 7, 3, rng);
    exact::OracleOptions minimal;
    minimal.minimal_only = true;
    for (Objective objective : {Objective::Sum, Objective::Max}) {
      EXPECT_EQ(exact::brute_force(inst, objective, minimal).value, exact::brute_force(inst, objective).value);
    }
  }
}

TEST(Oracle, AllProfilesMatchNaive) {
  gen::Rng rng(34);
  for (int round = 0; round < 60; ++round) {
    const Instance inst = naive::random_instance(gen::RandomClass::Dag, 6, 3, rng);
    EXPECT_EQ(as_vectors(exact::all_profiles(inst)), naive::profiles(inst));
  }
}

TEST(Oracle, DecideAgreesWithOptimum) {
  gen::Rng rng(35);
  for (int round = 0; round < 60; ++round) {
    const Instance inst = naive::random_instance(gen::RandomClass::Dag, 6, 3, rng);
    for (Objective objective : {Objective::Sum, Objective::Max}) {
      const std::int64_t best = naive::optimum(inst, objective).value;
      EXPECT_FALSE(exact::decide(inst, objective, best - 1).has_value());
      const auto witness = exact::decide(inst, objective, best);
      ASSERT_TRUE(witness.has_value());
      EXPECT_LE(objective_value(inst, *witness, objective), best);
    }
  }
}

TEST(Oracle, SizeGuard) {
  gen::Rng rng(36);
  gen::RandomOptions options;
  options.items = 12;
  options.agents = 4;
  const Instance inst = gen::random_instance(gen::RandomClass::Dag, options, rng);
  exact::OracleOptions tiny;
  tiny.limit = 10;
  EXPECT_THROW(exact::brute_force(inst, Objective::Sum, tiny), SizeLimitError);
  try {
    exact::check_size(inst, 10);
  } catch (const SizeLimitError& e) {
    EXPECT_EQ(e.limit(), 10u);
    EXPECT_EQ(e.size(), enumeration_size(inst));
  }
}

}  // namespace
