#include <gtest/gtest.h>

#include "prefalloc/error.hpp"
#include "prefalloc/io.hpp"
#include "prefalloc/poly/directed_matchings.hpp"
#include "prefalloc/poly/paths.hpp"
#include "prefalloc/poly/star_forests.hpp"
#include "prefalloc/poly/two_matchings.hpp"
#include "support/naive.hpp"

namespace {

using namespace prefalloc;
using gen::RandomClass;

void expect_consistent(const Instance& inst, const poly::Solution& s, Objective objective) {
  EXPECT_TRUE(validate_allocation(inst, s.allocation).empty());
  EXPECT_EQ(objective_value(inst, s.allocation, objective), s.value);
}

TEST(DirectedMatchings, MatchesNaiveOptimum) {
  gen::Rng rng(41);
  for (int round = 0; round < 150; ++round) {
    const Instance inst = naive::random_instance(RandomClass::Matching, 8, 3, rng);
    const auto s = poly::minsum_directed_matchings(inst);
    expect_consistent(inst, s, Objective::Sum);
    EXPECT_EQ(s.value, naive::optimum(inst, Objective::Sum).value) << serialize_instance(inst);
  }
}

TEST(DirectedMatchings, TraceAccounting) {
  const Instance inst = parse_instance(R"({"items": ["a", "b", "c"], "agents": [
      {"id": "1", "items": ["a", "b"], "arcs": [["a", "b"]]},
      {"id": "2", "items": ["a", "c"], "arcs": [["c", "a"]]}]})")
                            .instance;
  const auto t = poly::minsum_directed_matchings_trace(inst);
  EXPECT_EQ(t.arc_vertices, 2u);
  EXPECT_EQ(t.solution.value, 0);
  EXPECT_EQ(t.solution.value,
            static_cast<std::int64_t>(inst.total_graph_size()) -
                (t.matching_weight - 2 * static_cast<std::int64_t>(inst.item_count()) *
                                         static_cast<std::int64_t>(t.arc_vertices_matched)));
}

TEST(DirectedMatchings, RejectsOtherClasses) {
  const Instance inst = parse_instance(R"({"items": ["a", "b", "c"], "agents": [
      {"id": "1", "items": ["a", "b", "c"], "arcs": [["a", "b"], ["b", "c"]]}]})")
                            .instance;
  EXPECT_THROW(poly::minsum_directed_matchings(inst), DomainError);
}

TEST(Paths, CostMatrixShape) {
  const Instance inst = parse_instance(R"({"items": ["a", "b", "c"], "agents": [
      {"id": "1", "items": ["a", "b", "c"], "arcs": [["a", "b"], ["b", "c"]]},
      {"id": "2", "items": ["c"]}]})")
                            .instance;
  const auto m = poly::path_cost_matrix(inst, {false});
  ASSERT_EQ(m.size(), 2u);
  ASSERT_EQ(m[0].size(), 5u);
  EXPECT_EQ(m[0], (std::vector<std::int64_t>{0, 1, 2, 3, 3}));
  EXPECT_EQ(m[1], (std::vector<std::int64_t>{1, 1, 0, 1, 1}));
}

TEST(Paths, SumAndMaxMatchNaive) {
  gen::Rng rng(42);
  for (int round = 0; round < 150; ++round) {
    const Instance inst = naive::random_instance(RandomClass::Path, 8, 4, rng);
    const auto sum = poly::minsum_paths(inst);
    const auto max = poly::minmax_paths(inst);
    expect_consistent(inst, sum, Objective::Sum);
    expect_consistent(inst, max, Objective::Max);
    EXPECT_EQ(sum.value, naive::optimum(inst, Objective::Sum).value);
    EXPECT_EQ(max.value, naive::optimum(inst, Objective::Max).value);
    EXPECT_EQ(poly::minsum_paths(inst, {false}).value, sum.value);
  }
}

TEST(Paths, TruncationKeepsOptima) {
  gen::Rng rng(80);
  poly::PathOptions full;
  full.truncate = false;
  for (int round = 0; round < 100; ++round) {
    const Instance inst = naive::random_instance(RandomClass::Path, 12, 5, rng);
    EXPECT_EQ(poly::minsum_paths(inst).value, poly::minsum_paths(inst, full).value);
    EXPECT_EQ(poly::minmax_paths(inst).value, poly::minmax_paths(inst, full).value);
  }
}

TEST(Paths, DisjointPathsMatchNaive) {
  gen::Rng rng(43);
  for (int round = 0; round < 150; ++round) {
    const Instance inst = naive::random_instance(RandomClass::DisjointPaths, 7, 3, rng);
    const auto s = poly::minsum_disjoint_paths(inst);
    expect_consistent(inst, s, Objective::Sum);
    EXPECT_EQ(s.value, naive::optimum(inst, Objective::Sum).value) << serialize_instance(inst);
  }
}

TEST(TwoMatchings, ProfilesAndValueMatchNaive) {
  gen::Rng rng(44);
  for (int round = 0; round < 120; ++round) {
    const Instance inst = naive::random_instance(RandomClass::Matching, 8, 2, rng, 2);
    const auto s = poly::minmax_two_matchings(inst);
    std::set<naive::Profile> got;
    for (const auto& [a, b] : s.profiles) got.insert({static_cast<std::size_t>(a), static_cast<std::size_t>(b)});
    EXPECT_EQ(got, naive::profiles(inst)) << serialize_instance(inst);
    EXPECT_EQ(s.value, naive::optimum(inst, Objective::Max).value);
    EXPECT_EQ(objective_value(inst, s.allocation, Objective::Max), s.value);
    const std::size_t n = inst.item_count();
    EXPECT_LE(s.profiles.size(), (n + 1) * (n + 1));
  }
}

TEST(TwoMatchings, Sumset) {
  const poly::ProfileSet a{{0, 1}, {1, 0}};
  const poly::ProfileSet b{{0, 0}, {2, 2}};
  EXPECT_EQ(poly::sumset(a, b), (poly::ProfileSet{{0, 1}, {1, 0}, {2, 3}, {3, 2}}));
  EXPECT_TRUE(poly::sumset(a, {}).empty());
}

TEST(StarForests, MatchesNaiveAndPreassignmentIsIdempotent) {
  gen::Rng rng(45);
  for (int round = 0; round < 150; ++round) {
    const Instance inst = naive::random_instance(RandomClass::StarForest, 8, 2, rng, 2);
    const auto s = poly::minsum_two_star_forests(inst);
    expect_consistent(inst, s, Objective::Sum);
    EXPECT_EQ(s.value, naive::optimum(inst, Objective::Sum).value) << serialize_instance(inst);
    const auto report = poly::preassign_two_star_forests(inst);
    EXPECT_EQ(poly::apply_preassignment_rules(inst, report.assigned), report.assigned);
  }
}

TEST(StarForests, MarginalWeightCountsOnlyNewlyDominatedItems) {
  // v is a root for agent 1 and isolated for agent 2; u is a leaf for 1 and
  // a root for 2.
  const Instance inst = parse_instance(R"({"items": ["u", "v", "y"], "agents": [
      {"id": "1", "items": ["u", "v"], "arcs": [["v", "u"]]},
      {"id": "2", "items": ["u", "v", "y"], "arcs": [["u", "y"]]}]})")
                            .instance;
  EXPECT_EQ(poly::minsum_two_star_forests(inst).value, naive::optimum(inst, Objective::Sum).value);
}

TEST(StarForests, RejectsThreeAgents) {
  gen::Rng rng(46);
  gen::RandomOptions options;
  options.agents = 3;
  EXPECT_THROW(poly::minsum_two_star_forests(gen::random_instance(RandomClass::StarForest, options, rng)),
               DomainError);
}

}  // namespace
