#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "prefalloc/classify.hpp"
#include "prefalloc/error.hpp"
#include "prefalloc/exact.hpp"
#include "prefalloc/reductions/matchings.hpp"
#include "prefalloc/reductions/out_stars.hpp"
#include "prefalloc/reductions/out_trees.hpp"
#include "prefalloc/reductions/sources.hpp"
#include "prefalloc/reductions/two_agent_sat.hpp"
#include "prefalloc/reductions/two_path_sat.hpp"
#include "support/naive.hpp"

namespace {

using namespace prefalloc;
using namespace prefalloc::reductions;

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::size_t components(const PreferenceGraph& g) {
  return g.roots().size();
}

const Cnf3Formula kSampleFormula = parse_dimacs("p cnf 4 2\n1 -3 -4 0\n-1 2 -4 0\n");

TEST(Sources, X3CParsingAndValidation) {
  const auto x = parse_x3c(R"({"X": ["a", "b", "c"], "C": [["a", "b", "c"], ["a", "b", "c"], ["c", "b", "a"]]})");
  EXPECT_EQ(x.sets.size(), 3u);
  EXPECT_TRUE(is_exact_cover(x, {1}));
  EXPECT_FALSE(is_exact_cover(x, {0, 1}));
  EXPECT_EQ(parse_x3c(serialize_x3c(x)).sets, x.sets);
  EXPECT_THROW(parse_x3c(R"({"X": ["a", "b", "c"], "C": [["a", "b", "c"]]})"), DomainError);
  EXPECT_THROW(parse_x3c(R"({"X": ["a", "b", "c"], "C": [["a", "b"]]})"), ParseError);
  EXPECT_THROW(parse_x3c(R"({"X": ["a", "b", "c"], "C": [["a", "a", "c"], ["a", "b", "c"], ["a", "b", "c"]]})"),
               DomainError);
}

TEST(Sources, DimacsParsing) {
  EXPECT_EQ(kSampleFormula.variables, 4u);
  ASSERT_EQ(kSampleFormula.clauses.size(), 2u);
  EXPECT_EQ(kSampleFormula.clauses[0][1], (Literal{3, true}));
  EXPECT_EQ(parse_dimacs(serialize_dimacs(kSampleFormula)).clauses, kSampleFormula.clauses);
  const auto line_of = [](const char* text) {
    try {
      parse_dimacs(text);
    } catch (const ParseError& e) {
      return e.position();
    }
    return std::string("no error");
  };
  EXPECT_EQ(line_of("p cnf 3 1\n1 2 0\n"), "line 2");
  EXPECT_EQ(line_of("p cnf 3 1\n1 2 5 0\n"), "line 2");
  EXPECT_EQ(line_of("1 2 3 0\n"), "line 1");
  EXPECT_EQ(line_of("p cnf 3 2\n1 2 3 0\n"), "line 2");
}

TEST(Sources, TruthTable) {
  const auto beta = brute_force_sat(kSampleFormula);
  ASSERT_TRUE(beta.has_value());
  EXPECT_TRUE(satisfies(kSampleFormula, *beta));
  EXPECT_FALSE(brute_force_sat(parse_dimacs("p cnf 1 2\n1 1 1 0\n-1 -1 -1 0\n")).has_value());
}

TEST(OutStars, CountsForSmallestInstance) {
  gen::Rng rng(61);
  const auto planted = naive::planted_x3c(1, rng);
  const OutStarReduction r(planted.x3c);
  EXPECT_EQ(r.threshold(), 3);
  EXPECT_EQ(r.instance().item_count(), 10u);
  EXPECT_EQ(r.instance().agent_count(), 8u);
  const auto& d1 = r.instance().graph(*r.instance().find_agent("D:1"));
  EXPECT_EQ(d1.size(), 4u);
  EXPECT_EQ(d1.arcs().size(), 3u);
  const auto& c1 = r.instance().graph(*r.instance().find_agent("C:1"));
  EXPECT_EQ(c1.arcs().size(), 3u + 2u);
}

TEST(OutStars, RoundTripAndStructure) {
  gen::Rng rng(62);
  for (int round = 0; round < 20; ++round) {
    const auto planted = naive::planted_x3c(rng.between(1, 4), rng);
    const OutStarReduction r(planted.x3c);
    for (AgentIndex a = 0; a < r.instance().agent_count(); ++a) EXPECT_TRUE(is_out_star(r.instance().graph(a)));
    const Allocation alloc = r.witness_allocation(planted.cover);
    EXPECT_LE(profile(r.instance(), alloc).max(), static_cast<std::size_t>(r.threshold()));
    EXPECT_TRUE(is_exact_cover(planted.x3c, r.witness_extract(alloc)));
  }
}

TEST(OutStars, EquivalenceOnSmallestInstance) {
  gen::Rng rng(63);
  const auto planted = naive::planted_x3c(1, rng);
  const OutStarReduction r(planted.x3c);
  const auto yes = exact::decide(r.instance(), Objective::Max, r.threshold());
  ASSERT_TRUE(yes.has_value());
  EXPECT_TRUE(is_exact_cover(planted.x3c, r.witness_extract(*yes)));
}

TEST(OutTrees, CountsAndSpanning) {
  gen::Rng rng(64);
  const auto planted = naive::planted_x3c(1, rng);
  const OutTreeReduction r(planted.x3c);
  EXPECT_EQ(r.threshold(), 20);
  EXPECT_EQ(r.instance().agent_count(), 62u);
  EXPECT_EQ(r.instance().agent_count(), 6u * 9u + 2u * 3u + 2u);
  for (AgentIndex a = 0; a < r.instance().agent_count(); ++a) {
    EXPECT_TRUE(is_out_tree(r.instance().graph(a))) << r.instance().agent_id(a);
    EXPECT_EQ(r.instance().graph(a).size(), r.instance().item_count()) << r.instance().agent_id(a);
  }
}

TEST(OutTrees, RoundTrip) {
  gen::Rng rng(65);
  for (int round = 0; round < 6; ++round) {
    const auto planted = naive::planted_x3c(rng.between(1, 2), rng);
    const OutTreeReduction r(planted.x3c);
    const Allocation alloc = r.witness_allocation(planted.cover);
    EXPECT_LE(profile(r.instance(), alloc).sum(), static_cast<std::size_t>(r.threshold()));
    EXPECT_TRUE(is_exact_cover(planted.x3c, r.witness_extract(alloc)));
    EXPECT_THROW(r.witness_extract(Allocation(r.instance().agent_count())), DomainError);
  }
}

TEST(TwoAgentSat, SampleFormula) {
  const TwoAgentSatReduction r(kSampleFormula);
  const Instance& inst = r.instance();
  EXPECT_EQ(inst.item_count(), 14u);
  EXPECT_EQ(inst.graph(0).arcs().size(), 6u);
  EXPECT_EQ(inst.graph(1).arcs().size(), 8u);
  EXPECT_EQ(inst.graph(0).size(), inst.item_count());
  EXPECT_EQ(inst.graph(1).size(), inst.item_count());
  EXPECT_EQ(r.threshold(Objective::Sum), 8);
  EXPECT_EQ(r.threshold(Objective::Max), 4);
  const auto beta = *brute_force_sat(kSampleFormula);
  const Allocation alloc = r.witness_allocation(beta);
  EXPECT_EQ(profile(inst, alloc).values, (std::vector<std::size_t>{4, 4}));
}

TEST(TwoAgentSat, RoundTripOnPlantedFormulas) {
  gen::Rng rng(66);
  for (int round = 0; round < 30; ++round) {
    const auto planted = naive::planted_sat(rng.between(3, 8), rng.between(1, 10), rng);
    const TwoAgentSatReduction r(planted.formula);
    const Allocation alloc = r.witness_allocation(planted.assignment);
    const auto n = planted.formula.variables;
    EXPECT_EQ(profile(r.instance(), alloc).values, (std::vector<std::size_t>{n, n}));
    EXPECT_TRUE(satisfies(planted.formula, r.witness_extract(alloc)));
    EXPECT_TRUE(satisfies(planted.formula, r.witness_extract(alloc, Objective::Max)));
  }
}

TEST(TwoAgentSat, CorpusEquivalence) {
  for (const auto& entry : std::filesystem::directory_iterator(std::filesystem::path(PREFALLOC_TEST_DATA) / "cnf")) {
    const Cnf3Formula f = parse_dimacs(slurp(entry.path()));
    const bool labelled_sat = entry.path().filename().string().rfind("sat_", 0) == 0;
    EXPECT_EQ(brute_force_sat(f).has_value(), labelled_sat) << entry.path();
    const TwoAgentSatReduction r(f);
    const auto yes = exact::decide(r.instance(), Objective::Sum, r.threshold(Objective::Sum));
    EXPECT_EQ(yes.has_value(), labelled_sat) << entry.path();
    if (yes) {
      EXPECT_TRUE(satisfies(f, r.witness_extract(*yes)));
    }
  }
}

TEST(Matchings, CountsAndStructure) {
  gen::Rng rng(67);
  const auto planted = naive::planted_x3c(2, rng);
  const MatchingReduction r(planted.x3c);
  EXPECT_EQ(r.threshold(), 8);
  EXPECT_EQ(r.threshold() % 2, 0);
  EXPECT_EQ(r.instance().agent_count(), 22u);
  for (AgentIndex a = 0; a < r.instance().agent_count(); ++a) {
    EXPECT_TRUE(is_directed_matching(r.instance().graph(a))) << r.instance().agent_id(a);
  }
  EXPECT_THROW(MatchingReduction(naive::planted_x3c(1, rng).x3c), DomainError);
}

TEST(Matchings, RoundTrip) {
  gen::Rng rng(68);
  for (int round = 0; round < 20; ++round) {
    const auto planted = naive::planted_x3c(rng.between(2, 5), rng);
    const MatchingReduction r(planted.x3c);
    const Allocation alloc = r.witness_allocation(planted.cover);
    EXPECT_LE(profile(r.instance(), alloc).max(), static_cast<std::size_t>(r.threshold()));
    EXPECT_TRUE(is_exact_cover(planted.x3c, r.witness_extract(alloc)));
  }
}

TEST(TwoPathSat, CountsAndStructure) {
  gen::Rng rng(69);
  const auto planted = naive::planted_sat(4, 3, rng);
  const TwoPathSatReduction r(planted.formula);
  EXPECT_EQ(r.instance().item_count(), 3u + 3u * 4u * 3u);
  EXPECT_EQ(r.instance().agent_count(), 3u + 4u * 3u + 3u);
  for (AgentIndex a = 0; a < r.instance().agent_count(); ++a) {
    const auto& g = r.instance().graph(a);
    EXPECT_TRUE(is_disjoint_paths(g));
    EXPECT_LE(components(g), 2u);
    EXPECT_LE(g.size(), 5u);
  }
  EXPECT_THROW(TwoPathSatReduction(parse_dimacs("p cnf 3 2\n1 1 2 0\n1 2 3 0\n")), DomainError);
  EXPECT_THROW(TwoPathSatReduction(parse_dimacs("p cnf 3 1\n1 2 3 0\n")), DomainError);
}

TEST(TwoPathSat, RoundTrip) {
  gen::Rng rng(70);
  for (int round = 0; round < 30; ++round) {
    const auto planted = naive::planted_sat(rng.between(3, 6), rng.between(2, 8), rng);
    const TwoPathSatReduction r(planted.formula);
    const Allocation alloc = r.witness_allocation(planted.assignment);
    EXPECT_LE(profile(r.instance(), alloc).max(), 2u);
    EXPECT_TRUE(satisfies(planted.formula, r.witness_extract(alloc)));
  }
}

TEST(Witnesses, InvalidSourceWitnessIsRejected) {
  gen::Rng rng(71);
  const auto planted = naive::planted_x3c(2, rng);
  EXPECT_THROW(OutStarReduction(planted.x3c).witness_allocation({}), DomainError);
  const TwoAgentSatReduction r(parse_dimacs("p cnf 3 1\n1 2 3 0\n"));
  EXPECT_THROW(r.witness_allocation({false, false, false}), DomainError);
}

}  // namespace
