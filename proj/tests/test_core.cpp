#include <gtest/gtest.h>

#include "prefalloc/allocation.hpp"
#include "prefalloc/error.hpp"
#include "prefalloc/evaluate.hpp"
#include "prefalloc/instance.hpp"
#include "prefalloc/io.hpp"
#include "support/naive.hpp"

namespace {

using namespace prefalloc;

constexpr const char* kExample = R"({
  "items": ["a", "b", "c"],
  "agents": [
    {"id": "1", "items": ["a", "b", "c"]},
    {"id": "2", "items": ["b"]},
    {"id": "3", "items": ["c"]}
  ]
})";

Instance chain_instance() {
  return parse_instance(R"({"items": ["x", "y", "z", "w"],
    "agents": [{"id": "b", "items": ["x", "y", "z"], "arcs": [["x", "y"], ["y", "z"]]},
               {"id": "a", "items": ["z", "w"], "arcs": [["w", "z"]]}]})")
      .instance;
}

TEST(PreferenceGraph, ReachabilityIsTransitive) {
  const PreferenceGraph g({0, 1, 2, 3}, {{0, 1}, {1, 2}, {0, 3}});
  EXPECT_TRUE(g.precedes(0, 2));
  EXPECT_FALSE(g.precedes(2, 0));
  EXPECT_FALSE(g.precedes(1, 1));
  EXPECT_EQ(g.successors(0), (std::vector<ItemIndex>{1, 2, 3}));
  EXPECT_EQ(g.predecessors(2), (std::vector<ItemIndex>{0, 1}));
  EXPECT_EQ(g.roots(), (std::vector<ItemIndex>{0}));
  const std::vector<ItemIndex> s{1, 3};
  EXPECT_EQ(g.dominated_set(s), (std::vector<ItemIndex>{1, 2, 3}));
  EXPECT_EQ(g.dominated_count(s), 3u);
  EXPECT_EQ(g.out_degree(0), 2u);
  EXPECT_EQ(g.in_degree(2), 1u);
}

TEST(PreferenceGraph, RejectsCyclesLoopsAndForeignEndpoints) {
  EXPECT_THROW(PreferenceGraph({0, 1, 2}, {{0, 1}, {1, 2}, {2, 0}}), DomainError);
  EXPECT_THROW(PreferenceGraph({0, 1}, {{0, 0}}), DomainError);
  EXPECT_THROW(PreferenceGraph({0, 1}, {{0, 5}}), DomainError);
  EXPECT_THROW(PreferenceGraph({0, 1}, {{0, 1}, {0, 1}}), DomainError);
  EXPECT_THROW(PreferenceGraph({0, 0}, {}), DomainError);
}

TEST(Instance, CanonicalOrderAndDesiredBy) {
  const Instance inst = chain_instance();
  ASSERT_EQ(inst.agent_count(), 2u);
  EXPECT_EQ(inst.agent_id(0), "a");
  EXPECT_EQ(inst.agent_id(1), "b");
  EXPECT_EQ(std::vector<std::string>(inst.items().begin(), inst.items().end()),
            (std::vector<std::string>{"w", "x", "y", "z"}));
  const ItemIndex z = *inst.find_item("z");
  EXPECT_EQ(std::vector<AgentIndex>(inst.desired_by(z).begin(), inst.desired_by(z).end()),
            (std::vector<AgentIndex>{0, 1}));
  EXPECT_EQ(inst.total_graph_size(), 5u);
  EXPECT_FALSE(inst.find_item("q").has_value());
}

TEST(Instance, DropsUndesiredItemsWithWarning) {
  const auto parsed = parse_instance(R"({"items": ["a", "b", "lonely"], "agents": [{"id": "1", "items": ["a", "b"]}]})");
  EXPECT_EQ(parsed.instance.item_count(), 2u);
  ASSERT_EQ(parsed.warnings.size(), 1u);
  EXPECT_NE(parsed.warnings[0].find("lonely"), std::string::npos);
}

TEST(Io, SchemaErrorsCarryJsonPointers) {
  const auto position = [](const char* text) {
    try {
      parse_instance(text);
    } catch (const ParseError& e) {
      return e.position();
    }
    return std::string("no error");
  };
  EXPECT_EQ(position(R"({"items": ["a"], "agents": [{"id": "1", "items": ["a", "zz"]}]})"), "/agents/0/items/1");
  EXPECT_EQ(position(R"({"items": ["a", "b"], "agents": [{"id": "1", "items": ["a", "b"],
      "arcs": [["a", "b"], ["b", "a"]]}]})").rfind("/agents/0", 0), 0u);
  EXPECT_EQ(position(R"({"items": ["a"], "agents": [{"id": "1", "items": ["a"]}, {"id": "1", "items": []}]})"),
            "/agents/1/id");
  EXPECT_EQ(position(R"({"items": ["a", "a"], "agents": []})"), "/items/1");
  EXPECT_EQ(position(R"({"agents": []})"), "/");
  EXPECT_EQ(position(R"({"items": ["a"], "agents": [{"id": "1", "items": ["a"], "arcs": [["a"]]}]})"),
            "/agents/0/arcs/0");
  EXPECT_EQ(position("{\"items\": [").rfind("byte ", 0), 0u);
}

TEST(Io, SerializationRoundTripsCanonically) {
  const Instance inst = chain_instance();
  const std::string text = serialize_instance(inst);
  const Instance again = parse_instance(text).instance;
  EXPECT_EQ(serialize_instance(again), text);
  EXPECT_EQ(text.back(), '\n');
}

TEST(Io, AllocationRoundTrip) {
  const Instance inst = parse_instance(kExample).instance;
  const auto named = parse_allocation(R"({"allocation": {"1": ["a"], "2": ["b"], "3": ["c"]}})");
  const Allocation alloc = resolve_allocation(inst, named);
  const Allocation again = resolve_allocation(inst, parse_allocation(serialize_allocation(inst, alloc)));
  EXPECT_EQ(alloc, again);
  EXPECT_THROW(parse_allocation(R"({"allocation": {"1": "a"}})"), ParseError);
  EXPECT_THROW(parse_allocation(R"({"bundles": {}})"), ParseError);
}

TEST(Evaluate, WorkedExampleProfiles) {
  const Instance inst = parse_instance(kExample).instance;
  const Allocation one_each =
      resolve_allocation(inst, parse_allocation(R"({"allocation": {"1": ["a"], "2": ["b"], "3": ["c"]}})"));
  const auto p = profile(inst, one_each);
  EXPECT_EQ(p.values, (std::vector<std::size_t>{2, 0, 0}));
  EXPECT_EQ(p.sum(), 2u);
  EXPECT_EQ(p.max(), 2u);

  const Allocation empty(inst.agent_count());
  EXPECT_EQ(objective_value(inst, empty, Objective::Sum), static_cast<std::int64_t>(inst.total_graph_size()));
}

TEST(Evaluate, MinimizeKeepsProfile) {
  const Instance inst = chain_instance();
  Allocation alloc(inst.agent_count());
  const AgentIndex b = *inst.find_agent("b");
  alloc.assign(b, *inst.find_item("x"));
  alloc.assign(b, *inst.find_item("z"));
  EXPECT_FALSE(is_minimal(inst, alloc));
  const Allocation small = minimize(inst, alloc);
  EXPECT_TRUE(is_minimal(inst, small));
  EXPECT_EQ(profile(inst, small), profile(inst, alloc));
  EXPECT_EQ(small.bundle(b).size(), 1u);
}

TEST(Evaluate, EnumerationSize) {
  const Instance inst = chain_instance();
  // w:1 agent, x:1, y:1, z:2 -> 2 * 2 * 2 * 3
  EXPECT_EQ(enumeration_size(inst), 24u);
}

TEST(Evaluate, MatchesIndependentDfsOnRandomAllocations) {
  gen::Rng rng(11);
  for (int round = 0; round < 200; ++round) {
    const Instance inst = naive::random_instance(gen::RandomClass::Dag, 8, 4, rng);
    Allocation alloc(inst.agent_count());
    for (ItemIndex v = 0; v < inst.item_count(); ++v) {
      const auto who = inst.desired_by(v);
      const std::size_t pick = rng.below(who.size() + 1);
      if (pick > 0) alloc.assign(who[pick - 1], v);
    }
    const auto expected = naive::profile_of(inst, alloc);
    EXPECT_EQ(profile(inst, alloc).values, expected);
  }
}

TEST(Validation, ReportsEveryViolation) {
  const Instance inst = parse_instance(kExample).instance;
  const auto named = parse_allocation(
      R"({"allocation": {"1": ["b", "zz"], "2": ["b"], "3": ["a"], "9": []}})");
  const auto violations = validate_allocation(inst, named);
  const auto has = [&](Violation::Kind kind) {
    return std::any_of(violations.begin(), violations.end(), [&](const Violation& v) { return v.kind == kind; });
  };
  EXPECT_TRUE(has(Violation::Kind::Overlap));
  EXPECT_TRUE(has(Violation::Kind::UnknownItem));
  EXPECT_TRUE(has(Violation::Kind::IrrelevantItem));
  EXPECT_TRUE(has(Violation::Kind::UnknownAgent));
  EXPECT_THROW(resolve_allocation(inst, named), ValidationError);
}

TEST(Validation, LenientDropsIrrelevantItems) {
  const Instance inst = parse_instance(kExample).instance;
  const auto named = parse_allocation(R"({"allocation": {"2": ["b", "a"]}})");
  std::vector<std::string> warnings;
  const Allocation alloc = resolve_allocation(inst, named, true, &warnings);
  EXPECT_EQ(alloc.bundle(*inst.find_agent("2")).size(), 1u);
  EXPECT_EQ(warnings.size(), 1u);
}

}  // namespace
