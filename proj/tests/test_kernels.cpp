#include <gtest/gtest.h>

#include "prefalloc/error.hpp"
#include "prefalloc/kernels/assignment.hpp"
#include "prefalloc/kernels/flow.hpp"
#include "prefalloc/kernels/independent_set.hpp"
#include "prefalloc/random.hpp"
#include "support/naive.hpp"

namespace {

using namespace prefalloc;
using namespace prefalloc::kernels;

CostMatrix random_matrix(gen::Rng& rng, std::size_t max_side, std::int64_t max_cost) {
  const std::size_t rows = rng.between(1, max_side);
  const std::size_t cols = rng.between(1, max_side);
  CostMatrix m(rows, std::vector<std::int64_t>(cols));
  for (auto& row : m) {
    for (auto& c : row) c = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(max_cost) + 1));
  }
  return m;
}

FlowNetwork random_network(gen::Rng& rng, std::size_t vertices, std::size_t arcs, std::int64_t cap) {
  FlowNetwork net;
  net.vertex_count = vertices;
  net.source = 0;
  net.sink = vertices - 1;
  for (std::size_t i = 0; i < arcs; ++i) {
    const std::size_t u = rng.below(vertices);
    std::size_t v = rng.below(vertices);
    if (u == v) v = (v + 1) % vertices;
    std::optional<std::int64_t> upper;
    if (!rng.chance(1, 8)) upper = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(cap) + 1));
    net.add_arc(u, v, upper);
  }
  return net;
}

TEST(Lsap, MatchesPermutationSearch) {
  gen::Rng rng(3);
  for (int round = 0; round < 150; ++round) {
    const CostMatrix m = random_matrix(rng, 6, 9);
    const Assignment a = lsap(m);
    EXPECT_EQ(a.value, naive::lsap(m));
    EXPECT_EQ(naive::assignment_cost(m, a.row_to_col, false), a.value);
  }
}

TEST(Lbap, MatchesPermutationSearch) {
  gen::Rng rng(4);
  for (int round = 0; round < 150; ++round) {
    const CostMatrix m = random_matrix(rng, 6, 20);
    const Assignment a = lbap(m);
    EXPECT_EQ(a.value, naive::lbap(m));
    EXPECT_EQ(naive::assignment_cost(m, a.row_to_col, true), a.value);
  }
}

TEST(Lsap, RejectsEmptyAndRagged) {
  EXPECT_THROW(lsap({}), DomainError);
  EXPECT_THROW(lsap({{1, 2}, {3}}), DomainError);
  EXPECT_THROW(lbap({{}}), DomainError);
}

TEST(Matching, CardinalityOnSmallGraph) {
  // Left 0 -> {0}, left 1 -> {0, 1}, left 2 -> {1}: only two can be matched.
  const auto m = max_cardinality_matching(3, 2, {{0}, {0, 1}, {1}});
  EXPECT_EQ(std::count_if(m.begin(), m.end(), [](std::int64_t c) { return c != kUnassigned; }), 2);
}

TEST(Matching, WeightedPrefersHeavyEdges) {
  WeightedBipartiteGraph g;
  g.left = 2;
  g.right = 2;
  g.edges = {{0, 0, 5}, {0, 1, 3}, {1, 0, 4}, {1, 1, 0}};
  const Matching m = max_weight_matching(g);
  EXPECT_EQ(m.weight, 7);
  EXPECT_EQ(m.edges, (std::vector<std::size_t>{1, 2}));
  g.edges.push_back({0, 0, 1});
  EXPECT_THROW(max_weight_matching(g), DomainError);
  g.edges = {{0, 0, -1}};
  EXPECT_THROW(max_weight_matching(g), DomainError);
}

TEST(Matching, WeightedMatchesBruteForce) {
  gen::Rng rng(5);
  for (int round = 0; round < 100; ++round) {
    WeightedBipartiteGraph g;
    g.left = rng.between(1, 4);
    g.right = rng.between(1, 4);
    for (std::size_t l = 0; l < g.left; ++l) {
      for (std::size_t r = 0; r < g.right; ++r) {
        if (rng.chance(2, 3)) g.edges.push_back({l, r, static_cast<std::int64_t>(rng.below(7))});
      }
    }
    std::int64_t best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.edges.size()); ++mask) {
      std::vector<bool> lu(g.left), ru(g.right);
      std::int64_t w = 0;
      bool ok = true;
      for (std::size_t e = 0; e < g.edges.size() && ok; ++e) {
        if ((mask >> e & 1) == 0) continue;
        const auto& edge = g.edges[e];
        ok = !lu[edge.left] && !ru[edge.right];
        lu[edge.left] = ru[edge.right] = true;
        w += edge.weight;
      }
      if (ok) best = std::max(best, w);
    }
    EXPECT_EQ(max_weight_matching(g).weight, best);
  }
}

TEST(Matching, WeightedAgreesWithPaddedAssignment) {
  gen::Rng rng(9);
  for (int round = 0; round < 60; ++round) {
    WeightedBipartiteGraph g;
    g.left = rng.between(1, 40);
    g.right = rng.between(1, 40);
    CostMatrix padded(g.left, std::vector<std::int64_t>(g.right + g.left, 0));
    for (std::size_t l = 0; l < g.left; ++l) {
      for (std::size_t r = 0; r < g.right; ++r) {
        if (!rng.chance(1, 4)) continue;
        const auto w = static_cast<std::int64_t>(rng.below(50));
        g.edges.push_back({l, r, w});
        padded[l][r] = -w;
      }
    }
    const Matching m = max_weight_matching(g);
    EXPECT_EQ(m.weight, -lsap(padded).value);
    std::int64_t w = 0;
    std::vector<bool> lu(g.left), ru(g.right);
    for (std::size_t e : m.edges) {
      EXPECT_FALSE(lu[g.edges[e].left] || ru[g.edges[e].right]);
      lu[g.edges[e].left] = ru[g.edges[e].right] = true;
      w += g.edges[e].weight;
    }
    EXPECT_EQ(w, m.weight);
  }
}

TEST(MaxFlow, EqualsMinCutOnRandomNetworks) {
  gen::Rng rng(6);
  for (int round = 0; round < 100; ++round) {
    const FlowNetwork net = random_network(rng, rng.between(2, 8), rng.between(1, 14), 6);
    const MaxFlow f = max_flow(net);
    EXPECT_EQ(f.value, f.cut_capacity);
    EXPECT_EQ(f.value, naive::min_cut(net, net.infinity()));
    ASSERT_EQ(f.flow.size(), net.arcs.size());
    for (std::size_t a = 0; a < net.arcs.size(); ++a) {
      EXPECT_GE(f.flow[a], 0);
      EXPECT_LE(f.flow[a], net.arcs[a].upper.value_or(net.infinity()));
    }
  }
}

TEST(MaxFlow, RejectsLowerBounds) {
  FlowNetwork net;
  net.vertex_count = 2;
  net.sink = 1;
  net.add_arc(0, 1, 3, 1);
  EXPECT_THROW(max_flow(net), DomainError);
}

TEST(ProfitFlow, LowerBoundInfeasible) {
  FlowNetwork net;
  net.vertex_count = 3;
  net.sink = 2;
  net.add_arc(0, 1, 1);
  net.add_arc(1, 2, 5, 2);
  EXPECT_FALSE(max_profit_flow(net).has_value());
}

TEST(ProfitFlow, RejectsProfitOnUnboundedArc) {
  FlowNetwork net;
  net.vertex_count = 2;
  net.sink = 1;
  net.add_arc(0, 1, std::nullopt, 0, 1);
  EXPECT_THROW(max_profit_flow(net), DomainError);
}

TEST(ProfitFlow, MatchesEnumerationOnTinyNetworks) {
  gen::Rng rng(7);
  int feasible = 0;
  for (int round = 0; round < 150; ++round) {
    FlowNetwork net;
    net.vertex_count = rng.between(2, 5);
    net.sink = net.vertex_count - 1;
    const std::size_t arcs = rng.between(1, 6);
    for (std::size_t i = 0; i < arcs; ++i) {
      const std::size_t u = rng.below(net.vertex_count);
      std::size_t v = rng.below(net.vertex_count);
      if (u == v) v = (v + 1) % net.vertex_count;
      const std::int64_t upper = static_cast<std::int64_t>(rng.between(0, 2));
      const std::int64_t lower = rng.chance(1, 5) ? std::min<std::int64_t>(1, upper) : 0;
      const std::int64_t profit = static_cast<std::int64_t>(rng.below(4));
      // Unbounded arcs only into the sink keep the enumeration finite.
      if (v == net.sink && rng.chance(1, 4)) {
        net.add_arc(u, v, std::nullopt, lower, 0);
      } else {
        net.add_arc(u, v, upper, lower, profit);
      }
    }
    const auto expected = naive::max_profit(net, net.infinity());
    const auto got = max_profit_flow(net);
    ASSERT_EQ(got.has_value(), expected.has_value());
    if (!got) continue;
    ++feasible;
    EXPECT_EQ(got->profit, *expected);
    std::vector<std::int64_t> balance(net.vertex_count);
    std::int64_t profit = 0;
    for (std::size_t a = 0; a < net.arcs.size(); ++a) {
      EXPECT_GE(got->flow[a], net.arcs[a].lower);
      EXPECT_LE(got->flow[a], net.arcs[a].upper.value_or(net.infinity()));
      balance[net.arcs[a].from] -= got->flow[a];
      balance[net.arcs[a].to] += got->flow[a];
      profit += got->flow[a] * net.arcs[a].profit;
    }
    EXPECT_EQ(profit, got->profit);
    for (std::size_t v = 1; v + 1 < net.vertex_count; ++v) EXPECT_EQ(balance[v], 0);
  }
  EXPECT_GT(feasible, 50);
}

TEST(Mwis, DualityAndOptimality) {
  gen::Rng rng(8);
  for (int round = 0; round < 100; ++round) {
    VertexWeightedGraph g;
    const std::size_t left = rng.between(1, 5);
    const std::size_t right = rng.between(0, 5);
    for (std::size_t v = 0; v < left + right; ++v) g.weights.push_back(static_cast<std::int64_t>(rng.below(10)));
    for (std::size_t l = 0; l < left; ++l) {
      for (std::size_t r = 0; r < right; ++r) {
        if (rng.chance(1, 3)) g.edges.emplace_back(l, left + r);
      }
    }
    const IndependentSet s = bipartite_mwis(g);
    std::int64_t total = 0;
    for (auto w : g.weights) total += w;
    EXPECT_EQ(s.weight + s.cover_weight, total);
    EXPECT_EQ(s.weight, naive::mwis(g));
    EXPECT_TRUE(naive::is_independent(g, s.vertices));
  }
}

TEST(Mwis, RejectsOddCycle) {
  VertexWeightedGraph g;
  g.weights = {1, 1, 1};
  g.edges = {{0, 1}, {1, 2}, {2, 0}};
  EXPECT_THROW(bipartite_mwis(g), DomainError);
}

}  // namespace
