// Copyright 2026 The cliquenet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <set>
#include <sstream>
#include <vector>

#include <gtest/gtest.h>

#include "cliquenet/generator.hpp"
#include "oracles.hpp"

namespace cliquenet {
namespace {

CliqueNetConfig config(int a, int m, double p, std::size_t steps, std::uint64_t seed = 1) {
  return CliqueNetConfig{a, m, p, steps, std::nullopt, seed};
}

std::string edge_list_text(const Graph& g, const CliqueNetConfig& cfg) {
  std::ostringstream os;
  const std::vector<std::string> comments{cfg.provenance()};
  write_edge_list(os, g, comments);
  return os.str();
}

TEST(ConfigTest, Validation) {
  EXPECT_THROW(config(2, 1, 0.0, 1).validate(), ConfigError);
  EXPECT_THROW(config(5, 0, 0.0, 1).validate(), ConfigError);
  EXPECT_THROW(config(5, 5, 0.0, 1).validate(), ConfigError);
  EXPECT_THROW(config(5, 2, 1.5, 1).validate(), ConfigError);
  EXPECT_THROW(config(5, 2, -0.1, 1).validate(), ConfigError);
  CliqueNetConfig both{5, 2, 0.5, 10, 100, 1};
  EXPECT_THROW(both.validate(), ConfigError);
  CliqueNetConfig neither{5, 2, 0.5, std::nullopt, std::nullopt, 1};
  EXPECT_THROW(neither.validate(), ConfigError);
  EXPECT_NO_THROW(config(3, 2, 1.0, 0).validate());
}

TEST(ConfigTest, StepsFromTargetNodes) {
  CliqueNetConfig cfg{5, 2, 0.0, std::nullopt, 5000, 1};
  EXPECT_EQ(cfg.step_count(), 1665u);
  EXPECT_EQ(cfg.final_node_count(), 5000u);
  cfg.m = 1;
  EXPECT_EQ(cfg.step_count(), 1249u);  // ceil(4995 / 4)
  EXPECT_EQ(cfg.final_node_count(), 5001u);
  cfg.target_nodes = 3;
  EXPECT_EQ(cfg.step_count(), 0u);
}

TEST(ConfigTest, MeanDegreeBound) {
  EXPECT_DOUBLE_EQ(asymptotic_mean_degree_bound(5, 1), 5.0);
  EXPECT_DOUBLE_EQ(asymptotic_mean_degree_bound(5, 2), 20.0 / 3.0);
  EXPECT_DOUBLE_EQ(asymptotic_mean_degree_bound(5, 4), 20.0);
}

TEST(InitialCliqueTest, IsCompleteGraph) {
  auto tri = initial_clique(config(3, 1, 0.0, 0));
  EXPECT_EQ(tri.node_count(), 3u);
  EXPECT_EQ(tri.edge_count(), 3u);
  for (NodeId u = 0; u < 3; ++u) EXPECT_EQ(tri.degree(u), 2u);

  auto k5 = initial_clique(config(5, 2, 0.0, 0));
  EXPECT_EQ(k5.node_count(), 5u);
  EXPECT_EQ(k5.edge_count(), 10u);
  for (NodeId u = 0; u < 5; ++u) EXPECT_EQ(k5.degree(u), 4u);

  EXPECT_THROW(initial_clique(config(2, 1, 0.0, 0)), ConfigError);
}

TEST(SelectionTest, ForcedSelectionReturnsEveryNode) {
  const auto k5 = testing::complete_graph(5);
  for (auto mode : {AttachMode::preferential, AttachMode::uniform}) {
    Rng rng(3);
    auto sel = select_attachment_nodes(k5, 5, mode, rng);
    std::set<NodeId> got(sel.chosen.begin(), sel.chosen.end());
    EXPECT_EQ(got, (std::set<NodeId>{0, 1, 2, 3, 4}));
    ASSERT_EQ(sel.pi.size(), 5u);
    // The last draw is from a pool of one.
    EXPECT_DOUBLE_EQ(sel.pi.back(), 1.0);
  }
}

TEST(SelectionTest, PreferentialIgnoresZeroDegreeNodes) {
  // Degrees (4, 0, 0) cannot occur in a simple 3-node graph, so hand the
  // sampler that weight vector directly.
  Graph h(3);
  EndpointList ends;
  ends.add_edge(0, 0);
  ends.add_edge(0, 0);
  ASSERT_EQ(ends.weight(0), 4u);
  Rng rng(5);
  for (int i = 0; i < 1000; ++i) {
    auto sel = select_attachment_nodes(h, 1, AttachMode::preferential, rng, ends);
    ASSERT_EQ(sel.chosen.front(), 0u);
    EXPECT_DOUBLE_EQ(sel.pi.front(), 1.0);
  }
}

TEST(SelectionTest, Errors) {
  Rng rng(1);
  Graph empty_edges(3);
  EXPECT_THROW(select_attachment_nodes(empty_edges, 1, AttachMode::preferential, rng),
               DegenerateDistribution);
  EXPECT_THROW(select_attachment_nodes(empty_edges, 4, AttachMode::uniform, rng),
               InvalidArgument);
  Graph one_edge(4);
  one_edge.add_edge_if_absent(0, 1);
  EXPECT_THROW(select_attachment_nodes(one_edge, 3, AttachMode::preferential, rng),
               DegenerateDistribution);
  EXPECT_NO_THROW(select_attachment_nodes(empty_edges, 3, AttachMode::uniform, rng));
}

// Star K_{1,4}: Pi(center) = 4 / (4 + 4*1) = 1/2.
TEST(SelectionTest, PreferentialFrequencyMatchesDegreeShare) {
  const auto star = testing::star_graph(4);
  const auto ends = EndpointList::from_graph(star);
  Rng rng(2024);
  constexpr int kDraws = 1'000'000;
  int center = 0;
  for (int i = 0; i < kDraws; ++i) {
    auto sel = select_attachment_nodes(star, 1, AttachMode::preferential, rng, ends);
    if (sel.chosen.front() == 0) ++center;
  }
  EXPECT_NEAR(static_cast<double>(center) / kDraws, 0.5, 0.003);
}

TEST(SelectionTest, UniformFrequencyIsFlat) {
  const auto star = testing::star_graph(4);
  Rng rng(99);
  constexpr int kDraws = 500'000;
  std::vector<int> hits(5, 0);
  for (int i = 0; i < kDraws; ++i) {
    ++hits[select_attachment_nodes(star, 1, AttachMode::uniform, rng, {}).chosen.front()];
  }
  for (int h : hits) EXPECT_NEAR(static_cast<double>(h) / kDraws, 0.2, 0.003);
}

TEST(SelectionTest, ProbabilitiesRenormalizeWithoutReplacement) {
  const auto star = testing::star_graph(4);  // total degree 8
  const auto ends = EndpointList::from_graph(star);
  Rng rng(4);
  for (int i = 0; i < 200; ++i) {
    auto sel = select_attachment_nodes(star, 2, AttachMode::preferential, rng, ends);
    ASSERT_NE(sel.chosen[0], sel.chosen[1]);
    const double w0 = static_cast<double>(star.degree(sel.chosen[0]));
    const double w1 = static_cast<double>(star.degree(sel.chosen[1]));
    EXPECT_DOUBLE_EQ(sel.pi[0], w0 / 8.0);
    EXPECT_DOUBLE_EQ(sel.pi[1], w1 / (8.0 - w0));
  }
}

TEST(AttachTest, TriangleFirstStepGeometry) {
  const auto cfg = config(3, 1, 0.5, 1);
  CliqueNetwork net(cfg);
  Rng rng(8);
  const auto rec = attach_clique(net, cfg, rng);
  const auto& g = net.graph();
  EXPECT_EQ(g.node_count(), 5u);
  EXPECT_EQ(g.edge_count(), 6u);
  ASSERT_EQ(rec.attachment_nodes.size(), 1u);
  EXPECT_EQ(g.degree(rec.attachment_nodes[0]), 4u);
  EXPECT_EQ(rec.new_nodes, (std::vector<NodeId>{3, 4}));
  EXPECT_EQ(rec.edges_added, 3u);
}

TEST(AttachTest, AdjacentAttachmentNodesSuppressOneEdge) {
  // Every pair in K_5 is adjacent, so an m=2 attachment adds 10 - 1 edges.
  const auto cfg = config(5, 2, 0.0, 1);
  CliqueNetwork net(cfg);
  Rng rng(1);
  const auto rec = attach_clique(net, cfg, rng);
  EXPECT_EQ(rec.edges_added, 9u);
  EXPECT_EQ(net.graph().edge_count(), 19u);
  EXPECT_TRUE(net.graph().is_consistent());
}

TEST(AttachTest, SingleAttachmentAlwaysAddsFullClique) {
  const auto cfg = config(5, 1, 0.5, 200);
  CliqueNetwork net(cfg);
  Rng rng(12);
  for (int t = 0; t < 200; ++t) {
    const auto before = net.graph().edge_count();
    attach_clique(net, cfg, rng);
    ASSERT_EQ(net.graph().edge_count(), before + 10);
  }
}

TEST(EvolveTest, NodeCountIdentity) {
  auto g = evolve(config(5, 2, 0.3, 1665, 42));
  EXPECT_EQ(g.node_count(), 5000u);
}

struct EvolveCase {
  int a, m;
  double p;
};

class EvolvePropertyTest : public ::testing::TestWithParam<EvolveCase> {};

// Per-step invariants: N(t), edge bound (tight for m = 1), connectivity,
// minimum degree, sampler consistent with the graph.
TEST_P(EvolvePropertyTest, StepInvariants) {
  const auto [a, m, p] = GetParam();
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const auto cfg = config(a, m, p, 150, seed);
    const std::size_t clique_edges = static_cast<std::size_t>(a * (a - 1) / 2);
    evolve(cfg, [&](std::size_t t, const Graph& g, const AttachmentRecord& rec) {
      ASSERT_EQ(g.node_count(), static_cast<std::size_t>(a) + t * static_cast<std::size_t>(a - m));
      if (m == 1) {
        ASSERT_EQ(g.edge_count(), (t + 1) * clique_edges);
      } else {
        ASSERT_LE(g.edge_count(), (t + 1) * clique_edges);
      }
      ASSERT_EQ(rec.attachment_nodes.size(), static_cast<std::size_t>(m));
      ASSERT_EQ(std::set<NodeId>(rec.attachment_nodes.begin(), rec.attachment_nodes.end()).size(),
                static_cast<std::size_t>(m));
      for (NodeId u : rec.attachment_nodes) ASSERT_LT(u, rec.new_nodes.front());
      if (t % 25 == 0) {
        ASSERT_TRUE(is_connected(g));
        ASSERT_EQ(min_degree(g), static_cast<std::size_t>(a - 1));
        ASSERT_TRUE(g.is_consistent());
      }
    });
  }
}

INSTANTIATE_TEST_SUITE_P(Grid, EvolvePropertyTest,
                         ::testing::Values(EvolveCase{3, 1, 0.0}, EvolveCase{3, 2, 1.0},
                                           EvolveCase{5, 1, 0.5}, EvolveCase{5, 2, 0.0},
                                           EvolveCase{5, 3, 1.0}, EvolveCase{6, 4, 0.7}));

TEST(EvolveTest, DeterministicPerSeed) {
  const auto cfg = config(5, 2, 0.5, 400, 77);
  EXPECT_EQ(edge_list_text(evolve(cfg), cfg), edge_list_text(evolve(cfg), cfg));
  auto other = cfg;
  other.seed = 78;
  EXPECT_NE(edge_list_text(evolve(cfg), cfg), edge_list_text(evolve(other), other));
}

// Mode counts are Binomial(T, p); p = 0 and p = 1 never mix modes.
TEST(EvolveTest, ModeCountsFollowBinomial) {
  for (double p : {0.0, 0.3, 1.0}) {
    const std::size_t steps = 20'000;
    std::size_t preferential = 0;
    evolve(config(3, 1, p, steps, 5), [&](std::size_t, const Graph&, const AttachmentRecord& r) {
      if (r.mode == AttachMode::preferential) ++preferential;
    });
    const double mean = p * steps;
    const double sigma = std::sqrt(steps * p * (1.0 - p));
    EXPECT_LE(std::abs(static_cast<double>(preferential) - mean), 4.0 * sigma + 1e-9) << p;
  }
}

TEST(EvolveTest, MeanDegreeNearTableValue) {
  double sum = 0.0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto g = evolve(config(5, 2, 0.0, 1665, seed));
    sum += 2.0 * static_cast<double>(g.edge_count()) / static_cast<double>(g.node_count());
  }
  EXPECT_NEAR(sum / 10.0, 6.66, 0.05);
}

}  // namespace
}  // namespace cliquenet
