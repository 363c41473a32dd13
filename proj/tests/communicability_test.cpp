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
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "cliquenet/baselines.hpp"
#include "cliquenet/communicability.hpp"
#include "cliquenet/generator.hpp"
#include "oracles.hpp"

namespace cliquenet {
namespace {

using testing::complete_graph;
using testing::star_graph;

// High-precision reference values (30-digit arithmetic, truncated).
constexpr double kEstradaK2 = 3.0861612696304875;   // e + 1/e
constexpr double kEstradaK3 = 8.1248149812735349;   // e^2 + 2/e
constexpr double kEstradaK5 = 56.069667797830008;   // e^4 + 4/e
constexpr double kCosh1 = 1.5430806348152438;
constexpr double kSinh1 = 1.1752011936438015;

void expect_spectrum(const Graph& g, const std::vector<double>& expected) {
  const auto s = adjacency_spectrum(g);
  ASSERT_EQ(s.eigenvalues.size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    EXPECT_NEAR(s.eigenvalues[i], expected[i], 1e-12) << i;
  }
}

TEST(SpectrumTest, KnownGraphs) {
  expect_spectrum(complete_graph(2), {1, -1});
  expect_spectrum(complete_graph(5), {4, -1, -1, -1, -1});
  expect_spectrum(star_graph(4), {2, 0, 0, 0, -2});
  expect_spectrum(Graph(1), {0});
}

TEST(SpectrumTest, TraceAndFrobeniusIdentities) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = testing::random_connected_graph(5 + rng() % 60, 0.15, rng);
    const auto s = adjacency_spectrum(g);
    const double n = static_cast<double>(g.node_count());
    EXPECT_NEAR(s.trace(), 0.0, 1e3 * n * std::numeric_limits<double>::epsilon());
    EXPECT_NEAR(s.sum_of_squares(), 2.0 * static_cast<double>(g.edge_count()), 1e-8);
    EXPECT_TRUE(std::is_sorted(s.eigenvalues.rbegin(), s.eigenvalues.rend()));
  }
}

TEST(SpectrumTest, CapacityError) {
  EXPECT_THROW(adjacency_spectrum(Graph(11), false, 10), CapacityError);
  EXPECT_THROW(estrada_series_oracle(Graph(501), 5), CapacityError);
  EXPECT_THROW(adjacency_spectrum(Graph{}), InvalidArgument);
}

TEST(EstradaTest, ClosedForms) {
  EXPECT_DOUBLE_EQ(estrada_index(Graph(1)).ee, 1.0);
  EXPECT_NEAR(estrada_index(complete_graph(2)).ee, kEstradaK2, 1e-14 * kEstradaK2);
  EXPECT_NEAR(estrada_index(complete_graph(3)).ee, kEstradaK3, 1e-14 * kEstradaK3);
  EXPECT_NEAR(estrada_index(complete_graph(5)).ee, kEstradaK5, 1e-13 * kEstradaK5);
}

TEST(EstradaTest, SeriesOracleClosedForms) {
  EXPECT_DOUBLE_EQ(estrada_series_oracle(Graph(1), 1), 1.0);
  EXPECT_DOUBLE_EQ(estrada_series_oracle(Graph(1), 40), 1.0);
  EXPECT_NEAR(estrada_series_oracle(complete_graph(2), 60), kEstradaK2, 1e-12 * kEstradaK2);
  EXPECT_NEAR(estrada_series_oracle(complete_graph(3), 60), kEstradaK3, 1e-12 * kEstradaK3);
  EXPECT_NEAR(estrada_series_oracle(complete_graph(5), 60), kEstradaK5, 1e-12 * kEstradaK5);
  EXPECT_THROW(estrada_series_oracle(Graph(1), 0), InvalidArgument);
}

TEST(EstradaTest, LogBoundsHold) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = testing::random_connected_graph(2 + rng() % 80, 0.1, rng);
    const auto r = estrada_index(g);
    EXPECT_GE(r.log_ee, r.lambda_max);
    EXPECT_LE(r.log_ee, r.lambda_max + std::log(static_cast<double>(g.node_count())) + 1e-12);
  }
}

TEST(EstradaTest, OverflowIsFlaggedNotFatal) {
  SpectralDecomposition s;
  s.eigenvalues = {900.0, 1.0, -3.0};
  const auto r = estrada_index(s);
  EXPECT_TRUE(r.overflow());
  EXPECT_NEAR(r.log_ee, 900.0, 1e-12);
}

TEST(EstradaTest, SpectralMatchesSeriesOnMixedGraphs) {
  std::mt19937_64 rng(8);
  std::vector<Graph> graphs{star_graph(120), testing::path_graph(150), complete_graph(12)};
  graphs.push_back(evolve({5, 2, 1.0, 60, std::nullopt, 1}));
  graphs.push_back(er_random_graph({150, 400, 2}));
  for (int i = 0; i < 5; ++i) graphs.push_back(testing::random_connected_graph(40, 0.1, rng));
  for (const auto& g : graphs) {
    const double spectral = estrada_index(g).ee;
    const double series = estrada_series_oracle(g, 60);
    EXPECT_LE(std::abs(spectral - series) / spectral, 1e-9);
  }
}

TEST(CommunicabilityTest, SmallClosedForms) {
  const auto g2 = communicability_matrix(adjacency_spectrum(complete_graph(2), true));
  EXPECT_NEAR(g2(0, 0), kCosh1, 1e-14);
  EXPECT_NEAR(g2(1, 1), kCosh1, 1e-14);
  EXPECT_NEAR(g2(0, 1), kSinh1, 1e-14);

  const auto g1 = communicability_matrix(adjacency_spectrum(Graph(1), true));
  EXPECT_DOUBLE_EQ(g1(0, 0), 1.0);

  EXPECT_THROW(communicability_matrix(adjacency_spectrum(Graph(1))), InvalidArgument);
}

TEST(CommunicabilityTest, MatchesSeriesAndIsSymmetric) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = testing::random_connected_graph(1 + rng() % 8, 0.35, rng);
    const auto gm = communicability_matrix(adjacency_spectrum(g, true));
    const auto oracle = communicability_series_oracle(g, 60);
    const auto n = static_cast<Eigen::Index>(g.node_count());
    for (Eigen::Index u = 0; u < n; ++u) {
      EXPECT_GE(gm(u, u), 1.0 - 1e-12);
      for (Eigen::Index v = 0; v < n; ++v) {
        ASSERT_EQ(gm(u, v), gm(v, u));
        ASSERT_NEAR(gm(u, v), oracle[u][v], 1e-10);
        if (n > 1) {
          ASSERT_GT(gm(u, v), 0.0);
        }
      }
    }
  }
}

TEST(CommunicabilityTest, TripletOutput) {
  const auto gm = communicability_matrix(adjacency_spectrum(complete_graph(2), true));
  std::ostringstream os;
  write_communicability_triplets(os, gm);
  EXPECT_EQ(os.str(),
            "# communicability nodes=2\n0 0 1.54308063\n0 1 1.17520119\n1 1 1.54308063\n");
  Eigen::MatrixXd big = Eigen::MatrixXd::Identity(201, 201);
  EXPECT_THROW(write_communicability_triplets(os, big), CapacityError);
}

}  // namespace
}  // namespace cliquenet
