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

#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cliquenet/errors.hpp"
#include "cliquenet/graph.hpp"
#include "cliquenet/random.hpp"

namespace cliquenet {

/// G(N, M) Erdos-Renyi parameters: exactly `edges` edges on `n` nodes.
struct ErConfig {
  std::size_t n = 0;
  std::size_t edges = 0;
  std::uint64_t seed = 0;

  /// M = round(n <k> / 2).
  static ErConfig matched(std::size_t n, double mean_degree, std::uint64_t seed) {
    return {n, static_cast<std::size_t>(std::llround(static_cast<double>(n) * mean_degree / 2.0)),
            seed};
  }

  std::size_t max_edges() const { return n < 2 ? 0 : n * (n - 1) / 2; }

  void validate() const {
    if (edges > max_edges()) {
      throw ConfigError("ER: " + std::to_string(edges) + " edges exceed n(n-1)/2 = " +
                        std::to_string(max_edges()));
    }
  }

  std::string provenance() const {
    return "model=er n=" + std::to_string(n) + " m_edges=" + std::to_string(edges) +
           " seed=" + std::to_string(seed);
  }
};

/// Uniform draw from G(N, M). Pairs are sampled by rejection; above half
/// density the complement is sampled instead so rejection stays cheap.
inline Graph er_random_graph(const ErConfig& cfg) {
  cfg.validate();
  Rng rng(cfg.seed);
  const std::size_t total = cfg.max_edges();
  const bool complement = cfg.edges > total / 2;
  const std::size_t want = complement ? total - cfg.edges : cfg.edges;

  Graph drawn(cfg.n);
  while (drawn.edge_count() < want) {
    const auto u = static_cast<NodeId>(uniform_index(rng, cfg.n));
    const auto v = static_cast<NodeId>(uniform_index(rng, cfg.n));
    if (u != v) drawn.add_edge_if_absent(u, v);
  }
  if (!complement) return drawn;

  Graph g(cfg.n);
  for (NodeId u = 0; u < cfg.n; ++u) {
    for (NodeId v = u + 1; v < cfg.n; ++v) {
      if (!drawn.has_edge(u, v)) g.add_edge_if_absent(u, v);
    }
  }
  return g;
}

}  // namespace cliquenet
