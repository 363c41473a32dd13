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

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cliquenet/errors.hpp"
#include "cliquenet/graph.hpp"
#include "cliquenet/random.hpp"

namespace cliquenet {

/// Parameters of a hybrid clique network run.
///
/// Each step glues a fresh clique of size `a` onto `m` existing nodes. With
/// probability `p` those nodes are drawn by degree (preferential attachment),
/// otherwise uniformly. Exactly one of `steps` / `target_nodes` sets the run
/// length.
struct CliqueNetConfig {
  int a = 5;
  int m = 1;
  double p = 0.0;
  std::optional<std::size_t> steps;
  std::optional<std::size_t> target_nodes;
  std::uint64_t seed = 0;

  void validate() const {
    if (a < 3) throw ConfigError("clique size a must be >= 3, got " + std::to_string(a));
    if (m < 1 || m >= a) {
      throw ConfigError("attachment count m must satisfy 1 <= m < a, got m=" +
                        std::to_string(m) + " a=" + std::to_string(a));
    }
    if (!(p >= 0.0 && p <= 1.0)) {
      throw ConfigError("inhomogeneity p must lie in [0,1]");
    }
    if (steps.has_value() == target_nodes.has_value()) {
      throw ConfigError("exactly one of steps / target_nodes must be set");
    }
  }

  /// ceil((N - a) / (a - m)) when driven by a target node count.
  std::size_t step_count() const {
    if (steps) return *steps;
    const auto n = *target_nodes;
    const auto a_ = static_cast<std::size_t>(a);
    const auto grow = static_cast<std::size_t>(a - m);
    return n <= a_ ? 0 : (n - a_ + grow - 1) / grow;
  }

  std::size_t final_node_count() const {
    return static_cast<std::size_t>(a) + step_count() * static_cast<std::size_t>(a - m);
  }

  std::string provenance() const {
    std::ostringstream os;
    os.precision(9);
    os << "a=" << a << " m=" << m << " p=" << p << " steps=" << step_count()
       << " seed=" << seed;
    return os.str();
  }
};

/// Long-run mean degree a(a-1)/(a-m). Exact for m = 1, an upper bound
/// otherwise because attachment nodes that are already adjacent do not gain
/// a second copy of their shared edge.
constexpr double asymptotic_mean_degree_bound(int a, int m) {
  return static_cast<double>(a) * (a - 1) / (a - m);
}

enum class AttachMode { preferential, uniform };

inline const char* to_string(AttachMode mode) {
  return mode == AttachMode::preferential ? "preferential" : "uniform";
}

/// Degree-proportional sampler: every node appears once per incident edge,
/// so a uniform pick from the list is a pick with probability k_i / sum_j k_j.
class EndpointList {
 public:
  EndpointList() = default;

  static EndpointList from_graph(const Graph& g) {
    EndpointList out;
    out.weight_.assign(g.node_count(), 0);
    for (NodeId u = 0; u < g.node_count(); ++u) {
      const auto k = g.degree(u);
      out.ends_.insert(out.ends_.end(), k, u);
      out.weight_[u] = static_cast<std::uint32_t>(k);
      if (k > 0) ++out.positive_;
    }
    return out;
  }

  void add_edge(NodeId u, NodeId v) {
    bump(u);
    bump(v);
    ends_.push_back(u);
    ends_.push_back(v);
  }

  std::size_t total_weight() const noexcept { return ends_.size(); }
  std::size_t positive_nodes() const noexcept { return positive_; }
  std::size_t weight(NodeId u) const { return u < weight_.size() ? weight_[u] : 0; }

  NodeId sample(Rng& rng) const { return ends_[uniform_index(rng, ends_.size())]; }

 private:
  void bump(NodeId u) {
    if (u >= weight_.size()) weight_.resize(u + 1, 0);
    if (weight_[u]++ == 0) ++positive_;
  }

  std::vector<NodeId> ends_;
  std::vector<std::uint32_t> weight_;
  std::size_t positive_ = 0;
};

/// Attachment nodes picked for one step. `pi[j]` is the probability the
/// chosen node `chosen[j]` had at the moment it was drawn, i.e. after the
/// nodes chosen before it were removed from the pool.
struct NodeSelection {
  std::vector<NodeId> chosen;
  std::vector<double> pi;
};

/// Draws `m` distinct nodes. Draws are sequential without replacement; a
/// collision with an already chosen node is rejected and redrawn, which
/// renormalizes over the remaining pool.
inline NodeSelection select_attachment_nodes(const Graph& g, std::size_t m,
                                             AttachMode mode, Rng& rng,
                                             const EndpointList& ends) {
  const std::size_t n = g.node_count();
  if (m > n) {
    throw InvalidArgument("cannot select " + std::to_string(m) + " nodes from " +
                          std::to_string(n));
  }
  NodeSelection sel;
  sel.chosen.reserve(m);
  sel.pi.reserve(m);
  auto taken = [&](NodeId u) {
    return std::find(sel.chosen.begin(), sel.chosen.end(), u) != sel.chosen.end();
  };
  if (mode == AttachMode::preferential) {
    if (ends.total_weight() == 0) {
      throw DegenerateDistribution("preferential draw on a graph with zero total degree");
    }
    if (ends.positive_nodes() < m) {
      throw DegenerateDistribution("fewer than m nodes have positive degree");
    }
    std::size_t removed = 0;
    while (sel.chosen.size() < m) {
      NodeId u = ends.sample(rng);
      if (taken(u)) continue;
      const auto w = ends.weight(u);
      sel.pi.push_back(static_cast<double>(w) /
                       static_cast<double>(ends.total_weight() - removed));
      sel.chosen.push_back(u);
      removed += w;
    }
  } else {
    while (sel.chosen.size() < m) {
      auto u = static_cast<NodeId>(uniform_index(rng, n));
      if (taken(u)) continue;
      sel.pi.push_back(1.0 / static_cast<double>(n - sel.chosen.size()));
      sel.chosen.push_back(u);
    }
  }
  return sel;
}

/// Convenience overload that indexes the degrees of `g` first (O(E)).
inline NodeSelection select_attachment_nodes(const Graph& g, std::size_t m,
                                             AttachMode mode, Rng& rng) {
  if (mode == AttachMode::preferential) {
    return select_attachment_nodes(g, m, mode, rng, EndpointList::from_graph(g));
  }
  return select_attachment_nodes(g, m, mode, rng, EndpointList{});
}

struct AttachmentRecord {
  AttachMode mode = AttachMode::uniform;
  std::vector<NodeId> attachment_nodes;
  std::vector<NodeId> new_nodes;
  std::size_t edges_added = 0;
};

inline Graph initial_clique(const CliqueNetConfig& cfg) {
  cfg.validate();
  Graph g(static_cast<std::size_t>(cfg.a));
  std::vector<NodeId> all(static_cast<std::size_t>(cfg.a));
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<NodeId>(i);
  g.complete_subgraph(all);
  return g;
}

/// A growing clique network: the graph plus its degree sampler, kept in step.
class CliqueNetwork {
 public:
  explicit CliqueNetwork(const CliqueNetConfig& cfg)
      : graph_(initial_clique(cfg)), ends_(EndpointList::from_graph(graph_)) {}

  const Graph& graph() const noexcept { return graph_; }
  const EndpointList& endpoints() const noexcept { return ends_; }
  Graph release() && { return std::move(graph_); }

 private:
  friend AttachmentRecord attach_clique(CliqueNetwork&, const CliqueNetConfig&, Rng&);

  Graph graph_;
  EndpointList ends_;
};

/// One evolution step. The mode is drawn once for the whole clique.
inline AttachmentRecord attach_clique(CliqueNetwork& net, const CliqueNetConfig& cfg,
                                      Rng& rng) {
  if (net.graph_.node_count() == 0) throw InvalidArgument("attach_clique on empty graph");
  const double u = uniform_unit(rng);
  const bool preferential = cfg.p >= 1.0 || (cfg.p > 0.0 && u < cfg.p);

  AttachmentRecord rec;
  rec.mode = preferential ? AttachMode::preferential : AttachMode::uniform;
  auto sel = select_attachment_nodes(net.graph_, static_cast<std::size_t>(cfg.m),
                                     rec.mode, rng, net.ends_);
  rec.attachment_nodes = std::move(sel.chosen);

  std::vector<NodeId> members = rec.attachment_nodes;
  for (int i = 0; i < cfg.a - cfg.m; ++i) {
    NodeId v = net.graph_.add_node();
    rec.new_nodes.push_back(v);
    members.push_back(v);
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (net.graph_.add_edge_if_absent(members[i], members[j])) {
        net.ends_.add_edge(members[i], members[j]);
        ++rec.edges_added;
      }
    }
  }
  return rec;
}

using StepObserver = std::function<void(std::size_t step, const Graph&, const AttachmentRecord&)>;

/// Grows the network from K_a for cfg.step_count() steps. Deterministic in
/// (cfg, cfg.seed). The observer, if any, sees the graph after every step.
inline Graph evolve(const CliqueNetConfig& cfg, const StepObserver& observer = {}) {
  cfg.validate();
  Rng rng(cfg.seed);
  CliqueNetwork net(cfg);
  const auto steps = cfg.step_count();
  for (std::size_t t = 0; t < steps; ++t) {
    auto rec = attach_clique(net, cfg, rng);
    if (observer) observer(t + 1, net.graph(), rec);
  }
  return std::move(net).release();
}

}  // namespace cliquenet
