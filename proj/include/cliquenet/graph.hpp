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
#include <cstdio>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cliquenet/errors.hpp"

namespace cliquenet {

using NodeId = std::uint32_t;

/// Simple undirected graph with dense node identifiers 0..N-1.
///
/// Neighbor lists are kept sorted and duplicate free, so edge lookup is a
/// binary search and neighborhoods can be intersected by a linear merge.
/// Mutation is single-writer; a finished graph is safe to share read-only.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t node_count) : adjacency_(node_count) {}

  std::size_t node_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  std::size_t degree(NodeId u) const { return adjacency_.at(u).size(); }

  std::span<const NodeId> neighbors(NodeId u) const {
    return adjacency_.at(u);
  }

  NodeId add_node() {
    adjacency_.emplace_back();
    return static_cast<NodeId>(adjacency_.size() - 1);
  }

  bool has_edge(NodeId u, NodeId v) const {
    check_node(u);
    check_node(v);
    const auto& nu = adjacency_[u];
    return std::binary_search(nu.begin(), nu.end(), v);
  }

  /// Inserts {u, v} unless it is already present. Returns true on insertion.
  bool add_edge_if_absent(NodeId u, NodeId v) {
    check_node(u);
    check_node(v);
    if (u == v) {
      throw InvalidArgument("self-loop on node " + std::to_string(u));
    }
    auto& nu = adjacency_[u];
    auto it = std::lower_bound(nu.begin(), nu.end(), v);
    if (it != nu.end() && *it == v) return false;
    nu.insert(it, v);
    auto& nv = adjacency_[v];
    nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
    ++edge_count_;
    return true;
  }

  /// Connects every pair in `nodes`; returns the number of edges added.
  std::size_t complete_subgraph(std::span<const NodeId> nodes) {
    for (NodeId u : nodes) check_node(u);
    std::vector<NodeId> sorted(nodes.begin(), nodes.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw InvalidArgument("complete_subgraph: duplicate node identifier");
    }
    std::size_t added = 0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      for (std::size_t j = i + 1; j < nodes.size(); ++j) {
        if (add_edge_if_absent(nodes[i], nodes[j])) ++added;
      }
    }
    return added;
  }

  /// Full scan of the structural invariants. Returns false on any violation.
  bool is_consistent() const {
    std::size_t degree_sum = 0;
    for (std::size_t u = 0; u < adjacency_.size(); ++u) {
      const auto& nu = adjacency_[u];
      degree_sum += nu.size();
      for (std::size_t i = 0; i < nu.size(); ++i) {
        NodeId v = nu[i];
        if (v >= adjacency_.size() || v == u) return false;
        if (i > 0 && nu[i - 1] >= v) return false;
        const auto& nv = adjacency_[v];
        if (!std::binary_search(nv.begin(), nv.end(), static_cast<NodeId>(u))) {
          return false;
        }
      }
    }
    return degree_sum == 2 * edge_count_;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_node(NodeId u) const {
    if (u >= adjacency_.size()) {
      throw InvalidArgument("node " + std::to_string(u) + " out of range (N=" +
                            std::to_string(adjacency_.size()) + ")");
    }
  }

  std::vector<std::vector<NodeId>> adjacency_;
  std::size_t edge_count_ = 0;
};

inline std::size_t min_degree(const Graph& g) {
  std::size_t k = g.node_count() ? g.degree(0) : 0;
  for (NodeId u = 1; u < g.node_count(); ++u) k = std::min(k, g.degree(u));
  return k;
}

/// Component label per node, labels dense from 0 in order of first node.
inline std::vector<std::uint32_t> connected_components(const Graph& g,
                                                       std::size_t* count = nullptr) {
  constexpr auto kUnset = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> label(g.node_count(), kUnset);
  std::vector<NodeId> stack;
  std::uint32_t next = 0;
  for (NodeId s = 0; s < g.node_count(); ++s) {
    if (label[s] != kUnset) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      NodeId u = stack.back();
      stack.pop_back();
      for (NodeId v : g.neighbors(u)) {
        if (label[v] == kUnset) {
          label[v] = next;
          stack.push_back(v);
        }
      }
    }
    ++next;
  }
  if (count) *count = next;
  return label;
}

inline bool is_connected(const Graph& g) {
  std::size_t count = 0;
  connected_components(g, &count);
  return count <= 1;
}

/// Induced subgraph on the largest connected component, nodes renumbered in
/// increasing order of their original identifiers. Ties go to the lowest label.
inline Graph largest_component(const Graph& g) {
  std::size_t count = 0;
  auto label = connected_components(g, &count);
  if (count <= 1) return g;
  std::vector<std::size_t> size(count, 0);
  for (auto l : label) ++size[l];
  auto best = static_cast<std::uint32_t>(
      std::max_element(size.begin(), size.end()) - size.begin());
  std::vector<NodeId> remap(g.node_count(), 0);
  NodeId n = 0;
  for (NodeId u = 0; u < g.node_count(); ++u) {
    if (label[u] == best) remap[u] = n++;
  }
  Graph out(n);
  for (NodeId u = 0; u < g.node_count(); ++u) {
    if (label[u] != best) continue;
    for (NodeId v : g.neighbors(u)) {
      if (u < v) out.add_edge_if_absent(remap[u], remap[v]);
    }
  }
  return out;
}

// Edge-list text format:
//   # nodes=N edges=E
//   [# any further comment lines, e.g. provenance]
//   u v        (one line per edge, u < v, ascending order)

inline void write_edge_list(std::ostream& os, const Graph& g,
                            std::span<const std::string> comments = {}) {
  os << "# nodes=" << g.node_count() << " edges=" << g.edge_count() << '\n';
  for (const auto& c : comments) os << "# " << c << '\n';
  for (NodeId u = 0; u < g.node_count(); ++u) {
    for (NodeId v : g.neighbors(u)) {
      if (u < v) os << u << ' ' << v << '\n';
    }
  }
}

inline Graph read_edge_list(std::istream& is,
                            std::vector<std::string>* comments = nullptr) {
  std::string line;
  std::size_t n = 0, e = 0;
  bool have_header = false;
  Graph g;
  std::size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      unsigned long long hn = 0, he = 0;
      if (!have_header &&
          std::sscanf(line.c_str(), "# nodes=%llu edges=%llu", &hn, &he) == 2) {
        n = hn;
        e = he;
        have_header = true;
        g = Graph(n);
      } else if (comments) {
        comments->push_back(line.size() > 2 ? line.substr(2) : std::string{});
      }
      continue;
    }
    if (!have_header) {
      throw ParseError("edge list: missing '# nodes=N edges=E' header");
    }
    unsigned long long u = 0, v = 0;
    char trailing = 0;
    if (std::sscanf(line.c_str(), "%llu %llu %c", &u, &v, &trailing) != 2) {
      throw ParseError("edge list line " + std::to_string(line_no) +
                       ": expected 'u v'");
    }
    if (u >= v || v >= n) {
      throw ParseError("edge list line " + std::to_string(line_no) +
                       ": need u < v < nodes");
    }
    if (!g.add_edge_if_absent(static_cast<NodeId>(u), static_cast<NodeId>(v))) {
      throw ParseError("edge list line " + std::to_string(line_no) +
                       ": duplicate edge");
    }
  }
  if (!have_header) {
    throw ParseError("edge list: missing '# nodes=N edges=E' header");
  }
  if (g.edge_count() != e) {
    throw ParseError("edge list: header declares " + std::to_string(e) +
                     " edges, found " + std::to_string(g.edge_count()));
  }
  return g;
}

}  // namespace cliquenet
