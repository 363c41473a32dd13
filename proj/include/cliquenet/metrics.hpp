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
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "cliquenet/errors.hpp"
#include "cliquenet/graph.hpp"
#include "cliquenet/parallel.hpp"
#include "cliquenet/random.hpp"

namespace cliquenet {

// ---------------------------------------------------------------------------
// Degree distribution
// ---------------------------------------------------------------------------

/// P(k) and the inclusive cumulative CP(k) = P(degree >= k), keyed by the
/// occupied degrees only. Use p()/cp() for arbitrary k.
struct DegreeHistogram {
  std::size_t node_count = 0;
  std::map<std::size_t, std::size_t> count;
  std::map<std::size_t, double> p_of_k;
  std::map<std::size_t, double> cp_of_k;

  double p(std::size_t k) const {
    auto it = p_of_k.find(k);
    return it == p_of_k.end() ? 0.0 : it->second;
  }

  double cp(std::size_t k) const {
    auto it = cp_of_k.lower_bound(k);
    return it == cp_of_k.end() ? 0.0 : it->second;
  }

  /// Most frequent degree; the smallest one on ties.
  std::size_t mode() const {
    std::size_t best = 0, best_count = 0;
    for (auto [k, c] : count) {
      if (c > best_count) {
        best = k;
        best_count = c;
      }
    }
    return best;
  }
};

inline DegreeHistogram degree_histogram(const Graph& g) {
  if (g.node_count() == 0) throw InvalidArgument("degree_histogram: empty graph");
  DegreeHistogram h;
  h.node_count = g.node_count();
  for (NodeId u = 0; u < g.node_count(); ++u) ++h.count[g.degree(u)];
  const auto n = static_cast<double>(g.node_count());
  std::size_t tail = 0;
  for (auto it = h.count.rbegin(); it != h.count.rend(); ++it) {
    tail += it->second;
    h.p_of_k[it->first] = static_cast<double>(it->second) / n;
    h.cp_of_k[it->first] = static_cast<double>(tail) / n;
  }
  return h;
}

// ---------------------------------------------------------------------------
// Average shortest path length
// ---------------------------------------------------------------------------

struct PathStats {
  double L = 0.0;
  std::size_t source_count = 0;
  bool exact = false;
};

/// BFS sources: every node, or `count` distinct nodes drawn uniformly.
struct SourceSampling {
  std::optional<std::size_t> count;
  std::uint64_t seed = 0;

  static SourceSampling all() { return {}; }
  static SourceSampling sample(std::size_t s, std::uint64_t seed) { return {s, seed}; }
};

namespace detail {

struct Csr {
  std::vector<std::size_t> offset;
  std::vector<NodeId> target;

  explicit Csr(const Graph& g) : offset(g.node_count() + 1, 0) {
    target.reserve(2 * g.edge_count());
    for (NodeId u = 0; u < g.node_count(); ++u) {
      auto nb = g.neighbors(u);
      target.insert(target.end(), nb.begin(), nb.end());
      offset[u + 1] = target.size();
    }
  }
};

// Sum of BFS distances from `source`; returns the number of nodes reached.
inline std::size_t bfs_distance_sum(const Csr& csr, NodeId source,
                                    std::vector<std::uint32_t>& dist,
                                    std::vector<NodeId>& queue,
                                    std::uint64_t& sum) {
  constexpr auto kUnseen = static_cast<std::uint32_t>(-1);
  std::fill(dist.begin(), dist.end(), kUnseen);
  queue.clear();
  dist[source] = 0;
  queue.push_back(source);
  sum = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId u = queue[head];
    const auto du = dist[u] + 1;
    for (auto e = csr.offset[u]; e < csr.offset[u + 1]; ++e) {
      const NodeId v = csr.target[e];
      if (dist[v] == kUnseen) {
        dist[v] = du;
        sum += du;
        queue.push_back(v);
      }
    }
  }
  return queue.size();
}

}  // namespace detail

/// Mean geodesic distance over ordered node pairs, L = sum d_ij / (N(N-1)).
///
/// Per-source sums are integers, so the result does not depend on worker
/// count or scheduling. In sample mode the sources are the first `count`
/// entries of a seeded permutation and the estimate divides by s(N-1).
/// Throws UnreachablePair if any BFS fails to reach every node.
inline PathStats average_shortest_path_length(const Graph& g,
                                              const SourceSampling& sampling = {},
                                              unsigned threads = 1) {
  const std::size_t n = g.node_count();
  PathStats out;
  if (n < 2) {
    out.exact = true;
    out.source_count = n;
    return out;
  }
  std::vector<NodeId> sources(n);
  std::iota(sources.begin(), sources.end(), NodeId{0});
  if (sampling.count) {
    Rng rng(sampling.seed);
    std::shuffle(sources.begin(), sources.end(), rng);
    sources.resize(std::min(*sampling.count, n));
    if (sources.empty()) throw InvalidArgument("sample size must be >= 1");
  }

  const detail::Csr csr(g);
  std::vector<std::uint64_t> row_sum(sources.size(), 0);
  const unsigned workers = static_cast<unsigned>(
      std::min<std::size_t>(resolve_threads(threads), sources.size()));
  const std::size_t chunk = (sources.size() + workers - 1) / workers;
  parallel_for(workers, workers, [&](std::size_t w) {
    std::vector<std::uint32_t> dist(n);
    std::vector<NodeId> queue;
    queue.reserve(n);
    const auto end = std::min(sources.size(), (w + 1) * chunk);
    for (auto i = w * chunk; i < end; ++i) {
      if (detail::bfs_distance_sum(csr, sources[i], dist, queue, row_sum[i]) != n) {
        throw UnreachablePair("graph is disconnected; node " +
                              std::to_string(sources[i]) +
                              " cannot reach every other node");
      }
    }
  });

  const std::uint64_t total = std::accumulate(row_sum.begin(), row_sum.end(),
                                              std::uint64_t{0});
  out.source_count = sources.size();
  out.exact = out.source_count == n;
  out.L = static_cast<double>(total) /
          (static_cast<double>(out.source_count) * static_cast<double>(n - 1));
  return out;
}

// ---------------------------------------------------------------------------
// Clustering
// ---------------------------------------------------------------------------

/// Per-node clustering c_i = 2 e_i / (k_i (k_i - 1)), with c_i = 0 when k_i < 2.
struct LocalClustering {
  std::vector<double> c;
  std::vector<std::size_t> neighbor_edges;  // e_i
};

namespace detail {

inline std::size_t sorted_intersection_size(std::span<const NodeId> a,
                                            std::span<const NodeId> b) {
  std::size_t i = 0, j = 0, hits = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      ++hits;
      ++i;
      ++j;
    }
  }
  return hits;
}

}  // namespace detail

inline LocalClustering local_clustering(const Graph& g) {
  const std::size_t n = g.node_count();
  LocalClustering out;
  out.c.assign(n, 0.0);
  out.neighbor_edges.assign(n, 0);
  for (NodeId i = 0; i < n; ++i) {
    const auto ni = g.neighbors(i);
    const std::size_t k = ni.size();
    if (k < 2) continue;
    // Each edge among the neighbors is seen once from either endpoint.
    std::size_t twice = 0;
    for (NodeId j : ni) twice += detail::sorted_intersection_size(ni, g.neighbors(j));
    out.neighbor_edges[i] = twice / 2;
    out.c[i] = static_cast<double>(twice) / (static_cast<double>(k) * (k - 1));
  }
  return out;
}

inline double global_clustering(const LocalClustering& lc) {
  if (lc.c.empty()) return 0.0;
  return std::accumulate(lc.c.begin(), lc.c.end(), 0.0) / static_cast<double>(lc.c.size());
}

inline double global_clustering(const Graph& g) {
  return global_clustering(local_clustering(g));
}

/// Mean clustering of the nodes of each occupied degree k.
struct ClusteringSpectrum {
  std::map<std::size_t, double> c_of_k;
  std::map<std::size_t, std::size_t> count;
};

inline ClusteringSpectrum clustering_spectrum(const Graph& g, const LocalClustering& lc) {
  ClusteringSpectrum out;
  std::map<std::size_t, double> sum;
  for (NodeId u = 0; u < g.node_count(); ++u) {
    const auto k = g.degree(u);
    sum[k] += lc.c[u];
    ++out.count[k];
  }
  for (auto [k, s] : sum) out.c_of_k[k] = s / static_cast<double>(out.count[k]);
  return out;
}

inline ClusteringSpectrum clustering_spectrum(const Graph& g) {
  return clustering_spectrum(g, local_clustering(g));
}

// ---------------------------------------------------------------------------
// Slope fits
// ---------------------------------------------------------------------------

struct KRange {
  double lo = 0.0;
  double hi = std::numeric_limits<double>::infinity();

  bool contains(double k) const { return k >= lo && k <= hi; }
};

struct PowerLawFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  KRange k_range;
  std::size_t points = 0;
};

using FitPoint = std::pair<double, double>;  // (k, y)

namespace detail {

// Ordinary least squares of ty(y) on tx(k) over in-range points with y > 0.
template <typename TransformX>
PowerLawFit least_squares(std::span<const FitPoint> pts, KRange range, TransformX tx) {
  std::vector<std::pair<double, double>> xy;
  for (auto [k, y] : pts) {
    if (range.contains(k) && y > 0.0 && k > 0.0) xy.emplace_back(tx(k), std::log(y));
  }
  if (xy.size() < 3) {
    throw InsufficientData("slope fit needs >= 3 usable points, got " +
                           std::to_string(xy.size()));
  }
  const double n = static_cast<double>(xy.size());
  double mx = 0.0, my = 0.0;
  for (auto [x, y] : xy) {
    mx += x;
    my += y;
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (auto [x, y] : xy) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
    syy += (y - my) * (y - my);
  }
  if (sxx <= 0.0) throw InsufficientData("slope fit: all abscissae coincide");
  PowerLawFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss_res = 0.0;
  for (auto [x, y] : xy) {
    const double r = y - (fit.intercept + fit.slope * x);
    ss_res += r * r;
  }
  fit.r_squared = syy > 0.0 ? std::clamp(1.0 - ss_res / syy, 0.0, 1.0) : 1.0;
  fit.k_range = range;
  fit.points = xy.size();
  return fit;
}

}  // namespace detail

/// Least squares of log y on log k: slope is the power-law exponent.
inline PowerLawFit fit_loglog_slope(std::span<const FitPoint> pts, KRange range = {}) {
  return detail::least_squares(pts, range, [](double k) { return std::log(k); });
}

/// Least squares of log y on k: slope is the exponential decay rate.
inline PowerLawFit fit_semilog_slope(std::span<const FitPoint> pts, KRange range = {}) {
  return detail::least_squares(pts, range, [](double k) { return k; });
}

/// Default window: from the modal degree up to the degree below which the
/// top 1% of nodes are cut off.
inline KRange default_fit_window(const DegreeHistogram& h) {
  KRange r;
  r.lo = static_cast<double>(h.mode());
  r.hi = r.lo;
  for (auto [k, cp] : h.cp_of_k) {
    if (cp >= 0.01) r.hi = static_cast<double>(k);
  }
  return r;
}

/// One decade centered (geometrically) inside `window`; the window itself if
/// it spans less than a decade.
inline KRange central_decade(KRange window) {
  if (window.lo <= 0.0 || window.hi <= 10.0 * window.lo) return window;
  const double center = std::sqrt(window.lo * window.hi);
  const double half = std::sqrt(10.0);
  return {center / half, center * half};
}

inline std::vector<FitPoint> cp_points(const DegreeHistogram& h) {
  std::vector<FitPoint> pts;
  for (auto [k, cp] : h.cp_of_k) pts.emplace_back(static_cast<double>(k), cp);
  return pts;
}

inline std::vector<FitPoint> spectrum_points(const ClusteringSpectrum& s) {
  std::vector<FitPoint> pts;
  for (auto [k, c] : s.c_of_k) pts.emplace_back(static_cast<double>(k), c);
  return pts;
}

// ---------------------------------------------------------------------------
// Summary
// ---------------------------------------------------------------------------

struct MetricsSummary {
  std::size_t N = 0;
  std::size_t edge_count = 0;
  double mean_degree = 0.0;
  double L = 0.0;
  double C = 0.0;
};

inline double mean_degree(const Graph& g) {
  return g.node_count() ? 2.0 * static_cast<double>(g.edge_count()) /
                              static_cast<double>(g.node_count())
                        : 0.0;
}

inline MetricsSummary summarize(const Graph& g, const SourceSampling& sampling = {},
                                unsigned threads = 1) {
  MetricsSummary s;
  s.N = g.node_count();
  s.edge_count = g.edge_count();
  s.mean_degree = mean_degree(g);
  s.L = average_shortest_path_length(g, sampling, threads).L;
  s.C = global_clustering(g);
  return s;
}

}  // namespace cliquenet
