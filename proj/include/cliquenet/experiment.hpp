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
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cliquenet/baselines.hpp"
#include "cliquenet/communicability.hpp"
#include "cliquenet/errors.hpp"
#include "cliquenet/generator.hpp"
#include "cliquenet/graph.hpp"
#include "cliquenet/metrics.hpp"
#include "cliquenet/parallel.hpp"
#include "cliquenet/random.hpp"

namespace cliquenet {

inline constexpr int kCsvSchemaVersion = 1;

// ---------------------------------------------------------------------------
// Experiment description
// ---------------------------------------------------------------------------

enum class Model { cliquenet, er };

inline const char* to_string(Model m) { return m == Model::cliquenet ? "cliquenet" : "er"; }

inline Model parse_model(const std::string& s) {
  if (s == "cliquenet") return Model::cliquenet;
  if (s == "er") return Model::er;
  throw ParseError("unknown model '" + s + "' (expected cliquenet or er)");
}

enum class Measure { degree, path_length, clustering, spectrum, estrada };

inline const char* to_string(Measure m) {
  switch (m) {
    case Measure::degree: return "degree";
    case Measure::path_length: return "path_length";
    case Measure::clustering: return "clustering";
    case Measure::spectrum: return "spectrum";
    case Measure::estrada: return "estrada";
  }
  return "?";
}

inline Measure parse_measure(const std::string& s) {
  for (auto m : {Measure::degree, Measure::path_length, Measure::clustering,
                 Measure::spectrum, Measure::estrada}) {
    if (s == to_string(m)) return m;
  }
  throw ParseError("unknown measure '" + s + "'");
}

/// One cell of the parameter grid.
///
/// Clique networks carry (a, m, p). Stand-alone ER points carry a target
/// mean degree instead. ER points matched to a clique network keep that
/// network's (a, m, p) and copy its node and edge count per replica.
struct GridPoint {
  Model model = Model::cliquenet;
  std::optional<int> a, m;
  std::optional<double> p;
  std::size_t N = 0;
  std::optional<double> target_k;

  bool matched_er() const { return model == Model::er && a.has_value(); }

  friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

struct ExperimentSpec {
  std::string name = "experiment";
  Model model = Model::cliquenet;
  std::vector<int> a_values{5};
  std::vector<int> m_values;
  std::vector<double> p_values;
  std::vector<std::size_t> n_values;
  std::vector<double> mean_degree_values;  // model = er only
  std::optional<double> baseline_er_mean_degree;
  bool baseline_er_matched = false;
  std::size_t replicas = 1;
  std::uint64_t seed = 1;
  std::vector<Measure> measures;
  std::filesystem::path output_dir = "out";
  unsigned threads = 0;
  std::optional<std::size_t> sample_sources;

  bool wants(Measure m) const {
    return std::find(measures.begin(), measures.end(), m) != measures.end();
  }

  void validate() const {
    if (replicas < 1) throw ConfigError("replicas must be >= 1");
    if (n_values.empty()) throw ConfigError("grid.N must be nonempty");
    if (measures.empty()) throw ConfigError("measures must be nonempty");
    if (model == Model::cliquenet) {
      if (a_values.empty() || m_values.empty() || p_values.empty()) {
        throw ConfigError("cliquenet grid needs nonempty a, m, p lists");
      }
      for (int a : a_values) {
        for (int m : m_values) {
          CliqueNetConfig cfg{a, m, p_values.front(), std::nullopt, n_values.front(), 0};
          cfg.validate();
        }
      }
      for (double p : p_values) {
        if (!(p >= 0.0 && p <= 1.0)) throw ConfigError("p values must lie in [0,1]");
      }
    } else {
      if (mean_degree_values.empty()) throw ConfigError("er grid needs mean_degree list");
      if (baseline_er_mean_degree || baseline_er_matched) {
        throw ConfigError("baseline_er only applies to the cliquenet model");
      }
    }
  }

  /// Primary grid points in file order: N outermost, then a, m, p.
  std::vector<GridPoint> grid() const {
    std::vector<GridPoint> out;
    for (auto n : n_values) {
      if (model == Model::er) {
        for (double k : mean_degree_values) out.push_back({Model::er, {}, {}, {}, n, k});
        continue;
      }
      for (int a : a_values) {
        for (int m : m_values) {
          for (double p : p_values) out.push_back({Model::cliquenet, a, m, p, n, {}});
        }
      }
      if (baseline_er_mean_degree) {
        out.push_back({Model::er, {}, {}, {}, n, *baseline_er_mean_degree});
      }
    }
    return out;
  }
};

/// Parses the JSON experiment file (comments allowed).
///
///   { "name": "table1", "model": "cliquenet",
///     "grid": {"a": [5], "m": [2], "p": [0, 0.5, 1], "N": [5000]},
///     "baseline_er": {"mean_degree": 6.66} | {"match": "edges"},
///     "replicas": 10, "seed": 1,
///     "measures": ["path_length", "clustering"],
///     "output_dir": "out/table1", "threads": 0, "sample_sources": 500 }
inline ExperimentSpec parse_experiment(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text, nullptr, true, /*ignore_comments=*/true);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("experiment config: ") + e.what());
  }
  ExperimentSpec s;
  try {
    s.name = j.value("name", s.name);
    s.model = parse_model(j.value("model", std::string("cliquenet")));
    const auto& grid = j.at("grid");
    if (grid.contains("a")) s.a_values = grid.at("a").get<std::vector<int>>();
    if (grid.contains("m")) s.m_values = grid.at("m").get<std::vector<int>>();
    if (grid.contains("p")) s.p_values = grid.at("p").get<std::vector<double>>();
    s.n_values = grid.at("N").get<std::vector<std::size_t>>();
    if (grid.contains("mean_degree")) {
      s.mean_degree_values = grid.at("mean_degree").get<std::vector<double>>();
    }
    if (j.contains("baseline_er")) {
      const auto& b = j.at("baseline_er");
      if (b.contains("mean_degree")) s.baseline_er_mean_degree = b.at("mean_degree").get<double>();
      if (b.contains("match")) {
        if (b.at("match").get<std::string>() != "edges") {
          throw ParseError("baseline_er.match must be \"edges\"");
        }
        s.baseline_er_matched = true;
      }
    }
    s.replicas = j.value("replicas", s.replicas);
    s.seed = j.value("seed", s.seed);
    for (const auto& m : j.at("measures")) s.measures.push_back(parse_measure(m.get<std::string>()));
    s.output_dir = j.value("output_dir", s.output_dir.string());
    s.threads = j.value("threads", s.threads);
    if (j.contains("sample_sources") && !j.at("sample_sources").is_null()) {
      s.sample_sources = j.at("sample_sources").get<std::size_t>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("experiment config: ") + e.what());
  }
  s.validate();
  return s;
}

inline ExperimentSpec load_experiment(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_experiment(buf.str());
}

// ---------------------------------------------------------------------------
// Per-graph measurement
// ---------------------------------------------------------------------------

/// Scalar columns produced by each measure, in CSV order.
inline std::vector<std::string> measure_columns(const std::vector<Measure>& measures) {
  std::vector<std::string> cols{"nodes", "edges", "mean_degree"};
  auto has = [&](Measure m) {
    return std::find(measures.begin(), measures.end(), m) != measures.end();
  };
  if (has(Measure::path_length)) cols.insert(cols.end(), {"L", "L_sources", "lcc_nodes"});
  if (has(Measure::clustering)) cols.push_back("C");
  if (has(Measure::degree)) {
    cols.insert(cols.end(),
                {"cp_loglog_slope", "cp_loglog_r2", "cp_semilog_slope", "cp_semilog_r2"});
  }
  if (has(Measure::spectrum)) cols.insert(cols.end(), {"ck_slope", "ck_r2"});
  if (has(Measure::estrada)) cols.insert(cols.end(), {"lambda_max", "log_ee"});
  return cols;
}

struct GraphMeasurement {
  std::map<std::string, double> values;
  std::map<std::size_t, std::size_t> degree_count;
  std::map<std::size_t, std::pair<double, std::size_t>> spectrum_sum;  // k -> (sum c_i, count)
};

/// Fits used throughout: CP(k) log-log over the central decade of the
/// default window, CP(k) semi-log and C(k) log-log over the default window.
struct DistributionFits {
  std::optional<PowerLawFit> cp_loglog, cp_semilog, ck_loglog;
};

inline DistributionFits fit_distributions(const DegreeHistogram& h,
                                          const ClusteringSpectrum* spectrum) {
  DistributionFits f;
  const auto window = default_fit_window(h);
  const auto cp = cp_points(h);
  try {
    f.cp_loglog = fit_loglog_slope(cp, central_decade(window));
  } catch (const InsufficientData&) {
  }
  try {
    f.cp_semilog = fit_semilog_slope(cp, window);
  } catch (const InsufficientData&) {
  }
  if (spectrum) {
    try {
      f.ck_loglog = fit_loglog_slope(spectrum_points(*spectrum), window);
    } catch (const InsufficientData&) {
    }
  }
  return f;
}

inline GraphMeasurement measure_graph(const Graph& g, const std::vector<Measure>& measures,
                                      std::optional<std::size_t> sample_sources,
                                      std::uint64_t sample_seed, unsigned threads) {
  auto has = [&](Measure m) {
    return std::find(measures.begin(), measures.end(), m) != measures.end();
  };
  constexpr double nan = std::numeric_limits<double>::quiet_NaN();
  GraphMeasurement out;
  out.values["nodes"] = static_cast<double>(g.node_count());
  out.values["edges"] = static_cast<double>(g.edge_count());
  out.values["mean_degree"] = mean_degree(g);

  if (has(Measure::path_length)) {
    // Disconnected graphs (sparse ER draws) are measured on their largest
    // component.
    const bool connected = is_connected(g);
    const Graph lcc = connected ? Graph{} : largest_component(g);
    const Graph& target = connected ? g : lcc;
    const auto sampling = sample_sources ? SourceSampling::sample(*sample_sources, sample_seed)
                                         : SourceSampling::all();
    const auto ps = average_shortest_path_length(target, sampling, threads);
    out.values["L"] = ps.L;
    out.values["L_sources"] = static_cast<double>(ps.source_count);
    out.values["lcc_nodes"] = static_cast<double>(target.node_count());
  }

  std::optional<LocalClustering> lc;
  if (has(Measure::clustering) || has(Measure::spectrum)) lc = local_clustering(g);
  if (has(Measure::clustering)) out.values["C"] = global_clustering(*lc);

  if (has(Measure::degree) || has(Measure::spectrum)) {
    const auto h = degree_histogram(g);
    std::optional<ClusteringSpectrum> spec;
    if (has(Measure::spectrum)) spec = clustering_spectrum(g, *lc);
    const auto fits = fit_distributions(h, spec ? &*spec : nullptr);
    if (has(Measure::degree)) {
      out.degree_count = h.count;
      out.values["cp_loglog_slope"] = fits.cp_loglog ? fits.cp_loglog->slope : nan;
      out.values["cp_loglog_r2"] = fits.cp_loglog ? fits.cp_loglog->r_squared : nan;
      out.values["cp_semilog_slope"] = fits.cp_semilog ? fits.cp_semilog->slope : nan;
      out.values["cp_semilog_r2"] = fits.cp_semilog ? fits.cp_semilog->r_squared : nan;
    }
    if (has(Measure::spectrum)) {
      for (NodeId u = 0; u < g.node_count(); ++u) {
        auto& cell = out.spectrum_sum[g.degree(u)];
        cell.first += lc->c[u];
        ++cell.second;
      }
      out.values["ck_slope"] = fits.ck_loglog ? fits.ck_loglog->slope : nan;
      out.values["ck_r2"] = fits.ck_loglog ? fits.ck_loglog->r_squared : nan;
    }
  }

  if (has(Measure::estrada)) {
    const auto ee = estrada_index(adjacency_spectrum(g));
    out.values["lambda_max"] = ee.lambda_max;
    out.values["log_ee"] = ee.log_ee;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Ensemble results
// ---------------------------------------------------------------------------

struct ReplicaRecord {
  std::size_t replica = 0;
  std::uint64_t seed = 0;
  std::map<std::string, double> values;
};

struct Stat {
  double mean = 0.0;
  double sd = 0.0;  // sample standard deviation; 0 for a single replica
};

struct PointResult {
  GridPoint point;
  std::vector<ReplicaRecord> replicas;
  std::map<std::string, Stat> stats;
  std::map<std::size_t, std::size_t> degree_count;
  std::map<std::size_t, std::pair<double, std::size_t>> spectrum_sum;
};

struct EnsembleResult {
  std::vector<std::string> columns;
  std::vector<PointResult> points;

  const PointResult* find(const GridPoint& gp) const {
    for (const auto& pr : points) {
      if (pr.point == gp) return &pr;
    }
    return nullptr;
  }
};

inline Stat describe(const std::vector<double>& xs) {
  Stat s;
  if (xs.empty()) return s;
  for (double x : xs) s.mean += x;
  s.mean /= static_cast<double>(xs.size());
  if (xs.size() > 1) {
    double ss = 0.0;
    for (double x : xs) ss += (x - s.mean) * (x - s.mean);
    s.sd = std::sqrt(ss / static_cast<double>(xs.size() - 1));
  }
  return s;
}

/// Recomputes every point's mean/sd from its per-replica values.
inline void aggregate(EnsembleResult& r) {
  for (auto& pr : r.points) {
    pr.stats.clear();
    for (const auto& col : r.columns) {
      std::vector<double> xs;
      for (const auto& rep : pr.replicas) {
        auto it = rep.values.find(col);
        if (it != rep.values.end()) xs.push_back(it->second);
      }
      pr.stats[col] = describe(xs);
    }
  }
}

// ---------------------------------------------------------------------------
// CSV output
// ---------------------------------------------------------------------------

inline std::string fmt_real(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  std::ostringstream os;
  os << std::setprecision(9) << x;
  return os.str();
}

template <typename T>
std::string fmt_opt(const std::optional<T>& x) {
  if (!x) return "";
  if constexpr (std::is_floating_point_v<T>) {
    return fmt_real(*x);
  } else {
    return std::to_string(*x);
  }
}

inline void csv_schema_line(std::ostream& os, const std::string& what) {
  os << "# cliquenet " << what << " v" << kCsvSchemaVersion << '\n';
}

inline std::string point_prefix(const GridPoint& gp) {
  return std::string(to_string(gp.model)) + ',' + fmt_opt(gp.a) + ',' + fmt_opt(gp.m) + ',' +
         fmt_opt(gp.p) + ',' + std::to_string(gp.N) + ',' + fmt_opt(gp.target_k);
}

inline constexpr const char* kPointHeader = "model,a,m,p,N,target_k";

inline void write_replicas_csv(std::ostream& os, const EnsembleResult& r) {
  csv_schema_line(os, "replicas");
  os << kPointHeader << ",replica,seed";
  for (const auto& c : r.columns) os << ',' << c;
  os << '\n';
  for (const auto& pr : r.points) {
    for (const auto& rep : pr.replicas) {
      os << point_prefix(pr.point) << ',' << rep.replica << ',' << rep.seed;
      for (const auto& c : r.columns) os << ',' << fmt_real(rep.values.at(c));
      os << '\n';
    }
  }
}

inline void write_summary_csv(std::ostream& os, const EnsembleResult& r) {
  csv_schema_line(os, "summary");
  os << kPointHeader << ",replicas";
  for (const auto& c : r.columns) os << ',' << c << "_mean," << c << "_sd";
  os << '\n';
  for (const auto& pr : r.points) {
    os << point_prefix(pr.point) << ',' << pr.replicas.size();
    for (const auto& c : r.columns) {
      const auto& s = pr.stats.at(c);
      os << ',' << fmt_real(s.mean) << ',' << fmt_real(s.sd);
    }
    os << '\n';
  }
}

inline void write_degree_dist_csv(std::ostream& os, const EnsembleResult& r) {
  csv_schema_line(os, "degree_dist");
  os << kPointHeader << ",k,P,CP\n";
  for (const auto& pr : r.points) {
    std::size_t total = 0;
    for (auto [k, c] : pr.degree_count) total += c;
    std::size_t tail = total;
    for (auto [k, c] : pr.degree_count) {
      os << point_prefix(pr.point) << ',' << k << ','
         << fmt_real(static_cast<double>(c) / static_cast<double>(total)) << ','
         << fmt_real(static_cast<double>(tail) / static_cast<double>(total)) << '\n';
      tail -= c;
    }
  }
}

inline void write_spectrum_csv(std::ostream& os, const EnsembleResult& r) {
  csv_schema_line(os, "clustering_spectrum");
  os << kPointHeader << ",k,C_of_k,count\n";
  for (const auto& pr : r.points) {
    for (auto [k, cell] : pr.spectrum_sum) {
      os << point_prefix(pr.point) << ',' << k << ','
         << fmt_real(cell.first / static_cast<double>(cell.second)) << ',' << cell.second
         << '\n';
    }
  }
}

inline void write_estrada_csv_header(std::ostream& os) {
  csv_schema_line(os, "estrada");
  os << "N,a,m,p,seed,lambda_max,log_ee,ee_or_inf,model\n";
}

inline void write_estrada_row(std::ostream& os, std::size_t n, const std::string& a,
                              const std::string& m, const std::string& p,
                              const std::string& seed, double lambda_max, double log_ee,
                              const std::string& model) {
  const double ee = log_ee < std::log(std::numeric_limits<double>::max())
                        ? std::exp(log_ee)
                        : std::numeric_limits<double>::infinity();
  os << n << ',' << a << ',' << m << ',' << p << ',' << seed << ',' << fmt_real(lambda_max)
     << ',' << fmt_real(log_ee) << ',' << fmt_real(ee) << ',' << model << '\n';
}

inline void write_estrada_csv(std::ostream& os, const EnsembleResult& r) {
  write_estrada_csv_header(os);
  for (const auto& pr : r.points) {
    for (const auto& rep : pr.replicas) {
      write_estrada_row(os, pr.point.N, fmt_opt(pr.point.a), fmt_opt(pr.point.m),
                        fmt_opt(pr.point.p), std::to_string(rep.seed),
                        rep.values.at("lambda_max"), rep.values.at("log_ee"),
                        to_string(pr.point.model));
    }
  }
}

// ---------------------------------------------------------------------------
// CSV input (per-replica file -> EnsembleResult)
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream is(line);
  while (std::getline(is, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

inline double parse_real(const std::string& s) {
  if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  if (s == "inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  try {
    std::size_t used = 0;
    double x = std::stod(s, &used);
    if (used != s.size()) throw ParseError("bad number '" + s + "'");
    return x;
  } catch (const std::logic_error&) {
    throw ParseError("bad number '" + s + "'");
  }
}

}  // namespace detail

/// Reads replicas.csv back; aggregate() on the result reproduces summary.csv.
inline EnsembleResult read_replicas_csv(std::istream& is) {
  EnsembleResult r;
  std::string line;
  std::vector<std::string> header;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto cells = detail::split_csv(line);
    if (header.empty()) {
      header = cells;
      static const std::vector<std::string> fixed{"model", "a", "m", "p", "N", "target_k",
                                                  "replica", "seed"};
      if (header.size() < fixed.size() ||
          !std::equal(fixed.begin(), fixed.end(), header.begin())) {
        throw ParseError("replicas.csv: unexpected header");
      }
      r.columns.assign(header.begin() + static_cast<std::ptrdiff_t>(fixed.size()), header.end());
      continue;
    }
    if (cells.size() != header.size()) throw ParseError("replicas.csv: ragged row");
    GridPoint gp;
    gp.model = parse_model(cells[0]);
    if (!cells[1].empty()) gp.a = std::stoi(cells[1]);
    if (!cells[2].empty()) gp.m = std::stoi(cells[2]);
    if (!cells[3].empty()) gp.p = detail::parse_real(cells[3]);
    gp.N = std::stoull(cells[4]);
    if (!cells[5].empty()) gp.target_k = detail::parse_real(cells[5]);
    ReplicaRecord rep;
    rep.replica = std::stoull(cells[6]);
    rep.seed = std::stoull(cells[7]);
    for (std::size_t i = 0; i < r.columns.size(); ++i) {
      rep.values[r.columns[i]] = detail::parse_real(cells[8 + i]);
    }
    auto it = std::find_if(r.points.begin(), r.points.end(),
                           [&](const PointResult& pr) { return pr.point == gp; });
    if (it == r.points.end()) {
      r.points.push_back(PointResult{gp, {}, {}, {}, {}});
      it = std::prev(r.points.end());
    }
    it->replicas.push_back(std::move(rep));
  }
  if (header.empty()) throw ParseError("replicas.csv: no header");
  aggregate(r);
  return r;
}

// ---------------------------------------------------------------------------
// Runner
// ---------------------------------------------------------------------------

inline Graph build_graph(const GridPoint& gp, std::uint64_t seed) {
  if (gp.model == Model::cliquenet) {
    CliqueNetConfig cfg{*gp.a, *gp.m, *gp.p, std::nullopt, gp.N, seed};
    return evolve(cfg);
  }
  return er_random_graph(ErConfig::matched(gp.N, *gp.target_k, seed));
}

/// Runs every (grid point, replica) job, aggregates, and returns the result.
/// Replica r of every point uses seed base + r. Output files are written by
/// write_outputs(); nothing here touches the filesystem.
inline EnsembleResult run_ensemble(const ExperimentSpec& spec) {
  spec.validate();
  const auto grid = spec.grid();
  const std::size_t jobs = grid.size() * spec.replicas;

  struct JobOutput {
    GraphMeasurement primary;
    std::optional<GraphMeasurement> matched;
  };
  std::vector<JobOutput> out(jobs);
  const unsigned outer = resolve_threads(spec.threads);
  const unsigned inner = jobs >= outer ? 1 : outer;

  parallel_for(jobs, outer, [&](std::size_t job) {
    const auto& gp = grid[job / spec.replicas];
    const auto r = job % spec.replicas;
    const auto seed = replica_seed(spec.seed, r);
    const Graph g = build_graph(gp, seed);
    out[job].primary = measure_graph(g, spec.measures, spec.sample_sources, seed, inner);
    if (gp.model == Model::cliquenet && spec.baseline_er_matched) {
      const Graph er = er_random_graph({g.node_count(), g.edge_count(), seed});
      out[job].matched = measure_graph(er, spec.measures, spec.sample_sources, seed, inner);
    }
  });

  EnsembleResult result;
  result.columns = measure_columns(spec.measures);
  // Replica values are kept exactly as printed so summary.csv can be
  // recomputed from replicas.csv alone.
  auto absorb = [](PointResult& pr, const GraphMeasurement& gm, std::size_t r,
                   std::uint64_t seed) {
    ReplicaRecord rec{r, seed, {}};
    for (const auto& [name, x] : gm.values) rec.values[name] = detail::parse_real(fmt_real(x));
    pr.replicas.push_back(std::move(rec));
    for (auto [k, c] : gm.degree_count) pr.degree_count[k] += c;
    for (auto [k, cell] : gm.spectrum_sum) {
      pr.spectrum_sum[k].first += cell.first;
      pr.spectrum_sum[k].second += cell.second;
    }
  };
  for (std::size_t i = 0; i < grid.size(); ++i) {
    PointResult pr{grid[i], {}, {}, {}, {}};
    std::optional<PointResult> matched;
    if (grid[i].model == Model::cliquenet && spec.baseline_er_matched) {
      GridPoint mp = grid[i];
      mp.model = Model::er;
      matched = PointResult{mp, {}, {}, {}, {}};
    }
    for (std::size_t r = 0; r < spec.replicas; ++r) {
      const auto& jo = out[i * spec.replicas + r];
      const auto seed = replica_seed(spec.seed, r);
      absorb(pr, jo.primary, r, seed);
      if (matched) absorb(*matched, *jo.matched, r, seed);
    }
    result.points.push_back(std::move(pr));
    if (matched) result.points.push_back(std::move(*matched));
  }
  aggregate(result);
  return result;
}

inline void write_outputs(const ExperimentSpec& spec, const EnsembleResult& r,
                          const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  auto open = [&](const char* name) {
    std::ofstream f(dir / name, std::ios::binary | std::ios::trunc);
    if (!f) throw Error("cannot write " + (dir / name).string());
    return f;
  };
  {
    auto f = open("replicas.csv");
    write_replicas_csv(f, r);
  }
  {
    auto f = open("summary.csv");
    write_summary_csv(f, r);
  }
  if (spec.wants(Measure::degree)) {
    auto f = open("degree_dist.csv");
    write_degree_dist_csv(f, r);
  }
  if (spec.wants(Measure::spectrum)) {
    auto f = open("clustering_spectrum.csv");
    write_spectrum_csv(f, r);
  }
  if (spec.wants(Measure::estrada)) {
    auto f = open("estrada.csv");
    write_estrada_csv(f, r);
  }
}

inline EnsembleResult run_experiment(const ExperimentSpec& spec) {
  auto r = run_ensemble(spec);
  write_outputs(spec, r, spec.output_dir);
  return r;
}

// ---------------------------------------------------------------------------
// Table 1
// ---------------------------------------------------------------------------

/// Renders C and L as mean +- sd for ER and the p = 0, 0.5, 1 clique
/// networks. Uses the first matching point of each kind.
inline std::string table1_report(const EnsembleResult& r) {
  auto has_cl = [&](const PointResult& pr) {
    return pr.stats.count("C") && pr.stats.count("L") && !pr.replicas.empty();
  };
  const PointResult* er = nullptr;
  for (const auto& pr : r.points) {
    if (pr.point.model == Model::er && has_cl(pr)) {
      er = &pr;
      break;
    }
  }
  if (!er) throw IncompleteResults("table1: no ER point with C and L");
  std::vector<const PointResult*> cols{er};
  std::vector<std::string> labels{"ER random network"};
  for (double p : {0.0, 0.5, 1.0}) {
    const PointResult* hit = nullptr;
    for (const auto& pr : r.points) {
      if (pr.point.model == Model::cliquenet && pr.point.p && *pr.point.p == p && has_cl(pr)) {
        hit = &pr;
        break;
      }
    }
    if (!hit) throw IncompleteResults("table1: no clique network with p=" + fmt_real(p));
    cols.push_back(hit);
    labels.push_back("Clique network (p=" + fmt_real(p) + ")");
  }
  std::ostringstream os;
  constexpr int kLabel = 10, kCell = 30;
  os << std::left << std::setw(kLabel) << "Network";
  for (const auto& l : labels) os << "  " << std::setw(kCell) << l;
  os << '\n';
  for (const char* row : {"C", "L"}) {
    os << std::setw(kLabel) << row;
    for (const auto* pr : cols) {
      const auto& s = pr->stats.at(row);
      os << "  " << std::setw(kCell) << (fmt_real(s.mean) + " +- " + fmt_real(s.sd));
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace cliquenet
