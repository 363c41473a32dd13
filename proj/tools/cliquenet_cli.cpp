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

// Command-line driver: generate, measure, estrada, run, report.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cliquenet/cliquenet.hpp"

namespace fs = std::filesystem;
using namespace cliquenet;

namespace {

constexpr const char* kEnv = "CLIQUENET_";

std::string env(const char* name) { return std::string(kEnv) + name; }

std::map<std::string, std::string> parse_provenance(const std::vector<std::string>& comments) {
  std::map<std::string, std::string> kv;
  for (const auto& c : comments) {
    std::istringstream is(c);
    std::string tok;
    while (is >> tok) {
      auto eq = tok.find('=');
      if (eq != std::string::npos) kv[tok.substr(0, eq)] = tok.substr(eq + 1);
    }
  }
  return kv;
}

Graph load_graph(const std::string& path, std::vector<std::string>* comments) {
  if (path == "-") return read_edge_list(std::cin, comments);
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return read_edge_list(in, comments);
}

std::ofstream open_out(const fs::path& p) {
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  std::ofstream f(p, std::ios::binary | std::ios::trunc);
  if (!f) throw Error("cannot write " + p.string());
  return f;
}

struct GenerateOptions {
  std::string config;
  std::string model = "cliquenet";
  int a = 5, m = 1;
  double p = 0.0;
  std::optional<std::size_t> steps, nodes, edges;
  std::optional<double> mean_degree;
  std::uint64_t seed = 1;
  std::string out = "-";
};

void apply_generate_config(GenerateOptions& o) {
  std::ifstream in(o.config);
  if (!in) throw ParseError("cannot open config " + o.config);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in, nullptr, true, true);
    o.model = j.value("model", o.model);
    o.a = j.value("a", o.a);
    o.m = j.value("m", o.m);
    o.p = j.value("p", o.p);
    if (j.contains("steps")) o.steps = j.at("steps").get<std::size_t>();
    if (j.contains("N")) o.nodes = j.at("N").get<std::size_t>();
    if (j.contains("edges")) o.edges = j.at("edges").get<std::size_t>();
    if (j.contains("mean_degree")) o.mean_degree = j.at("mean_degree").get<double>();
    if (j.contains("seed")) o.seed = j.at("seed").get<std::uint64_t>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("generate config: ") + e.what());
  }
}

int cmd_generate(GenerateOptions o, bool seed_given) {
  if (!o.config.empty()) {
    const auto seed = o.seed;
    apply_generate_config(o);
    if (seed_given) o.seed = seed;
  }
  Graph g;
  std::string provenance;
  if (o.model == "cliquenet") {
    CliqueNetConfig cfg{o.a, o.m, o.p, o.steps, o.nodes, o.seed};
    g = evolve(cfg);
    provenance = cfg.provenance();
  } else if (o.model == "er") {
    if (!o.nodes) throw ConfigError("er model needs --nodes");
    ErConfig cfg;
    if (o.edges) {
      cfg = ErConfig{*o.nodes, *o.edges, o.seed};
    } else if (o.mean_degree) {
      cfg = ErConfig::matched(*o.nodes, *o.mean_degree, o.seed);
    } else {
      throw ConfigError("er model needs --edges or --mean-degree");
    }
    g = er_random_graph(cfg);
    provenance = cfg.provenance();
  } else {
    throw ConfigError("unknown model '" + o.model + "'");
  }
  const std::vector<std::string> comments{provenance};
  if (o.out == "-") {
    write_edge_list(std::cout, g, comments);
  } else {
    auto f = open_out(o.out);
    write_edge_list(f, g, comments);
  }
  return 0;
}

int cmd_measure(const std::string& in, const fs::path& out, unsigned threads,
                std::optional<std::size_t> sample_sources, std::uint64_t seed) {
  const Graph g = load_graph(in, nullptr);
  const std::vector<Measure> measures{Measure::degree, Measure::path_length,
                                      Measure::clustering, Measure::spectrum};
  const auto gm = measure_graph(g, measures, sample_sources, seed, threads);
  fs::create_directories(out);

  const auto h = degree_histogram(g);
  {
    auto f = open_out(out / "degree_dist.csv");
    csv_schema_line(f, "degree_dist");
    f << "k,P,CP\n";
    for (auto [k, p] : h.p_of_k) f << k << ',' << fmt_real(p) << ',' << fmt_real(h.cp(k)) << '\n';
  }
  {
    const auto s = clustering_spectrum(g);
    auto f = open_out(out / "clustering_spectrum.csv");
    csv_schema_line(f, "clustering_spectrum");
    f << "k,C_of_k,count\n";
    for (auto [k, c] : s.c_of_k) f << k << ',' << fmt_real(c) << ',' << s.count.at(k) << '\n';
  }
  {
    auto cols = measure_columns(measures);
    auto f = open_out(out / "summary.csv");
    csv_schema_line(f, "summary");
    for (std::size_t i = 0; i < cols.size(); ++i) {
      const auto& c = cols[i];
      f << (i ? "," : "") << (c == "nodes" ? "N" : c == "edges" ? "E" : c);
    }
    f << '\n';
    for (std::size_t i = 0; i < cols.size(); ++i) {
      f << (i ? "," : "") << fmt_real(gm.values.at(cols[i]));
    }
    f << '\n';
  }
  return 0;
}

int cmd_estrada(const std::string& in, const fs::path& out, bool matrix) {
  std::vector<std::string> comments;
  const Graph g = load_graph(in, &comments);
  auto kv = parse_provenance(comments);
  auto get = [&](const char* k) { return kv.count(k) ? kv[k] : std::string{}; };
  const bool er = get("model") == "er";
  fs::create_directories(out);

  const auto spec = adjacency_spectrum(g, matrix);
  const auto ee = estrada_index(spec);
  {
    auto f = open_out(out / "estrada.csv");
    write_estrada_csv_header(f);
    write_estrada_row(f, g.node_count(), er ? "" : get("a"), er ? "" : get("m"),
                      er ? "" : get("p"), get("seed"), ee.lambda_max, ee.log_ee,
                      er ? "er" : (kv.count("a") ? "cliquenet" : ""));
  }
  if (matrix) {
    auto f = open_out(out / "communicability.txt");
    write_communicability_triplets(f, communicability_matrix(spec));
  }
  return 0;
}

int cmd_run(const std::string& config, const std::string& out, std::optional<std::uint64_t> seed,
            std::optional<unsigned> threads, std::optional<std::size_t> sample_sources) {
  auto spec = load_experiment(config);
  if (!out.empty()) spec.output_dir = out;
  if (seed) spec.seed = *seed;
  if (threads) spec.threads = *threads;
  if (sample_sources) spec.sample_sources = *sample_sources;
  const auto r = run_experiment(spec);
  std::cerr << "wrote " << r.points.size() << " grid points x " << spec.replicas
            << " replicas to " << spec.output_dir.string() << '\n';
  return 0;
}

int cmd_report_table1(const fs::path& in) {
  std::ifstream f(in / "replicas.csv");
  if (!f) throw Error("cannot open " + (in / "replicas.csv").string());
  std::cout << table1_report(read_replicas_csv(f));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cliquenet: hybrid evolving clique networks"};
  app.require_subcommand(1);

  // generate
  GenerateOptions gen;
  auto* generate = app.add_subcommand("generate", "Grow one graph and write its edge list");
  generate->add_option("--config", gen.config, "JSON file with model parameters")
      ->envname(env("CONFIG"));
  generate->add_option("--model", gen.model, "cliquenet or er")
      ->check(CLI::IsMember({"cliquenet", "er"}));
  generate->add_option("--a", gen.a, "Clique size");
  generate->add_option("--m", gen.m, "Attachment nodes per step");
  generate->add_option("--p", gen.p, "Preferential-attachment probability");
  generate->add_option("--steps", gen.steps, "Attachment steps");
  generate->add_option("--nodes,-N", gen.nodes, "Target node count");
  generate->add_option("--edges", gen.edges, "ER edge count");
  generate->add_option("--mean-degree", gen.mean_degree, "ER mean degree");
  auto* gen_seed = generate->add_option("--seed", gen.seed, "Random seed")->envname(env("SEED"));
  generate->add_option("--out", gen.out, "Output edge-list file (- for stdout)")
      ->envname(env("OUT"));

  // measure
  std::string m_in;
  std::string m_out = "out";
  unsigned m_threads = 0;
  std::optional<std::size_t> m_sample;
  std::uint64_t m_seed = 1;
  auto* measure = app.add_subcommand("measure", "Edge list -> degree, clustering, L CSVs");
  measure->add_option("--in", m_in, "Edge-list file (- for stdin)")->required();
  measure->add_option("--out", m_out, "Output directory")->envname(env("OUT"));
  measure->add_option("--threads", m_threads, "Worker threads (0 = all)")
      ->envname(env("THREADS"));
  measure->add_option("--sample-sources", m_sample, "BFS sources for sampled L")
      ->envname(env("SAMPLE_SOURCES"));
  measure->add_option("--seed", m_seed, "Seed for sampled L")->envname(env("SEED"));

  // estrada
  std::string e_in;
  std::string e_out = "out";
  bool e_matrix = false;
  auto* estrada = app.add_subcommand("estrada", "Edge list -> estrada.csv");
  estrada->add_option("--in", e_in, "Edge-list file (- for stdin)")->required();
  estrada->add_option("--out", e_out, "Output directory")->envname(env("OUT"));
  estrada->add_flag("--matrix", e_matrix, "Also write communicability.txt (N <= 200)");

  // run
  std::string r_config, r_out;
  std::optional<std::uint64_t> r_seed;
  std::optional<unsigned> r_threads;
  std::optional<std::size_t> r_sample;
  auto* run = app.add_subcommand("run", "Run an experiment config");
  run->add_option("--config", r_config, "Experiment JSON")->required()->envname(env("CONFIG"));
  run->add_option("--out", r_out, "Override output directory")->envname(env("OUT"));
  run->add_option("--seed", r_seed, "Override base seed")->envname(env("SEED"));
  run->add_option("--threads", r_threads, "Worker threads (0 = all)")->envname(env("THREADS"));
  run->add_option("--sample-sources", r_sample, "BFS sources for sampled L")
      ->envname(env("SAMPLE_SOURCES"));

  // report
  std::string rep_in = "out";
  auto* report = app.add_subcommand("report", "Render reports from experiment outputs");
  auto* table1 = report->add_subcommand("table1", "C and L for ER and p = 0, 0.5, 1");
  table1->add_option("--in", rep_in, "Experiment output directory")->envname(env("OUT"));
  report->require_subcommand(1);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*generate) return cmd_generate(gen, gen_seed->count() > 0);
    if (*measure) return cmd_measure(m_in, m_out, m_threads, m_sample, m_seed);
    if (*estrada) return cmd_estrada(e_in, e_out, e_matrix);
    if (*run) return cmd_run(r_config, r_out, r_seed, r_threads, r_sample);
    if (*table1) return cmd_report_table1(rep_in);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
