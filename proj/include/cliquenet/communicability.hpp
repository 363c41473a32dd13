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
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "cliquenet/errors.hpp"
#include "cliquenet/graph.hpp"

namespace cliquenet {

inline constexpr std::size_t kDenseNodeCap = 8000;
inline constexpr std::size_t kSeriesNodeCap = 500;
inline constexpr std::size_t kTripletNodeCap = 200;

/// Adjacency spectrum, eigenvalues in descending order. Column i of
/// `eigenvectors` (when requested) belongs to eigenvalues[i].
struct SpectralDecomposition {
  std::vector<double> eigenvalues;
  std::optional<Eigen::MatrixXd> eigenvectors;

  double trace() const {
    double s = 0.0;
    for (double l : eigenvalues) s += l;
    return s;
  }

  double sum_of_squares() const {
    double s = 0.0;
    for (double l : eigenvalues) s += l * l;
    return s;
  }
};

inline void check_dense_capacity(std::size_t n, std::size_t cap, const char* what) {
  if (n > cap) {
    throw CapacityError(std::string(what) + ": N=" + std::to_string(n) +
                        " exceeds dense cap " + std::to_string(cap));
  }
}

inline Eigen::MatrixXd dense_adjacency(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.node_count());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (NodeId u = 0; u < g.node_count(); ++u) {
    for (NodeId v : g.neighbors(u)) a(u, v) = 1.0;
  }
  return a;
}

/// Full symmetric eigendecomposition of the dense adjacency matrix.
inline SpectralDecomposition adjacency_spectrum(const Graph& g, bool with_vectors = false,
                                                std::size_t cap = kDenseNodeCap) {
  if (g.node_count() == 0) throw InvalidArgument("adjacency_spectrum: empty graph");
  check_dense_capacity(g.node_count(), cap, "adjacency_spectrum");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      dense_adjacency(g), with_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw Error("adjacency eigensolver did not converge");

  // Eigen returns ascending order.
  const auto n = solver.eigenvalues().size();
  SpectralDecomposition out;
  out.eigenvalues.resize(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    out.eigenvalues[static_cast<std::size_t>(i)] = solver.eigenvalues()(n - 1 - i);
  }
  if (with_vectors) out.eigenvectors = solver.eigenvectors().rowwise().reverse();
  return out;
}

/// Estrada index kept in log space: log EE = lmax + log sum exp(l_i - lmax).
struct EstradaResult {
  double log_ee = 0.0;
  double ee = 0.0;  // +inf when e^log_ee is not a finite double
  double lambda_max = 0.0;

  bool overflow() const { return std::isinf(ee); }
};

inline EstradaResult estrada_index(const SpectralDecomposition& spec) {
  if (spec.eigenvalues.empty()) throw InvalidArgument("estrada_index: empty spectrum");
  EstradaResult r;
  r.lambda_max = *std::max_element(spec.eigenvalues.begin(), spec.eigenvalues.end());
  double s = 0.0;
  for (double l : spec.eigenvalues) s += std::exp(l - r.lambda_max);
  r.log_ee = r.lambda_max + std::log(s);
  r.ee = r.log_ee < std::log(std::numeric_limits<double>::max())
             ? std::exp(r.log_ee)
             : std::numeric_limits<double>::infinity();
  return r;
}

inline EstradaResult estrada_index(const Graph& g) {
  return estrada_index(adjacency_spectrum(g));
}

/// Communicability G = e^A = V diag(e^l) V^T, built as W W^T with
/// W = V diag(e^{l/2}) and mirrored so G is exactly symmetric.
inline Eigen::MatrixXd communicability_matrix(const SpectralDecomposition& spec,
                                              std::size_t cap = kDenseNodeCap) {
  if (!spec.eigenvectors) {
    throw InvalidArgument("communicability_matrix: eigenvectors were not computed");
  }
  check_dense_capacity(spec.eigenvalues.size(), cap, "communicability_matrix");
  const auto& v = *spec.eigenvectors;
  Eigen::VectorXd half(static_cast<Eigen::Index>(spec.eigenvalues.size()));
  for (std::size_t i = 0; i < spec.eigenvalues.size(); ++i) {
    half(static_cast<Eigen::Index>(i)) = std::exp(0.5 * spec.eigenvalues[i]);
  }
  const Eigen::MatrixXd w = v * half.asDiagonal();
  Eigen::MatrixXd g = w * w.transpose();
  g.triangularView<Eigen::StrictlyLower>() = g.transpose();
  return g;
}

// Truncated Taylor series, sum_{n=0}^{terms} A^n / n!, evaluated column by
// column with neighbor-list products. Shares no code with the eigensolver.

inline std::vector<std::vector<double>> communicability_series_oracle(
    const Graph& g, int terms, std::size_t cap = kSeriesNodeCap) {
  if (terms < 1) throw InvalidArgument("series oracle needs terms >= 1");
  check_dense_capacity(g.node_count(), cap, "communicability_series_oracle");
  const std::size_t n = g.node_count();
  std::vector<std::vector<double>> out(n, std::vector<double>(n, 0.0));
  std::vector<double> term(n), next(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::fill(term.begin(), term.end(), 0.0);
    term[col] = 1.0;
    for (std::size_t r = 0; r < n; ++r) out[r][col] = term[r];
    for (int k = 1; k <= terms; ++k) {
      for (NodeId r = 0; r < n; ++r) {
        double s = 0.0;
        for (NodeId w : g.neighbors(r)) s += term[w];
        next[r] = s / k;
      }
      term.swap(next);
      for (std::size_t r = 0; r < n; ++r) out[r][col] += term[r];
    }
  }
  return out;
}

inline double estrada_series_oracle(const Graph& g, int terms,
                                    std::size_t cap = kSeriesNodeCap) {
  if (terms < 1) throw InvalidArgument("series oracle needs terms >= 1");
  check_dense_capacity(g.node_count(), cap, "estrada_series_oracle");
  const std::size_t n = g.node_count();
  std::vector<double> term(n), next(n);
  double trace = 0.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::fill(term.begin(), term.end(), 0.0);
    term[col] = 1.0;
    double diag = 1.0;
    for (int k = 1; k <= terms; ++k) {
      for (NodeId r = 0; r < n; ++r) {
        double s = 0.0;
        for (NodeId w : g.neighbors(r)) s += term[w];
        next[r] = s / k;
      }
      term.swap(next);
      diag += term[col];
    }
    trace += diag;
  }
  return trace;
}

/// Triplet dump in edge-list style: a "# communicability nodes=N" header,
/// then one "u v G_uv" line per pair u <= v. Small graphs only.
inline void write_communicability_triplets(std::ostream& os, const Eigen::MatrixXd& g) {
  const auto n = static_cast<std::size_t>(g.rows());
  check_dense_capacity(n, kTripletNodeCap, "write_communicability_triplets");
  os << "# communicability nodes=" << n << '\n';
  os.precision(9);
  for (Eigen::Index u = 0; u < g.rows(); ++u) {
    for (Eigen::Index v = u; v < g.cols(); ++v) {
      os << u << ' ' << v << ' ' << g(u, v) << '\n';
    }
  }
}

}  // namespace cliquenet
