// Copyright 2026 The walkdist Authors
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

// Exact walk distances of a connected weighted multigraph G.
//
// For 0 < t < 1/rho(A) the walk weight matrix R_t = sum_k (tA)^k = (I - tA)^-1
// is entrywise positive, and
//
//   d_t(i,j) = -ln( r_ij / sqrt(r_ii r_jj) )
//
// is a graph-geodetic metric: d(i,j) + d(j,k) = d(i,k) exactly when every
// path from i to k passes through j. The same quantity is available from
// the cofactors of B = I - tA, and 1 - exp(-d) gives a [0,1]-valued metric
// obeying the correlation triangle inequality.

#include "walkdist/graph.hpp"
#include "walkdist/matrix.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace walkdist {

struct WalkWeightMatrix {
  Matrix<double> values;
  double t = 0.0;
  std::vector<VertexId> vertices;  // row/column labels

  double at(VertexId i, VertexId j) const;
};

struct WalkDistanceMatrix {
  Matrix<double> values;
  double lambda = 1.0;
  std::vector<VertexId> vertices;

  double at(VertexId i, VertexId j) const;
};

struct PMetricMatrix {
  Matrix<double> values;
  std::vector<VertexId> vertices;

  double at(VertexId i, VertexId j) const;
};

struct Triple {
  VertexId i;
  VertexId j;  // the middle vertex
  VertexId k;

  friend bool operator==(const Triple&, const Triple&) = default;
  friend auto operator<=>(const Triple&, const Triple&) = default;
};

struct TransitionReport {
  std::vector<Triple> violations;   // r_ij r_jk > r_ik r_jj beyond tolerance
  std::vector<Triple> equalities;   // distinct i, j, k attaining equality
  std::vector<Triple> mismatches;   // equality status disagrees with the cut predicate
  bool ok() const { return violations.empty() && mismatches.empty(); }
};

struct GeodeticReport {
  std::vector<Triple> additive;     // i < k, j distinct from both, d(i,j)+d(j,k) = d(i,k)
  std::vector<Triple> mismatches;   // additivity disagrees with "every i-k path visits j"
  bool ok() const { return mismatches.empty(); }
};

struct MetricReport {
  bool symmetric = true;
  bool zero_diagonal = true;
  bool positive = true;
  std::vector<Triple> triangle_violations;
  bool ok() const { return symmetric && zero_diagonal && positive && triangle_violations.empty(); }
};

struct SimplePath {
  std::vector<VertexId> vertices;
  std::vector<int> edges;
};

inline constexpr std::size_t kDefaultPathGuard = 12;

/// rho(A) for the adjacency matrix of g.
double adjacency_spectral_radius(const WeightedMultigraph& g);

/// Throws invalid_parameter (t <= 0), not_connected, or parameter_out_of_range
/// (t >= 1/rho, message names rho and the valid interval). Returns rho(A).
double require_walk_parameter(const WeightedMultigraph& g, double t);

WalkWeightMatrix walk_weights(const WeightedMultigraph& g, double t);

/// Partial sum sum_{k=0}^{terms} (tA)^k; same preconditions as walk_weights.
Matrix<double> walk_weights_series(const WeightedMultigraph& g, double t, int terms);

/// d_ij = lambda * (h_ii + h_jj - h_ij - h_ji) / 2 with h = elementwise ln r.
WalkDistanceMatrix walk_distances(const WalkWeightMatrix& r, double lambda = 1.0);

/// d'_ij = 1 - r_ij / sqrt(r_ii r_jj).
PMetricMatrix p_metric(const WalkWeightMatrix& r);

/// True when every path from i to k visits j (i.e. j in {i, k} or removing
/// j separates i from k). Decided by graph search.
bool every_path_visits(const WeightedMultigraph& g, VertexId i, VertexId j, VertexId k);

TransitionReport transition_check(const WeightedMultigraph& g, const WalkWeightMatrix& r, double tol = 1e-9);

/// Compares additivity of d_t against exhaustive simple-path enumeration.
/// Throws too_large when g has more than max_order vertices.
GeodeticReport geodetic_check(const WeightedMultigraph& g, double t, double tol = 1e-9,
                              std::size_t max_order = kDefaultPathGuard);

MetricReport check_metric_axioms(const Matrix<double>& d, const std::vector<VertexId>& vertices,
                                 double tol = 1e-9);

/// Triples violating 1 - d'_ik >= (1 - d'_ij)(1 - d'_jk) beyond tol.
std::vector<Triple> correlation_triangle_violations(const PMetricMatrix& p, double tol = 1e-12);

/// d_t(i,j) from log-cofactors of B = I - tA:
///   0.5 (ln det B_ii + ln det B_jj - ln C_ij - ln C_ji)
/// where C_ij = (-1)^(i+j) det B with row i and column j removed.
double cofactor_distance(const WeightedMultigraph& g, double t, VertexId i, VertexId j);

/// All simple i -> k paths, parallel edges distinguished.
std::vector<SimplePath> enumerate_simple_paths(const WeightedMultigraph& g, VertexId from, VertexId to,
                                               std::size_t max_order = kDefaultPathGuard);

}  // namespace walkdist
