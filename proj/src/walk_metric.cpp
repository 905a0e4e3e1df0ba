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

#include "walkdist/walk_metric.hpp"

#include "walkdist/error.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace walkdist {

namespace {

std::size_t position(const std::vector<VertexId>& vertices, VertexId v) {
  const auto it = std::find(vertices.begin(), vertices.end(), v);
  if (it == vertices.end()) throw Error(ErrorCode::invalid_index, "unknown vertex " + std::to_string(v));
  return static_cast<std::size_t>(it - vertices.begin());
}

bool same_within(double a, double b, double tol) {
  return std::fabs(a - b) <= tol * std::max(std::fabs(a), std::fabs(b));
}

double positive_log(double x, const char* what) {
  if (!(x > 0.0)) {
    throw Error(ErrorCode::internal_consistency,
                std::string(what) + " is not positive (" + format_real(x) + ")");
  }
  return std::log(x);
}

}  // namespace

double WalkWeightMatrix::at(VertexId i, VertexId j) const {
  return values(position(vertices, i), position(vertices, j));
}
double WalkDistanceMatrix::at(VertexId i, VertexId j) const {
  return values(position(vertices, i), position(vertices, j));
}
double PMetricMatrix::at(VertexId i, VertexId j) const {
  return values(position(vertices, i), position(vertices, j));
}

double adjacency_spectral_radius(const WeightedMultigraph& g) {
  return spectral_radius(build_adjacency(g));
}

double require_walk_parameter(const WeightedMultigraph& g, double t) {
  if (!(t > 0.0) || !std::isfinite(t)) {
    throw Error(ErrorCode::invalid_parameter, "t must be a positive real, got " + format_real(t));
  }
  if (!g.is_connected()) throw Error(ErrorCode::not_connected, "graph is not connected");
  const double rho = adjacency_spectral_radius(g);
  if (t * rho >= 1.0) {
    throw Error(ErrorCode::parameter_out_of_range,
                "t = " + format_real(t) + " is outside the convergence interval (0, " +
                    format_real(1.0 / rho) + "); rho(A) = " + format_real(rho));
  }
  return rho;
}

WalkWeightMatrix walk_weights(const WeightedMultigraph& g, double t) {
  require_walk_parameter(g, t);
  const std::size_t n = g.order();
  const Matrix<double> b = Matrix<double>::identity(n) - t * build_adjacency(g);
  WalkWeightMatrix r{inverse(b), t, g.vertices()};
  // B is symmetric; drop the rounding asymmetry of the elimination.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const double mean = 0.5 * (r.values(i, j) + r.values(j, i));
      r.values(i, j) = mean;
      r.values(j, i) = mean;
    }
  }
  for (double x : r.values.data()) {
    if (!(x > 0.0)) {
      throw Error(ErrorCode::internal_consistency, "walk weight matrix has a non-positive entry");
    }
  }
  return r;
}

Matrix<double> walk_weights_series(const WeightedMultigraph& g, double t, int terms) {
  require_walk_parameter(g, t);
  if (terms < 0) throw Error(ErrorCode::invalid_parameter, "series length must be nonnegative");
  const Matrix<double> ta = t * build_adjacency(g);
  Matrix<double> term = Matrix<double>::identity(g.order());
  Matrix<double> sum = term;
  for (int k = 1; k <= terms; ++k) {
    term = term * ta;
    sum += term;
  }
  return sum;
}

WalkDistanceMatrix walk_distances(const WalkWeightMatrix& r, double lambda) {
  if (!(lambda > 0.0)) throw Error(ErrorCode::invalid_parameter, "scale factor must be positive");
  const std::size_t n = r.values.rows();
  Matrix<double> h(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) h(a, b) = positive_log(r.values(a, b), "walk weight");
  Matrix<double> d(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      d(a, b) = a == b ? 0.0 : lambda * 0.5 * (h(a, a) + h(b, b) - h(a, b) - h(b, a));
  return {std::move(d), lambda, r.vertices};
}

PMetricMatrix p_metric(const WalkWeightMatrix& r) {
  const std::size_t n = r.values.rows();
  Matrix<double> p(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      p(a, b) = a == b ? 0.0 : 1.0 - r.values(a, b) / std::sqrt(r.values(a, a) * r.values(b, b));
  return {std::move(p), r.vertices};
}

bool every_path_visits(const WeightedMultigraph& g, VertexId i, VertexId j, VertexId k) {
  if (j == i || j == k) return true;
  if (i == k) return false;
  std::vector<bool> seen(g.order(), false);
  seen[g.index_of(i)] = true;
  seen[g.index_of(j)] = true;  // blocked
  std::vector<VertexId> stack{i};
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (int id : g.incident(v)) {
      const VertexId w = g.edge(id).other(v);
      if (w == k) return false;
      const std::size_t pw = g.index_of(w);
      if (!seen[pw]) {
        seen[pw] = true;
        stack.push_back(w);
      }
    }
  }
  return true;
}

TransitionReport transition_check(const WeightedMultigraph& g, const WalkWeightMatrix& r, double tol) {
  TransitionReport report;
  const auto& vs = r.vertices;
  const std::size_t n = vs.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        const double lhs = r.values(a, b) * r.values(b, c);
        const double rhs = r.values(a, c) * r.values(b, b);
        const Triple triple{vs[a], vs[b], vs[c]};
        const double scale = std::max(std::fabs(lhs), std::fabs(rhs));
        if (lhs - rhs > tol * scale) report.violations.push_back(triple);
        if (a == b || b == c || a == c) continue;
        const bool equal = same_within(lhs, rhs, tol);
        if (equal) report.equalities.push_back(triple);
        if (equal != every_path_visits(g, vs[a], vs[b], vs[c])) report.mismatches.push_back(triple);
      }
  return report;
}

GeodeticReport geodetic_check(const WeightedMultigraph& g, double t, double tol, std::size_t max_order) {
  if (g.order() > max_order) {
    throw Error(ErrorCode::too_large, "geodetic check enumerates simple paths; graph has " +
                                          std::to_string(g.order()) + " vertices, limit " +
                                          std::to_string(max_order));
  }
  const WalkDistanceMatrix d = walk_distances(walk_weights(g, t));
  GeodeticReport report;
  const auto& vs = g.vertices();
  const std::size_t n = vs.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = a + 1; c < n; ++c) {
      const std::vector<SimplePath> paths = enumerate_simple_paths(g, vs[a], vs[c], max_order);
      for (std::size_t b = 0; b < n; ++b) {
        if (b == a || b == c) continue;
        const double via = d.values(a, b) + d.values(b, c);
        const bool additive = same_within(via, d.values(a, c), tol);
        const bool cut = std::all_of(paths.begin(), paths.end(), [&](const SimplePath& p) {
          return std::find(p.vertices.begin(), p.vertices.end(), vs[b]) != p.vertices.end();
        });
        const Triple triple{vs[a], vs[b], vs[c]};
        if (additive) report.additive.push_back(triple);
        if (additive != cut) report.mismatches.push_back(triple);
      }
    }
  return report;
}

MetricReport check_metric_axioms(const Matrix<double>& d, const std::vector<VertexId>& vertices, double tol) {
  MetricReport report;
  const std::size_t n = d.rows();
  for (std::size_t a = 0; a < n; ++a) {
    if (std::fabs(d(a, a)) > tol) report.zero_diagonal = false;
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b) continue;
      if (std::fabs(d(a, b) - d(b, a)) > tol * std::max(1.0, std::fabs(d(a, b)))) report.symmetric = false;
      if (!(d(a, b) > 0.0)) report.positive = false;
      for (std::size_t c = 0; c < n; ++c) {
        if (d(a, c) > d(a, b) + d(b, c) + tol * std::max(1.0, d(a, c))) {
          report.triangle_violations.push_back({vertices[a], vertices[b], vertices[c]});
        }
      }
    }
  }
  return report;
}

std::vector<Triple> correlation_triangle_violations(const PMetricMatrix& p, double tol) {
  std::vector<Triple> bad;
  const std::size_t n = p.values.rows();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        const double lhs = 1.0 - p.values(a, c);
        const double rhs = (1.0 - p.values(a, b)) * (1.0 - p.values(b, c));
        if (lhs < rhs - tol) bad.push_back({p.vertices[a], p.vertices[b], p.vertices[c]});
      }
  return bad;
}

double cofactor_distance(const WeightedMultigraph& g, double t, VertexId i, VertexId j) {
  require_walk_parameter(g, t);
  if (i == j) throw Error(ErrorCode::invalid_parameter, "cofactor distance needs i != j");
  const std::size_t pi = g.index_of(i);
  const std::size_t pj = g.index_of(j);
  const Matrix<double> b = Matrix<double>::identity(g.order()) - t * build_adjacency(g);
  const double sign = (pi + pj) % 2 == 0 ? 1.0 : -1.0;
  const double ln_ii = positive_log(determinant(b.without(pi, pi)), "det B_ii");
  const double ln_jj = positive_log(determinant(b.without(pj, pj)), "det B_jj");
  const double ln_ij = positive_log(sign * determinant(b.without(pi, pj)), "cofactor C_ij");
  const double ln_ji = positive_log(sign * determinant(b.without(pj, pi)), "cofactor C_ji");
  return 0.5 * (ln_ii + ln_jj - ln_ij - ln_ji);
}

std::vector<SimplePath> enumerate_simple_paths(const WeightedMultigraph& g, VertexId from, VertexId to,
                                               std::size_t max_order) {
  if (g.order() > max_order) {
    throw Error(ErrorCode::too_large, "simple path enumeration limited to " + std::to_string(max_order) +
                                          " vertices, graph has " + std::to_string(g.order()));
  }
  (void)g.index_of(from);
  (void)g.index_of(to);
  std::vector<SimplePath> paths;
  std::vector<bool> on_path(g.order(), false);
  SimplePath current{{from}, {}};
  on_path[g.index_of(from)] = true;
  std::function<void(VertexId)> extend = [&](VertexId v) {
    if (v == to) {
      paths.push_back(current);
      return;
    }
    for (int id : g.incident(v)) {
      const Edge<double>& e = g.edge(id);
      if (e.is_loop()) continue;
      const VertexId w = e.other(v);
      const std::size_t pw = g.index_of(w);
      if (on_path[pw]) continue;
      on_path[pw] = true;
      current.vertices.push_back(w);
      current.edges.push_back(id);
      extend(w);
      current.vertices.pop_back();
      current.edges.pop_back();
      on_path[pw] = false;
    }
  };
  extend(from);
  return paths;
}

}  // namespace walkdist
