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


#include "walkdist/random_graphs.hpp"

#include "walkdist/circuits.hpp"
#include "walkdist/error.hpp"

#include <cmath>

namespace walkdist {

namespace {

std::size_t pick(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

}  // namespace

ExactMultigraph random_connected_multigraph(std::mt19937_64& rng, const RandomGraphOptions& options) {
  if (options.min_order < 1 || options.min_order > options.max_order) {
    throw Error(ErrorCode::invalid_parameter, "bad order range for random graphs");
  }
  const std::size_t n = pick(rng, options.min_order, options.max_order);
  const auto weight = [&] {
    return Rational(static_cast<long>(pick(rng, 1, static_cast<std::size_t>(options.max_weight_quarters))), 4);
  };
  std::vector<std::tuple<VertexId, VertexId, Rational>> edges;
  for (std::size_t v = 2; v <= n; ++v) {
    edges.emplace_back(static_cast<VertexId>(pick(rng, 1, v - 1)), static_cast<VertexId>(v), weight());
  }
  const std::size_t extra = pick(rng, 0, options.max_extra_edges);
  for (std::size_t k = 0; k < extra; ++k) {
    const auto u = static_cast<VertexId>(pick(rng, 1, n));
    const auto v = static_cast<VertexId>(pick(rng, 1, n));
    if (u == v && !options.loops) continue;
    if (!options.parallel_edges) {
      bool seen = false;
      for (const auto& [a, b, w] : edges) seen = seen || (a == u && b == v) || (a == v && b == u);
      if (seen) continue;
    }
    edges.emplace_back(u, v, weight());
  }
  return ExactMultigraph::from_edge_list(static_cast<int>(n), edges);
}

ExactDigraph random_digraph(std::mt19937_64& rng, const RandomDigraphOptions& options) {
  for (;;) {
    const std::size_t n = pick(rng, options.min_order, options.max_order);
    const std::size_t m = pick(rng, n, 2 * n);
    std::vector<VertexId> vertices;
    for (std::size_t v = 1; v <= n; ++v) vertices.push_back(static_cast<VertexId>(v));
    std::vector<Arc<Rational>> arcs;
    for (std::size_t k = 0; k < m; ++k) {
      Rational w(static_cast<long>(pick(rng, 1, 8)), 4);
      if (options.mixed_signs && pick(rng, 0, 1) == 1) w = -w;
      arcs.push_back(Arc<Rational>{static_cast<int>(k), static_cast<VertexId>(pick(rng, 1, n)),
                                   static_cast<VertexId>(pick(rng, 1, n)), w});
    }
    ExactDigraph d(vertices, arcs);
    const Matrix<double> counts = arc_count_matrix(d);
    if (circuit_count(counts, options.max_depth) > options.max_circuits) continue;

    // Parallel arcs of opposite sign must not cancel here.
    Matrix<double> magnitudes(n, n);
    for (const Arc<Rational>& a : arcs) {
      magnitudes(d.index_of(a.tail), d.index_of(a.head)) += std::fabs(to_double(a.weight));
    }
    const double rho = spectral_radius(magnitudes);
    if (rho > 0.0) {
      // Round the scale down to a multiple of 1/1024 so weights stay short rationals.
      const double scale = std::floor(options.target_rho / rho * 1024.0);
      if (scale < 1.0) continue;
      const Rational factor(static_cast<long>(scale), 1024);
      for (Arc<Rational>& a : arcs) a.weight *= factor;
    }
    return ExactDigraph(std::move(vertices), std::move(arcs));
  }
}

}  // namespace walkdist
