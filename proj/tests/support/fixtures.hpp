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

#include "walkdist/graph.hpp"

namespace walkdist::fixtures {

/// Double unit edge 1-2 and unit edge 2-3.
inline ExactMultigraph example_graph() {
  return ExactMultigraph::from_edge_list(3, {{1, 2, Rational(1)}, {1, 2, Rational(1)}, {2, 3, Rational(1)}});
}

inline ExactMultigraph unit_edge() { return ExactMultigraph::from_edge_list(2, {{1, 2, Rational(1)}}); }

inline ExactMultigraph unit_triangle() {
  return ExactMultigraph::from_edge_list(3, {{1, 2, Rational(1)}, {2, 3, Rational(1)}, {1, 3, Rational(1)}});
}

inline ExactMultigraph unit_path(int n) {
  std::vector<std::tuple<VertexId, VertexId, Rational>> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(v, v + 1, Rational(1));
  return ExactMultigraph::from_edge_list(n, edges);
}

}  // namespace walkdist::fixtures
