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

// Seeded generators for property suites.

#include "walkdist/graph.hpp"

#include <cstdint>
#include <random>

namespace walkdist {

struct RandomGraphOptions {
  std::size_t min_order = 3;
  std::size_t max_order = 5;
  std::size_t max_extra_edges = 3;  // beyond a spanning tree
  bool loops = true;
  bool parallel_edges = true;
  int max_weight_quarters = 8;      // weights are k/4 with 1 <= k <= this
};

/// Connected multigraph on vertices 1..n with weights k/4.
ExactMultigraph random_connected_multigraph(std::mt19937_64& rng, const RandomGraphOptions& options = {});

struct RandomDigraphOptions {
  std::size_t min_order = 1;
  std::size_t max_order = 4;
  double target_rho = 0.5;           // weights are scaled so rho(|A|) <= this
  int max_depth = 25;                // circuits up to this length must fit under `max_circuits`
  double max_circuits = 2e6;
  bool mixed_signs = true;
};

/// Digraph on vertices 1..n with between n and 2n arcs and exact rational weights.
ExactDigraph random_digraph(std::mt19937_64& rng, const RandomDigraphOptions& options = {});

}  // namespace walkdist
