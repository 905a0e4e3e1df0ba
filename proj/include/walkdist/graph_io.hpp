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

// Plain-text graph format:
//
//   # comment; "#" also starts a comment after data
//   n 3
//   1 2 1
//   1 2 1      <- a repeated line is a parallel edge
//   2 3 0.5
//   3 3 1/4    <- "u u w" is a loop
//
// Vertices are 1-based. Weights are decimals (read exactly) or "p/q".

#include "walkdist/graph.hpp"

#include <istream>
#include <string>
#include <string_view>

namespace walkdist {

ExactMultigraph parse_graph(std::istream& in);
ExactMultigraph parse_graph_text(std::string_view text);
ExactMultigraph load_graph(const std::string& path);

/// Inverse of parse_graph: parse_graph_text(format_graph(g)) has the same
/// vertex count and the same edge list, weights included, exactly.
std::string format_graph(const ExactMultigraph& g);

}  // namespace walkdist
