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

#include "walkdist/error.hpp"

namespace walkdist {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_parameter: return "invalid-parameter";
    case ErrorCode::parameter_out_of_range: return "parameter-out-of-range";
    case ErrorCode::invalid_index: return "invalid-index";
    case ErrorCode::empty_graph: return "empty-graph";
    case ErrorCode::not_connected: return "not-connected";
    case ErrorCode::singular_matrix: return "singular-matrix";
    case ErrorCode::no_convergence: return "no-convergence";
    case ErrorCode::divergence: return "divergence";
    case ErrorCode::too_large: return "too-large-for-exhaustive-check";
    case ErrorCode::unsupported: return "unsupported";
    case ErrorCode::parse_error: return "parse-error";
    case ErrorCode::internal_consistency: return "internal-consistency";
  }
  return "unknown";
}

}  // namespace walkdist
