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

// Consistency suites run by `walkdist verify`.

#include "walkdist/circuits.hpp"
#include "walkdist/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace walkdist {

enum class CheckStatus { passed, failed, skipped };

const char* to_string(CheckStatus s) noexcept;

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::passed;
  std::string detail;
};

struct GraphReport {
  std::string label;
  std::size_t order = 0;
  std::size_t edges = 0;
  std::string t;
  std::vector<CheckResult> checks;

  bool ok() const;
};

struct VerificationReport {
  std::vector<GraphReport> graphs;

  bool ok() const;
  std::size_t count(CheckStatus s) const;
  std::string to_json() const;
};

struct VerifyOptions {
  double tol = 1e-9;
  int bijection_length = 4;
  int trace_length = 6;
  EnumerationLimits limits;
};

/// Runs every suite on one graph. An unset `t` means 0.5 / rho(A).
GraphReport verify_graph(const ExactMultigraph& g, const std::optional<Rational>& t, const VerifyOptions& options = {},
                         std::string label = "input");

/// Seeded corpus of random connected multigraphs on 3 or 4 vertices.
VerificationReport verify_corpus(std::uint64_t seed, int count, const VerifyOptions& options = {});

}  // namespace walkdist
