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


#include "walkdist/verify.hpp"

#include "walkdist/error.hpp"
#include "walkdist/random_graphs.hpp"
#include "walkdist/routes.hpp"
#include "walkdist/walk_metric.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

namespace walkdist {

const char* to_string(CheckStatus s) noexcept {
  switch (s) {
    case CheckStatus::passed: return "passed";
    case CheckStatus::failed: return "failed";
    case CheckStatus::skipped: return "skipped";
  }
  return "?";
}

bool GraphReport::ok() const {
  return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::failed; });
}

bool VerificationReport::ok() const {
  return std::all_of(graphs.begin(), graphs.end(), [](const GraphReport& g) { return g.ok(); });
}

std::size_t VerificationReport::count(CheckStatus s) const {
  std::size_t n = 0;
  for (const GraphReport& g : graphs)
    for (const CheckResult& c : g.checks) n += c.status == s ? 1 : 0;
  return n;
}

std::string VerificationReport::to_json() const {
  nlohmann::json out;
  out["ok"] = ok();
  out["passed"] = count(CheckStatus::passed);
  out["failed"] = count(CheckStatus::failed);
  out["skipped"] = count(CheckStatus::skipped);
  out["graphs"] = nlohmann::json::array();
  for (const GraphReport& g : graphs) {
    nlohmann::json entry{{"label", g.label}, {"order", g.order}, {"edges", g.edges}, {"t", g.t}, {"ok", g.ok()}};
    entry["checks"] = nlohmann::json::array();
    for (const CheckResult& c : g.checks) {
      entry["checks"].push_back({{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
    }
    out["graphs"].push_back(std::move(entry));
  }
  return out.dump(2);
}

namespace {

std::string describe(const Triple& x) {
  return "(" + std::to_string(x.i) + "," + std::to_string(x.j) + "," + std::to_string(x.k) + ")";
}

template <class Container>
std::string first_few(const Container& items) {
  std::string s;
  std::size_t shown = 0;
  for (const auto& x : items) {
    if (shown++ == 3) {
      s += " ...";
      break;
    }
    s += (s.empty() ? "" : " ") + describe(x);
  }
  return s;
}

// Runs `body`, which returns an empty string on success or a failure detail.
CheckResult run_check(std::string name, const std::function<std::string()>& body) {
  CheckResult r{std::move(name), CheckStatus::passed, {}};
  try {
    r.detail = body();
    if (!r.detail.empty()) r.status = CheckStatus::failed;
  } catch (const Error& e) {
    r.status = e.code() == ErrorCode::too_large ? CheckStatus::skipped : CheckStatus::failed;
    r.detail = std::string(to_string(e.code())) + ": " + e.what();
  }
  return r;
}

std::vector<std::pair<VertexId, VertexId>> ordered_pairs(const ExactMultigraph& g) {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (VertexId i : g.vertices())
    for (VertexId j : g.vertices())
      if (i != j) pairs.emplace_back(i, j);
  return pairs;
}

}  // namespace

GraphReport verify_graph(const ExactMultigraph& g, const std::optional<Rational>& t_in, const VerifyOptions& options,
                         std::string label) {
  GraphReport report;
  report.label = std::move(label);
  report.order = g.order();
  report.edges = g.edges().size();
  const WeightedMultigraph gd = to_double(g);

  const auto skip_rest = [&](const std::string& why) {
    for (const char* name : {"metric-axioms", "geodetic", "transition", "swap-transform", "jump-matrix",
                             "bijection", "trace-identity", "cofactor"}) {
      report.checks.push_back({name, CheckStatus::skipped, why});
    }
  };
  if (!g.is_connected()) {
    report.checks.push_back({"connectivity", CheckStatus::failed, "not-connected: graph is not connected"});
    skip_rest("requires a connected graph");
    return report;
  }
  report.checks.push_back({"connectivity", CheckStatus::passed, {}});

  Rational t;
  if (t_in) {
    t = *t_in;
  } else {
    const double scaled = std::floor(0.5 / adjacency_spectral_radius(gd) * 1048576.0);
    t = Rational(static_cast<long>(scaled), 1048576);
  }
  report.t = format_exact(t);
  const double td = to_double(t);
  const CheckResult param = run_check("parameter", [&] {
    require_walk_parameter(gd, td);
    return std::string();
  });
  report.checks.push_back(param);
  if (param.status != CheckStatus::passed) {
    skip_rest("requires t inside the convergence interval");
    return report;
  }
  const double tol = options.tol;

  report.checks.push_back(run_check("metric-axioms", [&]() -> std::string {
    const WalkWeightMatrix r = walk_weights(gd, td);
    const WalkDistanceMatrix d = walk_distances(r);
    const MetricReport m = check_metric_axioms(d.values, d.vertices, tol);
    if (!m.ok()) return "distance axioms fail; triangle violations " + first_few(m.triangle_violations);
    const PMetricMatrix p = p_metric(r);
    const auto corr = correlation_triangle_violations(p, tol);
    if (!corr.empty()) return "correlation triangle violations " + first_few(corr);
    for (std::size_t k = 0; k < p.values.data().size(); ++k) {
      if (std::fabs(p.values.data()[k] - (1.0 - std::exp(-d.values.data()[k]))) > tol) {
        return "P-metric differs from 1 - exp(-d)";
      }
    }
    return {};
  }));

  report.checks.push_back(run_check("geodetic", [&]() -> std::string {
    const GeodeticReport r = geodetic_check(gd, td, tol);
    return r.ok() ? std::string() : "additivity disagrees with path separation at " + first_few(r.mismatches);
  }));

  report.checks.push_back(run_check("transition", [&]() -> std::string {
    const TransitionReport r = transition_check(gd, walk_weights(gd, td), tol);
    if (!r.violations.empty()) return "inequality violated at " + first_few(r.violations);
    if (!r.mismatches.empty()) return "equality disagrees with path separation at " + first_few(r.mismatches);
    return {};
  }));

  const std::size_t n = g.order();
  if (n < 3) {
    for (const char* name : {"swap-transform", "jump-matrix", "bijection"}) {
      report.checks.push_back({name, CheckStatus::skipped, "needs at least 3 vertices"});
    }
  } else {
    report.checks.push_back(run_check("swap-transform", [&]() -> std::string {
      for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= n; ++j) {
          if (i == j) continue;
          const auto tr = swap_transform<Rational>(n, i, j);
          const SwapTransformReport s = check_swap_transform(tr);
          const bool det_ok = (i + j) % 2 == 1 || s.unit_determinant;
          if (!s.orthogonal || !det_ok || !s.transpose_is_swap || !s.column_rule || !g_inverse_check(tr).holds) {
            return "property fails for positions (" + std::to_string(i) + "," + std::to_string(j) + ")";
          }
        }
      }
      return {};
    }));

    report.checks.push_back(run_check("jump-matrix", [&]() -> std::string {
      for (const auto& [i, j] : ordered_pairs(g)) {
        // The three constructions are compared inside jump_digraph.
        const JumpDigraph<Rational> jd = jump_digraph(g, t, i, j);
        const ExactMultigraph h = reorder_vertices(g, jd.order);
        const std::size_t pi = h.index_of(i) + 1;
        const std::size_t pj = h.index_of(j) + 1;
        const Matrix<Rational> reduced =
            (Matrix<Rational>::identity(n) - t * build_adjacency(h)).without(pi - 1, pj - 1);
        if (determinant(reduced) != determinant(reduced * swap_transform<Rational>(n, pj, pi).matrix)) {
          return "det B changes under the swap transform for pair (" + std::to_string(i) + "," +
                 std::to_string(j) + ")";
        }
      }
      return {};
    }));

    report.checks.push_back(run_check("bijection", [&]() -> std::string {
      for (const auto& [i, j] : ordered_pairs(g)) {
        if (i > j) continue;
        const BijectionReport b = bijection_check(g, t, i, j, options.bijection_length, options.limits);
        if (!b.ok()) {
          std::string why = b.mismatches.empty() ? std::string("mirror or odd-multiplicity rule fails")
                                                 : b.mismatches.front();
          return "pair (" + std::to_string(i) + "," + std::to_string(j) + "): " + why;
        }
      }
      return {};
    }));
  }

  report.checks.push_back(run_check("trace-identity", [&]() -> std::string {
    const ExactMultigraph tg = scale_graph(g, t);
    const ExactDigraph d = directed_version(tg);
    const CircuitSum<Rational> sums = logdet_expansion(d, options.trace_length, options.limits);
    const Matrix<Rational> a = build_adjacency(d);
    for (int k = 1; k <= options.trace_length; ++k) {
      if (sums.per_length[static_cast<std::size_t>(k - 1)] != power_trace(a, k) / Rational(k)) {
        return "circuit sum differs from tr(A^k)/k at k = " + std::to_string(k);
      }
    }
    return {};
  }));

  report.checks.push_back(run_check("cofactor", [&]() -> std::string {
    const WalkDistanceMatrix d = walk_distances(walk_weights(gd, td));
    for (const auto& [i, j] : ordered_pairs(g)) {
      if (std::fabs(cofactor_distance(gd, td, i, j) - d.at(i, j)) > std::max(tol, 1e-10)) {
        return "cofactor distance differs at (" + std::to_string(i) + "," + std::to_string(j) + ")";
      }
    }
    return {};
  }));
  return report;
}

VerificationReport verify_corpus(std::uint64_t seed, int count, const VerifyOptions& options) {
  std::mt19937_64 rng(seed);
  RandomGraphOptions shape;
  shape.min_order = 3;
  shape.max_order = 4;
  VerificationReport report;
  for (int k = 0; k < count; ++k) {
    const ExactMultigraph g = random_connected_multigraph(rng, shape);
    report.graphs.push_back(verify_graph(g, std::nullopt, options, "random-" + std::to_string(k + 1)));
  }
  return report;
}

}  // namespace walkdist
