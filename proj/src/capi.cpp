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


#include "walkdist/walkdist.h"

#include "walkdist/error.hpp"
#include "walkdist/graph_io.hpp"
#include "walkdist/routes.hpp"
#include "walkdist/verify.hpp"
#include "walkdist/walk_metric.hpp"

#include <cmath>
#include <cstring>
#include <memory>
#include <optional>
#include <new>
#include <string>
#include <vector>

struct wd_graph {
  walkdist::ExactMultigraph graph;
};

struct wd_expansion {
  struct Row {
    wd_expansion_row values{};
    std::string signed_exact, cumulative_exact, circuits, round_trip, crossing;
  };
  std::vector<Row> rows;
  bool exact = false;
  double cumulative = 0.0;
  std::string cumulative_exact;
  double exact_distance = 0.0;
  double residual = 0.0;
  double jump_rho = 0.0;
};

namespace {

using walkdist::Error;
using walkdist::ErrorCode;
using walkdist::Rational;

thread_local std::string last_error;

wd_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_parameter: return WD_INVALID_PARAMETER;
    case ErrorCode::parameter_out_of_range: return WD_PARAMETER_OUT_OF_RANGE;
    case ErrorCode::invalid_index: return WD_INVALID_INDEX;
    case ErrorCode::empty_graph: return WD_EMPTY_GRAPH;
    case ErrorCode::not_connected: return WD_NOT_CONNECTED;
    case ErrorCode::singular_matrix: return WD_SINGULAR_MATRIX;
    case ErrorCode::no_convergence: return WD_NO_CONVERGENCE;
    case ErrorCode::divergence: return WD_DIVERGENCE;
    case ErrorCode::too_large: return WD_TOO_LARGE;
    case ErrorCode::unsupported: return WD_UNSUPPORTED;
    case ErrorCode::parse_error: return WD_PARSE_ERROR;
    case ErrorCode::internal_consistency: return WD_INTERNAL_ERROR;
  }
  return WD_INTERNAL_ERROR;
}

template <class F>
wd_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return WD_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return WD_OUT_OF_MEMORY;
  } catch (const std::exception& e) {
    last_error = e.what();
    return WD_INTERNAL_ERROR;
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw Error(ErrorCode::invalid_parameter, std::string(what) + " must not be null");
}

Rational parse_t(const char* t) {
  require(t, "t");
  try {
    return walkdist::parse_rational(t);
  } catch (const Error& e) {
    throw Error(ErrorCode::invalid_parameter, std::string("t: ") + e.what());
  }
}

bool is_ratio(const char* t) { return std::strchr(t, '/') != nullptr; }

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void copy_matrix(const walkdist::Matrix<double>& m, double* out) {
  std::memcpy(out, m.data().data(), m.data().size() * sizeof(double));
}

std::string listing(const std::vector<walkdist::FigureCollection>& figures) {
  std::string s;
  for (const auto& f : figures) s += (s.empty() ? "" : " ") + f.notation();
  return s;
}

template <class S>
void fill_expansion(wd_expansion& out, const walkdist::DistanceExpansion<S>& ex) {
  out.exact = walkdist::is_exact_v<S>;
  out.cumulative = walkdist::to_double(ex.cumulative);
  if constexpr (walkdist::is_exact_v<S>) out.cumulative_exact = walkdist::format_rational(ex.cumulative);
  out.exact_distance = ex.exact;
  out.residual = ex.residual;
  out.jump_rho = ex.jump_rho;
  out.rows.resize(ex.rows.size());
  for (std::size_t k = 0; k < ex.rows.size(); ++k) {
    const auto& src = ex.rows[k];
    wd_expansion::Row& row = out.rows[k];
    if constexpr (walkdist::is_exact_v<S>) {
      row.signed_exact = walkdist::format_rational(src.signed_sum);
      row.cumulative_exact = walkdist::format_rational(src.cumulative);
    }
    row.circuits = listing(src.circuit_figures);
    row.round_trip = listing(src.round_trip_figures);
    row.crossing = listing(src.crossing_figures);
    row.values.length = src.length;
    row.values.circuits_i_only = walkdist::to_double(src.circuits_i_only);
    row.values.circuits_j_only = walkdist::to_double(src.circuits_j_only);
    row.values.round_trip = walkdist::to_double(src.round_trip);
    row.values.crossing = walkdist::to_double(src.crossing);
    row.values.signed_sum = walkdist::to_double(src.signed_sum);
    row.values.cumulative = walkdist::to_double(src.cumulative);
  }
  // Pointers are taken after the vector stops growing.
  for (wd_expansion::Row& row : out.rows) {
    row.values.signed_sum_exact = row.signed_exact.c_str();
    row.values.cumulative_exact = row.cumulative_exact.c_str();
    row.values.circuit_figures = row.circuits.c_str();
    row.values.round_trip_figures = row.round_trip.c_str();
    row.values.crossing_figures = row.crossing.c_str();
  }
}

walkdist::VerifyOptions verify_options(const wd_verify_options* o) {
  walkdist::VerifyOptions options;
  options.limits = walkdist::EnumerationLimits::from_environment();
  if (o == nullptr) return options;
  if (o->tol > 0.0) options.tol = o->tol;
  if (o->bijection_length > 0) options.bijection_length = o->bijection_length;
  if (o->trace_length > 0) options.trace_length = o->trace_length;
  return options;
}

}  // namespace

extern "C" {

const char* wd_status_name(wd_status status) {
  switch (status) {
    case WD_OK: return "ok";
    case WD_INVALID_PARAMETER: return "invalid-parameter";
    case WD_PARAMETER_OUT_OF_RANGE: return "parameter-out-of-range";
    case WD_INVALID_INDEX: return "invalid-index";
    case WD_EMPTY_GRAPH: return "empty-graph";
    case WD_NOT_CONNECTED: return "not-connected";
    case WD_SINGULAR_MATRIX: return "singular-matrix";
    case WD_NO_CONVERGENCE: return "no-convergence";
    case WD_DIVERGENCE: return "divergence";
    case WD_TOO_LARGE: return "too-large-for-exhaustive-check";
    case WD_UNSUPPORTED: return "unsupported";
    case WD_PARSE_ERROR: return "parse-error";
    case WD_INTERNAL_ERROR: return "internal-error";
    case WD_OUT_OF_MEMORY: return "out-of-memory";
  }
  return "unknown";
}

const char* wd_last_error(void) { return last_error.c_str(); }

wd_status wd_graph_parse(const char* text, wd_graph** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new wd_graph{walkdist::parse_graph_text(text)};
  });
}

wd_status wd_graph_load(const char* path, wd_graph** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new wd_graph{walkdist::load_graph(path)};
  });
}

wd_status wd_graph_from_edges(size_t n, size_t m, const int* u, const int* v, const double* w, wd_graph** out) {
  return guarded([&] {
    require(out, "out");
    if (m > 0) {
      require(u, "u");
      require(v, "v");
      require(w, "w");
    }
    std::vector<std::tuple<walkdist::VertexId, walkdist::VertexId, Rational>> edges;
    for (size_t k = 0; k < m; ++k) {
      if (!(w[k] > 0.0) || !std::isfinite(w[k])) {
        throw Error(ErrorCode::invalid_parameter, "edge weights must be positive and finite");
      }
      edges.emplace_back(u[k], v[k], walkdist::to_rational(w[k]));
    }
    *out = new wd_graph{walkdist::ExactMultigraph::from_edge_list(static_cast<int>(n), edges)};
  });
}

void wd_graph_free(wd_graph* g) { delete g; }

size_t wd_graph_order(const wd_graph* g) { return g == nullptr ? 0 : g->graph.order(); }

size_t wd_graph_edge_count(const wd_graph* g) { return g == nullptr ? 0 : g->graph.edges().size(); }

wd_status wd_graph_vertices(const wd_graph* g, int* out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    const auto& v = g->graph.vertices();
    std::copy(v.begin(), v.end(), out);
  });
}

wd_status wd_graph_dump(const wd_graph* g, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = copy_string(walkdist::format_graph(g->graph));
  });
}

void wd_string_free(char* s) { delete[] s; }

wd_status wd_spectral_radius(const wd_graph* g, double* rho) {
  return guarded([&] {
    require(g, "graph");
    require(rho, "rho");
    *rho = walkdist::adjacency_spectral_radius(walkdist::to_double(g->graph));
  });
}

wd_status wd_walk_weights(const wd_graph* g, const char* t, double* out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    copy_matrix(walkdist::walk_weights(walkdist::to_double(g->graph), walkdist::to_double(parse_t(t))).values, out);
  });
}

wd_status wd_walk_distances(const wd_graph* g, const char* t, double lambda, double* out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    const auto r = walkdist::walk_weights(walkdist::to_double(g->graph), walkdist::to_double(parse_t(t)));
    copy_matrix(walkdist::walk_distances(r, lambda).values, out);
  });
}

wd_status wd_p_metric(const wd_graph* g, const char* t, double* out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    const auto r = walkdist::walk_weights(walkdist::to_double(g->graph), walkdist::to_double(parse_t(t)));
    copy_matrix(walkdist::p_metric(r).values, out);
  });
}

wd_status wd_cofactor_distance(const wd_graph* g, const char* t, int i, int j, double* out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = walkdist::cofactor_distance(walkdist::to_double(g->graph), walkdist::to_double(parse_t(t)), i, j);
  });
}

wd_status wd_jump_spectral_radius(const wd_graph* g, const char* t, int i, int j, double* rho) {
  return guarded([&] {
    require(g, "graph");
    require(rho, "rho");
    *rho = walkdist::jump_spectral_radius(walkdist::jump_digraph(g->graph, parse_t(t), i, j));
  });
}

wd_status wd_expand(const wd_graph* g, const char* t, int i, int j, int max_length, wd_expansion** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    if (max_length < 1) throw Error(ErrorCode::invalid_parameter, "the expansion depth must be at least 1");
    const Rational tr = parse_t(t);
    const auto limits = walkdist::EnumerationLimits::from_environment();
    auto e = std::make_unique<wd_expansion>();
    if (is_ratio(t)) {
      fill_expansion(*e, walkdist::distance_expansion(g->graph, tr, i, j, max_length, limits));
    } else {
      fill_expansion(*e, walkdist::distance_expansion(walkdist::to_double(g->graph), walkdist::to_double(tr), i, j,
                                                      max_length, limits));
    }
    *out = e.release();
  });
}

void wd_expansion_free(wd_expansion* e) { delete e; }

size_t wd_expansion_rows(const wd_expansion* e) { return e == nullptr ? 0 : e->rows.size(); }

wd_status wd_expansion_row_at(const wd_expansion* e, size_t k, wd_expansion_row* row) {
  return guarded([&] {
    require(e, "expansion");
    require(row, "row");
    if (k >= e->rows.size()) throw Error(ErrorCode::invalid_index, "row index out of range");
    *row = e->rows[k].values;
  });
}

int wd_expansion_is_exact(const wd_expansion* e) { return e != nullptr && e->exact ? 1 : 0; }
double wd_expansion_cumulative(const wd_expansion* e) { return e == nullptr ? 0.0 : e->cumulative; }
const char* wd_expansion_cumulative_exact(const wd_expansion* e) {
  return e == nullptr ? "" : e->cumulative_exact.c_str();
}
double wd_expansion_exact_distance(const wd_expansion* e) { return e == nullptr ? 0.0 : e->exact_distance; }
double wd_expansion_residual(const wd_expansion* e) { return e == nullptr ? 0.0 : e->residual; }
double wd_expansion_jump_rho(const wd_expansion* e) { return e == nullptr ? 0.0 : e->jump_rho; }

wd_status wd_verify(const wd_graph* g, const char* t, const wd_verify_options* options, char** report_json,
                    int* passed) {
  return guarded([&] {
    require(g, "graph");
    require(report_json, "report_json");
    require(passed, "passed");
    std::optional<Rational> tr;
    if (t != nullptr) tr = parse_t(t);
    walkdist::VerificationReport report;
    report.graphs.push_back(walkdist::verify_graph(g->graph, tr, verify_options(options)));
    *passed = report.ok() ? 1 : 0;
    *report_json = copy_string(report.to_json());
  });
}

wd_status wd_verify_corpus(uint64_t seed, int count, const wd_verify_options* options, char** report_json,
                           int* passed) {
  return guarded([&] {
    require(report_json, "report_json");
    require(passed, "passed");
    if (count < 1) throw Error(ErrorCode::invalid_parameter, "corpus size must be at least 1");
    const walkdist::VerificationReport report = walkdist::verify_corpus(seed, count, verify_options(options));
    *passed = report.ok() ? 1 : 0;
    *report_json = copy_string(report.to_json());
  });
}

}  // extern "C"
