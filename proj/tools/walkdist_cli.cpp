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


// walkdist command-line tool. Talks to the library only through walkdist.h.

#include "walkdist/walkdist.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

enum Exit { kOk = 0, kFailure = 1, kUsage = 2, kParse = 3, kRange = 4, kVerification = 5 };

int exit_code(wd_status s) {
  switch (s) {
    case WD_OK: return kOk;
    case WD_PARSE_ERROR: return kParse;
    case WD_INVALID_PARAMETER:
    case WD_INVALID_INDEX:
    case WD_UNSUPPORTED: return kUsage;
    case WD_PARAMETER_OUT_OF_RANGE:
    case WD_EMPTY_GRAPH:
    case WD_NOT_CONNECTED:
    case WD_SINGULAR_MATRIX:
    case WD_NO_CONVERGENCE:
    case WD_DIVERGENCE:
    case WD_TOO_LARGE: return kRange;
    case WD_INTERNAL_ERROR:
    case WD_OUT_OF_MEMORY: return kFailure;
  }
  return kFailure;
}

struct Failure {
  int code;
};

void check(wd_status s) {
  if (s == WD_OK) return;
  std::cerr << "walkdist: " << wd_status_name(s) << ": " << wd_last_error() << "\n";
  throw Failure{exit_code(s)};
}

struct GraphDeleter {
  void operator()(wd_graph* g) const { wd_graph_free(g); }
};
struct ExpansionDeleter {
  void operator()(wd_expansion* e) const { wd_expansion_free(e); }
};
struct StringDeleter {
  void operator()(char* s) const { wd_string_free(s); }
};
using GraphPtr = std::unique_ptr<wd_graph, GraphDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

// Both output formats render reals the same way.
std::string num(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string json_num(double x) { return std::isfinite(x) ? num(x) : "null"; }

std::string quote(const std::string& s) { return nlohmann::json(s).dump(); }

std::vector<std::string> split_words(const char* s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

std::string json_strings(const std::vector<std::string>& items) {
  std::string s = "[";
  for (std::size_t k = 0; k < items.size(); ++k) s += (k ? ", " : "") + quote(items[k]);
  return s + "]";
}

struct Options {
  std::string graph;
  std::string t;
  std::vector<int> pair;
  int max_len = 5;
  double lambda = 1.0;
  bool pmetric = false;
  bool weights = false;
  std::string format = "tsv";
  double tol = 0.0;
  std::optional<std::uint64_t> seed;
  int count = 20;
  bool dump_graph = false;
};

GraphPtr load(const Options& o) {
  wd_graph* g = nullptr;
  check(wd_graph_load(o.graph.c_str(), &g));
  return GraphPtr(g);
}

bool dump_if_requested(const Options& o, const wd_graph* g) {
  if (!o.dump_graph) return false;
  char* text = nullptr;
  check(wd_graph_dump(g, &text));
  StringPtr owner(text);
  std::cout << text;
  return true;
}

std::vector<int> vertices_of(const wd_graph* g) {
  std::vector<int> v(wd_graph_order(g));
  check(wd_graph_vertices(g, v.data()));
  return v;
}

void print_matrix_tsv(const std::string& title, const std::vector<int>& labels, const std::vector<double>& m) {
  const std::size_t n = labels.size();
  std::cout << "# " << title << "\n";
  std::cout << "vertex";
  for (int v : labels) std::cout << '\t' << v;
  std::cout << '\n';
  for (std::size_t r = 0; r < n; ++r) {
    std::cout << labels[r];
    for (std::size_t c = 0; c < n; ++c) std::cout << '\t' << num(m[r * n + c]);
    std::cout << '\n';
  }
}

std::string matrix_json(const std::vector<double>& m, std::size_t n) {
  std::string s = "[";
  for (std::size_t r = 0; r < n; ++r) {
    s += r ? ",\n    [" : "\n    [";
    for (std::size_t c = 0; c < n; ++c) s += (c ? ", " : "") + json_num(m[r * n + c]);
    s += "]";
  }
  return s + "\n  ]";
}

int cmd_dist(const Options& o) {
  GraphPtr g = load(o);
  if (dump_if_requested(o, g.get())) return kOk;
  const std::vector<int> labels = vertices_of(g.get());
  const std::size_t n = labels.size();
  std::vector<double> r(n * n), d(n * n), p(n * n);
  check(wd_walk_weights(g.get(), o.t.c_str(), r.data()));
  check(wd_walk_distances(g.get(), o.t.c_str(), o.lambda, d.data()));
  if (o.pmetric) check(wd_p_metric(g.get(), o.t.c_str(), p.data()));

  if (o.format == "json") {
    std::cout << "{\n  \"t\": " << quote(o.t) << ",\n  \"lambda\": " << json_num(o.lambda) << ",\n  \"vertices\": [";
    for (std::size_t k = 0; k < n; ++k) std::cout << (k ? ", " : "") << labels[k];
    std::cout << "]";
    if (o.weights) std::cout << ",\n  \"walk_weights\": " << matrix_json(r, n);
    std::cout << ",\n  \"distances\": " << matrix_json(d, n);
    if (o.pmetric) std::cout << ",\n  \"p_metric\": " << matrix_json(p, n);
    std::cout << "\n}\n";
  } else {
    if (o.weights) print_matrix_tsv("walk weights, t = " + o.t, labels, r);
    print_matrix_tsv("walk distances, t = " + o.t + ", lambda = " + num(o.lambda), labels, d);
    if (o.pmetric) print_matrix_tsv("P-metric, t = " + o.t, labels, p);
  }
  return kOk;
}

int cmd_expand(const Options& o) {
  GraphPtr g = load(o);
  if (dump_if_requested(o, g.get())) return kOk;
  wd_expansion* raw = nullptr;
  check(wd_expand(g.get(), o.t.c_str(), o.pair[0], o.pair[1], o.max_len, &raw));
  std::unique_ptr<wd_expansion, ExpansionDeleter> e(raw);
  const bool exact = wd_expansion_is_exact(e.get()) != 0;
  std::vector<wd_expansion_row> rows(wd_expansion_rows(e.get()));
  for (std::size_t k = 0; k < rows.size(); ++k) check(wd_expansion_row_at(e.get(), k, &rows[k]));
  const double cumulative = wd_expansion_cumulative(e.get());
  const double distance = wd_expansion_exact_distance(e.get());
  const double residual = wd_expansion_residual(e.get());
  const double relative = residual / distance;

  if (o.format == "json") {
    std::cout << "{\n  \"i\": " << o.pair[0] << ",\n  \"j\": " << o.pair[1] << ",\n  \"t\": " << quote(o.t)
              << ",\n  \"exact_arithmetic\": " << (exact ? "true" : "false")
              << ",\n  \"jump_spectral_radius\": " << json_num(wd_expansion_jump_rho(e.get()))
              << ",\n  \"rows\": [";
    for (std::size_t k = 0; k < rows.size(); ++k) {
      const wd_expansion_row& r = rows[k];
      std::cout << (k ? "," : "") << "\n    {\"k\": " << r.length << ", \"signed_sum\": " << json_num(r.signed_sum)
                << ", \"cumulative\": " << json_num(r.cumulative);
      if (exact) {
        std::cout << ", \"signed_sum_exact\": " << quote(r.signed_sum_exact)
                  << ", \"cumulative_exact\": " << quote(r.cumulative_exact);
      }
      std::cout << ", \"circuits\": " << json_strings(split_words(r.circuit_figures))
                << ", \"round_trip\": " << json_strings(split_words(r.round_trip_figures))
                << ", \"crossing\": " << json_strings(split_words(r.crossing_figures)) << "}";
    }
    std::cout << "\n  ],\n  \"cumulative\": " << json_num(cumulative);
    if (exact) std::cout << ",\n  \"cumulative_exact\": " << quote(wd_expansion_cumulative_exact(e.get()));
    std::cout << ",\n  \"distance\": " << json_num(distance) << ",\n  \"residual\": " << json_num(residual)
              << ",\n  \"relative_error\": " << json_num(relative) << "\n}\n";
    return kOk;
  }

  const auto cell = [](const char* s) { return *s ? std::string(s) : std::string("-"); };
  std::cout << "# expansion of d_t(" << o.pair[0] << "," << o.pair[1] << "), t = " << o.t << ", depth "
            << o.max_len << (exact ? ", exact arithmetic" : "") << "\n";
  std::cout << "# jump spectral radius " << num(wd_expansion_jump_rho(e.get())) << "\n";
  std::cout << "k\tsigned_sum\tcumulative";
  if (exact) std::cout << "\tsigned_sum_exact\tcumulative_exact";
  std::cout << "\tcircuits\tround_trip\tcrossing\n";
  for (const wd_expansion_row& r : rows) {
    std::cout << r.length << '\t' << num(r.signed_sum) << '\t' << num(r.cumulative);
    if (exact) std::cout << '\t' << r.signed_sum_exact << '\t' << r.cumulative_exact;
    std::cout << '\t' << cell(r.circuit_figures) << '\t' << cell(r.round_trip_figures) << '\t'
              << cell(r.crossing_figures) << '\n';
  }
  std::cout << "cumulative\t" << num(cumulative);
  if (exact) std::cout << '\t' << wd_expansion_cumulative_exact(e.get());
  std::cout << "\ndistance\t" << num(distance) << "\nresidual\t" << num(residual) << "\nrelative_error\t"
            << num(relative) << '\n';
  return kOk;
}

int cmd_verify(const Options& o) {
  wd_verify_options options{o.tol, o.max_len, 0};
  char* json = nullptr;
  int passed = 0;
  if (o.graph.empty()) {
    if (!o.seed) {
      std::cerr << "walkdist: verify needs a graph file or --seed\n";
      return kUsage;
    }
    check(wd_verify_corpus(*o.seed, o.count, &options, &json, &passed));
  } else {
    GraphPtr g = load(o);
    if (dump_if_requested(o, g.get())) return kOk;
    check(wd_verify(g.get(), o.t.empty() ? nullptr : o.t.c_str(), &options, &json, &passed));
  }
  StringPtr owner(json);
  if (o.format == "json") {
    std::cout << json << '\n';
  } else {
    const nlohmann::json report = nlohmann::json::parse(json);
    std::cout << "graph\tt\tcheck\tstatus\tdetail\n";
    for (const auto& graph : report["graphs"]) {
      for (const auto& c : graph["checks"]) {
        std::cout << graph["label"].get<std::string>() << '\t' << graph["t"].get<std::string>() << '\t'
                  << c["name"].get<std::string>() << '\t' << c["status"].get<std::string>() << '\t'
                  << c["detail"].get<std::string>() << '\n';
      }
    }
    std::cout << "summary\tpassed " << report["passed"] << ", failed " << report["failed"] << ", skipped "
              << report["skipped"] << '\n';
  }
  return passed ? kOk : kVerification;
}

int cmd_spectral(const Options& o) {
  GraphPtr g = load(o);
  if (dump_if_requested(o, g.get())) return kOk;
  double rho = 0.0;
  check(wd_spectral_radius(g.get(), &rho));
  std::optional<double> jump;
  if (!o.pair.empty()) {
    if (o.t.empty()) {
      std::cerr << "walkdist: --pair needs --t\n";
      return kUsage;
    }
    double r = 0.0;
    check(wd_jump_spectral_radius(g.get(), o.t.c_str(), o.pair[0], o.pair[1], &r));
    jump = r;
  }
  const double upper = rho > 0.0 ? 1.0 / rho : INFINITY;
  if (o.format == "json") {
    std::cout << "{\n  \"spectral_radius\": " << json_num(rho) << ",\n  \"t_interval\": [0, " << json_num(upper)
              << "]";
    if (jump) std::cout << ",\n  \"jump_spectral_radius\": " << json_num(*jump);
    std::cout << "\n}\n";
  } else {
    std::cout << "spectral_radius\t" << num(rho) << "\nt_interval\t0\t" << num(upper) << '\n';
    if (jump) std::cout << "jump_spectral_radius\t" << num(*jump) << '\n';
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Walk distances on weighted multigraphs, exact and by circuit expansion"};
  app.require_subcommand(1);
  Options o;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"tsv", "json"}));
    sub->add_flag("--dump-graph", o.dump_graph, "Print the parsed graph file and exit");
  };

  CLI::App* dist = app.add_subcommand("dist", "Walk distance matrix");
  dist->add_option("graph", o.graph, "Graph file")->required();
  dist->add_option("--t", o.t, "Walk parameter, decimal or p/q")->required();
  dist->add_option("--lambda", o.lambda, "Distance scale");
  dist->add_flag("--pmetric", o.pmetric, "Also print the P-metric 1 - exp(-d)");
  dist->add_flag("--weights", o.weights, "Also print the walk weight matrix");
  add_common(dist);

  CLI::App* expand = app.add_subcommand("expand", "Truncated figure expansion of d_t(i, j)");
  expand->add_option("graph", o.graph, "Graph file")->required();
  expand->add_option("--t", o.t, "Walk parameter, decimal or p/q (p/q selects exact arithmetic)")->required();
  expand->add_option("--pair", o.pair, "Vertices i j")->expected(2)->required();
  expand->add_option("--max-len", o.max_len, "Largest figure length")->check(CLI::PositiveNumber);
  add_common(expand);

  CLI::App* verify = app.add_subcommand("verify", "Run the consistency suites on a graph or a random corpus");
  verify->add_option("graph", o.graph, "Graph file");
  verify->add_option("--t", o.t, "Walk parameter (default 0.5 / rho)");
  verify->add_option("--seed", o.seed, "Seed for a random corpus");
  verify->add_option("--count", o.count, "Corpus size")->check(CLI::PositiveNumber);
  verify->add_option("--max-len", o.max_len, "Route length for the bijection suite")->check(CLI::PositiveNumber);
  verify->add_option("--tol", o.tol, "Tolerance for floating-point checks");
  add_common(verify);

  CLI::App* spectral = app.add_subcommand("spectral", "Spectral radius and the valid range of t");
  spectral->add_option("graph", o.graph, "Graph file")->required();
  spectral->add_option("--t", o.t, "Walk parameter, needed with --pair");
  spectral->add_option("--pair", o.pair, "Vertices i j")->expected(2);
  add_common(spectral);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  if (verify->parsed() && !verify->count("--max-len")) o.max_len = 4;

  try {
    if (dist->parsed()) return cmd_dist(o);
    if (expand->parsed()) return cmd_expand(o);
    if (verify->parsed()) return cmd_verify(o);
    return cmd_spectral(o);
  } catch (const Failure& f) {
    return f.code;
  }
}
