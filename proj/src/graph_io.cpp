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

#include "walkdist/graph_io.hpp"

#include "walkdist/error.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace walkdist {

namespace {

[[noreturn]] void fail(int line, const std::string& what) {
  throw Error(ErrorCode::parse_error, "line " + std::to_string(line) + ": " + what);
}

std::vector<std::string> split_fields(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> fields;
  std::string f;
  while (ss >> f) fields.push_back(f);
  return fields;
}

int parse_int(const std::string& text, int line) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) fail(line, "expected an integer, got '" + text + "'");
  return value;
}

}  // namespace

ExactMultigraph parse_graph(std::istream& in) {
  std::string line;
  int line_no = 0;
  int n = -1;
  std::vector<Edge<Rational>> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const std::vector<std::string> fields = split_fields(line);
    if (n < 0) {
      if (fields.size() != 2 || fields[0] != "n") fail(line_no, "expected header 'n <count>'");
      n = parse_int(fields[1], line_no);
      if (n < 2) fail(line_no, "vertex count must be at least 2");
      continue;
    }
    if (fields.size() != 3) fail(line_no, "expected 'u v w'");
    const int u = parse_int(fields[0], line_no);
    const int v = parse_int(fields[1], line_no);
    if (u < 1 || u > n || v < 1 || v > n) fail(line_no, "vertex out of range 1.." + std::to_string(n));
    Rational w;
    try {
      w = parse_rational(fields[2]);
    } catch (const Error& e) {
      fail(line_no, e.what());
    }
    if (w <= 0) fail(line_no, "edge weight must be positive");
    edges.push_back(Edge<Rational>{static_cast<int>(edges.size()), u, v, w});
  }
  if (n < 0) fail(line_no, "missing header 'n <count>'");
  std::vector<VertexId> vertices(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) vertices[static_cast<std::size_t>(v)] = v + 1;
  return ExactMultigraph(std::move(vertices), std::move(edges));
}

ExactMultigraph parse_graph_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

ExactMultigraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::parse_error, "cannot open '" + path + "'");
  return parse_graph(in);
}

std::string format_graph(const ExactMultigraph& g) {
  // Labels are written by position so graphs after deletion stay valid input.
  std::ostringstream out;
  out << "n " << g.order() << '\n';
  for (const auto& e : g.edges()) {
    out << g.index_of(e.u) + 1 << ' ' << g.index_of(e.v) + 1 << ' ' << format_exact(e.weight) << '\n';
  }
  return out.str();
}

}  // namespace walkdist
