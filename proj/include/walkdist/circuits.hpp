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

// Closed walks and circuits of weighted multidigraphs.
//
// A circuit is a class of closed walks whose arc sequences are cyclic shifts
// of each other. It is represented by the lexicographically least rotation of
// its arc-id sequence; its multiplicity is length / smallest period. With
//
//   S_k = sum over circuits c of length k of w(c) / mu(c)
//
// one has det(I - A) = exp(-sum_k S_k) whenever rho(A) < 1, provided the
// outer sum runs by length (arcs of mixed sign make the series only
// conditionally convergent otherwise). S_k also equals tr(A^k) / k.

#include "walkdist/graph.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace walkdist {

/// Guards for exhaustive enumeration. The environment variable
/// WALKDIST_GUARD (an integer) overrides max_objects.
struct EnumerationLimits {
  std::uint64_t max_objects = 10'000'000;
  int max_route_length = 8;

  static EnumerationLimits from_environment();
};

/// Least rotation of a sequence under T's operator<.
template <class T>
std::vector<T> canonical_rotation(std::span<const T> seq) {
  const std::size_t n = seq.size();
  std::size_t best = 0;
  for (std::size_t start = 1; start < n; ++start) {
    for (std::size_t k = 0; k < n; ++k) {
      const T& a = seq[(start + k) % n];
      const T& b = seq[(best + k) % n];
      if (a < b) {
        best = start;
        break;
      }
      if (b < a) break;
    }
  }
  std::vector<T> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) out.push_back(seq[(best + k) % n]);
  return out;
}

/// Length of the shortest block whose repetition gives the sequence (the
/// sequence length itself when it is not a proper power).
template <class T>
std::size_t smallest_period(std::span<const T> seq) {
  const std::size_t n = seq.size();
  if (n == 0) return 0;
  std::vector<std::size_t> border(n, 0);
  for (std::size_t k = 1; k < n; ++k) {
    std::size_t b = border[k - 1];
    while (b > 0 && !(seq[k] == seq[b])) b = border[b - 1];
    if (seq[k] == seq[b]) ++b;
    border[k] = b;
  }
  const std::size_t p = n - border[n - 1];
  return n % p == 0 ? p : n;
}

template <class S>
struct ClosedWalk {
  VertexId start;
  std::vector<int> arcs;
  S weight;
};

template <class S>
struct Circuit {
  std::vector<int> arcs;        // least rotation
  std::vector<VertexId> tails;  // tails[k] = tail of arcs[k]
  S weight;
  int multiplicity;

  std::size_t length() const noexcept { return arcs.size(); }
  bool visits(VertexId v) const { return std::find(tails.begin(), tails.end(), v) != tails.end(); }
};

/// Borrowed view handed to circuit visitors.
template <class S>
struct CircuitRef {
  std::span<const int> arcs;
  std::span<const VertexId> tails;
  const S& weight;
  int multiplicity;

  std::size_t length() const noexcept { return arcs.size(); }
  bool visits(VertexId v) const { return std::find(tails.begin(), tails.end(), v) != tails.end(); }
};

template <class S>
struct CircuitSum {
  std::vector<S> per_length;  // per_length[k-1] = S_k
  S cumulative = S(0);
  double rho = 0.0;           // spectral radius of the adjacency matrix
  bool convergent = true;     // rho < 1

  int depth() const noexcept { return static_cast<int>(per_length.size()); }
};

/// Exact number of circuits of each length 1..max_length of a digraph with
/// arc-count matrix `counts`, by the necklace (Burnside) formula; summed.
double circuit_count(const Matrix<double>& counts, int max_length);

/// All closed walks of exactly `length` arcs from every start vertex.
template <class S>
std::vector<ClosedWalk<S>> enumerate_closed_walks(const BasicDigraph<S>& d, int length,
                                                  const EnumerationLimits& limits = {});

/// Visits every circuit of length 1..max_length once, generating least
/// rotations directly. Order: by first arc, then depth-first.
template <class S>
void for_each_circuit(const BasicDigraph<S>& d, int max_length,
                      const std::function<void(const CircuitRef<S>&)>& visit,
                      const EnumerationLimits& limits = {});

/// Materialised circuits sorted by (length, arcs).
template <class S>
std::vector<Circuit<S>> circuits_up_to(const BasicDigraph<S>& d, int max_length,
                                       const EnumerationLimits& limits = {});

/// Groups closed walks into circuits by canonical rotation. Slower than
/// circuits_up_to; kept as an independent route for cross-checks.
template <class S>
std::vector<Circuit<S>> group_closed_walks(const BasicDigraph<S>& d, const std::vector<ClosedWalk<S>>& walks);

/// Per-length sums S_k for k <= max_length. A divergent input (rho >= 1)
/// is still summed; `convergent` records the warning.
template <class S>
CircuitSum<S> logdet_expansion(const BasicDigraph<S>& d, int max_length, const EnumerationLimits& limits = {});

/// Product of (1 - w(c)) over non-periodic circuits of length <= max_length.
template <class S>
S nonperiodic_product(const BasicDigraph<S>& d, int max_length, const EnumerationLimits& limits = {});

template <class S>
struct CofactorExpansion {
  CircuitSum<S> total;                  // circuits of tG with i removed
  std::optional<CircuitSum<S>> without_j;  // circuits of tG with i and j removed
  std::optional<CircuitSum<S>> through_j;  // circuits of tG visiting j but not i
};

/// Expansion of -ln det B_ii (B = I - tA) over circuits of tG minus vertex i.
/// With j given, also the split into circuits avoiding j and circuits of tG
/// through j but not i; throws internal_consistency if the two disagree.
template <class S>
CofactorExpansion<S> cofactor_expansion_ii(const BasicMultigraph<S>& g, const S& t, VertexId i,
                                           std::optional<VertexId> j, int max_length,
                                           const EnumerationLimits& limits = {});

}  // namespace walkdist
