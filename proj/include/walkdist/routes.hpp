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

// Topological expansion of the walk distance d_t(i,j).
//
// With B = I - tA, the off-diagonal cofactor det B_(i,j) (row i, column j
// removed) does not expand directly over circuits. Multiplying by the
// orthogonal swap transform T_ji (unit determinant when i + j is even) gives
// a matrix I - M whose "jump digraph" M has the vertices of G minus i and j,
// plus a merged vertex ij carrying a weight-1 loop (the jump), negative loops
// for the i-j edges, outgoing arcs t*a_jm and incoming arcs -t*a_mi.
//
// Circuits of that digraph through ij correspond one-to-one to alternating
// routes in G: cyclic classes of walks between j and i that alternate
// hitting walks (j -> i or i -> j, touching the endpoints only at their ends)
// with jumps (weight-1 loops attached at i and j). Summing circuits and
// routes by length yields
//
//   d_t(i,j) = 1/2 sum_k [ - circuits through i avoiding j
//                          - circuits through j avoiding i
//                          + routes j->i->j and i->j->i
//                          - routes j->i and i->j ]   (each term w / mu).

#include "walkdist/circuits.hpp"
#include "walkdist/graph.hpp"
#include "walkdist/matrix.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace walkdist {

// ---------------------------------------------------------------------------
// Swap transform

/// T_ij: identity of order n with entry (j,i) set to -1, then row i and
/// column j removed. i, j are 1-based positions.
template <class S>
struct SwapTransform {
  std::size_t n = 0;
  std::size_t i = 0;
  std::size_t j = 0;
  Matrix<S> matrix;
};

template <class S>
SwapTransform<S> swap_transform(std::size_t n, std::size_t i, std::size_t j);

/// Row/column (1-based) of the merged vertex: j when j < i, else j - 1.
std::size_t merged_position(std::size_t i, std::size_t j);

struct SwapTransformReport {
  bool orthogonal = false;          // T^T T = I
  bool unit_determinant = false;    // det T = 1 (only claimed for even i + j)
  bool transpose_is_swap = false;   // T_ij^T = T_ji
  bool column_rule = false;         // M_(i,j) T^-1 = M minus row i, column i negated into j's slot
};

template <class S>
SwapTransformReport check_swap_transform(const SwapTransform<S>& t);

struct GInverseReport {
  bool holds = false;  // I_(i,j) T^-1 I_(i,j) = I_(i,j), and I_(i,j) T^-1 = I with kk zeroed
  std::size_t k = 0;
};

template <class S>
GInverseReport g_inverse_check(const SwapTransform<S>& t);

// ---------------------------------------------------------------------------
// Jump digraph

enum class ArcRole { internal, jump, cross, outgoing, incoming };

template <class S>
struct JumpDigraph {
  VertexId i = 0;
  VertexId j = 0;
  VertexId merged = 0;               // label used for vertex ij (j's label)
  std::vector<VertexId> order;       // vertex order of G used for the matrices
  bool relabeled = false;            // order differs from G's own order
  std::size_t merged_position = 0;   // 1-based row/column of ij
  BasicDigraph<S> digraph;           // vertices: order without i
  std::map<int, ArcRole> roles;
  int jump_arc = 0;
  Matrix<S> algebraic;    // I - B_(i,j) T_ji
  Matrix<S> procedural;   // tA with ta_ji -> ta_ji - 1, row i dropped, column i negated into j's slot
  Matrix<S> constructed;  // adjacency of `digraph`

  bool is_negative(int arc) const {
    const ArcRole r = roles.at(arc);
    return r == ArcRole::cross || r == ArcRole::incoming;
  }
};

/// Builds the jump digraph for the pair (i, j) of g at parameter t and checks
/// that the three constructions of its matrix coincide (throws
/// internal_consistency otherwise). When the positions of i and j have odd
/// sum, vertices are reordered so that i comes first and j third.
template <class S>
JumpDigraph<S> jump_digraph(const BasicMultigraph<S>& g, const S& t, VertexId i, VertexId j);

/// Spectral radius of the jump digraph matrix.
template <class S>
double jump_spectral_radius(const JumpDigraph<S>& jd);

// ---------------------------------------------------------------------------
// Alternating walks and routes with jumps

enum class RouteFamily { j_to_i, i_to_j, j_to_i_to_j, i_to_j_to_i };
enum class FigureClass { j_to_i, i_to_j, j_to_i_to_j, i_to_j_to_i, jump_only };

const char* to_string(RouteFamily f) noexcept;
const char* to_string(FigureClass f) noexcept;

inline constexpr int kJumpEdge = -1;

/// A walk in G with weight-1 jump loops attached at i and j.
template <class S>
struct JumpWalk {
  std::vector<VertexId> vertices;  // v0 .. vm
  std::vector<int> edges;          // edge ids of G; kJumpEdge marks a jump
  S weight;

  std::size_t length() const noexcept { return edges.size(); }
};

/// One block of a route partition: a jump (either endpoint), or a hitting
/// walk between i and j identified with its reversal. The edge list of a
/// hitting block is the lexicographically smaller of the two directions.
struct RoutePiece {
  int kind = 0;  // 0 jump, 1 hitting walk
  std::vector<int> edges;

  friend bool operator==(const RoutePiece&, const RoutePiece&) = default;
  friend auto operator<=>(const RoutePiece&, const RoutePiece&) = default;

  std::size_t length() const noexcept { return kind == 0 ? 1 : edges.size(); }
};

template <class S>
struct AlternatingRoute {
  RouteFamily family;
  FigureClass figure;
  std::vector<RoutePiece> partition;  // least rotation
  int length;
  S weight;
  int multiplicity;                   // pieces / smallest period
  std::size_t walk_count;             // walks in the class
  JumpWalk<S> representative;         // the walk whose partition is `partition`

  int sign_exponent() const noexcept {
    return family == RouteFamily::j_to_i || family == RouteFamily::i_to_j ? 1 : 0;
  }
};

/// Literal test of the alternation rule: every j..j stretch of the walk
/// visits i or consists of jumps only, and likewise for i..i. Also checks
/// that the walk is a walk of G plus the two jump loops.
template <class S>
bool is_alternating(const BasicMultigraph<S>& g, const JumpWalk<S>& w, VertexId i, VertexId j);

/// Splits an alternating walk at every visit of i or j.
template <class S>
std::vector<RoutePiece> route_partition(const JumpWalk<S>& w, VertexId i, VertexId j);

/// All alternating walks with jumps of exactly `length` steps of one family,
/// with edge weights multiplied by t. Requires n >= 3 and
/// length <= limits.max_route_length.
template <class S>
std::vector<JumpWalk<S>> enumerate_alternating_walks(const BasicMultigraph<S>& g, const S& t, VertexId i,
                                                     VertexId j, int length, RouteFamily family,
                                                     const EnumerationLimits& limits = {});

/// Alternating routes of lengths 1..max_length, sorted by (length, partition).
template <class S>
std::vector<AlternatingRoute<S>> routes_up_to(const BasicMultigraph<S>& g, const S& t, VertexId i, VertexId j,
                                              int max_length, RouteFamily family,
                                              const EnumerationLimits& limits = {});

// ---------------------------------------------------------------------------
// Checks and expansions

struct BijectionRow {
  int length = 0;
  std::size_t gamma_odd = 0;    // circuits through ij with an odd number of negative arcs
  std::size_t gamma_even = 0;
  std::size_t routes_ji = 0;
  std::size_t routes_jij = 0;
  double gamma_signed = 0.0;    // sum of w / mu over circuits through ij (signed weights)
  double routes_signed = 0.0;   // sum of (-1)^zeta w / mu over routes
};

struct BijectionReport {
  std::vector<BijectionRow> rows;
  std::vector<std::string> mismatches;
  bool mirror_ok = false;            // j->i->j vs i->j->i and j->i vs i->j
  bool odd_multiplicity_ok = false;  // every j->i and i->j route has odd multiplicity
  bool ok() const { return mismatches.empty() && mirror_ok && odd_multiplicity_ok; }
};

/// Maps every circuit of the jump digraph through ij to a route partition
/// and checks that this is a bijection onto the j->i (odd) and j->i->j
/// (even) routes preserving length, weight and multiplicity.
template <class S>
BijectionReport bijection_check(const BasicMultigraph<S>& g, const S& t, VertexId i, VertexId j, int max_length,
                                const EnumerationLimits& limits = {});

template <class S>
struct LogdetPairExpansion {
  CircuitSum<S> gamma_side;   // circuits of the jump digraph
  CircuitSum<S> figure_side;  // circuits avoiding i, j, plus j->i->j routes, minus j->i routes
  double jump_rho = 0.0;
};

/// Expansion of -ln C_ij, C_ij = (-1)^(i+j) det B_(i,j), two ways; throws
/// divergence when rho of the jump digraph is >= 1 and internal_consistency
/// when the two sides disagree at some length.
template <class S>
LogdetPairExpansion<S> logdet_ij_expansion(const BasicMultigraph<S>& g, const S& t, VertexId i, VertexId j,
                                           int max_length, const EnumerationLimits& limits = {});

/// "count/mu(v0...vm)"; mu omitted when 1, count too when both are 1.
struct FigureCollection {
  std::size_t count = 0;
  int multiplicity = 1;
  std::vector<VertexId> vertices;

  std::string notation() const;
};

template <class S>
struct ExpansionRow {
  int length = 0;
  S circuits_i_only = S(0);  // circuits visiting i but not j
  S circuits_j_only = S(0);
  S round_trip = S(0);       // j->i->j and i->j->i routes
  S crossing = S(0);         // j->i and i->j routes
  S signed_sum = S(0);       // (-a - b + c - d) / 2
  S cumulative = S(0);
  std::vector<FigureCollection> circuit_figures;
  std::vector<FigureCollection> round_trip_figures;
  std::vector<FigureCollection> crossing_figures;
};

template <class S>
struct DistanceExpansion {
  VertexId i = 0;
  VertexId j = 0;
  std::vector<ExpansionRow<S>> rows;
  S cumulative = S(0);
  double exact = 0.0;     // d_t(i,j) from the walk weight matrix
  double residual = 0.0;  // exact - cumulative
  double jump_rho = 0.0;
};

template <class S>
DistanceExpansion<S> distance_expansion(const BasicMultigraph<S>& g, const S& t, VertexId i, VertexId j,
                                        int max_length, const EnumerationLimits& limits = {});

}  // namespace walkdist
