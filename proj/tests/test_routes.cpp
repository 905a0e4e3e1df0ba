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
#include "walkdist/random_graphs.hpp"
#include "walkdist/routes.hpp"
#include "walkdist/walk_metric.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>
#include <set>

namespace walkdist {
namespace {

using Q = Rational;

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::internal_consistency;
}

std::vector<ExactMultigraph> small_corpus(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  RandomGraphOptions shape;
  shape.min_order = 3;
  shape.max_order = 4;
  std::vector<ExactMultigraph> out;
  for (int k = 0; k < count; ++k) out.push_back(random_connected_multigraph(rng, shape));
  return out;
}

Q half_inverse_rho(const ExactMultigraph& g) {
  const double rho = adjacency_spectral_radius(to_double(g));
  return Q(static_cast<long>(std::floor(0.5 / rho * 4096.0)), 4096);
}

// ---- swap transform ----

TEST(SwapTransform, SmallestCase) {
  const Matrix<Q> t13{{Q(0), Q(1)}, {Q(-1), Q(0)}};
  const Matrix<Q> t31{{Q(0), Q(-1)}, {Q(1), Q(0)}};
  EXPECT_EQ(swap_transform<Q>(3, 1, 3).matrix, t13);
  EXPECT_EQ(swap_transform<Q>(3, 3, 1).matrix, t31);
  EXPECT_EQ(t13.transposed(), t31);
}

TEST(SwapTransform, PropertiesForAllPositions) {
  for (std::size_t n = 3; n <= 7; ++n) {
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = 1; j <= n; ++j) {
        if (i == j) continue;
        const SwapTransform<Q> t = swap_transform<Q>(n, i, j);
        const SwapTransformReport r = check_swap_transform(t);
        EXPECT_TRUE(r.orthogonal) << n << i << j;
        EXPECT_TRUE(r.transpose_is_swap) << n << i << j;
        EXPECT_TRUE(r.column_rule) << n << i << j;
        const Q det = oracle::laplace_determinant(t.matrix);
        if ((i + j) % 2 == 0) EXPECT_EQ(det, Q(1)) << n << i << j;
        EXPECT_EQ(abs_value(det), Q(1));
        EXPECT_EQ(r.unit_determinant, det == Q(1));
      }
    }
  }
}

TEST(SwapTransform, RejectsBadPositions) {
  EXPECT_EQ(code_of([] { swap_transform<Q>(3, 2, 2); }), ErrorCode::invalid_index);
  EXPECT_EQ(code_of([] { swap_transform<Q>(3, 0, 2); }), ErrorCode::invalid_index);
  EXPECT_EQ(code_of([] { swap_transform<Q>(3, 1, 4); }), ErrorCode::invalid_index);
  EXPECT_EQ(code_of([] { swap_transform<Q>(2, 1, 2); }), ErrorCode::unsupported);
}

TEST(GInverse, Examples) {
  const auto check = [](std::size_t n, std::size_t i, std::size_t j, std::size_t k) {
    const GInverseReport r = g_inverse_check(swap_transform<Q>(n, i, j));
    EXPECT_TRUE(r.holds) << n << i << j;
    EXPECT_EQ(r.k, k) << n << i << j;
  };
  check(3, 1, 3, 2);
  check(4, 3, 1, 1);
  check(5, 2, 4, 3);
  for (std::size_t n = 3; n <= 6; ++n)
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = 1; j <= n; ++j)
        if (i != j) EXPECT_TRUE(g_inverse_check(swap_transform<Q>(n, i, j)).holds);
}

// ---- jump digraph ----

TEST(JumpDigraph, Example) {
  const JumpDigraph<Q> jd = jump_digraph(fixtures::example_graph(), Q(1, 3), 1, 3);
  const Matrix<Q> expected{{Q(0), Q(-2, 3)}, {Q(1, 3), Q(1)}};
  EXPECT_FALSE(jd.relabeled);
  EXPECT_EQ(jd.merged_position, 2u);
  EXPECT_EQ(jd.algebraic, expected);
  EXPECT_EQ(jd.procedural, expected);
  EXPECT_EQ(jd.constructed, expected);
  EXPECT_NEAR(jump_spectral_radius(jd), 2.0 / 3.0, 1e-12);
  EXPECT_EQ(determinant(Matrix<Q>::identity(2) - jd.algebraic), Q(2, 9));
}

TEST(JumpDigraph, NonAdjacentPairHasOnlyTheJumpLoop) {
  const JumpDigraph<Q> jd = jump_digraph(fixtures::unit_path(4), Q(1, 3), 1, 4);
  EXPECT_TRUE(jd.relabeled);
  int loops_at_merged = 0;
  for (const Arc<Q>& a : jd.digraph.arcs()) {
    if (a.tail == jd.merged && a.head == jd.merged) {
      ++loops_at_merged;
      EXPECT_EQ(a.weight, Q(1));
      EXPECT_EQ(jd.roles.at(a.id), ArcRole::jump);
    }
  }
  EXPECT_EQ(loops_at_merged, 1);
  const std::size_t k = jd.merged_position - 1;
  EXPECT_EQ(jd.algebraic(k, k), Q(1));
}

TEST(JumpDigraph, ThreeConstructionsAgreeAndPreserveTheCofactor) {
  for (const ExactMultigraph& g : small_corpus(83, 40)) {
    const Q t = half_inverse_rho(g);
    const std::size_t n = g.order();
    const Matrix<Q> b = Matrix<Q>::identity(n) - t * build_adjacency(g);
    for (VertexId i : g.vertices()) {
      for (VertexId j : g.vertices()) {
        if (i == j) continue;
        const JumpDigraph<Q> jd = jump_digraph(g, t, i, j);  // throws if the constructions differ
        EXPECT_EQ(jd.algebraic, jd.constructed);
        // The (i, j) cofactor of B in the original order equals det(I - A_jump).
        const std::size_t pi = g.index_of(i), pj = g.index_of(j);
        const Q cofactor = ((pi + pj) % 2 == 0 ? Q(1) : Q(-1)) * oracle::laplace_determinant(b.without(pi, pj));
        EXPECT_EQ(determinant(Matrix<Q>::identity(n - 1) - jd.algebraic), cofactor);
        EXPECT_GT(cofactor, Q(0));
      }
    }
  }
}

TEST(JumpDigraph, Preconditions) {
  EXPECT_EQ(code_of([] { jump_digraph(fixtures::unit_edge(), Q(1, 3), 1, 2); }), ErrorCode::unsupported);
  EXPECT_EQ(code_of([] { jump_digraph(fixtures::example_graph(), Q(1, 3), 1, 1); }), ErrorCode::invalid_parameter);
  EXPECT_EQ(code_of([] { jump_digraph(fixtures::example_graph(), Q(1, 3), 1, 7); }), ErrorCode::invalid_index);
  EXPECT_EQ(code_of([] { jump_digraph(fixtures::example_graph(), Q(1, 2), 1, 3); }),
            ErrorCode::parameter_out_of_range);
}

// ---- alternating walks ----

TEST(AlternatingWalks, ExampleLengthOne) {
  const ExactMultigraph g = fixtures::example_graph();
  const auto from3 = enumerate_alternating_walks(g, Q(1, 3), 1, 3, 1, RouteFamily::j_to_i_to_j);
  ASSERT_EQ(from3.size(), 1u);
  EXPECT_EQ(from3[0].vertices, (std::vector<VertexId>{3, 3}));
  EXPECT_EQ(from3[0].edges, (std::vector<int>{kJumpEdge}));
  EXPECT_EQ(from3[0].weight, Q(1));
  const auto from1 = enumerate_alternating_walks(g, Q(1, 3), 1, 3, 1, RouteFamily::i_to_j_to_i);
  ASSERT_EQ(from1.size(), 1u);
  EXPECT_EQ(from1[0].vertices, (std::vector<VertexId>{1, 1}));
  EXPECT_TRUE(enumerate_alternating_walks(g, Q(1, 3), 1, 3, 1, RouteFamily::i_to_j).empty());
  EXPECT_TRUE(enumerate_alternating_walks(g, Q(1, 3), 1, 3, 0, RouteFamily::i_to_j).empty());
}

TEST(AlternatingWalks, ExampleLengthTwoCrossing) {
  const ExactMultigraph g = fixtures::example_graph();
  const auto ij = enumerate_alternating_walks(g, Q(1, 3), 1, 3, 2, RouteFamily::i_to_j);
  ASSERT_EQ(ij.size(), 2u);
  for (const auto& w : ij) {
    EXPECT_EQ(w.vertices, (std::vector<VertexId>{1, 2, 3}));
    EXPECT_EQ(w.weight, Q(1, 9));
  }
  EXPECT_NE(ij[0].edges, ij[1].edges);
  const auto ji = enumerate_alternating_walks(g, Q(1, 3), 1, 3, 2, RouteFamily::j_to_i);
  ASSERT_EQ(ji.size(), 2u);
  for (const auto& w : ji) EXPECT_EQ(w.vertices, (std::vector<VertexId>{3, 2, 1}));
}

TEST(AlternatingWalks, MatchBruteForceFilter) {
  for (const ExactMultigraph& g : small_corpus(89, 15)) {
    const Q t(1, 5);
    const VertexId i = g.vertices()[0];
    const VertexId j = g.vertices()[2];
    for (RouteFamily f :
         {RouteFamily::j_to_i, RouteFamily::i_to_j, RouteFamily::j_to_i_to_j, RouteFamily::i_to_j_to_i}) {
      const VertexId start = f == RouteFamily::j_to_i || f == RouteFamily::j_to_i_to_j ? j : i;
      const VertexId finish = f == RouteFamily::j_to_i || f == RouteFamily::i_to_j_to_i ? i : j;
      for (int len = 1; len <= 5; ++len) {
        const auto got = enumerate_alternating_walks(g, t, i, j, len, f);
        const auto want = oracle::alternating_walks(g, t, i, j, start, finish, len);
        std::multiset<std::pair<std::vector<VertexId>, std::vector<int>>> a, b;
        for (const auto& w : got) {
          a.emplace(w.vertices, w.edges);
          EXPECT_TRUE(is_alternating(g, w, i, j));
        }
        for (const auto& w : want) b.emplace(w.vertices, w.edges);
        EXPECT_EQ(a, b) << "family " << to_string(f) << " length " << len;
        Q wa(0), wb(0);
        for (const auto& w : got) wa += w.weight;
        for (const auto& w : want) wb += w.weight;
        EXPECT_EQ(wa, wb);
      }
    }
  }
}

TEST(AlternatingWalks, PredicateMatchesOracleOnArbitraryWalks) {
  const ExactMultigraph g = fixtures::example_graph();
  // All walks of length 4 in G plus jumps at 1 and 3 from vertex 3, alternating or not.
  int alternating = 0, total = 0;
  JumpWalk<Q> w{{3}, {}, Q(1)};
  std::function<void()> go = [&] {
    if (w.edges.size() == 4) {
      ++total;
      const bool expected = oracle::alternating(w, 1, 3);
      EXPECT_EQ(is_alternating(g, w, 1, 3), expected);
      alternating += expected ? 1 : 0;
      return;
    }
    const VertexId v = w.vertices.back();
    if (v == 1 || v == 3) {
      w.vertices.push_back(v);
      w.edges.push_back(kJumpEdge);
      go();
      w.vertices.pop_back();
      w.edges.pop_back();
    }
    for (const auto& e : g.edges()) {
      if (e.u != v && e.v != v) continue;
      w.vertices.push_back(e.other(v));
      w.edges.push_back(e.id);
      go();
      w.vertices.pop_back();
      w.edges.pop_back();
    }
  };
  go();
  EXPECT_GT(alternating, 0);
  EXPECT_LT(alternating, total);
  // A jump at a vertex other than i or j is not a walk of G'.
  EXPECT_FALSE(is_alternating(g, JumpWalk<Q>{{2, 2}, {kJumpEdge}, Q(1)}, 1, 3));
}

TEST(RoutePartition, SplitsAtEveryVisitOfTheEnds) {
  // 3 -jump-> 3 -e2-> 2 -e0-> 1 -jump-> 1 -e1-> 2 -e2-> 3
  const JumpWalk<Q> w{{3, 3, 2, 1, 1, 2, 3}, {kJumpEdge, 2, 0, kJumpEdge, 1, 2}, Q(1)};
  const auto p = route_partition(w, 1, 3);
  ASSERT_EQ(p.size(), 4u);
  EXPECT_EQ(p[0], (RoutePiece{0, {}}));
  EXPECT_EQ(p[1], (RoutePiece{1, {0, 2}}));  // stored as the smaller of the edge sequence and its reverse
  EXPECT_EQ(p[2], (RoutePiece{0, {}}));
  EXPECT_EQ(p[3], (RoutePiece{1, {1, 2}}));
}

// ---- routes ----

TEST(Routes, ExampleLengthsOneAndTwo) {
  const ExactMultigraph g = fixtures::example_graph();
  const Q t(1, 3);
  const auto jij = routes_up_to(g, t, 1, 3, 2, RouteFamily::j_to_i_to_j);
  ASSERT_EQ(jij.size(), 2u);
  EXPECT_EQ(jij[0].length, 1);
  EXPECT_EQ(jij[0].multiplicity, 1);
  EXPECT_EQ(jij[0].figure, FigureClass::jump_only);
  EXPECT_EQ(jij[1].length, 2);
  EXPECT_EQ(jij[1].multiplicity, 2);
  EXPECT_EQ(jij[1].weight, Q(1));

  const auto ji = routes_up_to(g, t, 1, 3, 2, RouteFamily::j_to_i);
  ASSERT_EQ(ji.size(), 2u);
  for (const auto& r : ji) {
    EXPECT_EQ(r.length, 2);
    EXPECT_EQ(r.multiplicity, 1);
    EXPECT_EQ(r.weight, Q(1, 9));
    EXPECT_EQ(r.representative.vertices, (std::vector<VertexId>{3, 2, 1}));
  }
}

TEST(Routes, JumpOnlyRoutes) {
  const auto routes = routes_up_to(fixtures::example_graph(), Q(1, 3), 1, 3, 6, RouteFamily::j_to_i_to_j);
  int seen = 0;
  for (const auto& r : routes) {
    if (r.figure != FigureClass::jump_only) continue;
    ++seen;
    EXPECT_EQ(r.weight, Q(1));
    EXPECT_EQ(r.multiplicity, r.length);
    EXPECT_EQ(r.walk_count, 1u);
  }
  EXPECT_EQ(seen, 6);
}

TEST(Routes, CrossingRoutesHaveOddMultiplicity) {
  for (const ExactMultigraph& g : small_corpus(97, 20)) {
    const Q t = half_inverse_rho(g);
    for (VertexId i : g.vertices()) {
      for (VertexId j : g.vertices()) {
        if (i == j) continue;
        for (const auto& r : routes_up_to(g, t, i, j, 5, RouteFamily::j_to_i)) {
          EXPECT_EQ(r.multiplicity % 2, 1);
        }
      }
    }
  }
}

TEST(Routes, ClassSizesAgainstBruteForceGrouping) {
  for (const ExactMultigraph& g : small_corpus(101, 10)) {
    const Q t(1, 7);
    const VertexId i = g.vertices()[0], j = g.vertices()[1];
    for (int len = 1; len <= 5; ++len) {
      std::map<std::vector<RoutePiece>, std::size_t> classes;
      for (const auto& w : oracle::alternating_walks(g, t, i, j, j, j, len)) {
        std::vector<RoutePiece> p = route_partition(w, i, j);
        std::vector<RoutePiece> best = p;
        for (std::size_t s = 1; s < p.size(); ++s) {
          std::rotate(p.begin(), p.begin() + 1, p.end());
          best = std::min(best, p);
        }
        ++classes[best];
      }
      std::size_t routes = 0;
      for (const auto& r : routes_up_to(g, t, i, j, len, RouteFamily::j_to_i_to_j)) {
        if (r.length != len) continue;
        ++routes;
        ASSERT_TRUE(classes.count(r.partition));
        EXPECT_EQ(classes.at(r.partition), r.walk_count);
        EXPECT_EQ(r.walk_count * static_cast<std::size_t>(r.multiplicity), r.partition.size());
      }
      EXPECT_EQ(routes, classes.size());
    }
  }
}

TEST(Routes, GuardOnLength) {
  EnumerationLimits limits;
  limits.max_route_length = 3;
  EXPECT_EQ(code_of([&] {
              routes_up_to(fixtures::example_graph(), Q(1, 3), 1, 3, 4, RouteFamily::j_to_i, limits);
            }),
            ErrorCode::too_large);
}

// ---- bijection ----

TEST(Bijection, Example) {
  const BijectionReport r = bijection_check(fixtures::example_graph(), Q(1, 3), 1, 3, 6);
  EXPECT_TRUE(r.ok());
  for (const auto& m : r.mismatches) ADD_FAILURE() << m;
  ASSERT_EQ(r.rows.size(), 6u);
  // Lengths 1 and 2: the jump loop and its square; then two crossing routes.
  EXPECT_EQ(r.rows[0].routes_jij, 1u);
  EXPECT_EQ(r.rows[0].gamma_even, 1u);
  EXPECT_EQ(r.rows[1].routes_ji, 2u);
  EXPECT_EQ(r.rows[1].gamma_odd, 2u);
}

TEST(Bijection, ThreeVertexPath) {
  const BijectionReport r = bijection_check(fixtures::unit_path(3), Q(1, 3), 1, 3, 4);
  EXPECT_TRUE(r.ok());
  // Circuits of the jump digraph through the merged vertex, counted by brute force.
  const JumpDigraph<Q> jd = jump_digraph(fixtures::unit_path(3), Q(1, 3), 1, 3);
  for (int len = 1; len <= 4; ++len) {
    std::size_t odd = 0, even = 0;
    for (const auto& [arcs, c] : oracle::circuits_by_rotation(jd.digraph, len)) {
      bool through = false;
      int negative = 0;
      for (int id : arcs) {
        through = through || jd.digraph.arc(id).tail == jd.merged;
        negative += jd.is_negative(id) ? 1 : 0;
      }
      if (!through) continue;
      (negative % 2 == 1 ? odd : even) += 1;
    }
    const BijectionRow& row = r.rows[static_cast<std::size_t>(len - 1)];
    EXPECT_EQ(row.gamma_odd, odd);
    EXPECT_EQ(row.gamma_even, even);
    EXPECT_EQ(row.routes_ji, odd);
    EXPECT_EQ(row.routes_jij, even);
  }
}

TEST(Bijection, RandomGraphs) {
  for (const ExactMultigraph& g : small_corpus(103, 8)) {
    const Q t = half_inverse_rho(g);
    for (VertexId i : g.vertices()) {
      for (VertexId j : g.vertices()) {
        if (i >= j) continue;
        const BijectionReport r = bijection_check(g, t, i, j, 5);
        EXPECT_TRUE(r.ok()) << (r.mismatches.empty() ? "" : r.mismatches.front());
        for (const auto& row : r.rows) EXPECT_NEAR(row.gamma_signed, row.routes_signed, 1e-12);
      }
    }
  }
}

// ---- expansions ----

TEST(LogdetPairExpansion, ExampleAgreesPerLength) {
  const auto e = logdet_ij_expansion(fixtures::example_graph(), Q(1, 3), 1, 3, 6);
  ASSERT_EQ(e.gamma_side.per_length.size(), 6u);
  for (std::size_t k = 0; k < 6; ++k) EXPECT_EQ(e.gamma_side.per_length[k], e.figure_side.per_length[k]);
  EXPECT_NEAR(e.jump_rho, 2.0 / 3.0, 1e-12);
}

TEST(LogdetPairExpansion, ConvergesToTheMinor) {
  const JumpDigraph<double> jd = jump_digraph(to_double(fixtures::example_graph()), 1.0 / 3.0, 1, 3);
  const int depth = 24;
  const CircuitSum<double> s = logdet_expansion(jd.digraph, depth);
  const double bound = std::pow(2.0 / 3.0, depth) / (depth / 3.0);
  EXPECT_LE(std::fabs(std::exp(-s.cumulative) - 2.0 / 9.0), bound);
}

TEST(LogdetPairExpansion, RandomGraphsAgreePerLength) {
  for (const ExactMultigraph& g : small_corpus(107, 6)) {
    const Q t = half_inverse_rho(g);
    const VertexId i = g.vertices()[0], j = g.vertices()[2];
    const auto e = logdet_ij_expansion(g, t, i, j, 5);
    for (std::size_t k = 0; k < 5; ++k) EXPECT_EQ(e.gamma_side.per_length[k], e.figure_side.per_length[k]);
  }
}

TEST(DistanceExpansion, ReproducesTheWorkedExample) {
  const auto e = distance_expansion(fixtures::example_graph(), Q(1, 3), 1, 3, 5);
  EXPECT_EQ(e.cumulative, Q(461, 405));
  EXPECT_NEAR(e.exact, 0.5 * std::log(10.0), 1e-12);
  const double relative = (e.exact - to_double(e.cumulative)) / e.exact;
  EXPECT_GE(relative, 0.010);
  EXPECT_LE(relative, 0.013);
  EXPECT_EQ(e.rows[1].signed_sum, Q(0));
  EXPECT_EQ(e.rows[3].signed_sum, Q(0));
  // Bracketed terms of the expansion, before halving.
  EXPECT_EQ(Q(2) * e.rows[0].signed_sum, Q(2));
  EXPECT_EQ(Q(2) * e.rows[2].signed_sum, Q(2, 3) - Q(4, 9));
  EXPECT_EQ(Q(2) * e.rows[4].signed_sum, Q(2) * (Q(1, 5) + Q(4, 81)) - Q(4, 9));
  EXPECT_EQ(e.rows[3].circuits_i_only + e.rows[3].circuits_j_only, Q(8, 81) + Q(1, 2) * Q(1, 81));
}

TEST(DistanceExpansion, FigureListing) {
  const auto e = distance_expansion(fixtures::example_graph(), Q(1, 3), 1, 3, 5);
  const auto names = [](const std::vector<FigureCollection>& fs) {
    std::vector<std::string> out;
    for (const auto& f : fs) out.push_back(f.notation());
    return out;
  };
  using V = std::vector<std::string>;
  const std::vector<V> circuits{{}, {"4(121)", "(323)"}, {}, {"4/2(12121)", "6(12121)", "1/2(32323)"}, {}};
  const std::vector<V> round{{"(11)", "(33)"},
                             {"1/2(111)", "1/2(333)"},
                             {"1/3(1111)", "1/3(3333)"},
                             {"1/4(11111)", "1/4(33333)", "2/2(12321)", "(12321)", "2/2(32123)", "(32123)"},
                             {"1/5(111111)", "1/5(333333)", "4(112321)", "4(332123)"}};
  const std::vector<V> crossing{
      {}, {"2(123)", "2(321)"}, {"2(1123)", "2(3321)"}, {"2(11123)", "2(33321)"}, {"2(111123)", "2(333321)"}};
  for (std::size_t k = 0; k < 5; ++k) {
    EXPECT_EQ(names(e.rows[k].circuit_figures), circuits[k]) << "length " << k + 1;
    EXPECT_EQ(names(e.rows[k].round_trip_figures), round[k]) << "length " << k + 1;
    EXPECT_EQ(names(e.rows[k].crossing_figures), crossing[k]) << "length " << k + 1;
  }
}

TEST(DistanceExpansion, SignsOfTheFigureClasses) {
  for (const ExactMultigraph& g : small_corpus(109, 6)) {
    const Q t = half_inverse_rho(g);
    const auto e = distance_expansion(g, t, g.vertices()[0], g.vertices()[1], 5);
    for (const auto& row : e.rows) {
      EXPECT_GE(row.round_trip, Q(0));
      EXPECT_GE(row.circuits_i_only, Q(0));
      EXPECT_GE(row.circuits_j_only, Q(0));
      EXPECT_GE(row.crossing, Q(0));
      EXPECT_EQ(Q(2) * row.signed_sum, row.round_trip - row.circuits_i_only - row.circuits_j_only - row.crossing);
    }
  }
}

TEST(DistanceExpansion, ApproachesTheDistance) {
  const WeightedMultigraph g = to_double(fixtures::example_graph());
  double previous = std::numeric_limits<double>::infinity();
  for (int depth : {3, 5, 8}) {
    const auto e = distance_expansion(g, 1.0 / 3.0, 1, 3, depth);
    EXPECT_GT(e.residual, 0.0);
    EXPECT_LT(e.residual, previous);
    previous = e.residual;
  }
  EXPECT_LT(previous, 5e-3);
  // The jump loop keeps rho of the jump digraph near 1 for small t, so the
  // residual on a path still decreases but slowly.
  const WeightedMultigraph path = to_double(fixtures::unit_path(3));
  const auto shallow = distance_expansion(path, 0.2, 1, 3, 3);
  const auto deep = distance_expansion(path, 0.2, 1, 3, 8);
  EXPECT_GT(deep.jump_rho, 0.95);
  EXPECT_LT(deep.residual, shallow.residual);
}

TEST(DistanceExpansion, Preconditions) {
  const ExactMultigraph path6 = fixtures::unit_path(6);
  const double t = 0.999 / adjacency_spectral_radius(to_double(path6));
  EXPECT_GT(jump_spectral_radius(jump_digraph(to_double(path6), t, 1, 6)), 1.0);
  EXPECT_EQ(code_of([&] { distance_expansion(to_double(path6), t, 1, 6, 3); }), ErrorCode::divergence);
  EXPECT_EQ(code_of([&] { logdet_ij_expansion(to_double(path6), t, 1, 6, 3); }), ErrorCode::divergence);
  EXPECT_EQ(code_of([] { distance_expansion(fixtures::unit_edge(), Q(1, 3), 1, 2, 3); }), ErrorCode::unsupported);
}

}  // namespace
}  // namespace walkdist
