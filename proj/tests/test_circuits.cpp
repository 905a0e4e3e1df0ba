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


#include "walkdist/circuits.hpp"
#include "walkdist/error.hpp"
#include "walkdist/random_graphs.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

namespace walkdist {
namespace {

using Q = Rational;

ExactDigraph loop_digraph(const Q& a) { return ExactDigraph({1}, {Arc<Q>{0, 1, 1, a}}); }

ExactDigraph two_cycle(const Q& p, const Q& q) {
  return ExactDigraph({1, 2}, {Arc<Q>{0, 1, 2, p}, Arc<Q>{1, 2, 1, q}});
}

ExactDigraph example_jump_digraph() {
  // Adjacency (1/3)[[0,-2],[1,3]] on vertices 2 and the merged vertex 3.
  return ExactDigraph({2, 3}, {Arc<Q>{0, 3, 3, Q(1)}, Arc<Q>{1, 3, 2, Q(1, 3)}, Arc<Q>{2, 2, 3, Q(-1, 3)},
                               Arc<Q>{3, 2, 3, Q(-1, 3)}});
}

TEST(Rotation, CanonicalFormAndPeriod) {
  const std::vector<int> s{3, 1, 2, 1, 2};
  EXPECT_EQ(canonical_rotation<int>(s), (std::vector<int>{1, 2, 1, 2, 3}));
  EXPECT_EQ(smallest_period<int>(std::vector<int>{1, 2, 1, 2}), 2u);
  EXPECT_EQ(smallest_period<int>(std::vector<int>{1, 2, 1}), 3u);
  EXPECT_EQ(smallest_period<int>(std::vector<int>{5}), 1u);
}

TEST(Rotation, RandomSequencesAgainstNaiveOracle) {
  std::mt19937_64 rng(61);
  std::uniform_int_distribution<int> symbol(0, 2);
  std::uniform_int_distribution<int> len(1, 12);
  for (int k = 0; k < 2000; ++k) {
    std::vector<int> s(static_cast<std::size_t>(len(rng)));
    for (int& x : s) x = symbol(rng);
    const std::vector<int> canon = canonical_rotation<int>(s);
    EXPECT_EQ(canon, oracle::least_rotation(s));
    EXPECT_EQ(static_cast<int>(s.size() / smallest_period<int>(s)), oracle::repetitions(s));
    // Every rotation has the same canonical form.
    std::vector<int> r(s.begin() + 1, s.end());
    r.push_back(s.front());
    EXPECT_EQ(canonical_rotation<int>(r), canon);
  }
}

TEST(ClosedWalks, Examples) {
  const auto loop = enumerate_closed_walks(loop_digraph(Q(1, 2)), 3);
  ASSERT_EQ(loop.size(), 1u);
  EXPECT_EQ(loop[0].weight, Q(1, 8));

  const auto ex = enumerate_closed_walks(directed_version(fixtures::example_graph()), 2);
  EXPECT_EQ(ex.size(), 10u);
  EXPECT_TRUE(enumerate_closed_walks(directed_version(fixtures::example_graph()), 1).empty());
}

TEST(ClosedWalks, CountEqualsTrace) {
  std::mt19937_64 rng(67);
  for (int k = 0; k < 30; ++k) {
    const ExactDigraph d = directed_version(random_connected_multigraph(rng));
    for (int len = 1; len <= 5; ++len) {
      const auto walks = enumerate_closed_walks(d, len);
      EXPECT_EQ(walks.size(), oracle::closed_walks(d, len).size());
      EXPECT_DOUBLE_EQ(static_cast<double>(walks.size()), power_trace(arc_count_matrix(d), len));
    }
  }
}

TEST(Circuits, SingleLoop) {
  const auto cs = circuits_up_to(loop_digraph(Q(1, 2)), 4);
  ASSERT_EQ(cs.size(), 4u);
  for (int k = 0; k < 4; ++k) {
    EXPECT_EQ(cs[static_cast<std::size_t>(k)].length(), static_cast<std::size_t>(k + 1));
    EXPECT_EQ(cs[static_cast<std::size_t>(k)].multiplicity, k + 1);
  }
}

TEST(Circuits, TwoCycle) {
  const auto cs = circuits_up_to(two_cycle(Q(1, 2), Q(1, 3)), 4);
  ASSERT_EQ(cs.size(), 2u);
  EXPECT_EQ(cs[0].length(), 2u);
  EXPECT_EQ(cs[0].multiplicity, 1);
  EXPECT_EQ(cs[0].weight, Q(1, 6));
  EXPECT_EQ(cs[1].length(), 4u);
  EXPECT_EQ(cs[1].multiplicity, 2);
  EXPECT_EQ(cs[1].weight, Q(1, 36));
}

TEST(Circuits, ExampleLengthTwo) {
  const ExactDigraph d = directed_version(scale_graph(fixtures::example_graph(), Q(1, 3)));
  std::vector<Circuit<Q>> two;
  for (auto& c : circuits_up_to(d, 2))
    if (c.length() == 2) two.push_back(c);
  ASSERT_EQ(two.size(), 5u);
  int through_1 = 0;
  for (const auto& c : two) {
    EXPECT_EQ(c.weight, Q(1, 9));
    EXPECT_EQ(c.multiplicity, 1);
    through_1 += c.visits(1) ? 1 : 0;
  }
  EXPECT_EQ(through_1, 4);
}

TEST(Circuits, FastEnumerationMatchesGroupingOfClosedWalks) {
  std::mt19937_64 rng(71);
  RandomDigraphOptions shape;
  shape.max_depth = 6;
  for (int k = 0; k < 40; ++k) {
    const ExactDigraph d = random_digraph(rng, shape);
    std::vector<ClosedWalk<Q>> walks;
    for (int len = 1; len <= 6; ++len) {
      auto w = enumerate_closed_walks(d, len);
      walks.insert(walks.end(), w.begin(), w.end());
    }
    const auto grouped = group_closed_walks(d, walks);
    const auto fast = circuits_up_to(d, 6);
    ASSERT_EQ(grouped.size(), fast.size());
    for (std::size_t c = 0; c < fast.size(); ++c) {
      EXPECT_EQ(grouped[c].arcs, fast[c].arcs);
      EXPECT_EQ(grouped[c].weight, fast[c].weight);
      EXPECT_EQ(grouped[c].multiplicity, fast[c].multiplicity);
    }
    // Each class holds length / multiplicity closed walks.
    for (int len = 1; len <= 6; ++len) {
      for (const auto& [key, raw] : oracle::circuits_by_rotation(d, len)) {
        EXPECT_EQ(raw.walks * static_cast<std::size_t>(raw.multiplicity), static_cast<std::size_t>(len));
      }
    }
  }
}

TEST(Circuits, CountFormulaMatchesEnumeration) {
  std::mt19937_64 rng(73);
  for (int k = 0; k < 30; ++k) {
    const ExactDigraph d = random_digraph(rng);
    EXPECT_DOUBLE_EQ(circuit_count(arc_count_matrix(d), 7), static_cast<double>(circuits_up_to(d, 7).size()));
  }
}

TEST(Circuits, GuardIsEnforced) {
  const ExactDigraph d = directed_version(ExactMultigraph::from_edge_list(
      3, {{1, 2, Q(1)}, {1, 2, Q(1)}, {2, 3, Q(1)}, {1, 3, Q(1)}, {1, 1, Q(1)}}));
  EnumerationLimits small;
  small.max_objects = 1000;
  try {
    circuits_up_to(d, 12, small);
    FAIL() << "expected too_large";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::too_large);
  }
}

TEST(TraceIdentity, ExactOnRandomDigraphs) {
  std::mt19937_64 rng(79);
  for (int k = 0; k < 30; ++k) {
    const ExactDigraph d = random_digraph(rng);
    const CircuitSum<Q> sums = logdet_expansion(d, 8);
    const Matrix<Q> a = build_adjacency(d);
    for (int len = 1; len <= 8; ++len) {
      EXPECT_EQ(sums.per_length[static_cast<std::size_t>(len - 1)], power_trace(a, len) / Q(len));
      if (len <= 5) EXPECT_EQ(sums.per_length[static_cast<std::size_t>(len - 1)], oracle::circuit_sum(d, len));
    }
  }
}

TEST(LogdetExpansion, SingleLoopAndEmpty) {
  const WeightedDigraph loop({1}, {Arc<double>{0, 1, 1, 0.5}});
  EXPECT_NEAR(logdet_expansion(loop, 20).cumulative, std::log(2.0), 1e-6);
  const ExactDigraph empty({1, 2}, {});
  const CircuitSum<Q> s = logdet_expansion(empty, 5);
  for (const Q& x : s.per_length) EXPECT_EQ(x, Q(0));
  EXPECT_EQ(s.cumulative, Q(0));
}

TEST(LogdetExpansion, JumpDigraphOfTheExample) {
  const WeightedDigraph d = to_double(example_jump_digraph());
  const CircuitSum<double> s = logdet_expansion(d, 24);
  EXPECT_NEAR(s.rho, 2.0 / 3.0, 1e-12);
  EXPECT_TRUE(s.convergent);
  // Geometric tail bound with rho = 2/3 at depth K: (2/3)^K / (K (1/3)).
  const double bound = std::pow(2.0 / 3.0, 24) / (24.0 / 3.0);
  EXPECT_LE(std::fabs(std::exp(-s.cumulative) - 2.0 / 9.0), bound);
  EXPECT_NEAR(oracle::laplace_determinant(Matrix<double>::identity(2) - build_adjacency(d)), 2.0 / 9.0, 1e-15);
}

TEST(LogdetExpansion, DivergentInputIsFlagged) {
  const WeightedDigraph loop({1}, {Arc<double>{0, 1, 1, 1.5}});
  EXPECT_FALSE(logdet_expansion(loop, 3).convergent);
}

TEST(RandomDigraph, ArcMagnitudesRespectTheTargetRadius) {
  std::mt19937_64 rng(67);
  for (int k = 0; k < 200; ++k) {
    const ExactDigraph d = random_digraph(rng);
    Matrix<double> magnitudes(d.order(), d.order());
    for (const auto& a : d.arcs()) magnitudes(d.index_of(a.tail), d.index_of(a.head)) += std::fabs(to_double(a.weight));
    EXPECT_LE(spectral_radius(magnitudes), 0.5 + 1e-12);
  }
}

TEST(NonperiodicProduct, Examples) {
  EXPECT_EQ(nonperiodic_product(loop_digraph(Q(2, 5)), 1), Q(3, 5));
  EXPECT_EQ(nonperiodic_product(loop_digraph(Q(2, 5)), 6), Q(3, 5));
  EXPECT_EQ(nonperiodic_product(two_cycle(Q(1, 2), Q(1, 3)), 2), Q(5, 6));
  EXPECT_EQ(nonperiodic_product(two_cycle(Q(1, 2), Q(1, 3)), 7), Q(5, 6));
}

TEST(NonperiodicProduct, JumpDigraphOfTheExample) {
  // The weight-1 jump loop is a non-periodic circuit, so every truncation
  // carries the factor 1 - 1 while the series side still converges to 2/9.
  const WeightedDigraph d = to_double(example_jump_digraph());
  EXPECT_EQ(nonperiodic_product(example_jump_digraph(), 8), Q(0));
  EXPECT_EQ(nonperiodic_product(d, 20), 0.0);
  EXPECT_NEAR(std::exp(-logdet_expansion(d, 20).cumulative), 2.0 / 9.0, 1e-3);
}

TEST(NonperiodicProduct, ConvergesWithoutUnitLoops) {
  // Same digraph with the loop weight lowered to 1/2: det(I - A) = 1/2 + 2/9.
  const WeightedDigraph d({2, 3}, {Arc<double>{0, 3, 3, 0.5}, Arc<double>{1, 3, 2, 1.0 / 3.0},
                                   Arc<double>{2, 2, 3, -1.0 / 3.0}, Arc<double>{3, 2, 3, -1.0 / 3.0}});
  EnumerationLimits wide;
  wide.max_objects = 200'000'000;
  const double want = 0.5 + 2.0 / 9.0;
  EXPECT_NEAR(oracle::laplace_determinant(Matrix<double>::identity(2) - build_adjacency(d)), want, 1e-15);
  const double shallow = nonperiodic_product(d, 10);
  const double deep = nonperiodic_product(d, 24, wide);
  EXPECT_NEAR(deep, want, 1e-4);
  EXPECT_LT(std::fabs(deep - want), std::fabs(shallow - want));
}

TEST(CofactorExpansion, ExampleDiagonalMinors) {
  const ExactMultigraph g = fixtures::example_graph();
  const auto e1 = cofactor_expansion_ii(g, Q(1, 3), 1, std::nullopt, 30);
  EXPECT_NEAR(to_double(e1.total.cumulative), -std::log(8.0 / 9.0), 1e-12);
  // Circuits of tG minus 3 at length 2k sum to (4/9)^k / k, so the tail after
  // depth 20 is below 2 (2/3)^22 / 22 / (5/9).
  const auto e3 = cofactor_expansion_ii(to_double(g), 1.0 / 3.0, 3, std::nullopt, 20);
  EXPECT_NEAR(e3.total.cumulative, -std::log(5.0 / 9.0), 2.5e-5);
  const auto split = cofactor_expansion_ii(g, Q(1, 3), 3, VertexId{1}, 10);
  ASSERT_TRUE(split.without_j && split.through_j);
  EXPECT_EQ(split.total.cumulative, split.without_j->cumulative + split.through_j->cumulative);
}

TEST(CofactorExpansion, IsolatedRemainder) {
  // Removing the centre of a star leaves no edges.
  const ExactMultigraph star = ExactMultigraph::from_edge_list(3, {{1, 2, Q(1)}, {1, 3, Q(1)}});
  const auto e = cofactor_expansion_ii(star, Q(1, 3), 1, std::nullopt, 6);
  for (const Q& s : e.total.per_length) EXPECT_EQ(s, Q(0));
}

}  // namespace
}  // namespace walkdist
