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
#include "walkdist/matrix.hpp"
#include "walkdist/scalar.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

namespace walkdist {
namespace {

using Q = Rational;

TEST(Scalar, ParsesRatiosAndDecimalsExactly) {
  EXPECT_EQ(parse_rational("1/3"), Q(1, 3));
  EXPECT_EQ(parse_rational("-2/6"), Q(-1, 3));
  EXPECT_EQ(parse_rational("0.25"), Q(1, 4));
  EXPECT_EQ(parse_rational("1e-2"), Q(1, 100));
  EXPECT_EQ(parse_rational("2.5E1"), Q(25));
  EXPECT_EQ(parse_rational(" 3 "), Q(3));
  for (const char* bad : {"", "1/0", "abc", "1/", "0x10", "1.2.3", "nan"}) {
    EXPECT_THROW(parse_rational(bad), Error) << bad;
  }
}

TEST(Scalar, FormatsTerminatingRationalsAsDecimals) {
  EXPECT_EQ(format_exact(Q(1, 4)), "0.25");
  EXPECT_EQ(format_exact(Q(3)), "3");
  EXPECT_EQ(format_exact(Q(-1, 3)), "-1/3");
  EXPECT_EQ(format_rational(Q(461, 405)), "461/405");
  EXPECT_EQ(format_real(0.1), "0.10000000000000001");
}

TEST(Scalar, DecimalRoundTrip) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-100000, 100000);
  std::uniform_int_distribution<int> shift(0, 6);
  for (int k = 0; k < 200; ++k) {
    Q x(num(rng));
    for (int s = shift(rng); s > 0; --s) x /= 10;
    EXPECT_EQ(parse_rational(format_exact(x)), x);
  }
}

TEST(Determinant, Identity) {
  EXPECT_DOUBLE_EQ(determinant(Matrix<double>::identity(3)), 1.0);
  EXPECT_EQ(determinant(Matrix<Q>::identity(3)), Q(1));
}

TEST(Determinant, JumpMatrixOfTheExample) {
  const Matrix<Q> m{{Q(0), Q(-2, 3)}, {Q(1, 3), Q(1)}};
  EXPECT_EQ(determinant(m), Q(2, 9));
  EXPECT_EQ(oracle::laplace_determinant(m), Q(2, 9));
}

TEST(Determinant, ExampleGraphAtOneThird) {
  const Matrix<Q> b = Matrix<Q>::identity(3) - Q(1, 3) * build_adjacency(fixtures::example_graph());
  EXPECT_EQ(oracle::laplace_determinant(b), Q(4, 9));
  EXPECT_EQ(determinant(b), Q(4, 9));
  EXPECT_NEAR(determinant(to_double(b)), 4.0 / 9.0, 1e-15);
}

TEST(Determinant, AgreesWithLaplaceOnRandomMatrices) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> entry(-4, 4);
  std::uniform_int_distribution<std::size_t> order(1, 5);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = order(rng);
    Matrix<Q> m(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = Q(entry(rng), 2);
    const Q expected = oracle::laplace_determinant(m);
    EXPECT_EQ(determinant(m), expected);
    EXPECT_NEAR(determinant(to_double(m)), to_double(expected), 1e-9 * std::max(1.0, std::fabs(to_double(expected))));
  }
}

TEST(Inverse, ExampleWalkWeights) {
  const Matrix<Q> b = Matrix<Q>::identity(3) - Q(1, 3) * build_adjacency(fixtures::example_graph());
  const Matrix<Q> expected = Q(1, 4) * Matrix<Q>{{Q(8), Q(6), Q(2)}, {Q(6), Q(9), Q(3)}, {Q(2), Q(3), Q(5)}};
  EXPECT_EQ(inverse(b), expected);
  EXPECT_LE(max_abs_difference(inverse(to_double(b)), to_double(expected)), 1e-14);
}

TEST(Inverse, TwoByTwoClosedForm) {
  for (double t : {0.1, 0.5, 0.9}) {
    const Matrix<double> m{{1.0, -t}, {-t, 1.0}};
    const double s = 1.0 / (1.0 - t * t);
    EXPECT_LE(max_abs_difference(inverse(m), Matrix<double>{{s, s * t}, {s * t, s}}), 1e-14);
  }
  EXPECT_EQ(inverse(Matrix<double>::identity(4)), Matrix<double>::identity(4));
}

TEST(Inverse, SingularMatrixIsReported) {
  const Matrix<double> m{{1.0, 2.0}, {2.0, 4.0}};
  try {
    inverse(m);
    FAIL() << "expected singular-matrix";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::singular_matrix);
  }
  EXPECT_THROW(inverse(Matrix<Q>{{Q(1), Q(2)}, {Q(2), Q(4)}}), Error);
}

TEST(SpectralRadius, KnownValues) {
  EXPECT_NEAR(spectral_radius(to_double(build_adjacency(fixtures::example_graph()))), std::sqrt(5.0), 1e-12);
  EXPECT_NEAR(spectral_radius(Matrix<double>{{0.0, -2.0 / 3.0}, {1.0 / 3.0, 1.0}}), 2.0 / 3.0, 1e-12);
  EXPECT_EQ(spectral_radius(Matrix<double>(3, 3)), 0.0);
}

TEST(SpectralRadius, BipartiteAndReducibleInputs) {
  // Unit path on four vertices: 2 cos(pi/5).
  const Matrix<double> path = to_double(build_adjacency(fixtures::unit_path(4)));
  EXPECT_NEAR(spectral_radius(path), 2.0 * std::cos(M_PI / 5.0), 1e-12);
  const Matrix<double> reducible{{2.0, 1.0}, {0.0, 3.0}};
  EXPECT_NEAR(spectral_radius(reducible), 3.0, 1e-12);
  const Matrix<double> rotation{{0.0, -1.0}, {1.0, 0.0}};
  EXPECT_NEAR(spectral_radius(rotation), 1.0, 1e-12);
}

TEST(SpectralRadius, MatchesPowerGrowth) {
  // rho = lim ||M^k||^(1/k); compare against a high power of random nonnegative matrices.
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> entry(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix<double> m(4, 4);
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) m(r, c) = entry(rng);
    const double rho = spectral_radius(m);
    const double tr = power_trace(m, 60);
    EXPECT_NEAR(std::pow(tr, 1.0 / 60.0), rho, 1e-2 * rho);
  }
}

TEST(PowerTrace, Examples) {
  EXPECT_EQ(power_trace(Matrix<Q>::identity(4), 7), Q(4));
  EXPECT_EQ(power_trace(build_adjacency(fixtures::example_graph()), 2), Q(10));
  EXPECT_EQ(power_trace(Matrix<Q>{{Q(0), Q(1)}, {Q(0), Q(0)}}, 2), Q(0));
  EXPECT_THROW(power_trace(Matrix<Q>::identity(2), 0), Error);
}

TEST(Matrix, WithoutAndTranspose) {
  const Matrix<int> m{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
  EXPECT_EQ(m.without(0, 2), (Matrix<int>{{4, 5}, {7, 8}}));
  EXPECT_EQ(m.transposed()(0, 2), 7);
}

}  // namespace
}  // namespace walkdist
