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

#include "walkdist/matrix.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

namespace walkdist {

namespace {

template <class S>
void require_square(const Matrix<S>& m, const char* what) {
  if (!m.is_square()) {
    throw Error(ErrorCode::invalid_parameter, std::string(what) + " needs a square matrix");
  }
}

template <class S>
std::size_t pivot_row(const Matrix<S>& a, std::size_t col) {
  std::size_t best = col;
  S best_abs = abs_value(a(col, col));
  for (std::size_t r = col + 1; r < a.rows(); ++r) {
    S v = abs_value(a(r, col));
    if (v > best_abs) {
      best_abs = std::move(v);
      best = r;
    }
  }
  return best;
}

template <class S>
void swap_rows(Matrix<S>& a, std::size_t r1, std::size_t r2) {
  if (r1 == r2) return;
  for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(r1, c), a(r2, c));
}

double max_abs_entry(const Matrix<double>& m) {
  double s = 0.0;
  for (double x : m.data()) s = std::max(s, std::fabs(x));
  return s;
}

}  // namespace

Matrix<double> to_double(const Matrix<Rational>& m) {
  Matrix<double> d(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) d(r, c) = to_double(m(r, c));
  return d;
}

Matrix<Rational> to_rational(const Matrix<double>& m) {
  Matrix<Rational> q(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) q(r, c) = to_rational(m(r, c));
  return q;
}

double max_abs_difference(const Matrix<double>& a, const Matrix<double>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::invalid_parameter, "matrix shape mismatch");
  }
  double d = 0.0;
  for (std::size_t k = 0; k < a.data().size(); ++k) {
    d = std::max(d, std::fabs(a.data()[k] - b.data()[k]));
  }
  return d;
}

template <class S>
S determinant(const Matrix<S>& m) {
  require_square(m, "determinant");
  Matrix<S> a = m;
  const std::size_t n = a.rows();
  S det(1);
  for (std::size_t col = 0; col < n; ++col) {
    const std::size_t p = pivot_row(a, col);
    if (a(p, col) == S(0)) return S(0);
    if (p != col) {
      swap_rows(a, p, col);
      det = -det;
    }
    const S pivot = a(col, col);
    det *= pivot;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a(r, col) == S(0)) continue;
      const S f = a(r, col) / pivot;
      for (std::size_t c = col; c < n; ++c) a(r, c) -= f * a(col, c);
    }
  }
  return det;
}

template <class S>
Matrix<S> inverse(const Matrix<S>& m, double singular_tol) {
  require_square(m, "inverse");
  const std::size_t n = m.rows();
  Matrix<S> a = m;
  Matrix<S> inv = Matrix<S>::identity(n);
  S det(1);
  for (std::size_t col = 0; col < n; ++col) {
    const std::size_t p = pivot_row(a, col);
    if (a(p, col) == S(0)) {
      throw Error(ErrorCode::singular_matrix, "matrix is singular");
    }
    if (p != col) {
      swap_rows(a, p, col);
      swap_rows(inv, p, col);
      det = -det;
    }
    const S pivot = a(col, col);
    det *= pivot;
    for (std::size_t c = 0; c < n; ++c) {
      a(col, c) /= pivot;
      inv(col, c) /= pivot;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col) == S(0)) continue;
      const S f = a(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        a(r, c) -= f * a(col, c);
        inv(r, c) -= f * inv(col, c);
      }
    }
  }
  if constexpr (!is_exact_v<S>) {
    const double scale = max_abs_entry(m);
    if (std::fabs(det) < singular_tol * std::pow(scale, static_cast<double>(n))) {
      throw Error(ErrorCode::singular_matrix,
                  "matrix is numerically singular (|det| = " + format_real(std::fabs(det)) + ")");
    }
  }
  return inv;
}

template <class S>
Matrix<S> power(const Matrix<S>& m, int k) {
  require_square(m, "power");
  if (k < 0) throw Error(ErrorCode::invalid_parameter, "negative matrix power");
  Matrix<S> result = Matrix<S>::identity(m.rows());
  for (int step = 0; step < k; ++step) result = result * m;
  return result;
}

template <class S>
S power_trace(const Matrix<S>& m, int k) {
  if (k < 1) throw Error(ErrorCode::invalid_parameter, "power_trace needs k >= 1");
  const Matrix<S> p = power(m, k);
  S tr(0);
  for (std::size_t d = 0; d < p.rows(); ++d) tr += p(d, d);
  return tr;
}

bool is_nonnegative(const Matrix<double>& m) {
  return std::all_of(m.data().begin(), m.data().end(), [](double x) { return x >= 0.0; });
}

bool is_irreducible(const Matrix<double>& m) {
  require_square(m, "is_irreducible");
  const std::size_t n = m.rows();
  if (n == 0) return false;
  if (n == 1) return true;
  // Forward and backward reachability from vertex 0.
  for (int direction = 0; direction < 2; ++direction) {
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t w = 0; w < n; ++w) {
        const double x = direction == 0 ? m(v, w) : m(w, v);
        if (x != 0.0 && !seen[w]) {
          seen[w] = true;
          ++count;
          stack.push_back(w);
        }
      }
    }
    if (count != n) return false;
  }
  return true;
}

double spectral_radius(const Matrix<double>& m, double tol, int max_iter) {
  require_square(m, "spectral_radius");
  const std::size_t n = m.rows();
  if (n == 0) return 0.0;
  if (n == 1) return std::fabs(m(0, 0));

  if (is_nonnegative(m) && is_irreducible(m)) {
    // sI + m is primitive, so power iteration converges even for periodic
    // (e.g. bipartite) m; every iterate stays strictly positive.
    double max_row = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
      double s = 0.0;
      for (std::size_t c = 0; c < n; ++c) s += m(r, c);
      max_row = std::max(max_row, s);
    }
    const double shift = 0.5 * max_row;
    bool symmetric = true;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < r; ++c) symmetric = symmetric && m(r, c) == m(c, r);
    std::vector<double> x(n, 1.0);
    std::vector<double> y(n);
    for (int it = 0; it < max_iter; ++it) {
      double lo = std::numeric_limits<double>::infinity();
      double hi = 0.0;
      for (std::size_t r = 0; r < n; ++r) {
        double s = shift * x[r];
        for (std::size_t c = 0; c < n; ++c) s += m(r, c) * x[c];
        y[r] = s;
        const double ratio = s / x[r];
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
      }
      if (hi - lo <= tol * hi) {
        if (!symmetric) return 0.5 * (lo + hi) - shift;
        // The Rayleigh quotient is accurate to the square of the bracket width.
        double xy = 0.0;
        double xx = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
          xy += x[r] * y[r];
          xx += x[r] * x[r];
        }
        return std::clamp(xy / xx, lo, hi) - shift;
      }
      const double top = *std::max_element(y.begin(), y.end());
      for (std::size_t r = 0; r < n; ++r) x[r] = y[r] / top;
    }
    throw Error(ErrorCode::no_convergence,
                "power iteration did not converge in " + std::to_string(max_iter) + " iterations");
  }

  Eigen::MatrixXd e(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) e(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = m(r, c);
  Eigen::EigenSolver<Eigen::MatrixXd> solver(e, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::no_convergence, "eigenvalue iteration did not converge");
  }
  double rho = 0.0;
  for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k) {
    rho = std::max(rho, std::abs(solver.eigenvalues()[k]));
  }
  return rho;
}

template double determinant(const Matrix<double>&);
template Rational determinant(const Matrix<Rational>&);
template Matrix<double> inverse(const Matrix<double>&, double);
template Matrix<Rational> inverse(const Matrix<Rational>&, double);
template Matrix<double> power(const Matrix<double>&, int);
template Matrix<Rational> power(const Matrix<Rational>&, int);
template double power_trace(const Matrix<double>&, int);
template Rational power_trace(const Matrix<Rational>&, int);

}  // namespace walkdist
