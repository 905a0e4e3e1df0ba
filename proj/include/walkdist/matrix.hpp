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

#include "walkdist/error.hpp"
#include "walkdist/scalar.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace walkdist {

/// Dense row-major matrix over S. Small orders only; no blocking, no views.
template <class S>
class Matrix {
 public:
  using value_type = S;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const S& fill = S(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  Matrix(std::initializer_list<std::initializer_list<S>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) {
        throw Error(ErrorCode::invalid_parameter, "ragged matrix literal");
      }
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = S(1);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  S& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const S& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const S> data() const noexcept { return data_; }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  /// Removes one row and one column (0-based positions).
  Matrix without(std::size_t row, std::size_t col) const {
    Matrix m(rows_ - 1, cols_ - 1);
    for (std::size_t r = 0, rr = 0; r < rows_; ++r) {
      if (r == row) continue;
      for (std::size_t c = 0, cc = 0; c < cols_; ++c) {
        if (c == col) continue;
        m(rr, cc++) = (*this)(r, c);
      }
      ++rr;
    }
    return m;
  }

  /// Keeps the listed rows and columns, in the listed order.
  Matrix select(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const {
    Matrix m(rows.size(), cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < cols.size(); ++c) m(r, c) = (*this)(rows[r], cols[c]);
    return m;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(const S& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const S& s) { return a *= s; }
  friend Matrix operator*(const S& s, Matrix a) { return a *= s; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) {
      throw Error(ErrorCode::invalid_parameter, "matrix product shape mismatch");
    }
    Matrix p(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const S& x = a(r, k);
        if (x == S(0)) continue;
        for (std::size_t c = 0; c < b.cols_; ++c) p(r, c) += x * b(k, c);
      }
    return p;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
      throw Error(ErrorCode::invalid_parameter, "matrix shape mismatch");
    }
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<S> data_;
};

Matrix<double> to_double(const Matrix<Rational>& m);
Matrix<Rational> to_rational(const Matrix<double>& m);

/// Largest entrywise |a - b|; shapes must agree.
double max_abs_difference(const Matrix<double>& a, const Matrix<double>& b);

/// Determinant by Gaussian elimination with partial pivoting. Exact for
/// Rational; a singular input yields 0.
template <class S>
S determinant(const Matrix<S>& m);

/// Gauss-Jordan inverse. For double, throws singular_matrix when
/// |det| < singular_tol * (max |m_ij|)^n; for Rational, when det == 0.
template <class S>
Matrix<S> inverse(const Matrix<S>& m, double singular_tol = 1e-12);

/// tr(m^k), k >= 1.
template <class S>
S power_trace(const Matrix<S>& m, int k);

template <class S>
Matrix<S> power(const Matrix<S>& m, int k);

bool is_nonnegative(const Matrix<double>& m);

/// Strong connectivity of the digraph of nonzero off-diagonal entries.
bool is_irreducible(const Matrix<double>& m);

/// Spectral radius. Nonnegative irreducible inputs use shifted power
/// iteration with Collatz-Wielandt bounds (stops when the bracket is below
/// tol relative to the estimate); any other input goes through a dense
/// eigenvalue solver. Throws no_convergence after max_iter iterations.
double spectral_radius(const Matrix<double>& m, double tol = 1e-12, int max_iter = 100000);

}  // namespace walkdist
