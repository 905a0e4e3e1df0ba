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

// Scalar types used throughout the library. Every numeric routine that does
// not need transcendental functions is written once over a scalar type S and
// instantiated for `double` and for the exact `Rational`.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <string>
#include <string_view>
#include <type_traits>

namespace walkdist {

using Rational = boost::multiprecision::number<
    boost::multiprecision::cpp_rational_backend,
    boost::multiprecision::et_off>;

template <class S>
inline constexpr bool is_exact_v = std::is_same_v<S, Rational>;

inline double to_double(double x) noexcept { return x; }
inline double to_double(const Rational& x) { return x.convert_to<double>(); }

inline double abs_value(double x) noexcept { return std::fabs(x); }
inline Rational abs_value(const Rational& x) { return boost::multiprecision::abs(x); }

/// Converts a double to an exact rational (every finite double is one).
Rational to_rational(double x);

/// Parses "p/q", an integer, or a decimal with optional exponent
/// ("0.25", "-3e-2") into an exact rational. Throws Error(parse_error).
Rational parse_rational(std::string_view text);

/// parse_rational followed by rounding to the nearest double.
double parse_real(std::string_view text);

/// "p" or "p/q" in lowest terms.
std::string format_rational(const Rational& x);

/// Exact decimal when the denominator divides a power of ten, otherwise "p/q".
std::string format_exact(const Rational& x);

/// Shortest-free fixed rendering at 17 significant digits ("%.17g").
std::string format_real(double x);

/// Equality within `tol` relative to max(1, |a|, |b|); exact types compare exactly.
template <class S>
bool nearly_equal(const S& a, const S& b, double tol) {
  if constexpr (is_exact_v<S>) {
    return a == b;
  } else {
    const double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
    return std::fabs(a - b) <= tol * scale;
  }
}

}  // namespace walkdist
