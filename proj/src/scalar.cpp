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

#include "walkdist/scalar.hpp"

#include "walkdist/error.hpp"

#include <cctype>
#include <cstdio>
#include <limits>

namespace walkdist {

namespace {

using boost::multiprecision::cpp_int;

[[noreturn]] void bad_number(std::string_view text) {
  throw Error(ErrorCode::parse_error, "not a number: '" + std::string(text) + "'");
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

cpp_int pow10(unsigned e) {
  cpp_int p = 1;
  for (unsigned k = 0; k < e; ++k) p *= 10;
  return p;
}

Rational parse_decimal(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  cpp_int digits = 0;
  long scale = 0;
  bool any_digit = false;
  bool seen_point = false;
  while (!s.empty()) {
    const char ch = s.front();
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      digits = digits * 10 + (ch - '0');
      if (seen_point) --scale;
      any_digit = true;
    } else if (ch == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
    s.remove_prefix(1);
  }
  if (!any_digit) bad_number(text);
  if (!s.empty()) {
    if (s.front() != 'e' && s.front() != 'E') bad_number(text);
    s.remove_prefix(1);
    bool exp_negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
      exp_negative = s.front() == '-';
      s.remove_prefix(1);
    }
    if (s.empty() || s.size() > 4) bad_number(text);
    long e = 0;
    for (char ch : s) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) bad_number(text);
      e = e * 10 + (ch - '0');
    }
    scale += exp_negative ? -e : e;
  }
  Rational value = scale >= 0 ? Rational(digits * pow10(static_cast<unsigned>(scale)))
                              : Rational(digits, pow10(static_cast<unsigned>(-scale)));
  return negative ? Rational(-value) : value;
}

}  // namespace

Rational to_rational(double x) {
  if (!std::isfinite(x)) {
    throw Error(ErrorCode::invalid_parameter, "non-finite value has no rational form");
  }
  return Rational(x);
}

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) bad_number(text);
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return parse_decimal(s);
  const Rational num = parse_decimal(trim(s.substr(0, slash)));
  const Rational den = parse_decimal(trim(s.substr(slash + 1)));
  if (den == 0) {
    throw Error(ErrorCode::parse_error, "zero denominator in '" + std::string(text) + "'");
  }
  return num / den;
}

double parse_real(std::string_view text) {
  const double x = to_double(parse_rational(text));
  if (!std::isfinite(x)) bad_number(text);
  return x;
}

std::string format_rational(const Rational& x) {
  const cpp_int& num = boost::multiprecision::numerator(x);
  const cpp_int& den = boost::multiprecision::denominator(x);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string format_exact(const Rational& x) {
  cpp_int den = boost::multiprecision::denominator(x);
  unsigned twos = 0;
  unsigned fives = 0;
  while (den % 2 == 0) { den /= 2; ++twos; }
  while (den % 5 == 0) { den /= 5; ++fives; }
  if (den != 1) return format_rational(x);
  const unsigned places = std::max(twos, fives);
  if (places == 0) return format_rational(x);
  const cpp_int scaled = boost::multiprecision::numerator(x * Rational(pow10(places)));
  const bool negative = scaled < 0;
  std::string digits = (negative ? cpp_int(-scaled) : scaled).str();
  if (digits.size() <= places) digits.insert(0, places - digits.size() + 1, '0');
  digits.insert(digits.size() - places, ".");
  return negative ? "-" + digits : digits;
}

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace walkdist
