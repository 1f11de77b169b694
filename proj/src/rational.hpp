// Copyright 2026 The spanscore Authors
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

#ifndef SPANSCORE_RATIONAL_HPP
#define SPANSCORE_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace spanscore {

// All scores are kept as exact rationals until the moment they are printed.
// Corpus-level sums mix many denominators (every span length contributes
// one), so fixed-width integers would overflow long before a realistically
// sized test set is done; arbitrary precision makes "exact" actually exact.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& v) {
  return static_cast<double>(v);
}

// Renders `value` with `digits` places after the decimal point, rounding
// half-to-even so that formatting cannot introduce a systematic bias.
inline std::string format_decimal(const Rational& value, int digits) {
  if (digits < 0) digits = 0;
  Int num = boost::multiprecision::numerator(value);
  Int den = boost::multiprecision::denominator(value);  // > 0, normalized
  const bool negative = num < 0;
  if (negative) num = -num;

  Int scaled = num;
  for (int i = 0; i < digits; ++i) scaled *= 10;
  Int quotient = scaled / den;
  const Int remainder = scaled % den;
  const Int twice = remainder * 2;
  if (twice > den || (twice == den && (quotient & 1) != 0)) ++quotient;

  std::string s = quotient.str();
  if (digits > 0) {
    if (static_cast<int>(s.size()) <= digits) {
      s.insert(0, static_cast<size_t>(digits) + 1 - s.size(), '0');
    }
    s.insert(s.size() - static_cast<size_t>(digits), ".");
  }
  if (negative && quotient != 0) s.insert(0, "-");
  return s;
}

}  // namespace spanscore

#endif  // SPANSCORE_RATIONAL_HPP
