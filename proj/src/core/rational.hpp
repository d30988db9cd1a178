// Copyright 2026 The cubic2ec Authors
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

#ifndef CUBIC2EC_CORE_RATIONAL_HPP_
#define CUBIC2EC_CORE_RATIONAL_HPP_

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cubic2ec {

// Exact rational with arbitrary-precision numerator and denominator. GMP
// keeps every value in lowest terms with a positive denominator.
using Rational = mpq_class;

inline Rational make_rational(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// The uniform edge occurrence every certificate targets.
inline Rational seven_ninths() { return make_rational(7, 9); }

// Always "p/q", including "1/1" for integers. Used by the certificate schema.
std::string to_fraction_string(const Rational& r);

// Shortest form: "10" for integers, "11/10" otherwise.
std::string to_display_string(const Rational& r);

// Accepts "p/q" or a bare integer; rejects zero denominators and junk.
Rational parse_rational(std::string_view text);

}  // namespace cubic2ec

#endif  // CUBIC2EC_CORE_RATIONAL_HPP_
