// Copyright 2026 The Hueckel Authors
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

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hueckel {

/// Exact rational in lowest terms with positive denominator. gmpxx keeps
/// results of arithmetic canonical; values built from raw num/den pairs go
/// through make_rational.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);

/// Parses "p", "-p" or "p/q". Decimal and exponent notation are rejected:
/// couplings must be exact.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

/// value^exponent; negative exponents invert (value must be nonzero).
Rational pow(const Rational& value, long exponent);

inline Rational abs_squared(const Rational& value) { return value * value; }

}  // namespace hueckel
