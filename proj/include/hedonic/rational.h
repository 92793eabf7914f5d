// Copyright 2026 The Hedonic Mechanisms Authors.
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

#ifndef HEDONIC_RATIONAL_H_
#define HEDONIC_RATIONAL_H_

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace hedonic {

// Arbitrary-precision exact rational; every valuation, utility and welfare
// value in the library is one of these.
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

// Renders as "p/q" with q > 0, always including the denominator ("1/1").
std::string to_string(const Rational& r);

// Accepts "p/q" or an integer "p", with an optional sign. Throws
// ValidationError on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

}  // namespace hedonic

#endif  // HEDONIC_RATIONAL_H_
