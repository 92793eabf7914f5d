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

#include "hedonic/rational.h"

#include <cctype>
#include <string>

#include "hedonic/error.h"

namespace hedonic {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

std::string to_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  std::string_view num = body;
  std::string_view den = "1";
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den)) {
    throw ValidationError("not a rational: '" + std::string(text) + "'");
  }
  // GMP reads a leading 0 as an octal prefix.
  while (num.size() > 1 && num.front() == '0') num.remove_prefix(1);
  while (den.size() > 1 && den.front() == '0') den.remove_prefix(1);
  BigInt p{std::string(num)};
  BigInt q{std::string(den)};
  if (q == 0) {
    throw ValidationError("zero denominator: '" + std::string(text) + "'");
  }
  Rational r(p, q);
  return negative ? Rational(-r) : r;
}

}  // namespace hedonic
