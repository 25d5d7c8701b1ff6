// Copyright 2026 The Prefaxiom Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PREFAXIOM_RATIONAL_H_
#define PREFAXIOM_RATIONAL_H_

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace prefaxiom {

// Arbitrary precision rational. Every tally proportion, score and loss weight
// is held in this type so that comparisons against 1/2 are decided exactly.
using Rational = boost::multiprecision::cpp_rational;

using RationalMatrix = std::vector<std::vector<Rational>>;

inline double ToDouble(const Rational& value) {
  return value.convert_to<double>();
}

// Exact: every finite double is a dyadic rational.
inline Rational FromDouble(double value) { return Rational(value); }

// "p/q", or "p" when the denominator is one.
inline std::string ToString(const Rational& value) {
  if (boost::multiprecision::denominator(value) == 1) {
    return boost::multiprecision::numerator(value).str();
  }
  return boost::multiprecision::numerator(value).str() + "/" +
         boost::multiprecision::denominator(value).str();
}

inline RationalMatrix ZeroMatrix(int n) {
  return RationalMatrix(n, std::vector<Rational>(n, Rational(0)));
}

}  // namespace prefaxiom

#endif  // PREFAXIOM_RATIONAL_H_
