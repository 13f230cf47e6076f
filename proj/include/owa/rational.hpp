// Copyright 2026 The owamilp Authors
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

#ifndef OWA_RATIONAL_HPP_
#define OWA_RATIONAL_HPP_

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace owa {

// Exact arithmetic for the oracle and validation paths. The LP engine works
// in doubles; conversions happen at the model boundary only.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

// Accepts "3", "-7", "2/5", "0.4", "1e-3" is rejected.
Rational parse_rational(std::string_view text);

// Canonical text form: "3", "-2/5".
std::string to_string(const Rational& value);

double to_double(const Rational& value);

// Nearest rational with denominator <= max_den; used to recover exact values
// from LP output when the caller knows the value lives on a coarse grid.
Rational from_double(double value, long long max_den = 1000000);

bool is_integer(const Rational& value);

// Least common multiple of the denominators; 1 for an empty list.
Integer common_denominator(const std::vector<Rational>& values);

}  // namespace owa

#endif  // OWA_RATIONAL_HPP_
