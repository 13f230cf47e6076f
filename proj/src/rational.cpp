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

#include "owa/rational.hpp"

#include <cctype>
#include <cmath>

#include "owa/errors.hpp"

namespace owa {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw Error("malformed rational '" + std::string(text) + "'");
    Integer d{std::string(den)};
    if (d == 0) throw Error("zero denominator in '" + std::string(text) + "'");
    value = Rational(Integer{std::string(num)}) / Rational(d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = s.substr(0, dot);
    auto frac = s.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac)) || (whole.empty() && frac.empty()))
      throw Error("malformed decimal '" + std::string(text) + "'");
    Integer scale = 1;
    for (std::size_t k = 0; k < frac.size(); ++k) scale *= 10;
    Integer w = whole.empty() ? Integer(0) : Integer{std::string(whole)};
    Integer f = frac.empty() ? Integer(0) : Integer{std::string(frac)};
    value = Rational(w * scale + f) / Rational(scale);
  } else {
    if (!all_digits(s))
      throw Error("malformed number '" + std::string(text) + "'");
    value = Rational(Integer{std::string(s)});
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& value) {
  const Integer num = boost::multiprecision::numerator(value);
  const Integer den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double to_double(const Rational& value) {
  return value.convert_to<double>();
}

Rational from_double(double value, long long max_den) {
  if (!std::isfinite(value)) throw Error("cannot convert non-finite value");
  // Continued-fraction expansion with a denominator cap.
  const bool negative = value < 0;
  double rest = std::fabs(value);
  long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  for (int iter = 0; iter < 64; ++iter) {
    const double a = std::floor(rest);
    if (a > 9e15) break;
    const auto ai = static_cast<long long>(a);
    const long long q2 = q0 + ai * q1;
    if (q2 > max_den) break;
    const long long p2 = p0 + ai * p1;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    const double frac = rest - a;
    if (frac < 1e-12) break;
    rest = 1.0 / frac;
  }
  if (q1 == 0) return Rational(0);
  const Rational r = Rational(Integer{p1}) / Rational(Integer{q1});
  return negative ? Rational(-r) : r;
}

bool is_integer(const Rational& value) {
  return boost::multiprecision::denominator(value) == 1;
}

Integer common_denominator(const std::vector<Rational>& values) {
  Integer l = 1;
  for (const auto& v : values) {
    const Integer d = boost::multiprecision::denominator(v);
    l = boost::multiprecision::lcm(l, d);
  }
  return l;
}

}  // namespace owa
