// Copyright 2026 The nonadd Authors
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

#ifndef NONADD_RATIONAL_HPP
#define NONADD_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace nonadd {

/// Exact rational number, always kept in lowest terms with the sign on the
/// numerator. Thin value wrapper over GMP's mpq_class so that expression
/// templates never leak into `auto` declarations.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);
  explicit Rational(mpq_class value);

  /// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed
  /// text or a zero denominator.
  static Rational parse(std::string_view text);

  /// 2^-k as an exact rational.
  static Rational inverse_power_of_two(std::uint64_t k);

  /// Canonical text form: "p" when the denominator is 1, "p/q" otherwise.
  [[nodiscard]] std::string str() const;
  [[nodiscard]] double to_double() const { return value_.get_d(); }
  [[nodiscard]] const mpq_class& raw() const { return value_; }

  [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
  [[nodiscard]] int sign() const { return sgn(value_); }

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return cmp(lhs.value_, rhs.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& q) {
    return os << q.str();
  }

 private:
  mpq_class value_{0};
};

Rational abs(const Rational& q);
const Rational& max(const Rational& a, const Rational& b);
const Rational& min(const Rational& a, const Rational& b);

/// Rational-valued vector, the finite-dimensional stand-in for a bounded
/// sequence.
using Vector = std::vector<Rational>;

}  // namespace nonadd

#endif  // NONADD_RATIONAL_HPP
