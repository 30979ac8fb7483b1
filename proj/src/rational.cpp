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

#include "nonadd/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace nonadd {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!is_integer_literal(s)) {
    throw std::invalid_argument("malformed rational: '" + std::string(s) + "'");
  }
  if (s[0] == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational::Rational(std::int64_t value) : value_(static_cast<long>(value)) {}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  value_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(mpq_class(parse_integer(text)));
  }
  const mpz_class num = parse_integer(text.substr(0, slash));
  const auto den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  const mpz_class den = parse_integer(den_text);
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  return Rational(mpq_class(num, den));
}

Rational Rational::inverse_power_of_two(std::uint64_t k) {
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, k);
  return Rational(mpq_class(mpz_class(1), den));
}

std::string Rational::str() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational abs(const Rational& q) { return q.sign() < 0 ? -q : q; }
const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }
const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }

}  // namespace nonadd
