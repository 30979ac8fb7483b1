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

#include "nonadd/vector_ops.hpp"

#include <stdexcept>

namespace nonadd {

namespace {

void require_same_size(const Vector& x, const Vector& y) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("dimension mismatch: " + std::to_string(x.size()) + " vs " +
                                std::to_string(y.size()));
  }
}

template <class F>
Vector zip(const Vector& x, const Vector& y, F f) {
  require_same_size(x, y);
  Vector out;
  out.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out.push_back(f(x[i], y[i]));
  return out;
}

}  // namespace

Vector constant_vector(std::size_t n, const Rational& value) { return Vector(n, value); }

Vector operator+(const Vector& x, const Vector& y) {
  return zip(x, y, [](const Rational& a, const Rational& b) { return a + b; });
}

Vector operator-(const Vector& x, const Vector& y) {
  return zip(x, y, [](const Rational& a, const Rational& b) { return a - b; });
}

Vector operator*(const Rational& alpha, const Vector& x) {
  Vector out;
  out.reserve(x.size());
  for (const auto& v : x) out.push_back(alpha * v);
  return out;
}

Vector join(const Vector& x, const Vector& y) {
  return zip(x, y, [](const Rational& a, const Rational& b) { return max(a, b); });
}

Vector meet(const Vector& x, const Vector& y) {
  return zip(x, y, [](const Rational& a, const Rational& b) { return min(a, b); });
}

Vector abs(const Vector& x) {
  Vector out;
  out.reserve(x.size());
  for (const auto& v : x) out.push_back(abs(v));
  return out;
}

bool leq(const Vector& x, const Vector& y) {
  require_same_size(x, y);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (y[i] < x[i]) return false;
  }
  return true;
}

Rational sup_norm(const Vector& x) {
  Rational out(0);
  for (const auto& v : x) out = max(out, abs(v));
  return out;
}

std::string to_string(const Vector& x) {
  std::string out = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out += ", ";
    out += x[i].str();
  }
  return out + ")";
}

}  // namespace nonadd
