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

#ifndef NONADD_VECTOR_OPS_HPP
#define NONADD_VECTOR_OPS_HPP

#include <string>

#include "nonadd/rational.hpp"

namespace nonadd {

// Componentwise lattice and vector-space operations on rational vectors.
// Binary operations throw std::invalid_argument on a dimension mismatch.

Vector constant_vector(std::size_t n, const Rational& value);
Vector operator+(const Vector& x, const Vector& y);
Vector operator-(const Vector& x, const Vector& y);
Vector operator*(const Rational& alpha, const Vector& x);
/// x ∨ y and x ∧ y.
Vector join(const Vector& x, const Vector& y);
Vector meet(const Vector& x, const Vector& y);
Vector abs(const Vector& x);
/// x <= y componentwise.
bool leq(const Vector& x, const Vector& y);
/// max_i |x_i|; 0 for the empty vector.
Rational sup_norm(const Vector& x);

/// "(1, -1/2, 3)"
std::string to_string(const Vector& x);

}  // namespace nonadd

#endif  // NONADD_VECTOR_OPS_HPP
