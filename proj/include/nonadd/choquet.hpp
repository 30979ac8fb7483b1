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

#ifndef NONADD_CHOQUET_HPP
#define NONADD_CHOQUET_HPP

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "nonadd/capacity.hpp"
#include "nonadd/rational.hpp"
#include "nonadd/subalgebra.hpp"

namespace nonadd {

/// Choquet integral of x against ν:
///
///   ∫ x dν = ∫_0^∞ ν(x >= t) dt + ∫_{-∞}^0 [ν(x >= t) - ν(S)] dt.
///
/// t ↦ ν(x >= t) is a step function that only changes at the values of x,
/// so with x sorted decreasingly, x_(1) >= ... >= x_(n), and A_k the
/// indices of the k largest entries, the integral is the finite sum
///
///   Σ_k (x_(k) - x_(k+1)) ν(A_k),   x_(n+1) := 0.
///
/// Tied entries contribute a zero-length step, so the tie-break never
/// matters. Throws std::invalid_argument on a dimension mismatch.
Rational choquet_integral(const Vector& x, const FiniteCapacity& capacity);

/// (x_i - x_j)(y_i - y_j) >= 0 for all i, j.
bool comonotone(const Vector& x, const Vector& y);

/// A bounded sequence measurable with respect to a finite subalgebra: one
/// value per atom. Holds a reference; the subalgebra must outlive it.
class StepSequence {
 public:
  /// Throws std::invalid_argument unless there is one value per atom.
  StepSequence(const Subalgebra& algebra, Vector values);

  [[nodiscard]] const Subalgebra& algebra() const { return *algebra_; }
  [[nodiscard]] const Vector& values() const { return values_; }

  /// Indicator of a union of atoms.
  static StepSequence indicator(const Subalgebra& algebra, AtomMask mask);

 private:
  const Subalgebra* algebra_;
  Vector values_;
};

/// Level-set formula over the finitely many values of x: the upper level
/// sets are unions of atoms evaluated by ν. Exact iff every ν evaluation is.
SetValue choquet_step(const StepSequence& x, const SetCapacity& capacity);

// ---------------------------------------------------------------------------
// Property harness for black-box functionals V on Q^n.

using Functional = std::function<Rational(const Vector&)>;

inline constexpr const char* kNormalized = "normalized";
inline constexpr const char* kMonotone = "monotone";
inline constexpr const char* kUnitAdditive = "unit-additive";
inline constexpr const char* kUnitModular = "unit-modular";
inline constexpr const char* kLipschitz = "lipschitz";

struct PropertyResult {
  std::string property;
  bool pass = true;
  int checked = 0;
  int failures = 0;
  std::string witness;  ///< first failing trial, empty on pass
};

struct PropertyReport {
  std::vector<PropertyResult> results;

  [[nodiscard]] bool all_pass() const;
  /// Throws std::out_of_range for an unknown property name.
  [[nodiscard]] const PropertyResult& at(const std::string& property) const;
};

struct HarnessOptions {
  int trials = 256;
  std::uint64_t seed = 0;
  /// Values above 1 evaluate trials on that many threads; only valid when V
  /// is safe to call concurrently. Results do not depend on this value.
  unsigned threads = 1;
};

/// Random vector on the harness grid: entries k/d with d ∈ {1, 2, 4},
/// |k/d| <= 8, with occasional repeated entries.
Vector random_grid_vector(std::size_t n, std::mt19937_64& rng);

/// A single grid rational k/d, d ∈ {1, 2, 4}, |k/d| <= 8.
Rational random_grid_rational(std::mt19937_64& rng);

/// Randomized check of
///   (i)   V(λe) = λ,
///   (ii)  x <= y  ⇒  V(x) <= V(y),
///   (iii) V(x + λe) = V(x) + V(λe) for λ >= 0,
///   (iv)  V(x ∨ λe) + V(x ∧ λe) = V(x) + V(λe),
///   and   |V(x) - V(y)| <= ||x - y||_∞.
/// Every trial draws its own generator from (seed, trial), so reports are
/// reproducible and independent of the thread count. Failures are reported,
/// never thrown.
PropertyReport functional_properties(const Functional& functional, int n,
                                     const HarnessOptions& options = {});

}  // namespace nonadd

#endif  // NONADD_CHOQUET_HPP
