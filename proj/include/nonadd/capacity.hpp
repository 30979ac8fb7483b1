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

#ifndef NONADD_CAPACITY_HPP
#define NONADD_CAPACITY_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "nonadd/ideals.hpp"
#include "nonadd/integer_set.hpp"
#include "nonadd/rational.hpp"

namespace nonadd {

/// Subset of a finite ground set {1, ..., n}: bit i-1 stands for element i.
using Mask = std::uint32_t;

inline constexpr Mask singleton(int element) { return Mask{1} << (element - 1); }

/// Set function on the power set of {1, ..., n}, stored as a table of 2^n
/// exact values indexed by Mask. The table may violate the capacity axioms;
/// validate() says whether it is a normalized capacity.
class FiniteCapacity {
 public:
  static constexpr int kMaxGroundSize = 20;

  /// Throws std::invalid_argument unless 1 <= n <= 20 and values.size() == 2^n.
  FiniteCapacity(int n, std::vector<Rational> values);

  [[nodiscard]] int ground_size() const { return n_; }
  [[nodiscard]] Mask full() const { return static_cast<Mask>((std::uint64_t{1} << n_) - 1); }
  [[nodiscard]] const Rational& operator()(Mask subset) const { return values_[subset]; }
  [[nodiscard]] const std::vector<Rational>& values() const { return values_; }

  friend bool operator==(const FiniteCapacity&, const FiniteCapacity&) = default;

 private:
  int n_;
  std::vector<Rational> values_;
};

struct Violation {
  enum class Kind { kEmptyNotZero, kFullNotOne, kNotMonotone };
  Kind kind;
  Mask smaller = 0;  ///< A in the violated pair A ⊂ B, or the offending set
  Mask larger = 0;
  Rational smaller_value;
  Rational larger_value;

  [[nodiscard]] std::string describe() const;
};

struct ValidationReport {
  std::vector<Violation> violations;
  [[nodiscard]] bool ok() const { return violations.empty(); }
};

/// Checks ν(∅) = 0, ν(full) = 1 and ν(A) <= ν(A ∪ {i}) over every covering
/// pair. Monotonicity along covering pairs implies it for all A ⊆ B.
ValidationReport validate(const FiniteCapacity& capacity);

/// Subsets ordered by popcount, then numerically.
std::vector<Mask> inclusion_order(int n);

/// Deterministic random capacity, 1 <= n <= 12: independent uniforms on the
/// grid {0, 1/1000, ..., 1} per subset, made monotone by a running maximum
/// in inclusion order, then rescaled so the full set has value 1.
FiniteCapacity random_capacity(int n, std::uint64_t seed);

/// Additive capacity with the given point masses (nonnegative, sum 1).
FiniteCapacity additive_capacity(const Vector& weights);
FiniteCapacity random_additive_capacity(int n, std::uint64_t seed);
FiniteCapacity uniform_capacity(int n);
/// 1 only on the full set.
FiniteCapacity min_capacity(int n);
/// 1 on every nonempty set.
FiniteCapacity max_capacity(int n);
/// ν(A) = 1 iff element j ∈ A.
FiniteCapacity dirac_capacity(int n, int j);

/// ν*(A) = 1 - ν(A^c).
FiniteCapacity conjugate(const FiniteCapacity& capacity);

/// Value of a set function on an IntegerSet, with an exactness flag.
struct SetValue {
  Rational value;
  bool exact = true;
};

/// A normalized capacity on subsets of N, evaluated on the exact set class.
class SetCapacity {
 public:
  using Evaluator = std::function<SetValue(const IntegerSet&)>;

  SetCapacity(std::string name, Evaluator evaluator);

  [[nodiscard]] SetValue operator()(const IntegerSet& set) const { return evaluator_(set); }
  [[nodiscard]] const std::string& name() const { return name_; }

 private:
  std::string name_;
  Evaluator evaluator_;
};

SetCapacity upper_density_capacity();
SetCapacity lower_density_capacity();
/// ||A||_phi / normalization for an Exh ideal's submeasure.
SetCapacity exh_norm_capacity(const IdealSpec& exh_ideal);
/// ν(A) = 1 iff A ∉ I.
SetCapacity ideal_indicator(const IdealSpec& ideal);
/// Convex combination Σ w_k ν_k. Throws std::invalid_argument unless the
/// weights are nonnegative and sum to 1.
SetCapacity mixture(std::vector<std::pair<Rational, SetCapacity>> components);

/// Sampled check that ν is a normalized capacity: ν(∅) = 0, ν(N) = 1 and
/// ν(A) <= ν(A ∪ B) for every pair of samples. One message per violation.
std::vector<std::string> check_set_capacity(const SetCapacity& capacity,
                                            const std::vector<IntegerSet>& samples);

class Subalgebra;

/// {0,1}-valued capacity on the atoms of `algebra`: value 1 iff the union
/// contains a non-null atom. Throws std::domain_error when some atom has only
/// an estimated membership verdict.
FiniteCapacity ideal_indicator_capacity(const Subalgebra& algebra);

}  // namespace nonadd

#endif  // NONADD_CAPACITY_HPP
