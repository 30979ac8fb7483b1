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

#ifndef NONADD_RIESZ_HPP
#define NONADD_RIESZ_HPP

// The Riesz space Q^n with the componentwise order and unit e = (1, ..., 1).
//
// Its proper uniformly closed order ideals are the coordinate subspaces
// N = {x : x_i = 0 for i ∈ K} with K nonempty. The positive functionals with
// ⟨e, ξ⟩ = 1 are the probability vectors; those annihilating N are supported
// inside K, and their extreme points are the evaluations δ_i, i ∈ K.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "nonadd/capacity.hpp"
#include "nonadd/choquet.hpp"
#include "nonadd/rational.hpp"

namespace nonadd {

/// inf{λ >= 0 : |x| <= λe} = max_i |x_i|. The infimum is attained.
Rational unit_norm(const Vector& x);

/// N = {x ∈ Q^n : x_i = 0 for every i ∈ K}; coordinates are 1-based.
class CoordinateIdeal {
 public:
  /// Throws std::invalid_argument when K is empty (N = Q^n is not proper)
  /// or leaves {1, ..., n}.
  CoordinateIdeal(std::size_t n, std::vector<std::size_t> zero_set);

  [[nodiscard]] std::size_t dimension() const { return n_; }
  [[nodiscard]] const std::vector<std::size_t>& zero_set() const { return zero_set_; }
  [[nodiscard]] bool in_zero_set(std::size_t i) const;
  [[nodiscard]] bool contains(const Vector& x) const;

  friend bool operator==(const CoordinateIdeal&, const CoordinateIdeal&) = default;

 private:
  std::size_t n_;
  std::vector<std::size_t> zero_set_;
};

/// ξ ∈ Δ: nonnegative weights with Σ ξ_i = 1.
class PositiveUnitFunctional {
 public:
  /// Throws std::invalid_argument on a negative weight or a total other than 1.
  explicit PositiveUnitFunctional(Vector weights);
  static PositiveUnitFunctional coordinate(std::size_t n, std::size_t i);

  [[nodiscard]] const Vector& weights() const { return weights_; }
  [[nodiscard]] std::size_t dimension() const { return weights_.size(); }
  [[nodiscard]] Rational operator()(const Vector& x) const;
  /// 1-based indices with ξ_i > 0.
  [[nodiscard]] std::vector<std::size_t> support() const;

  friend bool operator==(const PositiveUnitFunctional&, const PositiveUnitFunctional&) = default;

 private:
  Vector weights_;
};

/// Δ_N together with its extreme points ℰ_N = {δ_i : i ∈ K}.
struct DeltaN {
  CoordinateIdeal ideal;
  std::vector<PositiveUnitFunctional> extreme_points;

  /// ξ annihilates N, i.e. is supported inside K.
  [[nodiscard]] bool contains(const PositiveUnitFunctional& xi) const;
  /// Coefficients c (one per extreme point) with ξ = Σ c_k δ_{K_k};
  /// nullopt when ξ ∉ Δ_N.
  [[nodiscard]] std::optional<Vector> convex_coefficients(const PositiveUnitFunctional& xi) const;
  /// Σ c_k δ_{K_k}; throws std::invalid_argument unless c is a probability vector.
  [[nodiscard]] PositiveUnitFunctional combine(const Vector& coefficients) const;
  /// Random element of Δ_N: a random convex combination of ℰ_N on a grid.
  [[nodiscard]] PositiveUnitFunctional sample(std::mt19937_64& rng) const;
};

DeltaN delta_n(const CoordinateIdeal& ideal);

/// N_ξ = {x : ξ(|x|) = 0}, the coordinate ideal with K = support(ξ).
CoordinateIdeal n_xi(const PositiveUnitFunctional& xi);

struct CheckReport {
  int checked = 0;
  std::vector<std::string> failures;
  [[nodiscard]] bool ok() const { return failures.empty(); }
};

/// Sampled check that N_ξ is a vector subspace, solid, and closed (equal to
/// the zero set of the continuous map x ↦ ξ(|x|)).
CheckReport check_n_xi(const PositiveUnitFunctional& xi, int samples, std::uint64_t seed);

struct Separation {
  Vector z;
  std::size_t coordinate;  ///< δ_i with ξ̄(|z|) > 0
};

struct IntersectionReport {
  int contained = 0;  ///< samples z ∈ N confirmed in every sampled N_ξ
  int separated = 0;  ///< samples z ∉ N given an explicit separating δ_i
  std::vector<Separation> separations;
  std::vector<std::string> failures;
  [[nodiscard]] bool ok() const { return failures.empty(); }
};

/// Checks N = ∩_{ξ ∈ Δ_N} N_ξ on samples: every z ∈ N satisfies ξ(|z|) = 0 for
/// all `functionals` (which must lie in Δ_N), and every z ∉ N is separated by
/// some δ_i, i ∈ K, with |z_i| > 0.
IntersectionReport ideal_intersection_identity(
    const CoordinateIdeal& ideal, const std::vector<Vector>& samples,
    const std::vector<PositiveUnitFunctional>& functionals);

/// Restriction of x to the coordinates in K (the quotient map Q^n → Q^n/N).
Vector quotient_project(const CoordinateIdeal& ideal, const Vector& x);

struct RoundtripOptions {
  int trials = 256;
  std::uint64_t seed = 0;
  /// Trials for the (i)-(iv) pre-check; 0 skips it.
  int property_trials = 256;
  unsigned threads = 1;
};

struct RoundtripReport {
  /// ν(A) = V(1_A) on subsets of K; element k of the ground set is K[k].
  /// Absent when ν(∅) != 0 or ν(K) != 1.
  std::optional<FiniteCapacity> capacity;
  std::string aborted;  ///< reason when capacity is absent
  ValidationReport validation;
  PropertyReport properties;
  PropertyResult invariance;  ///< V(x) = V(y) whenever x - y ∈ N
  Rational residual_max;
  std::string residual_witness;
  int trials = 0;

  [[nodiscard]] bool ok() const;
};

/// Recovers the capacity ν(A) := V(1_A), A ⊆ K, and compares V(x) with
/// ∫ ⟨x, ξ⟩ dν(ξ) over ℰ_N, which is choquet_integral(quotient_project(x), ν),
/// on random trial vectors.
RoundtripReport schmeidler_roundtrip(const Functional& functional, const CoordinateIdeal& ideal,
                                     const RoundtripOptions& options = {});

}  // namespace nonadd

#endif  // NONADD_RIESZ_HPP
