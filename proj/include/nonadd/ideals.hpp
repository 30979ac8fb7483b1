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

#ifndef NONADD_IDEALS_HPP
#define NONADD_IDEALS_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nonadd/integer_set.hpp"
#include "nonadd/rational.hpp"

namespace nonadd {

/// Default horizon for estimates on truncated sets: 2^16.
inline constexpr Element kDefaultHorizon = Element{1} << 16;

/// Powers of two 1, 2, 4, ... not exceeding `horizon`, followed by `horizon`
/// itself when it is not a power of two.
std::vector<Element> powers_of_two_schedule(Element horizon = kDefaultHorizon);

// ---------------------------------------------------------------------------
// Densities

struct DensityValue {
  Rational value;
  bool exact = false;
  Element horizon = 0;  ///< largest n inspected; 0 when exact
};

/// Upper asymptotic density limsup |A ∩ [1,n]| / n.
///
/// Exact for IntegerSet (|residues|/period) and the sparse rules (0). For a
/// Truncation, the estimate is the maximum of the prefix ratio over the tail
/// of the schedule: the points n with n^2 >= the last schedule point, so
/// that the first few ratios, which say nothing about the limit, are skipped.
DensityValue upper_density(const AnySet& set, const std::vector<Element>& schedule);
DensityValue upper_density(const AnySet& set, Element horizon = kDefaultHorizon);

/// Lower asymptotic density; mirror of upper_density with min.
DensityValue lower_density(const AnySet& set, const std::vector<Element>& schedule);
DensityValue lower_density(const AnySet& set, Element horizon = kDefaultHorizon);

// ---------------------------------------------------------------------------
// Submeasures

/// A monotone, subadditive set function phi with phi(∅) = 0.
///
/// The window evaluator sees A ∩ [1, H] as a finite set and must return
/// phi of that finite set. Optional hooks supply exact values on the
/// eventually periodic class and the exact mass at infinity
/// ||A||_phi = lim_n phi(A \ [1,n]).
class Submeasure {
 public:
  using WindowEvaluator = std::function<Rational(const IntegerSet& finite_part)>;
  using ExactEvaluator = std::function<std::optional<Rational>(const IntegerSet&)>;
  using MassAtInfinity = std::function<std::optional<Rational>(const AnySet&)>;

  Submeasure(std::string name, WindowEvaluator window, ExactEvaluator exact = {},
             MassAtInfinity mass = {});

  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] Rational evaluate_window(const AnySet& set, Element window) const;
  [[nodiscard]] std::optional<Rational> evaluate_exact(const IntegerSet& set) const;
  [[nodiscard]] std::optional<Rational> mass_at_infinity(const AnySet& set) const;

 private:
  std::string name_;
  WindowEvaluator window_;
  ExactEvaluator exact_;
  MassAtInfinity mass_;
};

using SubmeasurePtr = std::shared_ptr<const Submeasure>;

/// phi(A) = sup_n |A ∩ [1,n]| / n. Exact on IntegerSet; ||A||_phi is the
/// upper density, so Exh(phi) is the density-zero ideal.
SubmeasurePtr density_sup_submeasure();

/// phi(A) = Σ_{a∈A} 2^-a. Exact on IntegerSet; ||A||_phi = 0 for every A,
/// so it does not define an ideal.
SubmeasurePtr geometric_submeasure();

/// Named submeasures: "density-sup", "geometric".
SubmeasurePtr submeasure_by_name(const std::string& name);

/// Sampled check of phi(∅) = 0, monotonicity and subadditivity on random
/// finite subsets of [1, window]. Returns one message per violation.
std::vector<std::string> check_submeasure(const Submeasure& phi, Element window, int trials,
                                          std::uint64_t seed);

struct ExhNormResult {
  std::vector<Element> schedule;
  std::vector<Rational> values;  ///< phi(A \ [1,n]) for n in schedule
  bool exact = false;
  Element window = 0;  ///< evaluation window when not exact
  /// values / ||N||_phi, present when ||N||_phi is known and positive.
  std::optional<std::vector<Rational>> normalized;
  std::optional<Rational> naturals_mass;

  [[nodiscard]] const Rational& estimate() const { return values.back(); }
};

/// Approximates the mass at infinity ||A||_phi along `schedule`.
/// Throws std::invalid_argument when the schedule is empty or not strictly
/// increasing, and std::domain_error when the returned sequence increases
/// (phi is not monotone). `window` is used for sets phi cannot evaluate
/// exactly; 0 selects 4·schedule.back().
ExhNormResult exh_norm(const Submeasure& phi, const AnySet& set,
                       const std::vector<Element>& schedule, Element window = 0);

// ---------------------------------------------------------------------------
// Ideals

/// Weights w_a of a summable ideal {A : Σ_{a∈A} w_a < ∞}.
struct WeightRule {
  enum class Kind { kHarmonic, kConstant };
  Kind kind = Kind::kHarmonic;
  Rational scale{1};  ///< w_a = scale / a  or  w_a = scale

  [[nodiscard]] Rational weight(Element a) const;
  [[nodiscard]] std::string name() const;
};

class IdealSpec {
 public:
  enum class Kind { kFin, kDensityZero, kSummable, kExh };

  static IdealSpec fin();
  static IdealSpec density_zero();
  /// Throws std::invalid_argument for a non-positive scale.
  static IdealSpec summable(WeightRule weights = {});
  /// Throws std::invalid_argument when ||N||_phi is known to be zero
  /// (Exh(phi) would contain N) or the normalization is not positive.
  static IdealSpec exh(SubmeasurePtr phi, Rational normalization = Rational(1));

  [[nodiscard]] Kind kind() const { return kind_; }
  [[nodiscard]] const WeightRule& weights() const { return weights_; }
  [[nodiscard]] const SubmeasurePtr& submeasure() const { return submeasure_; }
  [[nodiscard]] const Rational& normalization() const { return normalization_; }
  [[nodiscard]] std::string name() const;

 private:
  Kind kind_ = Kind::kFin;
  WeightRule weights_;
  SubmeasurePtr submeasure_;
  Rational normalization_{1};
};

enum class Verdict { kIn, kOut, kEstimateOnly };

std::string to_string(Verdict v);

struct MembershipVerdict {
  Verdict verdict = Verdict::kEstimateOnly;
  std::string reason;
  /// For estimates: the quantity whose vanishing decides membership
  /// (density, partial weight sum, or tail mass) at `horizon`.
  std::optional<Rational> estimate;
  Element horizon = 0;

  [[nodiscard]] bool in() const { return verdict == Verdict::kIn; }
  [[nodiscard]] bool out() const { return verdict == Verdict::kOut; }
  [[nodiscard]] bool exact() const { return verdict != Verdict::kEstimateOnly; }
};

MembershipVerdict member(const IdealSpec& ideal, const AnySet& set);

struct SymmetricDifferenceVerdict {
  IntegerSet difference;
  MembershipVerdict membership;
};

SymmetricDifferenceVerdict symm_diff_in_ideal(const IdealSpec& ideal, const IntegerSet& a,
                                              const IntegerSet& b);

/// Membership in the dual filter {A : A^c ∈ I}.
MembershipVerdict dual_filter_member(const IdealSpec& ideal, const IntegerSet& set);

}  // namespace nonadd

#endif  // NONADD_IDEALS_HPP
