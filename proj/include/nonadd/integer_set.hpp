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

#ifndef NONADD_INTEGER_SET_HPP
#define NONADD_INTEGER_SET_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "nonadd/rational.hpp"

namespace nonadd {

using Element = std::uint64_t;

/// A subset of the positive integers in one of two exact forms.
///
///  * Finite: an explicit sorted list of elements.
///  * Eventually periodic: for n >= threshold, n belongs to the set iff
///    n mod period is one of the residues; below the threshold the same rule
///    applies except for the listed exceptions (exceptions_in are extra
///    members, exceptions_out are removed members).
///
/// Every value is canonical: the period is minimal, the threshold is one past
/// the largest exception (or 1), exceptions really disagree with the periodic
/// rule, and an eventually periodic set with no residues is stored as Finite.
/// Two IntegerSets are therefore equal iff they denote the same subset of N.
class IntegerSet {
 public:
  /// Upper bound on periods produced by Boolean operations.
  static constexpr Element kMaxPeriod = Element{1} << 22;

  IntegerSet() = default;  // empty set

  /// Sorts and deduplicates. Throws std::invalid_argument on 0.
  static IntegerSet finite(std::vector<Element> elements);

  /// Validates the raw fields (residues < period, exceptions disjoint and
  /// below the threshold, threshold and period positive), then canonicalizes.
  /// Throws std::invalid_argument on a violated invariant.
  static IntegerSet eventually_periodic(Element threshold, Element period,
                                        std::vector<Element> residues,
                                        std::vector<Element> exceptions_in = {},
                                        std::vector<Element> exceptions_out = {});

  static IntegerSet naturals();
  static IntegerSet multiples_of(Element k);
  static IntegerSet residue_class(Element residue, Element period);
  /// {lo, ..., hi}
  static IntegerSet interval(Element lo, Element hi);

  [[nodiscard]] bool is_finite() const { return residues_.empty(); }
  [[nodiscard]] bool is_empty() const { return is_finite() && elements_.empty(); }
  [[nodiscard]] bool is_naturals() const;

  /// O(log |exceptions|) membership test. 0 is never a member.
  [[nodiscard]] bool contains(Element n) const;

  /// |A ∩ [1, n]|, exact.
  [[nodiscard]] Element count_up_to(Element n) const;

  /// Asymptotic density: |residues| / period, or 0 for finite sets.
  [[nodiscard]] Rational density() const;

  // Finite form: the elements. Eventually periodic form: unused (empty).
  [[nodiscard]] const std::vector<Element>& elements() const { return elements_; }
  [[nodiscard]] Element threshold() const { return threshold_; }
  [[nodiscard]] Element period() const { return period_; }
  [[nodiscard]] const std::vector<Element>& residues() const { return residues_; }
  [[nodiscard]] const std::vector<Element>& exceptions_in() const { return exceptions_in_; }
  [[nodiscard]] const std::vector<Element>& exceptions_out() const { return exceptions_out_; }

  [[nodiscard]] IntegerSet complement() const;
  [[nodiscard]] IntegerSet unite(const IntegerSet& other) const;
  [[nodiscard]] IntegerSet intersect(const IntegerSet& other) const;
  [[nodiscard]] IntegerSet minus(const IntegerSet& other) const;
  [[nodiscard]] IntegerSet symmetric_difference(const IntegerSet& other) const;
  /// A \ [1, n]
  [[nodiscard]] IntegerSet without_prefix(Element n) const;
  /// A ∩ [1, n] as a finite set.
  [[nodiscard]] IntegerSet restricted_to(Element n) const;

  [[nodiscard]] bool is_subset_of(const IntegerSet& other) const;

  /// Short human-readable form, e.g. "{1,2,3}" or "2N+0 (n0=1)".
  [[nodiscard]] std::string describe() const;

  friend bool operator==(const IntegerSet&, const IntegerSet&) = default;

 private:
  enum class Op { kUnion, kIntersection, kDifference, kSymmetricDifference };
  [[nodiscard]] IntegerSet combine(const IntegerSet& other, Op op) const;
  [[nodiscard]] bool periodic_rule(Element n) const;

  /// Builds the canonical set whose members below `threshold` are given by
  /// `below` (index n-1) and which follows `pattern` (period = size) from
  /// `threshold` on.
  static IntegerSet canonicalize(const std::vector<bool>& below, Element threshold,
                                 std::vector<bool> pattern);

  std::vector<Element> elements_;
  Element threshold_ = 1;
  Element period_ = 1;
  std::vector<Element> residues_;
  std::vector<bool> residue_mask_;
  std::vector<Element> exceptions_in_;
  std::vector<Element> exceptions_out_;
};

/// Sparse infinite sets with closed-form facts (density zero, convergent
/// reciprocal sums) that fall outside the eventually periodic class.
enum class SparseRule {
  kPowersOfTwo,  ///< {2^k : k >= 1}
  kSquares,      ///< {k^2 : k >= 1}
};

struct RuleSet {
  SparseRule rule;

  [[nodiscard]] bool contains(Element n) const;
  [[nodiscard]] Element count_up_to(Element n) const;
  [[nodiscard]] std::string name() const;
  [[nodiscard]] IntegerSet restricted_to(Element n) const;

  friend bool operator==(const RuleSet&, const RuleSet&) = default;
};

/// An arbitrary subset of N known only on the window [1, horizon]. Every
/// asymptotic quantity computed from it is an estimate.
class Truncation {
 public:
  Truncation(Element horizon, std::vector<Element> elements);

  [[nodiscard]] Element horizon() const { return horizon_; }
  [[nodiscard]] const std::vector<Element>& elements() const { return elements_; }
  [[nodiscard]] bool contains(Element n) const;
  [[nodiscard]] Element count_up_to(Element n) const;
  [[nodiscard]] IntegerSet restricted_to(Element n) const;

  friend bool operator==(const Truncation&, const Truncation&) = default;

 private:
  Element horizon_;
  std::vector<Element> elements_;
};

using AnySet = std::variant<IntegerSet, RuleSet, Truncation>;

/// A ∩ [1, n] for any supported set.
IntegerSet restrict_to(const AnySet& set, Element n);

/// Built-in named sets: "empty", "naturals", "evens", "odds",
/// "multiples-of-<k>", "interval-<a>-<b>", "block-set" (truncated at
/// `horizon`), "powers-of-two", "squares". Returns nullopt for unknown names.
std::optional<AnySet> set_fixture(std::string_view name, Element horizon);

/// ∪_k [4^k, 2·4^k) ∩ [1, horizon].
Truncation block_set(Element horizon);

}  // namespace nonadd

#endif  // NONADD_INTEGER_SET_HPP
