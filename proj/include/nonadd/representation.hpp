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

#ifndef NONADD_REPRESENTATION_HPP
#define NONADD_REPRESENTATION_HPP

// Finite-subalgebra form of the ultrafilter representation.
//
// The non-null atoms of a subalgebra S stand in for the ultrafilters that
// contain the dual filter: an ultrafilter extending I* picks exactly one
// non-null atom, and no ultrafilter picks a null one. A capacity ν that is
// I-invariant on S factors through the quotient, and ρ is that factor.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nonadd/capacity.hpp"
#include "nonadd/choquet.hpp"
#include "nonadd/subalgebra.hpp"

namespace nonadd {

struct InvarianceWitness {
  AtomMask a = 0;
  AtomMask b = 0;
  IntegerSet set_a;
  IntegerSet set_b;
  Rational value_a;
  Rational value_b;
};

enum class InvarianceStatus { kInvariant, kNotInvariant, kEstimate };

std::string to_string(InvarianceStatus status);

struct InvarianceVerdict {
  InvarianceStatus status = InvarianceStatus::kEstimate;
  std::optional<InvarianceWitness> witness;
  bool exhaustive = true;
  std::uint64_t pairs_checked = 0;
};

/// Unions up to this many atoms are enumerated; larger subalgebras are sampled.
inline constexpr std::size_t kExhaustiveAtoms = 10;
inline constexpr int kSampledUnions = 4096;

/// Checks ν(A) = ν(B) for every pair of unions of atoms with A Δ B a union of
/// null atoms. Each such class contains B = A minus its null atoms, so it is
/// enough to compare every A with that representative; the first failing A
/// in increasing mask order is the witness. Approximate subalgebras and
/// inexact values give kEstimate.
InvarianceVerdict check_invariance(const SetCapacity& capacity, const Subalgebra& algebra,
                                   std::uint64_t seed = 0);

struct Rho {
  /// Indices of the non-null atoms; element j of ρ's ground set is atoms[j].
  std::vector<std::size_t> atoms;
  FiniteCapacity capacity;
  ValidationReport validation;
  /// max |ν(A) - ∫ μ(A) dρ| over the unions of atoms checked.
  Rational residual_max;
  std::optional<AtomMask> residual_witness;
  bool exhaustive = true;
  bool exact = true;
};

/// ρ(T) := ν(union of the atoms in T) for T a set of non-null atoms, and the
/// residual of ν(A) = ρ(non-null atoms of A) over the unions of atoms. Built
/// whether or not ν is invariant; the residual is zero iff it is.
/// Throws std::domain_error when every atom is null.
Rho build_rho(const SetCapacity& capacity, const Subalgebra& algebra, std::uint64_t seed = 0);

struct RepresentationCertificate {
  InvarianceStatus status = InvarianceStatus::kEstimate;
  std::optional<Rho> rho;
  std::optional<InvarianceWitness> counterexample;
};

/// ρ when ν is invariant (or only estimated to be), the counterexample otherwise.
RepresentationCertificate represent(const SetCapacity& capacity, const Subalgebra& algebra,
                                    std::uint64_t seed = 0);

struct FunctionReport {
  Rational lhs;  ///< ∫ x dν by levels
  Rational rhs;  ///< ∫ (∫ x dμ) dρ = Choquet integral of x on the non-null atoms
  bool equal = false;
  bool exact = true;
};

FunctionReport represent_function(const StepSequence& x, const SetCapacity& capacity,
                                  const Rho& rho);

/// μ(A) = 1 iff m ∈ A: the principal ultrafilter at m.
SetCapacity principal_mu(Element m);

}  // namespace nonadd

#endif  // NONADD_REPRESENTATION_HPP
