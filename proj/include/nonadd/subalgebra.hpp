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

#ifndef NONADD_SUBALGEBRA_HPP
#define NONADD_SUBALGEBRA_HPP

#include <cstdint>
#include <vector>

#include "nonadd/ideals.hpp"
#include "nonadd/integer_set.hpp"

namespace nonadd {

/// Union of atoms, bit k standing for atom k.
using AtomMask = std::uint32_t;

enum class NullFlag { kNull, kNonNull, kEstimate };

struct Atom {
  /// Bit i set iff the atom lies inside generator i.
  std::uint32_t signs = 0;
  IntegerSet set;
  NullFlag flag = NullFlag::kEstimate;

  [[nodiscard]] bool null() const { return flag == NullFlag::kNull; }
};

/// Finite Boolean subalgebra of P(N) generated by a few IntegerSets, with the
/// atoms flagged null or non-null against an ideal. Atoms are listed by
/// decreasing sign pattern: the cell inside every generator first, the cell
/// outside all of them last. Empty cells are dropped.
class Subalgebra {
 public:
  static constexpr std::size_t kMaxGenerators = 10;
  /// Unions are addressed by 32-bit masks.
  static constexpr std::size_t kMaxAtoms = 20;

  /// Throws std::invalid_argument for more than kMaxGenerators generators and
  /// std::length_error when more than kMaxAtoms atoms are nonempty.
  static Subalgebra build(std::vector<IntegerSet> generators, IdealSpec ideal);

  [[nodiscard]] const std::vector<IntegerSet>& generators() const { return generators_; }
  [[nodiscard]] const std::vector<Atom>& atoms() const { return atoms_; }
  [[nodiscard]] const IdealSpec& ideal() const { return ideal_; }
  [[nodiscard]] std::size_t size() const { return atoms_.size(); }
  [[nodiscard]] AtomMask all() const { return static_cast<AtomMask>((std::uint64_t{1} << size()) - 1); }
  /// Some atom verdict is only an estimate.
  [[nodiscard]] bool approximate() const { return approximate_; }

  [[nodiscard]] AtomMask null_atoms() const;
  [[nodiscard]] AtomMask non_null_atoms() const { return all() & ~null_atoms(); }
  [[nodiscard]] std::vector<std::size_t> non_null_indices() const;

  [[nodiscard]] IntegerSet union_of(AtomMask mask) const;
  /// Mask of the atoms contained in `set`; throws std::invalid_argument when
  /// `set` is not a union of atoms.
  [[nodiscard]] AtomMask mask_of(const IntegerSet& set) const;

 private:
  std::vector<IntegerSet> generators_;
  std::vector<Atom> atoms_;
  IdealSpec ideal_;
  bool approximate_ = false;
};

}  // namespace nonadd

#endif  // NONADD_SUBALGEBRA_HPP
