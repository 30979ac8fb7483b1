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

#include "nonadd/subalgebra.hpp"

#include <stdexcept>

namespace nonadd {

Subalgebra Subalgebra::build(std::vector<IntegerSet> generators, IdealSpec ideal) {
  if (generators.size() > kMaxGenerators) {
    throw std::invalid_argument("at most " + std::to_string(kMaxGenerators) +
                                " generators are supported");
  }
  Subalgebra s;
  s.generators_ = std::move(generators);
  s.ideal_ = std::move(ideal);

  const std::uint32_t patterns = std::uint32_t{1} << s.generators_.size();
  for (std::uint32_t signs = patterns; signs-- > 0;) {
    IntegerSet cell = IntegerSet::naturals();
    for (std::size_t i = 0; i < s.generators_.size() && !cell.is_empty(); ++i) {
      cell = (signs >> i) & 1U ? cell.intersect(s.generators_[i])
                               : cell.minus(s.generators_[i]);
    }
    if (cell.is_empty()) continue;
    if (s.atoms_.size() == kMaxAtoms) {
      throw std::length_error("more than " + std::to_string(kMaxAtoms) + " nonempty atoms");
    }
    const MembershipVerdict v = member(s.ideal_, cell);
    NullFlag flag = NullFlag::kEstimate;
    if (v.in()) flag = NullFlag::kNull;
    if (v.out()) flag = NullFlag::kNonNull;
    s.approximate_ = s.approximate_ || flag == NullFlag::kEstimate;
    s.atoms_.push_back(Atom{signs, std::move(cell), flag});
  }
  return s;
}

AtomMask Subalgebra::null_atoms() const {
  AtomMask mask = 0;
  for (std::size_t k = 0; k < atoms_.size(); ++k) {
    if (atoms_[k].null()) mask |= AtomMask{1} << k;
  }
  return mask;
}

std::vector<std::size_t> Subalgebra::non_null_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < atoms_.size(); ++k) {
    if (!atoms_[k].null()) out.push_back(k);
  }
  return out;
}

IntegerSet Subalgebra::union_of(AtomMask mask) const {
  IntegerSet out;
  for (std::size_t k = 0; k < atoms_.size(); ++k) {
    if ((mask >> k) & 1U) out = out.unite(atoms_[k].set);
  }
  return out;
}

AtomMask Subalgebra::mask_of(const IntegerSet& set) const {
  AtomMask mask = 0;
  for (std::size_t k = 0; k < atoms_.size(); ++k) {
    const IntegerSet inside = atoms_[k].set.intersect(set);
    if (inside.is_empty()) continue;
    if (inside != atoms_[k].set) {
      throw std::invalid_argument("set is not a union of atoms: it splits atom " +
                                  std::to_string(k));
    }
    mask |= AtomMask{1} << k;
  }
  return mask;
}

}  // namespace nonadd
