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

#ifndef NONADD_FUNCTIONALS_HPP
#define NONADD_FUNCTIONALS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nonadd/choquet.hpp"

namespace nonadd {

/// A built-in functional on Q^n that reads only the coordinates in K.
struct RegisteredFunctional {
  std::string name;
  std::string description;
  /// Satisfies the five harness properties and N-invariance.
  bool conforming = true;
  Functional functional;
};

/// Registry names:
///   choquet-random          Choquet integral against random_capacity(|K|, seed)
///   min, max                min / max over K
///   dirac-j                 x_j for j = the first element of K; dirac-<j> picks j
///   linear                  mean over K
///   midrange-counterexample max over K + min over K
///   two-prior-max           max(x_a, (x_b + x_c) / 2) for the first three a < b < c of K
/// K is 1-based and sorted; an empty K means {1, ..., n}. Returns nullopt for
/// an unknown name; throws std::invalid_argument when K does not fit the
/// functional.
std::optional<RegisteredFunctional> functional_by_name(const std::string& name, std::size_t n,
                                                       std::vector<std::size_t> k,
                                                       std::uint64_t seed);

std::vector<std::string> functional_names();

}  // namespace nonadd

#endif  // NONADD_FUNCTIONALS_HPP
