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

#ifndef NONADD_TESTS_ORACLES_HPP
#define NONADD_TESTS_ORACLES_HPP

// Independent reference computations. None of these call the library code
// they check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "nonadd/capacity.hpp"
#include "nonadd/integer_set.hpp"
#include "nonadd/rational.hpp"

namespace nonadd::oracle {

/// ∫_0^∞ ν(x >= t) dt + ∫_{-∞}^0 [ν(x >= t) - 1] dt, evaluating the integrand
/// at the midpoint of each interval between consecutive breakpoints.
inline Rational riemann_choquet(const Vector& x, const std::function<Rational(Mask)>& nu) {
  std::set<Rational> points(x.begin(), x.end());
  points.insert(Rational(0));
  const std::vector<Rational> sorted(points.begin(), points.end());
  Rational total(0);
  for (std::size_t k = 0; k + 1 < sorted.size(); ++k) {
    const Rational width = sorted[k + 1] - sorted[k];
    const Rational t = (sorted[k] + sorted[k + 1]) / Rational(2);
    Mask level = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (t <= x[i]) level |= Mask{1} << i;
    }
    total += t.sign() > 0 ? width * nu(level) : width * (nu(level) - Rational(1));
  }
  return total;
}

inline Rational riemann_choquet(const Vector& x, const FiniteCapacity& nu) {
  return riemann_choquet(x, [&nu](Mask m) { return nu(m); });
}

struct Extrema {
  Rational max;
  Rational min;
};

/// max and min of |A ∩ [1,n]| / n over lo <= n <= hi.
inline Extrema prefix_ratio_extrema(const std::function<bool(Element)>& in, Element lo,
                                    Element hi) {
  Element count = 0;
  Extrema out{Rational(0), Rational(1)};
  for (Element n = 1; n <= hi; ++n) {
    if (in(n)) ++count;
    if (n < lo) continue;
    const Rational r(static_cast<std::int64_t>(count), static_cast<std::int64_t>(n));
    out.max = max(out.max, r);
    out.min = min(out.min, r);
  }
  return out;
}

/// Raw eventually periodic rule: the residue test, overridden below n0 by the
/// exception lists.
struct RawPeriodic {
  Element n0 = 1;
  Element p = 1;
  std::vector<Element> res;
  std::vector<Element> exc_in;
  std::vector<Element> exc_out;

  [[nodiscard]] bool contains(Element n) const {
    if (n == 0) return false;
    if (std::find(exc_in.begin(), exc_in.end(), n) != exc_in.end()) return true;
    if (std::find(exc_out.begin(), exc_out.end(), n) != exc_out.end()) return false;
    return std::find(res.begin(), res.end(), n % p) != res.end();
  }
};

/// Random raw rule with threshold <= 12, period <= 6 and random exceptions.
inline RawPeriodic random_raw(std::mt19937_64& rng, bool allow_empty_residues = true) {
  RawPeriodic r;
  r.n0 = 1 + rng() % 12;
  r.p = 1 + rng() % 6;
  for (Element k = 0; k < r.p; ++k) {
    if (rng() % 2) r.res.push_back(k);
  }
  if (!allow_empty_residues && r.res.empty()) r.res.push_back(rng() % r.p);
  for (Element n = 1; n < r.n0; ++n) {
    const bool periodic = std::find(r.res.begin(), r.res.end(), n % r.p) != r.res.end();
    if (rng() % 3 == 0) (periodic ? r.exc_out : r.exc_in).push_back(n);
  }
  return r;
}

inline IntegerSet build(const RawPeriodic& r) {
  return IntegerSet::eventually_periodic(r.n0, r.p, r.res, r.exc_in, r.exc_out);
}

/// Direct check of ν(A) <= ν(B) over every pair A ⊆ B and normalization.
inline bool is_normalized_capacity(const std::vector<Rational>& values, int n) {
  const Mask full = static_cast<Mask>((1U << n) - 1);
  if (!values[0].is_zero() || values[full] != Rational(1)) return false;
  for (Mask b = 0; b <= full; ++b) {
    for (Mask a = b;; a = (a - 1) & b) {
      if (values[b] < values[a]) return false;
      if (a == 0) break;
    }
  }
  return true;
}

}  // namespace nonadd::oracle

#endif  // NONADD_TESTS_ORACLES_HPP
