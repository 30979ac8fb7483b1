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

#include "nonadd/capacity.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <sstream>
#include <stdexcept>

#include "nonadd/subalgebra.hpp"

namespace nonadd {

namespace {

std::string mask_to_string(Mask m) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int i = 0; m >> i; ++i) {
    if ((m >> i) & 1U) {
      if (!first) os << ',';
      os << i + 1;
      first = false;
    }
  }
  os << '}';
  return os.str();
}

void check_ground_size(int n, int limit) {
  if (n < 1 || n > limit) {
    throw std::invalid_argument("ground size " + std::to_string(n) + " outside [1, " +
                                std::to_string(limit) + "]");
  }
}

std::size_t table_size(int n) { return std::size_t{1} << n; }

}  // namespace

FiniteCapacity::FiniteCapacity(int n, std::vector<Rational> values)
    : n_(n), values_(std::move(values)) {
  check_ground_size(n, kMaxGroundSize);
  if (values_.size() != table_size(n)) {
    throw std::invalid_argument("capacity table needs " + std::to_string(table_size(n)) +
                                " entries, got " + std::to_string(values_.size()));
  }
}

std::string Violation::describe() const {
  switch (kind) {
    case Kind::kEmptyNotZero:
      return "value(empty) = " + smaller_value.str() + ", expected 0";
    case Kind::kFullNotOne:
      return "value(full) = " + smaller_value.str() + ", expected 1";
    case Kind::kNotMonotone:
      return "not monotone: value(" + mask_to_string(smaller) + ") = " + smaller_value.str() +
             " > value(" + mask_to_string(larger) + ") = " + larger_value.str();
  }
  return "unknown violation";
}

ValidationReport validate(const FiniteCapacity& capacity) {
  ValidationReport report;
  if (!capacity(0).is_zero()) {
    report.violations.push_back({Violation::Kind::kEmptyNotZero, 0, 0, capacity(0), {}});
  }
  const Mask full = capacity.full();
  if (capacity(full) != Rational(1)) {
    report.violations.push_back(
        {Violation::Kind::kFullNotOne, full, full, capacity(full), {}});
  }
  for (Mask a = 0; a <= full; ++a) {
    for (int i = 0; i < capacity.ground_size(); ++i) {
      const Mask b = a | (Mask{1} << i);
      if (b == a) continue;
      if (capacity(b) < capacity(a)) {
        report.violations.push_back(
            {Violation::Kind::kNotMonotone, a, b, capacity(a), capacity(b)});
      }
    }
    if (a == full) break;
  }
  return report;
}

std::vector<Mask> inclusion_order(int n) {
  check_ground_size(n, FiniteCapacity::kMaxGroundSize);
  std::vector<Mask> order(table_size(n));
  for (Mask m = 0; m < order.size(); ++m) order[m] = m;
  std::stable_sort(order.begin(), order.end(),
                   [](Mask a, Mask b) { return std::popcount(a) < std::popcount(b); });
  return order;
}

FiniteCapacity random_capacity(int n, std::uint64_t seed) {
  check_ground_size(n, 12);
  constexpr std::uint64_t kGrid = 1000;
  std::mt19937_64 rng(seed);
  std::vector<Rational> values(table_size(n), Rational(0));
  for (Mask a : inclusion_order(n)) {
    if (a == 0) continue;
    Rational v(static_cast<std::int64_t>(rng() % (kGrid + 1)), kGrid);
    for (int i = 0; i < n; ++i) {
      const Mask below = a & ~(Mask{1} << i);
      if (below != a && v < values[below]) v = values[below];
    }
    values[a] = std::move(v);
  }
  const Rational top = values.back();
  if (top.is_zero()) return max_capacity(n);
  for (auto& v : values) v /= top;
  return FiniteCapacity(n, std::move(values));
}

FiniteCapacity additive_capacity(const Vector& weights) {
  const int n = static_cast<int>(weights.size());
  check_ground_size(n, FiniteCapacity::kMaxGroundSize);
  Rational total(0);
  for (const auto& w : weights) {
    if (w.sign() < 0) throw std::invalid_argument("negative point mass");
    total += w;
  }
  if (total != Rational(1)) throw std::invalid_argument("point masses must sum to 1");
  std::vector<Rational> values(table_size(n), Rational(0));
  for (Mask a = 1; a < values.size(); ++a) {
    const int lowest = std::countr_zero(a);
    values[a] = values[a & (a - 1)] + weights[lowest];
  }
  return FiniteCapacity(n, std::move(values));
}

FiniteCapacity random_additive_capacity(int n, std::uint64_t seed) {
  check_ground_size(n, FiniteCapacity::kMaxGroundSize);
  std::mt19937_64 rng(seed);
  std::vector<std::int64_t> raw(n);
  std::int64_t total = 0;
  for (auto& r : raw) {
    r = static_cast<std::int64_t>(rng() % 100);
    total += r;
  }
  if (total == 0) {
    raw.assign(n, 1);
    total = n;
  }
  Vector weights;
  for (auto r : raw) weights.emplace_back(r, total);
  return additive_capacity(weights);
}

FiniteCapacity uniform_capacity(int n) {
  return additive_capacity(Vector(static_cast<std::size_t>(n), Rational(1, n)));
}

FiniteCapacity min_capacity(int n) {
  check_ground_size(n, FiniteCapacity::kMaxGroundSize);
  std::vector<Rational> values(table_size(n), Rational(0));
  values.back() = Rational(1);
  return FiniteCapacity(n, std::move(values));
}

FiniteCapacity max_capacity(int n) {
  check_ground_size(n, FiniteCapacity::kMaxGroundSize);
  std::vector<Rational> values(table_size(n), Rational(1));
  values.front() = Rational(0);
  return FiniteCapacity(n, std::move(values));
}

FiniteCapacity dirac_capacity(int n, int j) {
  check_ground_size(n, FiniteCapacity::kMaxGroundSize);
  if (j < 1 || j > n) throw std::invalid_argument("dirac point outside the ground set");
  std::vector<Rational> values(table_size(n), Rational(0));
  for (Mask a = 0; a < values.size(); ++a) {
    if (a & singleton(j)) values[a] = Rational(1);
  }
  return FiniteCapacity(n, std::move(values));
}

FiniteCapacity conjugate(const FiniteCapacity& capacity) {
  const Mask full = capacity.full();
  std::vector<Rational> values(capacity.values().size());
  for (Mask a = 0; a < values.size(); ++a) values[a] = Rational(1) - capacity(full & ~a);
  return FiniteCapacity(capacity.ground_size(), std::move(values));
}

// ---------------------------------------------------------------------------

SetCapacity::SetCapacity(std::string name, Evaluator evaluator)
    : name_(std::move(name)), evaluator_(std::move(evaluator)) {
  if (!evaluator_) throw std::invalid_argument("set capacity needs an evaluator");
}

SetCapacity upper_density_capacity() {
  return SetCapacity("upper-density", [](const IntegerSet& s) {
    const DensityValue d = upper_density(s);
    return SetValue{d.value, d.exact};
  });
}

SetCapacity lower_density_capacity() {
  return SetCapacity("lower-density", [](const IntegerSet& s) {
    const DensityValue d = lower_density(s);
    return SetValue{d.value, d.exact};
  });
}

SetCapacity exh_norm_capacity(const IdealSpec& exh_ideal) {
  if (exh_ideal.kind() != IdealSpec::Kind::kExh) {
    throw std::invalid_argument("exh-norm capacity needs an Exh ideal");
  }
  const SubmeasurePtr phi = exh_ideal.submeasure();
  const Rational normalization = exh_ideal.normalization();
  return SetCapacity("exh-norm(" + phi->name() + ")", [phi, normalization](const IntegerSet& s) {
    if (const auto mass = phi->mass_at_infinity(s)) {
      return SetValue{*mass / normalization, true};
    }
    const ExhNormResult r = exh_norm(*phi, s, powers_of_two_schedule());
    return SetValue{r.estimate() / normalization, false};
  });
}

SetCapacity ideal_indicator(const IdealSpec& ideal) {
  return SetCapacity("ideal-indicator(" + ideal.name() + ")", [ideal](const IntegerSet& s) {
    const MembershipVerdict v = member(ideal, s);
    return SetValue{v.in() ? Rational(0) : Rational(1), v.exact()};
  });
}

SetCapacity mixture(std::vector<std::pair<Rational, SetCapacity>> components) {
  if (components.empty()) throw std::invalid_argument("mixture needs components");
  Rational total(0);
  std::string name = "mixture(";
  for (std::size_t i = 0; i < components.size(); ++i) {
    const auto& [w, c] = components[i];
    if (w.sign() < 0) throw std::invalid_argument("mixture weights must be nonnegative");
    total += w;
    name += (i ? "," : "") + w.str() + "*" + c.name();
  }
  if (total != Rational(1)) throw std::invalid_argument("mixture weights must sum to 1");
  name += ")";
  return SetCapacity(std::move(name), [components = std::move(components)](const IntegerSet& s) {
    SetValue out{Rational(0), true};
    for (const auto& [w, c] : components) {
      const SetValue v = c(s);
      out.value += w * v.value;
      out.exact = out.exact && v.exact;
    }
    return out;
  });
}

std::vector<std::string> check_set_capacity(const SetCapacity& capacity,
                                            const std::vector<IntegerSet>& samples) {
  std::vector<std::string> violations;
  if (const SetValue v = capacity(IntegerSet{}); !v.value.is_zero()) {
    violations.push_back(capacity.name() + "(empty) = " + v.value.str());
  }
  if (const SetValue v = capacity(IntegerSet::naturals()); v.value != Rational(1)) {
    violations.push_back(capacity.name() + "(N) = " + v.value.str());
  }
  for (const auto& a : samples) {
    const Rational va = capacity(a).value;
    for (const auto& b : samples) {
      const IntegerSet u = a.unite(b);
      if (const Rational vu = capacity(u).value; vu < va) {
        violations.push_back("not monotone: " + capacity.name() + "(" + a.describe() +
                             ") = " + va.str() + " > value on superset " + u.describe() +
                             " = " + vu.str());
      }
    }
  }
  return violations;
}

FiniteCapacity ideal_indicator_capacity(const Subalgebra& algebra) {
  if (algebra.approximate()) {
    throw std::domain_error("subalgebra has atoms with estimated ideal membership");
  }
  const int n = static_cast<int>(algebra.size());
  const Mask non_null = algebra.non_null_atoms();
  std::vector<Rational> values(table_size(n), Rational(0));
  for (Mask a = 0; a < values.size(); ++a) {
    if (a & non_null) values[a] = Rational(1);
  }
  return FiniteCapacity(n, std::move(values));
}

}  // namespace nonadd
