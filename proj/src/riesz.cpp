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

#include "nonadd/riesz.hpp"

#include <algorithm>
#include <stdexcept>

#include "nonadd/vector_ops.hpp"

namespace nonadd {

namespace {

std::mt19937_64 trial_rng(std::uint64_t seed, int trial, std::uint32_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), stream};
  return std::mt19937_64(seq);
}

/// Random grid vector with each coordinate of K forced to zero.
Vector random_in_ideal(const CoordinateIdeal& ideal, std::mt19937_64& rng) {
  Vector x = random_grid_vector(ideal.dimension(), rng);
  for (std::size_t i : ideal.zero_set()) x[i - 1] = Rational(0);
  return x;
}

/// Random grid vector whose coordinates vanish independently with
/// probability 1/2, so both z ∈ N and z ∉ N occur.
Vector random_sparse(std::size_t n, std::mt19937_64& rng) {
  Vector x = random_grid_vector(n, rng);
  for (auto& v : x) {
    if (rng() % 2 == 0) v = Rational(0);
  }
  return x;
}

}  // namespace

Rational unit_norm(const Vector& x) { return sup_norm(x); }

CoordinateIdeal::CoordinateIdeal(std::size_t n, std::vector<std::size_t> zero_set)
    : n_(n), zero_set_(std::move(zero_set)) {
  std::sort(zero_set_.begin(), zero_set_.end());
  zero_set_.erase(std::unique(zero_set_.begin(), zero_set_.end()), zero_set_.end());
  if (zero_set_.empty()) {
    throw std::invalid_argument("K must be nonempty: N would be the whole space");
  }
  if (zero_set_.front() < 1 || zero_set_.back() > n_) {
    throw std::invalid_argument("K must be a subset of {1, ..., " + std::to_string(n_) + "}");
  }
}

bool CoordinateIdeal::in_zero_set(std::size_t i) const {
  return std::binary_search(zero_set_.begin(), zero_set_.end(), i);
}

bool CoordinateIdeal::contains(const Vector& x) const {
  if (x.size() != n_) throw std::invalid_argument("dimension mismatch");
  return std::all_of(zero_set_.begin(), zero_set_.end(),
                     [&x](std::size_t i) { return x[i - 1].is_zero(); });
}

PositiveUnitFunctional::PositiveUnitFunctional(Vector weights) : weights_(std::move(weights)) {
  Rational total(0);
  for (const auto& w : weights_) {
    if (w.sign() < 0) throw std::invalid_argument("functional weights must be nonnegative");
    total += w;
  }
  if (total != Rational(1)) throw std::invalid_argument("functional weights must sum to 1");
}

PositiveUnitFunctional PositiveUnitFunctional::coordinate(std::size_t n, std::size_t i) {
  if (i < 1 || i > n) throw std::invalid_argument("coordinate outside {1, ..., n}");
  Vector w(n, Rational(0));
  w[i - 1] = Rational(1);
  return PositiveUnitFunctional(std::move(w));
}

Rational PositiveUnitFunctional::operator()(const Vector& x) const {
  if (x.size() != weights_.size()) throw std::invalid_argument("dimension mismatch");
  Rational total(0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!weights_[i].is_zero()) total += weights_[i] * x[i];
  }
  return total;
}

std::vector<std::size_t> PositiveUnitFunctional::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (weights_[i].sign() > 0) out.push_back(i + 1);
  }
  return out;
}

bool DeltaN::contains(const PositiveUnitFunctional& xi) const {
  if (xi.dimension() != ideal.dimension()) return false;
  const auto support = xi.support();
  return std::all_of(support.begin(), support.end(),
                     [this](std::size_t i) { return ideal.in_zero_set(i); });
}

std::optional<Vector> DeltaN::convex_coefficients(const PositiveUnitFunctional& xi) const {
  if (!contains(xi)) return std::nullopt;
  Vector c;
  for (std::size_t i : ideal.zero_set()) c.push_back(xi.weights()[i - 1]);
  return c;
}

PositiveUnitFunctional DeltaN::combine(const Vector& coefficients) const {
  if (coefficients.size() != extreme_points.size()) {
    throw std::invalid_argument("one coefficient per extreme point required");
  }
  Vector w(ideal.dimension(), Rational(0));
  for (std::size_t k = 0; k < coefficients.size(); ++k) {
    if (coefficients[k].sign() < 0) throw std::invalid_argument("negative coefficient");
    w = w + coefficients[k] * extreme_points[k].weights();
  }
  return PositiveUnitFunctional(std::move(w));
}

PositiveUnitFunctional DeltaN::sample(std::mt19937_64& rng) const {
  std::vector<std::int64_t> raw(extreme_points.size());
  std::int64_t total = 0;
  for (auto& r : raw) {
    r = static_cast<std::int64_t>(rng() % 5);
    total += r;
  }
  if (total == 0) {
    raw[rng() % raw.size()] = 1;
    total = 1;
  }
  Vector c;
  for (auto r : raw) c.emplace_back(r, total);
  return combine(c);
}

DeltaN delta_n(const CoordinateIdeal& ideal) {
  DeltaN d{ideal, {}};
  for (std::size_t i : ideal.zero_set()) {
    d.extreme_points.push_back(PositiveUnitFunctional::coordinate(ideal.dimension(), i));
  }
  return d;
}

CoordinateIdeal n_xi(const PositiveUnitFunctional& xi) {
  return CoordinateIdeal(xi.dimension(), xi.support());
}

CheckReport check_n_xi(const PositiveUnitFunctional& xi, int samples, std::uint64_t seed) {
  const CoordinateIdeal ideal = n_xi(xi);
  const std::size_t n = xi.dimension();
  CheckReport report;
  for (int t = 0; t < samples; ++t) {
    auto rng = trial_rng(seed, t, 0x6e78);
    const Vector x = random_in_ideal(ideal, rng);
    const Vector y = random_in_ideal(ideal, rng);
    const Rational alpha = random_grid_rational(rng);
    const Rational beta = random_grid_rational(rng);
    if (!ideal.contains(alpha * x + beta * y)) {
      report.failures.push_back("not a subspace: " + alpha.str() + "*" + to_string(x) + " + " +
                                beta.str() + "*" + to_string(y));
    }

    // |w| <= |y| with y ∈ N must give w ∈ N.
    Vector w = y;
    for (auto& wi : w) {
      wi *= Rational(static_cast<std::int64_t>(rng() % 9) - 4, 4);
    }
    if (!leq(abs(w), abs(y)) || !ideal.contains(w)) {
      report.failures.push_back("not solid: " + to_string(w) + " under " + to_string(y));
    }

    // Closed: N_ξ is exactly the zero set of x ↦ ξ(|x|), which is
    // continuous for the unit norm.
    const Vector z = random_sparse(n, rng);
    if (ideal.contains(z) != xi(abs(z)).is_zero()) {
      report.failures.push_back("membership of " + to_string(z) +
                                " disagrees with xi(|z|) = " + xi(abs(z)).str());
    }
    ++report.checked;
  }
  return report;
}

IntersectionReport ideal_intersection_identity(
    const CoordinateIdeal& ideal, const std::vector<Vector>& samples,
    const std::vector<PositiveUnitFunctional>& functionals) {
  const DeltaN delta = delta_n(ideal);
  IntersectionReport report;
  for (const auto& xi : functionals) {
    if (!delta.contains(xi)) {
      report.failures.push_back("sampled functional " + to_string(xi.weights()) +
                                " does not annihilate N");
    }
  }
  for (const auto& z : samples) {
    const Vector abs_z = abs(z);
    if (ideal.contains(z)) {
      for (const auto& xi : functionals) {
        if (!xi(abs_z).is_zero()) {
          report.failures.push_back(to_string(z) + " in N but xi(|z|) = " + xi(abs_z).str());
        }
      }
      ++report.contained;
      continue;
    }
    // z ∉ N: some i ∈ K has z_i != 0, and δ_i ∈ Δ_N separates.
    const auto& k = ideal.zero_set();
    const auto it = std::find_if(k.begin(), k.end(), [&z](std::size_t i) {
      return !z[i - 1].is_zero();
    });
    if (it == k.end()) {
      report.failures.push_back("no separating coordinate for " + to_string(z));
      continue;
    }
    const auto separator = PositiveUnitFunctional::coordinate(ideal.dimension(), *it);
    if (!delta.contains(separator) || separator(abs_z).sign() <= 0) {
      report.failures.push_back("delta_" + std::to_string(*it) + " fails to separate " +
                                to_string(z));
      continue;
    }
    report.separations.push_back({z, *it});
    ++report.separated;
  }
  return report;
}

Vector quotient_project(const CoordinateIdeal& ideal, const Vector& x) {
  if (x.size() != ideal.dimension()) throw std::invalid_argument("dimension mismatch");
  Vector out;
  out.reserve(ideal.zero_set().size());
  for (std::size_t i : ideal.zero_set()) out.push_back(x[i - 1]);
  return out;
}

bool RoundtripReport::ok() const {
  return capacity.has_value() && validation.ok() && properties.all_pass() && invariance.pass &&
         residual_max.is_zero();
}

RoundtripReport schmeidler_roundtrip(const Functional& functional, const CoordinateIdeal& ideal,
                                     const RoundtripOptions& options) {
  const std::size_t n = ideal.dimension();
  const auto& k = ideal.zero_set();
  const int ground = static_cast<int>(k.size());
  RoundtripReport report;
  report.trials = options.trials;

  if (options.property_trials > 0) {
    report.properties = functional_properties(
        functional, static_cast<int>(n),
        HarnessOptions{options.property_trials, options.seed, options.threads});
  }

  // (v): adding an element of N never changes V.
  report.invariance = PropertyResult{"n-invariant", true, options.trials, 0, {}};
  auto invariance_rng = trial_rng(options.seed, 0, 0x696e76);
  for (int t = 0; t < options.trials; ++t) {
    auto& rng = invariance_rng;
    const Vector x = random_grid_vector(n, rng);
    const Vector z = random_in_ideal(ideal, rng);
    const Rational vx = functional(x);
    if (const Rational vxz = functional(x + z); vxz != vx) {
      if (report.invariance.pass) {
        report.invariance.witness = "x = " + to_string(x) + ", z = " + to_string(z) +
                                    " in N: V(x) = " + vx.str() + ", V(x + z) = " + vxz.str();
      }
      report.invariance.pass = false;
      ++report.invariance.failures;
    }
  }

  std::vector<Rational> values(std::size_t{1} << ground);
  for (Mask a = 0; a < values.size(); ++a) {
    Vector indicator(n, Rational(0));
    for (int b = 0; b < ground; ++b) {
      if ((a >> b) & 1U) indicator[k[b] - 1] = Rational(1);
    }
    values[a] = functional(indicator);
  }
  if (!values.front().is_zero() || values.back() != Rational(1)) {
    report.aborted = "V(1_empty) = " + values.front().str() + ", V(1_K) = " +
                     values.back().str() + ": not normalized";
    return report;
  }
  FiniteCapacity capacity(ground, std::move(values));
  report.validation = validate(capacity);

  report.residual_max = Rational(0);
  auto residual_rng = trial_rng(options.seed, 0, 0x726f75);
  for (int t = 0; t < options.trials; ++t) {
    auto& rng = residual_rng;
    const Vector x = random_grid_vector(n, rng);
    const Rational lhs = functional(x);
    const Rational rhs = choquet_integral(quotient_project(ideal, x), capacity);
    if (const Rational r = abs(lhs - rhs); report.residual_max < r) {
      report.residual_max = r;
      report.residual_witness = "x = " + to_string(x) + ": V(x) = " + lhs.str() +
                                ", Choquet form = " + rhs.str();
    }
  }
  report.capacity = std::move(capacity);
  return report;
}

}  // namespace nonadd
