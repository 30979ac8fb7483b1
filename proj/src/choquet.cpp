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

#include "nonadd/choquet.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "nonadd/vector_ops.hpp"

namespace nonadd {

Rational choquet_integral(const Vector& x, const FiniteCapacity& capacity) {
  const auto n = static_cast<std::size_t>(capacity.ground_size());
  if (x.size() != n) {
    throw std::invalid_argument("vector of dimension " + std::to_string(x.size()) +
                                " against a capacity on " + std::to_string(n) + " points");
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&x](std::size_t a, std::size_t b) { return x[b] < x[a]; });

  static const mpq_class kZero(0);
  mpq_class total(0);
  mpq_class step;
  Mask upper = 0;
  for (std::size_t k = 0; k < n; ++k) {
    upper |= Mask{1} << order[k];
    const mpq_class& next = k + 1 < n ? x[order[k + 1]].raw() : kZero;
    mpq_sub(step.get_mpq_t(), x[order[k]].raw().get_mpq_t(), next.get_mpq_t());
    if (sgn(step) == 0) continue;
    mpq_mul(step.get_mpq_t(), step.get_mpq_t(), capacity(upper).raw().get_mpq_t());
    mpq_add(total.get_mpq_t(), total.get_mpq_t(), step.get_mpq_t());
  }
  return Rational(std::move(total));
}

bool comonotone(const Vector& x, const Vector& y) {
  if (x.size() != y.size()) throw std::invalid_argument("dimension mismatch");
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      if (((x[i] - x[j]) * (y[i] - y[j])).sign() < 0) return false;
    }
  }
  return true;
}

StepSequence::StepSequence(const Subalgebra& algebra, Vector values)
    : algebra_(&algebra), values_(std::move(values)) {
  if (values_.size() != algebra.size()) {
    throw std::invalid_argument("step sequence needs one value per atom (" +
                                std::to_string(algebra.size()) + "), got " +
                                std::to_string(values_.size()));
  }
}

StepSequence StepSequence::indicator(const Subalgebra& algebra, AtomMask mask) {
  Vector values(algebra.size(), Rational(0));
  for (std::size_t k = 0; k < values.size(); ++k) {
    if ((mask >> k) & 1U) values[k] = Rational(1);
  }
  return StepSequence(algebra, std::move(values));
}

SetValue choquet_step(const StepSequence& x, const SetCapacity& capacity) {
  // Distinct values, largest first.
  std::map<Rational, AtomMask, std::greater<>> levels;
  for (std::size_t k = 0; k < x.values().size(); ++k) {
    levels[x.values()[k]] |= AtomMask{1} << k;
  }
  SetValue out{Rational(0), true};
  AtomMask upper = 0;
  for (auto it = levels.begin(); it != levels.end(); ++it) {
    upper |= it->second;
    const auto next = std::next(it);
    const Rational step = it->first - (next == levels.end() ? Rational(0) : next->first);
    if (step.is_zero()) continue;
    const SetValue v = capacity(x.algebra().union_of(upper));
    out.value += step * v.value;
    out.exact = out.exact && v.exact;
  }
  return out;
}

// ---------------------------------------------------------------------------

Rational random_grid_rational(std::mt19937_64& rng) {
  static constexpr std::int64_t kDenominators[] = {1, 2, 4};
  const std::int64_t d = kDenominators[rng() % 3];
  const std::int64_t span = 16 * d + 1;
  const auto k = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(span)) - 8 * d;
  return Rational(k, d);
}

Vector random_grid_vector(std::size_t n, std::mt19937_64& rng) {
  Vector x;
  x.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0 && rng() % 4 == 0) {
      x.push_back(x[rng() % i]);
    } else {
      x.push_back(random_grid_rational(rng));
    }
  }
  return x;
}

bool PropertyReport::all_pass() const {
  return std::all_of(results.begin(), results.end(),
                     [](const PropertyResult& r) { return r.pass; });
}

const PropertyResult& PropertyReport::at(const std::string& property) const {
  for (const auto& r : results) {
    if (r.property == property) return r;
  }
  throw std::out_of_range("no property '" + property + "' in report");
}

namespace {

constexpr std::size_t kPropertyCount = 5;
constexpr const char* kPropertyNames[kPropertyCount] = {kNormalized, kMonotone, kUnitAdditive,
                                                        kUnitModular, kLipschitz};

/// Witness for each property violated in one trial; empty strings pass.
using TrialOutcome = std::array<std::string, kPropertyCount>;

TrialOutcome run_trial(const Functional& v, std::size_t n, std::uint64_t seed, int trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial)};
  std::mt19937_64 rng(seq);
  TrialOutcome out;

  const Vector x = random_grid_vector(n, rng);
  const Rational vx = v(x);
  const auto on_constant = [&](const Rational& lambda) { return v(constant_vector(n, lambda)); };

  // (i)
  const Rational lambda = random_grid_rational(rng);
  if (const Rational got = on_constant(lambda); got != lambda) {
    out[0] = "V(" + lambda.str() + "e) = " + got.str();
  }

  // (ii)
  Vector y = x;
  for (auto& yi : y) {
    if (rng() % 2 == 0) yi += abs(random_grid_rational(rng));
  }
  if (const Rational vy = v(y); vy < vx) {
    out[1] = "x = " + to_string(x) + " <= y = " + to_string(y) + " but V(x) = " + vx.str() +
             " > V(y) = " + vy.str();
  }

  // (iii)
  const Rational shift = abs(random_grid_rational(rng));
  const Rational lhs3 = v(x + constant_vector(n, shift));
  const Rational rhs3 = vx + on_constant(shift);
  if (lhs3 != rhs3) {
    out[2] = "x = " + to_string(x) + ", lambda = " + shift.str() + ": V(x + lambda e) = " +
             lhs3.str() + " != V(x) + V(lambda e) = " + rhs3.str();
  }

  // (iv): λ on a level of x half of the time.
  const Rational level = (n > 0 && rng() % 2 == 0) ? x[rng() % n] : random_grid_rational(rng);
  const Vector level_e = constant_vector(n, level);
  const Rational lhs4 = v(join(x, level_e)) + v(meet(x, level_e));
  const Rational rhs4 = vx + on_constant(level);
  if (lhs4 != rhs4) {
    out[3] = "x = " + to_string(x) + ", lambda = " + level.str() +
             ": V(x v lambda e) + V(x ^ lambda e) = " + lhs4.str() +
             " != V(x) + V(lambda e) = " + rhs4.str();
  }

  // Lipschitz
  Vector z = rng() % 2 == 0 ? random_grid_vector(n, rng) : x;
  if (n > 0) z[rng() % n] += random_grid_rational(rng);
  const Rational vz = v(z);
  if (const Rational dist = sup_norm(x - z); dist < abs(vx - vz)) {
    out[4] = "x = " + to_string(x) + ", y = " + to_string(z) + ": |V(x) - V(y)| = " +
             abs(vx - vz).str() + " > ||x - y|| = " + dist.str();
  }
  return out;
}

}  // namespace

PropertyReport functional_properties(const Functional& functional, int n,
                                     const HarnessOptions& options) {
  if (n < 1) throw std::invalid_argument("dimension must be positive");
  const auto dim = static_cast<std::size_t>(n);
  const int trials = std::max(options.trials, 0);
  std::vector<TrialOutcome> outcomes(static_cast<std::size_t>(trials));

  const unsigned threads = std::max(1U, std::min<unsigned>(options.threads, trials));
  if (threads <= 1) {
    for (int t = 0; t < trials; ++t) outcomes[t] = run_trial(functional, dim, options.seed, t);
  } else {
    std::vector<std::thread> workers;
    for (unsigned w = 0; w < threads; ++w) {
      workers.emplace_back([&, w] {
        for (int t = static_cast<int>(w); t < trials; t += static_cast<int>(threads)) {
          outcomes[t] = run_trial(functional, dim, options.seed, t);
        }
      });
    }
    for (auto& worker : workers) worker.join();
  }

  PropertyReport report;
  for (std::size_t p = 0; p < kPropertyCount; ++p) {
    PropertyResult result{kPropertyNames[p], true, trials, 0, {}};
    for (int t = 0; t < trials; ++t) {
      if (outcomes[t][p].empty()) continue;
      if (result.pass) result.witness = "trial " + std::to_string(t) + ": " + outcomes[t][p];
      result.pass = false;
      ++result.failures;
    }
    report.results.push_back(std::move(result));
  }
  return report;
}

}  // namespace nonadd
