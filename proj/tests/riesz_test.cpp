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

#include <random>

#include <gtest/gtest.h>

#include "nonadd/functionals.hpp"
#include "nonadd/vector_ops.hpp"

namespace nonadd {
namespace {

Vector v(std::initializer_list<std::int64_t> xs) {
  Vector out;
  for (auto x : xs) out.emplace_back(x);
  return out;
}

/// Every nonempty K ⊆ {1, ..., n}.
std::vector<std::vector<std::size_t>> all_k(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  for (Mask m = 1; m < (Mask{1} << n); ++m) {
    std::vector<std::size_t> k;
    for (std::size_t i = 0; i < n; ++i) {
      if ((m >> i) & 1U) k.push_back(i + 1);
    }
    out.push_back(k);
  }
  return out;
}

TEST(UnitNormTest, Examples) {
  EXPECT_EQ(unit_norm(v({0, 0, 0})), Rational(0));
  EXPECT_EQ(unit_norm(v({-3, 2})), Rational(3));
  EXPECT_EQ(unit_norm(Rational(-5, 2) * v({1, 4})), Rational(10));
}

TEST(UnitNormTest, RieszNormAttained) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 300; ++t) {
    const auto n = static_cast<std::size_t>(1 + rng() % 6);
    const Vector x = random_grid_vector(n, rng);
    // |x| <= ||x|| e, and no smaller multiple of e works.
    EXPECT_TRUE(leq(abs(x), constant_vector(n, unit_norm(x))));
    if (!unit_norm(x).is_zero()) {
      EXPECT_FALSE(leq(abs(x), constant_vector(n, unit_norm(x) - Rational(1, 1000))));
    }
    Vector y = x;
    for (auto& yi : y) yi = abs(yi) + abs(random_grid_rational(rng));
    EXPECT_LE(unit_norm(x), unit_norm(y));
  }
}

TEST(CoordinateIdealTest, Construction) {
  EXPECT_THROW(CoordinateIdeal(3, {}), std::invalid_argument);
  EXPECT_THROW(CoordinateIdeal(3, {4}), std::invalid_argument);
  EXPECT_THROW(CoordinateIdeal(3, {0}), std::invalid_argument);
  const CoordinateIdeal n(3, {3, 1, 1});
  EXPECT_EQ(n.zero_set(), (std::vector<std::size_t>{1, 3}));
  EXPECT_TRUE(n.contains(v({0, 5, 0})));
  EXPECT_FALSE(n.contains(v({0, 5, 1})));
  // e ∉ N.
  EXPECT_FALSE(n.contains(constant_vector(3, Rational(1))));
}

TEST(PositiveUnitFunctionalTest, Validation) {
  EXPECT_THROW(PositiveUnitFunctional({Rational(1, 2), Rational(1, 3)}), std::invalid_argument);
  EXPECT_THROW(PositiveUnitFunctional({Rational(3, 2), Rational(-1, 2)}), std::invalid_argument);
  const PositiveUnitFunctional xi({Rational(1, 2), Rational(0), Rational(1, 2)});
  EXPECT_EQ(xi(v({2, 100, 4})), Rational(3));
  EXPECT_EQ(xi.support(), (std::vector<std::size_t>{1, 3}));
}

TEST(DeltaNTest, Examples) {
  const DeltaN full = delta_n(CoordinateIdeal(3, {1, 2, 3}));
  ASSERT_EQ(full.extreme_points.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(full.extreme_points[i], PositiveUnitFunctional::coordinate(3, i + 1));
  }
  const DeltaN point = delta_n(CoordinateIdeal(3, {2}));
  ASSERT_EQ(point.extreme_points.size(), 1u);
  EXPECT_EQ(point.extreme_points[0], PositiveUnitFunctional::coordinate(3, 2));

  // n = 4, K = {1, 3}: sampled ξ are convex combinations of δ1, δ3.
  const DeltaN d = delta_n(CoordinateIdeal(4, {1, 3}));
  std::mt19937_64 rng(2);
  for (int t = 0; t < 50; ++t) {
    const PositiveUnitFunctional xi = d.sample(rng);
    ASSERT_TRUE(d.contains(xi));
    const auto c = d.convex_coefficients(xi);
    ASSERT_TRUE(c.has_value());
    ASSERT_EQ(c->size(), 2u);
    EXPECT_GE((*c)[0], Rational(0));
    EXPECT_GE((*c)[1], Rational(0));
    EXPECT_EQ((*c)[0] + (*c)[1], Rational(1));
    EXPECT_EQ(d.combine(*c), xi);
  }
  EXPECT_FALSE(d.convex_coefficients(PositiveUnitFunctional::coordinate(4, 2)).has_value());
}

TEST(DeltaNTest, CombinationsAnnihilateN) {
  std::mt19937_64 rng(3);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& k : all_k(n)) {
      const CoordinateIdeal ideal(n, k);
      const DeltaN d = delta_n(ideal);
      for (int t = 0; t < 20; ++t) {
        const PositiveUnitFunctional xi = d.sample(rng);
        Vector z = random_grid_vector(n, rng);
        for (std::size_t i : k) z[i - 1] = Rational(0);
        EXPECT_EQ(xi(abs(z)), Rational(0));
        EXPECT_EQ(xi(constant_vector(n, Rational(1))), Rational(1));
      }
    }
  }
}

TEST(NXiTest, Examples) {
  EXPECT_EQ(n_xi(PositiveUnitFunctional::coordinate(2, 1)).zero_set(),
            (std::vector<std::size_t>{1}));
  const PositiveUnitFunctional uniform({Rational(1, 3), Rational(1, 3), Rational(1, 3)});
  const CoordinateIdeal all = n_xi(uniform);
  EXPECT_EQ(all.zero_set(), (std::vector<std::size_t>{1, 2, 3}));
  EXPECT_TRUE(all.contains(v({0, 0, 0})));
  EXPECT_FALSE(all.contains(v({0, 0, 1})));
  EXPECT_EQ(n_xi(PositiveUnitFunctional({Rational(1, 2), Rational(1, 2), Rational(0)})).zero_set(),
            (std::vector<std::size_t>{1, 2}));
}

// Subspace, solid, closed for every support on n <= 4.
TEST(NXiTest, RemarkPropertiesExhaustive) {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& k : all_k(n)) {
      Vector w(n, Rational(0));
      for (std::size_t i : k) w[i - 1] = Rational(1, static_cast<std::int64_t>(k.size()));
      const PositiveUnitFunctional xi(w);
      EXPECT_EQ(n_xi(xi).zero_set(), k);
      const CheckReport r = check_n_xi(xi, 100, n);
      EXPECT_TRUE(r.ok()) << (r.failures.empty() ? "" : r.failures.front());
      EXPECT_EQ(r.checked, 100);
    }
  }
}

TEST(IntersectionIdentityTest, Examples) {
  const IntersectionReport a =
      ideal_intersection_identity(CoordinateIdeal(2, {1}), {v({1, 0})}, {});
  ASSERT_EQ(a.separations.size(), 1u);
  EXPECT_EQ(a.separations[0].coordinate, 1u);

  const CoordinateIdeal k12(3, {1, 2});
  const auto fs = std::vector<PositiveUnitFunctional>{
      PositiveUnitFunctional::coordinate(3, 1), PositiveUnitFunctional::coordinate(3, 2),
      PositiveUnitFunctional({Rational(1, 4), Rational(3, 4), Rational(0)})};
  const IntersectionReport b = ideal_intersection_identity(k12, {v({0, 0, 5})}, fs);
  EXPECT_EQ(b.contained, 1);
  EXPECT_TRUE(b.separations.empty());
  EXPECT_TRUE(b.ok());

  const IntersectionReport c = ideal_intersection_identity(k12, {v({0, 1, 0})}, fs);
  ASSERT_EQ(c.separations.size(), 1u);
  EXPECT_EQ(c.separations[0].coordinate, 2u);
}

TEST(IntersectionIdentityTest, RejectsFunctionalsOutsideDeltaN) {
  const IntersectionReport r = ideal_intersection_identity(
      CoordinateIdeal(2, {1}), {v({0, 3})}, {PositiveUnitFunctional::coordinate(2, 2)});
  EXPECT_FALSE(r.ok());
}

TEST(QuotientTest, Examples) {
  const CoordinateIdeal k13(3, {1, 3});
  EXPECT_EQ(quotient_project(k13, v({1, 9, 2})), v({1, 2}));
  EXPECT_EQ(quotient_project(k13, v({0, 9, 0})), v({0, 0}));
  EXPECT_THROW(quotient_project(k13, v({1, 2})), std::invalid_argument);
}

TEST(QuotientTest, SurjectiveLatticeHomomorphism) {
  std::mt19937_64 rng(4);
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& k : all_k(n)) {
      const CoordinateIdeal ideal(n, k);
      const Vector e_dot = quotient_project(ideal, constant_vector(n, Rational(1)));
      EXPECT_EQ(e_dot, constant_vector(k.size(), Rational(1)));
      for (int t = 0; t < 10; ++t) {
        const Vector x = random_grid_vector(n, rng);
        const Vector y = random_grid_vector(n, rng);
        EXPECT_EQ(quotient_project(ideal, join(x, y)),
                  join(quotient_project(ideal, x), quotient_project(ideal, y)));
        EXPECT_EQ(quotient_project(ideal, meet(x, y)),
                  meet(quotient_project(ideal, x), quotient_project(ideal, y)));
        // Surjective: lift a quotient vector by zero-filling.
        const Vector target = random_grid_vector(k.size(), rng);
        Vector lift(n, Rational(0));
        for (std::size_t j = 0; j < k.size(); ++j) lift[k[j] - 1] = target[j];
        EXPECT_EQ(quotient_project(ideal, lift), target);
      }
    }
  }
}

TEST(SchmeidlerTest, MinRecoversMinCapacity) {
  const CoordinateIdeal ideal(4, {1, 2, 4});
  const auto f = functional_by_name("min", 4, ideal.zero_set(), 0);
  const RoundtripReport r = schmeidler_roundtrip(f->functional, ideal);
  ASSERT_TRUE(r.capacity.has_value());
  EXPECT_EQ(*r.capacity, min_capacity(3));
  EXPECT_EQ(r.residual_max, Rational(0));
  // Oracle: the minimum over K directly.
  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    const Vector x = random_grid_vector(4, rng);
    const Rational direct = min(min(x[0], x[1]), x[3]);
    EXPECT_EQ(choquet_integral(quotient_project(ideal, x), *r.capacity), direct);
  }
  EXPECT_TRUE(r.ok());
}

TEST(SchmeidlerTest, DiracCase) {
  const CoordinateIdeal ideal(3, {2, 3});
  const auto f = functional_by_name("dirac-3", 3, ideal.zero_set(), 0);
  const RoundtripReport r = schmeidler_roundtrip(f->functional, ideal);
  ASSERT_TRUE(r.capacity.has_value());
  EXPECT_EQ(*r.capacity, dirac_capacity(2, 2));
  EXPECT_EQ(r.residual_max, Rational(0));
  EXPECT_TRUE(r.ok());
}

TEST(SchmeidlerTest, RoundTripIdentity) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const std::size_t n = 2 + seed % 5;
    const auto ks = all_k(n);
    const CoordinateIdeal ideal(n, ks[seed % ks.size()]);
    const FiniteCapacity nu0 = random_capacity(static_cast<int>(ideal.zero_set().size()), seed);
    const Functional f = [&](const Vector& x) {
      return choquet_integral(quotient_project(ideal, x), nu0);
    };
    const RoundtripReport r = schmeidler_roundtrip(f, ideal, {64, seed, 64, 1});
    ASSERT_TRUE(r.capacity.has_value());
    EXPECT_EQ(*r.capacity, nu0);
    EXPECT_TRUE(r.ok());
  }
}

TEST(SchmeidlerTest, AbortsOnNormalizationFailure) {
  const CoordinateIdeal ideal(3, {1, 2});
  const auto f = functional_by_name("midrange-counterexample", 3, ideal.zero_set(), 0);
  const RoundtripReport r = schmeidler_roundtrip(f->functional, ideal, {32, 0, 32, 1});
  EXPECT_FALSE(r.capacity.has_value());
  EXPECT_FALSE(r.aborted.empty());
  EXPECT_FALSE(r.ok());
  EXPECT_FALSE(r.properties.at(kNormalized).pass);
}

TEST(SchmeidlerTest, DetectsNonInvariance) {
  // Reads coordinate 2, which lies outside K = {1}.
  const CoordinateIdeal ideal(2, {1});
  const Functional f = [](const Vector& x) { return max(x[0], x[1]); };
  const RoundtripReport r = schmeidler_roundtrip(f, ideal, {64, 0, 64, 1});
  ASSERT_TRUE(r.capacity.has_value());
  EXPECT_FALSE(r.invariance.pass);
  EXPECT_FALSE(r.invariance.witness.empty());
  EXPECT_GT(r.residual_max, Rational(0));
  EXPECT_FALSE(r.residual_witness.empty());
  EXPECT_FALSE(r.ok());
}

TEST(SchmeidlerTest, NonChoquetFunctionalLeavesResidual) {
  const CoordinateIdeal ideal(3, {1, 2, 3});
  const auto f = functional_by_name("two-prior-max", 3, ideal.zero_set(), 0);
  const RoundtripReport r = schmeidler_roundtrip(f->functional, ideal);
  ASSERT_TRUE(r.capacity.has_value());
  EXPECT_TRUE(r.validation.ok());
  EXPECT_FALSE(r.properties.at(kUnitModular).pass);
  EXPECT_GT(r.residual_max, Rational(0));
}

}  // namespace
}  // namespace nonadd
