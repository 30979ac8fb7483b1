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

#include "nonadd/representation.hpp"

#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"

namespace nonadd {
namespace {

const IntegerSet kEvens = IntegerSet::multiples_of(2);
const IntegerSet kOdds = IntegerSet::residue_class(1, 2);

/// A generator with a finite part so that Fin and Z both see null atoms.
IntegerSet random_generator(std::mt19937_64& rng) {
  if (rng() % 4 == 0) {
    std::vector<Element> v;
    for (int k = 0; k < 1 + static_cast<int>(rng() % 4); ++k) v.push_back(1 + rng() % 15);
    return IntegerSet::finite(v);
  }
  return oracle::build(oracle::random_raw(rng));
}

std::vector<IntegerSet> random_generators(std::mt19937_64& rng) {
  std::vector<IntegerSet> out;
  const int k = 1 + static_cast<int>(rng() % 3);
  for (int g = 0; g < k; ++g) out.push_back(random_generator(rng));
  return out;
}

TEST(SubalgebraTest, Examples) {
  const Subalgebra evens = Subalgebra::build({kEvens}, IdealSpec::density_zero());
  ASSERT_EQ(evens.size(), 2u);
  EXPECT_EQ(evens.atoms()[0].set, kEvens);
  EXPECT_EQ(evens.atoms()[1].set, kOdds);
  EXPECT_FALSE(evens.atoms()[0].null());
  EXPECT_FALSE(evens.atoms()[1].null());

  const Subalgebra nested =
      Subalgebra::build({IntegerSet::multiples_of(4), kEvens}, IdealSpec::density_zero());
  ASSERT_EQ(nested.size(), 3u);
  EXPECT_EQ(nested.atoms()[0].set, IntegerSet::multiples_of(4));
  EXPECT_EQ(nested.atoms()[1].set, IntegerSet::residue_class(2, 4));
  EXPECT_EQ(nested.atoms()[2].set, kOdds);

  const Subalgebra fin = Subalgebra::build({IntegerSet::interval(1, 10)}, IdealSpec::fin());
  ASSERT_EQ(fin.size(), 2u);
  EXPECT_TRUE(fin.atoms()[0].null());
  EXPECT_FALSE(fin.atoms()[1].null());
  EXPECT_FALSE(fin.approximate());
}

TEST(SubalgebraTest, AtomsPartitionAndGeneratorsAreUnions) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 100; ++t) {
    const auto gens = random_generators(rng);
    const Subalgebra s = Subalgebra::build(gens, IdealSpec::density_zero());
    IntegerSet all;
    for (std::size_t i = 0; i < s.size(); ++i) {
      EXPECT_FALSE(s.atoms()[i].set.is_empty());
      for (std::size_t j = i + 1; j < s.size(); ++j) {
        EXPECT_TRUE(s.atoms()[i].set.intersect(s.atoms()[j].set).is_empty());
      }
      all = all.unite(s.atoms()[i].set);
    }
    EXPECT_TRUE(all.is_naturals());
    EXPECT_EQ(s.union_of(s.all()), IntegerSet::naturals());
    for (const auto& g : gens) EXPECT_EQ(s.union_of(s.mask_of(g)), g);
    for (const auto& atom : s.atoms()) {
      EXPECT_EQ(atom.null(), member(IdealSpec::density_zero(), atom.set).in());
    }
  }
}

TEST(SubalgebraTest, Limits) {
  std::vector<IntegerSet> eleven;
  for (Element k = 1; k <= 11; ++k) eleven.push_back(IntegerSet::finite({k}));
  EXPECT_THROW(Subalgebra::build(eleven, IdealSpec::fin()), std::invalid_argument);
  std::vector<IntegerSet> singletons(eleven.begin(), eleven.begin() + 10);
  // Ten disjoint singletons give eleven atoms.
  EXPECT_EQ(Subalgebra::build(singletons, IdealSpec::fin()).size(), 11u);
  const Subalgebra s = Subalgebra::build({kEvens}, IdealSpec::fin());
  EXPECT_THROW(static_cast<void>(s.mask_of(IntegerSet::multiples_of(4))), std::invalid_argument);
}

TEST(CheckInvarianceTest, Examples) {
  const Subalgebra evens = Subalgebra::build({kEvens}, IdealSpec::density_zero());
  EXPECT_EQ(check_invariance(upper_density_capacity(), evens).status,
            InvarianceStatus::kInvariant);
  EXPECT_EQ(check_invariance(lower_density_capacity(), evens).status,
            InvarianceStatus::kInvariant);

  const Subalgebra one = Subalgebra::build({IntegerSet::finite({1})}, IdealSpec::fin());
  const InvarianceVerdict v = check_invariance(principal_mu(1), one);
  ASSERT_EQ(v.status, InvarianceStatus::kNotInvariant);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_EQ(v.witness->set_a, IntegerSet::finite({1}));
  EXPECT_EQ(v.witness->set_b, IntegerSet{});
  EXPECT_EQ(v.witness->value_a, Rational(1));
  EXPECT_EQ(v.witness->value_b, Rational(0));
  // Re-check the certificate independently.
  EXPECT_TRUE(symm_diff_in_ideal(IdealSpec::fin(), v.witness->set_a, v.witness->set_b)
                  .membership.in());
  EXPECT_NE(principal_mu(1)(v.witness->set_a).value, principal_mu(1)(v.witness->set_b).value);
}

TEST(RepresentTest, UpperDensityOnEvens) {
  const Subalgebra s = Subalgebra::build({kEvens}, IdealSpec::density_zero());
  const RepresentationCertificate c = represent(upper_density_capacity(), s);
  ASSERT_TRUE(c.rho.has_value());
  EXPECT_FALSE(c.counterexample.has_value());
  const FiniteCapacity& rho = c.rho->capacity;
  EXPECT_EQ(rho(0b01), Rational(1, 2));
  EXPECT_EQ(rho(0b10), Rational(1, 2));
  EXPECT_EQ(rho(0b11), Rational(1));
  EXPECT_EQ(c.rho->residual_max, Rational(0));
  EXPECT_TRUE(c.rho->exhaustive);
  EXPECT_TRUE(c.rho->validation.ok());
}

TEST(RepresentTest, IdealIndicatorGivesZeroOneRho) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 30; ++t) {
    const Subalgebra s = Subalgebra::build(random_generators(rng), IdealSpec::density_zero());
    const RepresentationCertificate c = represent(ideal_indicator(IdealSpec::density_zero()), s);
    ASSERT_TRUE(c.rho.has_value());
    for (const auto& value : c.rho->capacity.values()) {
      EXPECT_TRUE(value == Rational(0) || value == Rational(1));
    }
    EXPECT_EQ(c.rho->capacity, max_capacity(c.rho->capacity.ground_size()));
  }
}

TEST(RepresentTest, CounterexampleForPrincipal) {
  const Subalgebra s = Subalgebra::build({IntegerSet::finite({1})}, IdealSpec::fin());
  const RepresentationCertificate c = represent(principal_mu(1), s);
  EXPECT_EQ(c.status, InvarianceStatus::kNotInvariant);
  EXPECT_FALSE(c.rho.has_value());
  ASSERT_TRUE(c.counterexample.has_value());
  EXPECT_EQ(c.counterexample->set_a, IntegerSet::finite({1}));
  EXPECT_EQ(c.counterexample->set_b, IntegerSet{});
}

TEST(RepresentTest, SomeAtomIsNonNull) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 50; ++t) {
    for (const auto& ideal : {IdealSpec::fin(), IdealSpec::density_zero()}) {
      const Subalgebra s = Subalgebra::build(random_generators(rng), ideal);
      EXPECT_NE(s.non_null_atoms(), AtomMask{0});
    }
  }
}

std::vector<SetCapacity> invariant_candidates(const IdealSpec& ideal) {
  std::vector<SetCapacity> out{upper_density_capacity(), lower_density_capacity(),
                               ideal_indicator(ideal)};
  out.push_back(mixture({{Rational(1, 4), upper_density_capacity()},
                         {Rational(3, 4), ideal_indicator(ideal)}}));
  return out;
}

// check_invariance passes iff build_rho has zero residual on every union.
TEST(EquivalenceTest, InvarianceIffZeroResidual) {
  std::mt19937_64 rng(3);
  int invariant = 0;
  int not_invariant = 0;
  for (int t = 0; t < 60; ++t) {
    const auto gens = random_generators(rng);
    for (const auto& ideal : {IdealSpec::fin(), IdealSpec::density_zero()}) {
      const Subalgebra s = Subalgebra::build(gens, ideal);
      auto candidates = invariant_candidates(ideal);
      candidates.push_back(principal_mu(1 + rng() % 12));
      candidates.push_back(mixture({{Rational(1, 2), upper_density_capacity()},
                                    {Rational(1, 2), principal_mu(1 + rng() % 12)}}));
      for (const auto& nu : candidates) {
        const InvarianceVerdict v = check_invariance(nu, s);
        ASSERT_NE(v.status, InvarianceStatus::kEstimate);
        ASSERT_TRUE(v.exhaustive);
        const Rho rho = build_rho(nu, s);
        EXPECT_EQ(v.status == InvarianceStatus::kInvariant, rho.residual_max.is_zero())
            << nu.name() << " on " << s.size() << " atoms";
        if (v.status == InvarianceStatus::kInvariant) EXPECT_TRUE(rho.validation.ok()) << nu.name();
        if (v.status == InvarianceStatus::kInvariant) {
          ++invariant;
        } else {
          ++not_invariant;
          const auto& w = *v.witness;
          EXPECT_TRUE(symm_diff_in_ideal(ideal, w.set_a, w.set_b).membership.in());
          EXPECT_NE(nu(w.set_a).value, nu(w.set_b).value);
        }
        // Brute force over all pairs of unions.
        bool all_pairs = true;
        for (AtomMask a = 0; a <= s.all() && all_pairs; ++a) {
          for (AtomMask b = 0; b <= s.all(); ++b) {
            if (((a ^ b) & s.non_null_atoms()) == 0 &&
                nu(s.union_of(a)).value != nu(s.union_of(b)).value) {
              all_pairs = false;
              break;
            }
          }
        }
        EXPECT_EQ(all_pairs, v.status == InvarianceStatus::kInvariant);
      }
    }
  }
  EXPECT_GT(invariant, 50);
  EXPECT_GT(not_invariant, 20);
}

// Abstract upper densities (diffuse, subadditive) are invariant under their
// null ideal Z on exact subalgebras.
TEST(InvariantCapacityTest, AbstractUpperDensities) {
  const IdealSpec exh = IdealSpec::exh(density_sup_submeasure());
  const std::vector<SetCapacity> densities{
      upper_density_capacity(), exh_norm_capacity(exh),
      mixture({{Rational(1, 3), upper_density_capacity()}, {Rational(2, 3), exh_norm_capacity(exh)}})};
  std::mt19937_64 rng(4);
  for (int t = 0; t < 40; ++t) {
    const Subalgebra s = Subalgebra::build(random_generators(rng), IdealSpec::density_zero());
    for (const auto& nu : densities) {
      // Diffuse: finite atoms have value 0.
      for (const auto& atom : s.atoms()) {
        if (atom.set.is_finite()) EXPECT_EQ(nu(atom.set).value, Rational(0));
      }
      const RepresentationCertificate c = represent(nu, s);
      EXPECT_EQ(c.status, InvarianceStatus::kInvariant) << nu.name();
      ASSERT_TRUE(c.rho.has_value());
      EXPECT_EQ(c.rho->residual_max, Rational(0));
    }
  }
}

// ||.||_phi for phi = sup_n |A ∩ [1,n]| / n is Exh(phi)-invariant.
TEST(InvariantCapacityTest, ExhNormIsInvariant) {
  const IdealSpec exh = IdealSpec::exh(density_sup_submeasure());
  std::mt19937_64 rng(5);
  for (int t = 0; t < 40; ++t) {
    const Subalgebra s = Subalgebra::build(random_generators(rng), exh);
    ASSERT_FALSE(s.approximate());
    const SetCapacity norm = exh_norm_capacity(exh);
    const RepresentationCertificate c = represent(norm, s);
    ASSERT_EQ(c.status, InvarianceStatus::kInvariant);
    // Checked against d*, the exact evaluator on this class.
    for (AtomMask a = 0; a <= s.all(); ++a) {
      EXPECT_EQ(norm(s.union_of(a)).value, upper_density(s.union_of(a)).value);
    }
  }
}

TEST(RepresentFunctionTest, Examples) {
  const Subalgebra s = Subalgebra::build({kEvens}, IdealSpec::density_zero());
  const SetCapacity d = upper_density_capacity();
  const Rho rho = *represent(d, s).rho;
  const FunctionReport f = represent_function(StepSequence(s, {Rational(2), Rational(1)}), d, rho);
  EXPECT_EQ(f.lhs, Rational(3, 2));
  EXPECT_EQ(f.rhs, Rational(3, 2));
  EXPECT_TRUE(f.equal);
  EXPECT_TRUE(f.exact);
  const FunctionReport c =
      represent_function(StepSequence(s, {Rational(-4), Rational(-4)}), d, rho);
  EXPECT_EQ(c.lhs, Rational(-4));
  EXPECT_TRUE(c.equal);
  for (AtomMask a = 0; a <= s.all(); ++a) {
    const FunctionReport r = represent_function(StepSequence::indicator(s, a), d, rho);
    EXPECT_EQ(r.lhs, d(s.union_of(a)).value);
    EXPECT_TRUE(r.equal);
  }
}

// Step sequences on random subalgebras, including the claim that adding a
// step sequence supported on null atoms never changes the integral.
TEST(RepresentFunctionTest, RandomStepSequences) {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 40; ++t) {
    const Subalgebra s = Subalgebra::build(random_generators(rng), IdealSpec::fin());
    for (const auto& nu : invariant_candidates(IdealSpec::fin())) {
      const auto cert = represent(nu, s);
      ASSERT_TRUE(cert.rho.has_value());
      const Vector x = random_grid_vector(s.size(), rng);
      EXPECT_TRUE(represent_function(StepSequence(s, x), nu, *cert.rho).equal);
      Vector shifted = x;
      for (std::size_t k = 0; k < s.size(); ++k) {
        if (s.atoms()[k].null()) shifted[k] += random_grid_rational(rng);
      }
      EXPECT_EQ(choquet_step(StepSequence(s, shifted), nu).value,
                choquet_step(StepSequence(s, x), nu).value);
    }
  }
}

TEST(PrincipalMuTest, Examples) {
  const SetCapacity mu3 = principal_mu(3);
  EXPECT_EQ(mu3(IntegerSet::finite({3})).value, Rational(1));
  EXPECT_EQ(mu3(kEvens).value, Rational(0));
  EXPECT_THROW(principal_mu(0), std::invalid_argument);
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    const Element m = 1 + rng() % 30;
    const SetCapacity mu = principal_mu(m);
    const IntegerSet a = oracle::build(oracle::random_raw(rng));
    const IntegerSet b = oracle::build(oracle::random_raw(rng)).minus(a);
    EXPECT_EQ(mu(a.unite(b)).value, mu(a).value + mu(b).value);
  }
  // Choquet integral of a step sequence against μ_m is the value at m.
  const Subalgebra s =
      Subalgebra::build({kEvens, IntegerSet::multiples_of(3)}, IdealSpec::fin());
  const Vector x = {Rational(5), Rational(-1), Rational(2), Rational(7, 2)};
  ASSERT_EQ(s.size(), 4u);
  for (Element m = 1; m <= 12; ++m) {
    std::size_t atom = 0;
    while (!s.atoms()[atom].set.contains(m)) ++atom;
    EXPECT_EQ(choquet_step(StepSequence(s, x), principal_mu(m)).value, x[atom]);
  }
}

TEST(LargeSubalgebraTest, SampledBeyondTenAtoms) {
  std::vector<IntegerSet> gens;
  for (Element k = 1; k <= 10; ++k) gens.push_back(IntegerSet::finite({k}));
  const Subalgebra s = Subalgebra::build(gens, IdealSpec::fin());
  ASSERT_EQ(s.size(), 11u);
  const InvarianceVerdict v = check_invariance(upper_density_capacity(), s, 1);
  EXPECT_FALSE(v.exhaustive);
  EXPECT_EQ(v.status, InvarianceStatus::kInvariant);
  EXPECT_EQ(v.pairs_checked, static_cast<std::uint64_t>(kSampledUnions + 2));
  const InvarianceVerdict p = check_invariance(principal_mu(4), s, 1);
  EXPECT_EQ(p.status, InvarianceStatus::kNotInvariant);
}

}  // namespace
}  // namespace nonadd
