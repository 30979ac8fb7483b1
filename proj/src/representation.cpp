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
#include <stdexcept>
#include <unordered_map>

namespace nonadd {

namespace {

/// ν on unions of atoms, each union evaluated once.
class UnionValues {
 public:
  UnionValues(const SetCapacity& capacity, const Subalgebra& algebra)
      : capacity_(capacity), algebra_(algebra) {}

  const SetValue& operator()(AtomMask mask) {
    auto it = cache_.find(mask);
    if (it == cache_.end()) it = cache_.emplace(mask, capacity_(algebra_.union_of(mask))).first;
    return it->second;
  }

 private:
  const SetCapacity& capacity_;
  const Subalgebra& algebra_;
  std::unordered_map<AtomMask, SetValue> cache_;
};

/// Unions to visit: all of them for small subalgebras, else a seeded sample
/// (always including the empty and the full union).
std::vector<AtomMask> unions_to_check(const Subalgebra& algebra, std::uint64_t seed,
                                      bool& exhaustive) {
  std::vector<AtomMask> out;
  if (algebra.size() <= kExhaustiveAtoms) {
    exhaustive = true;
    for (std::uint64_t a = 0; a <= algebra.all(); ++a) out.push_back(static_cast<AtomMask>(a));
    return out;
  }
  exhaustive = false;
  std::mt19937_64 rng(seed);
  out.push_back(0);
  out.push_back(algebra.all());
  for (int i = 0; i < kSampledUnions; ++i) out.push_back(static_cast<AtomMask>(rng()) & algebra.all());
  return out;
}

}  // namespace

std::string to_string(InvarianceStatus status) {
  switch (status) {
    case InvarianceStatus::kInvariant: return "invariant";
    case InvarianceStatus::kNotInvariant: return "not-invariant";
    case InvarianceStatus::kEstimate: return "estimate";
  }
  return "?";
}

InvarianceVerdict check_invariance(const SetCapacity& capacity, const Subalgebra& algebra,
                                   std::uint64_t seed) {
  InvarianceVerdict verdict;
  UnionValues nu(capacity, algebra);
  const AtomMask non_null = algebra.non_null_atoms();
  bool exact = !algebra.approximate();
  for (AtomMask a : unions_to_check(algebra, seed, verdict.exhaustive)) {
    const AtomMask b = a & non_null;
    const SetValue va = nu(a);
    const SetValue vb = nu(b);
    ++verdict.pairs_checked;
    exact = exact && va.exact && vb.exact;
    if (va.value != vb.value && !verdict.witness) {
      verdict.witness = InvarianceWitness{a,        b,        algebra.union_of(a),
                                          algebra.union_of(b), va.value, vb.value};
      if (exact) break;
    }
  }
  if (!exact) {
    verdict.status = InvarianceStatus::kEstimate;
  } else {
    verdict.status =
        verdict.witness ? InvarianceStatus::kNotInvariant : InvarianceStatus::kInvariant;
  }
  return verdict;
}

Rho build_rho(const SetCapacity& capacity, const Subalgebra& algebra, std::uint64_t seed) {
  const std::vector<std::size_t> atoms = algebra.non_null_indices();
  if (atoms.empty()) throw std::domain_error("every atom is null: N would belong to the ideal");
  const int k = static_cast<int>(atoms.size());
  UnionValues nu(capacity, algebra);
  bool exact = !algebra.approximate();

  // Ground element j of ρ is atom atoms[j].
  const auto lift = [&atoms](Mask t) {
    AtomMask a = 0;
    for (std::size_t j = 0; j < atoms.size(); ++j) {
      if ((t >> j) & 1U) a |= AtomMask{1} << atoms[j];
    }
    return a;
  };
  const auto project = [&atoms](AtomMask a) {
    Mask t = 0;
    for (std::size_t j = 0; j < atoms.size(); ++j) {
      if ((a >> atoms[j]) & 1U) t |= Mask{1} << j;
    }
    return t;
  };

  std::vector<Rational> values(std::size_t{1} << k);
  for (Mask t = 0; t < values.size(); ++t) {
    const SetValue v = nu(lift(t));
    values[t] = v.value;
    exact = exact && v.exact;
  }
  Rho rho{atoms, FiniteCapacity(k, std::move(values)), {}, Rational(0), std::nullopt, true, true};
  rho.validation = validate(rho.capacity);

  // ∫ μ(A) dρ: the integrand is the indicator of the non-null atoms inside A,
  // so the Choquet integral is ρ of that set.
  for (AtomMask a : unions_to_check(algebra, seed, rho.exhaustive)) {
    Vector indicator(atoms.size(), Rational(0));
    for (std::size_t j = 0; j < atoms.size(); ++j) {
      if ((a >> atoms[j]) & 1U) indicator[j] = Rational(1);
    }
    const Rational rhs = choquet_integral(indicator, rho.capacity);
    if (rhs != rho.capacity(project(a))) {
      throw std::logic_error("Choquet integral of an indicator differs from its capacity");
    }
    const SetValue lhs = nu(a);
    exact = exact && lhs.exact;
    if (const Rational r = abs(lhs.value - rhs); rho.residual_max < r) {
      rho.residual_max = r;
      rho.residual_witness = a;
    }
  }
  rho.exact = exact;
  return rho;
}

RepresentationCertificate represent(const SetCapacity& capacity, const Subalgebra& algebra,
                                    std::uint64_t seed) {
  RepresentationCertificate cert;
  const InvarianceVerdict verdict = check_invariance(capacity, algebra, seed);
  cert.status = verdict.status;
  if (verdict.status == InvarianceStatus::kNotInvariant) {
    cert.counterexample = verdict.witness;
    return cert;
  }
  cert.rho = build_rho(capacity, algebra, seed);
  return cert;
}

FunctionReport represent_function(const StepSequence& x, const SetCapacity& capacity,
                                  const Rho& rho) {
  FunctionReport report;
  const SetValue lhs = choquet_step(x, capacity);
  report.lhs = lhs.value;
  Vector on_atoms;
  on_atoms.reserve(rho.atoms.size());
  for (std::size_t k : rho.atoms) on_atoms.push_back(x.values()[k]);
  report.rhs = choquet_integral(on_atoms, rho.capacity);
  report.exact = lhs.exact && rho.exact && !x.algebra().approximate();
  report.equal = report.lhs == report.rhs;
  return report;
}

SetCapacity principal_mu(Element m) {
  if (m < 1) throw std::invalid_argument("principal ultrafilter needs m >= 1");
  return SetCapacity("principal(" + std::to_string(m) + ")", [m](const IntegerSet& s) {
    return SetValue{s.contains(m) ? Rational(1) : Rational(0), true};
  });
}

}  // namespace nonadd
