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

#include "nonadd/ideals.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace nonadd {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

Rational prefix_ratio(Element count, Element n) {
  return Rational(static_cast<std::int64_t>(count), static_cast<std::int64_t>(n));
}

/// Schedule points usable for a truncation, restricted to the tail.
std::vector<Element> estimation_points(const Truncation& t, const std::vector<Element>& schedule) {
  std::vector<Element> points;
  for (Element n : schedule) {
    if (n >= 1 && n <= t.horizon()) points.push_back(n);
  }
  if (points.empty()) throw std::invalid_argument("schedule has no point inside the truncation");
  const Element last = points.back();
  std::vector<Element> tail;
  for (Element n : points) {
    if (n * n >= last) tail.push_back(n);
  }
  return tail;
}

DensityValue density_estimate(const AnySet& set, const std::vector<Element>& schedule,
                              bool upper) {
  return std::visit(
      Overloaded{
          [&](const IntegerSet& s) { return DensityValue{s.density(), true, 0}; },
          [&](const RuleSet&) { return DensityValue{Rational(0), true, 0}; },
          [&](const Truncation& t) {
            const auto points = estimation_points(t, schedule);
            Rational best = prefix_ratio(t.count_up_to(points.front()), points.front());
            for (Element n : points) {
              const Rational r = prefix_ratio(t.count_up_to(n), n);
              if (upper ? best < r : r < best) best = r;
            }
            return DensityValue{best, false, points.back()};
          },
      },
      set);
}

Element effective_horizon(const AnySet& set, Element horizon) {
  if (const auto* t = std::get_if<Truncation>(&set)) return std::min(horizon, t->horizon());
  return horizon;
}

/// sup_m |F ∩ [1,m]| / m for a finite F: the sup is attained at an element.
Rational finite_density_sup(const IntegerSet& f) {
  Rational best(0);
  const auto& e = f.elements();
  for (std::size_t i = 0; i < e.size(); ++i) {
    best = max(best, prefix_ratio(i + 1, e[i]));
  }
  return best;
}

/// Exact sup_m |A ∩ [1,m]| / m. Past the threshold every period adds the same
/// number of members, so along m, m+p, m+2p, ... the ratio moves
/// monotonically toward |residues|/period; the sup is either that limit or
/// a ratio at some m < threshold + period.
Rational periodic_density_sup(const IntegerSet& s) {
  if (s.is_finite()) return finite_density_sup(s);
  Rational best = s.density();
  Element count = 0;
  for (Element m = 1; m < s.threshold() + s.period(); ++m) {
    if (s.contains(m)) ++count;
    best = max(best, prefix_ratio(count, m));
  }
  return best;
}

Rational finite_geometric_mass(const IntegerSet& f) {
  Rational total(0);
  for (Element a : f.elements()) total += Rational::inverse_power_of_two(a);
  return total;
}

Rational periodic_geometric_mass(const IntegerSet& s) {
  if (s.is_finite()) return finite_geometric_mass(s);
  Rational total(0);
  for (Element a = 1; a < s.threshold(); ++a) {
    if (s.contains(a)) total += Rational::inverse_power_of_two(a);
  }
  // Σ_{k>=0} 2^-(first + k·p) = 2^-first / (1 - 2^-p)
  const Rational ratio = Rational(1) - Rational::inverse_power_of_two(s.period());
  for (Element r : s.residues()) {
    Element first = s.threshold() + (r + s.period() - s.threshold() % s.period()) % s.period();
    total += Rational::inverse_power_of_two(first) / ratio;
  }
  return total;
}

void check_schedule(const std::vector<Element>& schedule) {
  if (schedule.empty()) throw std::invalid_argument("schedule must be nonempty");
  for (std::size_t i = 1; i < schedule.size(); ++i) {
    if (schedule[i] <= schedule[i - 1]) {
      throw std::invalid_argument("schedule must be strictly increasing");
    }
  }
}

}  // namespace

std::vector<Element> powers_of_two_schedule(Element horizon) {
  if (horizon == 0) throw std::invalid_argument("horizon must be positive");
  std::vector<Element> schedule;
  for (Element n = 1; n <= horizon; n *= 2) {
    schedule.push_back(n);
    if (n > horizon / 2) break;
  }
  if (schedule.back() != horizon) schedule.push_back(horizon);
  return schedule;
}

DensityValue upper_density(const AnySet& set, const std::vector<Element>& schedule) {
  return density_estimate(set, schedule, /*upper=*/true);
}

DensityValue upper_density(const AnySet& set, Element horizon) {
  return upper_density(set, powers_of_two_schedule(effective_horizon(set, horizon)));
}

DensityValue lower_density(const AnySet& set, const std::vector<Element>& schedule) {
  return density_estimate(set, schedule, /*upper=*/false);
}

DensityValue lower_density(const AnySet& set, Element horizon) {
  return lower_density(set, powers_of_two_schedule(effective_horizon(set, horizon)));
}

// ---------------------------------------------------------------------------

Submeasure::Submeasure(std::string name, WindowEvaluator window, ExactEvaluator exact,
                       MassAtInfinity mass)
    : name_(std::move(name)),
      window_(std::move(window)),
      exact_(std::move(exact)),
      mass_(std::move(mass)) {
  if (!window_) throw std::invalid_argument("submeasure needs a window evaluator");
}

Rational Submeasure::evaluate_window(const AnySet& set, Element window) const {
  return window_(restrict_to(set, window));
}

std::optional<Rational> Submeasure::evaluate_exact(const IntegerSet& set) const {
  if (!exact_) return std::nullopt;
  return exact_(set);
}

std::optional<Rational> Submeasure::mass_at_infinity(const AnySet& set) const {
  if (!mass_) return std::nullopt;
  return mass_(set);
}

SubmeasurePtr density_sup_submeasure() {
  static const SubmeasurePtr instance = std::make_shared<const Submeasure>(
      "density-sup", finite_density_sup,
      [](const IntegerSet& s) -> std::optional<Rational> { return periodic_density_sup(s); },
      [](const AnySet& set) -> std::optional<Rational> {
        return std::visit(Overloaded{
                              [](const IntegerSet& s) -> std::optional<Rational> {
                                return s.density();
                              },
                              [](const RuleSet&) -> std::optional<Rational> {
                                return Rational(0);
                              },
                              [](const Truncation&) -> std::optional<Rational> {
                                return std::nullopt;
                              },
                          },
                          set);
      });
  return instance;
}

SubmeasurePtr geometric_submeasure() {
  static const SubmeasurePtr instance = std::make_shared<const Submeasure>(
      "geometric", finite_geometric_mass,
      [](const IntegerSet& s) -> std::optional<Rational> { return periodic_geometric_mass(s); },
      [](const AnySet&) -> std::optional<Rational> { return Rational(0); });
  return instance;
}

SubmeasurePtr submeasure_by_name(const std::string& name) {
  if (name == "density-sup") return density_sup_submeasure();
  if (name == "geometric") return geometric_submeasure();
  throw std::invalid_argument("unknown submeasure '" + name + "'");
}

std::vector<std::string> check_submeasure(const Submeasure& phi, Element window, int trials,
                                          std::uint64_t seed) {
  std::vector<std::string> violations;
  std::mt19937_64 rng(seed);
  const auto random_subset = [&] {
    const Element keep_one_in = 1 + rng() % 4;
    std::vector<Element> v;
    for (Element n = 1; n <= window; ++n) {
      if (rng() % keep_one_in == 0) v.push_back(n);
    }
    return IntegerSet::finite(std::move(v));
  };
  if (const Rational empty = phi.evaluate_window(IntegerSet{}, window); !empty.is_zero()) {
    violations.push_back("phi(empty) = " + empty.str());
  }
  for (int t = 0; t < trials; ++t) {
    const IntegerSet a = random_subset();
    const IntegerSet b = random_subset();
    const IntegerSet u = a.unite(b);
    const Rational pa = phi.evaluate_window(a, window);
    const Rational pb = phi.evaluate_window(b, window);
    const Rational pu = phi.evaluate_window(u, window);
    if (pa < Rational(0)) violations.push_back("negative value on " + a.describe());
    if (pu < pa || pu < pb) {
      violations.push_back("not monotone: phi(A u B) < phi(A) for A = " + a.describe());
    }
    if (pa + pb < pu) {
      violations.push_back("not subadditive on A = " + a.describe() + ", B = " + b.describe());
    }
  }
  return violations;
}

ExhNormResult exh_norm(const Submeasure& phi, const AnySet& set,
                       const std::vector<Element>& schedule, Element window) {
  check_schedule(schedule);
  ExhNormResult result;
  result.schedule = schedule;
  result.window = window == 0 ? 4 * schedule.back() : window;
  if (const auto* t = std::get_if<Truncation>(&set)) {
    result.window = std::min(result.window, t->horizon());
  }

  const auto* exact_set = std::get_if<IntegerSet>(&set);
  result.exact = exact_set != nullptr;
  for (Element n : schedule) {
    std::optional<Rational> value;
    if (exact_set) value = phi.evaluate_exact(exact_set->without_prefix(n));
    if (!value) {
      result.exact = false;
      value = phi.evaluate_window(restrict_to(set, result.window).without_prefix(n),
                                  result.window);
    }
    if (!result.values.empty() && result.values.back() < *value) {
      throw std::domain_error("submeasure '" + phi.name() +
                              "' is not monotone: phi(A \\ [1,n]) increased at n = " +
                              std::to_string(n));
    }
    result.values.push_back(*value);
  }
  if (result.exact) result.window = 0;

  result.naturals_mass = phi.mass_at_infinity(IntegerSet::naturals());
  if (!result.naturals_mass) {
    const Element w = 4 * schedule.back();
    result.naturals_mass =
        phi.evaluate_window(IntegerSet::interval(schedule.back() + 1, w), w);
  }
  if (result.naturals_mass->sign() > 0) {
    std::vector<Rational> normalized;
    for (const auto& v : result.values) normalized.push_back(v / *result.naturals_mass);
    result.normalized = std::move(normalized);
  }
  return result;
}

// ---------------------------------------------------------------------------

Rational WeightRule::weight(Element a) const {
  if (kind == Kind::kHarmonic) return scale / Rational(static_cast<std::int64_t>(a));
  return scale;
}

std::string WeightRule::name() const {
  if (kind == Kind::kHarmonic) return scale.str() + "/a";
  return scale.str();
}

IdealSpec IdealSpec::fin() { return IdealSpec{}; }

IdealSpec IdealSpec::density_zero() {
  IdealSpec spec;
  spec.kind_ = Kind::kDensityZero;
  return spec;
}

IdealSpec IdealSpec::summable(WeightRule weights) {
  if (weights.scale.sign() <= 0) throw std::invalid_argument("weights must be positive");
  IdealSpec spec;
  spec.kind_ = Kind::kSummable;
  spec.weights_ = std::move(weights);
  return spec;
}

IdealSpec IdealSpec::exh(SubmeasurePtr phi, Rational normalization) {
  if (!phi) throw std::invalid_argument("Exh ideal needs a submeasure");
  if (normalization.sign() <= 0) throw std::invalid_argument("normalization must be positive");
  if (const auto mass = phi->mass_at_infinity(IntegerSet::naturals()); mass && mass->is_zero()) {
    throw std::invalid_argument("submeasure '" + phi->name() +
                                "' has no mass at infinity on N; Exh(phi) would contain N");
  }
  IdealSpec spec;
  spec.kind_ = Kind::kExh;
  spec.submeasure_ = std::move(phi);
  spec.normalization_ = std::move(normalization);
  return spec;
}

std::string IdealSpec::name() const {
  switch (kind_) {
    case Kind::kFin:
      return "fin";
    case Kind::kDensityZero:
      return "density";
    case Kind::kSummable:
      return "summable(" + weights_.name() + ")";
    case Kind::kExh:
      return "exh(" + submeasure_->name() + ")";
  }
  return "unknown";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kIn:
      return "in";
    case Verdict::kOut:
      return "out";
    case Verdict::kEstimateOnly:
      return "estimate";
  }
  return "unknown";
}

namespace {

MembershipVerdict exact(Verdict v, std::string reason) {
  return MembershipVerdict{v, std::move(reason), std::nullopt, 0};
}

MembershipVerdict estimate(std::string reason, Rational value, Element horizon) {
  return MembershipVerdict{Verdict::kEstimateOnly, std::move(reason), std::move(value), horizon};
}

MembershipVerdict member_fin(const AnySet& set) {
  return std::visit(
      Overloaded{
          [](const IntegerSet& s) {
            return s.is_finite() ? exact(Verdict::kIn, "finite set")
                                 : exact(Verdict::kOut, "eventually periodic with residues");
          },
          [](const RuleSet& r) { return exact(Verdict::kOut, r.name() + " is infinite"); },
          [](const Truncation& t) {
            return estimate("truncation: finiteness is undecidable from a prefix",
                            Rational(static_cast<std::int64_t>(t.elements().size())),
                            t.horizon());
          },
      },
      set);
}

MembershipVerdict member_density(const AnySet& set) {
  return std::visit(
      Overloaded{
          [](const IntegerSet& s) {
            return s.is_finite()
                       ? exact(Verdict::kIn, "finite set")
                       : exact(Verdict::kOut, "upper density " + s.density().str() + " > 0");
          },
          [](const RuleSet& r) { return exact(Verdict::kIn, r.name() + " has density 0"); },
          [&set](const Truncation& t) {
            const DensityValue d = upper_density(set, t.horizon());
            return estimate("upper density estimated on a prefix", d.value, d.horizon);
          },
      },
      set);
}

// Summable ideals. A residue class r + pN contains r + kp for every k, and
// Σ_k 1/(r + kp) >= (1/p) Σ_k 1/(k + 1) diverges, so an eventually periodic
// set is summable for harmonic weights iff it has no residues, i.e. iff it is
// finite. Constant weights are summable exactly on finite sets.
MembershipVerdict member_summable(const WeightRule& w, const AnySet& set) {
  const bool harmonic = w.kind == WeightRule::Kind::kHarmonic;
  return std::visit(
      Overloaded{
          [&](const IntegerSet& s) {
            if (s.is_finite()) return exact(Verdict::kIn, "finite set");
            return exact(Verdict::kOut, harmonic ? "residue class diverges by harmonic comparison"
                                                 : "infinite set with constant weights");
          },
          [&](const RuleSet& r) {
            if (!harmonic) return exact(Verdict::kOut, r.name() + " is infinite");
            return exact(Verdict::kIn, r.rule == SparseRule::kPowersOfTwo
                                           ? "sum of 2^-k converges"
                                           : "sum of 1/k^2 converges");
          },
          [&](const Truncation& t) {
            Rational partial(0);
            for (Element a : t.elements()) partial += w.weight(a);
            return estimate("partial weight sum on a prefix", partial, t.horizon());
          },
      },
      set);
}

MembershipVerdict member_exh(const IdealSpec& ideal, const AnySet& set) {
  if (const auto* s = std::get_if<IntegerSet>(&set); s && s->is_finite()) {
    return exact(Verdict::kIn, "finite set");
  }
  const Submeasure& phi = *ideal.submeasure();
  if (const auto mass = phi.mass_at_infinity(set)) {
    if (mass->is_zero()) return exact(Verdict::kIn, "mass at infinity is 0");
    return exact(Verdict::kOut, "mass at infinity " + (*mass / ideal.normalization()).str());
  }
  Element horizon = kDefaultHorizon;
  if (const auto* t = std::get_if<Truncation>(&set)) horizon = t->horizon();
  const auto schedule = powers_of_two_schedule(std::max<Element>(1, horizon / 4));
  const ExhNormResult norm = exh_norm(phi, set, schedule, horizon);
  return estimate("tail mass estimated on a window", norm.estimate() / ideal.normalization(),
                  horizon);
}

}  // namespace

MembershipVerdict member(const IdealSpec& ideal, const AnySet& set) {
  switch (ideal.kind()) {
    case IdealSpec::Kind::kFin:
      return member_fin(set);
    case IdealSpec::Kind::kDensityZero:
      return member_density(set);
    case IdealSpec::Kind::kSummable:
      return member_summable(ideal.weights(), set);
    case IdealSpec::Kind::kExh:
      return member_exh(ideal, set);
  }
  throw std::logic_error("unhandled ideal kind");
}

SymmetricDifferenceVerdict symm_diff_in_ideal(const IdealSpec& ideal, const IntegerSet& a,
                                              const IntegerSet& b) {
  IntegerSet difference = a.symmetric_difference(b);
  MembershipVerdict membership = member(ideal, difference);
  return {std::move(difference), std::move(membership)};
}

MembershipVerdict dual_filter_member(const IdealSpec& ideal, const IntegerSet& set) {
  return member(ideal, set.complement());
}

}  // namespace nonadd
