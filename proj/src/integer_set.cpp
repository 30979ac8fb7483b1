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

#include "nonadd/integer_set.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace nonadd {

namespace {

void sort_unique(std::vector<Element>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

bool sorted_contains(const std::vector<Element>& v, Element n) {
  return std::binary_search(v.begin(), v.end(), n);
}

Element count_le(const std::vector<Element>& v, Element n) {
  return static_cast<Element>(std::upper_bound(v.begin(), v.end(), n) - v.begin());
}

std::optional<Element> parse_element(std::string_view text) {
  Element value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) return std::nullopt;
  return value;
}

std::string join(const std::vector<Element>& v, std::size_t limit) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size() && i < limit; ++i) {
    if (i) os << ',';
    os << v[i];
  }
  if (v.size() > limit) os << ",...";
  return os.str();
}

}  // namespace

IntegerSet IntegerSet::finite(std::vector<Element> elements) {
  sort_unique(elements);
  if (!elements.empty() && elements.front() == 0) {
    throw std::invalid_argument("0 is not a positive integer");
  }
  IntegerSet s;
  s.elements_ = std::move(elements);
  return s;
}

IntegerSet IntegerSet::eventually_periodic(Element threshold, Element period,
                                           std::vector<Element> residues,
                                           std::vector<Element> exceptions_in,
                                           std::vector<Element> exceptions_out) {
  if (threshold == 0) throw std::invalid_argument("threshold must be positive");
  if (period == 0) throw std::invalid_argument("period must be positive");
  if (period > kMaxPeriod) throw std::length_error("period too large");
  sort_unique(residues);
  sort_unique(exceptions_in);
  sort_unique(exceptions_out);
  if (!residues.empty() && residues.back() >= period) {
    throw std::invalid_argument("residue outside {0, ..., period-1}");
  }
  for (const auto* exc : {&exceptions_in, &exceptions_out}) {
    if (!exc->empty() && (exc->front() == 0 || exc->back() >= threshold)) {
      throw std::invalid_argument("exceptions must lie in [1, threshold)");
    }
  }
  std::vector<Element> both;
  std::set_intersection(exceptions_in.begin(), exceptions_in.end(), exceptions_out.begin(),
                        exceptions_out.end(), std::back_inserter(both));
  if (!both.empty()) {
    throw std::invalid_argument("exceptions_in and exceptions_out must be disjoint");
  }

  std::vector<bool> pattern(period, false);
  for (Element r : residues) pattern[r] = true;
  std::vector<bool> below(threshold - 1);
  for (Element n = 1; n < threshold; ++n) {
    bool member = pattern[n % period];
    if (sorted_contains(exceptions_in, n)) member = true;
    if (sorted_contains(exceptions_out, n)) member = false;
    below[n - 1] = member;
  }
  return canonicalize(below, threshold, std::move(pattern));
}

IntegerSet IntegerSet::naturals() { return eventually_periodic(1, 1, {0}); }

IntegerSet IntegerSet::multiples_of(Element k) { return eventually_periodic(1, k, {0}); }

IntegerSet IntegerSet::residue_class(Element residue, Element period) {
  return eventually_periodic(1, period, {residue % period});
}

IntegerSet IntegerSet::interval(Element lo, Element hi) {
  if (lo == 0) throw std::invalid_argument("0 is not a positive integer");
  std::vector<Element> v;
  for (Element n = lo; n <= hi; ++n) v.push_back(n);
  return finite(std::move(v));
}

IntegerSet IntegerSet::canonicalize(const std::vector<bool>& below, Element threshold,
                                    std::vector<bool> pattern) {
  // Minimal period: the smallest divisor d of |pattern| under which the
  // pattern repeats.
  const Element length = pattern.size();
  Element period = length;
  for (Element d = 1; d < length; ++d) {
    if (length % d != 0) continue;
    bool repeats = true;
    for (Element r = d; r < length && repeats; ++r) repeats = pattern[r] == pattern[r % d];
    if (repeats) {
      period = d;
      break;
    }
  }
  pattern.resize(period);

  IntegerSet s;
  const bool has_residues = std::find(pattern.begin(), pattern.end(), true) != pattern.end();
  if (!has_residues) {
    for (Element n = 1; n < threshold; ++n) {
      if (below[n - 1]) s.elements_.push_back(n);
    }
    return s;
  }

  s.period_ = period;
  s.residue_mask_ = pattern;
  for (Element r = 0; r < period; ++r) {
    if (pattern[r]) s.residues_.push_back(r);
  }
  for (Element n = 1; n < threshold; ++n) {
    const bool member = below[n - 1];
    if (member == pattern[n % period]) continue;
    (member ? s.exceptions_in_ : s.exceptions_out_).push_back(n);
  }
  const Element last_in = s.exceptions_in_.empty() ? 0 : s.exceptions_in_.back();
  const Element last_out = s.exceptions_out_.empty() ? 0 : s.exceptions_out_.back();
  s.threshold_ = std::max(last_in, last_out) + 1;
  return s;
}

bool IntegerSet::is_naturals() const {
  return period_ == 1 && !residues_.empty() && exceptions_out_.empty();
}

bool IntegerSet::periodic_rule(Element n) const {
  return !residue_mask_.empty() && residue_mask_[n % period_];
}

bool IntegerSet::contains(Element n) const {
  if (n == 0) return false;
  if (is_finite()) return sorted_contains(elements_, n);
  if (n < threshold_) {
    if (sorted_contains(exceptions_in_, n)) return true;
    if (sorted_contains(exceptions_out_, n)) return false;
  }
  return periodic_rule(n);
}

Element IntegerSet::count_up_to(Element n) const {
  if (is_finite()) return count_le(elements_, n);
  Element count = 0;
  for (Element r : residues_) {
    if (r == 0) {
      count += n / period_;
    } else if (r <= n) {
      count += (n - r) / period_ + 1;
    }
  }
  return count + count_le(exceptions_in_, n) - count_le(exceptions_out_, n);
}

Rational IntegerSet::density() const {
  if (is_finite()) return Rational(0);
  return Rational(static_cast<std::int64_t>(residues_.size()),
                  static_cast<std::int64_t>(period_));
}

IntegerSet IntegerSet::combine(const IntegerSet& other, Op op) const {
  const auto apply = [op](bool a, bool b) {
    switch (op) {
      case Op::kUnion:
        return a || b;
      case Op::kIntersection:
        return a && b;
      case Op::kDifference:
        return a && !b;
      case Op::kSymmetricDifference:
        return a != b;
    }
    return false;
  };
  const auto stable_from = [](const IntegerSet& s) {
    if (s.is_finite()) return s.elements_.empty() ? Element{1} : s.elements_.back() + 1;
    return s.threshold_;
  };
  const Element period = std::lcm(period_, other.period_);
  if (period > kMaxPeriod) throw std::length_error("combined period too large");
  const Element threshold = std::max(stable_from(*this), stable_from(other));

  std::vector<bool> pattern(period);
  for (Element r = 0; r < period; ++r) {
    pattern[r] = apply(periodic_rule(r), other.periodic_rule(r));
  }
  std::vector<bool> below(threshold - 1);
  for (Element n = 1; n < threshold; ++n) below[n - 1] = apply(contains(n), other.contains(n));
  return canonicalize(below, threshold, std::move(pattern));
}

IntegerSet IntegerSet::complement() const {
  return naturals().combine(*this, Op::kDifference);
}
IntegerSet IntegerSet::unite(const IntegerSet& other) const {
  return combine(other, Op::kUnion);
}
IntegerSet IntegerSet::intersect(const IntegerSet& other) const {
  return combine(other, Op::kIntersection);
}
IntegerSet IntegerSet::minus(const IntegerSet& other) const {
  return combine(other, Op::kDifference);
}
IntegerSet IntegerSet::symmetric_difference(const IntegerSet& other) const {
  return combine(other, Op::kSymmetricDifference);
}

IntegerSet IntegerSet::without_prefix(Element n) const {
  if (is_finite()) {
    std::vector<Element> kept(std::upper_bound(elements_.begin(), elements_.end(), n),
                              elements_.end());
    return finite(std::move(kept));
  }
  const Element threshold = std::max(threshold_, n + 1);
  std::vector<bool> below(threshold - 1);
  for (Element k = n + 1; k < threshold; ++k) below[k - 1] = contains(k);
  return canonicalize(below, threshold, residue_mask_);
}

IntegerSet IntegerSet::restricted_to(Element n) const {
  if (is_finite()) {
    return finite(std::vector<Element>(elements_.begin(),
                                       std::upper_bound(elements_.begin(), elements_.end(), n)));
  }
  std::vector<Element> v;
  for (Element k = 1; k <= n; ++k) {
    if (contains(k)) v.push_back(k);
  }
  return finite(std::move(v));
}

bool IntegerSet::is_subset_of(const IntegerSet& other) const {
  return minus(other).is_empty();
}

std::string IntegerSet::describe() const {
  if (is_finite()) return "{" + join(elements_, 12) + "}";
  std::ostringstream os;
  os << "{n : n mod " << period_ << " in {" << join(residues_, 12) << "}}";
  if (!exceptions_in_.empty()) os << " + {" << join(exceptions_in_, 12) << "}";
  if (!exceptions_out_.empty()) os << " - {" << join(exceptions_out_, 12) << "}";
  return os.str();
}

bool RuleSet::contains(Element n) const {
  switch (rule) {
    case SparseRule::kPowersOfTwo:
      return n >= 2 && (n & (n - 1)) == 0;
    case SparseRule::kSquares: {
      const auto root = static_cast<Element>(std::sqrt(static_cast<double>(n)));
      for (Element r = root > 0 ? root - 1 : 0; r <= root + 1; ++r) {
        if (r > 0 && r * r == n) return true;
      }
      return false;
    }
  }
  return false;
}

Element RuleSet::count_up_to(Element n) const {
  Element count = 0;
  switch (rule) {
    case SparseRule::kPowersOfTwo:
      for (Element p = 2; p <= n; p *= 2) ++count;
      return count;
    case SparseRule::kSquares:
      for (Element k = 1; k * k <= n; ++k) ++count;
      return count;
  }
  return count;
}

std::string RuleSet::name() const {
  switch (rule) {
    case SparseRule::kPowersOfTwo:
      return "powers-of-two";
    case SparseRule::kSquares:
      return "squares";
  }
  return "unknown";
}

IntegerSet RuleSet::restricted_to(Element n) const {
  std::vector<Element> v;
  switch (rule) {
    case SparseRule::kPowersOfTwo:
      for (Element p = 2; p <= n; p *= 2) v.push_back(p);
      break;
    case SparseRule::kSquares:
      for (Element k = 1; k * k <= n; ++k) v.push_back(k * k);
      break;
  }
  return IntegerSet::finite(std::move(v));
}

Truncation::Truncation(Element horizon, std::vector<Element> elements)
    : horizon_(horizon), elements_(std::move(elements)) {
  if (horizon_ == 0) throw std::invalid_argument("truncation horizon must be positive");
  sort_unique(elements_);
  if (!elements_.empty() && (elements_.front() == 0 || elements_.back() > horizon_)) {
    throw std::invalid_argument("truncated elements must lie in [1, horizon]");
  }
}

bool Truncation::contains(Element n) const { return sorted_contains(elements_, n); }

Element Truncation::count_up_to(Element n) const { return count_le(elements_, n); }

IntegerSet Truncation::restricted_to(Element n) const {
  return IntegerSet::finite(std::vector<Element>(
      elements_.begin(), std::upper_bound(elements_.begin(), elements_.end(), n)));
}

IntegerSet restrict_to(const AnySet& set, Element n) {
  return std::visit([n](const auto& s) { return s.restricted_to(n); }, set);
}

Truncation block_set(Element horizon) {
  std::vector<Element> v;
  for (Element lo = 1; lo <= horizon; lo *= 4) {
    for (Element k = lo; k < 2 * lo && k <= horizon; ++k) v.push_back(k);
    if (lo > horizon / 4) break;
  }
  return Truncation(horizon, std::move(v));
}

std::optional<AnySet> set_fixture(std::string_view name, Element horizon) {
  if (name == "empty") return IntegerSet{};
  if (name == "naturals") return IntegerSet::naturals();
  if (name == "evens") return IntegerSet::multiples_of(2);
  if (name == "odds") return IntegerSet::residue_class(1, 2);
  if (name == "block-set") return block_set(horizon);
  if (name == "powers-of-two") return RuleSet{SparseRule::kPowersOfTwo};
  if (name == "squares") return RuleSet{SparseRule::kSquares};
  constexpr std::string_view kMultiples = "multiples-of-";
  if (name.starts_with(kMultiples)) {
    const auto k = parse_element(name.substr(kMultiples.size()));
    if (!k || *k == 0) return std::nullopt;
    return IntegerSet::multiples_of(*k);
  }
  constexpr std::string_view kInterval = "interval-";
  if (name.starts_with(kInterval)) {
    const auto rest = name.substr(kInterval.size());
    const auto dash = rest.find('-');
    if (dash == std::string_view::npos) return std::nullopt;
    const auto lo = parse_element(rest.substr(0, dash));
    const auto hi = parse_element(rest.substr(dash + 1));
    if (!lo || !hi || *lo == 0) return std::nullopt;
    return IntegerSet::interval(*lo, *hi);
  }
  return std::nullopt;
}

}  // namespace nonadd
