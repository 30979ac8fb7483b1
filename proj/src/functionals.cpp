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

#include "nonadd/functionals.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

#include "nonadd/capacity.hpp"

namespace nonadd {

namespace {

Vector restrict(const Vector& x, const std::vector<std::size_t>& k) {
  Vector out;
  out.reserve(k.size());
  for (std::size_t i : k) out.push_back(x.at(i - 1));
  return out;
}

Rational min_of(const Vector& x) { return *std::min_element(x.begin(), x.end()); }
Rational max_of(const Vector& x) { return *std::max_element(x.begin(), x.end()); }

}  // namespace

std::vector<std::string> functional_names() {
  return {"choquet-random", "min",  "max", "dirac-j", "linear", "midrange-counterexample",
          "two-prior-max"};
}

std::optional<RegisteredFunctional> functional_by_name(const std::string& name, std::size_t n,
                                                       std::vector<std::size_t> k,
                                                       std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("dimension must be positive");
  if (k.empty()) {
    k.resize(n);
    std::iota(k.begin(), k.end(), std::size_t{1});
  }
  std::sort(k.begin(), k.end());
  k.erase(std::unique(k.begin(), k.end()), k.end());
  if (k.front() < 1 || k.back() > n) {
    throw std::invalid_argument("K must be a subset of {1, ..., " + std::to_string(n) + "}");
  }

  RegisteredFunctional out{name, {}, true, {}};
  if (name == "choquet-random") {
    const FiniteCapacity nu = random_capacity(static_cast<int>(k.size()), seed);
    out.description = "Choquet integral against random_capacity(" + std::to_string(k.size()) +
                      ", " + std::to_string(seed) + ") on K";
    out.functional = [nu, k](const Vector& x) { return choquet_integral(restrict(x, k), nu); };
  } else if (name == "min") {
    out.description = "min over K";
    out.functional = [k](const Vector& x) { return min_of(restrict(x, k)); };
  } else if (name == "max") {
    out.description = "max over K";
    out.functional = [k](const Vector& x) { return max_of(restrict(x, k)); };
  } else if (name.starts_with("dirac-")) {
    std::size_t j = k.front();
    const std::string arg = name.substr(6);
    if (arg != "j") {
      const auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), j);
      if (ec != std::errc() || ptr != arg.data() + arg.size()) return std::nullopt;
      if (!std::binary_search(k.begin(), k.end(), j)) {
        throw std::invalid_argument("dirac coordinate " + arg + " is not in K");
      }
    }
    out.description = "x_" + std::to_string(j);
    out.functional = [j](const Vector& x) { return x.at(j - 1); };
  } else if (name == "linear") {
    out.description = "mean over K";
    const Rational weight(1, static_cast<std::int64_t>(k.size()));
    out.functional = [k, weight](const Vector& x) {
      Rational total(0);
      for (const auto& v : restrict(x, k)) total += v;
      return weight * total;
    };
  } else if (name == "midrange-counterexample") {
    out.description = "max over K + min over K";
    out.conforming = false;
    out.functional = [k](const Vector& x) {
      const Vector y = restrict(x, k);
      return max_of(y) + min_of(y);
    };
  } else if (name == "two-prior-max") {
    if (k.size() < 3) throw std::invalid_argument("two-prior-max needs |K| >= 3");
    const std::size_t a = k[0];
    const std::size_t b = k[1];
    const std::size_t c = k[2];
    out.description = "max(x_" + std::to_string(a) + ", (x_" + std::to_string(b) + " + x_" +
                      std::to_string(c) + ") / 2)";
    out.conforming = false;
    out.functional = [a, b, c](const Vector& x) {
      return max(x.at(a - 1), Rational(1, 2) * (x.at(b - 1) + x.at(c - 1)));
    };
  } else {
    return std::nullopt;
  }
  return out;
}

}  // namespace nonadd
