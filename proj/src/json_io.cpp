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

#include "nonadd/json_io.hpp"

#include <charconv>
#include <stdexcept>

namespace nonadd {

namespace {

[[noreturn]] void fail(const std::string& what) { throw std::invalid_argument(what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

Element element_from_json(const Json& j) {
  if (j.is_number_unsigned()) return j.get<Element>();
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0) {
    return static_cast<Element>(j.get<std::int64_t>());
  }
  fail("expected a nonnegative integer, got " + j.dump());
}

std::vector<Element> elements_from_json(const Json& j) {
  if (!j.is_array()) fail("expected an array of integers, got " + j.dump());
  std::vector<Element> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(element_from_json(e));
  return out;
}

std::vector<Element> optional_elements(const Json& j, const char* key) {
  return j.contains(key) ? elements_from_json(j.at(key)) : std::vector<Element>{};
}

Json atom_mask_json(AtomMask mask, std::size_t atoms) {
  Json out = Json::array();
  for (std::size_t k = 0; k < atoms; ++k) {
    if ((mask >> k) & 1U) out.push_back(k);
  }
  return out;
}

}  // namespace

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  fail("expected a rational string \"p/q\", got " + j.dump());
}

Json to_json(const Rational& q) { return q.str(); }

Vector vector_from_json(const Json& j) {
  if (!j.is_array()) fail("expected an array of rationals, got " + j.dump());
  Vector out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(rational_from_json(e));
  return out;
}

Json to_json(const Vector& x) {
  Json out = Json::array();
  for (const auto& v : x) out.push_back(v.str());
  return out;
}

AnySet set_from_json(const Json& j) {
  if (!j.is_object() || j.size() != 1) {
    fail("a set is an object with one of \"finite\", \"ep\", \"truncated\", \"rule\"");
  }
  if (j.contains("finite")) return IntegerSet::finite(elements_from_json(j.at("finite")));
  if (j.contains("ep")) {
    const Json& ep = j.at("ep");
    return IntegerSet::eventually_periodic(
        element_from_json(field(ep, "n0")), element_from_json(field(ep, "p")),
        elements_from_json(field(ep, "res")), optional_elements(ep, "exc_in"),
        optional_elements(ep, "exc_out"));
  }
  if (j.contains("truncated")) {
    const Json& t = j.at("truncated");
    return Truncation(element_from_json(field(t, "horizon")),
                      elements_from_json(field(t, "elements")));
  }
  if (j.contains("rule")) {
    const Json& r = j.at("rule");
    if (r == "powers-of-two") return RuleSet{SparseRule::kPowersOfTwo};
    if (r == "squares") return RuleSet{SparseRule::kSquares};
    fail("unknown rule " + r.dump());
  }
  fail("unknown set encoding " + j.dump());
}

IntegerSet integer_set_from_json(const Json& j) {
  AnySet set = set_from_json(j);
  if (auto* exact = std::get_if<IntegerSet>(&set)) return std::move(*exact);
  fail("an exact set (finite or ep) is required here");
}

Json to_json(const IntegerSet& set) {
  if (set.is_finite()) return Json{{"finite", set.elements()}};
  return Json{{"ep",
               {{"n0", set.threshold()},
                {"p", set.period()},
                {"res", set.residues()},
                {"exc_in", set.exceptions_in()},
                {"exc_out", set.exceptions_out()}}}};
}

Json to_json(const AnySet& set) {
  if (const auto* s = std::get_if<IntegerSet>(&set)) return to_json(*s);
  if (const auto* r = std::get_if<RuleSet>(&set)) return Json{{"rule", r->name()}};
  const auto& t = std::get<Truncation>(set);
  return Json{{"truncated", {{"horizon", t.horizon()}, {"elements", t.elements()}}}};
}

IdealSpec ideal_from_json(const Json& j) {
  const Json& kind = field(j, "kind");
  if (kind == "fin") return IdealSpec::fin();
  if (kind == "density") return IdealSpec::density_zero();
  if (kind == "summable") {
    WeightRule rule;
    if (j.contains("weights")) {
      const Json& w = j.at("weights");
      if (w == "harmonic") {
        rule.kind = WeightRule::Kind::kHarmonic;
      } else if (w == "constant") {
        rule.kind = WeightRule::Kind::kConstant;
      } else {
        fail("summable weights are \"harmonic\" (scale/a) or \"constant\", got " + w.dump());
      }
    }
    if (j.contains("scale")) rule.scale = rational_from_json(j.at("scale"));
    return IdealSpec::summable(rule);
  }
  if (kind == "exh") {
    const std::string phi_name = j.contains("phi") ? j.at("phi").get<std::string>() : "density-sup";
    SubmeasurePtr phi = submeasure_by_name(phi_name);
    const Rational normalization =
        j.contains("normalization") ? rational_from_json(j.at("normalization")) : Rational(1);
    return IdealSpec::exh(std::move(phi), normalization);
  }
  fail("unknown ideal kind " + kind.dump());
}

Json to_json(const IdealSpec& ideal) {
  switch (ideal.kind()) {
    case IdealSpec::Kind::kFin:
      return Json{{"kind", "fin"}};
    case IdealSpec::Kind::kDensityZero:
      return Json{{"kind", "density"}};
    case IdealSpec::Kind::kSummable:
      return Json{{"kind", "summable"},
                  {"weights", ideal.weights().kind == WeightRule::Kind::kHarmonic ? "harmonic"
                                                                                   : "constant"},
                  {"scale", ideal.weights().scale.str()}};
    case IdealSpec::Kind::kExh:
      return Json{{"kind", "exh"},
                  {"phi", ideal.submeasure()->name()},
                  {"normalization", ideal.normalization().str()}};
  }
  return Json();
}

FiniteCapacity capacity_from_json(const Json& j) {
  const Json& nj = field(j, "n");
  if (!nj.is_number_integer()) fail("capacity \"n\" must be an integer");
  const auto n = nj.get<std::int64_t>();
  if (n < 1 || n > FiniteCapacity::kMaxGroundSize) {
    fail("capacity ground size must lie in [1, " +
         std::to_string(FiniteCapacity::kMaxGroundSize) + "]");
  }
  const Json& values = field(j, "values");
  if (!values.is_object()) fail("capacity \"values\" must be an object keyed by bitmask");
  const std::size_t size = std::size_t{1} << n;
  std::vector<std::optional<Rational>> table(size);
  for (const auto& [key, value] : values.items()) {
    std::size_t mask = 0;
    const auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), mask);
    if (ec != std::errc() || ptr != key.data() + key.size() || mask >= size) {
      fail("bad subset key \"" + key + "\" for n = " + std::to_string(n));
    }
    table[mask] = rational_from_json(value);
  }
  std::vector<Rational> out;
  out.reserve(size);
  for (std::size_t mask = 0; mask < size; ++mask) {
    if (!table[mask]) fail("capacity table has no entry for subset " + std::to_string(mask));
    out.push_back(*table[mask]);
  }
  return FiniteCapacity(static_cast<int>(n), std::move(out));
}

Json to_json(const FiniteCapacity& capacity) {
  Json values = Json::object();
  for (std::size_t mask = 0; mask < capacity.values().size(); ++mask) {
    values[std::to_string(mask)] = capacity.values()[mask].str();
  }
  return Json{{"n", capacity.ground_size()}, {"values", std::move(values)}};
}

Json to_json(const ValidationReport& report) {
  Json violations = Json::array();
  for (const auto& v : report.violations) violations.push_back(v.describe());
  return Json{{"ok", report.ok()}, {"violations", std::move(violations)}};
}

CoordinateIdeal coordinate_ideal_from_json(const Json& j) {
  return CoordinateIdeal(element_from_json(field(j, "n")), [&] {
    std::vector<std::size_t> k;
    for (Element e : elements_from_json(field(j, "K"))) k.push_back(e);
    return k;
  }());
}

Json to_json(const CoordinateIdeal& ideal) {
  return Json{{"n", ideal.dimension()}, {"K", ideal.zero_set()}};
}

Json to_json(const DensityValue& d) {
  Json out{{"value", d.value.str()}, {"exact", d.exact}};
  if (!d.exact) out["horizon"] = d.horizon;
  return out;
}

Json to_json(const MembershipVerdict& v) {
  Json out{{"verdict", to_string(v.verdict)}, {"exact", v.exact()}, {"reason", v.reason}};
  if (v.estimate) out["estimate"] = v.estimate->str();
  if (v.horizon) out["horizon"] = v.horizon;
  return out;
}

Json to_json(const ExhNormResult& r) {
  Json values = Json::array();
  for (const auto& v : r.values) values.push_back(v.str());
  Json out{{"schedule", r.schedule}, {"values", std::move(values)}, {"exact", r.exact}};
  if (!r.exact) out["window"] = r.window;
  out["estimate"] = r.estimate().str();
  if (r.naturals_mass) out["naturals_mass"] = r.naturals_mass->str();
  if (r.normalized) {
    Json normalized = Json::array();
    for (const auto& v : *r.normalized) normalized.push_back(v.str());
    out["normalized"] = std::move(normalized);
  }
  return out;
}

Json to_json(const PropertyResult& r) {
  return Json{{"property", r.property},
              {"pass", r.pass},
              {"witness", r.pass ? Json() : Json(r.witness)},
              {"checked", r.checked},
              {"failures", r.failures}};
}

Json to_json(const PropertyReport& r) {
  Json out = Json::array();
  for (const auto& result : r.results) out.push_back(to_json(result));
  return out;
}

Json to_json(const RoundtripReport& r) {
  Json out;
  out["capacity"] = r.capacity ? to_json(*r.capacity) : Json();
  out["aborted"] = r.aborted.empty() ? Json() : Json(r.aborted);
  out["validation"] = to_json(r.validation);
  out["properties"] = to_json(r.properties);
  out["invariance"] = to_json(r.invariance);
  out["residual_max"] = r.capacity ? Json(r.residual_max.str()) : Json();
  out["residual_witness"] = r.residual_witness.empty() ? Json() : Json(r.residual_witness);
  out["trials"] = r.trials;
  out["ok"] = r.ok();
  return out;
}

Json to_json(const Subalgebra& algebra) {
  Json atoms = Json::array();
  for (const auto& atom : algebra.atoms()) {
    Json a{{"set", to_json(atom.set)}, {"null", atom.null()}};
    if (atom.flag == NullFlag::kEstimate) a["estimate"] = true;
    atoms.push_back(std::move(a));
  }
  return atoms;
}

Json to_json(const RepresentationCertificate& cert, const Subalgebra& algebra) {
  Json out;
  out["atoms"] = to_json(algebra);
  out["status"] = to_string(cert.status);
  if (cert.rho) {
    Json rho = to_json(cert.rho->capacity);
    rho["atoms"] = cert.rho->atoms;
    rho["validation"] = to_json(cert.rho->validation);
    rho["exact"] = cert.rho->exact;
    rho["exhaustive"] = cert.rho->exhaustive;
    out["rho"] = std::move(rho);
  } else {
    out["rho"] = Json();
  }
  if (cert.counterexample) {
    const auto& w = *cert.counterexample;
    out["counterexample"] = Json::array({to_json(w.set_a), to_json(w.set_b)});
    out["counterexample_atoms"] = Json::array(
        {atom_mask_json(w.a, algebra.size()), atom_mask_json(w.b, algebra.size())});
    out["counterexample_values"] = Json::array({w.value_a.str(), w.value_b.str()});
  } else {
    out["counterexample"] = Json();
  }
  out["residual_max"] = cert.rho ? Json(cert.rho->residual_max.str()) : Json();
  return out;
}

Json to_json(const FunctionReport& r) {
  return Json{{"lhs", r.lhs.str()}, {"rhs", r.rhs.str()}, {"equal", r.equal}, {"exact", r.exact}};
}

}  // namespace nonadd
