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

// Command-line front end. Every command prints one JSON document.
//
// Exit codes: 0 success, 1 property failure of a conforming functional,
// 2 input error, 3 non-invariance certificate.

#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nonadd/capacity.hpp"
#include "nonadd/choquet.hpp"
#include "nonadd/functionals.hpp"
#include "nonadd/ideals.hpp"
#include "nonadd/json_io.hpp"
#include "nonadd/representation.hpp"
#include "nonadd/riesz.hpp"
#include "nonadd/subalgebra.hpp"

namespace {

using nonadd::Json;

constexpr int kPropertyFailure = 1;
constexpr int kInputError = 2;
constexpr int kCounterexample = 3;

constexpr const char* kSchemas = R"(Arguments naming a set, ideal, capacity or vector accept a file path,
inline JSON, or a fixture name.

  set         {"finite":[1,2,3]}
              {"ep":{"n0":1,"p":2,"res":[0],"exc_in":[],"exc_out":[]}}
              {"truncated":{"horizon":4096,"elements":[...]}}
              {"rule":"powers-of-two"|"squares"}
              names: empty naturals evens odds multiples-of-<k> interval-<a>-<b>
                     block-set powers-of-two squares
  ideal       {"kind":"fin"} {"kind":"density"}
              {"kind":"summable","weights":"harmonic"|"constant","scale":"1"}
              {"kind":"exh","phi":"density-sup","normalization":"1"}
              names: fin density summable summable-constant exh
  capacity    {"n":2,"values":{"0":"0","1":"1","2":"0","3":"1"}}
              names: uniform-<n> min-<n> max-<n> random-<n> additive-<n> dirac-<n>-<j>
  set capacity (represent)
              names: upper-density lower-density exh-norm ideal-indicator principal-<m>
              {"kind":"principal","m":3}
              {"kind":"mixture","components":[{"weight":"1/2","capacity":"upper-density"},...]}
  generators  JSON array of sets, or comma-separated set names
  vector      ["1/2","3"] or 1/2,3
  rationals   strings "p" or "p/q"

Exit codes: 0 success, 1 property failure of a conforming functional,
2 input error, 3 non-invariance certificate.)";

struct Global {
  std::uint64_t seed = 0;
  int trials = 256;
  std::string schedule;
  int indent = 2;
  std::string output;
};

std::optional<Json> json_argument(const std::string& arg) {
  if (std::filesystem::is_regular_file(arg)) {
    std::ifstream in(arg);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return Json::parse(buffer.str());
  }
  if (!arg.empty() && (arg.front() == '{' || arg.front() == '[' || arg.front() == '"')) {
    return Json::parse(arg);
  }
  return std::nullopt;
}

std::optional<std::int64_t> integer_suffix(const std::string& name, const std::string& prefix) {
  if (!name.starts_with(prefix)) return std::nullopt;
  std::int64_t value = 0;
  const char* first = name.data() + prefix.size();
  const char* last = name.data() + name.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) return std::nullopt;
  return value;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<nonadd::Element> schedule_of(const Global& g, nonadd::Element horizon) {
  if (g.schedule.empty()) return nonadd::powers_of_two_schedule(horizon);
  std::vector<nonadd::Element> out;
  for (const auto& item : split(g.schedule, ',')) {
    const auto v = integer_suffix(item, "");
    if (!v || *v < 1) throw std::invalid_argument("bad schedule entry \"" + item + "\"");
    out.push_back(static_cast<nonadd::Element>(*v));
  }
  if (out.empty()) throw std::invalid_argument("empty schedule");
  return out;
}

nonadd::AnySet resolve_set(const std::string& arg, nonadd::Element horizon) {
  if (auto j = json_argument(arg)) return nonadd::set_from_json(*j);
  if (auto s = nonadd::set_fixture(arg, horizon)) return *s;
  throw std::invalid_argument("unknown set \"" + arg + "\"");
}

nonadd::IntegerSet resolve_exact_set(const std::string& arg) {
  nonadd::AnySet set = resolve_set(arg, nonadd::kDefaultHorizon);
  if (auto* exact = std::get_if<nonadd::IntegerSet>(&set)) return *exact;
  throw std::invalid_argument("\"" + arg + "\" is not a finite or eventually periodic set");
}

nonadd::IdealSpec resolve_ideal(const std::string& arg) {
  if (auto j = json_argument(arg)) return nonadd::ideal_from_json(*j);
  if (arg == "fin") return nonadd::IdealSpec::fin();
  if (arg == "density") return nonadd::IdealSpec::density_zero();
  if (arg == "summable") return nonadd::IdealSpec::summable();
  if (arg == "summable-constant") {
    return nonadd::IdealSpec::summable({nonadd::WeightRule::Kind::kConstant, nonadd::Rational(1)});
  }
  if (arg == "exh") return nonadd::IdealSpec::exh(nonadd::density_sup_submeasure());
  throw std::invalid_argument("unknown ideal \"" + arg + "\"");
}

nonadd::FiniteCapacity resolve_capacity(const std::string& arg, std::uint64_t seed) {
  if (auto j = json_argument(arg)) return nonadd::capacity_from_json(*j);
  const auto size = [](std::int64_t n) {
    if (n < 1 || n > nonadd::FiniteCapacity::kMaxGroundSize) {
      throw std::invalid_argument("ground size out of range");
    }
    return static_cast<int>(n);
  };
  if (auto n = integer_suffix(arg, "uniform-")) return nonadd::uniform_capacity(size(*n));
  if (auto n = integer_suffix(arg, "min-")) return nonadd::min_capacity(size(*n));
  if (auto n = integer_suffix(arg, "max-")) return nonadd::max_capacity(size(*n));
  if (auto n = integer_suffix(arg, "random-")) return nonadd::random_capacity(size(*n), seed);
  if (auto n = integer_suffix(arg, "additive-")) {
    return nonadd::random_additive_capacity(size(*n), seed);
  }
  if (arg.starts_with("dirac-")) {
    const auto parts = split(arg.substr(6), '-');
    if (parts.size() == 2) {
      const auto n = integer_suffix(parts[0], "");
      const auto j = integer_suffix(parts[1], "");
      if (n && j && *j >= 1 && *j <= *n) return nonadd::dirac_capacity(size(*n), static_cast<int>(*j));
    }
  }
  throw std::invalid_argument("unknown capacity \"" + arg + "\"");
}

nonadd::SetCapacity set_capacity_from_name(const std::string& name, const nonadd::IdealSpec& ideal) {
  if (name == "upper-density") return nonadd::upper_density_capacity();
  if (name == "lower-density") return nonadd::lower_density_capacity();
  if (name == "ideal-indicator") return nonadd::ideal_indicator(ideal);
  if (name == "exh-norm") {
    if (ideal.kind() == nonadd::IdealSpec::Kind::kExh) return nonadd::exh_norm_capacity(ideal);
    return nonadd::exh_norm_capacity(nonadd::IdealSpec::exh(nonadd::density_sup_submeasure()));
  }
  if (auto m = integer_suffix(name, "principal-"); m && *m >= 1) {
    return nonadd::principal_mu(static_cast<nonadd::Element>(*m));
  }
  throw std::invalid_argument("unknown set capacity \"" + name + "\"");
}

nonadd::SetCapacity set_capacity_from_json(const Json& j, const nonadd::IdealSpec& ideal) {
  if (j.is_string()) return set_capacity_from_name(j.get<std::string>(), ideal);
  if (!j.is_object() || !j.contains("kind")) {
    throw std::invalid_argument("a set capacity is a name or an object with \"kind\"");
  }
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "principal") {
    const auto m = j.at("m").get<std::int64_t>();
    if (m < 1) throw std::invalid_argument("principal needs m >= 1");
    return nonadd::principal_mu(static_cast<nonadd::Element>(m));
  }
  if (kind == "ideal-indicator" && j.contains("ideal")) {
    return nonadd::ideal_indicator(nonadd::ideal_from_json(j.at("ideal")));
  }
  if (kind == "mixture") {
    std::vector<std::pair<nonadd::Rational, nonadd::SetCapacity>> components;
    for (const auto& c : j.at("components")) {
      components.emplace_back(nonadd::rational_from_json(c.at("weight")),
                              set_capacity_from_json(c.at("capacity"), ideal));
    }
    return nonadd::mixture(std::move(components));
  }
  return set_capacity_from_name(kind, ideal);
}

nonadd::SetCapacity resolve_set_capacity(const std::string& arg, const nonadd::IdealSpec& ideal) {
  if (auto j = json_argument(arg)) return set_capacity_from_json(*j, ideal);
  return set_capacity_from_name(arg, ideal);
}

std::vector<nonadd::IntegerSet> resolve_generators(const std::string& arg) {
  std::vector<nonadd::IntegerSet> out;
  if (auto j = json_argument(arg)) {
    if (!j->is_array()) throw std::invalid_argument("generators must be a JSON array of sets");
    for (const auto& s : *j) out.push_back(nonadd::integer_set_from_json(s));
    return out;
  }
  for (const auto& name : split(arg, ',')) out.push_back(resolve_exact_set(name));
  return out;
}

nonadd::Vector resolve_vector(const std::string& arg) {
  if (auto j = json_argument(arg)) return nonadd::vector_from_json(*j);
  nonadd::Vector out;
  for (const auto& item : split(arg, ',')) out.push_back(nonadd::Rational::parse(item));
  return out;
}

std::vector<std::size_t> parse_k(const std::string& arg) {
  std::vector<std::size_t> out;
  for (const auto& item : split(arg, ',')) {
    const auto v = integer_suffix(item, "");
    if (!v || *v < 1) throw std::invalid_argument("bad coordinate \"" + item + "\" in K");
    out.push_back(static_cast<std::size_t>(*v));
  }
  return out;
}

void emit(const Json& out, const Global& g) {
  const std::string text = out.dump(g.indent) + "\n";
  if (g.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(g.output, std::ios::binary);
  if (!file) throw std::invalid_argument("cannot write " + g.output);
  file << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Choquet integrals, ideals on N, and capacity representations"};
  app.footer(kSchemas);
  app.require_subcommand(1);
  app.fallthrough();

  Global g;
  app.add_option("--seed", g.seed, "Seed for random capacities and trial vectors");
  app.add_option("--trials", g.trials, "Randomized trials")->check(CLI::NonNegativeNumber);
  app.add_option("--schedule", g.schedule, "Comma-separated increasing horizon schedule");
  app.add_option("--json-indent", g.indent, "JSON indentation; -1 for one line");
  app.add_option("-o,--output", g.output, "Write the JSON document here instead of stdout");

  int exit_code = 0;

  // density
  std::string density_set;
  std::string density_mode = "upper";
  nonadd::Element density_horizon = nonadd::kDefaultHorizon;
  auto* density = app.add_subcommand("density", "Upper or lower asymptotic density -> {value, exact}");
  density->add_option("set", density_set, "Set")->required();
  density->add_option("--mode", density_mode, "upper | lower")
      ->check(CLI::IsMember({"upper", "lower"}));
  density->add_option("--horizon", density_horizon, "Horizon for truncated sets")
      ->check(CLI::PositiveNumber);
  density->callback([&] {
    const nonadd::AnySet set = resolve_set(density_set, density_horizon);
    const auto schedule = schedule_of(g, density_horizon);
    const nonadd::DensityValue d = density_mode == "upper" ? nonadd::upper_density(set, schedule)
                                                           : nonadd::lower_density(set, schedule);
    emit(nonadd::to_json(d), g);
  });

  // ideal-member
  std::string member_ideal;
  std::string member_set;
  auto* member = app.add_subcommand("ideal-member", "Membership verdict in | out | estimate");
  member->add_option("ideal", member_ideal, "Ideal")->required();
  member->add_option("set", member_set, "Set")->required();
  member->callback([&] {
    const nonadd::IdealSpec ideal = resolve_ideal(member_ideal);
    const nonadd::AnySet set = resolve_set(member_set, nonadd::kDefaultHorizon);
    Json out{{"ideal", ideal.name()}, {"set", nonadd::to_json(set)}};
    out.update(nonadd::to_json(nonadd::member(ideal, set)));
    emit(out, g);
  });

  // symm-diff
  std::string sd_ideal;
  std::string sd_a;
  std::string sd_b;
  auto* symm = app.add_subcommand("symm-diff", "Is A symmetric-difference B in the ideal?");
  symm->add_option("ideal", sd_ideal, "Ideal")->required();
  symm->add_option("a", sd_a, "Exact set A")->required();
  symm->add_option("b", sd_b, "Exact set B")->required();
  symm->callback([&] {
    const auto verdict = nonadd::symm_diff_in_ideal(resolve_ideal(sd_ideal), resolve_exact_set(sd_a),
                                                    resolve_exact_set(sd_b));
    Json out{{"difference", nonadd::to_json(verdict.difference)}};
    out.update(nonadd::to_json(verdict.membership));
    emit(out, g);
  });

  // exh-norm
  std::string exh_phi;
  std::string exh_set;
  nonadd::Element exh_window = 0;
  auto* exh = app.add_subcommand("exh-norm", "phi(A \\ [1,n]) along the schedule");
  exh->add_option("phi", exh_phi, "Submeasure: density-sup | geometric")->required();
  exh->add_option("set", exh_set, "Set")->required();
  exh->add_option("--window", exh_window, "Evaluation window for inexact sets (0: 4x last)");
  exh->callback([&] {
    const nonadd::SubmeasurePtr phi = nonadd::submeasure_by_name(exh_phi);
    const auto schedule = schedule_of(g, nonadd::kDefaultHorizon);
    const nonadd::AnySet set = resolve_set(exh_set, schedule.back());
    Json out{{"phi", phi->name()}};
    out.update(nonadd::to_json(nonadd::exh_norm(*phi, set, schedule, exh_window)));
    emit(out, g);
  });

  // choquet
  std::string ch_capacity;
  std::string ch_vector;
  auto* choquet = app.add_subcommand("choquet", "Choquet integral of a vector -> \"p/q\"");
  choquet->add_option("capacity", ch_capacity, "Capacity")->required();
  choquet->add_option("vector", ch_vector, "Vector")->required();
  choquet->callback([&] {
    const nonadd::FiniteCapacity nu = resolve_capacity(ch_capacity, g.seed);
    if (const auto report = nonadd::validate(nu); !report.ok()) {
      throw std::invalid_argument("not a normalized capacity: " +
                                  report.violations.front().describe());
    }
    emit(nonadd::choquet_integral(resolve_vector(ch_vector), nu).str(), g);
  });

  // comonotone
  std::string co_x;
  std::string co_y;
  auto* como = app.add_subcommand("comonotone", "Are two vectors comonotone?");
  como->add_option("x", co_x, "Vector")->required();
  como->add_option("y", co_y, "Vector")->required();
  como->callback([&] {
    emit(Json{{"comonotone", nonadd::comonotone(resolve_vector(co_x), resolve_vector(co_y))}}, g);
  });

  // properties and schmeidler share the functional registry.
  std::string fn_name;
  std::size_t fn_n = 0;
  std::string fn_k;
  std::string fn_list = "Functional: ";
  for (const auto& name : nonadd::functional_names()) fn_list += name + " ";

  auto* props = app.add_subcommand("properties", "Randomized check of the five functional properties");
  props->add_option("functional", fn_name, fn_list)->required();
  props->add_option("--n", fn_n, "Dimension")->required()->check(CLI::PositiveNumber);
  props->add_option("--K", fn_k, "Coordinates the functional reads (default all)");
  props->callback([&] {
    const auto f = nonadd::functional_by_name(fn_name, fn_n, parse_k(fn_k), g.seed);
    if (!f) throw std::invalid_argument("unknown functional \"" + fn_name + "\"");
    const nonadd::PropertyReport report = nonadd::functional_properties(
        f->functional, static_cast<int>(fn_n), nonadd::HarnessOptions{g.trials, g.seed, 1});
    emit(Json{{"functional", f->name},
              {"description", f->description},
              {"conforming", f->conforming},
              {"n", fn_n},
              {"trials", g.trials},
              {"seed", g.seed},
              {"all_pass", report.all_pass()},
              {"properties", nonadd::to_json(report)}},
         g);
    if (f->conforming && !report.all_pass()) exit_code = kPropertyFailure;
  });

  std::string sch_name;
  std::size_t sch_n = 0;
  std::string sch_k;
  auto* schmeidler = app.add_subcommand(
      "schmeidler", "Recover nu(A) = V(1_A) on K and compare V with its Choquet form");
  schmeidler->add_option("functional", sch_name, fn_list)->required();
  schmeidler->add_option("--n", sch_n, "Dimension")->required()->check(CLI::PositiveNumber);
  schmeidler->add_option("--K", sch_k, "Zero set K of the coordinate ideal")->required();
  schmeidler->callback([&] {
    const nonadd::CoordinateIdeal ideal(sch_n, parse_k(sch_k));
    const auto f = nonadd::functional_by_name(sch_name, sch_n, ideal.zero_set(), g.seed);
    if (!f) throw std::invalid_argument("unknown functional \"" + sch_name + "\"");
    const nonadd::RoundtripReport report = nonadd::schmeidler_roundtrip(
        f->functional, ideal, nonadd::RoundtripOptions{g.trials, g.seed, g.trials, 1});
    Json out{{"functional", f->name},
             {"description", f->description},
             {"conforming", f->conforming},
             {"ideal", nonadd::to_json(ideal)},
             {"seed", g.seed}};
    out.update(nonadd::to_json(report));
    emit(out, g);
    if (f->conforming && !report.ok()) exit_code = kPropertyFailure;
  });

  // represent
  std::string rep_capacity;
  std::string rep_ideal;
  std::string rep_generators;
  auto* represent = app.add_subcommand(
      "represent", "Invariance check on a finite subalgebra: rho or a counterexample");
  represent->add_option("capacity", rep_capacity, "Set capacity")->required();
  represent->add_option("ideal", rep_ideal, "Ideal")->required();
  represent->add_option("generators", rep_generators, "Generators")->required();
  represent->callback([&] {
    const nonadd::IdealSpec ideal = resolve_ideal(rep_ideal);
    const nonadd::SetCapacity nu = resolve_set_capacity(rep_capacity, ideal);
    const auto algebra = nonadd::Subalgebra::build(resolve_generators(rep_generators), ideal);
    const auto cert = nonadd::represent(nu, algebra, g.seed);
    emit(nonadd::to_json(cert, algebra), g);
    if (cert.counterexample) exit_code = kCounterexample;
  });

  // represent-function
  std::string rf_capacity;
  std::string rf_ideal;
  std::string rf_generators;
  std::string rf_values;
  auto* rep_fn = app.add_subcommand(
      "represent-function",
      "Compare the Choquet integral of a step sequence with its integral against rho");
  rep_fn->add_option("capacity", rf_capacity, "Set capacity")->required();
  rep_fn->add_option("ideal", rf_ideal, "Ideal")->required();
  rep_fn->add_option("generators", rf_generators, "Generators")->required();
  rep_fn->add_option("values", rf_values, "One value per atom, in atom order")->required();
  rep_fn->callback([&] {
    const nonadd::IdealSpec ideal = resolve_ideal(rf_ideal);
    const nonadd::SetCapacity nu = resolve_set_capacity(rf_capacity, ideal);
    const auto algebra = nonadd::Subalgebra::build(resolve_generators(rf_generators), ideal);
    const nonadd::StepSequence x(algebra, resolve_vector(rf_values));
    const auto cert = nonadd::represent(nu, algebra, g.seed);
    if (!cert.rho) {
      emit(nonadd::to_json(cert, algebra), g);
      exit_code = kCounterexample;
      return;
    }
    Json out{{"atoms", nonadd::to_json(algebra)}, {"values", nonadd::to_json(x.values())}};
    out.update(nonadd::to_json(nonadd::represent_function(x, nu, *cert.rho)));
    emit(out, g);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return exit_code;
}
