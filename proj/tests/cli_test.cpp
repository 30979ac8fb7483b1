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

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <gtest/gtest.h>
#include <json.hpp>

namespace {

using Json = nlohmann::ordered_json;

struct Outcome {
  int code = -1;
  std::string out;
  [[nodiscard]] Json json() const { return Json::parse(out); }
};

std::string quote(const std::string& arg) {
  std::string out = "'";
  for (char c : arg) {
    if (c == '\'') {
      out += "'\\''";
    } else {
      out += c;
    }
  }
  return out + "'";
}

Outcome run(std::initializer_list<std::string> args) {
  std::string cmd = quote(NONADD_CLI);
  for (const auto& a : args) cmd += " " + quote(a);
  cmd += " 2>/dev/null";
  Outcome r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

Json props(const Outcome& r) { return r.json()["properties"]; }

const std::string kDiracOne = R"({"n":2,"values":{"0":"0","1":"1","2":"0","3":"1"}})";

TEST(CliDensityTest, Examples) {
  Outcome r = run({"density", "evens"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.json(), Json::parse(R"({"value":"1/2","exact":true})"));
  r = run({"density", R"({"finite":[1,5,9]})"});
  EXPECT_EQ(r.json(), Json::parse(R"({"value":"0","exact":true})"));
  r = run({"density", "block-set", "--horizon", "4096"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.json()["exact"], false);
  EXPECT_EQ(r.json()["value"], "1365/2048");
  r = run({"density", "block-set", "--horizon", "4096", "--mode", "lower"});
  EXPECT_EQ(r.json()["value"], "683/2048");
  EXPECT_EQ(run({"density", "{not json"}).code, 2);
  EXPECT_EQ(run({"density", "no-such-set"}).code, 2);
}

TEST(CliIdealTest, MembershipAndSymmDiff) {
  Outcome r = run({"ideal-member", "fin", "interval-1-5"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.json()["verdict"], "in");
  r = run({"ideal-member", "density", "evens"});
  EXPECT_EQ(r.json()["verdict"], "out");
  r = run({"ideal-member", "summable", "squares"});
  EXPECT_EQ(r.json()["verdict"], "in");
  r = run({"symm-diff", "fin", "evens", "multiples-of-4"});
  EXPECT_EQ(r.json()["verdict"], "out");
  r = run({"exh-norm", "density-sup", "evens"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.json()["estimate"], "1/2");
  EXPECT_EQ(run({"ideal-member", "ultra", "evens"}).code, 2);
}

TEST(CliChoquetTest, Examples) {
  Outcome r = run({"choquet", kDiracOne, "3,7"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.json(), Json("3"));
  EXPECT_EQ(run({"choquet", "min-3", R"(["5/2","5/2","5/2"])"}).json(), Json("5/2"));
  EXPECT_EQ(run({"choquet", "uniform-2", "0,1"}).json(), Json("1/2"));
  EXPECT_EQ(run({"choquet", kDiracOne, "1,2,3"}).code, 2);
  EXPECT_EQ(run({"choquet", R"({"n":1,"values":{"0":"0","1":"2"}})", "1"}).code, 2);
  EXPECT_EQ(run({"comonotone", "1,2", "2,1"}).json()["comonotone"], false);
  EXPECT_EQ(run({"comonotone", "1,2", "5,5"}).json()["comonotone"], true);
}

TEST(CliPropertiesTest, ExitCodes) {
  Outcome r = run({"properties", "choquet-random", "--n", "5"});
  ASSERT_EQ(r.code, 0);
  for (const auto& p : props(r)) EXPECT_TRUE(p["pass"].get<bool>()) << p.dump();
  r = run({"properties", "midrange-counterexample", "--n", "2"});
  EXPECT_EQ(r.code, 0);
  bool failed = false;
  for (const auto& p : props(r)) failed = failed || !p["pass"].get<bool>();
  EXPECT_TRUE(failed);
  r = run({"properties", "two-prior-max", "--n", "3"});
  EXPECT_EQ(r.code, 0);
  for (const auto& p : props(r)) {
    if (p["property"] == "unit-modular") {
      EXPECT_FALSE(p["pass"].get<bool>());
      EXPECT_TRUE(p["witness"].is_string());
    }
  }
  EXPECT_EQ(run({"properties", "nope", "--n", "2"}).code, 2);
}

TEST(CliSchmeidlerTest, RoundTrip) {
  Outcome r = run({"schmeidler", "dirac-2", "--n", "3", "--K", "1,2"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.json()["residual_max"], "0");
  r = run({"--trials", "32", "schmeidler", "choquet-random", "--n", "4", "--K", "1,3,4"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.json()["residual_max"], "0");
  EXPECT_EQ(run({"schmeidler", "dirac-5", "--n", "3", "--K", "1,2"}).code, 2);
}

TEST(CliRepresentTest, Examples) {
  Outcome r = run({"represent", "upper-density", "density", "evens"});
  ASSERT_EQ(r.code, 0);
  const Json rho = r.json()["rho"]["values"];
  EXPECT_EQ(rho["1"], "1/2");
  EXPECT_EQ(rho["2"], "1/2");
  EXPECT_EQ(rho["3"], "1");

  r = run({"represent", "principal-1", "fin", R"([{"finite":[1]}])"});
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(r.json()["status"], "not-invariant");
  EXPECT_EQ(r.json()["counterexample"], Json::parse(R"([{"finite":[1]},{"finite":[]}])"));

  r = run({"represent", "ideal-indicator", "fin", "interval-1-10"});
  ASSERT_EQ(r.code, 0);
  const Json cert = r.json();
  for (const auto& [key, value] : cert["rho"]["values"].items()) {
    EXPECT_TRUE(value == "0" || value == "1") << key;
  }

  r = run({"represent-function", "upper-density", "density", "evens", "2,1"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.json()["lhs"], "3/2");
  EXPECT_EQ(r.json()["rhs"], "3/2");
  EXPECT_EQ(run({"represent", "upper-density", "density", "squarez"}).code, 2);
}

TEST(CliDeterminismTest, RepeatedRunsMatch) {
  const std::initializer_list<std::string> cases[] = {
      {"--seed", "9", "properties", "choquet-random", "--n", "6"},
      {"--seed", "9", "schmeidler", "choquet-random", "--n", "5", "--K", "2,4"},
      {"--seed", "4", "choquet", "random-6", "1,2,3,4,5,6"},
  };
  for (const auto& args : cases) {
    const Outcome a = run(args);
    const Outcome b = run(args);
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out);
    EXPECT_FALSE(a.out.empty());
  }
}

}  // namespace
