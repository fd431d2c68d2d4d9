/* Copyright 2026 The wittc Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "wittc/cli.hpp"
#include "wittc/json_io.hpp"

using namespace wittc;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
  args.push_back("--json");
  const auto r = run(args);
  REQUIRE_MESSAGE(r.code == 0, r.err);
  return json::parse(r.out);
}

std::size_t count_lines(const std::string& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

}  // namespace

TEST_CASE("field-info") {
  const auto r = run({"field-info", "--q", "7"});
  CHECK(r.code == 0);
  CHECK(r.out.find("p = 7") != std::string::npos);
  CHECK(r.out.find("e = 1") != std::string::npos);
  CHECK(r.out.find("s = 3") != std::string::npos);
  CHECK(r.out.find("q mod 4 = 3") != std::string::npos);

  const auto j = run_json({"field-info", "--q", "3^2"});
  CHECK(j["p"] == 3);
  CHECK(j["e"] == 2);
  CHECK(j["q_mod_4"] == 1);
  CHECK(run_json({"field-info", "--q", "9"}) == j);
}

TEST_CASE("wittk-table") {
  const auto r = run({"wittk-table", "--q", "5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  const auto j = run_json({"wittk-table", "--q", "5"});
  CHECK(j["add"].size() == 4);
  CHECK(j["mul"].size() == 4);
  CHECK(j["add"][1][1] == "0");
  REQUIRE(j["bullets"].size() == 4);
  for (const auto& b : j["bullets"]) CHECK(b["passed"] == true);
  const auto j7 = run_json({"wittk-table", "--q", "7"});
  CHECK(j7["add"][1][1] == "e");
  CHECK(j7["add"][1][3] == "s");
}

TEST_CASE("form-diag") {
  const auto j = run_json({"form-diag", "--q", "7", "--gram", "0,1;1,0"});
  CHECK(j["diagonal"] == json::array({"2", "3"}));
  CHECK(j["determinant_class"] == "s");
  CHECK(j["witt_class"] == "0");

  const auto ext = run_json({"form-diag", "--q", "9", "--gram", "(0,1),0;0,1"});
  CHECK(ext["diagonal"].size() == 2);

  const auto bad = run({"form-diag", "--q", "5", "--gram", "1,2;3,1"});
  CHECK(bad.code == cli::kExitUsage);
  CHECK(bad.err.find("not symmetric") != std::string::npos);
  CHECK(count_lines(bad.err) == 1);
  const auto degenerate = run({"form-diag", "--q", "5", "--gram", "0,0;0,0"});
  CHECK(degenerate.code == cli::kExitUsage);
  CHECK(degenerate.err.find("radical has dimension 2") != std::string::npos);
}

TEST_CASE("form-witt") {
  const auto j = run_json({"form-witt", "--q", "5", "--diag", "1,1,1"});
  CHECK(j["hyperbolic_count"] == 1);
  CHECK(j["anisotropic_part"] == json::array({"1"}));
  CHECK(j["witt_class"] == "1");

  const auto cmp = run_json({"form-witt", "--q", "5", "--diag", "1,1", "--other", "2,2"});
  CHECK(cmp["witt_equal"] == true);
  CHECK(cmp["isometric"] == true);
  const auto neq = run_json({"form-witt", "--q", "7", "--diag", "1", "--other", "3"});
  CHECK(neq["witt_equal"] == false);

  const auto budget = run({"form-witt", "--q", "5", "--diag", "1,2", "--max-search", "2"});
  CHECK(budget.code == cli::kExitUsage);
  CHECK(budget.err.rfind("error: ", 0) == 0);
  CHECK(run({"form-witt", "--q", "5", "--diag", "1,0"}).code == cli::kExitUsage);
}

TEST_CASE("curve-table") {
  const auto r = run({"curve-table", "--q", "7", "--r", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("<1,-LM_(sigma.uv)>") != std::string::npos);
  const auto j = run_json({"curve-table", "--q", "7", "--r", "1"});
  REQUIRE(j["classes"].size() == 8);
  CHECK(j["add"].size() == 8);
  CHECK(j["mul"].size() == 8);
  for (const auto& row : j["add"]) CHECK(row.size() == 8);

  // Cell check against the library on the decoded classes.
  std::vector<WittClass> classes;
  for (const auto& c : j["classes"]) classes.push_back(class_from_json(c, Mod4::Three));
  for (std::size_t a = 0; a < 8; ++a) {
    for (std::size_t b = 0; b < 8; ++b) {
      CHECK(classes[j["add"][a][b].get<std::size_t>()] == wc_add(classes[a], classes[b]));
      CHECK(classes[j["mul"][a][b].get<std::size_t>()] == wc_mul(classes[a], classes[b]));
    }
  }

  const auto big = run({"curve-table", "--q", "7", "--r", "5"});
  CHECK(big.code == cli::kExitUsage);
  CHECK(big.err.find("--r <= 4") != std::string::npos);
}

TEST_CASE("curve-eval") {
  const auto sum = run_json({"curve-eval", "--q", "5", "--word", "(1,01);(1,01)"});
  CHECK(sum["class"] == json({{"parity", "even"}, {"u", "1"}, {"L", "00"}}));
  const auto q3 = run_json({"curve-eval", "--q", "7", "--word", "(1,01);(1,01)"});
  CHECK(q3["class"] == json({{"parity", "even"}, {"u", "s"}, {"L", "00"}}));
  const auto prod = run_json({"curve-eval", "--q", "7", "--word", "(1,1)", "--op", "mul",
                              "--with", "(s,1)"});
  CHECK(prod["class"] == json({{"parity", "odd"}, {"u", "s"}, {"L", "0"}}));
  const auto text = run({"curve-eval", "--q", "7", "--r", "2", "--word", "(s,10)"});
  CHECK(text.out.find("class: <10_s>") != std::string::npos);

  CHECK(run({"curve-eval", "--q", "7", "--word", "(1,1)", "--op", "div", "--with", "(1,1)"})
            .code == cli::kExitUsage);
  CHECK(run({"curve-eval", "--q", "7", "--word", "(t,1)"}).code == cli::kExitUsage);
  CHECK(run({"curve-eval", "--q", "7", "--r", "2", "--word", "(1,1)"}).code ==
        cli::kExitUsage);
}

TEST_CASE("curve-normal-form") {
  const auto j = run_json({"curve-normal-form", "--q", "7", "--r", "1", "--element", "1:0;1:0"});
  CHECK(j["class"] == json({{"parity", "even"}, {"u", "s"}, {"L", "0"}}));
  CHECK(j["element"] == json::array({{{"coef", "e"}, {"L", "0"}}}));

  const auto from_json = run_json({"curve-normal-form", "--q", "5", "--r", "1", "--element",
                                   R"([{"coef":"s","L":"1"}])"});
  CHECK(from_json["class"] == json({{"parity", "odd"}, {"u", "s"}, {"L", "1"}}));

  const auto ident = run_json({"curve-normal-form", "--q", "5", "--r", "2", "--element", "s:O"});
  CHECK(ident["class"] == json({{"parity", "odd"}, {"u", "s"}, {"L", "00"}}));

  const auto zero = run_json({"curve-normal-form", "--q", "5", "--r", "2", "--element", "0"});
  CHECK(zero["class"] == json({{"parity", "even"}, {"u", "1"}, {"L", "00"}}));

  CHECK(run({"curve-normal-form", "--q", "5", "--r", "1", "--element", "x:1"}).code ==
        cli::kExitUsage);
  CHECK(run({"curve-normal-form", "--q", "5", "--r", "1", "--element", "[{"}).code ==
        cli::kExitUsage);
}

TEST_CASE("verify") {
  const auto j = run_json({"verify", "--only", "3"});
  CHECK(j["passed"] == true);
  REQUIRE(j["checks"].size() == 1);
  CHECK(j["checks"][0]["id"] == 3);
  const auto all = run({"verify", "--random-triples", "2000"});
  CHECK(all.code == cli::kExitOk);
  CHECK(count_lines(all.out) == 10);
  CHECK(all.out.find("FAIL") == std::string::npos);
  CHECK(run({"verify", "--only", "11"}).code == cli::kExitUsage);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"nonsense"}).code == cli::kExitUsage);
  CHECK(run({"field-info"}).code == cli::kExitUsage);
  const auto even = run({"field-info", "--q", "4"});
  CHECK(even.code == cli::kExitUsage);
  CHECK(even.err.find("even") != std::string::npos);
  CHECK(count_lines(even.err) == 1);
  CHECK(run({"field-info", "--q", "2"}).code == cli::kExitUsage);
  CHECK(run({"field-info", "--q", "3^20"}).code == cli::kExitUsage);
  CHECK(run({"field-info", "--help"}).code == cli::kExitOk);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"curve-table", "--q", "9", "--r", "2"};
  CHECK(run(args).out == run(args).out);
}

TEST_CASE("entry parsing") {
  const auto f9 = FiniteField::make(3, 2);
  const auto v = cli::parse_entries(f9, "<1,(0,1),(1,1)>");
  REQUIRE(v.size() == 3);
  CHECK(v[1] == f9.from_coeffs({0, 1}));
  CHECK(v[2].value() == 4);
  const auto f7 = FiniteField::make(7);
  CHECK(cli::parse_entries(f7, "-1, 8")[0].value() == 6);
  CHECK(cli::parse_entries(f7, "-1, 8")[1].value() == 1);
  CHECK(cli::parse_gram(f7, "1,2;2,1").size() == 2);
  CHECK_THROWS_AS(cli::parse_entries(f7, "1,a"), WittError);
  CHECK_THROWS_AS(cli::parse_entries(f9, "(1,1,1)"), WittError);
}

TEST_CASE("JSON round trips") {
  for (auto c : {Mod4::One, Mod4::Three}) {
    for (unsigned r = 0; r <= 3; ++r) {
      for (const auto& a : enumerate_classes(c, Pic2Group(r))) {
        const auto j = to_json(a);
        CHECK(class_from_json(j, c) == a);
        CHECK(to_json(class_from_json(json::parse(j.dump()), c)) == j);
      }
    }
    for (const auto& f : enumerate_ring(c, Pic2Group(2))) {
      const auto j = to_json(f);
      CHECK(element_from_json(j, c, 2) == f);
      CHECK(to_json(element_from_json(json::parse(j.dump()), c, 2)) == j);
    }
  }
  CHECK_THROWS_AS(class_from_json(json{{"parity", "odd"}}, Mod4::One), WittError);
  CHECK_THROWS_AS(class_from_json(json{{"parity", "x"}, {"u", "1"}, {"L", ""}}, Mod4::One),
                  WittError);
  CHECK_THROWS_AS(element_from_json(json::array({{{"coef", "q"}, {"L", "0"}}}), Mod4::One, 1),
                  WittError);
  CHECK(element_from_json(json::array({{{"coef", "0"}, {"L", "0"}}}), Mod4::One, 1).is_zero());
}

TEST_CASE("printed classes parse back") {
  for (auto c : {"5", "7"}) {
    const auto j = run_json({"curve-table", "--q", c, "--r", "2"});
    const Mod4 m = std::string(c) == "5" ? Mod4::One : Mod4::Three;
    for (const auto& cls : j["classes"]) {
      CHECK(to_json(class_from_json(cls, m)) == cls);
    }
  }
}
