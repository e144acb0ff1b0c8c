/*
   Copyright 2026 The tanvar Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "doctest.h"
#include "tanvar/cli/run.hpp"
#include "tanvar/error.hpp"

using namespace tanvar;
using nlohmann::json;

namespace {

RunResult go(const std::string& command, const json& spec, std::uint64_t seed = kDefaultSeed) {
  RunConfig cfg;
  cfg.command = command;
  cfg.spec = spec;
  cfg.seed = seed;
  return run(cfg);
}

const json kScroll = {{"type", "scroll"}, {"a", {1, 2}}};
const json kCubic = {{"type", "rnc"}, {"d", 3}};

}  // namespace

TEST_CASE("tau on the cubic scroll echoes its settings") {
  auto r = go("tau", kScroll);
  CHECK(r.exit_code == 0);
  CHECK(r.report["tau"] == 2);
  CHECK(r.report["seed"] == kDefaultSeed);
  CHECK(r.report["prime"] == kDefaultPrime);
  CHECK(r.report["command"] == "tau");
}

TEST_CASE("report-all on the twisted cubic") {
  RunConfig cfg;
  cfg.command = "report-all";
  cfg.spec = kCubic;
  cfg.verify = true;
  auto r = run(cfg);
  CHECK(r.exit_code == 0);
  CHECK(r.report["deg_tan"] == 4);
  CHECK(r.report["tau"] == 1);
  CHECK(r.report["mu"] == 1);
  CHECK(r.report["verify"]["agree"] == true);
  bool severi = false;
  for (const auto& id : r.report["identities"]) {
    CHECK(id["pass"] == true);
    if (id["name"] == "severi") severi = true;
  }
  CHECK(severi);
}

TEST_CASE("Segre dims") {
  auto r = go("dims", {{"type", "segre"}, {"a", 2}, {"b", 2}});
  CHECK(r.report["dim_tan"] == 7);
  CHECK(r.report["dim_sec"] == 7);
}

TEST_CASE("errors become structured JSON") {
  for (const auto& [command, spec] : std::vector<std::pair<std::string, json>>{
           {"tau", {{"type", "nonsense"}}}, {"nope", kCubic}, {"tau", {{"type", "rnc"}}}, {"tau", "not an object"}}) {
    CAPTURE(command);
    auto r = go(command, spec);
    CHECK(r.exit_code == 1);
    REQUIRE(r.report.contains("error"));
    CHECK(r.report["error"]["kind"].is_string());
    CHECK(r.report["error"]["detail"].is_string());
  }
  RunConfig cfg;
  cfg.command = "tau";
  cfg.spec = kCubic;
  cfg.trials = 0;
  CHECK(run(cfg).exit_code == 1);
  cfg.trials = 3;
  cfg.degree_cap = 2;
  CHECK(run(cfg).exit_code == 1);
}

TEST_CASE("output is deterministic across runs and seeds") {
  for (const auto& command : {"tau", "omega", "severi", "tan"}) {
    CAPTURE(command);
    const auto first = go(command, kScroll).report.dump();
    CHECK(go(command, kScroll).report.dump() == first);
    auto a = go(command, kScroll, 7).report, b = go(command, kScroll, 42).report;
    a.erase("seed");
    b.erase("seed");
    CHECK(a == b);
  }
}

TEST_CASE("every command runs on a small instance") {
  for (const auto& command : command_names()) {
    CAPTURE(command);
    json spec = command == "dev" ? json{{"rows", {{"1", "t", "t^2"}, {"0", "1", "2*t"}}}} : kCubic;
    auto r = go(command, spec);
    CHECK(r.exit_code != 1);
    CHECK_FALSE(r.report.contains("error"));
  }
}

TEST_CASE("rationals") {
  RunConfig cfg;
  cfg.command = "tau";
  cfg.spec = kScroll;
  cfg.prime = 0;
  auto r = run(cfg);
  CHECK(r.report["tau"] == 2);
  CHECK(r.report["field"] == "QQ");
}

TEST_CASE("report matching") {
  json report = {{"tau", 2}, {"omega", {{"1", 4}, {"2", 2}}}, {"identities", {{{"name", "a"}, {"pass", true}, {"note", "x"}}}}};
  CHECK(report_matches(report, {{"tau", 2}}));
  CHECK(report_matches(report, {{"omega", {{"2", 2}}}}));
  CHECK(report_matches(report, {{"identities", {{{"pass", true}}}}}));
  CHECK_FALSE(report_matches(report, {{"tau", 3}}));
  CHECK_FALSE(report_matches(report, {{"mu", 1}}));
  CHECK_FALSE(report_matches(report, {{"identities", json::array()}}));
}

TEST_CASE("golden suite harness") {
  const std::vector<std::uint64_t> primes{kDefaultPrime, kVerifyPrime};
  auto empty = golden_suite(json::array(), primes);
  CHECK(empty["rows"] == 0);
  CHECK(empty["failures"].empty());

  json manifest = json::array();
  manifest.push_back({{"spec", kCubic}, {"command", "tau"}, {"expect", {{"tau", 1}}}, {"tag", "known"}, {"ref", "ok"}});
  manifest.push_back({{"spec", kCubic}, {"command", "mu"}, {"expect", {{"mu", 5}}}, {"tag", "trivial"}, {"ref", "wrong"}});
  manifest.push_back(
      {{"spec", kScroll}, {"command", "omega"}, {"index", 1}, {"expect", {{"omega", {{"1", 4}}}}}, {"tag", "known"}, {"ref", "ok"}});
  auto s = golden_suite(manifest, primes);
  CHECK(s["rows"] == 3);
  CHECK(s["passed"] == 2);
  REQUIRE(s["failures"].size() == 2);
  for (const auto& f : s["failures"]) {
    CHECK(f["row"] == 1);
    CHECK(f["report"]["mu"] == 1);
  }
  CHECK(s["failures"][0]["prime"] != s["failures"][1]["prime"]);
}

TEST_CASE("malformed manifests") {
  auto kind = [](const json& m) {
    try {
      validate_manifest(m);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Unsupported;
  };
  CHECK(kind(json::object()) == ErrorKind::ManifestParseError);
  CHECK(kind(json::array({{{"spec", kCubic}, {"command", "tau"}}})) == ErrorKind::ManifestParseError);
  CHECK(kind(json::array({{{"spec", kCubic}, {"command", "tau"}, {"expect", json::object()}, {"tag", "other"}, {"ref", ""}}})) ==
        ErrorKind::ManifestParseError);
  CHECK(kind(json::array({{{"spec", kCubic}, {"command", "bogus"}, {"expect", json::object()}, {"tag", "known"}, {"ref", ""}}})) ==
        ErrorKind::ManifestParseError);
}
