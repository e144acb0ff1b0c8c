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

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "tanvar/cli/run.hpp"
#include "tanvar/error.hpp"

namespace {

using nlohmann::json;

int emit(const json& report, const std::string& out_path, int code) {
  const std::string text = report.dump(2);
  if (out_path.empty()) {
    std::cout << text << "\n";
    return code;
  }
  std::ofstream out(out_path);
  if (!out) {
    std::cout << json{{"error", {{"kind", "InvalidSpec"}, {"detail", "cannot write " + out_path}}}}.dump(2) << "\n";
    return 1;
  }
  out << text << "\n";
  return code;
}

int error(const std::string& kind, const std::string& detail) {
  std::cout << json{{"error", {{"kind", kind}, {"detail", detail}}}}.dump(2) << "\n";
  return 1;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tangent and secant invariants of projective varieties"};
  app.require_subcommand(1);
  std::string spec_text, spec_file, out_path, manifest_path;
  tanvar::RunConfig config;
  int index = 0;

  for (const auto& name : tanvar::command_names()) {
    auto* sub = app.add_subcommand(name);
    auto* spec_opt = sub->add_option("--spec", spec_text, "variety spec as JSON");
    sub->add_option("--spec-file", spec_file, "file holding the variety spec")->excludes(spec_opt);
    sub->add_option("--seed", config.seed, "random seed")->capture_default_str();
    sub->add_option("--prime", config.prime, "field characteristic; 0 for the rationals")->capture_default_str();
    sub->add_option("--trials", config.trials, "seeded repetitions")->capture_default_str();
    sub->add_option("--degree-cap", config.degree_cap, "Groebner degree cap")->capture_default_str();
    sub->add_flag("--verify", config.verify, "rerun at a second prime and compare");
    sub->add_option("--out", out_path, "write the report to this file");
    if (name == "omega") sub->add_option("--index", index, "i in omega_i (default dim X)");
  }
  auto* golden = app.add_subcommand("golden", "run a manifest of expected results at two primes");
  golden->add_option("--manifest", manifest_path, "manifest JSON file")->required();
  golden->add_option("--trials", config.trials, "seeded repetitions")->capture_default_str();
  golden->add_option("--out", out_path, "write the summary to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return error("InvalidSpec", e.what());
  }

  if (golden->parsed()) {
    try {
      json manifest;
      try {
        manifest = json::parse(read_file(manifest_path));
      } catch (const std::exception& e) {
        throw tanvar::Error(tanvar::ErrorKind::ManifestParseError, e.what());
      }
      json summary = tanvar::golden_suite(manifest, {tanvar::kDefaultPrime, tanvar::kVerifyPrime}, config.trials);
      const bool ok = summary["failures"].empty();
      return emit(summary, out_path, ok ? 0 : 2);
    } catch (const tanvar::Error& e) {
      return error(std::string(tanvar::kind_name(e.kind())), e.detail());
    }
  }

  for (auto* sub : app.get_subcommands()) config.command = sub->get_name();
  if (config.command == "omega" && index != 0) config.index = index;
  try {
    if (!spec_file.empty()) spec_text = read_file(spec_file);
    if (spec_text.empty()) return error("InvalidSpec", "a spec is required (--spec or --spec-file)");
    config.spec = json::parse(spec_text);
  } catch (const std::exception& e) {
    return error("InvalidSpec", e.what());
  }
  auto result = tanvar::run(config);
  return emit(result.report, out_path, result.exit_code);
}
