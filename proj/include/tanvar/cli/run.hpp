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

#ifndef TANVAR_CLI_RUN_HPP
#define TANVAR_CLI_RUN_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "tanvar/algebra/field.hpp"

namespace tanvar {

/// Commands accepted by run().
const std::vector<std::string>& command_names();

struct RunConfig {
  std::string command;
  nlohmann::json spec;
  std::uint64_t seed = kDefaultSeed;
  /// 0 selects the rationals.
  std::uint64_t prime = kDefaultPrime;
  unsigned trials = 3;
  unsigned degree_cap = 60;
  /// omega index; defaults to dim X.
  std::optional<int> index;
  bool verify = false;
};

struct RunResult {
  nlohmann::json report;
  /// 0 success, 1 error, 2 identity failure.
  int exit_code = 0;
};

/// Never throws: errors become {"error": {"kind", "detail"}} with exit 1.
RunResult run(const RunConfig& config);

/// Rows {"spec", "command", "expect", "tag", "ref"} plus optional "index".
/// Throws ManifestParseError.
void validate_manifest(const nlohmann::json& manifest);

/// True when every key of `expect` appears in `report` with an equal value
/// (objects recursively, arrays element by element).
bool report_matches(const nlohmann::json& report, const nlohmann::json& expect);

/// Runs every row at each prime. Summary: {"rows", "passed", "failures"}.
nlohmann::json golden_suite(const nlohmann::json& manifest, const std::vector<std::uint64_t>& primes,
                            unsigned trials = 3);

}  // namespace tanvar

#endif  // TANVAR_CLI_RUN_HPP
