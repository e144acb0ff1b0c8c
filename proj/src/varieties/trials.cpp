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

#include "tanvar/varieties/trials.hpp"

#include <map>

namespace tanvar {

std::int64_t majority_vote(const std::string& what, const std::vector<std::int64_t>& values, Diagnostics* diag) {
  if (values.empty()) throw Error(ErrorKind::DisagreementAcrossTrials, what + ": no trials ran");
  std::map<std::int64_t, std::size_t> tally;
  for (auto v : values) ++tally[v];
  std::string listing;
  for (std::size_t i = 0; i < values.size(); ++i) listing += (i ? "," : "") + std::to_string(values[i]);
  for (const auto& [value, count] : tally) {
    if (2 * count <= values.size()) continue;
    if (count != values.size() && diag) diag->warnings.push_back(what + ": trials disagree (" + listing + ")");
    return value;
  }
  throw Error(ErrorKind::DisagreementAcrossTrials, what + ": no majority among trials (" + listing + ")");
}

}  // namespace tanvar
