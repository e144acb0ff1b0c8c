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

#ifndef TANVAR_VARIETIES_TRIALS_HPP
#define TANVAR_VARIETIES_TRIALS_HPP

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "tanvar/algebra/rng.hpp"
#include "tanvar/error.hpp"
#include "tanvar/varieties/variety.hpp"

namespace tanvar {

/// Strict-majority value of `values`. A non-unanimous majority is recorded in
/// `diag` (when given); no strict majority throws DisagreementAcrossTrials.
std::int64_t majority_vote(const std::string& what, const std::vector<std::int64_t>& values, Diagnostics* diag);

/// Runs fn(sub_rng) on opts.trials independent forks of rng and votes.
template <class F>
std::int64_t run_trials(const std::string& what, Rng& rng, const EngineOptions& opts, F&& fn) {
  const std::uint64_t base = rng.next();
  std::vector<std::int64_t> values;
  const unsigned trials = opts.trials == 0 ? 1 : opts.trials;
  for (unsigned t = 0; t < trials; ++t) {
    Rng sub = Rng(base).fork(t);
    values.push_back(fn(sub));
  }
  return majority_vote(what, values, opts.diagnostics);
}

/// Calls fn(sub_rng) up to `attempts` times on fresh forks, retrying only on
/// the listed error kinds; the last error propagates.
template <class F>
auto with_reseeding(Rng& rng, unsigned attempts, std::initializer_list<ErrorKind> retry_on, F&& fn) {
  for (unsigned a = 1;; ++a) {
    Rng sub = rng.fork(0x5eed + a);
    try {
      return fn(sub);
    } catch (const Error& e) {
      bool retry = false;
      for (auto k : retry_on) retry = retry || e.kind() == k;
      if (!retry || a >= attempts) throw;
    }
  }
}

}  // namespace tanvar

#endif  // TANVAR_VARIETIES_TRIALS_HPP
