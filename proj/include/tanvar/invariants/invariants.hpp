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

#ifndef TANVAR_INVARIANTS_INVARIANTS_HPP
#define TANVAR_INVARIANTS_INVARIANTS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "tanvar/varieties/variety.hpp"

namespace tanvar {

/// One named identity or bound with its operands.
struct IdentityCheck {
  std::string name;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  bool pass = false;
  std::string note;
};

struct InvariantReport {
  std::optional<std::int64_t> tau;
  std::map<int, std::int64_t> omega;
  std::optional<std::int64_t> mu, sigma;
  std::optional<std::int64_t> deg_tan, dim_tan, deg_sec, dim_sec;
  std::vector<IdentityCheck> identities;
  std::vector<std::string> notes;

  nlohmann::json to_json() const;
  bool all_pass() const;
};

/// Number of tangent spaces through a general point of Tan X; 0 when
/// dim Tan X < 2n. Throws NotFinite, DisagreementAcrossTrials.
std::int64_t tau(const VarietyHandle& x, Rng& rng, const EngineOptions& opts = {});

/// omega_n: tangent spaces meeting a general codimension-2n subspace.
std::int64_t omega_top(const VarietyHandle& x, Rng& rng, const EngineOptions& opts = {});

/// omega_i for 1 <= i <= n: omega_top of a general (n - i)-codimensional
/// linear section, sliced on the parametrization.
std::int64_t omega_slice(const VarietyHandle& x, int i, Rng& rng, const EngineOptions& opts = {});

/// Same invariant computed from the implicit ideal: incidences (x, v) with
/// v tangent at x on the section and v in a general codimension-2i subspace.
/// Throws SliceSingularityHit, NotFinite.
std::int64_t omega_slice_ideal(const VarietyHandle& x, int i, Rng& rng, const EngineOptions& opts = {});

/// Secant lines through a general point of Sec X. Throws OddOrderedCount.
std::int64_t secant_mu(const VarietyHandle& x, Rng& rng, const EngineOptions& opts = {});

/// Nodes of a general projection into P^{2n}; 0 when N = 2n.
std::int64_t sigma_nodes(const VarietyHandle& x, Rng& rng, const EngineOptions& opts = {});

/// 2 sigma = d (d - 1) - sum omega_i. Fills sigma, omega and the record.
IdentityCheck severi_check(const VarietyHandle& x, Rng& rng, const EngineOptions& opts, InvariantReport* report = nullptr);

/// Lower bounds deg Tan >= 2 (N - dim Tan + 1) (when Tan is strictly inside
/// Sec) and deg Sec >= C(codim Sec + 2, 2) (when Sec is proper). Uses the
/// report's dimensions and degrees; absent data skips the bound.
std::vector<IdentityCheck> bounds_check(const InvariantReport& report, std::size_t ambient_dim);

/// 6 d + 4 HK + 2 K^2 - 12 chi.
std::int64_t surface_degtan_formula(std::int64_t d, std::int64_t hk, std::int64_t k2, std::int64_t chi);

}  // namespace tanvar

#endif  // TANVAR_INVARIANTS_INVARIANTS_HPP
