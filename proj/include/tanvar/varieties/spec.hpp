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

#ifndef TANVAR_VARIETIES_SPEC_HPP
#define TANVAR_VARIETIES_SPEC_HPP

#include "json.hpp"
#include "tanvar/varieties/variety.hpp"

namespace tanvar {

using VarietySpec = nlohmann::json;

/// Builds a variety from its JSON description, e.g. {"type":"scroll","a":[1,2]}.
/// Random choices (charts, Roth coefficients, centers) come from `rng`.
/// Throws InvalidSpec on malformed input.
VarietyHandle make_variety(const VarietySpec& spec, const Field& field, Rng& rng, const EngineOptions& opts = {});

/// Scalar from a JSON integer or a "p/q" string.
Scalar scalar_from_json(const nlohmann::json& value, const Field& field);
/// Rows of scalars; every row must have the same length.
std::vector<Vector> rows_from_json(const nlohmann::json& value, const Field& field);

}  // namespace tanvar

#endif  // TANVAR_VARIETIES_SPEC_HPP
