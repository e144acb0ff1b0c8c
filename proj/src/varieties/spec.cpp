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

#include "tanvar/varieties/spec.hpp"

#include "tanvar/error.hpp"

namespace tanvar {

namespace {

using nlohmann::json;

[[noreturn]] void invalid(const std::string& detail) { throw Error(ErrorKind::InvalidSpec, detail); }

const json& field_of(const json& spec, const char* key) {
  if (!spec.contains(key)) invalid(std::string("missing field '") + key + "'");
  return spec.at(key);
}

unsigned unsigned_of(const json& spec, const char* key) {
  const json& v = field_of(spec, key);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0 || v.get<std::int64_t>() > 1000) {
    invalid(std::string("field '") + key + "' must be a small non-negative integer");
  }
  return v.get<unsigned>();
}

std::vector<std::string> strings_of(const json& spec, const char* key, bool required) {
  if (!spec.contains(key)) {
    if (required) invalid(std::string("missing field '") + key + "'");
    return {};
  }
  const json& v = spec.at(key);
  if (!v.is_array()) invalid(std::string("field '") + key + "' must be an array of strings");
  std::vector<std::string> out;
  for (const auto& e : v) {
    if (!e.is_string()) invalid(std::string("field '") + key + "' must be an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

LinearSpace linear_from_json(const json& spec, const Field& field) {
  if (spec.is_array()) {
    auto rows = rows_from_json(spec, field);
    return LinearSpace(field, rows, rows.front().size() - 1);
  }
  if (spec.contains("rows")) {
    auto rows = rows_from_json(spec.at("rows"), field);
    return LinearSpace(field, rows, rows.front().size() - 1);
  }
  unsigned k = unsigned_of(spec, "dim");
  return LinearSpace::coordinate(field, k, k);
}

bool is_linear(const json& spec) {
  return spec.is_array() || (spec.is_object() && spec.value("type", "") == "linear");
}

VarietyHandle build(const json& spec, const Field& field, Rng& rng, const EngineOptions& opts) {
  if (!spec.is_object()) invalid("variety spec must be a JSON object");
  const json& type_v = field_of(spec, "type");
  if (!type_v.is_string()) invalid("field 'type' must be a string");
  const std::string type = type_v.get<std::string>();
  if (type == "rnc") return rational_normal_curve(field, unsigned_of(spec, "d"));
  if (type == "scroll") {
    const json& a = field_of(spec, "a");
    if (!a.is_array()) invalid("field 'a' must be an array of integers");
    std::vector<unsigned> blocks;
    for (const auto& e : a) {
      if (!e.is_number_integer() || e.get<std::int64_t>() < 0 || e.get<std::int64_t>() > 255) {
        invalid("scroll blocks must be non-negative integers");
      }
      blocks.push_back(e.get<unsigned>());
    }
    return rational_normal_scroll(field, blocks, rng);
  }
  if (type == "veronese") {
    if (spec.contains("degree") && spec.at("degree") != 2) throw Error(ErrorKind::Unsupported, "only quadratic Veronese embeddings");
    return veronese(field, unsigned_of(spec, "n"));
  }
  if (type == "segre") return segre(field, unsigned_of(spec, "a"), unsigned_of(spec, "b"));
  if (type == "roth") return roth(field, unsigned_of(spec, "b"), unsigned_of(spec, "N"), rng, opts);
  if (type == "verra") {
    unsigned d = spec.contains("e") ? unsigned_of(spec, "e") + 3 : unsigned_of(spec, "d");
    return verra(field, d, rng);
  }
  if (type == "osculating") {
    auto curve = build(field_of(spec, "curve"), field, rng, opts);
    return osculating_scroll(curve, unsigned_of(spec, "k"), rng);
  }
  if (type == "custom") {
    std::optional<std::size_t> dim;
    if (spec.contains("dim")) dim = unsigned_of(spec, "dim");
    return custom_variety(field, strings_of(spec, "vars", true), strings_of(spec, "psi", true),
                          strings_of(spec, "constraints", false), dim);
  }
  if (type == "linear") return linear_variety(linear_from_json(spec, field));
  if (type == "project") {
    auto x = build(field_of(spec, "of"), field, rng, opts);
    const json& c = field_of(spec, "center");
    const std::size_t n = x.ambient_dim();
    std::vector<Vector> rows;
    if (c == "random_point") {
      rows.push_back(rng.vector(field, n + 1));
    } else if (c == "point_on_variety") {
      const ParamMap& pm = x.require_param();
      rows.push_back(pm.eval(regular_parameter_point(pm, rng, opts.gb)));
    } else if (c.is_array()) {
      rows = rows_from_json(c, field);
    } else {
      invalid("center must be \"random_point\", \"point_on_variety\" or a list of points");
    }
    return project(x, LinearSpace(field, rows, n), rng, opts.gb);
  }
  if (type == "cone") {
    const json& base_spec = field_of(spec, "base");
    const json& vertex = field_of(spec, "vertex");
    auto base = build(base_spec, field, rng, opts);
    if (is_linear(vertex)) return cone_join(linear_from_json(vertex, field), base);
    return cone_join(build(vertex, field, rng, opts), base);
  }
  invalid("unknown variety type '" + type + "'");
}

}  // namespace

Scalar scalar_from_json(const nlohmann::json& value, const Field& field) {
  if (value.is_number_integer()) return field.from_int(value.get<std::int64_t>());
  if (value.is_string()) {
    const std::string s = value.get<std::string>();
    const auto slash = s.find('/');
    try {
      mpz_class num(s.substr(0, slash), 10);
      mpz_class den = slash == std::string::npos ? mpz_class(1) : mpz_class(s.substr(slash + 1), 10);
      if (den == 0) invalid("zero denominator in '" + s + "'");
      return field.from_fraction(num, den);
    } catch (const std::invalid_argument&) {
      invalid("not a rational number: '" + s + "'");
    }
  }
  invalid("coordinates must be integers or \"p/q\" strings");
}

std::vector<Vector> rows_from_json(const nlohmann::json& value, const Field& field) {
  if (!value.is_array() || value.empty()) invalid("expected a non-empty list of points");
  std::vector<Vector> rows;
  for (const auto& r : value) {
    if (!r.is_array() || r.empty()) invalid("each point must be a non-empty list of coordinates");
    Vector row;
    for (const auto& e : r) row.push_back(scalar_from_json(e, field));
    if (!rows.empty() && row.size() != rows.front().size()) invalid("points have different lengths");
    rows.push_back(std::move(row));
  }
  return rows;
}

VarietyHandle make_variety(const VarietySpec& spec, const Field& field, Rng& rng, const EngineOptions& opts) {
  try {
    return build(spec, field, rng, opts);
  } catch (const nlohmann::json::exception& e) {
    invalid(e.what());
  }
}

}  // namespace tanvar
