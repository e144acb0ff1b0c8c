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

#include "tanvar/cli/run.hpp"

#include <algorithm>
#include <map>

#include "tanvar/error.hpp"
#include "tanvar/invariants/invariants.hpp"
#include "tanvar/localgeom/localgeom.hpp"
#include "tanvar/tangential/tangential.hpp"
#include "tanvar/varieties/spec.hpp"

namespace tanvar {

namespace {

using nlohmann::json;

// S-pair reductions allowed for Tan and Sec eliminations before the
// counting route takes over.
constexpr std::uint64_t kEliminationBudget = 500;

struct Context {
  Field field;
  Rng rng;
  EngineOptions opts;
  Diagnostics diagnostics;
  const RunConfig& config;
};

struct DimDeg {
  std::int64_t dim = 0, deg = 0;
  std::string route;
};

GbOptions budgeted(const GbOptions& gb) {
  GbOptions out = gb;
  if (out.work_budget == 0) out.work_budget = kEliminationBudget;
  return out;
}

DimDeg tan_dim_deg(const VarietyHandle& x, Context& c) {
  try {
    auto h = hilbert_data(tangent_variety(x, c.rng, budgeted(c.opts.gb)), c.opts.gb);
    return {h.projective_dimension, h.degree, "elimination"};
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::DegreeCapExceeded) throw;
    const std::int64_t dim = tan_dim_fast(x, c.rng, c.opts);
    const std::int64_t t = tau(x, c.rng, c.opts);
    if (dim != static_cast<std::int64_t>(2 * x.dim()) || t == 0) throw;
    const std::int64_t w = omega_top(x, c.rng, c.opts);
    if (w % t != 0) throw Error(ErrorKind::GenericityWarning, "omega_n is not a multiple of tau");
    return {dim, w / t, "counting"};
  }
}

DimDeg sec_dim_deg(const VarietyHandle& x, Context& c) {
  try {
    auto h = hilbert_data(secant_variety(x, budgeted(c.opts.gb)), c.opts.gb);
    return {h.projective_dimension, h.degree, "elimination"};
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::DegreeCapExceeded) throw;
    const std::int64_t dim = sec_dim_fast(x, c.rng, c.opts);
    const auto n = static_cast<std::int64_t>(x.dim());
    if (dim != 2 * n + 1 || x.ambient_dim() <= static_cast<std::size_t>(2 * n)) throw;
    const std::int64_t s = sigma_nodes(x, c.rng, c.opts), m = secant_mu(x, c.rng, c.opts);
    if (m == 0 || s % m != 0) throw Error(ErrorKind::GenericityWarning, "sigma is not a multiple of mu");
    return {dim, s / m, "counting"};
  }
}

void put_tan(json& out, const DimDeg& t) {
  out["dim_tan"] = t.dim;
  out["deg_tan"] = t.deg;
  out["tan_route"] = t.route;
}

void put_sec(json& out, const DimDeg& s) {
  out["dim_sec"] = s.dim;
  out["deg_sec"] = s.deg;
  out["sec_route"] = s.route;
}

std::vector<std::string> strings_of(const std::vector<Polynomial>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

std::vector<std::vector<Polynomial>> family_from_spec(const json& spec, Context& c) {
  std::vector<std::vector<Polynomial>> out;
  if (spec.contains("rows")) {
    auto ring = make_ring({spec.value("var", std::string("t"))}, c.field);
    for (const auto& row : spec.at("rows")) {
      std::vector<Polynomial> v;
      for (const auto& s : row) v.push_back(parse_poly(s.get<std::string>(), ring));
      out.push_back(std::move(v));
    }
    return out;
  }
  VarietyHandle curve = make_variety(spec.at("curve"), c.field, c.rng, c.opts);
  const ParamMap& pm = curve.require_param();
  if (pm.nparams() != 1 || pm.constrained()) {
    throw Error(ErrorKind::InvalidSpec, "family curve needs one unconstrained parameter");
  }
  const int k = spec.at("k").get<int>();
  if (k < 0) throw Error(ErrorKind::InvalidSpec, "k must be nonnegative");
  std::vector<Polynomial> current = pm.psi;
  for (int order = 0; order <= k; ++order) {
    out.push_back(current);
    for (auto& p : current) p = differentiate(p, std::size_t{0});
  }
  return out;
}

json run_command(const std::string& cmd, const VarietyHandle* xp, Context& c) {
  json out = json::object();
  if (cmd == "dev") return out;
  const VarietyHandle& x = *xp;
  auto& rng = c.rng;
  const auto& opts = c.opts;
  const int n = static_cast<int>(x.dim());
  if (cmd == "implicitize") {
    const Ideal& ideal = implicitize(x, opts.gb);
    auto h = hilbert_data(x, opts.gb);
    out["dim"] = h.projective_dimension;
    out["degree"] = h.degree;
    out["generators"] = strings_of(ideal.generators());
  } else if (cmd == "tan") {
    put_tan(out, tan_dim_deg(x, c));
  } else if (cmd == "sec") {
    put_sec(out, sec_dim_deg(x, c));
  } else if (cmd == "dims") {
    out["dim_tan"] = tan_dim_fast(x, rng, opts);
    out["dim_sec"] = sec_dim_fast(x, rng, opts);
  } else if (cmd == "tau") {
    out["tau"] = tau(x, rng, opts);
  } else if (cmd == "omega") {
    const int i = c.config.index.value_or(n);
    out["omega"][std::to_string(i)] = omega_slice(x, i, rng, opts);
  } else if (cmd == "mu") {
    out["mu"] = secant_mu(x, rng, opts);
  } else if (cmd == "sigma") {
    out["sigma"] = sigma_nodes(x, rng, opts);
  } else if (cmd == "severi") {
    InvariantReport rep;
    severi_check(x, rng, opts, &rep);
    out = rep.to_json();
  } else if (cmd == "bounds") {
    InvariantReport rep;
    auto t = tan_dim_deg(x, c);
    auto s = sec_dim_deg(x, c);
    rep.dim_tan = t.dim;
    rep.deg_tan = t.deg;
    rep.dim_sec = s.dim;
    rep.deg_sec = s.deg;
    rep.identities = bounds_check(rep, x.ambient_dim());
    out = rep.to_json();
    out["tan_route"] = t.route;
    out["sec_route"] = s.route;
  } else if (cmd == "ff2") {
    auto ff = second_ff(x, rng, opts);
    auto base = ff_base_locus(ff, opts.gb);
    const int image = quadric_image_dim(ff, opts.gb);
    out["quadrics"] = ff.quadrics.size();
    out["dim_linear_system"] = static_cast<std::int64_t>(ff.quadrics.size()) - 1;
    out["quadric_forms"] = strings_of(ff.quadrics);
    out["base_locus"] = {{"dim", base.hilbert.projective_dimension}, {"degree", base.hilbert.degree}};
    out["image_dim"] = image;
    out["dim_tan_from_quadrics"] = n + 1 + image;
  } else if (cmd == "focal") {
    auto focal = focal_at(x, rng, opts);
    out["is_hypersurface"] = focal.is_hypersurface;
    out["focal_dim"] = focal.hilbert.projective_dimension;
    out["focal_hilbert_degree"] = focal.hilbert.degree;
    if (focal.focal_degree) out["focal_degree"] = *focal.focal_degree;
    out["focal_generators"] = strings_of(focal.focal_ideal.generators());
  } else if (cmd == "gauss") {
    out["gauss_defect"] = gauss_defect(x, rng, opts);
  } else if (cmd == "osc") {
    out["osc_dim"] = osculating_dim(x, rng, opts);
  } else if (cmd == "report-all") {
    InvariantReport rep;
    const auto n_amb = static_cast<std::int64_t>(x.ambient_dim());
    const std::int64_t dim_tan = tan_dim_fast(x, rng, opts);
    rep.tau = tau(x, rng, opts);
    for (int i = 1; i <= n; ++i) rep.omega[i] = omega_slice(x, i, rng, opts);
    if (dim_tan < 2 * n) rep.notes.push_back("dim Tan < 2n: tau = 0 and omega_n = 0");
    auto t = tan_dim_deg(x, c);
    rep.dim_tan = t.dim;
    rep.deg_tan = t.deg;
    auto s = sec_dim_deg(x, c);
    rep.dim_sec = s.dim;
    rep.deg_sec = s.deg;
    try {
      rep.mu = secant_mu(x, rng, opts);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotFinite) throw;
      rep.notes.push_back("mu: secant lines through a general point of Sec are not finite");
    }
    if (n_amb >= 2 * n) {
      rep.sigma = sigma_nodes(x, rng, opts);
      const std::int64_t d = degree_by_slicing(x, rng, opts);
      std::int64_t omega_sum = 0;
      for (const auto& [i, w] : rep.omega) omega_sum += w;
      if (static_cast<int>(rep.omega.size()) == n) {
        IdentityCheck sev{"severi", 2 * *rep.sigma, d * (d - 1) - omega_sum, false, "d=" + std::to_string(d)};
        sev.pass = sev.lhs == sev.rhs;
        rep.identities.push_back(sev);
      }
      out["degree"] = d;
    }
    if (*rep.tau > 0 && rep.omega.count(n)) {
      IdentityCheck id{"omega_n = tau * deg Tan", rep.omega.at(n), *rep.tau * *rep.deg_tan, false, ""};
      id.pass = id.lhs == id.rhs;
      rep.identities.push_back(id);
    }
    if (rep.mu && rep.sigma && *rep.dim_sec == 2 * n + 1 && n_amb > 2 * n) {
      IdentityCheck id{"sigma = mu * deg Sec", *rep.sigma, *rep.mu * *rep.deg_sec, false, ""};
      id.pass = id.lhs == id.rhs;
      rep.identities.push_back(id);
    }
    for (auto& b : bounds_check(rep, x.ambient_dim())) rep.identities.push_back(b);
    json j = rep.to_json();
    j.update(out);
    out = j;
    out["tan_route"] = t.route;
    out["sec_route"] = s.route;
  } else {
    throw Error(ErrorKind::InvalidSpec, "unknown command '" + cmd + "'");
  }
  return out;
}

json run_once(const RunConfig& config, std::uint64_t prime) {
  if (config.trials == 0) throw Error(ErrorKind::InvalidSpec, "trials must be at least 1");
  if (config.degree_cap < 4) throw Error(ErrorKind::InvalidSpec, "degree cap must be at least 4");
  const auto& names = command_names();
  if (std::find(names.begin(), names.end(), config.command) == names.end()) {
    throw Error(ErrorKind::InvalidSpec, "unknown command '" + config.command + "'");
  }
  FieldConfig fc = prime == 0 ? FieldConfig::rationals(config.seed) : FieldConfig::prime_field(prime, config.seed);
  fc.validate();
  Context c{Field(fc), Rng(config.seed), {}, {}, config};
  c.opts.trials = config.trials;
  c.opts.gb.degree_cap = config.degree_cap;
  c.opts.diagnostics = &c.diagnostics;
  json report = json::object();
  try {
    if (config.command == "dev") {
      auto fam = family_from_spec(config.spec, c);
      auto res = developable_check(fam, c.rng, c.opts);
      report["developable"] = res.developable;
      report["t"] = c.field.to_string(res.t);
      report["focal_space_dim"] = static_cast<std::int64_t>(res.focal_space.size()) - 1;
      json rows = json::array();
      for (const auto& v : res.focal_space) {
        json row = json::array();
        for (const auto& s : v) row.push_back(c.field.to_string(s));
        rows.push_back(row);
      }
      report["focal_space"] = rows;
    } else {
      VarietyHandle x = make_variety(config.spec, c.field, c.rng, c.opts);
      report = run_command(config.command, &x, c);
      report["variety"] = x.name();
    }
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InvalidSpec, e.what());
  }
  report["command"] = config.command;
  report["seed"] = config.seed;
  if (prime == 0) {
    report["field"] = "QQ";
  } else {
    report["prime"] = prime;
  }
  report["trials"] = config.trials;
  if (!c.diagnostics.warnings.empty()) report["warnings"] = c.diagnostics.warnings;
  return report;
}

// Integer and boolean leaves keyed by their JSON pointer.
void integer_leaves(const json& j, const std::string& path, std::map<std::string, json>& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) integer_leaves(v, path + "/" + k, out);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) integer_leaves(j[i], path + "/" + std::to_string(i), out);
  } else if (j.is_number_integer() || j.is_boolean()) {
    out[path] = j;
  }
}

bool has_failed_identity(const json& report) {
  if (!report.contains("identities")) return false;
  for (const auto& c : report["identities"]) {
    if (!c.value("pass", true)) return true;
  }
  return false;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"implicitize", "tan",    "sec",   "dims", "tau",   "omega",
                                              "mu",          "sigma",  "severi", "bounds", "ff2", "focal",
                                              "gauss",       "osc",    "dev",   "report-all"};
  return names;
}

RunResult run(const RunConfig& config) {
  try {
    json report = run_once(config, config.prime);
    if (config.verify) {
      const std::uint64_t second = config.prime == kVerifyPrime ? kDefaultPrime : kVerifyPrime;
      json other = run_once(config, second);
      std::map<std::string, json> a, b;
      integer_leaves(report, "", a);
      integer_leaves(other, "", b);
      a.erase("/prime");
      b.erase("/prime");
      json mismatches = json::array();
      for (const auto& [k, v] : a) {
        auto it = b.find(k);
        if (it == b.end() || it->second != v) mismatches.push_back(k);
      }
      for (const auto& [k, v] : b) {
        if (!a.count(k)) mismatches.push_back(k);
      }
      report["verify"] = {{"prime", second}, {"agree", mismatches.empty()}, {"mismatches", mismatches}};
      if (!report.contains("identities")) report["identities"] = json::array();
      report["identities"].push_back({{"name", "verify"},
                                      {"lhs", static_cast<std::int64_t>(mismatches.size())},
                                      {"rhs", 0},
                                      {"pass", mismatches.empty()}});
    }
    return {report, has_failed_identity(report) ? 2 : 0};
  } catch (const Error& e) {
    return {json{{"error", {{"kind", std::string(kind_name(e.kind()))}, {"detail", e.detail()}}}}, 1};
  } catch (const std::exception& e) {
    return {json{{"error", {{"kind", "InvalidSpec"}, {"detail", e.what()}}}}, 1};
  }
}

void validate_manifest(const json& manifest) {
  auto fail = [](const std::string& what) { throw Error(ErrorKind::ManifestParseError, what); };
  if (!manifest.is_array()) fail("manifest must be a JSON array");
  const std::vector<std::string> tags{"known", "trivial", "derived"};
  for (std::size_t i = 0; i < manifest.size(); ++i) {
    const auto& row = manifest[i];
    const std::string at = "row " + std::to_string(i) + ": ";
    if (!row.is_object()) fail(at + "not an object");
    if (!row.contains("spec") || !row["spec"].is_object()) fail(at + "missing spec object");
    if (!row.contains("command") || !row["command"].is_string()) fail(at + "missing command");
    const auto& names = command_names();
    if (std::find(names.begin(), names.end(), row["command"].get<std::string>()) == names.end()) {
      fail(at + "unknown command");
    }
    if (!row.contains("expect") || !row["expect"].is_object()) fail(at + "missing expect object");
    if (!row.contains("tag") || !row["tag"].is_string() ||
        std::find(tags.begin(), tags.end(), row["tag"].get<std::string>()) == tags.end()) {
      fail(at + "tag must be one of known, trivial, derived");
    }
    if (!row.contains("ref") || !row["ref"].is_string()) fail(at + "missing ref");
    if (row.contains("index") && !row["index"].is_number_integer()) fail(at + "index must be an integer");
  }
}

bool report_matches(const json& report, const json& expect) {
  if (expect.is_array()) {
    if (!report.is_array() || report.size() != expect.size()) return false;
    for (std::size_t i = 0; i < expect.size(); ++i) {
      if (!report_matches(report[i], expect[i])) return false;
    }
    return true;
  }
  if (!expect.is_object()) return report == expect;
  if (!report.is_object()) return false;
  for (const auto& [k, v] : expect.items()) {
    if (!report.contains(k) || !report_matches(report[k], v)) return false;
  }
  return true;
}

json golden_suite(const json& manifest, const std::vector<std::uint64_t>& primes, unsigned trials) {
  validate_manifest(manifest);
  json failures = json::array();
  std::size_t passed = 0;
  for (std::size_t i = 0; i < manifest.size(); ++i) {
    const auto& row = manifest[i];
    bool ok = true;
    for (auto p : primes) {
      RunConfig cfg;
      cfg.command = row["command"].get<std::string>();
      cfg.spec = row["spec"];
      cfg.prime = p;
      cfg.trials = trials;
      if (row.contains("index")) cfg.index = row["index"].get<int>();
      RunResult res = run(cfg);
      if (res.exit_code == 1 || !report_matches(res.report, row["expect"])) {
        ok = false;
        failures.push_back({{"row", i}, {"ref", row["ref"]}, {"prime", p}, {"expect", row["expect"]}, {"report", res.report}});
      }
    }
    if (ok) ++passed;
  }
  return {{"rows", manifest.size()}, {"passed", passed}, {"failures", failures}};
}

}  // namespace tanvar
