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

#include "tanvar/invariants/invariants.hpp"

#include "tanvar/error.hpp"
#include "tanvar/tangential/tangential.hpp"
#include "tanvar/varieties/trials.hpp"

namespace tanvar {

namespace {

constexpr unsigned kReseeds = 3;

Polynomial dot(const std::vector<Polynomial>& v, const Vector& c) {
  Polynomial out(v.front().ring());
  for (std::size_t i = 0; i < v.size(); ++i) out += v[i].scaled(c[i]);
  return out;
}

Polynomial random_form(const RingPtr& ring, const std::vector<std::string>& vars, Rng& rng) {
  Polynomial out(ring);
  for (const auto& v : vars) out += Polynomial::variable(ring, v).scaled(rng.nonzero(ring->field()));
  return out;
}

std::vector<std::string> prefixed(const RingPtr& params, const std::string& prefix) {
  std::vector<std::string> out;
  for (const auto& v : params->names()) out.push_back(prefix + v);
  return out;
}

std::vector<Polynomial> relabel_all(const std::vector<Polynomial>& ps, const RingPtr& ring, const std::string& prefix) {
  std::vector<Polynomial> out;
  for (const auto& p : ps) out.push_back(relabel_into(p, ring, prefix));
  return out;
}

// Polynomials and unknowns of an incidence system built over copies of the
// parameters.
struct System {
  RingPtr ring;
  Ideal eqs;
  explicit System(RingPtr r) : ring(r), eqs(r) {}
};

// Adds constraints for the copy `prefix` of the parameters.
void add_constraints(const ParamMap& pm, System& sys, const std::string& prefix) {
  for (const auto& g : pm.constraints.generators()) sys.eqs.add(relabel_into(g, sys.ring, prefix));
}

// a * psi(u) + sum_i d_i * d_i psi(u), with the constrained directions
// restricted to the kernel of the constraint Jacobian. Needs variables
// `a`, prefix_u + params, prefix_d + params and, when constrained, `y`.
std::vector<Polynomial> tangent_point(const ParamMap& pm, System& sys, const std::string& a, const std::string& pu,
                                      const std::string& pd, const std::string& y, Rng& rng) {
  const std::size_t m = pm.nparams();
  Polynomial av = Polynomial::variable(sys.ring, a);
  std::vector<Polynomial> d;
  for (const auto& v : pm.params->names()) d.push_back(Polynomial::variable(sys.ring, pd + v));
  std::vector<Polynomial> out;
  for (std::size_t k = 0; k < pm.psi.size(); ++k) {
    Polynomial p = av * relabel_into(pm.psi[k], sys.ring, pu);
    for (std::size_t i = 0; i < m; ++i) p += d[i] * relabel_into(pm.dpsi[i][k], sys.ring, pu);
    out.push_back(std::move(p));
  }
  if (!pm.constrained()) return out;
  add_constraints(pm, sys, pu);
  for (const auto& row : pm.dcon) {
    Polynomial lin(sys.ring);
    for (std::size_t i = 0; i < m; ++i) lin += d[i] * relabel_into(row[i], sys.ring, pu);
    sys.eqs.add(std::move(lin));
  }
  // Smooth points of the parameter locus: the constraint Jacobian times a
  // random m x r matrix is invertible.
  const std::size_t r = pm.dcon.size();
  std::vector<std::vector<Polynomial>> compressed(r, std::vector<Polynomial>(r, Polynomial(sys.ring)));
  for (std::size_t c = 0; c < r; ++c) {
    Vector mix = rng.vector(pm.field(), m);
    for (std::size_t g = 0; g < r; ++g) {
      for (std::size_t i = 0; i < m; ++i) compressed[g][c] += relabel_into(pm.dcon[g][i], sys.ring, pu).scaled(mix[i]);
    }
  }
  Polynomial det = determinant(compressed);
  sys.eqs.add(Polynomial::variable(sys.ring, y) * det - Polynomial::constant(sys.ring, 1));
  return out;
}

std::vector<std::string> tangent_unknowns(const ParamMap& pm) {
  auto names = prefixed(pm.params, "u.");
  for (auto& v : prefixed(pm.params, "d.")) names.push_back(v);
  names.push_back("_a");
  if (pm.constrained()) names.push_back("_y");
  return names;
}

std::int64_t distinct_count(const Ideal& eqs, const Polynomial& form, const GbOptions& opts) {
  try {
    return count_zero_dim(eqs, form, opts).distinct;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotZeroDimensional) throw Error(ErrorKind::NotFinite, e.what());
    throw;
  }
}

std::int64_t divide_exact(std::int64_t count, std::int64_t by, const std::string& what) {
  if (by <= 0 || count % by != 0) {
    throw Error(ErrorKind::GenericityWarning, what + ": count " + std::to_string(count) +
                                                  " is not divisible by " + std::to_string(by));
  }
  return count / by;
}

std::int64_t tan_dim_once(const ParamMap& pm, Rng& rng, const GbOptions& opts) {
  TangentFrame fr = regular_point(pm, rng, opts);
  auto rows = fr.span_rows;
  for (auto& w : fr.second_rows(rng.vector(fr.field, fr.dim()))) rows.push_back(std::move(w));
  return static_cast<std::int64_t>(rank_of(fr.field, rows, fr.ambient_dim + 1)) - 1;
}

std::int64_t tau_once(const ParamMap& pm, std::int64_t pdeg, Rng& rng, const GbOptions& opts) {
  TangentFrame fr = regular_point(pm, rng, opts);
  Vector coeffs = rng.vector(pm.field(), fr.span_rows.size());
  Vector w = Vector(pm.psi.size(), pm.field().zero());
  for (std::size_t r = 0; r < fr.span_rows.size(); ++r) {
    for (std::size_t k = 0; k < w.size(); ++k) {
      w[k] = pm.field().add(w[k], pm.field().mul(coeffs[r], fr.span_rows[r][k]));
    }
  }
  auto names = tangent_unknowns(pm);
  System sys(make_ring(names, pm.field()));
  auto point = tangent_point(pm, sys, "_a", "u.", "d.", "_y", rng);
  for (std::size_t k = 0; k < point.size(); ++k) sys.eqs.add(point[k] - Polynomial::constant(sys.ring, w[k]));
  auto count = distinct_count(sys.eqs, random_form(sys.ring, prefixed(pm.params, "u."), rng), opts);
  return divide_exact(count, pdeg, "tau");
}

std::int64_t omega_top_once(const ParamMap& pm, std::int64_t pdeg, Rng& rng, const GbOptions& opts) {
  const std::size_t n = pm.expected_dim;
  auto names = tangent_unknowns(pm);
  names.push_back("_g");
  System sys(make_ring(names, pm.field()));
  auto point = tangent_point(pm, sys, "_a", "u.", "d.", "_y", rng);
  for (std::size_t j = 0; j < 2 * n; ++j) sys.eqs.add(dot(point, rng.vector(pm.field(), point.size())));
  // Where the differential drops rank a nonzero (a, d) can give the zero
  // vector; those are not tangent spaces.
  sys.eqs.add(Polynomial::variable(sys.ring, "_g") * dot(point, rng.vector(pm.field(), point.size())) -
              Polynomial::constant(sys.ring, 1));
  auto scaling = prefixed(pm.params, "d.");
  scaling.push_back("_a");
  sys.eqs.add(random_form(sys.ring, scaling, rng) - Polynomial::constant(sys.ring, 1));
  auto count = distinct_count(sys.eqs, random_form(sys.ring, prefixed(pm.params, "u."), rng), opts);
  return divide_exact(count, pdeg, "omega");
}

// Ordered pairs (u, v), u != v, solving `pair_equations`, divided by 2 pdeg^2.
template <class F>
std::int64_t secant_pairs(const ParamMap& pm, std::int64_t pdeg, std::vector<std::string> extra, Rng& rng,
                          const GbOptions& opts, const std::string& what, F&& pair_equations) {
  auto names = prefixed(pm.params, "u.");
  for (auto& v : prefixed(pm.params, "v.")) names.push_back(v);
  for (auto& e : extra) names.push_back(e);
  names.push_back("_y");
  System sys(make_ring(names, pm.field()));
  add_constraints(pm, sys, "u.");
  add_constraints(pm, sys, "v.");
  auto pu = relabel_all(pm.psi, sys.ring, "u.");
  auto pv = relabel_all(pm.psi, sys.ring, "v.");
  Polynomial guard = pair_equations(sys, pu, pv);
  // Separates u from v: a random linear form takes different values.
  Vector sep = rng.vector(pm.field(), pm.nparams());
  Polynomial diff(sys.ring);
  for (std::size_t i = 0; i < pm.nparams(); ++i) {
    diff += (Polynomial::variable(sys.ring, "u." + pm.params->name(i)) -
             Polynomial::variable(sys.ring, "v." + pm.params->name(i)))
                .scaled(sep[i]);
  }
  sys.eqs.add(Polynomial::variable(sys.ring, "_y") * guard * diff - Polynomial::constant(sys.ring, 1));
  auto both = prefixed(pm.params, "u.");
  for (auto& v : prefixed(pm.params, "v.")) both.push_back(v);
  const std::int64_t ordered = distinct_count(sys.eqs, random_form(sys.ring, both, rng), opts);
  if (ordered % 2 != 0) {
    throw Error(ErrorKind::OddOrderedCount, what + ": ordered count " + std::to_string(ordered) + " is odd");
  }
  return divide_exact(ordered / 2, pdeg * pdeg, what);
}

std::int64_t mu_once(const ParamMap& pm, std::int64_t pdeg, Rng& rng, const GbOptions& opts) {
  const Field& f = pm.field();
  const Vector pu = regular_point(pm, rng, opts).span_rows.front();
  const Vector pv = regular_point(pm, rng, opts).span_rows.front();
  Scalar a0 = rng.nonzero(f), b0 = rng.nonzero(f);
  Vector p(pu.size());
  for (std::size_t k = 0; k < p.size(); ++k) p[k] = f.add(f.mul(a0, pu[k]), f.mul(b0, pv[k]));
  return secant_pairs(pm, pdeg, {"_a", "_s"}, rng, opts, "mu",
                      [&](System& sys, const std::vector<Polynomial>& u, const std::vector<Polynomial>& v) {
                        Polynomial a = Polynomial::variable(sys.ring, "_a");
                        Polynomial s = Polynomial::variable(sys.ring, "_s");
                        for (std::size_t k = 0; k < p.size(); ++k) {
                          sys.eqs.add(s.scaled(p[k]) - a * u[k] - v[k]);
                        }
                        return s;
                      });
}

std::int64_t sigma_once(const ParamMap& pm, std::int64_t pdeg, Rng& rng, const GbOptions& opts) {
  const std::size_t n = pm.expected_dim;
  return secant_pairs(pm, pdeg, {"_a"}, rng, opts, "sigma",
                      [&](System& sys, const std::vector<Polynomial>& u, const std::vector<Polynomial>& v) {
                        Polynomial a = Polynomial::variable(sys.ring, "_a");
                        std::vector<Polynomial> line;
                        for (std::size_t k = 0; k < u.size(); ++k) line.push_back(a * u[k] + v[k]);
                        for (std::size_t j = 0; j <= 2 * n; ++j) sys.eqs.add(dot(line, rng.vector(pm.field(), line.size())));
                        // Pairs with proportional images span no line.
                        return dot(line, rng.vector(pm.field(), line.size()));
                      });
}

// The parametrization restricted to `count` random hyperplane sections.
ParamMap sliced(const ParamMap& pm, std::size_t count, Rng& rng) {
  Ideal cons = pm.constraints;
  for (std::size_t k = 0; k < count; ++k) cons.add(dot(pm.psi, rng.vector(pm.field(), pm.psi.size())));
  return ParamMap(pm.params, pm.psi, std::move(cons), pm.expected_dim - count);
}

const std::vector<ErrorKind> kRetryable{ErrorKind::NotFinite, ErrorKind::GenericityWarning,
                                        ErrorKind::NoRegularPointFound, ErrorKind::OddOrderedCount,
                                        ErrorKind::SliceSingularityHit};

template <class F>
std::int64_t reseeding(Rng& rng, F&& fn) {
  for (unsigned a = 1;; ++a) {
    Rng sub = rng.fork(0x5eed + a);
    try {
      return fn(sub);
    } catch (const Error& e) {
      bool retry = false;
      for (auto k : kRetryable) retry = retry || e.kind() == k;
      if (!retry || a >= kReseeds) throw;
    }
  }
}

}  // namespace

std::int64_t tau(const VarietyHandle& x, Rng& rng, const EngineOptions& opts) {
  const ParamMap& pm = x.require_param();
  if (tan_dim_fast(x, rng, opts) < static_cast<std::int64_t>(2 * pm.expected_dim)) return 0;
  const std::int64_t pdeg = param_degree(x, rng, opts);
  return run_trials("tau(" + x.name() + ")", rng, opts,
                    [&](Rng& sub) { return reseeding(sub, [&](Rng& r) { return tau_once(pm, pdeg, r, opts.gb); }); });
}

std::int64_t omega_top(const VarietyHandle& x, Rng& rng, const EngineOptions& opts) {
  const ParamMap& pm = x.require_param();
  if (tan_dim_fast(x, rng, opts) < static_cast<std::int64_t>(2 * pm.expected_dim)) return 0;
  const std::int64_t pdeg = param_degree(x, rng, opts);
  return run_trials("omega_" + std::to_string(pm.expected_dim) + "(" + x.name() + ")", rng, opts, [&](Rng& sub) {
    return reseeding(sub, [&](Rng& r) { return omega_top_once(pm, pdeg, r, opts.gb); });
  });
}

std::int64_t omega_slice(const VarietyHandle& x, int i, Rng& rng, const EngineOptions& opts) {
  const ParamMap& pm = x.require_param();
  const int n = static_cast<int>(pm.expected_dim);
  if (i < 1 || i > n) throw Error(ErrorKind::InvalidSpec, "omega index must lie in 1.." + std::to_string(n));
  if (i == n) return omega_top(x, rng, opts);
  const std::int64_t pdeg = param_degree(x, rng, opts);
  return run_trials("omega_" + std::to_string(i) + "(" + x.name() + ")", rng, opts, [&](Rng& sub) {
    return reseeding(sub, [&](Rng& r) -> std::int64_t {
      ParamMap y = sliced(pm, static_cast<std::size_t>(n - i), r);
      if (tan_dim_once(y, r, opts.gb) < 2 * i) return 0;
      return omega_top_once(y, pdeg, r, opts.gb);
    });
  });
}

std::int64_t omega_slice_ideal(const VarietyHandle& x, int i, Rng& rng, const EngineOptions& opts) {
  const Ideal& ideal = implicitize(x, opts.gb);
  const int n = static_cast<int>(x.dim());
  if (i < 1 || i > n) throw Error(ErrorKind::InvalidSpec, "omega index must lie in 1.." + std::to_string(n));
  const std::size_t cols = x.ambient_dim() + 1;
  std::vector<std::string> xs, vs;
  for (std::size_t k = 0; k < cols; ++k) {
    xs.push_back("x" + std::to_string(k));
    vs.push_back("v" + std::to_string(k));
  }
  auto names = xs;
  names.insert(names.end(), vs.begin(), vs.end());
  return run_trials("omega_" + std::to_string(i) + " by ideal", rng, opts, [&](Rng& sub) {
    return reseeding(sub, [&](Rng& r) -> std::int64_t {
      auto ring = make_ring(names, x.field());
      std::vector<Polynomial> xv, vv;
      for (std::size_t k = 0; k < cols; ++k) {
        xv.push_back(Polynomial::variable(ring, xs[k]));
        vv.push_back(Polynomial::variable(ring, vs[k]));
      }
      Ideal eqs(ring);
      for (const auto& g : ideal.generators()) {
        eqs.add(relabel_into(g, ring, ""));
        Polynomial tangent(ring);
        for (std::size_t k = 0; k < cols; ++k) tangent += vv[k] * relabel_into(differentiate(g, k), ring, "");
        eqs.add(std::move(tangent));
      }
      for (int k = 0; k < n - i; ++k) {
        Vector c = r.vector(x.field(), cols);
        eqs.add(dot(xv, c));
        eqs.add(dot(vv, c));
      }
      for (int j = 0; j < 2 * i; ++j) eqs.add(dot(vv, r.vector(x.field(), cols)));
      eqs.add(dot(xv, r.vector(x.field(), cols)) - Polynomial::constant(ring, 1));
      eqs.add(dot(vv, r.vector(x.field(), cols)) - Polynomial::constant(ring, 1));
      try {
        return count_zero_dim(eqs, random_form(ring, xs, r), opts.gb).distinct;
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::NotZeroDimensional) {
          throw Error(ErrorKind::SliceSingularityHit, "tangent incidence on the section is not finite");
        }
        throw;
      }
    });
  });
}

std::int64_t secant_mu(const VarietyHandle& x, Rng& rng, const EngineOptions& opts) {
  const ParamMap& pm = x.require_param();
  const std::int64_t pdeg = param_degree(x, rng, opts);
  return run_trials("mu(" + x.name() + ")", rng, opts,
                    [&](Rng& sub) { return reseeding(sub, [&](Rng& r) { return mu_once(pm, pdeg, r, opts.gb); }); });
}

std::int64_t sigma_nodes(const VarietyHandle& x, Rng& rng, const EngineOptions& opts) {
  const ParamMap& pm = x.require_param();
  const std::size_t n = pm.expected_dim, n_amb = pm.ambient_dim();
  if (n_amb < 2 * n) throw Error(ErrorKind::InvalidSpec, "sigma needs N >= 2n");
  if (n_amb == 2 * n) return 0;
  const std::int64_t pdeg = param_degree(x, rng, opts);
  return run_trials("sigma(" + x.name() + ")", rng, opts, [&](Rng& sub) {
    return reseeding(sub, [&](Rng& r) { return sigma_once(pm, pdeg, r, opts.gb); });
  });
}

IdentityCheck severi_check(const VarietyHandle& x, Rng& rng, const EngineOptions& opts, InvariantReport* report) {
  const ParamMap& pm = x.require_param();
  const int n = static_cast<int>(pm.expected_dim);
  const std::int64_t d = run_trials("deg(" + x.name() + ")", rng, opts, [&](Rng& sub) {
    return reseeding(sub, [&](Rng& r) { return degree_by_slicing(x, r, opts); });
  });
  const std::int64_t sigma = sigma_nodes(x, rng, opts);
  std::int64_t omega_sum = 0;
  std::string operands;
  for (int i = 1; i <= n; ++i) {
    const std::int64_t w = omega_slice(x, i, rng, opts);
    omega_sum += w;
    operands += " omega_" + std::to_string(i) + "=" + std::to_string(w);
    if (report) report->omega[i] = w;
  }
  if (report) report->sigma = sigma;
  IdentityCheck c{"severi", 2 * sigma, d * (d - 1) - omega_sum, false,
                  "d=" + std::to_string(d) + " sigma=" + std::to_string(sigma) + operands};
  c.pass = c.lhs == c.rhs;
  if (report) report->identities.push_back(c);
  return c;
}

std::vector<IdentityCheck> bounds_check(const InvariantReport& rep, std::size_t ambient_dim) {
  std::vector<IdentityCheck> out;
  const auto n_amb = static_cast<std::int64_t>(ambient_dim);
  if (rep.dim_tan && rep.deg_tan && rep.dim_sec && *rep.dim_tan < *rep.dim_sec) {
    IdentityCheck c{"tangent_degree_bound", *rep.deg_tan, 2 * (n_amb - *rep.dim_tan + 1), false, ""};
    c.pass = c.lhs >= c.rhs;
    c.note = "slack " + std::to_string(c.lhs - c.rhs);
    if (c.lhs == c.rhs) c.note += "; minimal tangential degree";
    out.push_back(c);
  }
  if (rep.dim_sec && rep.deg_sec && *rep.dim_sec < n_amb) {
    const std::int64_t k = n_amb - *rep.dim_sec + 2;
    IdentityCheck c{"secant_degree_bound", *rep.deg_sec, k * (k - 1) / 2, false, ""};
    c.pass = c.lhs >= c.rhs;
    c.note = "slack " + std::to_string(c.lhs - c.rhs);
    if (c.lhs == c.rhs) c.note += "; equality";
    out.push_back(c);
  }
  return out;
}

std::int64_t surface_degtan_formula(std::int64_t d, std::int64_t hk, std::int64_t k2, std::int64_t chi) {
  return 6 * d + 4 * hk + 2 * k2 - 12 * chi;
}

nlohmann::json InvariantReport::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  if (tau) j["tau"] = *tau;
  if (!omega.empty()) {
    nlohmann::json o = nlohmann::json::object();
    for (const auto& [i, v] : omega) o[std::to_string(i)] = v;
    j["omega"] = o;
  }
  if (mu) j["mu"] = *mu;
  if (sigma) j["sigma"] = *sigma;
  if (deg_tan) j["deg_tan"] = *deg_tan;
  if (dim_tan) j["dim_tan"] = *dim_tan;
  if (deg_sec) j["deg_sec"] = *deg_sec;
  if (dim_sec) j["dim_sec"] = *dim_sec;
  if (!identities.empty()) {
    nlohmann::json ids = nlohmann::json::array();
    for (const auto& c : identities) {
      nlohmann::json e{{"name", c.name}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"pass", c.pass}};
      if (!c.note.empty()) e["note"] = c.note;
      ids.push_back(e);
    }
    j["identities"] = ids;
  }
  if (!notes.empty()) j["notes"] = notes;
  return j;
}

bool InvariantReport::all_pass() const {
  for (const auto& c : identities) {
    if (!c.pass) return false;
  }
  return true;
}

}  // namespace tanvar
