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

#include <algorithm>

#include "tanvar/error.hpp"
#include "tanvar/varieties/variety.hpp"

namespace tanvar {

namespace {

Polynomial power_of(const Polynomial& x, unsigned e) { return x.pow(e); }

// Random affine chart sum r_i l_i = 1 on the scaling variables.
Polynomial random_chart(const RingPtr& ring, const std::vector<std::size_t>& vars, Rng& rng) {
  Polynomial chart = Polynomial::constant(ring, -1);
  for (auto v : vars) chart += Polynomial::variable(ring, v).scaled(rng.nonzero(ring->field()));
  return chart;
}

Polynomial random_univariate(const Polynomial& t, unsigned degree, Rng& rng) {
  const Field& f = t.field();
  Polynomial out(t.ring());
  for (unsigned k = 0; k <= degree; ++k) {
    Scalar c = k == degree ? rng.nonzero(f) : rng.scalar(f);
    out += power_of(t, k).scaled(c);
  }
  return out;
}

std::string join_numbers(const std::vector<unsigned>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s;
}

}  // namespace

LinearSpace::LinearSpace(Field field, std::vector<Vector> rows, std::size_t ambient_dim)
    : field_(std::move(field)), rows_(std::move(rows)), ambient_(ambient_dim) {
  if (rows_.empty()) throw Error(ErrorKind::InvalidSpec, "linear space needs at least one spanning point");
  for (const auto& r : rows_) {
    if (r.size() != ambient_ + 1) throw Error(ErrorKind::DimensionMismatch, "spanning point has wrong length");
  }
  if (rank_of(field_, rows_, ambient_ + 1) != rows_.size()) {
    throw Error(ErrorKind::InvalidSpec, "spanning points are linearly dependent");
  }
}

LinearSpace LinearSpace::coordinate(const Field& field, std::size_t k, std::size_t ambient_dim) {
  if (k > ambient_dim) throw Error(ErrorKind::DimensionMismatch, "coordinate subspace larger than ambient");
  std::vector<Vector> rows;
  for (std::size_t i = 0; i <= k; ++i) {
    Vector e(ambient_dim + 1, field.zero());
    e[i] = field.one();
    rows.push_back(std::move(e));
  }
  return LinearSpace(field, std::move(rows), ambient_dim);
}

bool LinearSpace::contains(const Vector& point) const {
  auto rows = rows_;
  rows.push_back(point);
  return rank_of(field_, rows, ambient_ + 1) == rows_.size();
}

RingPtr ambient_ring(const Field& field, std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return make_ring(std::move(names), field);
}

VarietyHandle::VarietyHandle(std::string name, std::optional<ParamMap> param, std::optional<Ideal> ideal)
    : name_(std::move(name)), param_(std::move(param)), ideal_(std::move(ideal)) {
  if (!param_ && !ideal_) throw Error(ErrorKind::InvalidSpec, "variety needs a parametrization or an ideal");
  if (ideal_ && !ideal_->homogeneous()) throw Error(ErrorKind::NotHomogeneous, "variety ideal must be homogeneous");
  if (param_ && ideal_ && param_->ambient_dim() + 1 != ideal_->ring()->size()) {
    throw Error(ErrorKind::DimensionMismatch, "parametrization and ideal live in different spaces");
  }
}

const ParamMap& VarietyHandle::require_param() const {
  if (!param_) throw Error(ErrorKind::Unsupported, name_ + " has no parametrization");
  return *param_;
}

std::size_t VarietyHandle::ambient_dim() const {
  if (param_) return param_->ambient_dim();
  return ideal_->ring()->size() - 1;
}

std::size_t VarietyHandle::dim() const {
  if (param_) return param_->expected_dim;
  if (!hilbert_) hilbert_ = hilbert_dim_degree(*ideal_);
  if (hilbert_->projective_dimension < 0) throw Error(ErrorKind::ImageDegenerate, name_ + " is empty");
  return static_cast<std::size_t>(hilbert_->projective_dimension);
}

const Field& VarietyHandle::field() const {
  if (param_) return param_->field();
  return ideal_->ring()->field();
}

VarietyHandle rational_normal_curve(const Field& field, unsigned d) {
  if (d == 0) throw Error(ErrorKind::InvalidSpec, "rational normal curve needs degree >= 1");
  auto ring = make_ring({"t"}, field);
  Polynomial t = Polynomial::variable(ring, 0);
  std::vector<Polynomial> psi;
  for (unsigned k = 0; k <= d; ++k) psi.push_back(power_of(t, k));
  return VarietyHandle("rnc(" + std::to_string(d) + ")", ParamMap(ring, std::move(psi), Ideal(ring), 1));
}

VarietyHandle rational_normal_scroll(const Field& field, const std::vector<unsigned>& a, Rng& rng) {
  if (a.empty()) throw Error(ErrorKind::InvalidSpec, "scroll needs at least one block");
  if (std::all_of(a.begin(), a.end(), [](unsigned x) { return x == 0; })) {
    throw Error(ErrorKind::InvalidSpec, "scroll with all blocks zero is a linear space");
  }
  std::vector<std::string> names{"t"};
  for (std::size_t i = 0; i < a.size(); ++i) names.push_back("l" + std::to_string(i + 1));
  auto ring = make_ring(names, field);
  Polynomial t = Polynomial::variable(ring, 0);
  std::vector<Polynomial> psi;
  std::vector<std::size_t> scaling;
  for (std::size_t i = 0; i < a.size(); ++i) {
    Polynomial l = Polynomial::variable(ring, i + 1);
    scaling.push_back(i + 1);
    for (unsigned k = 0; k <= a[i]; ++k) psi.push_back(l * power_of(t, k));
  }
  Ideal cons(ring, {random_chart(ring, scaling, rng)});
  return VarietyHandle("S(" + join_numbers(a) + ")", ParamMap(ring, std::move(psi), std::move(cons), a.size()));
}

VarietyHandle veronese(const Field& field, unsigned n) {
  if (n == 0) throw Error(ErrorKind::InvalidSpec, "Veronese embedding needs n >= 1");
  std::vector<std::string> names;
  for (unsigned i = 1; i <= n; ++i) names.push_back("y" + std::to_string(i));
  auto ring = make_ring(names, field);
  std::vector<Polynomial> psi{Polynomial::constant(ring, 1)};
  for (unsigned i = 0; i < n; ++i) psi.push_back(Polynomial::variable(ring, i));
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = i; j < n; ++j) psi.push_back(Polynomial::variable(ring, i) * Polynomial::variable(ring, j));
  }
  return VarietyHandle("v2(P" + std::to_string(n) + ")", ParamMap(ring, std::move(psi), Ideal(ring), n));
}

VarietyHandle segre(const Field& field, unsigned a, unsigned b) {
  if (a == 0 || b == 0) throw Error(ErrorKind::InvalidSpec, "Segre factors need positive dimension");
  std::vector<std::string> names;
  for (unsigned i = 1; i <= a; ++i) names.push_back("y" + std::to_string(i));
  for (unsigned j = 1; j <= b; ++j) names.push_back("z" + std::to_string(j));
  auto ring = make_ring(names, field);
  std::vector<Polynomial> xs{Polynomial::constant(ring, 1)}, ys{Polynomial::constant(ring, 1)};
  for (unsigned i = 0; i < a; ++i) xs.push_back(Polynomial::variable(ring, i));
  for (unsigned j = 0; j < b; ++j) ys.push_back(Polynomial::variable(ring, a + j));
  std::vector<Polynomial> psi;
  for (const auto& x : xs) {
    for (const auto& y : ys) psi.push_back(x * y);
  }
  return VarietyHandle("Seg(" + std::to_string(a) + "," + std::to_string(b) + ")",
                       ParamMap(ring, std::move(psi), Ideal(ring), a + b));
}

VarietyHandle osculating_scroll(const VarietyHandle& curve, unsigned k, Rng& rng) {
  const ParamMap& c = curve.require_param();
  if (c.nparams() != 1 || c.constrained() || c.expected_dim != 1) {
    throw Error(ErrorKind::InvalidSpec, "osculating scroll needs an unconstrained curve in one parameter");
  }
  if (k == 0) throw Error(ErrorKind::InvalidSpec, "osculating order must be positive");
  std::vector<std::string> names{c.params->name(0)};
  std::vector<std::size_t> scaling;
  for (unsigned i = 0; i <= k; ++i) {
    names.push_back("l" + std::to_string(i));
    scaling.push_back(i + 1);
  }
  auto ring = make_ring(names, c.field());
  std::vector<Polynomial> deriv;
  for (const auto& p : c.psi) deriv.push_back(restrict_into(p, ring));
  std::vector<Polynomial> psi(c.psi.size(), Polynomial(ring));
  for (unsigned i = 0; i <= k; ++i) {
    Polynomial l = Polynomial::variable(ring, i + 1);
    for (std::size_t j = 0; j < psi.size(); ++j) psi[j] += l * deriv[j];
    for (auto& d : deriv) d = differentiate(d, std::size_t{0});
  }
  Ideal cons(ring, {random_chart(ring, scaling, rng)});
  return VarietyHandle("Osc" + std::to_string(k) + "(" + curve.name() + ")",
                       ParamMap(ring, std::move(psi), std::move(cons), k + 1));
}

VarietyHandle verra(const Field& field, unsigned d, Rng& rng) {
  if (d < 4) throw Error(ErrorKind::InvalidSpec, "Verra-type surface needs degree >= 4");
  auto ring = make_ring({"t", "l1", "l2"}, field);
  Polynomial t = Polynomial::variable(ring, 0), l1 = Polynomial::variable(ring, 1), l2 = Polynomial::variable(ring, 2);
  Polynomial p = random_univariate(t, d - 3, rng);
  Polynomial q = random_univariate(t, d - 3, rng);
  std::vector<Polynomial> psi{l1, l1 * t, l1 * power_of(t, 2), l1 * power_of(t, 3), l2 * p, l2 * q};
  Ideal cons(ring, {random_chart(ring, {1, 2}, rng)});
  return VarietyHandle("Verra(" + std::to_string(d) + ")", ParamMap(ring, std::move(psi), std::move(cons), 2));
}

VarietyHandle roth(const Field& field, unsigned b, unsigned n_ambient, Rng& rng, const EngineOptions& opts) {
  if (b == 0 || n_ambient < 3) throw Error(ErrorKind::InvalidSpec, "Roth surface needs b >= 1 and N >= 3");
  auto ring = make_ring({"t", "l0", "l1", "l2"}, field);
  Polynomial t = Polynomial::variable(ring, 0);
  std::vector<Polynomial> l{Polynomial::variable(ring, 1), Polynomial::variable(ring, 2), Polynomial::variable(ring, 3)};
  std::vector<Polynomial> psi{l[0], l[1]};
  for (unsigned k = 0; k + 2 <= n_ambient; ++k) psi.push_back(l[2] * power_of(t, k));
  const std::string name = "Roth(" + std::to_string(b) + "," + std::to_string(n_ambient) + ")";
  for (int attempt = 0; attempt < 3; ++attempt) {
    Polynomial g(ring);
    for (unsigned a2 = 0; a2 <= b; ++a2) {
      for (unsigned a1 = 0; a1 + a2 <= b; ++a1) {
        unsigned a0 = b - a1 - a2;
        Polynomial c = random_univariate(t, 1 + (n_ambient - 2) * a2, rng);
        g += c * power_of(l[0], a0) * power_of(l[1], a1) * power_of(l[2], a2);
      }
    }
    Ideal cons(ring, {g, random_chart(ring, {1, 2, 3}, rng)});
    ParamMap pm(ring, psi, std::move(cons), 2);
    try {
      Rng probe = rng.fork(attempt);
      (void)regular_parameter_point(pm, probe, opts.gb);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::NoRegularPointFound) continue;
      throw;
    }
    return VarietyHandle(name, std::move(pm));
  }
  throw Error(ErrorKind::SmoothnessCheckFailed, name + ": no regular member after 3 draws");
}

VarietyHandle linear_variety(const LinearSpace& space) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= space.dim(); ++i) names.push_back("v" + std::to_string(i));
  auto ring = make_ring(names, space.field());
  const auto& rows = space.rows();
  std::vector<Polynomial> psi;
  for (std::size_t c = 0; c <= space.ambient_dim(); ++c) {
    Polynomial p = Polynomial::constant(ring, rows[0][c]);
    for (std::size_t i = 1; i < rows.size(); ++i) p += Polynomial::variable(ring, i - 1).scaled(rows[i][c]);
    psi.push_back(std::move(p));
  }
  return VarietyHandle("P" + std::to_string(space.dim()), ParamMap(ring, std::move(psi), Ideal(ring), space.dim()));
}

VarietyHandle custom_variety(const Field& field, const std::vector<std::string>& vars,
                             const std::vector<std::string>& psi_src, const std::vector<std::string>& constraint_src,
                             std::optional<std::size_t> dim) {
  if (vars.empty()) throw Error(ErrorKind::InvalidSpec, "custom variety needs at least one parameter");
  for (const auto& v : vars) {
    if (v.empty() || v[0] == '_') throw Error(ErrorKind::InvalidSpec, "parameter names must not start with '_'");
  }
  if (psi_src.size() < 2) throw Error(ErrorKind::InvalidSpec, "custom variety needs at least two coordinates");
  auto ring = make_ring(vars, field);
  std::vector<Polynomial> psi;
  for (const auto& s : psi_src) psi.push_back(parse_poly(s, ring));
  std::vector<Polynomial> cons;
  for (const auto& s : constraint_src) cons.push_back(parse_poly(s, ring));
  if (std::all_of(psi.begin(), psi.end(), [](const Polynomial& p) { return p.is_zero(); })) {
    throw Error(ErrorKind::InvalidSpec, "parametrization is identically zero");
  }
  std::size_t expected = 0;
  if (dim) {
    expected = *dim;
  } else {
    if (cons.size() > vars.size()) throw Error(ErrorKind::InvalidSpec, "more constraints than parameters");
    expected = vars.size() - cons.size();
  }
  Ideal ci(ring, std::move(cons));
  return VarietyHandle("custom", ParamMap(ring, std::move(psi), std::move(ci), expected));
}

}  // namespace tanvar
