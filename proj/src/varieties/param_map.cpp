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

#include "tanvar/error.hpp"
#include "tanvar/varieties/variety.hpp"

namespace tanvar {

namespace {

struct Reduced {
  RingPtr ring;
  std::vector<Polynomial> psi;
  std::vector<Polynomial> constraints;
};

// Substitutes away one variable per linear constraint until none is left.
Reduced substitute_linear(RingPtr ring, std::vector<Polynomial> psi, std::vector<Polynomial> constraints) {
  while (true) {
    std::size_t pick = constraints.size();
    for (std::size_t g = 0; g < constraints.size(); ++g) {
      if (constraints[g].is_zero()) continue;
      if (constraints[g].is_constant()) throw Error(ErrorKind::InvalidSpec, "constraints have no solutions");
      if (constraints[g].total_degree() == 1) {
        pick = g;
        break;
      }
    }
    if (pick == constraints.size()) break;
    const Polynomial g = constraints[pick];
    const Field& f = g.field();
    std::size_t var = ring->size();
    for (std::size_t i = ring->size(); i-- > 0;) {
      if (g.degree_in(i) > 0) {
        var = i;
        break;
      }
    }
    Monomial m = Monomial::variable(var);
    Scalar c = g.coefficient(m);
    Polynomial rest = g - Polynomial::monomial(ring, m, c);
    Polynomial solved = rest.scaled(f.neg(f.inv(c)));
    std::vector<std::string> names;
    for (std::size_t i = 0; i < ring->size(); ++i) {
      if (i != var) names.push_back(ring->name(i));
    }
    RingPtr next = make_ring(names, f);
    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < ring->size(); ++i) {
      images.push_back(i == var ? restrict_into(solved, next) : Polynomial::variable(next, ring->name(i)));
    }
    for (auto& p : psi) p = substitute(p, images);
    std::vector<Polynomial> kept;
    for (std::size_t h = 0; h < constraints.size(); ++h) {
      if (h == pick) continue;
      Polynomial q = substitute(constraints[h], images);
      if (!q.is_zero()) kept.push_back(std::move(q));
    }
    constraints = std::move(kept);
    ring = next;
  }
  return {ring, std::move(psi), std::move(constraints)};
}

Vector eval_all(const std::vector<Polynomial>& polys, const Vector& u) {
  Vector out;
  out.reserve(polys.size());
  for (const auto& p : polys) out.push_back(evaluate(p, u));
  return out;
}

}  // namespace

ParamMap::ParamMap(RingPtr ring, std::vector<Polynomial> psi_in, Ideal constraints_in, std::size_t dim)
    : params(ring), constraints(ring), expected_dim(dim) {
  if (psi_in.empty()) throw Error(ErrorKind::InvalidSpec, "parametrization has no coordinates");
  for (const auto& p : psi_in) require_same_ring(ring, p.ring());
  require_same_ring(ring, constraints_in.ring());
  Reduced r = substitute_linear(ring, std::move(psi_in), constraints_in.generators());
  params = r.ring;
  psi = std::move(r.psi);
  constraints = Ideal(params, std::move(r.constraints));
  if (expected_dim > params->size()) throw Error(ErrorKind::InvalidSpec, "expected dimension exceeds parameter count");
  const std::size_t m = params->size();
  dpsi.resize(m);
  d2psi.resize(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (const auto& p : psi) dpsi[i].push_back(differentiate(p, i));
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (j < i) {
        d2psi[i * m + j] = d2psi[j * m + i];
        continue;
      }
      for (const auto& d : dpsi[i]) d2psi[i * m + j].push_back(differentiate(d, j));
    }
  }
  for (const auto& g : constraints.generators()) {
    std::vector<Polynomial> row, hess(m * m, Polynomial(params));
    for (std::size_t i = 0; i < m; ++i) row.push_back(differentiate(g, i));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i; j < m; ++j) {
        hess[i * m + j] = differentiate(row[i], j);
        hess[j * m + i] = hess[i * m + j];
      }
    }
    dcon.push_back(std::move(row));
    d2con.push_back(std::move(hess));
  }
}

Vector ParamMap::eval(const Vector& u) const { return eval_all(psi, u); }

std::vector<Vector> ParamMap::jacobian(const Vector& u) const {
  std::vector<Vector> cols;
  cols.reserve(dpsi.size());
  for (const auto& d : dpsi) cols.push_back(eval_all(d, u));
  return cols;
}

Matrix ParamMap::constraint_jacobian(const Vector& u) const {
  std::vector<Vector> rows;
  for (const auto& row : dcon) rows.push_back(eval_all(row, u));
  return Matrix::from_rows(field(), rows, nparams());
}

std::vector<Vector> ParamMap::parameter_tangents(const Vector& u) const {
  const std::size_t m = nparams();
  if (!constrained()) {
    std::vector<Vector> basis;
    for (std::size_t i = 0; i < m; ++i) {
      Vector e(m, field().zero());
      e[i] = field().one();
      basis.push_back(std::move(e));
    }
    return basis;
  }
  return constraint_jacobian(u).kernel();
}

std::vector<Vector> ParamMap::lifted_tangent_space(const Vector& u) const {
  const Field& f = field();
  std::vector<Vector> rows{eval(u)};
  auto cols = jacobian(u);
  for (const auto& k : parameter_tangents(u)) {
    Vector v(psi.size(), f.zero());
    for (std::size_t i = 0; i < k.size(); ++i) {
      if (f.is_zero(k[i])) continue;
      for (std::size_t c = 0; c < v.size(); ++c) v[c] = f.add(v[c], f.mul(k[i], cols[i][c]));
    }
    rows.push_back(std::move(v));
  }
  return rows;
}

Vector ParamMap::second_derivative(const Vector& u, const Vector& a, const Vector& b) const {
  const Field& f = field();
  const std::size_t m = nparams();
  Vector out(psi.size(), f.zero());
  for (std::size_t i = 0; i < m; ++i) {
    if (f.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < m; ++j) {
      if (f.is_zero(b[j])) continue;
      Scalar w = f.mul(a[i], b[j]);
      const auto& h = d2psi[i * m + j];
      for (std::size_t c = 0; c < out.size(); ++c) {
        if (!h[c].is_zero()) out[c] = f.add(out[c], f.mul(w, evaluate(h[c], u)));
      }
    }
  }
  if (!constrained()) return out;
  Vector rhs;
  for (const auto& hess : d2con) {
    Scalar acc = f.zero();
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        if (f.is_zero(a[i]) || f.is_zero(b[j]) || hess[i * m + j].is_zero()) continue;
        acc = f.add(acc, f.mul(f.mul(a[i], b[j]), evaluate(hess[i * m + j], u)));
      }
    }
    rhs.push_back(f.neg(acc));
  }
  auto correction = constraint_jacobian(u).solve(rhs);
  if (!correction) throw Error(ErrorKind::NoRegularPointFound, "constraint Jacobian is not surjective at the frame point");
  auto cols = jacobian(u);
  for (std::size_t i = 0; i < m; ++i) {
    if (f.is_zero((*correction)[i])) continue;
    for (std::size_t c = 0; c < out.size(); ++c) out[c] = f.add(out[c], f.mul((*correction)[i], cols[i][c]));
  }
  return out;
}

std::optional<Vector> sample_parameter_point(const ParamMap& pm, Rng& rng, const GbOptions& opts) {
  const Field& f = pm.field();
  const std::size_t m = pm.nparams();
  if (!pm.constrained()) return rng.vector(f, m);
  Ideal system = pm.constraints;
  for (std::size_t k = 0; k < pm.expected_dim; ++k) {
    Polynomial slice = Polynomial::constant(pm.params, rng.scalar(f));
    for (std::size_t i = 0; i < m; ++i) slice += Polynomial::variable(pm.params, i).scaled(rng.nonzero(f));
    system.add(slice);
  }
  std::vector<std::vector<Scalar>> sols;
  try {
    sols = rational_solutions(system, rng, opts);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotZeroDimensional) return std::nullopt;
    throw;
  }
  if (sols.empty()) return std::nullopt;
  return sols[rng.below(sols.size())];
}

Vector regular_parameter_point(const ParamMap& pm, Rng& rng, const GbOptions& opts) {
  const std::size_t n = pm.expected_dim;
  for (int attempt = 0; attempt < 10; ++attempt) {
    auto u = sample_parameter_point(pm, rng, opts);
    if (!u) continue;
    if (pm.constrained()) {
      if (pm.constraint_jacobian(*u).rank() != pm.nparams() - n) continue;
    }
    auto rows = pm.lifted_tangent_space(*u);
    if (rows.size() == n + 1 && rank_of(pm.field(), rows, pm.psi.size()) == n + 1) return *u;
  }
  throw Error(ErrorKind::NoRegularPointFound, "no parameter point with tangent rank " + std::to_string(n + 1));
}

}  // namespace tanvar
