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

#include "tanvar/localgeom/localgeom.hpp"

#include "tanvar/error.hpp"
#include "tanvar/varieties/trials.hpp"

namespace tanvar {

namespace {

RingPtr lambda_ring(const Field& f, std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("l" + std::to_string(i));
  return make_ring(std::move(names), f);
}

std::int64_t frame_tan_dim(const TangentFrame& fr, Rng& rng) {
  auto rows = fr.span_rows;
  for (auto& w : fr.second_rows(rng.vector(fr.field, fr.dim()))) rows.push_back(std::move(w));
  return static_cast<std::int64_t>(rank_of(fr.field, rows, fr.ambient_dim + 1)) - 1;
}

// n x n minors of a matrix with polynomial entries, rows choosing subsets.
std::vector<Polynomial> maximal_minors(const std::vector<std::vector<Polynomial>>& m, std::size_t n) {
  std::vector<Polynomial> out;
  const std::size_t rows = m.size();
  if (rows < n) return out;
  std::vector<std::size_t> pick(n);
  for (std::size_t i = 0; i < n; ++i) pick[i] = i;
  while (true) {
    std::vector<std::vector<Polynomial>> sub;
    for (auto r : pick) sub.push_back(m[r]);
    Polynomial d = determinant(sub);
    if (!d.is_zero()) out.push_back(std::move(d));
    std::size_t i = n;
    while (i > 0 && pick[i - 1] == rows - n + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t k = i; k < n; ++k) pick[k] = pick[k - 1] + 1;
  }
  return out;
}

}  // namespace

std::vector<Vector> SecondFF::focal_matrix(const Vector& w) const {
  const Field& f = frame.field;
  const std::size_t n = dim();
  std::vector<Vector> out(normal.size(), Vector(n, f.zero()));
  for (std::size_t k = 0; k < normal.size(); ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < n; ++i) out[k][j] = f.add(out[k][j], f.mul(w[i], normal[k][i][j]));
    }
  }
  return out;
}

SecondFF second_ff(const VarietyHandle& x, Rng& rng, const EngineOptions& opts) {
  const ParamMap& pm = x.require_param();
  SecondFF ff{regular_point(pm, rng, opts.gb), nullptr, {}, {}, {}};
  const Field& f = ff.frame.field;
  const std::size_t n = ff.dim();
  ff.lambda_ring = lambda_ring(f, n);
  ff.normal_basis = ff.frame.normal_basis();
  const std::size_t codim = ff.normal_basis.size();
  ff.normal.assign(codim, std::vector<Vector>(n, Vector(n, f.zero())));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Vector c = ff.frame.normal_coordinates(ff.frame.second[i][j]);
      for (std::size_t k = 0; k < codim; ++k) ff.normal[k][i][j] = c[k];
    }
  }
  std::vector<Vector> coeffs;
  std::vector<Polynomial> candidates;
  for (std::size_t k = 0; k < codim; ++k) {
    Polynomial q(ff.lambda_ring);
    Vector row;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        Scalar c = i == j ? ff.normal[k][i][j] : f.add(ff.normal[k][i][j], ff.normal[k][j][i]);
        row.push_back(c);
        q += (Polynomial::variable(ff.lambda_ring, i) * Polynomial::variable(ff.lambda_ring, j)).scaled(c);
      }
    }
    coeffs.push_back(std::move(row));
    candidates.push_back(std::move(q));
  }
  const std::size_t monomials = n * (n + 1) / 2;
  for (auto k : independent_rows(f, coeffs, monomials)) ff.quadrics.push_back(candidates[k]);
  return ff;
}

BaseLocus ff_base_locus(const SecondFF& ff, const GbOptions& opts) {
  Ideal ideal(ff.lambda_ring, ff.quadrics);
  HilbertData h = hilbert_dim_degree(ideal, opts);
  return {std::move(ideal), std::move(h)};
}

int quadric_image_dim(const SecondFF& ff, const GbOptions& opts) {
  const std::size_t c = ff.quadrics.size(), n = ff.dim();
  if (c == 0) return -1;
  std::vector<std::string> names, keep;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("l" + std::to_string(i));
  for (std::size_t k = 0; k < c; ++k) keep.push_back("z" + std::to_string(k));
  names.insert(names.end(), keep.begin(), keep.end());
  auto ring = make_ring(names, ff.frame.field);
  Ideal graph(ring);
  for (std::size_t k = 0; k < c; ++k) {
    graph.add(Polynomial::variable(ring, keep[k]) - relabel_into(ff.quadrics[k], ring, ""));
  }
  return hilbert_dim_degree(eliminate(graph, keep, opts), opts).projective_dimension;
}

bool polar_hyperplanes_meet(const SecondFF& ff, const Vector& w) {
  const std::size_t n = ff.dim();
  std::vector<Vector> rows;
  for (const auto& q : ff.quadrics) {
    Vector g;
    for (std::size_t i = 0; i < n; ++i) g.push_back(evaluate(differentiate(q, i), w));
    rows.push_back(std::move(g));
  }
  return rank_of(ff.frame.field, rows, n) < n;
}

FocalData focal_at(const VarietyHandle& x, Rng& rng, const EngineOptions& opts) {
  SecondFF ff = second_ff(x, rng, opts);
  const std::size_t n = ff.dim();
  if (frame_tan_dim(ff.frame, rng) < static_cast<std::int64_t>(2 * n)) {
    throw Error(ErrorKind::TangentFamilyDegenerate,
                "dim Tan(" + x.name() + ") < " + std::to_string(2 * n) + ": every tangent point is focal");
  }
  std::vector<std::vector<Polynomial>> a(ff.normal.size(), std::vector<Polynomial>(n, Polynomial(ff.lambda_ring)));
  for (std::size_t k = 0; k < ff.normal.size(); ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < n; ++i) {
        a[k][j] += Polynomial::variable(ff.lambda_ring, i).scaled(ff.normal[k][i][j]);
      }
    }
  }
  Ideal ideal(ff.lambda_ring, maximal_minors(a, n));
  HilbertData h = hilbert_dim_degree(ideal, opts.gb);
  FocalData out{std::move(ff), ideal, h, false, std::nullopt};
  out.is_hypersurface = h.projective_dimension == static_cast<int>(n) - 2;
  Ideal gb = groebner_basis(ideal, MonomialOrder::grevlex(), opts.gb);
  if (gb.size() == 1) out.focal_degree = static_cast<int>(gb.generators().front().total_degree());
  return out;
}

DevelopableResult developable_check(const std::vector<std::vector<Polynomial>>& family, Rng& rng,
                                    const EngineOptions& opts) {
  if (family.empty() || family.front().empty()) throw Error(ErrorKind::InvalidSpec, "empty family");
  const std::size_t r1 = family.size(), cols = family.front().size();
  for (const auto& a : family) {
    if (a.size() != cols) throw Error(ErrorKind::DimensionMismatch, "family vectors differ in length");
    for (const auto& p : a) {
      if (p.ring()->size() != 1) throw Error(ErrorKind::InvalidSpec, "family entries must be univariate");
    }
  }
  const Field& f = family.front().front().ring()->field();
  std::vector<std::pair<std::int64_t, DevelopableResult>> results;
  auto verdict = run_trials("developable", rng, opts, [&](Rng& sub) -> std::int64_t {
    const Scalar t = sub.scalar(f);
    std::vector<Vector> a, da;
    for (const auto& v : family) {
      Vector p, dp;
      for (const auto& c : v) {
        p.push_back(evaluate(c, std::vector<Scalar>{t}));
        dp.push_back(evaluate(differentiate(c, std::size_t{0}), std::vector<Scalar>{t}));
      }
      a.push_back(std::move(p));
      da.push_back(std::move(dp));
    }
    DevelopableResult res;
    res.t = t;
    std::int64_t code = 0;
    if (rank_of(f, a, cols) < r1) {
      code = -1;
    } else {
      auto rows = da;
      rows.insert(rows.end(), a.begin(), a.end());
      res.developable = rank_of(f, rows, cols) == r1 + 1;
      code = res.developable ? 1 : 0;
      // (l, m) with sum l_i a_i' + sum m_j a_j = 0.
      std::vector<Vector> ls;
      for (const auto& k : Matrix::from_rows(f, rows, cols).transpose().kernel()) ls.emplace_back(k.begin(), k.begin() + r1);
      for (auto i : independent_rows(f, ls, r1)) res.focal_space.push_back(ls[i]);
    }
    results.emplace_back(code, std::move(res));
    return code;
  });
  if (verdict < 0) throw Error(ErrorKind::DegenerateFamily, "a_0(t)..a_r(t) are linearly dependent");
  for (auto& [code, res] : results) {
    if (code == verdict) return res;
  }
  return results.front().second;
}

}  // namespace tanvar
