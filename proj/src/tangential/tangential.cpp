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

#include "tanvar/tangential/tangential.hpp"

#include "tanvar/error.hpp"
#include "tanvar/varieties/trials.hpp"

namespace tanvar {

namespace {

Vector combine(const Field& f, const std::vector<Vector>& vs, const Vector& coeffs) {
  Vector out(vs.front().size(), f.zero());
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (f.is_zero(coeffs[i])) continue;
    for (std::size_t c = 0; c < out.size(); ++c) out[c] = f.add(out[c], f.mul(coeffs[i], vs[i][c]));
  }
  return out;
}

// Random combination of the maximal minors of the constraint Jacobian,
// relabelled into `ring`. Its non-vanishing marks smooth points of the locus.
Polynomial random_minor_combination(const ParamMap& pm, const RingPtr& ring, const std::string& prefix, Rng& rng) {
  const std::size_t r = pm.dcon.size(), m = pm.nparams();
  Polynomial out(ring);
  if (r > m) throw Error(ErrorKind::InvalidSpec, "more constraints than parameters");
  std::vector<std::size_t> cols(r);
  for (std::size_t i = 0; i < r; ++i) cols[i] = i;
  while (true) {
    std::vector<std::vector<Polynomial>> sub;
    for (std::size_t g = 0; g < r; ++g) {
      std::vector<Polynomial> row;
      for (auto c : cols) row.push_back(relabel_into(pm.dcon[g][c], ring, prefix));
      sub.push_back(std::move(row));
    }
    out += determinant(sub).scaled(rng.nonzero(pm.field()));
    // Next r-subset of 0..m-1 in lexicographic order.
    std::size_t i = r;
    while (i > 0 && cols[i - 1] == m - r + i - 1) --i;
    if (i == 0) break;
    ++cols[i - 1];
    for (std::size_t k = i; k < r; ++k) cols[k] = cols[k - 1] + 1;
  }
  return out;
}

VarietyHandle ideal_handle(const std::string& name, const Ideal& elim, std::size_t n_amb) {
  auto amb = ambient_ring(elim.ring()->field(), n_amb);
  std::vector<Polynomial> gens;
  for (const auto& g : elim.generators()) gens.push_back(rename_into(g, amb));
  return VarietyHandle(name, std::nullopt, Ideal::homogeneous_ideal(amb, std::move(gens)));
}

std::vector<std::string> coordinate_names(std::size_t n_amb) {
  std::vector<std::string> keep;
  for (std::size_t k = 0; k <= n_amb; ++k) keep.push_back("x" + std::to_string(k));
  return keep;
}

}  // namespace

std::vector<Vector> TangentFrame::second_rows(const Vector& lambda) const {
  std::vector<Vector> rows;
  for (std::size_t j = 0; j < dim(); ++j) {
    std::vector<Vector> column;
    for (std::size_t i = 0; i < dim(); ++i) column.push_back(second[i][j]);
    rows.push_back(combine(field, column, lambda));
  }
  return rows;
}

std::vector<Vector> TangentFrame::all_second_rows() const {
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < dim(); ++i) {
    for (std::size_t j = i; j < dim(); ++j) rows.push_back(second[i][j]);
  }
  return rows;
}

std::vector<Vector> TangentFrame::normal_basis() const { return complete_to_basis(field, span_rows, ambient_dim + 1); }

Vector TangentFrame::normal_coordinates(const Vector& v) const {
  auto rows = span_rows;
  for (auto& r : normal_basis()) rows.push_back(std::move(r));
  auto c = Matrix::from_rows(field, rows, ambient_dim + 1).transpose().solve(v);
  if (!c) throw Error(ErrorKind::EliminantDegenerate, "frame rows do not form a basis");
  return Vector(c->begin() + static_cast<std::ptrdiff_t>(span_rows.size()), c->end());
}

TangentFrame regular_point(const ParamMap& pm, Rng& rng, const GbOptions& opts) {
  TangentFrame fr{pm.field(), regular_parameter_point(pm, rng, opts), {}, {}, {}, pm.ambient_dim()};
  fr.directions = pm.parameter_tangents(fr.u0);
  fr.span_rows = pm.lifted_tangent_space(fr.u0);
  const std::size_t n = fr.directions.size();
  fr.second.assign(n, std::vector<Vector>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      fr.second[i][j] = pm.second_derivative(fr.u0, fr.directions[i], fr.directions[j]);
      fr.second[j][i] = fr.second[i][j];
    }
  }
  return fr;
}

std::int64_t tan_dim_fast(const VarietyHandle& x, Rng& rng, const EngineOptions& opts) {
  const ParamMap& pm = x.require_param();
  return run_trials("dim Tan(" + x.name() + ")", rng, opts, [&](Rng& sub) {
    TangentFrame fr = regular_point(pm, sub, opts.gb);
    auto rows = fr.span_rows;
    for (auto& w : fr.second_rows(sub.vector(fr.field, fr.dim()))) rows.push_back(std::move(w));
    return static_cast<std::int64_t>(rank_of(fr.field, rows, fr.ambient_dim + 1)) - 1;
  });
}

std::int64_t sec_dim_fast(const VarietyHandle& x, Rng& rng, const EngineOptions& opts) {
  const ParamMap& pm = x.require_param();
  return run_trials("dim Sec(" + x.name() + ")", rng, opts, [&](Rng& sub) {
    auto rows = regular_point(pm, sub, opts.gb).span_rows;
    for (auto& r : regular_point(pm, sub, opts.gb).span_rows) rows.push_back(std::move(r));
    return static_cast<std::int64_t>(rank_of(pm.field(), rows, pm.ambient_dim() + 1)) - 1;
  });
}

std::int64_t osculating_dim(const VarietyHandle& x, Rng& rng, const EngineOptions& opts) {
  const ParamMap& pm = x.require_param();
  return run_trials("dim T2(" + x.name() + ")", rng, opts, [&](Rng& sub) {
    TangentFrame fr = regular_point(pm, sub, opts.gb);
    auto rows = fr.span_rows;
    for (auto& w : fr.all_second_rows()) rows.push_back(std::move(w));
    return static_cast<std::int64_t>(rank_of(fr.field, rows, fr.ambient_dim + 1)) - 1;
  });
}

std::int64_t gauss_defect(const VarietyHandle& x, Rng& rng, const EngineOptions& opts) {
  const ParamMap& pm = x.require_param();
  return run_trials("Gauss defect(" + x.name() + ")", rng, opts, [&](Rng& sub) {
    TangentFrame fr = regular_point(pm, sub, opts.gb);
    const std::size_t n = fr.dim();
    // Row i: the normal parts of second[i][1..n], concatenated.
    std::vector<Vector> rows;
    std::size_t width = 0;
    for (std::size_t i = 0; i < n; ++i) {
      Vector row;
      for (std::size_t j = 0; j < n; ++j) {
        Vector c = fr.normal_coordinates(fr.second[i][j]);
        row.insert(row.end(), c.begin(), c.end());
      }
      width = row.size();
      rows.push_back(std::move(row));
    }
    const std::size_t rank = width == 0 ? 0 : rank_of(fr.field, rows, width);
    return static_cast<std::int64_t>(n - rank);
  });
}

ParamMap tangent_param(const ParamMap& pm, std::size_t expected_dim) {
  const std::size_t m = pm.nparams();
  auto names = pm.params->names();
  for (std::size_t i = 0; i < m; ++i) names.push_back("d." + pm.params->name(i));
  auto ring = make_ring(names, pm.field());
  std::vector<Polynomial> psi;
  for (std::size_t k = 0; k < pm.psi.size(); ++k) {
    Polynomial p = relabel_into(pm.psi[k], ring, "");
    for (std::size_t i = 0; i < m; ++i) {
      p += Polynomial::variable(ring, m + i) * relabel_into(pm.dpsi[i][k], ring, "");
    }
    psi.push_back(std::move(p));
  }
  Ideal cons(ring);
  for (std::size_t g = 0; g < pm.dcon.size(); ++g) {
    cons.add(relabel_into(pm.constraints.generators()[g], ring, ""));
    Polynomial lin(ring);
    for (std::size_t i = 0; i < m; ++i) lin += Polynomial::variable(ring, m + i) * relabel_into(pm.dcon[g][i], ring, "");
    cons.add(std::move(lin));
  }
  return ParamMap(ring, std::move(psi), std::move(cons), expected_dim);
}

VarietyHandle tangent_variety(const VarietyHandle& x, Rng& rng, const GbOptions& opts) {
  const ParamMap& pm = x.require_param();
  const std::size_t m = pm.nparams();
  auto keep = coordinate_names(pm.ambient_dim());
  std::vector<std::string> names{"_a"};
  for (const auto& v : pm.params->names()) names.push_back("p." + v);
  for (const auto& v : pm.params->names()) names.push_back("d." + v);
  if (pm.constrained()) names.push_back("_y");
  names.insert(names.end(), keep.begin(), keep.end());
  auto ring = make_ring(names, pm.field());
  Polynomial a = Polynomial::variable(ring, "_a");
  std::vector<Polynomial> d;
  for (const auto& v : pm.params->names()) d.push_back(Polynomial::variable(ring, "d." + v));
  Ideal graph(ring);
  for (std::size_t k = 0; k < pm.psi.size(); ++k) {
    Polynomial point = a * relabel_into(pm.psi[k], ring, "p.");
    for (std::size_t i = 0; i < m; ++i) point += d[i] * relabel_into(pm.dpsi[i][k], ring, "p.");
    graph.add(Polynomial::variable(ring, keep[k]) - point);
  }
  if (pm.constrained()) {
    for (std::size_t g = 0; g < pm.dcon.size(); ++g) {
      graph.add(relabel_into(pm.constraints.generators()[g], ring, "p."));
      Polynomial lin(ring);
      for (std::size_t i = 0; i < m; ++i) lin += d[i] * relabel_into(pm.dcon[g][i], ring, "p.");
      graph.add(std::move(lin));
    }
    Polynomial minors = random_minor_combination(pm, ring, "p.", rng);
    graph.add(Polynomial::variable(ring, "_y") * minors - Polynomial::constant(ring, 1));
  }
  return ideal_handle("Tan(" + x.name() + ")", eliminate(graph, keep, opts), pm.ambient_dim());
}

VarietyHandle secant_variety(const VarietyHandle& x, const GbOptions& opts) {
  const ParamMap& pm = x.require_param();
  auto keep = coordinate_names(pm.ambient_dim());
  std::vector<std::string> names{"_a", "_b"};
  for (const auto& v : pm.params->names()) names.push_back("u." + v);
  for (const auto& v : pm.params->names()) names.push_back("v." + v);
  names.insert(names.end(), keep.begin(), keep.end());
  auto ring = make_ring(names, pm.field());
  Polynomial a = Polynomial::variable(ring, "_a"), b = Polynomial::variable(ring, "_b");
  Ideal graph(ring);
  for (std::size_t k = 0; k < pm.psi.size(); ++k) {
    graph.add(Polynomial::variable(ring, keep[k]) - a * relabel_into(pm.psi[k], ring, "u.") -
              b * relabel_into(pm.psi[k], ring, "v."));
  }
  for (const auto& g : pm.constraints.generators()) {
    graph.add(relabel_into(g, ring, "u."));
    graph.add(relabel_into(g, ring, "v."));
  }
  return ideal_handle("Sec(" + x.name() + ")", eliminate(graph, keep, opts), pm.ambient_dim());
}

}  // namespace tanvar
