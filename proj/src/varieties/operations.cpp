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
#include <limits>

#include "tanvar/error.hpp"
#include "tanvar/varieties/variety.hpp"

namespace tanvar {

namespace {

std::vector<Polynomial> relabel_all(const std::vector<Polynomial>& ps, const RingPtr& target, const std::string& prefix) {
  std::vector<Polynomial> out;
  for (const auto& p : ps) out.push_back(relabel_into(p, target, prefix));
  return out;
}

Polynomial linear_form(const std::vector<Polynomial>& coords, const Vector& coeffs) {
  Polynomial out(coords.front().ring());
  for (std::size_t i = 0; i < coords.size(); ++i) out += coords[i].scaled(coeffs[i]);
  return out;
}

Polynomial random_variable_form(const RingPtr& ring, std::size_t count, Rng& rng) {
  Polynomial out(ring);
  for (std::size_t i = 0; i < count; ++i) out += Polynomial::variable(ring, i).scaled(rng.nonzero(ring->field()));
  return out;
}

ZeroDimCount count_or_fiber_error(const Ideal& ideal, const Polynomial& form, const GbOptions& opts, const char* what) {
  try {
    return count_zero_dim(ideal, form, opts);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotZeroDimensional) throw Error(ErrorKind::FiberNotFinite, what);
    throw;
  }
}

}  // namespace

const Ideal& implicitize(const VarietyHandle& x, const GbOptions& opts) {
  auto& cache = x.ideal_cache();
  if (cache) return *cache;
  if (x.ideal()) {
    cache = *x.ideal();
    return *cache;
  }
  const ParamMap& pm = x.require_param();
  const std::size_t n_amb = pm.ambient_dim();
  std::vector<std::string> names{"_h"};
  for (const auto& v : pm.params->names()) names.push_back("p." + v);
  std::vector<std::string> keep;
  for (std::size_t k = 0; k <= n_amb; ++k) keep.push_back("x" + std::to_string(k));
  names.insert(names.end(), keep.begin(), keep.end());
  auto ring = make_ring(names, pm.field());
  Polynomial h = Polynomial::variable(ring, 0);
  Ideal graph(ring);
  auto psi = relabel_all(pm.psi, ring, "p.");
  for (std::size_t k = 0; k <= n_amb; ++k) graph.add(Polynomial::variable(ring, keep[k]) - h * psi[k]);
  for (const auto& g : relabel_all(pm.constraints.generators(), ring, "p.")) graph.add(g);
  Ideal elim = eliminate(graph, keep, opts);
  auto amb = ambient_ring(pm.field(), n_amb);
  std::vector<Polynomial> gens;
  for (const auto& g : elim.generators()) gens.push_back(rename_into(g, amb));
  Ideal out = Ideal::homogeneous_ideal(amb, std::move(gens));
  HilbertData hd = hilbert_dim_degree(out, opts);
  if (hd.projective_dimension < static_cast<int>(pm.expected_dim)) {
    throw Error(ErrorKind::ImageDegenerate, x.name() + ": image has dimension " +
                                                std::to_string(hd.projective_dimension) + ", expected " +
                                                std::to_string(pm.expected_dim));
  }
  x.hilbert_cache() = hd;
  cache = std::move(out);
  return *cache;
}

const HilbertData& hilbert_data(const VarietyHandle& x, const GbOptions& opts) {
  auto& cache = x.hilbert_cache();
  if (!cache) cache = hilbert_dim_degree(implicitize(x, opts), opts);
  return *cache;
}

std::int64_t param_degree(const VarietyHandle& x, Rng& rng, const EngineOptions& opts) {
  auto& cache = x.pdeg_cache();
  if (cache) return *cache;
  const ParamMap& pm = x.require_param();
  const Vector u0 = regular_parameter_point(pm, rng, opts.gb);
  const Vector p0 = pm.eval(u0);
  auto names = pm.params->names();
  names.push_back("_c");
  names.push_back("_y");
  auto ring = make_ring(names, pm.field());
  Polynomial c = Polynomial::variable(ring, "_c"), y = Polynomial::variable(ring, "_y");
  Ideal fiber(ring);
  for (std::size_t k = 0; k < pm.psi.size(); ++k) {
    fiber.add(rename_into(pm.psi[k], ring) - c.scaled(p0[k]));
  }
  for (const auto& g : pm.constraints.generators()) fiber.add(rename_into(g, ring));
  fiber.add(y * c - Polynomial::constant(ring, 1));
  auto count = count_or_fiber_error(fiber, random_variable_form(ring, pm.nparams(), rng), opts.gb,
                                    "fiber over a generic image point is not finite");
  if (count.distinct == 0) throw Error(ErrorKind::EliminantDegenerate, "fiber through a sampled point is empty");
  cache = count.distinct;
  return *cache;
}

std::int64_t degree_by_slicing(const VarietyHandle& x, Rng& rng, const EngineOptions& opts) {
  if (!x.param()) return hilbert_data(x, opts.gb).degree;
  const ParamMap& pm = x.require_param();
  const std::int64_t pdeg = param_degree(x, rng, opts);
  auto names = pm.params->names();
  names.push_back("_y");
  auto ring = make_ring(names, pm.field());
  auto psi = relabel_all(pm.psi, ring, "");
  Ideal slice(ring);
  for (std::size_t k = 0; k < pm.expected_dim; ++k) slice.add(linear_form(psi, rng.vector(pm.field(), psi.size())));
  for (const auto& g : pm.constraints.generators()) slice.add(rename_into(g, ring));
  // Keeps the slice away from the base locus of psi.
  Polynomial guard = linear_form(psi, rng.vector(pm.field(), psi.size()));
  slice.add(Polynomial::variable(ring, "_y") * guard - Polynomial::constant(ring, 1));
  auto count = count_or_fiber_error(slice, random_variable_form(ring, pm.nparams(), rng), opts.gb,
                                    "hyperplane section is not finite");
  if (count.distinct % pdeg != 0) {
    throw Error(ErrorKind::GenericityWarning, "slice count " + std::to_string(count.distinct) +
                                                   " is not a multiple of the parametrization degree " +
                                                   std::to_string(pdeg));
  }
  return count.distinct / pdeg;
}

Matrix projection_matrix(const LinearSpace& center) {
  const std::size_t cols = center.ambient_dim() + 1;
  auto kernel = Matrix::from_rows(center.field(), center.rows(), cols).kernel();
  return Matrix::from_rows(center.field(), kernel, cols);
}

Ideal project_ideal(const Ideal& ideal, const LinearSpace& center, const GbOptions& opts) {
  const std::size_t cols = center.ambient_dim() + 1;
  if (ideal.ring()->size() != cols) throw Error(ErrorKind::DimensionMismatch, "center and ideal live in different spaces");
  const Field& f = center.field();
  Matrix p = projection_matrix(center);
  std::vector<Vector> rows;
  for (std::size_t r = 0; r < p.rows(); ++r) rows.push_back(p.row(r));
  const std::size_t ny = rows.size();
  for (auto& extra : complete_to_basis(f, rows, cols)) rows.push_back(std::move(extra));
  auto inv = Matrix::from_rows(f, rows, cols).inverse();
  if (!inv) throw Error(ErrorKind::EliminantDegenerate, "projection change of coordinates is singular");
  std::vector<std::string> names, keep;
  for (std::size_t j = ny; j < cols; ++j) names.push_back("_z" + std::to_string(j - ny));
  for (std::size_t j = 0; j < ny; ++j) keep.push_back("_y" + std::to_string(j));
  names.insert(names.end(), keep.begin(), keep.end());
  auto ring = make_ring(names, f);
  std::vector<Polynomial> w;
  for (std::size_t j = 0; j < cols; ++j) {
    w.push_back(Polynomial::variable(ring, j < ny ? keep[j] : "_z" + std::to_string(j - ny)));
  }
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < cols; ++i) {
    Polynomial xi(ring);
    for (std::size_t j = 0; j < cols; ++j) {
      if (!f.is_zero(inv->at(i, j))) xi += w[j].scaled(inv->at(i, j));
    }
    images.push_back(std::move(xi));
  }
  Ideal moved(ring);
  for (const auto& g : ideal.generators()) moved.add(substitute(g, images));
  Ideal elim = eliminate(moved, keep, opts);
  auto amb = ambient_ring(f, ny - 1);
  std::vector<Polynomial> rename;
  for (std::size_t j = 0; j < ny; ++j) rename.push_back(Polynomial::variable(amb, j));
  std::vector<Polynomial> gens;
  for (const auto& g : elim.generators()) gens.push_back(substitute(g, rename));
  return Ideal::homogeneous_ideal(amb, std::move(gens));
}

VarietyHandle project(const VarietyHandle& x, const LinearSpace& center, Rng& rng, const GbOptions& opts) {
  if (center.ambient_dim() != x.ambient_dim()) {
    throw Error(ErrorKind::DimensionMismatch, "center does not live in the ambient space of " + x.name());
  }
  if (center.dim() + 2 > x.ambient_dim()) throw Error(ErrorKind::InvalidSpec, "center leaves no room for a target");
  Matrix p = projection_matrix(center);
  const std::string name = "pi(" + x.name() + ")";
  std::optional<ParamMap> param;
  std::optional<Ideal> ideal;
  if (x.param()) {
    const ParamMap& pm = *x.param();
    const Vector u0 = regular_parameter_point(pm, rng, opts);
    if (center.contains(pm.eval(u0))) {
      throw Error(ErrorKind::CenterContainsVariety, "center contains " + x.name());
    }
    std::vector<Polynomial> psi;
    for (std::size_t r = 0; r < p.rows(); ++r) psi.push_back(linear_form(pm.psi, p.row(r)));
    param.emplace(pm.params, std::move(psi), pm.constraints, pm.expected_dim);
  }
  if (x.ideal()) {
    ideal = project_ideal(*x.ideal(), center, opts);
    if (hilbert_dim_degree(*ideal, opts).projective_dimension < 0) {
      throw Error(ErrorKind::CenterContainsVariety, "center contains " + x.name());
    }
  }
  return VarietyHandle(name, std::move(param), std::move(ideal));
}

VarietyHandle cone_join(const LinearSpace& a, const VarietyHandle& b) { return cone_join(linear_variety(a), b); }

VarietyHandle cone_join(const VarietyHandle& a, const VarietyHandle& b) {
  const ParamMap& pa = a.require_param();
  const ParamMap& pb = b.require_param();
  if (!(pa.field() == pb.field())) throw Error(ErrorKind::FieldMismatch, "join factors over different fields");
  std::vector<std::string> names;
  for (const auto& v : pa.params->names()) names.push_back("a." + v);
  for (const auto& v : pb.params->names()) names.push_back("b." + v);
  names.push_back("s");
  auto ring = make_ring(names, pa.field());
  Polynomial s = Polynomial::variable(ring, "s");
  auto psi = relabel_all(pa.psi, ring, "a.");
  for (const auto& q : relabel_all(pb.psi, ring, "b.")) psi.push_back(s * q);
  Ideal cons(ring, relabel_all(pa.constraints.generators(), ring, "a."));
  for (const auto& g : relabel_all(pb.constraints.generators(), ring, "b.")) cons.add(g);
  return VarietyHandle("J(" + a.name() + "," + b.name() + ")",
                       ParamMap(ring, std::move(psi), std::move(cons), pa.expected_dim + pb.expected_dim + 1));
}

int multiplicity_at(const Ideal& hypersurface, const Vector& point, const GbOptions& opts) {
  const RingPtr& ring = hypersurface.ring();
  const Field& f = ring->field();
  Ideal gb = groebner_basis(hypersurface, MonomialOrder::grevlex(), opts);
  if (gb.size() != 1 || gb.has_unit_generator()) {
    throw Error(ErrorKind::NotHypersurface, "ideal is not generated by one nonconstant form");
  }
  if (point.size() != ring->size()) throw Error(ErrorKind::PointNotOnAmbient, "point has the wrong number of coordinates");
  std::size_t chart = point.size();
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (!f.is_zero(point[i])) {
      chart = i;
      break;
    }
  }
  if (chart == point.size()) throw Error(ErrorKind::PointNotOnAmbient, "point has all coordinates zero");
  const Scalar scale = f.inv(point[chart]);
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < point.size(); ++i) {
    Polynomial c = Polynomial::constant(ring, f.mul(point[i], scale));
    images.push_back(i == chart ? c : c + Polynomial::variable(ring, i));
  }
  Polynomial local = substitute(gb.generators().front(), images);
  int lowest = std::numeric_limits<int>::max();
  for (const auto& t : local.terms()) lowest = std::min(lowest, static_cast<int>(t.monomial.degree()));
  return lowest;
}

}  // namespace tanvar
