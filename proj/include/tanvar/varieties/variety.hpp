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

#ifndef TANVAR_VARIETIES_VARIETY_HPP
#define TANVAR_VARIETIES_VARIETY_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tanvar/algebra/matrix.hpp"
#include "tanvar/groebner/ideal.hpp"

namespace tanvar {

/// Non-fatal findings collected while computing (e.g. split trial votes).
struct Diagnostics {
  std::vector<std::string> warnings;
};

/// Knobs shared by every randomized or elimination-based operation.
struct EngineOptions {
  GbOptions gb;
  /// Seeded repetitions for generic-point computations.
  unsigned trials = 3;
  Diagnostics* diagnostics = nullptr;
};

/// Lift of a rational (possibly constrained) parametrization into the affine
/// cone: u in V(constraints) maps to psi(u) in A^{N+1}. Linear constraints
/// (chart normalizations) are substituted away on construction, so
/// `constraints` only holds genuinely nonlinear equations.
struct ParamMap {
  RingPtr params;
  std::vector<Polynomial> psi;
  Ideal constraints;
  std::size_t expected_dim = 0;
  /// dpsi[i][k] = d psi_k / d u_i; d2psi[i * m + j][k] likewise.
  std::vector<std::vector<Polynomial>> dpsi, d2psi;
  /// dcon[g][i] = d g / d u_i; d2con[g][i * m + j] likewise.
  std::vector<std::vector<Polynomial>> dcon, d2con;

  ParamMap(RingPtr params, std::vector<Polynomial> psi, Ideal constraints, std::size_t expected_dim);

  std::size_t ambient_dim() const { return psi.size() - 1; }
  std::size_t nparams() const { return params->size(); }
  const Field& field() const { return params->field(); }
  bool constrained() const { return !constraints.is_zero_ideal(); }

  Vector eval(const Vector& u) const;
  /// Columns d psi / d u_i at u.
  std::vector<Vector> jacobian(const Vector& u) const;
  /// Jacobian of the constraint generators at u (one row per generator).
  Matrix constraint_jacobian(const Vector& u) const;
  /// Basis of the tangent space of the parameter locus at u.
  std::vector<Vector> parameter_tangents(const Vector& u) const;
  /// psi(u) followed by the images of the parameter tangents.
  std::vector<Vector> lifted_tangent_space(const Vector& u) const;
  /// Second derivative of psi along the locus in directions a, b: the
  /// Hessian term plus the Jacobian image of a correction c with
  /// Dg c = -D^2 g(a, b), which keeps the curve on the constraints.
  Vector second_derivative(const Vector& u, const Vector& a, const Vector& b) const;
};

/// Random point of the parameter locus. Constrained maps are sliced by
/// random affine hyperplanes and solved over the base field; returns nullopt
/// when that slice has no rational point.
std::optional<Vector> sample_parameter_point(const ParamMap& pm, Rng& rng, const GbOptions& opts = {});

/// Point of the locus at which the lifted tangent space has the expected
/// rank n + 1. Throws NoRegularPointFound after 10 attempts.
Vector regular_parameter_point(const ParamMap& pm, Rng& rng, const GbOptions& opts = {});

/// Rows spanning the lift of a projective linear subspace.
class LinearSpace {
 public:
  LinearSpace(Field field, std::vector<Vector> rows, std::size_t ambient_dim);
  /// P^k spanned by the first k+1 coordinate points of P^N.
  static LinearSpace coordinate(const Field& field, std::size_t k, std::size_t ambient_dim);

  const Field& field() const noexcept { return field_; }
  const std::vector<Vector>& rows() const noexcept { return rows_; }
  std::size_t dim() const noexcept { return rows_.size() - 1; }
  std::size_t ambient_dim() const noexcept { return ambient_; }
  bool contains(const Vector& point) const;

 private:
  Field field_;
  std::vector<Vector> rows_;
  std::size_t ambient_;
};

/// Ring x0..xN of homogeneous coordinates on P^N.
RingPtr ambient_ring(const Field& field, std::size_t n);

class VarietyHandle {
 public:
  VarietyHandle(std::string name, std::optional<ParamMap> param, std::optional<Ideal> ideal = std::nullopt);

  const std::string& name() const noexcept { return name_; }
  const std::optional<ParamMap>& param() const noexcept { return param_; }
  const std::optional<Ideal>& ideal() const noexcept { return ideal_; }
  const ParamMap& require_param() const;
  std::size_t ambient_dim() const;
  std::size_t dim() const;
  const Field& field() const;

  /// Lazily filled caches; filling is idempotent.
  std::optional<HilbertData>& hilbert_cache() const { return hilbert_; }
  std::optional<std::int64_t>& pdeg_cache() const { return pdeg_; }
  std::optional<Ideal>& ideal_cache() const { return implicit_; }

 private:
  std::string name_;
  std::optional<ParamMap> param_;
  std::optional<Ideal> ideal_;
  mutable std::optional<HilbertData> hilbert_;
  mutable std::optional<std::int64_t> pdeg_;
  mutable std::optional<Ideal> implicit_;
};

// Constructors of the built-in families.
VarietyHandle rational_normal_curve(const Field& field, unsigned d);
/// S(a_1..a_n); zero entries give cones. The lambda scaling is fixed by a
/// random chart.
VarietyHandle rational_normal_scroll(const Field& field, const std::vector<unsigned>& a, Rng& rng);
/// Second Veronese embedding of P^n.
VarietyHandle veronese(const Field& field, unsigned n);
VarietyHandle segre(const Field& field, unsigned a, unsigned b);
/// Union of the k-th osculating spaces of a curve.
VarietyHandle osculating_scroll(const VarietyHandle& curve, unsigned k, Rng& rng);
/// Surface of degree d in P^5 swept by lines joining the twisted cubic in
/// x0..x3 to the line x4,x5 through a random map of degree d - 3.
VarietyHandle verra(const Field& field, unsigned d, Rng& rng);
/// General member of |bH + F| on the cone over a rational normal curve of
/// degree N - 2 with vertex a line. Throws SmoothnessCheckFailed.
VarietyHandle roth(const Field& field, unsigned b, unsigned n_ambient, Rng& rng, const EngineOptions& opts = {});
VarietyHandle linear_variety(const LinearSpace& space);
/// Throws InvalidSpec on malformed input.
VarietyHandle custom_variety(const Field& field, const std::vector<std::string>& vars,
                             const std::vector<std::string>& psi, const std::vector<std::string>& constraints,
                             std::optional<std::size_t> dim);

/// Homogeneous ideal of the image closure. Cached on the handle. Throws
/// DegreeCapExceeded or ImageDegenerate.
const Ideal& implicitize(const VarietyHandle& x, const GbOptions& opts = {});
/// Hilbert data of the implicit ideal (cached).
const HilbertData& hilbert_data(const VarietyHandle& x, const GbOptions& opts = {});

/// Number of parameter points over a random image point. Cached. Throws
/// FiberNotFinite.
std::int64_t param_degree(const VarietyHandle& x, Rng& rng, const EngineOptions& opts = {});
/// deg X by counting points on n random hyperplane sections.
std::int64_t degree_by_slicing(const VarietyHandle& x, Rng& rng, const EngineOptions& opts = {});

/// Linear projection from `center`. Carries a parametrization when the
/// input has one and a projected ideal when the input has an explicit ideal.
/// Throws CenterContainsVariety.
VarietyHandle project(const VarietyHandle& x, const LinearSpace& center, Rng& rng, const GbOptions& opts = {});
/// Ideal route: coordinate change sending the center to a coordinate
/// subspace, then elimination.
Ideal project_ideal(const Ideal& ideal, const LinearSpace& center, const GbOptions& opts = {});
/// Matrix whose kernel is the lift of the center.
Matrix projection_matrix(const LinearSpace& center);

/// Join of A and B placed in complementary coordinate blocks (A first).
VarietyHandle cone_join(const LinearSpace& a, const VarietyHandle& b);
VarietyHandle cone_join(const VarietyHandle& a, const VarietyHandle& b);

/// Multiplicity of the hypersurface V(h) at p. Throws NotHypersurface,
/// PointNotOnAmbient.
int multiplicity_at(const Ideal& hypersurface, const Vector& point, const GbOptions& opts = {});

}  // namespace tanvar

#endif  // TANVAR_VARIETIES_VARIETY_HPP
