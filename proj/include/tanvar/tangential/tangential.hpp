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

#ifndef TANVAR_TANGENTIAL_TANGENTIAL_HPP
#define TANVAR_TANGENTIAL_TANGENTIAL_HPP

#include <vector>

#include "tanvar/varieties/variety.hpp"

namespace tanvar {

/// First- and second-order data of a parametrization at a regular point.
struct TangentFrame {
  Field field;
  Vector u0;
  /// Parameter tangent basis e_1..e_n (kernel of the constraint Jacobian).
  std::vector<Vector> directions;
  /// psi(u0) followed by the Jacobian images of the directions; rank n + 1.
  std::vector<Vector> span_rows;
  /// second[i][j] = second derivative of psi along (e_i, e_j).
  std::vector<std::vector<Vector>> second;
  std::size_t ambient_dim = 0;

  std::size_t dim() const { return directions.size(); }
  /// w_j(lambda) = sum_i lambda_i second[i][j], j = 1..n.
  std::vector<Vector> second_rows(const Vector& lambda) const;
  /// Every second[i][j].
  std::vector<Vector> all_second_rows() const;
  /// Rows completing span_rows to a basis of the lifted ambient space.
  std::vector<Vector> normal_basis() const;
  /// Coordinates of v along normal_basis() in the basis span_rows + normal_basis().
  Vector normal_coordinates(const Vector& v) const;
};

/// Frame at a random regular point. Throws NoRegularPointFound.
TangentFrame regular_point(const ParamMap& pm, Rng& rng, const GbOptions& opts = {});

/// dim Tan X from the rank of the span together with w_1(lambda)..w_n(lambda).
std::int64_t tan_dim_fast(const VarietyHandle& x, Rng& rng, const EngineOptions& opts = {});
/// dim Sec X from the span of two tangent spaces at random points.
std::int64_t sec_dim_fast(const VarietyHandle& x, Rng& rng, const EngineOptions& opts = {});
/// Dimension of the second osculating space at a general point.
std::int64_t osculating_dim(const VarietyHandle& x, Rng& rng, const EngineOptions& opts = {});
/// n minus the rank of the differential of the Gauss map.
std::int64_t gauss_defect(const VarietyHandle& x, Rng& rng, const EngineOptions& opts = {});

/// Map (u, lambda) -> psi(u) + sum lambda_i d_i psi(u), with constrained
/// directions expressed through auxiliary unknowns. Its expected dimension is
/// `expected_dim`.
ParamMap tangent_param(const ParamMap& pm, std::size_t expected_dim);

/// Tan X and Sec X as ideals. Throw DegreeCapExceeded.
VarietyHandle tangent_variety(const VarietyHandle& x, Rng& rng, const GbOptions& opts = {});
VarietyHandle secant_variety(const VarietyHandle& x, const GbOptions& opts = {});

}  // namespace tanvar

#endif  // TANVAR_TANGENTIAL_TANGENTIAL_HPP
