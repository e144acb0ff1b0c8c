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

#ifndef TANVAR_LOCALGEOM_LOCALGEOM_HPP
#define TANVAR_LOCALGEOM_LOCALGEOM_HPP

#include <optional>
#include <vector>

#include "tanvar/groebner/ideal.hpp"
#include "tanvar/tangential/tangential.hpp"

namespace tanvar {

/// Second fundamental form at a regular point, written in the coordinates
/// l1..ln of the frame's tangent directions.
struct SecondFF {
  TangentFrame frame;
  RingPtr lambda_ring;
  /// normal[k][i][j]: coordinate k (along frame.normal_basis()) of the
  /// second derivative along (e_i, e_j). Symmetric in i, j.
  std::vector<std::vector<Vector>> normal;
  /// A basis of |II|: independent quadrics among sum_ij l_i l_j normal[k][i][j].
  std::vector<Polynomial> quadrics;
  std::vector<Vector> normal_basis;

  std::size_t dim() const { return frame.dim(); }
  /// (N - n) x n matrix with entry (k, j) = sum_i w_i normal[k][i][j].
  std::vector<Vector> focal_matrix(const Vector& w) const;
};

SecondFF second_ff(const VarietyHandle& x, Rng& rng, const EngineOptions& opts = {});

struct BaseLocus {
  Ideal ideal;
  /// Projective dimension -1 means no asymptotic directions.
  HilbertData hilbert;
};
BaseLocus ff_base_locus(const SecondFF& ff, const GbOptions& opts = {});

/// Projective dimension of the image of l -> (q_1(l) : ... : q_c(l)); -1
/// without quadrics.
int quadric_image_dim(const SecondFF& ff, const GbOptions& opts = {});

/// Rank deficiency test through the polar hyperplanes of [w] with respect to
/// the quadrics: their intersection in P(t_x X) is nonempty.
bool polar_hyperplanes_meet(const SecondFF& ff, const Vector& w);

struct FocalData {
  SecondFF ff;
  /// Ideal of n x n minors of the focal matrix in l1..ln.
  Ideal focal_ideal;
  HilbertData hilbert;
  bool is_hypersurface = false;
  /// Degree of the generator when the ideal is principal.
  std::optional<int> focal_degree;
};

/// Throws TangentFamilyDegenerate when dim Tan X < 2n.
FocalData focal_at(const VarietyHandle& x, Rng& rng, const EngineOptions& opts = {});

struct DevelopableResult {
  bool developable = false;
  /// Parameter value of the reported focal data.
  Scalar t;
  /// Basis of the l-coordinates (points sum l_i a_i(t)) of the focal space
  /// P^r_t meet its derivative; a hyperplane of P^r_t when developable.
  std::vector<Vector> focal_space;
};

/// family[i][k]: coordinate k of a_i(t), polynomials in one variable.
/// Throws DegenerateFamily when a_0(t)..a_r(t) are dependent.
DevelopableResult developable_check(const std::vector<std::vector<Polynomial>>& family, Rng& rng,
                                    const EngineOptions& opts = {});

}  // namespace tanvar

#endif  // TANVAR_LOCALGEOM_LOCALGEOM_HPP
