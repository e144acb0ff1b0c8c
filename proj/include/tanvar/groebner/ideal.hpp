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

#ifndef TANVAR_GROEBNER_IDEAL_HPP
#define TANVAR_GROEBNER_IDEAL_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tanvar/algebra/polynomial.hpp"
#include "tanvar/algebra/rng.hpp"

namespace tanvar {

/// Finite generator list over one ring. Zero generators are dropped.
class Ideal {
 public:
  explicit Ideal(RingPtr ring) : ring_(std::move(ring)) {}
  Ideal(RingPtr ring, std::vector<Polynomial> generators);

  /// Throws NotHomogeneous when some generator is not homogeneous.
  static Ideal homogeneous_ideal(RingPtr ring, std::vector<Polynomial> generators);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& generators() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }
  bool is_zero_ideal() const noexcept { return gens_.empty(); }
  /// True when every generator is homogeneous.
  bool homogeneous() const noexcept { return homogeneous_; }
  /// True when some generator is a nonzero constant.
  bool has_unit_generator() const;

  void add(Polynomial p);
  Ideal operator+(const Ideal& o) const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  bool homogeneous_ = true;
};

struct GbOptions {
  /// S-pairs whose lcm exceeds this total degree abort the computation.
  unsigned degree_cap = 60;
  /// Maximum number of S-pair reductions; 0 means unlimited. Exhausting it
  /// also raises DegreeCapExceeded.
  std::uint64_t work_budget = 0;
};

Monomial leading_monomial(const Polynomial& f, const MonomialOrder& order);

/// Reduced Groebner basis (monic, sorted by increasing leading monomial).
/// Buchberger with Gebauer-Moeller pair pruning and sugar selection.
/// Throws DegreeCapExceeded or FieldMismatch.
Ideal groebner_basis(const Ideal& ideal, const MonomialOrder& order, const GbOptions& opts = {});

/// Normal forms against a fixed Groebner basis, converted once.
class Reducer {
 public:
  Reducer(const Ideal& gb, const MonomialOrder& order);
  ~Reducer();
  Reducer(Reducer&&) noexcept;
  Reducer& operator=(Reducer&&) noexcept;

  Polynomial normal_form(const Polynomial& f) const;
  bool reduces_to_zero(const Polynomial& f) const { return normal_form(f).is_zero(); }

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

Polynomial normal_form(const Polynomial& f, const Ideal& gb, const MonomialOrder& order);

/// I ∩ k[keep], expressed in a ring whose registry is `keep` (in the given
/// order). Uses a block order with the eliminated variables leading.
Ideal eliminate(const Ideal& ideal, const std::vector<std::string>& keep, const GbOptions& opts = {});

/// (I : f^∞) via a Rabinowitsch variable.
Ideal saturate(const Ideal& ideal, const Polynomial& f, const GbOptions& opts = {});

/// True when every generator of `sub` lies in `super` (super is any
/// generating set; a basis is computed).
bool ideal_contains(const Ideal& super, const Ideal& sub, const GbOptions& opts = {});
bool ideals_equal(const Ideal& a, const Ideal& b, const GbOptions& opts = {});

struct HilbertData {
  /// -1 for an ideal with empty projective zero set.
  int projective_dimension = -1;
  std::int64_t degree = 0;
  /// Numerator of the Hilbert series over (1-t)^nvars, lowest degree first.
  std::vector<std::int64_t> hilbert_numerator;
};

/// Dimension and degree of V(I) in P^{n-1}. Throws NotHomogeneous.
HilbertData hilbert_dim_degree(const Ideal& ideal, const GbOptions& opts = {});
/// Hilbert numerator of a monomial ideal given by generators.
std::vector<std::int64_t> hilbert_numerator(std::vector<Monomial> generators, std::size_t nvars);

struct ZeroDimCount {
  /// Dimension of the quotient ring (solutions with multiplicity).
  std::int64_t total = 0;
  /// Distinct values of the distinguished element over all solutions.
  std::int64_t distinct = 0;
};

/// Throws NotZeroDimensional or EliminantDegenerate.
ZeroDimCount count_zero_dim(const Ideal& ideal, std::string_view distinguished,
                            const GbOptions& opts = {});
/// Same, with an arbitrary polynomial as the distinguished element.
ZeroDimCount count_zero_dim(const Ideal& ideal, const Polynomial& distinguished,
                            const GbOptions& opts = {});

/// Zero-dimensional solutions with all coordinates in the base field,
/// sorted. Used to draw points on constrained parameter loci.
std::vector<std::vector<Scalar>> rational_solutions(const Ideal& ideal, Rng& rng,
                                                    const GbOptions& opts = {});

}  // namespace tanvar

#endif  // TANVAR_GROEBNER_IDEAL_HPP
