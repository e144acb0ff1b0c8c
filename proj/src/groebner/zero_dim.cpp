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
#include <unordered_map>

#include "tanvar/algebra/matrix.hpp"
#include "tanvar/algebra/univariate.hpp"
#include "tanvar/error.hpp"
#include "tanvar/groebner/ideal.hpp"

namespace tanvar {

namespace {

// Finite-dimensional quotient k[x]/I described by a grevlex basis and its
// standard monomials.
class Quotient {
 public:
  Quotient(const Ideal& ideal, const GbOptions& opts)
      : order_(MonomialOrder::grevlex()), gb_(groebner_basis(ideal, order_, opts)), reducer_(gb_, order_) {
    const std::size_t n = ideal.ring()->size();
    if (gb_.has_unit_generator()) return;
    std::vector<Monomial> lead;
    for (const auto& g : gb_.generators()) lead.push_back(leading_monomial(g, order_));
    for (std::size_t v = 0; v < n; ++v) {
      bool pure = false;
      for (const auto& m : lead) {
        if (m[v] > 0 && m.degree() == m[v]) pure = true;
      }
      if (!pure) {
        throw Error(ErrorKind::NotZeroDimensional,
                    "no pure power of " + ideal.ring()->name(v) + " among leading monomials");
      }
    }
    auto is_standard = [&](const Monomial& m) {
      for (const auto& l : lead) {
        if (l.divides(m)) return false;
      }
      return true;
    };
    std::vector<Monomial> queue{Monomial{}};
    index_.emplace(Monomial{}, 0);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (std::size_t v = 0; v < n; ++v) {
        Monomial next = queue[head] * Monomial::variable(v);
        if (index_.count(next) || !is_standard(next)) continue;
        index_.emplace(next, queue.size());
        queue.push_back(next);
      }
    }
    basis_size_ = queue.size();
  }

  bool unit() const { return basis_size_ == 0; }
  std::size_t dimension() const { return basis_size_; }
  const Ideal& basis() const { return gb_; }

  Vector coordinates(const Polynomial& reduced) const {
    const Field& f = reduced.field();
    Vector v(basis_size_, f.zero());
    for (const auto& t : reduced.terms()) v[index_.at(t.monomial)] = t.coeff;
    return v;
  }

  /// Minimal polynomial of multiplication by `elem` on the cyclic subspace
  /// generated by 1, which is the minimal polynomial of elem in the quotient.
  univariate::Poly minimal_polynomial(const Polynomial& elem) const {
    const Field& f = elem.field();
    const Polynomial e = reducer_.normal_form(elem);
    Polynomial power = Polynomial::constant(elem.ring(), 1);
    std::vector<Vector> rows;
    std::vector<std::size_t> pivots;
    std::vector<univariate::Poly> combos;
    for (std::size_t k = 0; k <= basis_size_; ++k) {
      Vector w = coordinates(power);
      univariate::Poly combo(k + 1, f.zero());
      combo[k] = f.one();
      for (std::size_t j = 0; j < rows.size(); ++j) {
        const Scalar c = w[pivots[j]];
        if (f.is_zero(c)) continue;
        for (std::size_t i = 0; i < w.size(); ++i) {
          if (!f.is_zero(rows[j][i])) w[i] = f.sub(w[i], f.mul(c, rows[j][i]));
        }
        for (std::size_t i = 0; i < combos[j].size(); ++i) combo[i] = f.sub(combo[i], f.mul(c, combos[j][i]));
      }
      std::size_t piv = w.size();
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (!f.is_zero(w[i])) {
          piv = i;
          break;
        }
      }
      if (piv == w.size()) {
        univariate::trim(f, combo);
        return combo;
      }
      const Scalar inv = f.inv(w[piv]);
      for (auto& x : w) x = f.mul(x, inv);
      for (auto& x : combo) x = f.mul(x, inv);
      rows.push_back(std::move(w));
      pivots.push_back(piv);
      combos.push_back(std::move(combo));
      power = reducer_.normal_form(power * e);
    }
    throw Error(ErrorKind::EliminantDegenerate, "Krylov sequence failed to close");
  }

 private:
  MonomialOrder order_;
  Ideal gb_;
  Reducer reducer_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
  std::size_t basis_size_ = 0;
};

bool scalar_less(const Scalar& a, const Scalar& b) {
  if (a.is_residue()) return a.residue() < b.residue();
  return a.rational() < b.rational();
}

void solve_from(const Ideal& ideal, std::size_t var, std::vector<Scalar>& partial, Rng& rng,
                const GbOptions& opts, std::vector<std::vector<Scalar>>& out) {
  Quotient q(ideal, opts);
  if (q.unit()) return;
  const RingPtr& ring = ideal.ring();
  if (var == ring->size()) {
    out.push_back(partial);
    return;
  }
  const Field& f = ring->field();
  Polynomial x = Polynomial::variable(ring, var);
  auto eliminant = q.minimal_polynomial(x);
  for (const auto& r : univariate::roots(f, eliminant, rng)) {
    Ideal next = q.basis();
    next.add(x - Polynomial::constant(ring, r));
    partial.push_back(r);
    solve_from(next, var + 1, partial, rng, opts, out);
    partial.pop_back();
  }
}

}  // namespace

ZeroDimCount count_zero_dim(const Ideal& ideal, std::string_view distinguished, const GbOptions& opts) {
  return count_zero_dim(ideal, Polynomial::variable(ideal.ring(), distinguished), opts);
}

ZeroDimCount count_zero_dim(const Ideal& ideal, const Polynomial& distinguished, const GbOptions& opts) {
  require_same_ring(ideal.ring(), distinguished.ring());
  Quotient q(ideal, opts);
  if (q.unit()) return {};
  const Field& f = ideal.ring()->field();
  auto g = q.minimal_polynomial(distinguished);
  if (g.empty()) throw Error(ErrorKind::EliminantDegenerate, "eliminant vanishes");
  ZeroDimCount out;
  out.total = static_cast<std::int64_t>(q.dimension());
  out.distinct = univariate::degree(univariate::squarefree_part(f, g));
  return out;
}

std::vector<std::vector<Scalar>> rational_solutions(const Ideal& ideal, Rng& rng, const GbOptions& opts) {
  std::vector<std::vector<Scalar>> out;
  std::vector<Scalar> partial;
  solve_from(ideal, 0, partial, rng, opts, out);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), scalar_less);
  });
  return out;
}

}  // namespace tanvar
