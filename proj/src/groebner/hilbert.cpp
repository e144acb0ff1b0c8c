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
#include "tanvar/groebner/ideal.hpp"

namespace tanvar {

namespace {

using Series = std::vector<std::int64_t>;

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::DegreeCapExceeded, "Hilbert numerator overflow");
  return r;
}

void trim(Series& s) {
  while (!s.empty() && s.back() == 0) s.pop_back();
}

Series add(const Series& a, const Series& b, std::size_t shift_b) {
  Series r(std::max(a.size(), b.size() + shift_b), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i + shift_b] = checked_add(r[i + shift_b], b[i]);
  trim(r);
  return r;
}

// Multiplies by (1 - t^d).
Series times_one_minus(const Series& a, unsigned d) {
  Series r(a.size() + d, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    r[i] = checked_add(r[i], a[i]);
    r[i + d] = checked_add(r[i + d], -a[i]);
  }
  trim(r);
  return r;
}

void minimize(std::vector<Monomial>& gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    return a.degree() < b.degree();
  });
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& h : out) {
      if (h.divides(g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) out.push_back(g);
  }
  gens = std::move(out);
}

// Numerator N with HS = N / (1-t)^nvars, by the pivot recursion
// N(M) = N(M + p) + t^deg(p) N(M : p).
Series numerator(std::vector<Monomial> gens, std::size_t nvars) {
  minimize(gens);
  if (gens.empty()) return {1};
  if (gens.front().is_one()) return {};
  bool coprime = true;
  for (std::size_t i = 0; i < gens.size() && coprime; ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (!gens[i].coprime(gens[j])) {
        coprime = false;
        break;
      }
    }
  }
  if (coprime) {
    Series r{1};
    for (const auto& g : gens) r = times_one_minus(r, g.degree());
    return r;
  }
  // Pivot on the variable shared by the most generators.
  std::size_t best = 0, best_count = 0;
  for (std::size_t v = 0; v < nvars; ++v) {
    std::size_t count = 0;
    for (const auto& g : gens) count += g[v] > 0;
    if (count > best_count) {
      best_count = count;
      best = v;
    }
  }
  unsigned e = std::numeric_limits<unsigned>::max();
  for (const auto& g : gens) {
    if (g[best] > 0) e = std::min(e, g[best]);
  }
  Monomial pivot = Monomial::variable(best, e);
  std::vector<Monomial> plus = gens;
  plus.push_back(pivot);
  std::vector<Monomial> colon;
  colon.reserve(gens.size());
  for (const auto& g : gens) colon.push_back(g / g.gcd(pivot));
  return add(numerator(std::move(plus), nvars), numerator(std::move(colon), nvars), e);
}

}  // namespace

std::vector<std::int64_t> hilbert_numerator(std::vector<Monomial> generators, std::size_t nvars) {
  return numerator(std::move(generators), nvars);
}

HilbertData hilbert_dim_degree(const Ideal& ideal, const GbOptions& opts) {
  if (!ideal.homogeneous()) throw Error(ErrorKind::NotHomogeneous, "Hilbert data needs a homogeneous ideal");
  const std::size_t n = ideal.ring()->size();
  auto order = MonomialOrder::grevlex();
  Ideal gb = groebner_basis(ideal, order, opts);
  std::vector<Monomial> lead;
  lead.reserve(gb.size());
  for (const auto& g : gb.generators()) lead.push_back(leading_monomial(g, order));
  HilbertData out;
  out.hilbert_numerator = numerator(lead, n);
  Series q = out.hilbert_numerator;
  if (q.empty()) return out;
  std::size_t k = 0;
  while (k < n) {
    std::int64_t at_one = 0;
    for (auto c : q) at_one = checked_add(at_one, c);
    if (at_one != 0) break;
    // Synthetic division by (1 - t): coefficients of q / (1 - t) are the
    // partial sums of q.
    Series next(q.size() - 1, 0);
    std::int64_t acc = 0;
    for (std::size_t i = 0; i + 1 < q.size(); ++i) {
      acc = checked_add(acc, q[i]);
      next[i] = acc;
    }
    q = std::move(next);
    ++k;
  }
  out.projective_dimension = static_cast<int>(n - k) - 1;
  std::int64_t deg = 0;
  for (auto c : q) deg = checked_add(deg, c);
  out.degree = out.projective_dimension >= 0 ? deg : 0;
  return out;
}

}  // namespace tanvar
