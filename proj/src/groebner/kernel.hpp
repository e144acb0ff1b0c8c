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

// Internal Buchberger kernel, templated over coefficient arithmetic so the
// prime-field path runs on machine words.
#ifndef TANVAR_SRC_GROEBNER_KERNEL_HPP
#define TANVAR_SRC_GROEBNER_KERNEL_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tanvar/algebra/polynomial.hpp"
#include "tanvar/error.hpp"

namespace tanvar::detail {

struct ModArith {
  using T = std::uint64_t;
  Field field;

  T add(T a, T b) const {
    T s = a + b;
    return s >= field.prime() ? s - field.prime() : s;
  }
  T sub(T a, T b) const { return a >= b ? a - b : a + field.prime() - b; }
  T neg(T a) const { return a ? field.prime() - a : 0; }
  T mul(T a, T b) const { return field.mulmod(a, b); }
  T inv(T a) const { return inverse_mod(a, field.prime()); }
  static bool is_zero(T a) { return a == 0; }
  static bool is_one(T a) { return a == 1; }
  static T one() { return 1; }
  T from(const Scalar& s) const { return s.residue(); }
  Scalar to(T a) const { return Scalar(a); }
};

struct RatArith {
  using T = mpq_class;
  Field field;

  T add(const T& a, const T& b) const { return a + b; }
  T sub(const T& a, const T& b) const { return a - b; }
  T neg(const T& a) const { return -a; }
  T mul(const T& a, const T& b) const { return a * b; }
  T inv(const T& a) const { return 1 / a; }
  static bool is_zero(const T& a) { return a == 0; }
  static bool is_one(const T& a) { return a == 1; }
  static T one() { return 1; }
  T from(const Scalar& s) const { return s.rational(); }
  Scalar to(const T& a) const { return Scalar(a); }
};

template <class A>
struct KPoly {
  using T = typename A::T;
  // Descending in the kernel order.
  std::vector<Monomial> mon;
  std::vector<T> coef;
  unsigned sugar = 0;

  bool empty() const { return mon.empty(); }
  std::size_t size() const { return mon.size(); }
};

template <class A>
KPoly<A> to_kernel(const A& ar, const Polynomial& f, const MonomialOrder& ord) {
  std::vector<std::size_t> idx(f.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  const auto& terms = f.terms();
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return ord.compare(terms[a].monomial, terms[b].monomial) > 0;
  });
  KPoly<A> p;
  p.mon.reserve(idx.size());
  p.coef.reserve(idx.size());
  for (auto i : idx) {
    p.mon.push_back(terms[i].monomial);
    p.coef.push_back(ar.from(terms[i].coeff));
    p.sugar = std::max(p.sugar, terms[i].monomial.degree());
  }
  return p;
}

template <class A>
Polynomial from_kernel(const A& ar, const KPoly<A>& p, const RingPtr& ring) {
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) terms.push_back(Term{p.mon[i], ar.to(p.coef[i])});
  return Polynomial(ring, std::move(terms));
}

/// Ascending sorted term list (leading term at the back) for cheap pops.
template <class A>
struct Run {
  std::vector<Monomial> mon;
  std::vector<typename A::T> coef;
};

/// Geometric bucket accumulator for reduction.
template <class A>
class Geobucket {
 public:
  using T = typename A::T;
  Geobucket(const A& ar, const MonomialOrder& ord) : ar_(ar), ord_(ord) {}

  /// Adds c * m * p[start..] to the accumulator.
  void add_scaled(const KPoly<A>& p, std::size_t start, const T& c, const Monomial& m) {
    if (start >= p.size() || A::is_zero(c)) return;
    Run<A> run;
    std::size_t n = p.size() - start;
    run.mon.reserve(n);
    run.coef.reserve(n);
    bool unit_m = m.is_one();
    bool unit_c = A::is_one(c);
    for (std::size_t i = p.size(); i-- > start;) {
      run.mon.push_back(unit_m ? p.mon[i] : p.mon[i] * m);
      run.coef.push_back(unit_c ? p.coef[i] : ar_.mul(p.coef[i], c));
    }
    insert(std::move(run));
  }

  /// Removes and returns the leading term of the accumulated sum.
  bool pop_leading(Monomial& m, T& c) {
    while (true) {
      int best = -1;
      for (std::size_t i = 0; i < buckets_.size(); ++i) {
        if (buckets_[i].mon.empty()) continue;
        if (best < 0 || ord_.compare(buckets_[i].mon.back(), buckets_[best].mon.back()) > 0) {
          best = static_cast<int>(i);
        }
      }
      if (best < 0) return false;
      m = buckets_[best].mon.back();
      c = buckets_[best].coef.back();
      buckets_[best].mon.pop_back();
      buckets_[best].coef.pop_back();
      for (std::size_t i = 0; i < buckets_.size(); ++i) {
        auto& b = buckets_[i];
        if (!b.mon.empty() && b.mon.back() == m) {
          c = ar_.add(c, b.coef.back());
          b.mon.pop_back();
          b.coef.pop_back();
        }
      }
      if (!A::is_zero(c)) return true;
    }
  }

 private:
  static std::size_t capacity(std::size_t level) { return std::size_t{8} << (2 * level); }

  void insert(Run<A> run) {
    std::size_t level = 0;
    while (capacity(level) < run.mon.size()) ++level;
    while (true) {
      if (buckets_.size() <= level) buckets_.resize(level + 1);
      if (buckets_[level].mon.empty()) {
        buckets_[level] = std::move(run);
        return;
      }
      run = merge(std::move(buckets_[level]), std::move(run));
      buckets_[level] = Run<A>{};
      while (capacity(level) < run.mon.size()) ++level;
    }
  }

  Run<A> merge(Run<A> a, Run<A> b) {
    Run<A> r;
    r.mon.reserve(a.mon.size() + b.mon.size());
    r.coef.reserve(a.mon.size() + b.mon.size());
    std::size_t i = 0, j = 0;
    while (i < a.mon.size() && j < b.mon.size()) {
      int cmp = ord_.compare(a.mon[i], b.mon[j]);
      if (cmp < 0) {
        r.mon.push_back(a.mon[i]);
        r.coef.push_back(std::move(a.coef[i]));
        ++i;
      } else if (cmp > 0) {
        r.mon.push_back(b.mon[j]);
        r.coef.push_back(std::move(b.coef[j]));
        ++j;
      } else {
        T s = ar_.add(a.coef[i], b.coef[j]);
        if (!A::is_zero(s)) {
          r.mon.push_back(a.mon[i]);
          r.coef.push_back(std::move(s));
        }
        ++i;
        ++j;
      }
    }
    for (; i < a.mon.size(); ++i) {
      r.mon.push_back(a.mon[i]);
      r.coef.push_back(std::move(a.coef[i]));
    }
    for (; j < b.mon.size(); ++j) {
      r.mon.push_back(b.mon[j]);
      r.coef.push_back(std::move(b.coef[j]));
    }
    return r;
  }

  const A& ar_;
  const MonomialOrder& ord_;
  std::vector<Run<A>> buckets_;
};

template <class A>
class Buchberger {
 public:
  using T = typename A::T;

  Buchberger(A ar, MonomialOrder ord, unsigned degree_cap, std::uint64_t budget = 0)
      : ar_(std::move(ar)), ord_(ord), cap_(degree_cap), budget_(budget) {}

  /// Runs to completion; returns the reduced basis (monic, ascending LM).
  std::vector<KPoly<A>> run(std::vector<KPoly<A>> input) {
    for (auto& f : input) {
      if (f.empty()) continue;
      KPoly<A> h = reduce(std::move(f), true);
      if (h.empty()) continue;
      make_monic(h);
      if (h.mon.front().is_one()) return unit(h.sugar);
      insert(std::move(h));
    }
    while (!pairs_.empty()) {
      std::size_t best = 0;
      for (std::size_t i = 1; i < pairs_.size(); ++i) {
        if (pair_less(pairs_[i], pairs_[best])) best = i;
      }
      Pair pr = pairs_[best];
      pairs_[best] = pairs_.back();
      pairs_.pop_back();
      if (pr.lcm.degree() > cap_) {
        throw Error(ErrorKind::DegreeCapExceeded,
                    "S-pair of degree " + std::to_string(pr.lcm.degree()) + " exceeds cap " +
                        std::to_string(cap_));
      }
      if (budget_ != 0 && ++spent_ > budget_) {
        throw Error(ErrorKind::DegreeCapExceeded,
                    "work budget of " + std::to_string(budget_) + " S-pair reductions exhausted");
      }
      KPoly<A> h = spoly_reduced(pr);
      if (h.empty()) continue;
      make_monic(h);
      if (h.mon.front().is_one()) return unit(h.sugar);
      insert(std::move(h));
    }
    return finish();
  }

  /// Full normal form against the active basis.
  KPoly<A> reduce(KPoly<A> f, bool full) const {
    Geobucket<A> bucket(ar_, ord_);
    bucket.add_scaled(f, 0, A::one(), Monomial{});
    return reduce_bucket(bucket, f.sugar, full);
  }

  void load_basis(std::vector<KPoly<A>> basis) {
    for (auto& g : basis) {
      polys_.push_back(std::move(g));
      lms_.push_back(polys_.back().mon.front());
      masks_.push_back(lms_.back().support_mask());
      active_.push_back(true);
    }
  }

 private:
  struct Pair {
    std::size_t i, j;
    Monomial lcm;
    unsigned sugar;
  };

  bool pair_less(const Pair& a, const Pair& b) const {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    int c = ord_.compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
  }

  std::vector<KPoly<A>> unit(unsigned sugar) const {
    KPoly<A> one;
    one.mon.push_back(Monomial{});
    one.coef.push_back(A::one());
    one.sugar = sugar;
    return {one};
  }

  void make_monic(KPoly<A>& h) const {
    if (A::is_one(h.coef.front())) return;
    T inv = ar_.inv(h.coef.front());
    for (auto& c : h.coef) c = ar_.mul(c, inv);
  }

  std::optional<std::size_t> find_reducer(const Monomial& m) const {
    std::uint32_t mask = m.support_mask();
    for (std::size_t k = 0; k < polys_.size(); ++k) {
      if (!active_[k]) continue;
      if ((masks_[k] & ~mask) != 0) continue;
      if (lms_[k].divides(m)) return k;
    }
    return std::nullopt;
  }

  KPoly<A> reduce_bucket(Geobucket<A>& bucket, unsigned sugar, bool full) const {
    KPoly<A> out;
    out.sugar = sugar;
    Monomial m;
    T c;
    while (bucket.pop_leading(m, c)) {
      auto k = find_reducer(m);
      if (k) {
        const KPoly<A>& g = polys_[*k];
        bucket.add_scaled(g, 1, ar_.neg(c), m / lms_[*k]);
      } else {
        out.mon.push_back(m);
        out.coef.push_back(c);
        if (!full) {
          while (bucket.pop_leading(m, c)) {
            out.mon.push_back(m);
            out.coef.push_back(c);
          }
          break;
        }
      }
    }
    return out;
  }

  KPoly<A> spoly_reduced(const Pair& pr) const {
    const KPoly<A>& f = polys_[pr.i];
    const KPoly<A>& g = polys_[pr.j];
    Geobucket<A> bucket(ar_, ord_);
    bucket.add_scaled(f, 1, A::one(), pr.lcm / lms_[pr.i]);
    bucket.add_scaled(g, 1, ar_.neg(A::one()), pr.lcm / lms_[pr.j]);
    return reduce_bucket(bucket, pr.sugar, true);
  }

  unsigned pair_sugar(std::size_t i, std::size_t j, const Monomial& lcm) const {
    unsigned si = polys_[i].sugar + (lcm.degree() - lms_[i].degree());
    unsigned sj = polys_[j].sugar + (lcm.degree() - lms_[j].degree());
    return std::max(si, sj);
  }

  // Gebauer-Moeller update.
  void insert(KPoly<A> h) {
    const std::size_t hi = polys_.size();
    polys_.push_back(std::move(h));
    lms_.push_back(polys_.back().mon.front());
    masks_.push_back(lms_.back().support_mask());
    active_.push_back(false);
    const Monomial& lh = lms_[hi];

    std::vector<std::size_t> candidates;
    for (std::size_t k = 0; k < hi; ++k) {
      if (active_[k]) candidates.push_back(k);
    }
    std::vector<Monomial> lcms(candidates.size());
    for (std::size_t a = 0; a < candidates.size(); ++a) lcms[a] = lms_[candidates[a]].lcm(lh);

    std::vector<std::size_t> kept;  // positions into candidates
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      bool keep = lms_[candidates[a]].coprime(lh);
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < candidates.size() && keep; ++b) {
          if (lcms[b].divides(lcms[a])) keep = false;
        }
        for (std::size_t b : kept) {
          if (!keep) break;
          if (lcms[b].divides(lcms[a])) keep = false;
        }
      }
      if (keep) kept.push_back(a);
    }

    std::vector<Pair> next;
    next.reserve(pairs_.size() + kept.size());
    for (const Pair& p : pairs_) {
      bool drop = lh.divides(p.lcm) && !(lms_[p.i].lcm(lh) == p.lcm) && !(lms_[p.j].lcm(lh) == p.lcm);
      if (!drop) next.push_back(p);
    }
    for (std::size_t a : kept) {
      std::size_t k = candidates[a];
      if (lms_[k].coprime(lh)) continue;
      next.push_back(Pair{k, hi, lcms[a], pair_sugar(k, hi, lcms[a])});
    }
    pairs_ = std::move(next);

    for (std::size_t k = 0; k < hi; ++k) {
      if (active_[k] && lh.divides(lms_[k])) active_[k] = false;
    }
    active_[hi] = true;
  }

  std::vector<KPoly<A>> finish() {
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < polys_.size(); ++k) {
      if (active_[k]) idx.push_back(k);
    }
    // Minimal basis: drop elements whose LM is divisible by another's.
    std::vector<std::size_t> minimal;
    for (std::size_t a : idx) {
      bool redundant = false;
      for (std::size_t b : idx) {
        if (a == b) continue;
        if (lms_[b].divides(lms_[a]) && (!(lms_[a] == lms_[b]) || b < a)) {
          redundant = true;
          break;
        }
      }
      if (!redundant) minimal.push_back(a);
    }
    std::fill(active_.begin(), active_.end(), false);
    for (auto k : minimal) active_[k] = true;
    std::vector<KPoly<A>> out;
    out.reserve(minimal.size());
    for (auto k : minimal) {
      // Tail-reduce against the other minimal elements; the leading term is
      // not divisible by any of them.
      active_[k] = false;
      KPoly<A> g = polys_[k];
      KPoly<A> tail;
      tail.mon.assign(g.mon.begin() + 1, g.mon.end());
      tail.coef.assign(g.coef.begin() + 1, g.coef.end());
      KPoly<A> red = reduce(std::move(tail), true);
      active_[k] = true;
      KPoly<A> r;
      r.sugar = g.sugar;
      r.mon.push_back(g.mon.front());
      r.coef.push_back(g.coef.front());
      r.mon.insert(r.mon.end(), red.mon.begin(), red.mon.end());
      r.coef.insert(r.coef.end(), red.coef.begin(), red.coef.end());
      out.push_back(std::move(r));
    }
    std::sort(out.begin(), out.end(), [&](const KPoly<A>& a, const KPoly<A>& b) {
      return ord_.compare(a.mon.front(), b.mon.front()) < 0;
    });
    return out;
  }

  A ar_;
  MonomialOrder ord_;
  unsigned cap_;
  std::uint64_t budget_ = 0;
  std::uint64_t spent_ = 0;
  std::vector<KPoly<A>> polys_;
  std::vector<Monomial> lms_;
  std::vector<std::uint32_t> masks_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
};

}  // namespace tanvar::detail

#endif  // TANVAR_SRC_GROEBNER_KERNEL_HPP
