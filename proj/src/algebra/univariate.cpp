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

#include "tanvar/algebra/univariate.hpp"

#include <algorithm>

#include "tanvar/error.hpp"

namespace tanvar::univariate {

void trim(const Field& f, Poly& p) {
  while (!p.empty() && f.is_zero(p.back())) p.pop_back();
}

int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly derivative(const Field& f, const Poly& p) {
  Poly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(f.mul(p[i], f.from_int(static_cast<std::int64_t>(i))));
  trim(f, d);
  return d;
}

Poly mul(const Field& f, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (f.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  }
  trim(f, r);
  return r;
}

Poly sub(const Field& f, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = f.sub(r[i], b[i]);
  trim(f, r);
  return r;
}

namespace {

void divmod(const Field& f, const Poly& a, const Poly& b, Poly* q, Poly* r) {
  if (b.empty()) throw Error(ErrorKind::DimensionMismatch, "univariate division by zero");
  Poly rem = a;
  trim(f, rem);
  Poly quo;
  if (rem.size() >= b.size()) quo.assign(rem.size() - b.size() + 1, f.zero());
  Scalar lead_inv = f.inv(b.back());
  while (rem.size() >= b.size()) {
    std::size_t shift = rem.size() - b.size();
    Scalar c = f.mul(rem.back(), lead_inv);
    quo[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) rem[shift + i] = f.sub(rem[shift + i], f.mul(c, b[i]));
    rem.pop_back();
    trim(f, rem);
  }
  trim(f, quo);
  if (q) *q = std::move(quo);
  if (r) *r = std::move(rem);
}

}  // namespace

Poly rem(const Field& f, const Poly& a, const Poly& b) {
  Poly r;
  divmod(f, a, b, nullptr, &r);
  return r;
}

Poly quot(const Field& f, const Poly& a, const Poly& b) {
  Poly q;
  divmod(f, a, b, &q, nullptr);
  return q;
}

Poly monic(const Field& f, const Poly& p) {
  if (p.empty()) return p;
  Scalar inv = f.inv(p.back());
  Poly r;
  r.reserve(p.size());
  for (const auto& c : p) r.push_back(f.mul(c, inv));
  return r;
}

Poly gcd(const Field& f, Poly a, Poly b) {
  trim(f, a);
  trim(f, b);
  while (!b.empty()) {
    Poly r = rem(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(f, a);
}

Poly squarefree_part(const Field& f, const Poly& p) {
  if (p.size() <= 1) return monic(f, p);
  Poly g = gcd(f, p, derivative(f, p));
  return monic(f, quot(f, p, g));
}

Scalar eval(const Field& f, const Poly& p, const Scalar& x) {
  Scalar acc = f.zero();
  for (std::size_t i = p.size(); i-- > 0;) acc = f.add(f.mul(acc, x), p[i]);
  return acc;
}

namespace {

// x^e mod m.
Poly powmod_x(const Field& f, const Poly& base, std::uint64_t e, const Poly& m) {
  Poly result{f.one()};
  Poly b = rem(f, base, m);
  while (e) {
    if (e & 1) result = rem(f, mul(f, result, b), m);
    e >>= 1;
    if (e) b = rem(f, mul(f, b, b), m);
  }
  return result;
}

void split(const Field& f, const Poly& p, Rng& rng, std::vector<Scalar>& out) {
  int d = degree(p);
  if (d <= 0) return;
  if (d == 1) {
    out.push_back(f.neg(f.div(p[0], p[1])));
    return;
  }
  const std::uint64_t half = (f.prime() - 1) / 2;
  for (int attempt = 0; attempt < 200; ++attempt) {
    Poly shifted{rng.scalar(f), f.one()};
    Poly h = powmod_x(f, shifted, half, p);
    h = sub(f, h, Poly{f.one()});
    Poly g = gcd(f, p, h);
    int dg = degree(g);
    if (dg > 0 && dg < d) {
      split(f, g, rng, out);
      split(f, quot(f, p, g), rng, out);
      return;
    }
  }
  throw Error(ErrorKind::NotFinite, "root splitting failed to make progress");
}

}  // namespace

std::vector<Scalar> roots(const Field& f, const Poly& p_in, Rng& rng) {
  Poly p = p_in;
  trim(f, p);
  std::vector<Scalar> out;
  if (degree(p) <= 0) return out;
  if (f.is_prime()) {
    Poly x{f.zero(), f.one()};
    Poly xq = powmod_x(f, x, f.prime(), p);
    Poly g = gcd(f, p, sub(f, xq, x));
    split(f, g, rng, out);
    std::sort(out.begin(), out.end(),
              [](const Scalar& a, const Scalar& b) { return a.residue() < b.residue(); });
  } else {
    Poly sf = squarefree_part(f, p);
    if (degree(sf) == 1) out.push_back(f.neg(f.div(sf[0], sf[1])));
  }
  return out;
}

}  // namespace tanvar::univariate
