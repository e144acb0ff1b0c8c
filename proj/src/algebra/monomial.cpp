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

#include "tanvar/algebra/monomial.hpp"

#include <algorithm>
#include <string>

#include "tanvar/error.hpp"

namespace tanvar {

Monomial Monomial::variable(std::size_t index, unsigned power) {
  Monomial m;
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, unsigned e) {
  if (i >= kMaxVars) throw Error(ErrorKind::DimensionMismatch, "variable index out of range");
  if (e > kMaxExponent) {
    throw Error(ErrorKind::DegreeCapExceeded, "exponent " + std::to_string(e) + " too large");
  }
  degree_ = static_cast<std::uint16_t>(degree_ - exps_[i] + e);
  exps_[i] = static_cast<std::uint8_t>(e);
}

unsigned Monomial::degree(std::size_t begin, std::size_t end) const noexcept {
  unsigned d = 0;
  for (std::size_t i = begin; i < end; ++i) d += exps_[i];
  return d;
}

std::uint32_t Monomial::support_mask() const noexcept {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (exps_[i]) mask |= (1u << i);
  }
  return mask;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  bool overflow = false;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    unsigned e = unsigned(exps_[i]) + o.exps_[i];
    overflow |= e > kMaxExponent;
    r.exps_[i] = static_cast<std::uint8_t>(e);
  }
  if (overflow) throw Error(ErrorKind::DegreeCapExceeded, "exponent overflow in monomial product");
  r.degree_ = static_cast<std::uint16_t>(degree_ + o.degree_);
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exps_[i] = static_cast<std::uint8_t>(exps_[i] - o.exps_[i]);
  r.degree_ = static_cast<std::uint16_t>(degree_ - o.degree_);
  return r;
}

bool Monomial::divides(const Monomial& o) const noexcept {
  if (degree_ > o.degree_) return false;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (exps_[i] > o.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::lcm(const Monomial& o) const {
  Monomial r;
  unsigned d = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    r.exps_[i] = std::max(exps_[i], o.exps_[i]);
    d += r.exps_[i];
  }
  r.degree_ = static_cast<std::uint16_t>(d);
  return r;
}

Monomial Monomial::gcd(const Monomial& o) const {
  Monomial r;
  unsigned d = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    r.exps_[i] = std::min(exps_[i], o.exps_[i]);
    d += r.exps_[i];
  }
  r.degree_ = static_cast<std::uint16_t>(d);
  return r;
}

bool Monomial::coprime(const Monomial& o) const noexcept {
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (exps_[i] && o.exps_[i]) return false;
  }
  return true;
}

std::size_t Monomial::hash() const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    h ^= exps_[i];
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

namespace {

int grevlex_range(const Monomial& a, const Monomial& b, std::size_t begin, std::size_t end) {
  unsigned da = a.degree(begin, end), db = b.degree(begin, end);
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = end; i-- > begin;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const noexcept {
  switch (kind_) {
    case OrderKind::GrevLex: {
      if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
      for (std::size_t i = kMaxVars; i-- > 0;) {
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
      }
      return 0;
    }
    case OrderKind::Lex: {
      for (std::size_t i = 0; i < kMaxVars; ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      }
      return 0;
    }
    case OrderKind::Block: {
      int c = grevlex_range(a, b, 0, block_);
      if (c != 0) return c;
      return grevlex_range(a, b, block_, kMaxVars);
    }
  }
  return 0;
}

}  // namespace tanvar
