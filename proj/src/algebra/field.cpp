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

#include "tanvar/algebra/field.hpp"

#include "tanvar/algebra/rng.hpp"
#include "tanvar/error.hpp"

namespace tanvar {

namespace {

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  unsigned __int128 r = 1, x = b % m;
  while (e) {
    if (e & 1) r = (r * x) % m;
    x = (x * x) % m;
    e >>= 1;
  }
  return static_cast<std::uint64_t>(r);
}

}  // namespace

// Deterministic Miller-Rabin; these bases are exact for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * x) % n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  __int128 t = 0, nt = 1, r = p, nr = a % p;
  while (nr != 0) {
    __int128 q = r / nr;
    __int128 tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw Error(ErrorKind::DimensionMismatch, "division by zero in prime field");
  if (t < 0) t += p;
  return static_cast<std::uint64_t>(t);
}

FieldConfig FieldConfig::prime_field(std::uint64_t p, std::uint64_t seed) {
  FieldConfig c{FieldKind::PrimeField, p, seed};
  c.validate();
  return c;
}

FieldConfig FieldConfig::rationals(std::uint64_t seed) {
  return FieldConfig{FieldKind::Rationals, 0, seed};
}

void FieldConfig::validate() const {
  if (kind == FieldKind::Rationals) return;
  if (prime <= (1ULL << 20) || prime >= (1ULL << 63) || !is_prime_u64(prime)) {
    throw Error(ErrorKind::InvalidField,
                "prime must be an odd prime in (2^20, 2^63), got " + std::to_string(prime));
  }
}

bool Scalar::operator==(const Scalar& other) const { return value_ == other.value_; }

Field::Field(const FieldConfig& config) : kind_(config.kind) {
  config.validate();
  if (kind_ == FieldKind::PrimeField) {
    prime_ = config.prime;
    small_ = prime_ < (1ULL << 32);
  }
}

Scalar Field::zero() const { return is_prime() ? Scalar(std::uint64_t{0}) : Scalar(mpq_class(0)); }
Scalar Field::one() const { return is_prime() ? Scalar(std::uint64_t{1}) : Scalar(mpq_class(1)); }

Scalar Field::from_int(std::int64_t v) const {
  if (is_prime()) {
    __int128 r = static_cast<__int128>(v) % static_cast<__int128>(prime_);
    if (r < 0) r += prime_;
    return Scalar(static_cast<std::uint64_t>(r));
  }
  return Scalar(mpq_class(mpz_class(std::to_string(v))));
}

Scalar Field::from_mpz(const mpz_class& v) const {
  if (is_prime()) {
    mpz_class r;
    mpz_class p(std::to_string(prime_));
    mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
    return Scalar(static_cast<std::uint64_t>(std::stoull(r.get_str())));
  }
  return Scalar(mpq_class(v));
}

Scalar Field::from_fraction(const mpz_class& num, const mpz_class& den) const {
  if (den == 0) throw Error(ErrorKind::SyntaxError, "zero denominator");
  if (is_prime()) {
    Scalar d = from_mpz(den);
    if (is_zero(d)) throw Error(ErrorKind::SyntaxError, "denominator vanishes modulo p");
    return div(from_mpz(num), d);
  }
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(q);
}

Scalar Field::reduce(const mpq_class& q) const {
  return from_fraction(q.get_num(), q.get_den());
}

bool Field::is_zero(const Scalar& a) const {
  return is_prime() ? a.residue() == 0 : a.rational() == 0;
}

bool Field::is_one(const Scalar& a) const {
  return is_prime() ? a.residue() == 1 : a.rational() == 1;
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (is_prime()) {
    std::uint64_t s = a.residue() + b.residue();
    if (s >= prime_) s -= prime_;
    return Scalar(s);
  }
  return Scalar(mpq_class(a.rational() + b.rational()));
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  if (is_prime()) {
    std::uint64_t x = a.residue(), y = b.residue();
    return Scalar(x >= y ? x - y : x + prime_ - y);
  }
  return Scalar(mpq_class(a.rational() - b.rational()));
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (is_prime()) return Scalar(mulmod(a.residue(), b.residue()));
  return Scalar(mpq_class(a.rational() * b.rational()));
}

Scalar Field::neg(const Scalar& a) const {
  if (is_prime()) return Scalar(a.residue() == 0 ? 0 : prime_ - a.residue());
  return Scalar(mpq_class(-a.rational()));
}

Scalar Field::inv(const Scalar& a) const {
  if (is_zero(a)) throw Error(ErrorKind::DimensionMismatch, "division by zero");
  if (is_prime()) return Scalar(inverse_mod(a.residue(), prime_));
  return Scalar(mpq_class(1 / a.rational()));
}

Scalar Field::pow(Scalar base, std::uint64_t e) const {
  Scalar r = one();
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

std::string Field::to_string(const Scalar& a) const {
  if (is_prime()) return std::to_string(a.residue());
  return a.rational().get_str();
}

Scalar Rng::nonzero(const Field& field) {
  if (field.is_prime()) return Scalar(1 + below(field.prime() - 1));
  std::int64_t v = static_cast<std::int64_t>(below(199)) - 99;
  if (v == 0) v = 100;
  return field.from_int(v);
}

Scalar Rng::scalar(const Field& field) {
  if (field.is_prime()) return Scalar(below(field.prime()));
  return field.from_int(static_cast<std::int64_t>(below(199)) - 99);
}

std::vector<Scalar> Rng::vector(const Field& field, std::size_t n) {
  std::vector<Scalar> v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) v.push_back(nonzero(field));
  return v;
}

}  // namespace tanvar
