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

#ifndef TANVAR_ALGEBRA_FIELD_HPP
#define TANVAR_ALGEBRA_FIELD_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <variant>

namespace tanvar {

inline constexpr std::uint64_t kDefaultPrime = 2147483629ULL;
inline constexpr std::uint64_t kVerifyPrime = 2147483563ULL;
inline constexpr std::uint64_t kDefaultSeed = 42;

enum class FieldKind { Rationals, PrimeField };

/// Field descriptor plus the seed every randomized choice derives from.
struct FieldConfig {
  FieldKind kind = FieldKind::PrimeField;
  std::uint64_t prime = kDefaultPrime;
  std::uint64_t seed = kDefaultSeed;

  static FieldConfig prime_field(std::uint64_t p = kDefaultPrime,
                                 std::uint64_t seed = kDefaultSeed);
  static FieldConfig rationals(std::uint64_t seed = kDefaultSeed);

  /// Throws InvalidField unless the prime is an odd prime above 2^20 that
  /// fits the 63-bit residue representation.
  void validate() const;

  bool operator==(const FieldConfig&) const = default;
};

bool is_prime_u64(std::uint64_t n);

/// Exact field element. Residues are kept in [0, p); rationals are kept in
/// lowest terms with a positive denominator, so equality is structural.
class Scalar {
 public:
  Scalar() = default;
  explicit Scalar(std::uint64_t residue) : value_(residue) {}
  explicit Scalar(mpq_class q) : value_(std::move(q)) {}

  bool is_residue() const noexcept { return std::holds_alternative<std::uint64_t>(value_); }
  std::uint64_t residue() const { return std::get<std::uint64_t>(value_); }
  const mpq_class& rational() const { return std::get<mpq_class>(value_); }

  bool operator==(const Scalar& other) const;

 private:
  std::variant<std::uint64_t, mpq_class> value_{std::uint64_t{0}};
};

/// Arithmetic context for Scalars of one field. Cheap to copy.
class Field {
 public:
  Field() : Field(FieldConfig{}) {}
  explicit Field(const FieldConfig& config);

  FieldKind kind() const noexcept { return kind_; }
  bool is_prime() const noexcept { return kind_ == FieldKind::PrimeField; }
  std::uint64_t prime() const noexcept { return prime_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t v) const;
  Scalar from_mpz(const mpz_class& v) const;
  /// Throws SyntaxError on a zero denominator, or when the denominator
  /// vanishes modulo p.
  Scalar from_fraction(const mpz_class& num, const mpz_class& den) const;

  bool is_zero(const Scalar& a) const;
  bool is_one(const Scalar& a) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  /// Throws DimensionMismatch (division by zero) on a zero argument.
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }
  Scalar pow(Scalar base, std::uint64_t e) const;

  std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) const noexcept {
    if (small_) return (a * b) % prime_;
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % prime_);
  }

  std::string to_string(const Scalar& a) const;
  /// Reduces a rational to this field (identity for Rationals).
  Scalar reduce(const mpq_class& q) const;

  bool operator==(const Field& o) const noexcept {
    return kind_ == o.kind_ && prime_ == o.prime_;
  }

 private:
  FieldKind kind_;
  std::uint64_t prime_ = 0;
  bool small_ = false;
};

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p);

}  // namespace tanvar

#endif  // TANVAR_ALGEBRA_FIELD_HPP
