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

#ifndef TANVAR_ALGEBRA_MONOMIAL_HPP
#define TANVAR_ALGEBRA_MONOMIAL_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>

namespace tanvar {

/// Largest variable registry a ring may carry.
inline constexpr std::size_t kMaxVars = 32;
/// Largest exponent of a single variable.
inline constexpr unsigned kMaxExponent = 255;

/// Exponent vector over the ambient registry. Entries past the registry size
/// are always zero, which lets every comparison run over the full array.
class Monomial {
 public:
  Monomial() { exps_.fill(0); }

  static Monomial variable(std::size_t index, unsigned power = 1);

  unsigned operator[](std::size_t i) const noexcept { return exps_[i]; }
  void set(std::size_t i, unsigned e);
  unsigned degree() const noexcept { return degree_; }
  /// Total degree over variables [begin, end).
  unsigned degree(std::size_t begin, std::size_t end) const noexcept;
  bool is_one() const noexcept { return degree_ == 0; }
  std::uint32_t support_mask() const noexcept;

  std::span<const std::uint8_t> exponents(std::size_t nvars) const {
    return {exps_.data(), nvars};
  }

  Monomial operator*(const Monomial& o) const;
  /// Requires o | *this.
  Monomial operator/(const Monomial& o) const;
  bool divides(const Monomial& o) const noexcept;
  Monomial lcm(const Monomial& o) const;
  Monomial gcd(const Monomial& o) const;
  bool coprime(const Monomial& o) const noexcept;

  bool operator==(const Monomial& o) const noexcept {
    return degree_ == o.degree_ && exps_ == o.exps_;
  }
  std::size_t hash() const noexcept;

 private:
  std::array<std::uint8_t, kMaxVars> exps_;
  std::uint16_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

enum class OrderKind { GrevLex, Lex, Block };

/// Term order. Block(k) compares the first k variables by graded reverse
/// lexicographic order and breaks ties with grevlex on the rest, so it
/// eliminates the leading block.
class MonomialOrder {
 public:
  static MonomialOrder grevlex() { return MonomialOrder(OrderKind::GrevLex, 0); }
  static MonomialOrder lex() { return MonomialOrder(OrderKind::Lex, 0); }
  static MonomialOrder block(std::size_t first_block) {
    return MonomialOrder(OrderKind::Block, first_block);
  }

  OrderKind kind() const noexcept { return kind_; }
  std::size_t block_size() const noexcept { return block_; }

  /// Negative, zero or positive as a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b) const noexcept;
  bool less(const Monomial& a, const Monomial& b) const noexcept { return compare(a, b) < 0; }

  bool operator==(const MonomialOrder&) const = default;

 private:
  MonomialOrder(OrderKind k, std::size_t b) : kind_(k), block_(b) {}
  OrderKind kind_;
  std::size_t block_;
};

}  // namespace tanvar

#endif  // TANVAR_ALGEBRA_MONOMIAL_HPP
