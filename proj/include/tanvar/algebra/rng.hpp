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

#ifndef TANVAR_ALGEBRA_RNG_HPP
#define TANVAR_ALGEBRA_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "tanvar/algebra/field.hpp"

namespace tanvar {

/// Seeded generator. Only the raw mt19937_64 stream is used (never the
/// implementation-defined std distributions) so results are identical across
/// standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(mix(seed)) {}

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t next() { return engine_(); }
  /// Uniform-ish in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  /// Independent child stream, keyed by a salt.
  Rng fork(std::uint64_t salt) const { return Rng(mix(seed_ ^ mix(salt + 0x9e37))); }

  /// Random nonzero field element. Rationals draw small integers so that
  /// exact computations stay tractable.
  Scalar nonzero(const Field& field);
  Scalar scalar(const Field& field);
  std::vector<Scalar> vector(const Field& field, std::size_t n);

  static std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace tanvar

#endif  // TANVAR_ALGEBRA_RNG_HPP
