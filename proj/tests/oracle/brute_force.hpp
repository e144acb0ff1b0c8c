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

#ifndef TANVAR_TESTS_ORACLE_BRUTE_FORCE_HPP
#define TANVAR_TESTS_ORACLE_BRUTE_FORCE_HPP

// Point-counting over a small prime field, independent of the library's
// arithmetic and solvers.

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <vector>

namespace oracle {

using Row = std::vector<std::int64_t>;

class Fp {
 public:
  explicit Fp(std::int64_t p) : p_(p) {}
  std::int64_t p() const { return p_; }
  std::int64_t norm(std::int64_t a) const { return ((a % p_) + p_) % p_; }
  std::int64_t inv(std::int64_t a) const {
    std::int64_t r = 1, b = norm(a), e = p_ - 2;
    while (e > 0) {
      if (e & 1) r = r * b % p_;
      b = b * b % p_;
      e >>= 1;
    }
    return r;
  }
  std::size_t rank(std::vector<Row> m) const {
    std::size_t r = 0;
    const std::size_t cols = m.empty() ? 0 : m.front().size();
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
      std::size_t piv = r;
      while (piv < m.size() && norm(m[piv][c]) == 0) ++piv;
      if (piv == m.size()) continue;
      std::swap(m[piv], m[r]);
      const std::int64_t iv = inv(m[r][c]);
      for (std::size_t i = r + 1; i < m.size(); ++i) {
        const std::int64_t f = norm(m[i][c]) * iv % p_;
        if (f == 0) continue;
        for (std::size_t k = c; k < cols; ++k) m[i][k] = norm(m[i][k] - f * norm(m[r][k]));
      }
      ++r;
    }
    return r;
  }

 private:
  std::int64_t p_;
};

/// Projective tangent spaces of a smooth parametrized variety, one per
/// rational parameter point, each given by spanning rows.
struct TangentFamily {
  std::size_t ambient = 0;  // N
  std::size_t dim = 0;      // n
  std::vector<std::vector<Row>> spaces;
};

/// Rational points of P^1.
inline std::vector<std::pair<std::int64_t, std::int64_t>> p1_points(std::int64_t p) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out{{0, 1}};
  for (std::int64_t t = 0; t < p; ++t) out.emplace_back(1, t);
  return out;
}

/// Tangent lines of the rational normal curve of degree d, from the partials
/// of s^(d-k) t^k.
inline TangentFamily rnc_tangents(const Fp& f, unsigned d) {
  auto pw = [&](std::int64_t b, unsigned e) {
    std::int64_t r = 1;
    for (unsigned i = 0; i < e; ++i) r = f.norm(r * b);
    return r;
  };
  TangentFamily fam{d, 1, {}};
  for (auto [s, t] : p1_points(f.p())) {
    Row ds(d + 1), dt(d + 1);
    for (unsigned k = 0; k <= d; ++k) {
      ds[k] = k < d ? f.norm(static_cast<std::int64_t>(d - k) * pw(s, d - k - 1) % f.p() * pw(t, k)) : 0;
      dt[k] = k > 0 ? f.norm(static_cast<std::int64_t>(k) * pw(s, d - k) % f.p() * pw(t, k - 1)) : 0;
    }
    fam.spaces.push_back({ds, dt});
  }
  return fam;
}

/// Tangent planes of the cubic scroll (a s, a t, b s^2, b s t, b t^2) in P^4.
inline TangentFamily cubic_scroll_tangents(const Fp& f) {
  TangentFamily fam{4, 2, {}};
  for (auto [a, b] : p1_points(f.p())) {
    for (auto [s, t] : p1_points(f.p())) {
      Row da{s, t, 0, 0, 0};
      Row db{0, 0, f.norm(s * s), f.norm(s * t), f.norm(t * t)};
      Row dsr{a, 0, f.norm(2 * b * s), f.norm(b * t), 0};
      Row dtr{0, a, 0, f.norm(b * s), f.norm(2 * b * t)};
      fam.spaces.push_back({da, db, dsr, dtr});
    }
  }
  return fam;
}

inline std::size_t space_dim(const Fp& f, const std::vector<Row>& rows) { return f.rank(rows); }

/// Number of tangent spaces containing x.
inline std::size_t through(const Fp& f, const TangentFamily& fam, const Row& x) {
  std::size_t count = 0;
  for (const auto& sp : fam.spaces) {
    auto rows = sp;
    const std::size_t r = f.rank(rows);
    rows.push_back(x);
    if (f.rank(rows) == r) ++count;
  }
  return count;
}

/// Number of tangent spaces meeting span(l).
inline std::size_t meeting(const Fp& f, const TangentFamily& fam, const std::vector<Row>& l) {
  std::size_t count = 0;
  const std::size_t rl = f.rank(l);
  for (const auto& sp : fam.spaces) {
    auto rows = sp;
    const std::size_t r = f.rank(rows);
    rows.insert(rows.end(), l.begin(), l.end());
    if (f.rank(rows) < r + rl) ++count;
  }
  return count;
}

/// Largest value reached in at least `min_share` of the samples. Generic
/// counts are bounded by the invariant and reach it when all solutions are
/// rational, which happens for a positive share of samples.
inline std::size_t largest_frequent(const std::map<std::size_t, std::size_t>& histogram, std::size_t samples,
                                    double min_share) {
  std::size_t best = 0;
  for (const auto& [value, hits] : histogram) {
    if (static_cast<double>(hits) >= min_share * static_cast<double>(samples)) best = value;
  }
  return best;
}

/// tau: tangent spaces through a random point of a random tangent space.
/// Most frequent count over the samples.
inline std::size_t tau(const Fp& f, const TangentFamily& fam, std::size_t samples, std::mt19937_64& gen) {
  std::uniform_int_distribution<std::int64_t> coef(0, f.p() - 1);
  std::uniform_int_distribution<std::size_t> pick(0, fam.spaces.size() - 1);
  std::map<std::size_t, std::size_t> histogram;
  for (std::size_t s = 0; s < samples; ++s) {
    const auto& sp = fam.spaces[pick(gen)];
    Row x(fam.ambient + 1, 0);
    for (const auto& r : sp) {
      const std::int64_t c = coef(gen);
      for (std::size_t k = 0; k < x.size(); ++k) x[k] = f.norm(x[k] + c * r[k]);
    }
    ++histogram[through(f, fam, x)];
  }
  std::size_t mode = 0, hits = 0;
  for (const auto& [value, h] : histogram) {
    if (h > hits) {
      mode = value;
      hits = h;
    }
  }
  return mode;
}

/// omega_n: tangent spaces meeting a random linear space of codimension 2n.
inline std::size_t omega_top(const Fp& f, const TangentFamily& fam, std::size_t samples, std::mt19937_64& gen) {
  std::uniform_int_distribution<std::int64_t> coef(0, f.p() - 1);
  const std::size_t span = fam.ambient - 2 * fam.dim + 1;
  std::map<std::size_t, std::size_t> histogram;
  for (std::size_t s = 0; s < samples; ++s) {
    std::vector<Row> l(span, Row(fam.ambient + 1));
    for (auto& r : l) {
      for (auto& c : r) c = coef(gen);
    }
    if (f.rank(l) < span) continue;
    ++histogram[meeting(f, fam, l)];
  }
  return largest_frequent(histogram, samples, 0.02);
}

}  // namespace oracle

#endif
