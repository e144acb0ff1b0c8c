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

#ifndef TANVAR_ALGEBRA_POLYNOMIAL_HPP
#define TANVAR_ALGEBRA_POLYNOMIAL_HPP

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tanvar/algebra/field.hpp"
#include "tanvar/algebra/monomial.hpp"

namespace tanvar {

/// Ordered variable registry together with the coefficient field.
class Ring {
 public:
  Ring(std::vector<std::string> names, Field field);

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const Field& field() const noexcept { return field_; }

  std::optional<std::size_t> find(std::string_view name) const;
  /// Throws UnknownVariable.
  std::size_t index_of(std::string_view name) const;

  bool operator==(const Ring& o) const { return names_ == o.names_ && field_ == o.field_; }

 private:
  std::vector<std::string> names_;
  Field field_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> names, const Field& field);
/// Throws FieldMismatch unless both rings are the same registry and field.
void require_same_ring(const RingPtr& a, const RingPtr& b);

struct Term {
  Monomial monomial;
  Scalar coeff;
};

/// Sparse multivariate polynomial. Terms are kept sorted by decreasing
/// grevlex order with no zero coefficients, so equality is structural.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  Polynomial(RingPtr ring, std::vector<Term> terms);

  static Polynomial constant(const RingPtr& ring, const Scalar& c);
  static Polynomial constant(const RingPtr& ring, std::int64_t c);
  static Polynomial variable(const RingPtr& ring, std::size_t index);
  static Polynomial variable(const RingPtr& ring, std::string_view name);
  static Polynomial monomial(const RingPtr& ring, const Monomial& m, const Scalar& c);

  const RingPtr& ring() const noexcept { return ring_; }
  const Field& field() const noexcept { return ring_->field(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
  }
  int total_degree() const;
  bool is_homogeneous() const;
  /// Max exponent of variable i, 0 for the zero polynomial.
  unsigned degree_in(std::size_t i) const;
  Scalar coefficient(const Monomial& m) const;
  Scalar constant_term() const { return coefficient(Monomial{}); }

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial scaled(const Scalar& c) const;
  Polynomial times_term(const Monomial& m, const Scalar& c) const;
  Polynomial pow(unsigned e) const;
  /// Divides by the leading (grevlex) coefficient.
  Polynomial monic() const;

  bool operator==(const Polynomial& o) const;

  std::string to_string() const;

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Formal partial derivative. Throws UnknownVariable.
Polynomial differentiate(const Polynomial& f, std::string_view var);
Polynomial differentiate(const Polynomial& f, std::size_t var);

/// Cofactor expansion along the first row of a nonempty square matrix.
Polynomial determinant(const std::vector<std::vector<Polynomial>>& m);

/// Throws DimensionMismatch if point.size() != registry size.
Scalar evaluate(const Polynomial& f, std::span<const Scalar> point);

/// Replaces variable i of f by images[i]; all images share one ring, which
/// becomes the ring of the result.
Polynomial substitute(const Polynomial& f, std::span<const Polynomial> images);

/// Moves f into a ring whose registry contains every variable of f's ring
/// (matched by name).
Polynomial rename_into(const Polynomial& f, const RingPtr& target);
/// Like rename_into, but only the variables that occur in f need to exist in
/// the target. Throws UnknownVariable otherwise.
Polynomial restrict_into(const Polynomial& f, const RingPtr& target);
/// Copies f into `target`, where variable v of f's ring is named prefix + v.
Polynomial relabel_into(const Polynomial& f, const RingPtr& target, const std::string& prefix);

/// Parser for `expr := term (('+'|'-') term)*; term := factor ('*' factor)*;
/// factor := coeff | var | var '^' uint | '(' expr ')'`, where coeff is an
/// optionally signed integer or a/b literal. Throws SyntaxError or
/// UnknownVariable.
Polynomial parse_poly(std::string_view src, const RingPtr& ring);
Polynomial parse_poly(std::string_view src, const std::vector<std::string>& registry,
                      const FieldConfig& field);

}  // namespace tanvar

#endif  // TANVAR_ALGEBRA_POLYNOMIAL_HPP
