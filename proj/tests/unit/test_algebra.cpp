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

#include "doctest.h"
#include "support/random_poly.hpp"
#include "tanvar/algebra/matrix.hpp"
#include "tanvar/algebra/univariate.hpp"
#include "tanvar/error.hpp"

using namespace tanvar;

namespace {

RingPtr xyz(FieldConfig cfg = FieldConfig::prime_field()) { return make_ring({"x", "y", "z"}, Field(cfg)); }

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::Unsupported;
}

}  // namespace

TEST_CASE("field config validation") {
  CHECK_NOTHROW(FieldConfig::prime_field().validate());
  CHECK_NOTHROW(FieldConfig::prime_field(kVerifyPrime).validate());
  CHECK_NOTHROW(FieldConfig::rationals().validate());
  CHECK(kind_of([] { FieldConfig::prime_field(2147483630ULL).validate(); }) == ErrorKind::InvalidField);
  CHECK(kind_of([] { FieldConfig::prime_field(101).validate(); }) == ErrorKind::InvalidField);
  CHECK(is_prime_u64(kDefaultPrime));
  CHECK(is_prime_u64(kVerifyPrime));
  CHECK_FALSE(is_prime_u64(kDefaultPrime - 2));
}

TEST_CASE("prime field arithmetic") {
  Field f(FieldConfig::prime_field());
  Scalar a = f.from_int(-3);
  CHECK(f.add(a, f.from_int(3)) == f.zero());
  CHECK(f.mul(a, f.inv(a)) == f.one());
  CHECK(f.pow(f.from_int(2), kDefaultPrime - 1) == f.one());
  CHECK(f.from_fraction(1, 2) == f.inv(f.from_int(2)));
  CHECK(kind_of([&] { f.inv(f.zero()); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("rational arithmetic stays in lowest terms") {
  Field q(FieldConfig::rationals());
  Scalar a = q.from_fraction(2, 4);
  CHECK(a == q.from_fraction(1, 2));
  CHECK(q.add(a, a) == q.one());
  CHECK(q.to_string(q.from_fraction(-3, 6)) == "-1/2");
}

TEST_CASE("monomial orders") {
  auto x = Monomial::variable(0), y = Monomial::variable(1), z = Monomial::variable(2);
  auto grevlex = MonomialOrder::grevlex();
  auto lex = MonomialOrder::lex();
  // x*z vs y^2: grevlex favours y^2 (smaller power of the last variable).
  CHECK(grevlex.less(x * z, y * y));
  CHECK(lex.less(y * y, x * z));
  CHECK(lex.less(y * y * y, x));
  CHECK(grevlex.less(x, y * y * y));
  auto block = MonomialOrder::block(1);
  CHECK(block.less(y * y * y * z, x));
  CHECK(block.less(y * z * z, y * y * z));
  CHECK((x * y).lcm(y * z) == x * y * z);
  CHECK((x * y * y).gcd(y * y * z) == y * y);
  CHECK(x.coprime(y * z));
  CHECK(kind_of([] { Monomial m; m.set(0, 256); }) == ErrorKind::DegreeCapExceeded);
}

TEST_CASE("parser round trip and errors") {
  auto r = xyz();
  Polynomial f = parse_poly("x^2 - 2*x*y + y^2", r);
  Polynomial g = parse_poly("(x - y)^2", r);
  CHECK(f == g);
  CHECK(parse_poly("1/2*x + 1/2*x", r) == parse_poly("x", r));
  CHECK(parse_poly("-x + x", r).is_zero());
  CHECK(kind_of([&] { parse_poly("x +* y", r); }) == ErrorKind::SyntaxError);
  CHECK(kind_of([&] { parse_poly("x + w", r); }) == ErrorKind::UnknownVariable);
  CHECK(parse_poly(f.to_string(), r) == f);
  auto q = xyz(FieldConfig::rationals());
  Polynomial h = parse_poly("3/4*x^3*z - 5*y + 7", q);
  CHECK(parse_poly(h.to_string(), q) == h);
}

TEST_CASE("ring mismatch is reported") {
  auto a = xyz();
  auto b = make_ring({"x", "y"}, Field(FieldConfig::prime_field()));
  auto c = xyz(FieldConfig::prime_field(kVerifyPrime));
  CHECK(kind_of([&] { (void)(parse_poly("x", a) + parse_poly("x", b)); }) == ErrorKind::FieldMismatch);
  CHECK(kind_of([&] { (void)(parse_poly("x", a) * parse_poly("x", c)); }) == ErrorKind::FieldMismatch);
}

TEST_CASE("ring axioms on random polynomials") {
  auto r = xyz();
  Rng rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    auto f = testing::random_poly(r, rng, 4, 5);
    auto g = testing::random_poly(r, rng, 4, 5);
    auto h = testing::random_poly(r, rng, 3, 4);
    CHECK(f * (g + h) == f * g + f * h);
    CHECK(f * g == g * f);
    CHECK((f - f).is_zero());
    // Leibniz rule.
    CHECK(differentiate(f * g, "y") == differentiate(f, "y") * g + f * differentiate(g, "y"));
    // Evaluation is a ring homomorphism.
    auto pt = rng.vector(r->field(), 3);
    const Field& fld = r->field();
    CHECK(evaluate(f * g, pt) == fld.mul(evaluate(f, pt), evaluate(g, pt)));
  }
}

TEST_CASE("substitution composes with evaluation") {
  auto r = xyz();
  auto t = make_ring({"t"}, r->field());
  Polynomial f = parse_poly("x*z - y^2", r);
  std::vector<Polynomial> images{parse_poly("1", t), parse_poly("t", t), parse_poly("t^2", t)};
  CHECK(substitute(f, images).is_zero());
  Polynomial g = parse_poly("x + y*z", r);
  CHECK(substitute(g, images) == parse_poly("1 + t^3", t));
}

TEST_CASE("matrix rank, kernel and solve") {
  Field f(FieldConfig::prime_field());
  auto s = [&](std::int64_t v) { return f.from_int(v); };
  Matrix m = Matrix::from_rows(f, {{s(1), s(2), s(3)}, {s(2), s(4), s(6)}, {s(1), s(0), s(1)}}, 3);
  CHECK(m.rank() == 2);
  auto ker = m.kernel();
  REQUIRE(ker.size() == 1);
  auto image = m.apply(ker[0]);
  for (const auto& e : image) CHECK(f.is_zero(e));
  auto x = m.solve(Vector{s(6), s(12), s(2)});
  REQUIRE(x.has_value());
  CHECK(m.apply(*x) == Vector{s(6), s(12), s(2)});
  CHECK_FALSE(m.solve(Vector{s(1), s(0), s(0)}).has_value());
  CHECK_FALSE(m.inverse().has_value());
  Matrix inv_in = Matrix::from_rows(f, {{s(2), s(1)}, {s(1), s(1)}}, 2);
  auto inv = inv_in.inverse();
  REQUIRE(inv.has_value());
  Matrix prod = inv_in * *inv;
  CHECK(prod.at(0, 0) == f.one());
  CHECK(prod.at(0, 1) == f.zero());
}

TEST_CASE("complete_to_basis fills with standard vectors") {
  Field f(FieldConfig::prime_field());
  Vector v{f.one(), f.one(), f.zero()};
  auto extra = complete_to_basis(f, {v}, 3);
  REQUIRE(extra.size() == 2);
  CHECK(rank_of(f, {v, extra[0], extra[1]}, 3) == 3);
}

TEST_CASE("univariate roots over a prime field") {
  Field f(FieldConfig::prime_field());
  Rng rng(3);
  // -(x-1)^2 (x-5)(x+1): roots -1, 1, 5 and squarefree part of degree 3.
  univariate::Poly p{f.from_int(-5), f.from_int(6), f.from_int(-1)};
  p = univariate::mul(f, p, univariate::Poly{f.from_int(-1), f.zero(), f.one()});
  auto roots = univariate::roots(f, p, rng);
  REQUIRE(roots.size() == 3);
  CHECK(roots[0] == f.from_int(1));
  CHECK(roots[1] == f.from_int(5));
  CHECK(roots[2] == f.from_int(-1));
  // x^2 + 1 splits exactly when p = 1 mod 4, which holds for the default prime.
  CHECK(univariate::roots(f, univariate::Poly{f.one(), f.zero(), f.one()}, rng).size() == 2);
  univariate::Poly sq = univariate::mul(f, p, p);
  CHECK(univariate::degree(univariate::squarefree_part(f, sq)) == 3);
}

TEST_CASE("univariate roots over the rationals") {
  Field q(FieldConfig::rationals());
  Rng rng(3);
  univariate::Poly p{q.from_int(-2), q.one()};
  p = univariate::mul(q, p, p);
  auto roots = univariate::roots(q, p, rng);
  REQUIRE(roots.size() == 1);
  CHECK(roots[0] == q.from_int(2));
}
