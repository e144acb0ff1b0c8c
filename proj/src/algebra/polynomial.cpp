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

#include "tanvar/algebra/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

#include "tanvar/error.hpp"

namespace tanvar {

namespace {

const MonomialOrder kCanonical = MonomialOrder::grevlex();

bool term_greater(const Term& a, const Term& b) {
  return kCanonical.compare(a.monomial, b.monomial) > 0;
}

}  // namespace

Ring::Ring(std::vector<std::string> names, Field field)
    : names_(std::move(names)), field_(std::move(field)) {
  if (names_.size() > kMaxVars) {
    throw Error(ErrorKind::DimensionMismatch,
                "registry of " + std::to_string(names_.size()) + " variables exceeds " +
                    std::to_string(kMaxVars));
  }
  for (std::size_t i = 0; i < names_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (names_[i] == names_[j]) throw Error(ErrorKind::InvalidSpec, "duplicate variable " + names_[i]);
    }
  }
}

std::optional<std::size_t> Ring::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

std::size_t Ring::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw Error(ErrorKind::UnknownVariable, std::string(name));
}

RingPtr make_ring(std::vector<std::string> names, const Field& field) {
  return std::make_shared<const Ring>(std::move(names), field);
}

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return;
  if (!a || !b || !(*a == *b)) throw Error(ErrorKind::FieldMismatch, "polynomials live in different rings");
}

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)) {
  const Field& f = ring_->field();
  std::sort(terms.begin(), terms.end(), term_greater);
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().monomial == t.monomial) {
      terms_.back().coeff = f.add(terms_.back().coeff, t.coeff);
      if (f.is_zero(terms_.back().coeff)) terms_.pop_back();
    } else if (!f.is_zero(t.coeff)) {
      terms_.push_back(std::move(t));
    }
  }
}

Polynomial Polynomial::constant(const RingPtr& ring, const Scalar& c) {
  return Polynomial(ring, {Term{Monomial{}, c}});
}

Polynomial Polynomial::constant(const RingPtr& ring, std::int64_t c) {
  return constant(ring, ring->field().from_int(c));
}

Polynomial Polynomial::variable(const RingPtr& ring, std::size_t index) {
  if (index >= ring->size()) throw Error(ErrorKind::UnknownVariable, "variable index out of range");
  return Polynomial(ring, {Term{Monomial::variable(index), ring->field().one()}});
}

Polynomial Polynomial::variable(const RingPtr& ring, std::string_view name) {
  return variable(ring, ring->index_of(name));
}

Polynomial Polynomial::monomial(const RingPtr& ring, const Monomial& m, const Scalar& c) {
  return Polynomial(ring, {Term{m, c}});
}

int Polynomial::total_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(terms_.front().monomial.degree());
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_) {
    if (t.monomial.degree() != terms_.front().monomial.degree()) return false;
  }
  return true;
}

unsigned Polynomial::degree_in(std::size_t i) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial[i]);
  return d;
}

Scalar Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_) {
    if (t.monomial == m) return t.coeff;
  }
  return field().zero();
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  require_same_ring(ring_, o.ring_);
  const Field& f = field();
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = kCanonical.compare(terms_[i].monomial, o.terms_[j].monomial);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      Scalar s = f.add(terms_[i].coeff, o.terms_[j].coeff);
      if (!f.is_zero(s)) r.terms_.push_back(Term{terms_[i].monomial, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back(Term{t.monomial, field().neg(t.coeff)});
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_same_ring(ring_, o.ring_);
  if (is_zero() || o.is_zero()) return Polynomial(ring_);
  const Field& f = field();
  std::unordered_map<Monomial, Scalar, MonomialHash> acc;
  acc.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) {
      Monomial m = a.monomial * b.monomial;
      Scalar c = f.mul(a.coeff, b.coeff);
      auto [it, inserted] = acc.try_emplace(m, c);
      if (!inserted) it->second = f.add(it->second, c);
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (!f.is_zero(c)) terms.push_back(Term{m, std::move(c)});
  }
  std::sort(terms.begin(), terms.end(), term_greater);
  Polynomial r(ring_);
  r.terms_ = std::move(terms);
  return r;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  if (field().is_zero(c)) return Polynomial(ring_);
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back(Term{t.monomial, field().mul(t.coeff, c)});
  return r;
}

Polynomial Polynomial::times_term(const Monomial& m, const Scalar& c) const {
  if (field().is_zero(c)) return Polynomial(ring_);
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back(Term{t.monomial * m, field().mul(t.coeff, c)});
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial r = constant(ring_, 1);
  Polynomial base = *this;
  while (e) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(field().inv(terms_.front().coeff));
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (!(*ring_ == *o.ring_)) return false;
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (!(terms_[i].monomial == o.terms_[i].monomial) || !(terms_[i].coeff == o.terms_[i].coeff)) {
      return false;
    }
  }
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  const Field& f = field();
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    std::string c = f.to_string(t.coeff);
    bool negative = !c.empty() && c[0] == '-';
    if (negative) c.erase(0, 1);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < ring_->size(); ++i) {
      unsigned e = t.monomial[i];
      if (!e) continue;
      if (!mono.empty()) mono += "*";
      mono += ring_->name(i);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += c;
    } else if (c == "1") {
      out += mono;
    } else {
      out += c + "*" + mono;
    }
  }
  return out;
}

Polynomial differentiate(const Polynomial& f, std::string_view var) {
  return differentiate(f, f.ring()->index_of(var));
}

Polynomial differentiate(const Polynomial& f, std::size_t var) {
  if (var >= f.ring()->size()) throw Error(ErrorKind::UnknownVariable, "variable index out of range");
  const Field& field = f.field();
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    unsigned e = t.monomial[var];
    if (e == 0) continue;
    Monomial m = t.monomial;
    m.set(var, e - 1);
    terms.push_back(Term{m, field.mul(t.coeff, field.from_int(e))});
  }
  return Polynomial(f.ring(), std::move(terms));
}

Scalar evaluate(const Polynomial& f, std::span<const Scalar> point) {
  const std::size_t n = f.ring()->size();
  if (point.size() != n) {
    throw Error(ErrorKind::DimensionMismatch, "evaluation point has " + std::to_string(point.size()) +
                                                  " coordinates, registry has " + std::to_string(n));
  }
  const Field& field = f.field();
  // Power tables keep evaluation linear in the number of terms.
  std::vector<std::vector<Scalar>> powers(n);
  for (std::size_t i = 0; i < n; ++i) {
    unsigned d = f.degree_in(i);
    powers[i].reserve(d + 1);
    powers[i].push_back(field.one());
    for (unsigned e = 1; e <= d; ++e) powers[i].push_back(field.mul(powers[i].back(), point[i]));
  }
  Scalar acc = field.zero();
  for (const auto& t : f.terms()) {
    Scalar v = t.coeff;
    for (std::size_t i = 0; i < n; ++i) {
      if (t.monomial[i]) v = field.mul(v, powers[i][t.monomial[i]]);
    }
    acc = field.add(acc, v);
  }
  return acc;
}

Polynomial substitute(const Polynomial& f, std::span<const Polynomial> images) {
  const std::size_t n = f.ring()->size();
  if (images.size() != n) throw Error(ErrorKind::DimensionMismatch, "substitution arity mismatch");
  if (n == 0) return Polynomial::constant(f.ring(), f.constant_term());
  const RingPtr& target = images[0].ring();
  for (const auto& g : images) require_same_ring(target, g.ring());
  if (!(target->field() == f.field())) throw Error(ErrorKind::FieldMismatch, "substitution across fields");
  std::vector<std::vector<Polynomial>> powers(n);
  for (std::size_t i = 0; i < n; ++i) {
    unsigned d = f.degree_in(i);
    powers[i].push_back(Polynomial::constant(target, 1));
    for (unsigned e = 1; e <= d; ++e) powers[i].push_back(powers[i].back() * images[i]);
  }
  Polynomial acc(target);
  for (const auto& t : f.terms()) {
    Polynomial v = Polynomial::constant(target, t.coeff);
    for (std::size_t i = 0; i < n; ++i) {
      if (t.monomial[i]) v = v * powers[i][t.monomial[i]];
    }
    acc += v;
  }
  return acc;
}

Polynomial rename_into(const Polynomial& f, const RingPtr& target) {
  if (!(target->field() == f.field())) throw Error(ErrorKind::FieldMismatch, "rename across fields");
  std::vector<std::size_t> map(f.ring()->size());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = target->index_of(f.ring()->name(i));
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m;
    for (std::size_t i = 0; i < map.size(); ++i) {
      if (t.monomial[i]) m.set(map[i], t.monomial[i]);
    }
    terms.push_back(Term{m, t.coeff});
  }
  return Polynomial(target, std::move(terms));
}

Polynomial restrict_into(const Polynomial& f, const RingPtr& target) {
  if (!(target->field() == f.field())) throw Error(ErrorKind::FieldMismatch, "restriction across fields");
  const Ring& src = *f.ring();
  std::vector<std::optional<std::size_t>> map(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) map[i] = target->find(src.name(i));
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m;
    for (std::size_t i = 0; i < src.size(); ++i) {
      if (!t.monomial[i]) continue;
      if (!map[i]) throw Error(ErrorKind::UnknownVariable, "variable " + src.name(i) + " not in target ring");
      m.set(*map[i], t.monomial[i]);
    }
    terms.push_back(Term{m, t.coeff});
  }
  return Polynomial(target, std::move(terms));
}

namespace {

class Parser {
 public:
  Parser(std::string_view src, const RingPtr& ring) : src_(src), ring_(ring) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::SyntaxError, what + " at offset " + std::to_string(pos_) + " in \"" +
                                            std::string(src_) + "\"");
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial acc(ring_);
    skip_ws();
    // A leading sign applies to the first term.
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    acc = negate ? -term() : term();
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (accept('*')) acc *= factor();
    return acc;
  }

  std::string digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    return std::string(src_.substr(start, pos_ - start));
  }

  Polynomial factor() {
    skip_ws();
    if (pos_ >= src_.size()) fail("unexpected end of input");
    char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      if (accept('^')) inner = inner.pow(exponent());
      return inner;
    }
    if (c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c))) {
      bool negative = false;
      if (c == '-' || c == '+') {
        negative = c == '-';
        ++pos_;
      }
      std::string num = digits();
      if (num.empty()) fail("expected digits");
      mpz_class n(num), d(1);
      if (accept('/')) {
        std::string den = digits();
        if (den.empty()) fail("expected denominator");
        d = mpz_class(den);
      }
      if (negative) n = -n;
      return Polynomial::constant(ring_, ring_->field().from_fraction(n, d));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
        ++pos_;
      }
      std::string_view name = src_.substr(start, pos_ - start);
      std::size_t index = ring_->index_of(name);
      unsigned e = 1;
      if (accept('^')) e = exponent();
      return Polynomial::monomial(ring_, Monomial::variable(index, e), ring_->field().one());
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  unsigned exponent() {
    std::string e = digits();
    if (e.empty()) fail("expected exponent");
    if (e.size() > 4) fail("exponent too large");
    return static_cast<unsigned>(std::stoul(e));
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  const RingPtr& ring_;
};

}  // namespace

Polynomial parse_poly(std::string_view src, const RingPtr& ring) { return Parser(src, ring).parse(); }

Polynomial parse_poly(std::string_view src, const std::vector<std::string>& registry,
                      const FieldConfig& field) {
  return parse_poly(src, make_ring(registry, Field(field)));
}

Polynomial determinant(const std::vector<std::vector<Polynomial>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Polynomial out(m[0][0].ring());
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<Polynomial>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Polynomial> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(m[r][k]);
      }
      minor.push_back(std::move(row));
    }
    Polynomial term = m[0][c] * determinant(minor);
    out = c % 2 == 0 ? out + term : out - term;
  }
  return out;
}

Polynomial relabel_into(const Polynomial& f, const RingPtr& target, const std::string& prefix) {
  if (f.ring()->size() == 0) return Polynomial::constant(target, f.constant_term());
  std::vector<Polynomial> images;
  for (const auto& name : f.ring()->names()) images.push_back(Polynomial::variable(target, prefix + name));
  return substitute(f, images);
}

}  // namespace tanvar
