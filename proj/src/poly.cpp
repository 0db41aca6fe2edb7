/*
 * Copyright 2026 The sympair Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "sympair/poly.hpp"

#include <algorithm>
#include <sstream>

namespace sympair {

Poly::Poly(FieldPtr field) : field_(std::move(field)) {
  if (!field_) throw Error("polynomial without a field");
}

Poly::Poly(FieldPtr field, std::vector<Elem> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  if (!field_) throw Error("polynomial without a field");
  for (Elem c : coeffs_) field_->checked(c);
  trim();
}

Poly Poly::from_ints(FieldPtr field, std::initializer_list<std::int64_t> coeffs) {
  std::vector<Elem> c;
  c.reserve(coeffs.size());
  for (std::int64_t v : coeffs) c.push_back(field->from_int(v));
  return Poly(std::move(field), std::move(c));
}

Poly Poly::monomial(FieldPtr field, Elem c, std::size_t degree) {
  std::vector<Elem> coeffs(degree + 1, Field::zero());
  coeffs[degree] = c;
  return Poly(std::move(field), std::move(coeffs));
}

Poly Poly::binomial(FieldPtr field, std::size_t n, Elem lambda) {
  std::vector<Elem> coeffs(n + 1, Field::zero());
  coeffs[n] = Field::one();
  coeffs[0] = field->add(coeffs[0], field->neg(lambda));
  return Poly(std::move(field), std::move(coeffs));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == Field::zero()) coeffs_.pop_back();
}

std::optional<std::size_t> Poly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

Elem Poly::leading() const {
  if (coeffs_.empty()) throw Error("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Poly Poly::operator+(const Poly& o) const {
  require_same_field(*field_, *o.field_);
  std::vector<Elem> c(std::max(coeffs_.size(), o.coeffs_.size()), Field::zero());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = field_->add(coeff(i), o.coeff(i));
  return Poly(field_, std::move(c));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
  std::vector<Elem> c(coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = field_->neg(coeffs_[i]);
  return Poly(field_, std::move(c));
}

Poly Poly::operator*(const Poly& o) const {
  require_same_field(*field_, *o.field_);
  if (is_zero() || o.is_zero()) return Poly(field_);
  std::vector<Elem> c(coeffs_.size() + o.coeffs_.size() - 1, Field::zero());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == Field::zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
      c[i + j] = field_->add(c[i + j], field_->mul(coeffs_[i], o.coeffs_[j]));
    }
  }
  return Poly(field_, std::move(c));
}

Poly Poly::scaled(Elem s) const {
  std::vector<Elem> c(coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = field_->mul(coeffs_[i], s);
  return Poly(field_, std::move(c));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(field_->inv(leading()));
}

std::vector<std::uint32_t> Poly::indices() const {
  std::vector<std::uint32_t> out;
  out.reserve(coeffs_.size());
  for (Elem c : coeffs_) out.push_back(c.v);
  return out;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i] == Field::zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (coeffs_[i] != Field::one() || i == 0) os << "[" << coeffs_[i].v << "]";
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

bool operator==(const Poly& a, const Poly& b) {
  return a.field_->same_as(*b.field_) && a.coeffs_ == b.coeffs_;
}

DivMod divmod(const Poly& a, const Poly& b) {
  require_same_field(a.field(), b.field());
  if (b.is_zero()) throw Error("polynomial division by zero");
  const Field& f = a.field();
  std::vector<Elem> rem(a.coeffs().begin(), a.coeffs().end());
  const std::size_t db = *b.degree();
  if (rem.size() <= db) return {Poly(a.field_ptr()), a};
  std::vector<Elem> quo(rem.size() - db, Field::zero());
  const Elem lead_inv = f.inv(b.leading());
  for (std::size_t i = rem.size(); i-- > db;) {
    const Elem c = f.mul(rem[i], lead_inv);
    quo[i - db] = c;
    if (c == Field::zero()) continue;
    for (std::size_t j = 0; j <= db; ++j) {
      rem[i - db + j] = f.sub(rem[i - db + j], f.mul(c, b.coeff(j)));
    }
  }
  rem.resize(db);
  return {Poly(a.field_ptr(), std::move(quo)), Poly(a.field_ptr(), std::move(rem))};
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a;
  Poly y = b;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

bool divides(const Poly& d, const Poly& f) { return divmod(f, d).remainder.is_zero(); }

Elem eval(const Poly& f, Elem x) {
  const Field& field = f.field();
  field.checked(x);
  Elem acc = Field::zero();
  const auto c = f.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) acc = field.add(field.mul(acc, x), c[i]);
  return acc;
}

Elem eval_embedded(const Poly& f, const Tower& tower, Elem x) {
  require_same_field(f.field(), tower.small());
  const Field& big = tower.big();
  big.checked(x);
  Elem acc = Field::zero();
  const auto c = f.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) acc = big.add(big.mul(acc, x), tower.embed(c[i]));
  return acc;
}

Poly reciprocal(const Poly& f) {
  if (f.is_zero()) throw Error("reciprocal of the zero polynomial");
  std::vector<Elem> c(f.coeffs().rbegin(), f.coeffs().rend());
  return Poly(f.field_ptr(), std::move(c));
}

Poly embed(const Poly& f, const Tower& tower) {
  require_same_field(f.field(), tower.small());
  std::vector<Elem> c;
  c.reserve(f.coeffs().size());
  for (Elem e : f.coeffs()) c.push_back(tower.embed(e));
  return Poly(tower.big_ptr(), std::move(c));
}

Poly to_subfield(const Poly& f, const Tower& tower) {
  require_same_field(f.field(), tower.big());
  std::vector<Elem> c;
  c.reserve(f.coeffs().size());
  for (Elem e : f.coeffs()) c.push_back(tower.to_subfield(e));
  return Poly(tower.small_ptr(), std::move(c));
}

QuotientRing::QuotientRing(FieldPtr field, std::size_t n, Elem lambda)
    : field_(std::move(field)), n_(n), lambda_(lambda) {
  if (n_ == 0) throw Error("quotient ring length must be positive");
  field_->checked(lambda_);
  if (lambda_ == Field::zero()) throw Error("shift constant must be nonzero");
}

Poly QuotientRing::reduce(const Poly& f) const {
  require_same_field(f.field(), *field_);
  const auto c = f.coeffs();
  if (c.size() <= n_) return f;
  std::vector<Elem> out(n_, Field::zero());
  // x^{jn + i} = lambda^j x^i.
  Elem factor = Field::one();
  for (std::size_t block = 0; block * n_ < c.size(); ++block) {
    for (std::size_t i = 0; i < n_ && block * n_ + i < c.size(); ++i) {
      out[i] = field_->add(out[i], field_->mul(factor, c[block * n_ + i]));
    }
    factor = field_->mul(factor, lambda_);
  }
  return Poly(field_, std::move(out));
}

Poly QuotientRing::modulus() const { return Poly::binomial(field_, n_, lambda_); }

}  // namespace sympair
