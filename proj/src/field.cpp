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

#include "sympair/field.hpp"

#include <algorithm>
#include <sstream>

namespace sympair {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    const std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t totient(std::uint64_t n) {
  std::uint64_t result = n;
  for (std::uint64_t f : prime_factors(n)) result = result / f * (f - 1);
  return result;
}

std::int64_t mod_floor(std::int64_t a, std::int64_t modulus) {
  const std::int64_t r = a % modulus;
  return r < 0 ? r + modulus : r;
}

std::pair<std::uint32_t, std::uint32_t> split_prime_power(std::uint64_t q) {
  if (q < 2) throw Error("q = " + std::to_string(q) + " is not a prime power");
  const auto factors = prime_factors(q);
  if (factors.size() != 1) {
    throw Error("q = " + std::to_string(q) + " is not a prime power");
  }
  std::uint32_t m = 0;
  for (std::uint64_t t = q; t > 1; t /= factors[0]) ++m;
  return {static_cast<std::uint32_t>(factors[0]), m};
}

namespace {

using Coeffs = std::vector<std::uint32_t>;

// Remainder of a modulo monic b over GF(p); both little-endian.
Coeffs poly_mod(Coeffs a, const Coeffs& b, std::uint32_t p) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::uint32_t lead = a.back();
    if (lead != 0) {
      const std::size_t shift = a.size() - 1 - db;
      for (std::size_t i = 0; i <= db; ++i) {
        const std::uint64_t sub = static_cast<std::uint64_t>(lead) * b[i] % p;
        a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
      }
    }
    a.pop_back();
  }
  return a;
}

bool is_irreducible(const Coeffs& f, std::uint32_t p) {
  const std::size_t deg = f.size() - 1;
  // Trial division by every monic polynomial of degree 1..deg/2.
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t t = 0; t < count; ++t) {
      Coeffs g(d + 1, 0);
      std::uint64_t rest = t;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      g[d] = 1;
      const Coeffs r = poly_mod(f, g, p);
      if (std::all_of(r.begin(), r.end(), [](std::uint32_t c) { return c == 0; })) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

Field::Field(std::uint32_t p, std::uint32_t m, FieldMode mode) : p_(p), m_(m), size_(1), mode_(mode) {
  for (std::uint32_t i = 0; i < m; ++i) size_ *= p;
}

FieldPtr Field::make(std::uint32_t p, std::uint32_t m, FieldMode mode) {
  if (!is_prime(p)) throw Error("characteristic " + std::to_string(p) + " is not prime");
  if (p == 2) throw Error("characteristic 2 is not supported; constructions require odd q");
  if (m == 0) throw Error("extension degree must be positive");
  std::uint64_t size = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    size *= p;
    if (size > (1ull << 31)) throw Error("field too large");
  }
  if (mode == FieldMode::kTables && size > kTableLimit) {
    throw Error("GF(" + std::to_string(p) + "^" + std::to_string(m) +
                ") exceeds the table limit; use FieldMode::kReduction");
  }

  auto field = std::shared_ptr<Field>(new Field(p, m, mode));

  // Candidates in lexicographic order of (c_0, c_1, ..., c_{m-1}): c_0 is the
  // most significant digit of the scan counter.
  for (std::uint64_t t = 0; t < size; ++t) {
    Coeffs f(m + 1, 0);
    std::uint64_t rest = t;
    for (std::uint32_t i = 0; i < m; ++i) {
      f[m - 1 - i] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    f[m] = 1;
    if (is_irreducible(f, p)) {
      field->modulus_ = std::move(f);
      break;
    }
  }
  if (field->modulus_.empty()) throw InvariantError("no irreducible polynomial found");

  const std::uint64_t group = size - 1;
  const auto factors = prime_factors(group);
  // Generator search with reduction arithmetic; tables do not exist yet.
  const FieldMode saved = field->mode_;
  field->mode_ = FieldMode::kReduction;
  bool found = group == 1;
  if (found) field->generator_ = one();
  for (std::uint64_t a = 1; a < size && !found; ++a) {
    const Elem e{static_cast<std::uint32_t>(a)};
    bool primitive = true;
    for (std::uint64_t f : factors) {
      if (field->pow(e, static_cast<std::int64_t>(group / f)) == one()) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      field->generator_ = e;
      found = true;
    }
  }
  field->mode_ = saved;
  if (!found) throw InvariantError("no primitive element found");

  field->neg_.resize(size);
  for (std::uint64_t a = 0; a < size; ++a) {
    auto d = field->digits(Elem{static_cast<std::uint32_t>(a)});
    for (auto& c : d) c = (p - c) % p;
    field->neg_[a] = field->from_digits(d).v;
  }

  if (mode == FieldMode::kTables) {
    field->log_.assign(size, 0);
    field->exp_.assign(2 * group, 0);
    Elem x = one();
    for (std::uint64_t i = 0; i < group; ++i) {
      field->exp_[i] = x.v;
      field->exp_[i + group] = x.v;
      field->log_[x.v] = static_cast<std::uint32_t>(i);
      x = field->mul_reduce(x, field->generator_);
    }
    if (size <= kAddTableLimit && m > 1) {
      std::vector<std::uint32_t> table(size * size);
      for (std::uint64_t a = 0; a < size; ++a) {
        for (std::uint64_t b = 0; b < size; ++b) {
          table[a * size + b] =
              field->add(Elem{static_cast<std::uint32_t>(a)}, Elem{static_cast<std::uint32_t>(b)}).v;
        }
      }
      field->add_ = std::move(table);
    }
  }
  return field;
}

Elem Field::from_int(std::int64_t value) const {
  return Elem{static_cast<std::uint32_t>(mod_floor(value, p_))};
}

Elem Field::checked(Elem a) const {
  if (!contains(a)) {
    throw Error("element index " + std::to_string(a.v) + " outside " + describe());
  }
  return a;
}

Elem Field::add(Elem a, Elem b) const {
  if (m_ == 1) return Elem{(a.v + b.v) % p_};
  if (!add_.empty()) return Elem{add_[static_cast<std::size_t>(a.v) * size_ + b.v]};
  std::uint32_t result = 0;
  std::uint32_t place = 1;
  std::uint32_t x = a.v;
  std::uint32_t y = b.v;
  for (std::uint32_t i = 0; i < m_; ++i) {
    result += ((x % p_ + y % p_) % p_) * place;
    x /= p_;
    y /= p_;
    place *= p_;
  }
  return Elem{result};
}

Elem Field::neg(Elem a) const { return Elem{neg_[a.v]}; }

Elem Field::mul_reduce(Elem a, Elem b) const {
  if (m_ == 1) return Elem{static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.v) * b.v % p_)};
  const auto da = digits(a);
  const auto db = digits(b);
  Coeffs prod(2 * m_ - 1, 0);
  for (std::uint32_t i = 0; i < m_; ++i) {
    for (std::uint32_t j = 0; j < m_; ++j) {
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(da[i]) * db[j]) % p_);
    }
  }
  Coeffs r = poly_mod(std::move(prod), modulus_, p_);
  r.resize(m_, 0);
  return from_digits(r);
}

Elem Field::mul(Elem a, Elem b) const {
  if (a.v == 0 || b.v == 0) return zero();
  if (mode_ == FieldMode::kTables && !log_.empty()) {
    return Elem{exp_[log_[a.v] + log_[b.v]]};
  }
  return mul_reduce(a, b);
}

Elem Field::inv(Elem a) const {
  if (a.v == 0) throw Error("division by zero in " + describe());
  if (mode_ == FieldMode::kTables && !log_.empty()) {
    const std::uint32_t l = log_[a.v];
    return Elem{exp_[l == 0 ? 0 : (size_ - 1) - l]};
  }
  return pow(a, static_cast<std::int64_t>(size_) - 2);
}

Elem Field::pow(Elem a, std::int64_t e) const {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  if (a.v == 0) return e == 0 ? one() : zero();
  const std::int64_t group = static_cast<std::int64_t>(size_) - 1;
  if (mode_ == FieldMode::kTables && !log_.empty()) {
    const std::int64_t l = static_cast<std::int64_t>(log_[a.v]) * (e % group) % group;
    return Elem{exp_[static_cast<std::size_t>(l)]};
  }
  Elem result = one();
  Elem base = a;
  std::int64_t k = e % group;
  while (k > 0) {
    if (k & 1) result = mul_reduce(result, base);
    base = mul_reduce(base, base);
    k >>= 1;
  }
  return result;
}

std::uint32_t Field::log(Elem a) const {
  if (a.v == 0) throw Error("logarithm of zero");
  if (log_.empty()) throw Error("discrete logarithm requires table mode");
  return log_[a.v];
}

Elem Field::exp(std::int64_t e) const {
  const std::int64_t group = static_cast<std::int64_t>(size_) - 1;
  if (!exp_.empty()) return Elem{exp_[static_cast<std::size_t>(mod_floor(e, group))]};
  return pow(generator_, mod_floor(e, group));
}

std::uint64_t Field::order(Elem a) const {
  if (a.v == 0) throw Error("order of zero is undefined");
  std::uint64_t ord = size_ - 1;
  for (std::uint64_t f : prime_factors(size_ - 1)) {
    while (ord % f == 0 && pow(a, static_cast<std::int64_t>(ord / f)) == one()) ord /= f;
  }
  return ord;
}

std::vector<std::uint32_t> Field::digits(Elem a) const {
  std::vector<std::uint32_t> d(m_, 0);
  std::uint32_t x = a.v;
  for (std::uint32_t i = 0; i < m_; ++i) {
    d[i] = x % p_;
    x /= p_;
  }
  return d;
}

Elem Field::from_digits(const std::vector<std::uint32_t>& digits) const {
  std::uint32_t v = 0;
  for (std::size_t i = digits.size(); i-- > 0;) v = v * p_ + digits[i] % p_;
  return Elem{v};
}

bool Field::same_as(const Field& other) const {
  return this == &other || (p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_);
}

std::string Field::describe() const {
  std::ostringstream os;
  os << "GF(" << p_;
  if (m_ > 1) os << "^" << m_;
  os << ")";
  return os.str();
}

void require_same_field(const Field& a, const Field& b) {
  if (!a.same_as(b)) throw Error("operands from different fields: " + a.describe() + " vs " + b.describe());
}

Elem nth_root_of_unity(const Field& field, std::uint64_t n) {
  const std::uint64_t group = field.size() - 1;
  if (n == 0 || group % n != 0) {
    throw Error(std::to_string(n) + " does not divide |" + field.describe() + "*| = " + std::to_string(group));
  }
  return field.pow(field.generator(), static_cast<std::int64_t>(group / n));
}

FieldValue::FieldValue(FieldPtr field, Elem value) : field_(std::move(field)), value_(value) {
  if (!field_) throw Error("null field");
  field_->checked(value_);
}

FieldValue FieldValue::operator+(const FieldValue& o) const {
  require_same_field(*field_, *o.field_);
  return {field_, field_->add(value_, o.value_)};
}
FieldValue FieldValue::operator-(const FieldValue& o) const {
  require_same_field(*field_, *o.field_);
  return {field_, field_->sub(value_, o.value_)};
}
FieldValue FieldValue::operator*(const FieldValue& o) const {
  require_same_field(*field_, *o.field_);
  return {field_, field_->mul(value_, o.value_)};
}
FieldValue FieldValue::operator/(const FieldValue& o) const {
  require_same_field(*field_, *o.field_);
  return {field_, field_->div(value_, o.value_)};
}
FieldValue FieldValue::operator-() const { return {field_, field_->neg(value_)}; }
FieldValue FieldValue::inv() const { return {field_, field_->inv(value_)}; }
FieldValue FieldValue::pow(std::int64_t e) const { return {field_, field_->pow(value_, e)}; }

bool operator==(const FieldValue& a, const FieldValue& b) {
  return a.field_->same_as(*b.field_) && a.value_ == b.value_;
}

Tower::Tower(FieldPtr small, FieldPtr big) : small_(std::move(small)), big_(std::move(big)) {}

TowerPtr Tower::make(std::uint32_t p, std::uint32_t m) {
  auto small = Field::make(p, m);
  auto big = Field::make(p, 2 * m);
  auto tower = std::shared_ptr<Tower>(new Tower(small, big));

  // Smallest-index root of the small modulus inside the big field. The
  // modulus coefficients lie in the prime field, whose indices coincide.
  const auto& f = small->modulus();
  Elem root{0};
  bool found = false;
  for (std::uint32_t y = 0; y < big->size() && !found; ++y) {
    Elem acc = Field::zero();
    for (std::size_t i = f.size(); i-- > 0;) acc = big->add(big->mul(acc, Elem{y}), Elem{f[i]});
    if (acc == Field::zero()) {
      root = Elem{y};
      found = true;
    }
  }
  if (!found) throw InvariantError("small modulus has no root in " + big->describe());

  tower->embed_.resize(small->size());
  tower->section_.assign(big->size(), -1);
  for (std::uint32_t a = 0; a < small->size(); ++a) {
    const auto d = small->digits(Elem{a});
    Elem acc = Field::zero();
    for (std::size_t i = d.size(); i-- > 0;) acc = big->add(big->mul(acc, root), Elem{d[i]});
    tower->embed_[a] = acc;
    if (tower->section_[acc.v] != -1) throw InvariantError("subfield embedding is not injective");
    tower->section_[acc.v] = a;
  }
  return tower;
}

bool Tower::in_subfield(Elem big) const {
  big_->checked(big);
  return big_->pow(big, q()) == big;
}

Elem Tower::to_subfield(Elem big) const {
  big_->checked(big);
  const std::int64_t s = section_[big.v];
  if (s < 0) {
    throw Error("element " + std::to_string(big.v) + " of " + big_->describe() + " is not in " +
                small_->describe());
  }
  return Elem{static_cast<std::uint32_t>(s)};
}

}  // namespace sympair
