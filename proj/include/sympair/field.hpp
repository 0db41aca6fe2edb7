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

#pragma once

/// @file field.hpp
/// Exact arithmetic in GF(p^m) for odd primes p, plus the two-level tower
/// GF(q) ⊂ GF(q^2) used to hold roots of unity of the codes in this library.
///
/// Elements are encoded by their index: the little-endian base-p digits of
/// the index are the coefficients of the element in the polynomial basis
/// 1, x, ..., x^{m-1} modulo the field's defining polynomial. Index 0 is zero
/// and index 1 is one in every field, and the prime subfield occupies the
/// indices [0, p).

#include <compare>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace sympair {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an internal algebraic invariant fails (e.g. a product of
/// conjugate linear factors does not descend to the subfield).
class InvariantError : public Error {
 public:
  using Error::Error;
};

/// Field element by index. Carries no field pointer; operations go through
/// the owning Field.
struct Elem {
  std::uint32_t v = 0;

  friend constexpr auto operator<=>(Elem, Elem) = default;
};

enum class FieldMode {
  kTables,     ///< log/exp tables (p^m <= 2^20)
  kReduction,  ///< schoolbook multiplication modulo the defining polynomial
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field {
 public:
  static constexpr std::uint64_t kTableLimit = 1u << 20;

  /// Builds GF(p^m). The modulus is the lexicographically smallest monic
  /// irreducible of degree m (coefficient vectors compared from the constant
  /// term upwards) and the generator the smallest-index primitive element.
  static FieldPtr make(std::uint32_t p, std::uint32_t m,
                       FieldMode mode = FieldMode::kTables);

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return m_; }
  std::uint32_t size() const { return size_; }
  FieldMode mode() const { return mode_; }
  /// Coefficients of the defining polynomial, constant term first, length m+1.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  Elem generator() const { return generator_; }

  static constexpr Elem zero() { return Elem{0}; }
  static constexpr Elem one() { return Elem{1}; }
  /// Image of an integer in the prime subfield.
  Elem from_int(std::int64_t value) const;

  bool contains(Elem a) const { return a.v < size_; }
  /// Throws Error unless a belongs to this field.
  Elem checked(Elem a) const;

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  /// a^e; negative exponents require a != 0. 0^0 = 1.
  Elem pow(Elem a, std::int64_t e) const;

  /// Discrete logarithm base generator(). Requires table mode and a != 0.
  std::uint32_t log(Elem a) const;
  /// generator()^e.
  Elem exp(std::int64_t e) const;
  /// Multiplicative order of a nonzero element.
  std::uint64_t order(Elem a) const;

  /// Base-p digits of an element, length m.
  std::vector<std::uint32_t> digits(Elem a) const;
  Elem from_digits(const std::vector<std::uint32_t>& digits) const;

  /// Same p, m and modulus: element indices are interchangeable.
  bool same_as(const Field& other) const;

  std::string describe() const;

 private:
  Field(std::uint32_t p, std::uint32_t m, FieldMode mode);

  Elem mul_reduce(Elem a, Elem b) const;

  std::uint32_t p_;
  std::uint32_t m_;
  std::uint32_t size_;
  FieldMode mode_;
  std::vector<std::uint32_t> modulus_;
  Elem generator_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> exp_;  // length 2(size-1)
  std::vector<std::uint32_t> add_;  // size^2 when size <= kAddTableLimit
  std::vector<std::uint32_t> neg_;
  static constexpr std::uint32_t kAddTableLimit = 1024;
};

/// Throws Error unless both fields share element encodings.
void require_same_field(const Field& a, const Field& b);

/// primitive n-th root of unity: generator^((size-1)/n).
Elem nth_root_of_unity(const Field& field, std::uint64_t n);

/// A field element bound to its field; arithmetic across fields throws.
class FieldValue {
 public:
  FieldValue(FieldPtr field, Elem value);

  const FieldPtr& field() const { return field_; }
  Elem elem() const { return value_; }
  std::uint32_t index() const { return value_.v; }

  FieldValue operator+(const FieldValue& o) const;
  FieldValue operator-(const FieldValue& o) const;
  FieldValue operator*(const FieldValue& o) const;
  FieldValue operator/(const FieldValue& o) const;
  FieldValue operator-() const;
  FieldValue inv() const;
  FieldValue pow(std::int64_t e) const;

  friend bool operator==(const FieldValue& a, const FieldValue& b);

 private:
  FieldPtr field_;
  Elem value_;
};

class Tower;
using TowerPtr = std::shared_ptr<const Tower>;

/// The tower GF(q) ⊂ GF(q^2), q = p^m. The small field is embedded by
/// sending x to the smallest-index root (in the big field) of the small
/// field's defining polynomial.
class Tower {
 public:
  static TowerPtr make(std::uint32_t p, std::uint32_t m);

  const Field& small() const { return *small_; }
  const Field& big() const { return *big_; }
  const FieldPtr& small_ptr() const { return small_; }
  const FieldPtr& big_ptr() const { return big_; }
  std::uint32_t q() const { return small_->size(); }

  Elem embed(Elem small) const { return embed_[small.v]; }
  /// x lies in the embedded GF(q) iff x^q = x.
  bool in_subfield(Elem big) const;
  /// Inverse of embed on its image; throws Error elsewhere.
  Elem to_subfield(Elem big) const;

 private:
  Tower(FieldPtr small, FieldPtr big);

  FieldPtr small_;
  FieldPtr big_;
  std::vector<Elem> embed_;
  std::vector<std::int64_t> section_;  // -1 off the image
};

/// Small integer helpers shared by the modules.
bool is_prime(std::uint64_t n);
std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
/// Euler's totient.
std::uint64_t totient(std::uint64_t n);
/// Normalizes a residue into [0, modulus).
std::int64_t mod_floor(std::int64_t a, std::int64_t modulus);

/// Parses a prime power q = p^m (p odd or even); returns {p, m} or throws.
std::pair<std::uint32_t, std::uint32_t> split_prime_power(std::uint64_t q);

}  // namespace sympair
