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

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sympair/field.hpp"

namespace sympair {

/// Dense polynomial over a Field, ascending degree, no trailing zeros.
/// The zero polynomial has no coefficients and no degree.
class Poly {
 public:
  explicit Poly(FieldPtr field);
  Poly(FieldPtr field, std::vector<Elem> coeffs);
  /// From prime-field integers, e.g. {-1, 0, 1} for x^2 - 1.
  static Poly from_ints(FieldPtr field, std::initializer_list<std::int64_t> coeffs);
  static Poly monomial(FieldPtr field, Elem c, std::size_t degree);
  static Poly constant(FieldPtr field, Elem c) { return monomial(std::move(field), c, 0); }
  /// x^n - lambda.
  static Poly binomial(FieldPtr field, std::size_t n, Elem lambda);

  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }

  bool is_zero() const { return coeffs_.empty(); }
  /// std::nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const;
  Elem coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Field::zero(); }
  std::span<const Elem> coeffs() const { return coeffs_; }
  Elem leading() const;
  bool is_monic() const { return !is_zero() && leading() == Field::one(); }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly scaled(Elem c) const;
  /// Divides by the leading coefficient; zero stays zero.
  Poly monic() const;

  /// Coefficient indices, ascending degree.
  std::vector<std::uint32_t> indices() const;
  std::string to_string() const;

  friend bool operator==(const Poly& a, const Poly& b);

 private:
  void trim();

  FieldPtr field_;
  std::vector<Elem> coeffs_;
};

struct DivMod {
  Poly quotient;
  Poly remainder;
};

DivMod divmod(const Poly& a, const Poly& b);
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);
bool divides(const Poly& d, const Poly& f);

/// Horner evaluation in the polynomial's own field.
Elem eval(const Poly& f, Elem x);
/// Evaluates a polynomial over tower.small() at a point of tower.big().
Elem eval_embedded(const Poly& f, const Tower& tower, Elem x);

/// x^k f(1/x) with trailing zeros stripped. Throws on the zero polynomial.
Poly reciprocal(const Poly& f);

/// Coefficientwise embedding into tower.big(), and the inverse coercion
/// (throws Error when a coefficient lies outside the subfield).
Poly embed(const Poly& f, const Tower& tower);
Poly to_subfield(const Poly& f, const Tower& tower);

/// F[x] / <x^n - lambda>.
class QuotientRing {
 public:
  QuotientRing(FieldPtr field, std::size_t n, Elem lambda);

  std::size_t n() const { return n_; }
  Elem lambda() const { return lambda_; }
  const Field& field() const { return *field_; }

  /// Reduces f using x^n = lambda; result has degree < n.
  Poly reduce(const Poly& f) const;
  Poly mul(const Poly& a, const Poly& b) const { return reduce(a * b); }
  /// The element x^n - lambda generating the ideal.
  Poly modulus() const;

 private:
  FieldPtr field_;
  std::size_t n_;
  Elem lambda_;
};

}  // namespace sympair
