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
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sympair/cyclotomic.hpp"
#include "sympair/field.hpp"
#include "sympair/poly.hpp"

namespace sympair {

/// A length-n vector over GF(q), entries by element index.
using Word = std::vector<Elem>;

/// λ-constacyclic code <g> in GF(q)[x]/<x^n - λ>.
///
/// When n·ord(λ) divides q^2 - 1 the code also carries a root base xi, a
/// primitive rn-th root of unity in GF(q^2) with xi^n = λ, and the defining
/// set T of g with respect to it. The distance engines need both.
class ConstacyclicCode {
 public:
  /// Throws if gcd(n, q) != 1, lambda is zero, or g is not a monic divisor of
  /// x^n - lambda. A supplied xi must be a primitive rn-th root with xi^n = λ;
  /// otherwise the smallest admissible power of the default root is used.
  static ConstacyclicCode make(TowerPtr tower, std::size_t n, Elem lambda, Poly g,
                               std::optional<Elem> xi = std::nullopt);

  const Tower& tower() const { return *tower_; }
  const TowerPtr& tower_ptr() const { return tower_; }
  const Field& field() const { return tower_->small(); }
  std::uint32_t q() const { return tower_->q(); }
  std::size_t length() const { return n_; }
  std::size_t dimension() const { return k_; }
  Elem lambda() const { return lambda_; }
  /// Multiplicative order r of lambda.
  std::int64_t shift_order() const { return r_; }
  const Poly& generator() const { return g_; }
  const Poly& check() const { return h_; }
  const std::optional<Elem>& root_base() const { return xi_; }
  const std::optional<DefiningSet>& defining_set() const { return T_; }
  bool is_cyclic() const { return lambda_ == Field::one(); }

  /// k x n matrix with rows x^i g(x), i < k.
  std::vector<Word> generator_matrix() const;
  /// message(x) · g(x). Throws on length mismatch.
  Word encode(std::span<const Elem> message) const;
  /// c(x) mod g(x) == 0. Throws on length mismatch.
  bool contains(std::span<const Elem> word) const;
  /// (λ c_{n-1}, c_0, ..., c_{n-2}).
  Word shift(std::span<const Elem> word) const;

  Poly to_poly(std::span<const Elem> word) const;
  Word to_word(const Poly& p) const;

 private:
  ConstacyclicCode(TowerPtr tower, std::size_t n, Elem lambda, Poly g, Poly h);

  TowerPtr tower_;
  std::size_t n_ = 0;
  std::size_t k_ = 0;
  Elem lambda_{1};
  std::int64_t r_ = 1;
  Poly g_;
  Poly h_;
  std::optional<Elem> xi_;
  std::optional<DefiningSet> T_;
};

/// λ^{-1}-constacyclic dual with monic generator h_R / h(0).
/// The root base chosen when none is supplied: base^j for the smallest j
/// coprime to rn with (base^j)^n = lambda, base = nth_root_of_unity(GF(q^2), rn).
/// Empty when rn does not divide q^2 - 1.
std::optional<Elem> default_root_base(const Tower& tower, std::size_t n, Elem lambda);

ConstacyclicCode dual(const ConstacyclicCode& code);

/// Sum x_i y_i over GF(q).
Elem inner_product(const Field& field, std::span<const Elem> x, std::span<const Elem> y);

/// Symbol-pair read vector ((x_0,x_1), ..., (x_{n-1},x_0)). Requires n >= 2.
std::vector<std::pair<Elem, Elem>> pi_expand(std::span<const Elem> word);
std::size_t hamming_weight(std::span<const Elem> word);
std::size_t hamming_distance(std::span<const Elem> x, std::span<const Elem> y);
/// |{i : (x_i, x_{i+1}) != (0, 0)}|.
std::size_t pair_weight(std::span<const Elem> word);
/// Hamming distance of the read vectors.
std::size_t pair_distance(std::span<const Elem> x, std::span<const Elem> y);
std::vector<std::size_t> support(std::span<const Elem> word);

}  // namespace sympair
