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

#include "sympair/code.hpp"

#include <numeric>

namespace sympair {

ConstacyclicCode::ConstacyclicCode(TowerPtr tower, std::size_t n, Elem lambda, Poly g, Poly h)
    : tower_(std::move(tower)), n_(n), lambda_(lambda), g_(std::move(g)), h_(std::move(h)) {}

std::optional<Elem> default_root_base(const Tower& tower, std::size_t n, Elem lambda) {
  const Field& big = tower.big();
  const std::uint64_t rn = tower.small().order(lambda) * n;
  if ((big.size() - 1) % rn != 0) return std::nullopt;
  const Elem lambda_big = tower.embed(lambda);
  const Elem base = nth_root_of_unity(big, rn);
  for (std::uint64_t j = 1; j <= rn; ++j) {
    if (std::gcd(j, rn) != 1) continue;
    const Elem cand = big.pow(base, static_cast<std::int64_t>(j));
    if (big.pow(cand, static_cast<std::int64_t>(n)) == lambda_big) return cand;
  }
  return std::nullopt;
}

ConstacyclicCode ConstacyclicCode::make(TowerPtr tower, std::size_t n, Elem lambda, Poly g,
                                        std::optional<Elem> xi) {
  if (!tower) throw Error("code without a field tower");
  if (n == 0) throw Error("code length must be positive");
  const Field& small = tower->small();
  const Field& big = tower->big();
  if (std::gcd<std::uint64_t>(n, tower->q()) != 1) {
    throw Error("gcd(n, q) != 1 for n = " + std::to_string(n) + ", q = " + std::to_string(tower->q()));
  }
  small.checked(lambda);
  if (lambda == Field::zero()) throw Error("shift constant must be nonzero");
  require_same_field(g.field(), small);
  if (!g.is_monic()) throw Error("generator polynomial must be monic");
  const DivMod qr = divmod(Poly::binomial(tower->small_ptr(), n, lambda), g);
  if (!qr.remainder.is_zero()) throw Error("generator does not divide x^n - lambda");

  ConstacyclicCode code(tower, n, lambda, g, qr.quotient);
  code.k_ = n - *g.degree();
  code.r_ = static_cast<std::int64_t>(small.order(lambda));

  const std::uint64_t rn = static_cast<std::uint64_t>(code.r_) * n;
  const Elem lambda_big = tower->embed(lambda);
  if ((big.size() - 1) % rn == 0) {
    if (xi) {
      big.checked(*xi);
      if (*xi == Field::zero() || big.order(*xi) != rn || big.pow(*xi, static_cast<std::int64_t>(n)) != lambda_big) {
        throw Error("root base must be a primitive rn-th root of unity with xi^n = lambda");
      }
      code.xi_ = *xi;
    } else {
      code.xi_ = default_root_base(*tower, n, lambda);
      if (!code.xi_) throw InvariantError("no primitive rn-th root of unity maps to lambda");
    }
    code.T_ = defining_set_from_generator(*tower, g, *code.xi_, static_cast<std::int64_t>(n), code.r_);
  } else if (xi) {
    throw Error("rn does not divide q^2 - 1; a root base cannot be supplied");
  }
  return code;
}

std::vector<Word> ConstacyclicCode::generator_matrix() const {
  std::vector<Word> rows;
  rows.reserve(k_);
  const auto gc = g_.coeffs();
  for (std::size_t i = 0; i < k_; ++i) {
    Word row(n_, Field::zero());
    for (std::size_t j = 0; j < gc.size(); ++j) row[i + j] = gc[j];
    rows.push_back(std::move(row));
  }
  return rows;
}

Word ConstacyclicCode::encode(std::span<const Elem> message) const {
  if (message.size() != k_) {
    throw Error("message length " + std::to_string(message.size()) + " != dimension " + std::to_string(k_));
  }
  Poly m(tower_->small_ptr(), Word(message.begin(), message.end()));
  return to_word(m * g_);
}

bool ConstacyclicCode::contains(std::span<const Elem> word) const {
  return divmod(to_poly(word), g_).remainder.is_zero();
}

Word ConstacyclicCode::shift(std::span<const Elem> word) const {
  if (word.size() != n_) throw Error("word length mismatch");
  Word out(n_);
  out[0] = field().mul(lambda_, word[n_ - 1]);
  for (std::size_t i = 1; i < n_; ++i) out[i] = word[i - 1];
  return out;
}

Poly ConstacyclicCode::to_poly(std::span<const Elem> word) const {
  if (word.size() != n_) {
    throw Error("word length " + std::to_string(word.size()) + " != code length " + std::to_string(n_));
  }
  return Poly(tower_->small_ptr(), Word(word.begin(), word.end()));
}

Word ConstacyclicCode::to_word(const Poly& p) const {
  require_same_field(p.field(), field());
  const Poly reduced = QuotientRing(tower_->small_ptr(), n_, lambda_).reduce(p);
  Word out(n_, Field::zero());
  for (std::size_t i = 0; i < reduced.coeffs().size(); ++i) out[i] = reduced.coeffs()[i];
  return out;
}

ConstacyclicCode dual(const ConstacyclicCode& code) {
  const Field& f = code.field();
  const Elem lambda_inv = f.inv(code.lambda());
  const Poly g = reciprocal(code.check()).monic();
  std::optional<Elem> xi;
  if (code.root_base()) xi = code.tower().big().inv(*code.root_base());
  return ConstacyclicCode::make(code.tower_ptr(), code.length(), lambda_inv, g, xi);
}

Elem inner_product(const Field& field, std::span<const Elem> x, std::span<const Elem> y) {
  if (x.size() != y.size()) throw Error("inner product of vectors with different lengths");
  Elem acc = Field::zero();
  for (std::size_t i = 0; i < x.size(); ++i) acc = field.add(acc, field.mul(x[i], y[i]));
  return acc;
}

std::vector<std::pair<Elem, Elem>> pi_expand(std::span<const Elem> word) {
  const std::size_t n = word.size();
  if (n < 2) throw Error("symbol-pair read vector needs length >= 2");
  std::vector<std::pair<Elem, Elem>> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(word[i], word[(i + 1) % n]);
  return out;
}

std::size_t hamming_weight(std::span<const Elem> word) {
  std::size_t w = 0;
  for (Elem e : word) w += e != Field::zero();
  return w;
}

std::size_t hamming_distance(std::span<const Elem> x, std::span<const Elem> y) {
  if (x.size() != y.size()) throw Error("length mismatch");
  std::size_t d = 0;
  for (std::size_t i = 0; i < x.size(); ++i) d += x[i] != y[i];
  return d;
}

std::size_t pair_weight(std::span<const Elem> word) {
  const std::size_t n = word.size();
  if (n < 2) throw Error("pair weight needs length >= 2");
  std::size_t w = 0;
  for (std::size_t i = 0; i < n; ++i) {
    w += word[i] != Field::zero() || word[(i + 1) % n] != Field::zero();
  }
  return w;
}

std::size_t pair_distance(std::span<const Elem> x, std::span<const Elem> y) {
  if (x.size() != y.size()) throw Error("length mismatch");
  const auto px = pi_expand(x);
  const auto py = pi_expand(y);
  std::size_t d = 0;
  for (std::size_t i = 0; i < px.size(); ++i) d += px[i] != py[i];
  return d;
}

std::vector<std::size_t> support(std::span<const Elem> word) {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word[i] != Field::zero()) s.push_back(i);
  }
  return s;
}

}  // namespace sympair
