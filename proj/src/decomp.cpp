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

#include "sympair/decomp.hpp"

#include <algorithm>
#include <string>

#include "sympair/linalg.hpp"

namespace sympair {

std::vector<Poly> phi_map(const FieldPtr& field, std::size_t n, std::span<const Elem> roots, const Poly& p) {
  const Field& f = *field;
  const std::size_t m = roots.size();
  if (m == 0 || (f.size() - 1) % m != 0) {
    throw Error("phi_map: m = " + std::to_string(m) + " does not divide q - 1 = " + std::to_string(f.size() - 1));
  }
  require_same_field(p.field(), f);
  std::vector<Elem> seen;
  for (Elem z : roots) {
    f.checked(z);
    if (z == Field::zero() || f.pow(z, static_cast<std::int64_t>(m)) != Field::one()) {
      throw Error("phi_map: root is not an m-th root of unity");
    }
    if (std::find(seen.begin(), seen.end(), z) != seen.end()) throw Error("phi_map: repeated root");
    seen.push_back(z);
  }
  if (p.degree() && *p.degree() >= m * n) throw Error("phi_map: deg p must be below m n");
  std::vector<Poly> out;
  out.reserve(m);
  for (Elem z : roots) out.push_back(QuotientRing(field, n, z).reduce(p));
  return out;
}

namespace {

Word concat(std::span<const Elem> a, std::span<const Elem> b) {
  Word w(a.begin(), a.end());
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

Word negated(const Field& f, std::span<const Elem> a) {
  Word w(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) w[i] = f.neg(a[i]);
  return w;
}

std::vector<Word> joined_rows(const ConstacyclicCode& c1, const ConstacyclicCode& c2) {
  const Field& f = c1.field();
  std::vector<Word> rows;
  for (const auto& u : c1.generator_matrix()) rows.push_back(concat(u, u));
  for (const auto& v : c2.generator_matrix()) rows.push_back(concat(v, negated(f, v)));
  return rows;
}

}  // namespace

DecompositionPair decompose(const ConstacyclicCode& parent) {
  const Field& f = parent.field();
  if (f.characteristic() == 2) throw Error("decompose needs odd q");
  if (!parent.is_cyclic()) throw Error("decompose needs a cyclic parent code");
  if (parent.length() % 2 != 0) throw Error("decompose needs even length");
  const std::size_t n = parent.length() / 2;
  const FieldPtr& fp = parent.tower().small_ptr();
  const Elem minus_one = f.neg(Field::one());

  const Poly g1 = gcd(parent.generator(), Poly::binomial(fp, n, Field::one()));
  const Poly g2 = gcd(parent.generator(), Poly::binomial(fp, n, minus_one));
  if (!(g1 * g2 == parent.generator())) throw InvariantError("g1 g2 != g for a cyclic code of odd characteristic");

  DecompositionPair pair{parent, ConstacyclicCode::make(parent.tower_ptr(), n, Field::one(), g1),
                         ConstacyclicCode::make(parent.tower_ptr(), n, minus_one, g2)};
  if (pair.c1.dimension() + pair.c2.dimension() != parent.dimension()) {
    throw InvariantError("component dimensions do not add up");
  }
  for (const auto& row : joined_rows(pair.c1, pair.c2)) {
    if (!parent.contains(row)) throw InvariantError("(u + v, u - v) outside the parent code");
  }
  return pair;
}

ConstacyclicCode join(const ConstacyclicCode& c1, const ConstacyclicCode& c2) {
  if (c1.length() != c2.length()) throw Error("join: component lengths differ");
  if (!c1.field().same_as(c2.field())) throw Error("join: components over different fields");
  const Field& f = c1.field();
  if (f.characteristic() == 2) throw Error("join needs odd q");
  if (!c1.is_cyclic() || c2.lambda() != f.neg(Field::one())) {
    throw Error("join needs a cyclic and a negacyclic component");
  }
  const std::size_t n2 = 2 * c1.length();
  const FieldPtr& fp = c1.tower().small_ptr();
  Poly g = Poly::binomial(fp, n2, Field::one());
  const auto rows = joined_rows(c1, c2);
  for (const auto& row : rows) g = gcd(g, Poly(fp, row));
  ConstacyclicCode code = ConstacyclicCode::make(c1.tower_ptr(), n2, Field::one(), g.monic());
  if (code.dimension() != c1.dimension() + c2.dimension()) {
    throw InvariantError("joined code has dimension " + std::to_string(code.dimension()) + ", expected " +
                         std::to_string(c1.dimension() + c2.dimension()));
  }
  return code;
}

std::pair<Word, Word> split_word(std::span<const Elem> word, const Field& field) {
  if (word.size() % 2 != 0) throw Error("split_word needs even length");
  const std::size_t n = word.size() / 2;
  const Elem half = field.inv(field.from_int(2));
  Word u(n), v(n);
  for (std::size_t i = 0; i < n; ++i) {
    u[i] = field.mul(half, field.add(word[i], word[n + i]));
    v[i] = field.mul(half, field.sub(word[i], word[n + i]));
  }
  return {u, v};
}

bool same_code(const ConstacyclicCode& a, const ConstacyclicCode& b) {
  if (a.length() != b.length() || !a.field().same_as(b.field())) return false;
  if (a.dimension() != b.dimension()) return false;
  const Echelon ea = row_reduce(a.field(), a.generator_matrix());
  const Echelon eb = row_reduce(b.field(), b.generator_matrix());
  return ea.pivots == eb.pivots && ea.rows == eb.rows;
}

bool is_subcode(const ConstacyclicCode& a, const ConstacyclicCode& b) {
  if (a.length() != b.length() || !a.field().same_as(b.field())) return false;
  for (const auto& row : a.generator_matrix()) {
    if (!b.contains(row)) return false;
  }
  return true;
}

namespace {

void require_dual_setting(const Tower& tower, Elem xi) {
  const std::uint64_t q = tower.q();
  if (q % 2 == 0 || q <= 3) throw Error("the dual generator b(x) needs odd q > 3 (q = " + std::to_string(q) + ")");
  tower.big().checked(xi);
  if (xi == Field::zero() || tower.big().order(xi) != 2 * q + 2) {
    throw Error("xi must be a primitive (2q + 2)-th root of unity");
  }
}

Elem beta_of(const Tower& tower, Elem xi) {
  const Field& big = tower.big();
  return tower.to_subfield(big.add(big.pow(xi, 2), big.pow(xi, -2)));
}

}  // namespace

Poly dual_generator_closed_form(const Tower& tower, Elem xi) {
  require_dual_setting(tower, xi);
  const Field& big = tower.big();
  const std::int64_t q = tower.q();
  const Elem denom = big.inv(big.sub(big.pow(xi, 4), Field::one()));
  std::vector<Elem> b(static_cast<std::size_t>(q - 2), Field::zero());
  for (std::int64_t k = 0; k <= q - 3; k += 2) {
    const Elem num = big.sub(big.pow(xi, k + 4), big.pow(xi, -k));
    const Elem value = big.mul(num, denom);
    if (!tower.in_subfield(value)) throw Error("closed-form coefficient b_" + std::to_string(k) + " outside GF(q)");
    b[static_cast<std::size_t>(k)] = tower.to_subfield(value);
  }
  return Poly(tower.small_ptr(), std::move(b));
}

Poly dual_generator_recurrence(const Tower& tower, Elem xi) {
  require_dual_setting(tower, xi);
  const Field& f = tower.small();
  const std::size_t len = tower.q() - 2;
  const Elem beta = beta_of(tower, xi);
  std::vector<Elem> b(len, Field::zero());
  const Elem seed[4] = {Field::one(), Field::zero(), beta, Field::zero()};
  for (std::size_t k = 0; k < len; ++k) {
    b[k] = k < 4 ? seed[k] : f.sub(f.mul(beta, b[k - 2]), b[k - 4]);
  }
  return Poly(tower.small_ptr(), std::move(b));
}

Poly dual_generator_division(const Tower& tower, Elem xi) {
  require_dual_setting(tower, xi);
  const Field& f = tower.small();
  const FieldPtr& fp = tower.small_ptr();
  const Elem beta = beta_of(tower, xi);
  const Poly num = Poly::binomial(fp, tower.q() + 1, f.neg(Field::one()));
  const Poly den(fp, {Field::one(), Field::zero(), f.neg(beta), Field::zero(), Field::one()});
  const DivMod qr = divmod(num, den);
  if (!qr.remainder.is_zero()) throw InvariantError("x^4 - beta x^2 + 1 does not divide x^{q+1} + 1");
  return qr.quotient;
}

Poly negacyclic_dual_generator(const Tower& tower, Elem xi) {
  Poly closed = dual_generator_closed_form(tower, xi);
  if (!(closed == dual_generator_division(tower, xi))) {
    throw InvariantError("closed-form b(x) disagrees with (x^{q+1} + 1)/(x^4 - beta x^2 + 1)");
  }
  if (!(closed == dual_generator_recurrence(tower, xi))) {
    throw InvariantError("closed-form b(x) disagrees with the recurrence");
  }
  return closed;
}

bool dual_orthogonality_probe(const ConstacyclicCode& c2, std::span<const Elem> e) {
  if (e.size() != c2.length()) throw Error("probe word has the wrong length");
  if (!dual(c2).contains(e)) throw Error("probe word is not in the dual code");
  for (const auto& row : c2.generator_matrix()) {
    if (inner_product(c2.field(), row, e) != Field::zero()) return false;
  }
  return true;
}

namespace {

void require_fits(const Poly& b, std::size_t half_length) {
  if (half_length < 5) throw Error("dual words need length at least 5");
  if (b.degree() && *b.degree() > half_length - 4) throw Error("b(x) too long for the requested length");
}

}  // namespace

Word rotated_dual_word(const Poly& b, std::size_t half_length) {
  require_fits(b, half_length);
  const Field& f = b.field();
  Word w(half_length, Field::zero());
  w[0] = f.neg(b.coeff(half_length - 4));
  for (std::size_t i = 0; i + 5 <= half_length; ++i) w[4 + i] = b.coeff(i);
  return w;
}

Word shifted_dual_word(const Poly& b, std::size_t half_length) {
  require_fits(b, half_length);
  Word w(half_length, Field::zero());
  for (std::size_t i = 0; i + 4 <= half_length; ++i) w[2 + i] = b.coeff(i);
  return w;
}

}  // namespace sympair
