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

/// @file decomp.hpp
/// Splitting a cyclic code of length 2n into a cyclic and a negacyclic code
/// of length n, and the dual generator of the negacyclic part for the
/// length 2q + 2 family.
///
/// For odd q, x^{2n} - 1 = (x^n - 1)(x^n + 1) with coprime factors, so
/// F_q[x]/<x^{2n} - 1> is the product of the two quotient rings. A cyclic
/// code C = <g> then equals {(u + v, u - v) : u in C1, v in C2} with
/// C1 = <gcd(g, x^n - 1)> cyclic and C2 = <gcd(g, x^n + 1)> negacyclic.

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "sympair/code.hpp"

namespace sympair {

/// Residues of p modulo x^n - zeta for each zeta in `roots`. The roots must
/// be the m distinct m-th roots of unity in the field, m | q - 1, and
/// deg p < m n.
std::vector<Poly> phi_map(const FieldPtr& field, std::size_t n, std::span<const Elem> roots, const Poly& p);

struct DecompositionPair {
  ConstacyclicCode parent;
  ConstacyclicCode c1;  ///< cyclic, length n
  ConstacyclicCode c2;  ///< negacyclic, length n
};

DecompositionPair decompose(const ConstacyclicCode& parent);

/// {(u + v, u - v)} as a cyclic code of length 2n. The generator is computed
/// from the rows (u, u) and (v, -v) independently of the factor product.
ConstacyclicCode join(const ConstacyclicCode& c1, const ConstacyclicCode& c2);

/// Inverse of (u, v) -> (u + v, u - v): u = (a + b)/2, v = (a - b)/2.
std::pair<Word, Word> split_word(std::span<const Elem> word, const Field& field);

/// Equality of two codes as sets, by comparing reduced row echelon forms of
/// their generator matrices.
bool same_code(const ConstacyclicCode& a, const ConstacyclicCode& b);
/// Whether every row of a's generator matrix lies in b.
bool is_subcode(const ConstacyclicCode& a, const ConstacyclicCode& b);

/// b_0..b_{q-3} of b(x) = (x^{q+1} + 1)/(x^4 - beta x^2 + 1), beta = xi^2 + xi^-2,
/// for xi a primitive (2q + 2)-th root of unity in GF(q^2) and odd q > 3.
/// Three independent computations; all return polynomials over GF(q).
Poly dual_generator_closed_form(const Tower& tower, Elem xi);
Poly dual_generator_recurrence(const Tower& tower, Elem xi);
Poly dual_generator_division(const Tower& tower, Elem xi);

/// Closed form, after checking it against the recurrence and the division.
Poly negacyclic_dual_generator(const Tower& tower, Elem xi);

/// Whether e is orthogonal to every generator row of c2. Throws if e is not
/// a codeword of dual(c2).
bool dual_orthogonality_probe(const ConstacyclicCode& c2, std::span<const Elem> e);

/// (-b_{q-3}, 0, 0, 0, b_0, ..., b_{q-4}) and (0, 0, b_0, ..., b_{q-3}, 0),
/// both of length q + 1.
Word rotated_dual_word(const Poly& b, std::size_t half_length);
Word shifted_dual_word(const Poly& b, std::size_t half_length);

}  // namespace sympair
