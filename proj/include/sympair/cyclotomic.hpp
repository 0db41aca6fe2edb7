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

#include <cstdint>
#include <vector>

#include "sympair/field.hpp"
#include "sympair/poly.hpp"

namespace sympair {

/// Orbit {i q^j mod rn}. Members are sorted; representative is normalized.
struct CyclotomicCoset {
  std::int64_t modulus = 1;
  std::int64_t representative = 0;
  std::vector<std::int64_t> members;
};

CyclotomicCoset coset(std::int64_t i, std::int64_t q, std::int64_t rn);
/// All cosets of Z_rn, ordered by smallest member.
std::vector<CyclotomicCoset> coset_partition(std::int64_t q, std::int64_t rn);
/// Multiplicative order of q modulo rn.
std::int64_t multiplicative_order(std::int64_t q, std::int64_t rn);

/// Exponent set T ⊆ Ω_rn = {1 + r i} of the roots of a generator, taken with
/// respect to a primitive rn-th root of unity.
struct DefiningSet {
  std::int64_t n = 1;                 ///< code length
  std::int64_t r = 1;                 ///< order of the shift constant
  std::vector<std::int64_t> residues; ///< sorted, in [0, rn)

  std::int64_t modulus() const { return n * r; }
  bool contains(std::int64_t e) const;
};

/// prod_{j in C_i} (x - xi^j) over GF(q). xi must have order n in tower.big().
Poly minimal_polynomial(const Tower& tower, Elem xi, std::int64_t i, std::int64_t n);

/// Roots of g among xi^{1+ri}. xi must have order rn; requires g | x^n - xi^n.
DefiningSet defining_set_from_generator(const Tower& tower, const Poly& g, Elem xi, std::int64_t n,
                                        std::int64_t r);
/// prod_{t in T} (x - xi^t), coerced to GF(q). T must be a union of cosets.
Poly generator_from_defining_set(const Tower& tower, const DefiningSet& T, Elem xi);

/// Largest delta such that T contains delta-1 consecutive terms 1 + r i of
/// the r-strided lattice, window start free (cyclic). T = ∅ gives 1.
int bch_bound(const DefiningSet& T);
/// Same, with the window anchored at exponent 1 + r·0 exactly as the classic
/// statement reads. Never larger than bch_bound().
int bch_bound_anchored(const DefiningSet& T);

/// Hartmann–Tzeng bound for cyclic codes: max of delta + s over windows A of
/// delta - 1 consecutive exponents and steps b with gcd(b, n) < delta such
/// that A + {0, b, ..., s b} ⊆ T. s is capped at n. Throws if r != 1.
int hartmann_tzeng_bound(const DefiningSet& T);

}  // namespace sympair
