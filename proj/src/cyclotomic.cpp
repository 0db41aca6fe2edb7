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

#include "sympair/cyclotomic.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace sympair {

CyclotomicCoset coset(std::int64_t i, std::int64_t q, std::int64_t rn) {
  if (rn < 1) throw Error("coset modulus must be positive");
  if (std::gcd(mod_floor(q, rn), rn) != 1 && rn > 1) {
    throw Error("gcd(q, rn) != 1 for q = " + std::to_string(q) + ", rn = " + std::to_string(rn));
  }
  CyclotomicCoset c;
  c.modulus = rn;
  c.representative = mod_floor(i, rn);
  std::int64_t x = c.representative;
  do {
    c.members.push_back(x);
    x = mod_floor(x * mod_floor(q, rn), rn);
  } while (x != c.representative);
  std::sort(c.members.begin(), c.members.end());
  return c;
}

std::vector<CyclotomicCoset> coset_partition(std::int64_t q, std::int64_t rn) {
  std::vector<CyclotomicCoset> out;
  std::vector<bool> seen(static_cast<std::size_t>(rn), false);
  for (std::int64_t i = 0; i < rn; ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    auto c = coset(i, q, rn);
    for (auto m : c.members) seen[static_cast<std::size_t>(m)] = true;
    out.push_back(std::move(c));
  }
  return out;
}

std::int64_t multiplicative_order(std::int64_t q, std::int64_t rn) {
  if (rn == 1) return 1;
  if (std::gcd(mod_floor(q, rn), rn) != 1) throw Error("q is not a unit modulo rn");
  std::int64_t x = mod_floor(q, rn);
  std::int64_t ord = 1;
  while (x != 1) {
    x = x * mod_floor(q, rn) % rn;
    ++ord;
  }
  return ord;
}

bool DefiningSet::contains(std::int64_t e) const {
  return std::binary_search(residues.begin(), residues.end(), mod_floor(e, modulus()));
}

namespace {

void require_order(const Field& big, Elem xi, std::int64_t order) {
  if (xi == Field::zero() || big.order(xi) != static_cast<std::uint64_t>(order)) {
    throw Error("root base does not have multiplicative order " + std::to_string(order));
  }
}

Poly product_of_linear_factors(const Tower& tower, Elem xi, const std::vector<std::int64_t>& exponents) {
  const Field& big = tower.big();
  Poly prod = Poly::constant(tower.big_ptr(), Field::one());
  for (std::int64_t e : exponents) {
    prod = prod * Poly(tower.big_ptr(), {big.neg(big.pow(xi, e)), Field::one()});
  }
  try {
    return to_subfield(prod, tower);
  } catch (const Error&) {
    throw InvariantError("product of conjugate linear factors does not descend to " + tower.small().describe());
  }
}

}  // namespace

Poly minimal_polynomial(const Tower& tower, Elem xi, std::int64_t i, std::int64_t n) {
  require_order(tower.big(), xi, n);
  return product_of_linear_factors(tower, xi, coset(i, tower.q(), n).members);
}

DefiningSet defining_set_from_generator(const Tower& tower, const Poly& g, Elem xi, std::int64_t n,
                                        std::int64_t r) {
  if (n < 1 || r < 1) throw Error("length and shift order must be positive");
  require_same_field(g.field(), tower.small());
  const std::int64_t rn = n * r;
  require_order(tower.big(), xi, rn);
  const Field& big = tower.big();
  const Elem lambda = tower.to_subfield(big.pow(xi, n));
  if (g.is_zero() || !divides(g, Poly::binomial(tower.small_ptr(), static_cast<std::size_t>(n), lambda))) {
    throw Error("generator does not divide x^n - lambda");
  }
  DefiningSet T;
  T.n = n;
  T.r = r;
  for (std::int64_t i = 0; i < n; ++i) {
    const std::int64_t t = mod_floor(1 + r * i, rn);
    if (eval_embedded(g, tower, big.pow(xi, t)) == Field::zero()) T.residues.push_back(t);
  }
  std::sort(T.residues.begin(), T.residues.end());
  if (T.residues.size() != *g.degree()) {
    throw InvariantError("generator degree does not match the number of its roots");
  }
  return T;
}

Poly generator_from_defining_set(const Tower& tower, const DefiningSet& T, Elem xi) {
  const std::int64_t rn = T.modulus();
  require_order(tower.big(), xi, rn);
  const std::set<std::int64_t> members(T.residues.begin(), T.residues.end());
  for (std::int64_t t : members) {
    if (t < 0 || t >= rn || mod_floor(t - 1, T.r) != 0) {
      throw Error("exponent " + std::to_string(t) + " is not in Ω_rn");
    }
    if (!members.count(mod_floor(t * static_cast<std::int64_t>(tower.q()), rn))) {
      throw Error("defining set is not a union of cyclotomic cosets");
    }
  }
  return product_of_linear_factors(tower, xi, T.residues);
}

namespace {

// Membership of 1 + r i for i in Z_n.
std::vector<bool> lattice_mask(const DefiningSet& T) {
  std::vector<bool> mask(static_cast<std::size_t>(T.n), false);
  for (std::int64_t i = 0; i < T.n; ++i) mask[static_cast<std::size_t>(i)] = T.contains(1 + T.r * i);
  return mask;
}

}  // namespace

int bch_bound(const DefiningSet& T) {
  const auto mask = lattice_mask(T);
  const std::int64_t n = T.n;
  if (std::all_of(mask.begin(), mask.end(), [](bool b) { return b; })) return static_cast<int>(n + 1);
  std::int64_t best = 0;
  for (std::int64_t start = 0; start < n; ++start) {
    std::int64_t len = 0;
    while (len < n && mask[static_cast<std::size_t>((start + len) % n)]) ++len;
    best = std::max(best, len);
  }
  return static_cast<int>(best + 1);
}

int bch_bound_anchored(const DefiningSet& T) {
  const auto mask = lattice_mask(T);
  std::int64_t len = 0;
  while (len < T.n && mask[static_cast<std::size_t>(len)]) ++len;
  return static_cast<int>(len + 1);
}

int hartmann_tzeng_bound(const DefiningSet& T) {
  if (T.r != 1) throw Error("Hartmann–Tzeng bound is implemented for cyclic codes only (r = 1)");
  const std::int64_t n = T.n;
  std::vector<bool> in(static_cast<std::size_t>(n), false);
  for (auto t : T.residues) in[static_cast<std::size_t>(t)] = true;
  auto at = [&](std::int64_t x) { return static_cast<bool>(in[static_cast<std::size_t>(mod_floor(x, n))]); };

  int best = 1;
  // run[b][x]: largest s <= n with x, x + b, ..., x + s b all in T (or -1).
  std::vector<std::vector<std::int64_t>> run(static_cast<std::size_t>(n));
  for (std::int64_t b = 1; b < n; ++b) {
    auto& rb = run[static_cast<std::size_t>(b)];
    rb.assign(static_cast<std::size_t>(n), -1);
    for (std::int64_t x = 0; x < n; ++x) {
      std::int64_t s = -1;
      while (s < n && at(x + (s + 1) * b)) ++s;
      rb[static_cast<std::size_t>(x)] = s;
    }
  }
  for (std::int64_t a = 0; a < n; ++a) {
    if (!at(a)) continue;
    std::vector<std::int64_t> s_max(static_cast<std::size_t>(n), n);
    for (std::int64_t len = 1; len <= n && at(a + len - 1); ++len) {
      const std::int64_t delta = len + 1;
      best = std::max<int>(best, static_cast<int>(delta));
      for (std::int64_t b = 1; b < n; ++b) {
        auto& sm = s_max[static_cast<std::size_t>(b)];
        sm = std::min(sm, run[static_cast<std::size_t>(b)][static_cast<std::size_t>(mod_floor(a + len - 1, n))]);
        if (std::gcd(b, n) < delta && sm >= 0) {
          best = std::max<int>(best, static_cast<int>(delta + sm));
        }
      }
    }
  }
  return best;
}

}  // namespace sympair
