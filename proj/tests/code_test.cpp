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
#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "sympair/code.hpp"
#include "sympair/cyclotomic.hpp"

using namespace sympair;

namespace {

bool orthogonal(const ConstacyclicCode& a, const ConstacyclicCode& b) {
  for (const auto& x : a.generator_matrix()) {
    for (const auto& y : b.generator_matrix()) {
      if (inner_product(a.field(), x, y) != Field::zero()) return false;
    }
  }
  return true;
}

Word random_message(std::mt19937_64& rng, std::size_t k, std::uint32_t q) {
  std::uniform_int_distribution<std::uint32_t> d(0, q - 1);
  Word m(k);
  for (auto& e : m) e = Elem{d(rng)};
  return m;
}

}  // namespace

TEST_CASE("code construction") {
  const auto tower = Tower::make(5, 1);
  const auto f = tower->small_ptr();
  const auto full = ConstacyclicCode::make(tower, 12, Field::one(), Poly::constant(f, Field::one()));
  CHECK(full.dimension() == 12);
  CHECK(full.root_base().has_value());
  CHECK(full.defining_set()->residues.empty());
  const auto zero = dual(full);
  CHECK(zero.dimension() == 0);
  CHECK(zero.defining_set()->residues.size() == 12);

  CHECK_THROWS_AS(ConstacyclicCode::make(tower, 10, Field::one(), Poly::constant(f, Field::one())), Error);
  CHECK_THROWS_AS(ConstacyclicCode::make(tower, 12, Field::zero(), Poly::constant(f, Field::one())), Error);
  CHECK_THROWS_AS(ConstacyclicCode::make(tower, 12, Field::one(), Poly::from_ints(f, {1, 2})), Error);
  CHECK_THROWS_AS(ConstacyclicCode::make(tower, 12, Field::one(), Poly::from_ints(f, {1, 0, 1, 1})), Error);
  CHECK_THROWS_AS(
      ConstacyclicCode::make(tower, 12, Field::one(), Poly::constant(f, Field::one()), tower->big().generator()),
      Error);
  // 7 does not divide 24: no root base, but the code itself is fine.
  const auto no_root = ConstacyclicCode::make(tower, 7, Field::one(), Poly::from_ints(f, {-1, 1}));
  CHECK_FALSE(no_root.root_base().has_value());
  CHECK(no_root.dimension() == 6);
}

TEST_CASE("membership") {
  const auto tower = Tower::make(5, 1);
  const auto f = tower->small_ptr();
  const Elem xi = nth_root_of_unity(tower->big(), 24);
  const Poly g = generator_from_defining_set(*tower, DefiningSet{24, 1, {0, 1, 5, 6, 12}}, xi);
  const auto code = ConstacyclicCode::make(tower, 24, Field::one(), g, xi);
  CHECK(code.dimension() == 19);
  CHECK(code.contains(Word(24, Field::zero())));
  CHECK(code.contains(code.to_word(Poly::binomial(f, 4, Field::one()) * Poly::binomial(f, 12, f->from_int(-1)))));
  CHECK_FALSE(code.contains(code.to_word(Poly::from_ints(f, {-1, 1}))));
  CHECK(eval_embedded(g, *tower, tower->big().pow(xi, 6)) == Field::zero());
  CHECK_THROWS_AS(code.contains(Word(23, Field::zero())), Error);
  CHECK_THROWS_AS(code.encode(Word(3, Field::zero())), Error);
}

TEST_CASE("duals") {
  std::mt19937_64 rng(31);
  for (auto [p, n, lam] : {std::tuple{3u, 8u, 1}, {5u, 12u, 1}, {5u, 12u, -1}, {7u, 24u, 1}, {7u, 12u, -1},
                           {3u, 4u, -1}, {5u, 6u, -1}, {11u, 20u, 1}}) {
    const auto tower = Tower::make(p, 1);
    const Elem lambda = tower->small().from_int(lam);
    for (int trial = 0; trial < 15; ++trial) {
      const auto c = oracle::random_code(rng, tower, n, lambda);
      const auto d = dual(c);
      CHECK(c.dimension() + d.dimension() == n);
      CHECK(d.lambda() == tower->small().inv(lambda));
      CHECK(orthogonal(c, d));
      const auto dd = dual(d);
      CHECK(dd.generator() == c.generator());
      CHECK(dd.root_base() == c.root_base());
    }
  }
}

TEST_CASE("codes are closed under the constacyclic shift and encoding is linear") {
  std::mt19937_64 rng(41);
  for (auto [p, n, lam] : {std::tuple{3u, 8u, 1}, {5u, 12u, -1}, {7u, 24u, 1}, {9u, 10u, 1}}) {
    const auto [pp, mm] = split_prime_power(p);
    const auto tower = Tower::make(pp, mm);
    const Field& f = tower->small();
    const Elem lambda = f.from_int(lam);
    for (int trial = 0; trial < 10; ++trial) {
      const auto c = oracle::random_code(rng, tower, n, lambda);
      if (c.dimension() == 0) continue;
      for (int i = 0; i < 30; ++i) {
        const Word a = c.encode(random_message(rng, c.dimension(), f.size()));
        const Word b = c.encode(random_message(rng, c.dimension(), f.size()));
        REQUIRE(c.contains(a));
        REQUIRE(c.contains(c.shift(a)));
        Word sum(n);
        for (std::size_t j = 0; j < n; ++j) sum[j] = f.add(a[j], b[j]);
        REQUIRE(c.contains(sum));
      }
    }
  }
}

TEST_CASE("symbol-pair read vector") {
  const std::size_t n = 9;
  CHECK(pi_expand(Word(n, Field::zero())) == std::vector<std::pair<Elem, Elem>>(n, {Field::zero(), Field::zero()}));
  Word e0(n, Field::zero());
  e0[0] = Field::one();
  const auto pi = pi_expand(e0);
  std::set<std::size_t> nz;
  for (std::size_t i = 0; i < n; ++i) {
    if (pi[i] != std::pair{Field::zero(), Field::zero()}) nz.insert(i);
  }
  CHECK(nz == std::set<std::size_t>{0, n - 1});
  CHECK(pair_weight(e0) == 2);
  CHECK(pair_weight(Word(n, Field::one())) == n);
  CHECK(pair_distance(e0, e0) == 0);
  CHECK_THROWS_AS(pi_expand(Word(1, Field::one())), Error);
  CHECK_THROWS_AS(pair_weight(Word(1, Field::one())), Error);
}

TEST_CASE("pair metric properties on random words") {
  std::mt19937_64 rng(2026);
  const auto f = Field::make(5, 1);
  for (std::size_t n : {2u, 3u, 5u, 8u, 12u, 24u, 40u}) {
    for (int i = 0; i < 10000; ++i) {
      const Word x = oracle::random_word(rng, n, 5, (i % 10) / 10.0);
      const Word y = oracle::random_word(rng, n, 5, 0.3);
      // |S ∪ (S - 1)| from the support set.
      std::set<std::size_t> s_union;
      for (std::size_t j : support(x)) {
        s_union.insert(j);
        s_union.insert((j + n - 1) % n);
      }
      REQUIRE(pair_weight(x) == s_union.size());
      REQUIRE(pair_weight(x) == oracle::pair_weight(x));
      // Read-vector contracts.
      const auto pi = pi_expand(x);
      REQUIRE(pi.size() == n);
      for (std::size_t j = 0; j < n; ++j) {
        REQUIRE(pi[j].first == x[j]);
        REQUIRE(pi[j].second == x[(j + 1) % n]);
        REQUIRE(pi[(j + n - 1) % n].second == pi[j].first);
      }
      // Rotation and constant-scaled wraparound keep both weights.
      Word rot(n);
      rot[0] = f->mul(Elem{3}, x[n - 1]);
      for (std::size_t j = 1; j < n; ++j) rot[j] = x[j - 1];
      REQUIRE(pair_weight(rot) == pair_weight(x));
      REQUIRE(hamming_weight(rot) == hamming_weight(x));
      // Distance is the weight of the difference and the read-vector Hamming distance.
      Word diff(n);
      for (std::size_t j = 0; j < n; ++j) diff[j] = f->sub(x[j], y[j]);
      REQUIRE(pair_distance(x, y) == pair_weight(diff));
      const auto py = pi_expand(y);
      std::size_t read_diff = 0;
      for (std::size_t j = 0; j < n; ++j) read_diff += pi[j] != py[j];
      REQUIRE(pair_distance(x, y) == read_diff);
      REQUIRE(hamming_distance(x, y) == hamming_weight(diff));
      // Weight bounds for nonzero words.
      const std::size_t w = hamming_weight(x);
      if (w > 0 && w < n) {
        REQUIRE(pair_weight(x) >= w + 1);
        REQUIRE(pair_weight(x) <= std::min(2 * w, n));
      }
    }
  }
}
