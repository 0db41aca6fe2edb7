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

#include "oracles.hpp"
#include "sympair/decomp.hpp"
#include "sympair/families.hpp"

using namespace sympair;

namespace {

Poly random_poly(std::mt19937_64& rng, const FieldPtr& f, std::size_t len) {
  std::uniform_int_distribution<std::uint32_t> d(0, f->size() - 1);
  std::vector<Elem> c(len);
  for (auto& e : c) e = Elem{d(rng)};
  return Poly(f, c);
}

std::vector<Elem> mth_roots(const Field& f, std::size_t m) {
  std::vector<Elem> out;
  for (std::uint32_t v = 1; v < f.size(); ++v) {
    if (f.pow(Elem{v}, static_cast<std::int64_t>(m)) == Field::one()) out.push_back(Elem{v});
  }
  return out;
}

Word random_codeword(std::mt19937_64& rng, const ConstacyclicCode& c) {
  std::uniform_int_distribution<std::uint32_t> d(0, c.q() - 1);
  Word m(c.dimension());
  for (auto& e : m) e = Elem{d(rng)};
  return c.encode(m);
}

struct Instance {
  FamilyId id;
  std::uint64_t q;
};

std::vector<Instance> family_instances(std::uint64_t q_max) {
  std::vector<Instance> out;
  for (FamilyId id : all_families()) {
    for (std::uint64_t q : {3u, 5u, 7u, 9u, 11u, 13u}) {
      if (q <= q_max && !family_spec(id).inadmissible(q)) out.push_back({id, q});
    }
  }
  return out;
}

}  // namespace

TEST_CASE("phi map") {
  const auto f = Field::make(5, 1);
  const std::size_t n = 6;
  SUBCASE("m = 1 is reduction modulo x^n - 1") {
    std::mt19937_64 rng(3);
    const std::vector<Elem> one{Field::one()};
    for (int i = 0; i < 50; ++i) {
      const Poly p = random_poly(rng, f, n);
      const auto out = phi_map(f, n, one, p);
      REQUIRE(out.size() == 1);
      CHECK(out[0] == p);
    }
  }
  SUBCASE("constants map to constant tuples") {
    const auto roots = mth_roots(*f, 4);
    for (const auto& r : phi_map(f, n, roots, Poly::constant(f, Elem{3}))) CHECK(r == Poly::constant(f, Elem{3}));
  }
  SUBCASE("ring homomorphism and injectivity") {
    std::mt19937_64 rng(4);
    for (std::size_t m : {2u, 4u}) {
      const auto roots = mth_roots(*f, m);
      REQUIRE(roots.size() == m);
      const QuotientRing big(f, m * n, Field::one());
      for (int i = 0; i < 2000; ++i) {
        const Poly a = random_poly(rng, f, m * n);
        const Poly b = random_poly(rng, f, m * n);
        const auto pa = phi_map(f, n, roots, a);
        const auto pb = phi_map(f, n, roots, b);
        const auto pab = phi_map(f, n, roots, big.mul(a, b));
        const auto psum = phi_map(f, n, roots, a + b);
        bool all_zero = true;
        for (std::size_t j = 0; j < m; ++j) {
          const QuotientRing ring(f, n, roots[j]);
          REQUIRE(pab[j] == ring.mul(pa[j], pb[j]));
          REQUIRE(psum[j] == pa[j] + pb[j]);
          all_zero = all_zero && pa[j].is_zero();
        }
        REQUIRE(all_zero == a.is_zero());
      }
    }
  }
  SUBCASE("errors") {
    const std::vector<Elem> bad{Elem{2}};
    CHECK_THROWS_AS(phi_map(f, n, bad, Poly::constant(f, Field::one())), Error);
    const std::vector<Elem> three{Elem{1}, Elem{2}, Elem{3}};
    CHECK_THROWS_AS(phi_map(f, n, three, Poly::constant(f, Field::one())), Error);
    const auto roots = mth_roots(*f, 2);
    CHECK_THROWS_AS(phi_map(f, n, roots, Poly::monomial(f, Field::one(), 12)), Error);
  }
}

TEST_CASE("decompose and join round trip on every family code") {
  std::mt19937_64 rng(19);
  for (const auto& [id, q] : family_instances(13)) {
    CAPTURE(to_string(id));
    CAPTURE(q);
    const auto parent = build(id, q);
    const auto parts = decompose(parent);
    const std::size_t n = parent.length() / 2;
    CHECK(parts.c1.length() == n);
    CHECK(parts.c2.length() == n);
    CHECK(parts.c1.is_cyclic());
    CHECK(parts.c2.lambda() == parent.field().neg(Field::one()));
    CHECK(parts.c1.dimension() + parts.c2.dimension() == parent.dimension());
    CHECK(parts.c1.generator() * parts.c2.generator() == parent.generator());
    CHECK(same_code(join(parts.c1, parts.c2), parent));
    const Field& f = parent.field();
    for (int i = 0; i < 20; ++i) {
      const Word u = parts.c1.dimension() ? random_codeword(rng, parts.c1) : Word(n, Field::zero());
      const Word v = parts.c2.dimension() ? random_codeword(rng, parts.c2) : Word(n, Field::zero());
      Word joined(2 * n);
      for (std::size_t j = 0; j < n; ++j) {
        joined[j] = f.add(u[j], v[j]);
        joined[n + j] = f.sub(u[j], v[j]);
      }
      REQUIRE(parent.contains(joined));
      const auto [su, sv] = split_word(joined, f);
      REQUIRE(su == u);
      REQUIRE(sv == v);
    }
    if (parent.dimension() > 0) {
      const auto [u, v] = split_word(random_codeword(rng, parent), f);
      CHECK(parts.c1.contains(u));
      CHECK(parts.c2.contains(v));
    }
  }
}

TEST_CASE("component degrees for the length 2q + 2 family at q = 5") {
  const auto parent = build(FamilyId::kDp9, 5);
  const auto parts = decompose(parent);
  CHECK(parts.c1.generator().degree() == std::optional<std::size_t>(3));
  CHECK(parts.c2.generator().degree() == std::optional<std::size_t>(4));
  CHECK(parts.c1.dimension() + parts.c2.dimension() == 5);
  // Roots of the cyclic part: xi^0 and the coset of xi^2 (as a 2n-th root).
  const Tower& t = parent.tower();
  const Elem xi = *parent.root_base();
  for (std::int64_t e : {0, 2, 10}) CHECK(eval_embedded(parts.c1.generator(), t, t.big().pow(xi, e)) == Field::zero());
  for (std::int64_t e : {1, 5, 7, 11}) CHECK(eval_embedded(parts.c2.generator(), t, t.big().pow(xi, e)) == Field::zero());
}

TEST_CASE("trivial decompositions and errors") {
  const auto tower = Tower::make(5, 1);
  const auto f = tower->small_ptr();
  const auto zero = ConstacyclicCode::make(tower, 12, Field::one(), Poly::binomial(f, 12, Field::one()));
  const auto parts = decompose(zero);
  CHECK(parts.c1.dimension() == 0);
  CHECK(parts.c2.dimension() == 0);
  CHECK(join(parts.c1, parts.c2).dimension() == 0);
  const auto full = ConstacyclicCode::make(tower, 12, Field::one(), Poly::constant(f, Field::one()));
  CHECK(same_code(join(decompose(full).c1, decompose(full).c2), full));
  CHECK(is_subcode(zero, full));
  CHECK_FALSE(is_subcode(full, zero));

  const auto six = ConstacyclicCode::make(tower, 6, Field::one(), Poly::constant(f, Field::one()));
  CHECK_NOTHROW(decompose(six));
  const auto len3 = ConstacyclicCode::make(tower, 3, Field::one(), Poly::constant(f, Field::one()));
  CHECK_THROWS_AS(decompose(len3), Error);
  const auto nega = ConstacyclicCode::make(tower, 6, f->from_int(-1), Poly::constant(f, Field::one()));
  CHECK_THROWS_AS(decompose(nega), Error);
  CHECK_THROWS_AS(join(nega, nega), Error);
  CHECK_THROWS_AS(join(six, len3), Error);
  CHECK_THROWS_AS(split_word(Word(3, Field::zero()), *f), Error);
}

TEST_CASE("three computations of the negacyclic dual generator agree") {
  for (std::uint64_t q : {5u, 7u, 9u, 11u, 13u}) {
    CAPTURE(q);
    const auto parent = build(FamilyId::kDp9, q);
    const Tower& t = parent.tower();
    const Field& f = t.small();
    const Elem xi = *parent.root_base();
    const Poly closed = dual_generator_closed_form(t, xi);
    const Poly rec = dual_generator_recurrence(t, xi);
    const Poly div = dual_generator_division(t, xi);
    CHECK(closed == rec);
    CHECK(closed == div);
    CHECK(negacyclic_dual_generator(t, xi) == closed);
    CHECK(closed.degree() == std::optional<std::size_t>(q - 3));

    const Elem beta_big = t.big().add(t.big().pow(xi, 2), t.big().pow(xi, -2));
    REQUIRE(t.in_subfield(beta_big));
    const Elem beta = t.to_subfield(beta_big);
    CHECK(closed.coeff(0) == Field::one());
    CHECK(closed.coeff(1) == Field::zero());
    CHECK(closed.coeff(2) == beta);
    CHECK(closed.coeff(3) == Field::zero());
    for (std::size_t k = 1; k <= q - 3; k += 2) CHECK(closed.coeff(k) == Field::zero());
    const Poly quartic(t.small_ptr(), {Field::one(), Field::zero(), f.neg(beta), Field::zero(), Field::one()});
    CHECK(closed * quartic == Poly::binomial(t.small_ptr(), q + 1, f.neg(Field::one())));

    const auto parts = decompose(parent);
    CHECK(parts.c2.generator() == quartic);
    CHECK(dual(parts.c2).generator() == closed.monic());
  }
  const auto t3 = Tower::make(3, 1);
  CHECK_THROWS_AS(dual_generator_closed_form(*t3, nth_root_of_unity(t3->big(), 8)), Error);
  const auto t5 = Tower::make(5, 1);
  CHECK_THROWS_AS(dual_generator_recurrence(*t5, nth_root_of_unity(t5->big(), 24)), Error);
}

TEST_CASE("dual words are orthogonal to the negacyclic component") {
  std::mt19937_64 rng(1000);
  for (std::uint64_t q : {5u, 7u, 9u, 11u, 13u}) {
    CAPTURE(q);
    const auto parent = build(FamilyId::kDp9, q);
    const auto parts = decompose(parent);
    const Poly b = negacyclic_dual_generator(parent.tower(), *parent.root_base());
    const std::size_t n = q + 1;
    const Word rot = rotated_dual_word(b, n);
    const Word sh = shifted_dual_word(b, n);
    const auto d = dual(parts.c2);
    CHECK(d.contains(rot));
    CHECK(d.contains(sh));
    CHECK(dual_orthogonality_probe(parts.c2, rot));
    CHECK(dual_orthogonality_probe(parts.c2, sh));
    CHECK(dual_orthogonality_probe(parts.c2, Word(n, Field::zero())));
    const int samples = q == 7 ? 1000 : 200;
    for (int i = 0; i < samples; ++i) {
      const Word c = random_codeword(rng, parts.c2);
      Elem a = Field::zero(), s = Field::zero();
      for (std::size_t j = 0; j < n; ++j) {
        a = parent.field().add(a, parent.field().mul(rot[j], c[j]));
        s = parent.field().add(s, parent.field().mul(sh[j], c[j]));
      }
      REQUIRE(a == Field::zero());
      REQUIRE(s == Field::zero());
    }
    Word bad(n, Field::zero());
    bad[0] = Field::one();
    CHECK_THROWS_AS(dual_orthogonality_probe(parts.c2, bad), Error);
    CHECK_THROWS_AS(dual_orthogonality_probe(parts.c2, Word(n + 1, Field::zero())), Error);
  }
}
