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

#include "sympair/families.hpp"

#include <set>

#include "sympair/cyclotomic.hpp"
#include "sympair/decomp.hpp"

namespace sympair {

namespace {

const FamilySpec kSpecs[] = {
    {FamilyId::kDp7, "dp7", "q = 1 (mod 4)", 7},
    {FamilyId::kDp8, "dp8", "q = 3 (mod 4)", 8},
    {FamilyId::kDp9, "dp9", "q odd", 9},
    {FamilyId::kKaiDp7, "kai_dp7", "q = 3 (mod 4)", 7},
};

bool is_odd_prime_power(std::uint64_t q) {
  if (q < 3 || q % 2 == 0) return false;
  try {
    split_prime_power(q);
    return true;
  } catch (const Error&) {
    return false;
  }
}

std::set<std::int64_t> q_closure(const std::vector<std::int64_t>& exps, std::int64_t q, std::int64_t n) {
  std::set<std::int64_t> out;
  for (std::int64_t e : exps) {
    for (const auto t : coset(mod_floor(e, n), q, n).members) out.insert(t);
  }
  return out;
}

}  // namespace

std::string to_string(FamilyId id) { return family_spec(id).name; }

FamilyId parse_family(const std::string& name) {
  for (const auto& s : kSpecs) {
    if (s.name == name) return s.id;
  }
  throw Error("unknown family '" + name + "' (expected dp7, dp8, dp9 or kai_dp7)");
}

const std::vector<FamilyId>& all_families() {
  static const std::vector<FamilyId> ids = {FamilyId::kDp7, FamilyId::kDp8, FamilyId::kDp9, FamilyId::kKaiDp7};
  return ids;
}

const FamilySpec& family_spec(FamilyId id) {
  for (const auto& s : kSpecs) {
    if (s.id == id) return s;
  }
  throw Error("unknown family id");
}

std::optional<std::string> FamilySpec::inadmissible(std::uint64_t q) const {
  if (!is_odd_prime_power(q)) return std::to_string(q) + " is not an odd prime power";
  switch (id) {
    case FamilyId::kDp7:
      if (q % 4 != 1) return name + " needs q = 1 (mod 4), but " + std::to_string(q) + " = " + std::to_string(q % 4) + " (mod 4)";
      break;
    case FamilyId::kDp8:
    case FamilyId::kKaiDp7:
      if (q % 4 != 3) return name + " needs q = 3 (mod 4), but " + std::to_string(q) + " = " + std::to_string(q % 4) + " (mod 4)";
      break;
    case FamilyId::kDp9:
      break;
  }
  if (q * q > Field::kTableLimit) return "q^2 = " + std::to_string(q * q) + " exceeds the field table limit";
  return std::nullopt;
}

std::size_t FamilySpec::length(std::uint64_t q) const {
  switch (id) {
    case FamilyId::kDp7:
      return 4 * q + 4;
    case FamilyId::kDp8:
    case FamilyId::kKaiDp7:
      return 4 * q - 4;
    case FamilyId::kDp9:
      return 2 * q + 2;
  }
  return 0;
}

std::size_t FamilySpec::dimension(std::uint64_t q) const {
  switch (id) {
    case FamilyId::kDp7:
      return 4 * q - 1;
    case FamilyId::kDp8:
      return 4 * q - 10;
    case FamilyId::kKaiDp7:
      return 4 * q - 9;
    case FamilyId::kDp9:
      return 2 * q - 5;
  }
  return 0;
}

std::optional<std::size_t> FamilySpec::claimed_dH(std::uint64_t q) const {
  switch (id) {
    case FamilyId::kDp7:
      return 4;
    case FamilyId::kDp8:
      return q == 3 ? 6 : 4;
    case FamilyId::kKaiDp7:
      return std::nullopt;
    case FamilyId::kDp9:
      return q == 3 ? 8 : 6;
  }
  return std::nullopt;
}

std::vector<std::int64_t> FamilySpec::root_exponents(std::uint64_t q) const {
  const auto qq = static_cast<std::int64_t>(q);
  const auto n = static_cast<std::int64_t>(length(q));
  switch (id) {
    case FamilyId::kDp7:
      return {0, n / 2, 1, qq, qq + 1};
    case FamilyId::kDp8:
      return {0, n / 2, 1, qq, 2, 2 * qq};
    case FamilyId::kKaiDp7:
      return {0, 1, qq, 2, 2 * qq};
    case FamilyId::kDp9:
      return {-1, 0, 1, 2};
  }
  return {};
}

ConstacyclicCode build(FamilyId id, std::uint64_t q, std::optional<Elem> xi) {
  const FamilySpec& spec = family_spec(id);
  if (auto why = spec.inadmissible(q)) throw Error(*why);
  const auto [p, m] = split_prime_power(q);
  const TowerPtr tower = Tower::make(p, m);
  const Field& big = tower->big();
  const std::size_t n = spec.length(q);
  const auto nn = static_cast<std::int64_t>(n);
  if ((big.size() - 1) % n != 0) throw InvariantError("n does not divide q^2 - 1");

  Elem root = xi ? big.checked(*xi) : nth_root_of_unity(big, n);
  if (root == Field::zero() || big.order(root) != n) throw Error("xi must be a primitive n-th root of unity");

  const auto exps = spec.root_exponents(q);
  const std::set<std::int64_t> closed = q_closure(exps, static_cast<std::int64_t>(q), nn);
  if (id != FamilyId::kDp9) {
    std::set<std::int64_t> listed;
    for (auto e : exps) listed.insert(mod_floor(e, nn));
    if (listed != closed) throw InvariantError(spec.name + " root set is not closed under x -> x^q");
  }

  // Linear factors over GF(q^2).
  Poly linear = Poly::constant(tower->big_ptr(), Field::one());
  for (std::int64_t e : closed) {
    linear = linear * Poly(tower->big_ptr(), {big.neg(big.pow(root, e)), Field::one()});
  }
  const Poly g = to_subfield(linear, *tower);

  // Minimal polynomials over distinct cosets.
  Poly via_min = Poly::constant(tower->small_ptr(), Field::one());
  std::set<std::int64_t> reps;
  for (std::int64_t e : exps) reps.insert(coset(mod_floor(e, nn), static_cast<std::int64_t>(q), nn).members.front());
  for (std::int64_t rep : reps) via_min = via_min * minimal_polynomial(*tower, root, rep, nn);
  if (!(via_min == g)) throw InvariantError(spec.name + ": linear-factor and minimal-polynomial generators differ");

  ConstacyclicCode code = ConstacyclicCode::make(tower, n, Field::one(), g, root);
  if (code.dimension() != spec.dimension(q)) {
    throw InvariantError(spec.name + ": dimension " + std::to_string(code.dimension()) + ", expected " +
                         std::to_string(spec.dimension(q)));
  }
  return code;
}

Word witness_low_weight(const ConstacyclicCode& code, FamilyId id) {
  const Tower& tower = code.tower();
  const Field& f = code.field();
  const Field& big = tower.big();
  const FieldPtr& fp = tower.small_ptr();
  const std::uint64_t q = code.q();
  const Elem one = Field::one();
  const Elem minus_one = f.neg(one);
  if (!code.root_base()) throw Error("witness needs the code's root of unity");
  const Elem xi = *code.root_base();

  Poly c(fp);
  std::size_t expected = 0;
  switch (id) {
    case FamilyId::kDp7:
      // (x^4 - 1)(x^{2q+2} + 1)
      c = Poly::binomial(fp, 4, one) * Poly::binomial(fp, 2 * q + 2, minus_one);
      expected = 4;
      break;
    case FamilyId::kDp8: {
      if (q == 3) throw Error("dp8 witness degenerates at q = 3 (x^{q-3} is constant)");
      // (x^{2q-2} - 1)(xi^{q+1} x^{q-3} + 1)
      const Elem w = big.pow(xi, static_cast<std::int64_t>(q + 1));
      if (!tower.in_subfield(w)) throw InvariantError("xi^{q+1} is not in GF(q)");
      Poly second = Poly::monomial(fp, tower.to_subfield(w), q - 3) + Poly::constant(fp, one);
      c = Poly::binomial(fp, 2 * q - 2, one) * second;
      expected = 4;
      break;
    }
    case FamilyId::kDp9: {
      const Elem beta_big = big.add(big.pow(xi, 2), big.pow(xi, -2));
      if (!tower.in_subfield(beta_big)) throw InvariantError("xi^2 + xi^-2 is not in GF(q)");
      const Elem beta = tower.to_subfield(beta_big);
      if (beta == Field::zero()) throw Error("dp9 witness degenerates when xi^2 + xi^-2 = 0 (q = 3)");
      // (x^4 - beta x^2 + 1)(x^{q+1} - 1)
      const Poly quartic(fp, {one, Field::zero(), f.neg(beta), Field::zero(), one});
      c = quartic * Poly::binomial(fp, q + 1, one);
      expected = 6;
      break;
    }
    case FamilyId::kKaiDp7:
      throw Error("kai_dp7 has no explicit low-weight witness");
  }
  Word w = code.to_word(c);
  if (!code.contains(w) || hamming_weight(w) != expected) {
    throw InvariantError(to_string(id) + " witness has weight " + std::to_string(hamming_weight(w)) + ", expected " +
                         std::to_string(expected));
  }
  return w;
}

Word witness_low_weight(FamilyId id, std::uint64_t q) { return witness_low_weight(build(id, q), id); }

bool subcode_check(std::uint64_t q) {
  if (q % 4 != 3) throw Error("subcode_check needs q = 3 (mod 4)");
  const ConstacyclicCode c = build(FamilyId::kDp8, q);
  const ConstacyclicCode ref = build(FamilyId::kKaiDp7, q, c.root_base());
  return is_subcode(c, ref);
}

StabilityReport root_choice_stability(FamilyId id, std::uint64_t q, const EngineOptions& options) {
  const ConstacyclicCode base = build(id, q);
  const Field& big = base.tower().big();
  const std::size_t n = base.length();
  const std::size_t bound = family_spec(id).claimed_dP;
  StabilityReport report{id, q, {}, true};
  for (std::size_t j = 1; j <= n; ++j) {
    if (gcd_u64(j, n) != 1) continue;
    const Elem xi = big.pow(*base.root_base(), static_cast<std::int64_t>(j));
    const ConstacyclicCode code = build(id, q, xi);
    const auto h = min_hamming(code, n, options);
    const auto pr = min_pair(code, std::max(bound, n), options);
    report.choices.push_back({static_cast<std::int64_t>(j), h.value, pr.value});
  }
  for (const auto& c : report.choices) {
    if (c.d_H != report.choices.front().d_H || c.d_P != report.choices.front().d_P) report.stable = false;
  }
  return report;
}

}  // namespace sympair
