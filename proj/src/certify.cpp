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

#include "sympair/certify.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <exception>
#include <thread>

#include "sympair/cyclotomic.hpp"
#include "sympair/linalg.hpp"

namespace sympair {

ShapeClass enumerate_shapes(std::size_t n, std::size_t pw) {
  if (pw < 2 || pw > n) {
    throw Error("pair weight " + std::to_string(pw) + " outside [2, " + std::to_string(n) + "]");
  }
  ShapeClass out{n, pw, {}};
  for_each_canonical_by_pair_weight(n, pw, [&](std::span<const std::uint32_t> s) {
    out.shapes.push_back(SupportPattern{n, {s.begin(), s.end()}, true});
    return true;
  });
  return out;
}

std::uint64_t count_fully_nonzero(const Field& field, const std::vector<Word>& basis, std::size_t s) {
  if (s > 24) throw Error("inclusion-exclusion limited to 24 coordinates");
  const std::size_t d = basis.size();
  for (const auto& b : basis) {
    if (b.size() != s) throw Error("basis vector has the wrong length");
  }
  const unsigned __int128 q = field.size();
  std::vector<unsigned __int128> qpow(d + 1, 1);
  for (std::size_t i = 1; i <= d; ++i) {
    qpow[i] = qpow[i - 1] * q;
    if (qpow[i] >> 100) throw Error("null space too large to count");
  }
  __int128 total = 0;
  for (std::uint32_t mask = 0; mask < (1u << s); ++mask) {
    // Vectors vanishing on J = mask: a B|_J = 0, i.e. q^{d - rank(B|_J)} of them.
    std::vector<Word> cols;
    for (std::size_t j = 0; j < s; ++j) {
      if (!(mask >> j & 1u)) continue;
      Word col(d);
      for (std::size_t i = 0; i < d; ++i) col[i] = basis[i][j];
      cols.push_back(std::move(col));
    }
    const std::size_t r = cols.empty() ? 0 : rank(field, std::move(cols));
    const auto term = static_cast<__int128>(qpow[d - r]);
    total += std::popcount(mask) % 2 == 0 ? term : -term;
  }
  if (total < 0) throw InvariantError("negative inclusion-exclusion count");
  return static_cast<std::uint64_t>(total);
}

ExclusionReport exclude_pattern(const ConstacyclicCode& code, const SupportPattern& pattern) {
  if (pattern.n != code.length()) {
    throw Error("pattern length " + std::to_string(pattern.n) + " != code length " + std::to_string(code.length()));
  }
  const Field& f = code.field();
  ExclusionReport report;
  report.pattern = pattern;
  const ParityEvaluator eval(code);
  const std::vector<Word> basis = eval.null_space(pattern.positions);
  const std::size_t s = pattern.positions.size();
  const std::size_t d = basis.size();
  report.nullity = d;
  if (d == 0) return report;

  std::optional<bool> enumerated;
  std::uint64_t combos = 1;
  for (std::size_t i = 0; i < d && combos <= (1u << 20); ++i) combos *= f.size();
  if (d <= 3 || combos <= (1u << 20)) {
    enumerated = false;
    std::vector<std::uint32_t> coef(d, 0);
    for (std::uint64_t step = 1; step < combos; ++step) {
      for (std::size_t i = 0; i < d; ++i) {
        if (++coef[i] < f.size()) break;
        coef[i] = 0;
      }
      Word v(s, Field::zero());
      for (std::size_t i = 0; i < d; ++i) {
        if (coef[i] == 0) continue;
        for (std::size_t j = 0; j < s; ++j) v[j] = f.add(v[j], f.mul(Elem{coef[i]}, basis[i][j]));
      }
      if (std::all_of(v.begin(), v.end(), [](Elem e) { return e != Field::zero(); })) {
        Word w(code.length(), Field::zero());
        for (std::size_t j = 0; j < s; ++j) w[pattern.positions[j]] = v[j];
        report.fully_nonzero_witness = std::move(w);
        enumerated = true;
        break;
      }
    }
  }
  if (s <= 24) {
    const bool counted = count_fully_nonzero(f, basis, s) > 0;
    if (enumerated && *enumerated != counted) {
      throw InvariantError("null-space enumeration and inclusion-exclusion disagree");
    }
    report.admissible = counted;
  } else if (enumerated) {
    report.admissible = *enumerated;
  } else {
    throw BudgetExceeded("pattern too large for an exact fully-nonzero test");
  }
  if (report.fully_nonzero_witness && !code.contains(*report.fully_nonzero_witness)) {
    throw InvariantError("exclusion witness is not a codeword");
  }
  return report;
}

std::string to_string(CertStatus status) {
  switch (status) {
    case CertStatus::kMdsConfirmed:
      return "MDS_CONFIRMED";
    case CertStatus::kDiscrepancy:
      return "DISCREPANCY";
    case CertStatus::kBudgetExceeded:
      return "BUDGET_EXCEEDED";
  }
  return "UNKNOWN";
}

namespace {

std::vector<ExclusionReport> sweep(const ConstacyclicCode& code, const ShapeClass& shapes, unsigned workers) {
  std::vector<ExclusionReport> out(shapes.shapes.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next.fetch_add(1); i < out.size(); i = next.fetch_add(1)) {
      out[i] = exclude_pattern(code, shapes.shapes[i]);
    }
  };
  if (workers <= 1) {
    work();
    return out;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        work();
      } catch (...) {
        errors[w] = std::current_exception();
        next.store(out.size());
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace

FamilyCertificate certify_family(FamilyId id, std::uint64_t q, const CertifyOptions& options) {
  const FamilySpec& spec = family_spec(id);
  if (auto why = spec.inadmissible(q)) throw Error(*why);
  const ConstacyclicCode code = build(id, q);

  FamilyCertificate cert;
  cert.family = id;
  cert.q = q;
  cert.n = code.length();
  cert.k = code.dimension();
  cert.generator = code.generator().indices();
  cert.defining_set = code.defining_set()->residues;
  cert.claimed_dH = spec.claimed_dH(q);
  cert.claimed_dP = spec.claimed_dP;
  cert.bch_bound = bch_bound(*code.defining_set());
  cert.hartmann_tzeng_bound = hartmann_tzeng_bound(*code.defining_set());
  const std::size_t w_max = options.w_max.value_or(spec.claimed_dP);
  const std::size_t pw_max = options.pw_max.value_or(spec.claimed_dP);

  try {
    cert.d_H = min_hamming(code, w_max, options.engine);

    cert.sweep_pw = spec.claimed_dP - 1;
    if (cert.sweep_pw >= 2 && cert.sweep_pw <= cert.n) {
      const ShapeClass shapes = enumerate_shapes(cert.n, cert.sweep_pw);
      cert.shapes_swept = shapes.shapes.size();
      for (auto& r : sweep(code, shapes, options.engine.workers)) {
        if (r.admissible) cert.admissible_shapes.push_back(r.pattern);
      }
    } else {
      cert.notes.push_back("no shapes of pair weight " + std::to_string(cert.sweep_pw) + " on Z_" +
                           std::to_string(cert.n));
    }

    cert.d_P = min_pair(code, pw_max, options.engine);
  } catch (const BudgetExceeded& e) {
    cert.status = CertStatus::kBudgetExceeded;
    cert.notes.emplace_back(e.what());
    return cert;
  }

  const auto& h = *cert.d_H;
  const auto& p = *cert.d_P;
  if (h.exact && p.exact && h.value >= 2 && h.value <= cert.n) {
    cert.lemma3_ok = chen_relation(code, h, p);
  } else {
    cert.notes.push_back("Hamming/pair relation not evaluated: certificates are not both exact");
  }
  if (p.exact) cert.singleton_defect = singleton_check(code, p.value).defect;

  bool ok = true;
  auto fail = [&](std::string why) {
    ok = false;
    cert.notes.push_back(std::move(why));
  };
  if (spec.claimed_dP > cert.n) {
    fail("claimed d_P = " + std::to_string(spec.claimed_dP) + " exceeds the length n = " + std::to_string(cert.n));
  }
  if (cert.claimed_dH && (!h.exact || h.value != *cert.claimed_dH)) {
    fail("d_H = " + std::to_string(h.value) + (h.exact ? "" : " (lower bound)") + ", claimed " +
         std::to_string(*cert.claimed_dH));
  }
  if (!p.exact || p.value != spec.claimed_dP) {
    fail("d_P = " + std::to_string(p.value) + (p.exact ? "" : " (lower bound)") + ", claimed " +
         std::to_string(spec.claimed_dP));
  }
  if (!cert.admissible_shapes.empty()) {
    fail(std::to_string(cert.admissible_shapes.size()) + " shape(s) of pair weight " +
         std::to_string(cert.sweep_pw) + " carry a codeword");
  }
  if (!cert.lemma3_ok) fail("Hamming/pair relation does not hold");
  if (!p.exact || cert.singleton_defect != 0) {
    fail("Singleton-type bound not met (defect " + std::to_string(cert.singleton_defect) + ")");
  }
  cert.status = ok ? CertStatus::kMdsConfirmed : CertStatus::kDiscrepancy;
  return cert;
}

}  // namespace sympair
