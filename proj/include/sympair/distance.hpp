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

/// @file distance.hpp
/// Exact minimum Hamming and symbol-pair distance of constacyclic codes.
///
/// Support-rank engine. A word over GF(q) with support inside S is a
/// codeword iff it is annihilated by the evaluations at xi^t, t in T, so S
/// carries a nonzero codeword iff the |T| x |S| matrix [xi^{t s}] has rank
/// below |S| over GF(q^2). T is a union of q-cyclotomic cosets, so the row
/// space is Frobenius-stable; its reduced row echelon form then has entries
/// in GF(q) and the null-space basis read off from it is a basis over GF(q).
///
/// Supports are scanned up to rotation (the code is closed under the
/// constacyclic shift, which preserves supports up to rotation).
///  - Hamming: by increasing |S|. The first admissible S has |S| = d_H.
///  - Pair: by increasing pw(S) = |S ∪ (S - 1)|, ties by |S|. A codeword with
///    support inside S has pair weight <= pw(S), and every codeword c is
///    found at level pw(supp c). Hence if no support of pair weight < p is
///    admissible and one of pair weight p is, d_P = p exactly.
///
/// Full-enumeration engine. Walks all q^k codewords. Used as the oracle for
/// the support-rank engine and as the default for pair distance when
/// q^k <= 2^22.

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sympair/code.hpp"
#include "sympair/linalg.hpp"
#include "sympair/support.hpp"

namespace sympair {

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

enum class DistanceKind { kHamming, kPair };
enum class Method { kAuto, kFullEnumeration, kSupportRank };

std::string to_string(DistanceKind kind);
std::string to_string(Method method);

struct EngineOptions {
  unsigned workers = 1;
  /// Maximum number of canonical supports examined before BudgetExceeded.
  std::uint64_t max_patterns = 200'000'000;
  /// Wall-clock cap per engine call.
  std::chrono::milliseconds time_limit{std::chrono::minutes(10)};
  /// q^k limit for full enumeration.
  std::uint64_t full_enumeration_limit = 1ull << 22;
};

struct DistanceCertificate {
  DistanceKind kind = DistanceKind::kHamming;
  /// Exact distance, or bound + 1 when exact == false ("d > search_bound").
  std::size_t value = 0;
  bool exact = false;
  Method method = Method::kSupportRank;
  std::size_t search_bound = 0;
  Word witness;  ///< empty when exact == false
  std::uint64_t scanned_digest = 0;
  std::uint64_t scanned = 0;  ///< supports or codewords examined
  std::int64_t elapsed_ms = 0;
};

/// Parity evaluations of a code restricted to supports.
class ParityEvaluator {
 public:
  /// Requires the code's root base and defining set.
  explicit ParityEvaluator(const ConstacyclicCode& code);

  /// Basis over GF(q) of the words supported inside `positions` that lie in
  /// the code; each vector is indexed like `positions`.
  std::vector<Word> null_space(std::span<const std::uint32_t> positions) const;
  /// Dimension of that space.
  std::size_t nullity(std::span<const std::uint32_t> positions) const;

 private:
  std::vector<Word> evaluations(std::span<const std::uint32_t> positions) const;

  TowerPtr tower_;
  std::vector<std::int64_t> exponents_;
  std::vector<Elem> powers_;  // xi^e, e in [0, rn)
  std::int64_t rn_;
};

/// Exact d_H if d_H <= w_max, else a "d_H > w_max" certificate.
DistanceCertificate min_hamming(const ConstacyclicCode& code, std::size_t w_max,
                                const EngineOptions& options = {}, Method method = Method::kAuto);
/// Exact d_P if d_P <= pw_max, else a "d_P > pw_max" certificate. The
/// full-enumeration engine always returns the exact value.
DistanceCertificate min_pair(const ConstacyclicCode& code, std::size_t pw_max, const EngineOptions& options = {},
                             Method method = Method::kAuto);

struct SingletonResult {
  bool mds = false;
  /// (n - d_P + 2) - k; zero for MDS symbol-pair codes.
  std::int64_t defect = 0;
};

/// Checks |C| = q^{n - d_P + 2}.
SingletonResult singleton_check(const ConstacyclicCode& code, std::size_t d_pair);

/// Whether (d_P >= d_H + 2) <=> (k < n - d_H + 1) holds for the certified
/// values. Throws unless both certificates are exact and 2 <= d_H <= n.
bool chen_relation(const ConstacyclicCode& code, const DistanceCertificate& hamming,
                   const DistanceCertificate& pair);

/// FNV-1a over 32-bit words; used for scan digests.
class Fnv1a {
 public:
  void add(std::uint64_t v);
  std::uint64_t value() const { return h_; }

 private:
  std::uint64_t h_ = 0xcbf29ce484222325ull;
};

std::string hex_digest(std::uint64_t digest);

}  // namespace sympair
