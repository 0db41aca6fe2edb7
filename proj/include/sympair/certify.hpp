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

/// @file certify.hpp
/// Family certification: Hamming distance, exclusion of every support shape
/// one below the claimed pair distance, exact pair distance, and the
/// Singleton-type MDS test.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sympair/distance.hpp"
#include "sympair/families.hpp"
#include "sympair/support.hpp"

namespace sympair {

struct ShapeClass {
  std::size_t n = 0;
  std::size_t pw = 0;
  std::vector<SupportPattern> shapes;  ///< canonical, ordered by size then lexicographically
};

/// All rotation classes of supports of Z_n with pair weight pw, 2 <= pw <= n.
ShapeClass enumerate_shapes(std::size_t n, std::size_t pw);

struct ExclusionReport {
  SupportPattern pattern;
  /// A codeword with support exactly `pattern` exists.
  bool admissible = false;
  std::optional<Word> fully_nonzero_witness;
  /// Dimension of the codewords supported inside the pattern.
  std::size_t nullity = 0;
};

/// Exact test for a codeword whose support is the whole pattern. The null
/// space of the restricted parity evaluations is enumerated when its
/// dimension is at most 3; the count of fully nonzero vectors is also
/// obtained by inclusion-exclusion over coordinate hyperplanes and the two
/// must agree.
ExclusionReport exclude_pattern(const ConstacyclicCode& code, const SupportPattern& pattern);

/// Number of vectors in span(basis) (rows over GF(q), all of length s) that
/// are nonzero in every coordinate. Requires s <= 24.
std::uint64_t count_fully_nonzero(const Field& field, const std::vector<Word>& basis, std::size_t s);

enum class CertStatus { kMdsConfirmed, kDiscrepancy, kBudgetExceeded };
std::string to_string(CertStatus status);

struct CertifyOptions {
  EngineOptions engine;
  std::optional<std::size_t> w_max;   ///< default: claimed d_P
  std::optional<std::size_t> pw_max;  ///< default: claimed d_P
};

struct FamilyCertificate {
  FamilyId family = FamilyId::kDp7;
  std::uint64_t q = 0;
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<std::uint32_t> generator;  ///< coefficient indices, low degree first
  std::vector<std::int64_t> defining_set;
  std::optional<std::size_t> claimed_dH;
  std::size_t claimed_dP = 0;
  std::optional<DistanceCertificate> d_H;
  std::optional<DistanceCertificate> d_P;
  bool lemma3_ok = false;
  std::size_t sweep_pw = 0;
  std::size_t shapes_swept = 0;
  std::vector<SupportPattern> admissible_shapes;  ///< shapes at sweep_pw that carry a codeword
  std::int64_t singleton_defect = 0;
  int bch_bound = 0;
  int hartmann_tzeng_bound = 0;
  CertStatus status = CertStatus::kDiscrepancy;
  std::vector<std::string> notes;
};

/// Inadmissible q throws Error; budget exhaustion yields kBudgetExceeded.
FamilyCertificate certify_family(FamilyId id, std::uint64_t q, const CertifyOptions& options = {});

}  // namespace sympair
