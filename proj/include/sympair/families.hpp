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

/// @file families.hpp
/// The MDS symbol-pair cyclic code families and their reference code.
///
///   id       q            n        roots of g (exponents of xi)      k       d_P
///   dp7      1 mod 4      4q + 4   0, n/2, 1, q, q + 1               4q - 1  7
///   dp8      3 mod 4      4q - 4   0, n/2, 1, q, 2, 2q               4q - 10 8
///   kai_dp7  3 mod 4      4q - 4   0, 1, q, 2, 2q                    4q - 9  7
///   dp9      odd          2q + 2   cosets of -1, 0, 1, 2             2q - 5  9
///
/// xi is a primitive n-th root of unity in GF(q^2); n always divides q^2 - 1.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sympair/code.hpp"
#include "sympair/distance.hpp"

namespace sympair {

enum class FamilyId { kDp7, kDp8, kDp9, kKaiDp7 };

std::string to_string(FamilyId id);
/// Accepts "dp7", "dp8", "dp9", "kai_dp7".
FamilyId parse_family(const std::string& name);
const std::vector<FamilyId>& all_families();

struct FamilySpec {
  FamilyId id;
  std::string name;
  std::string congruence;  ///< human-readable admissibility condition
  std::size_t claimed_dP;

  /// Diagnostic if q is not admissible, empty otherwise.
  std::optional<std::string> inadmissible(std::uint64_t q) const;
  std::size_t length(std::uint64_t q) const;
  std::size_t dimension(std::uint64_t q) const;
  /// Empty for kai_dp7, whose d_H is not part of the claim.
  std::optional<std::size_t> claimed_dH(std::uint64_t q) const;
  /// Root exponents of the generator, before closing under x -> x^q.
  std::vector<std::int64_t> root_exponents(std::uint64_t q) const;
};

const FamilySpec& family_spec(FamilyId id);

/// Builds the family code. The generator is assembled from linear factors
/// in GF(q^2) and cross-checked against a product of minimal polynomials.
/// xi defaults to nth_root_of_unity(GF(q^2), n).
ConstacyclicCode build(FamilyId id, std::uint64_t q, std::optional<Elem> xi = std::nullopt);

/// The explicit low-weight codeword from the Hamming-distance argument of
/// each family: weight 4 for dp7 and dp8, weight 6 for dp9. Throws for
/// kai_dp7 and for the degenerate q = 3 cases of dp8 and dp9.
Word witness_low_weight(const ConstacyclicCode& code, FamilyId id);
Word witness_low_weight(FamilyId id, std::uint64_t q);

/// dp8 is contained in kai_dp7 (same q and root). Requires q = 3 mod 4.
bool subcode_check(std::uint64_t q);

struct RootChoice {
  std::int64_t exponent;  ///< xi = xi_0^exponent, xi_0 the default root
  std::size_t d_H;
  std::size_t d_P;
};

struct StabilityReport {
  FamilyId id;
  std::uint64_t q;
  std::vector<RootChoice> choices;
  bool stable;
};

/// Rebuilds the family for every primitive n-th root of unity and certifies
/// (d_H, d_P) for each.
StabilityReport root_choice_stability(FamilyId id, std::uint64_t q, const EngineOptions& options = {});

}  // namespace sympair
