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

/// @file support.hpp
/// Supports of words on Z_n up to rotation.
///
/// A support S (sorted positions) is described by its cyclic difference
/// sequence d_1, ..., d_|S| (d_j = gap from the j-th to the next position,
/// summing to n). S is canonical when it contains 0 and its position list is
/// the lexicographically smallest among all rotations of S that place one of
/// its points at 0; equivalently, its difference sequence is the smallest of
/// its rotations. Every rotation class has exactly one canonical member.
///
/// The pair weight of a support is |S ∪ (S - 1)|, which for S != Z_n equals
/// |S| plus the number of maximal cyclic runs in S (the number of d_j >= 2).

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace sympair {

struct SupportPattern {
  std::size_t n = 0;
  std::vector<std::uint32_t> positions;  ///< sorted
  bool canonical = false;

  std::size_t size() const { return positions.size(); }
};

std::size_t pair_weight_of_support(std::size_t n, std::span<const std::uint32_t> positions);
bool is_canonical_support(std::size_t n, std::span<const std::uint32_t> positions);
/// The canonical rotation of a nonempty support (positions need not be sorted).
SupportPattern canonical_rotation(std::size_t n, std::span<const std::uint32_t> positions);

/// Visitor returns false to stop early.
using SupportVisitor = std::function<bool(std::span<const std::uint32_t>)>;

/// Visits canonical supports of the given size in lexicographic order of
/// their position lists. runs < 0 means any number of runs; otherwise only
/// supports with exactly that many maximal runs (runs = 0 is Z_n itself).
/// Returns false if the visitor stopped the scan.
bool for_each_canonical_support(std::size_t n, std::size_t size, int runs, const SupportVisitor& visit);

/// Visits canonical supports with pair weight exactly pw, ordered by size then
/// lexicographically.
bool for_each_canonical_by_pair_weight(std::size_t n, std::size_t pw, const SupportVisitor& visit);

}  // namespace sympair
