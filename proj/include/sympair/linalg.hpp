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

/// @file linalg.hpp
/// Row reduction over a finite field.

#include <cstddef>
#include <vector>

#include "sympair/field.hpp"

namespace sympair {

struct Echelon {
  std::vector<std::vector<Elem>> rows;  ///< reduced row echelon form, nonzero rows only
  std::vector<std::size_t> pivots;      ///< pivot column of each row
};

/// Reduced row echelon form. All rows must have the same length.
Echelon row_reduce(const Field& field, std::vector<std::vector<Elem>> rows);

std::size_t rank(const Field& field, std::vector<std::vector<Elem>> rows);

/// Basis of {x : M x = 0} read off the echelon form of M (free column = 1).
std::vector<std::vector<Elem>> kernel_basis(const Field& field, const Echelon& e, std::size_t cols);

}  // namespace sympair
