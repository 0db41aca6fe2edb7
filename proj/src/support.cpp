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

#include "sympair/support.hpp"

#include <algorithm>

#include "sympair/field.hpp"

namespace sympair {

namespace {

std::vector<std::uint32_t> differences(std::size_t n, std::span<const std::uint32_t> sorted) {
  std::vector<std::uint32_t> d(sorted.size());
  for (std::size_t j = 0; j < sorted.size(); ++j) {
    const std::size_t next = j + 1 < sorted.size() ? sorted[j + 1] : sorted[0] + n;
    d[j] = static_cast<std::uint32_t>(next - sorted[j]);
  }
  return d;
}

// Index of the lexicographically smallest rotation (first one on ties).
std::size_t min_rotation(const std::vector<std::uint32_t>& d) {
  const std::size_t s = d.size();
  std::size_t best = 0;
  for (std::size_t r = 1; r < s; ++r) {
    for (std::size_t i = 0; i < s; ++i) {
      const auto a = d[(r + i) % s];
      const auto b = d[(best + i) % s];
      if (a != b) {
        if (a < b) best = r;
        break;
      }
    }
  }
  return best;
}

bool is_min_rotation(std::span<const std::uint32_t> d) {
  const std::size_t s = d.size();
  for (std::size_t r = 1; r < s; ++r) {
    for (std::size_t i = 0; i < s; ++i) {
      const auto a = d[(r + i) % s];
      if (a != d[i]) {
        if (a < d[i]) return false;
        break;
      }
    }
  }
  return true;
}

std::vector<std::uint32_t> sorted_unique(std::size_t n, std::span<const std::uint32_t> positions) {
  std::vector<std::uint32_t> s(positions.begin(), positions.end());
  for (auto p : s) {
    if (p >= n) throw Error("support position " + std::to_string(p) + " outside Z_" + std::to_string(n));
  }
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

struct CompositionScan {
  std::size_t n;
  std::size_t size;
  int runs;  // < 0: unconstrained
  const SupportVisitor* visit;
  std::vector<std::uint32_t> d;
  std::vector<std::uint32_t> positions;

  // Chooses d[i] given the remaining sum and remaining number of parts >= 2.
  bool step(std::size_t i, std::size_t remaining, int bigs_left) {
    const std::size_t parts_left = size - i;
    if (parts_left == 1) {
      const std::uint32_t last = static_cast<std::uint32_t>(remaining);
      if (runs >= 0 && (last >= 2 ? 1 : 0) != bigs_left) return true;
      if (i > 0 && last < d[0]) return true;
      d[i] = last;
      if (!is_min_rotation(d)) return true;
      positions[0] = 0;
      for (std::size_t j = 1; j < size; ++j) positions[j] = positions[j - 1] + d[j - 1];
      return (*visit)(positions);
    }
    const std::size_t lo = i > 0 ? d[0] : 1;
    const std::size_t hi = remaining - (parts_left - 1);  // others at least 1
    for (std::size_t v = lo; v <= hi; ++v) {
      int bigs = bigs_left;
      if (runs >= 0) {
        bigs -= v >= 2 ? 1 : 0;
        if (bigs < 0) break;
        const std::size_t rest_parts = parts_left - 1;
        const std::size_t rest = remaining - v;
        // The remaining parts must contain exactly `bigs` parts >= 2.
        const auto need = static_cast<std::size_t>(bigs);
        if (need > rest_parts || rest < rest_parts + need || (need == 0 && rest != rest_parts)) continue;
      }
      d[i] = static_cast<std::uint32_t>(v);
      if (!step(i + 1, remaining - v, bigs)) return false;
    }
    return true;
  }
};

}  // namespace

std::size_t pair_weight_of_support(std::size_t n, std::span<const std::uint32_t> positions) {
  const auto s = sorted_unique(n, positions);
  std::vector<bool> hit(n, false);
  for (auto p : s) {
    hit[p] = true;
    hit[(p + n - 1) % n] = true;
  }
  return static_cast<std::size_t>(std::count(hit.begin(), hit.end(), true));
}

bool is_canonical_support(std::size_t n, std::span<const std::uint32_t> positions) {
  const auto s = sorted_unique(n, positions);
  if (s.empty() || s[0] != 0) return false;
  return is_min_rotation(differences(n, s));
}

SupportPattern canonical_rotation(std::size_t n, std::span<const std::uint32_t> positions) {
  const auto s = sorted_unique(n, positions);
  if (s.empty()) throw Error("empty support has no canonical rotation");
  const auto d = differences(n, s);
  const std::size_t r = min_rotation(d);
  SupportPattern out;
  out.n = n;
  out.canonical = true;
  std::uint32_t pos = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    out.positions.push_back(pos);
    pos += d[(r + i) % d.size()];
  }
  return out;
}

bool for_each_canonical_support(std::size_t n, std::size_t size, int runs, const SupportVisitor& visit) {
  if (size == 0 || size > n) return true;
  if (runs == 0 && size != n) return true;
  if (runs > 0 && (static_cast<std::size_t>(runs) > size || size + static_cast<std::size_t>(runs) > n)) return true;
  CompositionScan scan{n, size, runs, &visit, std::vector<std::uint32_t>(size, 0),
                       std::vector<std::uint32_t>(size, 0)};
  return scan.step(0, n, runs < 0 ? 0 : runs);
}

bool for_each_canonical_by_pair_weight(std::size_t n, std::size_t pw, const SupportVisitor& visit) {
  if (pw < 2 || pw > n) return true;
  for (std::size_t size = (pw + 1) / 2; size < pw; ++size) {
    if (!for_each_canonical_support(n, size, static_cast<int>(pw - size), visit)) return false;
  }
  if (pw == n) return for_each_canonical_support(n, n, 0, visit);
  return true;
}

}  // namespace sympair
