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

#include <bit>
#include <map>
#include <set>

#include "oracles.hpp"
#include "sympair/support.hpp"

using namespace sympair;

namespace {

std::vector<std::uint32_t> positions_of(std::uint64_t mask, std::size_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (mask >> i & 1) out.push_back(i);
  }
  return out;
}

std::uint64_t mask_of(std::span<const std::uint32_t> positions) {
  std::uint64_t m = 0;
  for (auto p : positions) m |= 1ull << p;
  return m;
}

// Lexicographically smallest sorted position list among the rotations that
// move one of the support's points to 0.
std::vector<std::uint32_t> canonical_oracle(std::uint64_t mask, std::size_t n) {
  const auto pos = positions_of(mask, n);
  std::vector<std::uint32_t> best;
  for (auto shift : pos) {
    std::vector<std::uint32_t> rot;
    for (auto p : pos) rot.push_back(static_cast<std::uint32_t>((p + n - shift) % n));
    std::sort(rot.begin(), rot.end());
    if (best.empty() || rot < best) best = rot;
  }
  return best;
}

std::size_t runs_oracle(std::uint64_t mask, std::size_t n) {
  std::size_t runs = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if ((mask >> i & 1) && !(mask >> ((i + n - 1) % n) & 1)) ++runs;
  }
  return runs;
}

}  // namespace

TEST_CASE("pair weight of supports") {
  const std::vector<std::uint32_t> single{3};
  CHECK(pair_weight_of_support(10, single) == 2);
  const std::vector<std::uint32_t> run{0, 1, 2, 3, 7};
  CHECK(pair_weight_of_support(12, run) == 7);
  for (std::uint32_t l = 5; l < 11; ++l) {
    const std::vector<std::uint32_t> s{0, 1, 2, 3, l};
    CHECK(pair_weight_of_support(12, s) == 7);
  }
  const std::vector<std::uint32_t> all{0, 1, 2, 3, 4, 5};
  CHECK(pair_weight_of_support(6, all) == 6);
  for (std::size_t n : {5u, 8u, 11u}) {
    for (std::uint64_t mask = 1; mask < (1ull << n); ++mask) {
      REQUIRE(pair_weight_of_support(n, positions_of(mask, n)) == oracle::pair_weight_mask(mask, n));
    }
  }
}

TEST_CASE("canonical rotation matches the rotation oracle") {
  for (std::size_t n : {6u, 9u, 12u}) {
    for (std::uint64_t mask = 1; mask < (1ull << n); ++mask) {
      const auto pos = positions_of(mask, n);
      const auto expect = canonical_oracle(mask, n);
      const auto canon = canonical_rotation(n, pos);
      REQUIRE(canon.positions == expect);
      REQUIRE(canon.canonical);
      REQUIRE(is_canonical_support(n, pos) == (pos == expect));
    }
  }
  const std::vector<std::uint32_t> unsorted{7, 2};
  CHECK(canonical_rotation(10, unsorted).positions == std::vector<std::uint32_t>{0, 5});
  CHECK_THROWS_AS(canonical_rotation(10, std::vector<std::uint32_t>{}), Error);
  CHECK_THROWS_AS(pair_weight_of_support(4, std::vector<std::uint32_t>{4}), Error);
}

TEST_CASE("canonical enumeration covers every rotation class exactly once") {
  for (std::size_t n = 2; n <= 16; ++n) {
    // Brute force: class representatives by minimal rotated bitmask.
    std::map<std::pair<std::size_t, std::size_t>, std::set<std::uint64_t>> by_pw_size;
    std::map<std::tuple<std::size_t, std::size_t>, std::set<std::uint64_t>> by_size_runs;
    for (std::uint64_t mask = 1; mask < (1ull << n); ++mask) {
      const std::uint64_t rep = oracle::min_rotation_mask(mask, n);
      const std::size_t size = static_cast<std::size_t>(std::popcount(mask));
      by_pw_size[{oracle::pair_weight_mask(mask, n), size}].insert(rep);
      by_size_runs[{size, runs_oracle(mask, n)}].insert(rep);
    }
    for (std::size_t pw = 2; pw <= n; ++pw) {
      std::set<std::uint64_t> seen;
      std::size_t last_size = 0;
      std::vector<std::uint32_t> last;
      std::size_t expected = 0;
      for (const auto& [key, reps] : by_pw_size) {
        if (key.first == pw) expected += reps.size();
      }
      for_each_canonical_by_pair_weight(n, pw, [&](std::span<const std::uint32_t> s) {
        const std::vector<std::uint32_t> v(s.begin(), s.end());
        REQUIRE(is_canonical_support(n, v));
        REQUIRE(pair_weight_of_support(n, v) == pw);
        REQUIRE(seen.insert(oracle::min_rotation_mask(mask_of(v), n)).second);
        REQUIRE(v.size() >= last_size);
        if (v.size() == last_size) REQUIRE(last < v);
        last_size = v.size();
        last = v;
        return true;
      });
      REQUIRE(seen.size() == expected);
    }
    for (std::size_t size = 1; size <= n; ++size) {
      for (int runs = 0; runs <= static_cast<int>(n / 2); ++runs) {
        std::size_t count = 0;
        for_each_canonical_support(n, size, runs, [&](std::span<const std::uint32_t> s) {
          REQUIRE(runs_oracle(mask_of(s), n) == static_cast<std::size_t>(runs));
          ++count;
          return true;
        });
        const auto it = by_size_runs.find({size, static_cast<std::size_t>(runs)});
        REQUIRE(count == (it == by_size_runs.end() ? 0 : it->second.size()));
      }
    }
  }
}

TEST_CASE("n = 12, pair weight 8 shape count") {
  std::set<std::uint64_t> reps;
  for (std::uint64_t mask = 1; mask < (1ull << 12); ++mask) {
    if (oracle::pair_weight_mask(mask, 12) == 8) reps.insert(oracle::min_rotation_mask(mask, 12));
  }
  std::size_t count = 0;
  for_each_canonical_by_pair_weight(12, 8, [&](std::span<const std::uint32_t>) {
    ++count;
    return true;
  });
  CHECK(count == reps.size());
}

TEST_CASE("visitor can stop the scan") {
  int calls = 0;
  const bool finished = for_each_canonical_by_pair_weight(10, 6, [&](std::span<const std::uint32_t>) {
    return ++calls < 3;
  });
  CHECK_FALSE(finished);
  CHECK(calls == 3);
}
