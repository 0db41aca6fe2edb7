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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "oracles.hpp"
#include "sympair/families.hpp"
#include "sympair/serialize.hpp"

using namespace sympair;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "sympair_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("construct") {
  auto r = run({"construct", "--family", "dp9", "--q", "5"});
  REQUIRE(r.code == cli::kOk);
  auto doc = json::parse(r.out);
  CHECK(doc["n"] == 12);
  CHECK(doc["k"] == 5);

  r = run({"construct", "--family", "dp8", "--q", "11"});
  REQUIRE(r.code == cli::kOk);
  doc = json::parse(r.out);
  CHECK(doc["n"] == 40);
  CHECK(doc["k"] == 34);

  r = run({"construct", "--family", "dp7", "--q", "7"});
  CHECK(r.code == cli::kBadInput);
  CHECK(r.err.find("mod 4") != std::string::npos);

  CHECK(run({"construct", "--family", "dp9", "--q", "5", "--format", "text"}).code == cli::kOk);
  CHECK(run({"construct", "--family", "nope", "--q", "5"}).code == cli::kBadInput);
  CHECK(run({"construct", "--q", "5"}).code == cli::kBadInput);
  CHECK(run({"construct", "--family", "dp9", "--q", "6"}).code == cli::kBadInput);
  CHECK(run({"construct", "--family", "dp9", "--q", "5", "--format", "xml"}).code == cli::kBadInput);
  CHECK(run({"bogus"}).code == cli::kBadInput);
  CHECK(run({}).code == cli::kBadInput);
}

TEST_CASE("certify exit codes") {
  auto r = run({"certify", "--family", "dp8", "--q", "7"});
  CHECK(r.code == cli::kOk);
  auto doc = json::parse(r.out);
  CHECK(doc["status"] == "MDS_CONFIRMED");
  CHECK(doc["d_P"]["value"] == 8);
  CHECK(doc["d_H"]["value"] == 4);
  CHECK(doc["d_P"]["elapsed_ms"] == 0);

  r = run({"certify", "--family", "dp9", "--q", "3"});
  CHECK(r.code == cli::kDiscrepancy);
  doc = json::parse(r.out);
  CHECK(doc["status"] == "DISCREPANCY");
  CHECK(doc["d_P"]["value"] == 8);

  CHECK(run({"certify", "--family", "dp9", "--q", "5"}).code == cli::kOk);
  CHECK(run({"certify", "--family", "dp9", "--q", "5", "--workers", "0"}).code == cli::kBadInput);
  CHECK(run({"certify", "--family", "dp7", "--q", "5", "--pw-max", "6"}).code == cli::kDiscrepancy);
  CHECK(run({"certify", "--family", "dp7", "--q", "5", "--format", "text"}).code == cli::kOk);
}

TEST_CASE("certificate files are byte-identical across runs") {
  const auto a = scratch("a.json");
  const auto b = scratch("b.json");
  for (const auto& [family, q] : {std::pair<std::string, std::string>{"dp7", "5"}, {"dp9", "7"}, {"dp9", "3"}}) {
    run({"certify", "--family", family, "--q", q, "--workers", "1", "--out", a.string()});
    run({"certify", "--family", family, "--q", q, "--workers", "1", "--out", b.string()});
    const std::string sa = slurp(a);
    CHECK_FALSE(sa.empty());
    CHECK(sa == slurp(b));
  }
  const auto r = run({"certify", "--family", "dp7", "--q", "5", "--timing", "--out", a.string()});
  CHECK(r.code == cli::kOk);
  CHECK(r.out == "MDS_CONFIRMED\n");
}

TEST_CASE("distance") {
  const auto dp8 = build(FamilyId::kDp8, 3);
  std::string ds;
  for (auto t : dp8.defining_set()->residues) ds += (ds.empty() ? "" : ",") + std::to_string(t);
  auto r = run({"distance", "--q", "3", "--n", "8", "--defining-set", ds, "--pair"});
  REQUIRE(r.code == cli::kOk);
  auto doc = json::parse(r.out);
  CHECK(doc["d_H"]["value"] == 6);
  CHECK(doc["d_P"]["value"] == 8);

  std::string gen;
  for (auto v : dp8.generator().indices()) gen += (gen.empty() ? "" : ",") + std::to_string(v);
  r = run({"distance", "--q", "3", "--n", "8", "--generator", gen, "--pair"});
  REQUIRE(r.code == cli::kOk);
  CHECK(json::parse(r.out)["d_P"]["value"] == 8);

  // x^8 - 1 itself: zero-dimensional.
  CHECK(run({"distance", "--q", "3", "--n", "8", "--generator", "2,0,0,0,0,0,0,0,1"}).code == cli::kBadInput);
  CHECK(run({"distance", "--q", "3", "--n", "8"}).code == cli::kBadInput);
  CHECK(run({"distance", "--q", "3", "--n", "8", "--generator", "1", "--defining-set", "0"}).code ==
        cli::kBadInput);
  CHECK(run({"distance", "--q", "3", "--n", "8", "--generator", "1,1,1"}).code == cli::kBadInput);
  // {1} alone is not closed under multiplication by 3 modulo 8.
  CHECK(run({"distance", "--q", "3", "--n", "8", "--defining-set", "1"}).code == cli::kBadInput);
  CHECK(run({"distance", "--q", "5", "--n", "12", "--lambda", "5", "--generator", "1"}).code == cli::kBadInput);
  CHECK(run({"distance", "--q", "5", "--n", "12", "--lambda", "-1", "--defining-set", "1,5", "--pair", "--format",
             "text"})
            .code == cli::kOk);
}

TEST_CASE("distance on random [12, 7] cyclic codes matches enumeration") {
  std::mt19937_64 rng(404);
  const auto tower = Tower::make(5, 1);
  int checked = 0;
  while (checked < 6) {
    const auto code = oracle::random_code(rng, tower, 12, Field::one(), 0.5);
    if (code.dimension() != 7) continue;
    std::string gen;
    for (auto v : code.generator().indices()) gen += (gen.empty() ? "" : ",") + std::to_string(v);
    const auto r = run({"distance", "--q", "5", "--n", "12", "--generator", gen, "--pair"});
    REQUIRE(r.code == cli::kOk);
    const auto doc = json::parse(r.out);
    const auto truth = oracle::brute_force_distances(code);
    CHECK(doc["d_H"]["value"] == truth.hamming);
    CHECK(doc["d_P"]["value"] == truth.pair);
    ++checked;
  }
}

TEST_CASE("table") {
  auto r = run({"table", "--qs", "5,9,13", "--family", "dp7"});
  REQUIRE(r.code == cli::kOk);
  auto rows = json::parse(r.out);
  REQUIRE(rows.size() == 3);
  for (const auto& row : rows) CHECK(row["status"] == "MDS_CONFIRMED");

  r = run({"table", "--qs", "3,7,11", "--family", "dp8"});
  REQUIRE(r.code == cli::kOk);
  rows = json::parse(r.out);
  REQUIRE(rows.size() == 3);
  for (const auto& row : rows) CHECK(row["status"] == "MDS_CONFIRMED");

  r = run({"table", "--qs", ""});
  CHECK(r.code == cli::kOk);
  CHECK(json::parse(r.out).empty());
  r = run({"table", "--qs", "", "--format", "text"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("family") == 0);

  r = run({"table", "--qs", "3", "--format", "text"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("DISCREPANCY") != std::string::npos);
  CHECK(run({"table", "--qs", "1"}).code == cli::kBadInput);
}

TEST_CASE("check") {
  auto r = run({"check", "--q", "7"});
  CHECK(r.code == cli::kOk);
  r = run({"check", "--q", "5"});
  CHECK(r.code == cli::kOk);
  CHECK(run({"check", "--q", "4"}).code == cli::kBadInput);
}
