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

#include "cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "sympair/certify.hpp"
#include "sympair/cyclotomic.hpp"
#include "sympair/decomp.hpp"
#include "sympair/serialize.hpp"

namespace sympair::cli {

namespace {

using nlohmann::json;

struct RunConfig {
  std::string family;
  std::uint64_t q = 0;
  std::size_t n = 0;
  std::int64_t lambda = 1;
  std::string generator;
  std::string defining_set;
  std::string qs;
  bool pair = false;
  std::size_t pw_max = 0;  // 0: command default
  std::size_t w_max = 0;
  unsigned workers = 1;
  std::string out;
  std::string format = "json";
  bool timing = false;
};

std::vector<std::int64_t> parse_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    std::size_t used = 0;
    const long long v = std::stoll(item.substr(b), &used);
    if (item.find_first_not_of(" \t", b + used) != std::string::npos) throw Error("bad list item '" + item + "'");
    out.push_back(v);
  }
  return out;
}

TowerPtr tower_for(std::uint64_t q) {
  if (q < 3 || q % 2 == 0) throw Error("q must be an odd prime power, got " + std::to_string(q));
  const auto [p, m] = split_prime_power(q);
  if (static_cast<std::uint64_t>(q) * q > Field::kTableLimit) throw Error("q^2 exceeds the field table limit");
  return Tower::make(p, m);
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw Error("cannot write " + cfg.out);
  f << text;
}

std::string describe(const DistanceCertificate& c) {
  std::ostringstream s;
  s << (c.exact ? "" : "> ") << (c.exact ? c.value : c.search_bound) << " (" << to_string(c.method)
    << (c.exact ? ", exact" : ", lower bound") << ", scanned " << c.scanned << ")";
  return s.str();
}

int cmd_construct(const RunConfig& cfg, std::ostream& out) {
  const FamilyId id = parse_family(cfg.family);
  const ConstacyclicCode code = build(id, cfg.q);
  if (cfg.format == "text") {
    std::ostringstream s;
    s << "family " << cfg.family << "  q " << cfg.q << "\n"
      << "n " << code.length() << "\nk " << code.dimension() << "\n"
      << "generator " << code.generator().to_string() << "\n"
      << "defining set";
    for (auto t : code.defining_set()->residues) s << ' ' << t;
    s << "\n";
    emit(cfg, s.str(), out);
  } else {
    json doc = to_json(code);
    doc["family"] = cfg.family;
    doc["q"] = cfg.q;
    emit(cfg, dump(doc), out);
  }
  return kOk;
}

std::string certificate_text(const FamilyCertificate& c) {
  std::ostringstream s;
  s << "family " << to_string(c.family) << "  q " << c.q << "  n " << c.n << "  k " << c.k << "\n";
  if (c.d_H) {
    s << "d_H " << describe(*c.d_H);
    if (c.claimed_dH) s << "  claimed " << *c.claimed_dH;
    s << "\n";
  }
  if (c.d_P) s << "d_P " << describe(*c.d_P) << "  claimed " << c.claimed_dP << "\n";
  s << "shapes swept at pair weight " << c.sweep_pw << ": " << c.shapes_swept << ", admissible "
    << c.admissible_shapes.size() << "\n"
    << "bch " << c.bch_bound << "  hartmann-tzeng " << c.hartmann_tzeng_bound << "  pair relation "
    << (c.lemma3_ok ? "ok" : "FAIL") << "  singleton defect " << c.singleton_defect << "\n";
  for (const auto& note : c.notes) s << "note: " << note << "\n";
  s << "status " << to_string(c.status) << "\n";
  return s.str();
}

int status_code(CertStatus s) {
  switch (s) {
    case CertStatus::kMdsConfirmed:
      return kOk;
    case CertStatus::kDiscrepancy:
      return kDiscrepancy;
    case CertStatus::kBudgetExceeded:
      return kBudgetExceeded;
  }
  return kDiscrepancy;
}

CertifyOptions certify_options(const RunConfig& cfg) {
  CertifyOptions o;
  o.engine.workers = cfg.workers;
  if (cfg.w_max) o.w_max = cfg.w_max;
  if (cfg.pw_max) o.pw_max = cfg.pw_max;
  return o;
}

int cmd_certify(const RunConfig& cfg, std::ostream& out) {
  const FamilyId id = parse_family(cfg.family);
  const FamilyCertificate cert = certify_family(id, cfg.q, certify_options(cfg));
  const std::string body = cfg.format == "text" ? certificate_text(cert) : dump(to_json(cert, cfg.timing));
  emit(cfg, body, out);
  if (!cfg.out.empty()) out << to_string(cert.status) << "\n";
  return status_code(cert.status);
}

int cmd_distance(const RunConfig& cfg, std::ostream& out) {
  const TowerPtr tower = tower_for(cfg.q);
  const Field& f = tower->small();
  if (cfg.n < 1) throw Error("--n must be positive");
  const Elem lambda = f.from_int(cfg.lambda);
  if (lambda == Field::zero()) throw Error("--lambda must be nonzero in GF(q)");
  if (cfg.generator.empty() == cfg.defining_set.empty()) {
    throw Error("give exactly one of --generator and --defining-set");
  }
  Poly g(tower->small_ptr());
  if (!cfg.generator.empty()) {
    std::vector<Elem> coeffs;
    for (auto v : parse_list(cfg.generator)) {
      if (v < 0 || v >= static_cast<std::int64_t>(f.size())) {
        throw Error("generator coefficient " + std::to_string(v) + " is not an element index of GF(q)");
      }
      coeffs.push_back(Elem{static_cast<std::uint32_t>(v)});
    }
    g = Poly(tower->small_ptr(), coeffs);
    if (g.is_zero()) throw Error("generator must be nonzero");
    g = g.monic();
  } else {
    const auto xi = default_root_base(*tower, cfg.n, lambda);
    if (!xi) throw Error("n ord(lambda) does not divide q^2 - 1; use --generator");
    DefiningSet T;
    T.n = static_cast<std::int64_t>(cfg.n);
    T.r = static_cast<std::int64_t>(f.order(lambda));
    for (auto t : parse_list(cfg.defining_set)) T.residues.push_back(mod_floor(t, T.modulus()));
    std::sort(T.residues.begin(), T.residues.end());
    T.residues.erase(std::unique(T.residues.begin(), T.residues.end()), T.residues.end());
    g = generator_from_defining_set(*tower, T, *xi);
  }
  const ConstacyclicCode code = ConstacyclicCode::make(tower, cfg.n, lambda, g);
  if (code.dimension() == 0) throw Error("zero-dimensional code has no minimum distance");

  EngineOptions engine;
  engine.workers = cfg.workers;
  json doc;
  doc["code"] = to_json(code);
  const auto h = min_hamming(code, cfg.w_max ? cfg.w_max : cfg.n, engine);
  doc["d_H"] = to_json(h, cfg.timing);
  std::optional<DistanceCertificate> p;
  if (cfg.pair) {
    p = min_pair(code, cfg.pw_max ? cfg.pw_max : cfg.n, engine);
    doc["d_P"] = to_json(*p, cfg.timing);
  }
  json bch = nullptr, anchored = nullptr, ht = nullptr;
  if (code.defining_set()) {
    bch = bch_bound(*code.defining_set());
    anchored = bch_bound_anchored(*code.defining_set());
    if (code.is_cyclic()) ht = hartmann_tzeng_bound(*code.defining_set());
  }
  doc["bch_bound"] = bch;
  doc["bch_bound_anchored"] = anchored;
  doc["hartmann_tzeng_bound"] = ht;

  if (cfg.format == "text") {
    std::ostringstream s;
    s << "[" << code.length() << ", " << code.dimension() << "] code over GF(" << cfg.q << "), lambda "
      << code.lambda().v << "\n";
    s << "d_H " << describe(h) << "\n";
    if (p) s << "d_P " << describe(*p) << "\n";
    s << "bch " << bch.dump() << "  bch(anchored) " << anchored.dump() << "  hartmann-tzeng " << ht.dump() << "\n";
    emit(cfg, s.str(), out);
  } else {
    emit(cfg, dump(doc), out);
  }
  return kOk;
}

int cmd_table(const RunConfig& cfg, std::ostream& out) {
  std::vector<FamilyId> ids = all_families();
  if (!cfg.family.empty()) ids = {parse_family(cfg.family)};
  const CertifyOptions options = certify_options(cfg);
  json rows = json::array();
  std::ostringstream s;
  s << std::left << std::setw(9) << "family" << std::setw(5) << "q" << std::setw(5) << "n" << std::setw(5) << "k"
    << std::setw(5) << "d_H" << std::setw(5) << "d_P"
    << "status\n";
  for (auto q : parse_list(cfg.qs)) {
    if (q < 3) throw Error("q must be an odd prime power, got " + std::to_string(q));
    for (FamilyId id : ids) {
      if (family_spec(id).inadmissible(static_cast<std::uint64_t>(q))) continue;
      const FamilyCertificate c = certify_family(id, static_cast<std::uint64_t>(q), options);
      const json dh = c.d_H ? json(c.d_H->value) : json(nullptr);
      const json dp = c.d_P ? json(c.d_P->value) : json(nullptr);
      rows.push_back({{"family", to_string(id)},
                      {"q", q},
                      {"n", c.n},
                      {"k", c.k},
                      {"d_H", dh},
                      {"d_P", dp},
                      {"status", to_string(c.status)}});
      s << std::setw(9) << to_string(id) << std::setw(5) << q << std::setw(5) << c.n << std::setw(5) << c.k
        << std::setw(5) << dh.dump() << std::setw(5) << dp.dump() << to_string(c.status) << "\n";
    }
  }
  emit(cfg, cfg.format == "text" ? s.str() : dump(rows), out);
  return kOk;
}

int cmd_check(const RunConfig& cfg, std::ostream& out) {
  const std::uint64_t q = cfg.q;
  tower_for(q);
  json doc;
  doc["q"] = q;
  bool ok = true;
  doc["subcode"] = nullptr;
  if (q % 4 == 3) {
    const bool sub = subcode_check(q);
    doc["subcode"] = sub;
    ok = ok && sub;
  }
  doc["dual_generator"] = nullptr;
  if (q > 3) {
    const ConstacyclicCode code = build(FamilyId::kDp9, q);
    const DecompositionPair parts = decompose(code);
    const Tower& tower = code.tower();
    const Elem xi = *code.root_base();
    const Poly closed = dual_generator_closed_form(tower, xi);
    const bool rec = closed == dual_generator_recurrence(tower, xi);
    const bool div = closed == dual_generator_division(tower, xi);
    const bool dual_gen = closed.monic() == dual(parts.c2).generator();
    doc["dual_generator"] = {{"b", to_json(closed)},
                             {"recurrence_agrees", rec},
                             {"division_agrees", div},
                             {"equals_dual_of_c2", dual_gen},
                             {"join_round_trip", same_code(join(parts.c1, parts.c2), code)}};
    ok = ok && rec && div && dual_gen;
  }
  json witnesses = json::object();
  for (FamilyId id : {FamilyId::kDp7, FamilyId::kDp8, FamilyId::kDp9}) {
    if (family_spec(id).inadmissible(q) || q == 3) continue;
    const Word w = witness_low_weight(id, q);
    witnesses[to_string(id)] = {{"weight", hamming_weight(w)}, {"support", support(w)}};
  }
  doc["witnesses"] = witnesses;
  doc["ok"] = ok;
  emit(cfg, dump(doc), out);
  return ok ? kOk : kDiscrepancy;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact construction and certification of MDS symbol-pair cyclic codes", "sympair"};
  app.require_subcommand(1);
  RunConfig cfg;
  const std::vector<std::string> formats = {"json", "text"};

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", cfg.out, "Write the result to this file");
    sub->add_option("--format", cfg.format, "json or text")->check(CLI::IsMember(formats));
  };
  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--pw-max", cfg.pw_max, "Largest pair weight searched")->check(CLI::PositiveNumber);
    sub->add_option("--w-max", cfg.w_max, "Largest Hamming weight searched")->check(CLI::PositiveNumber);
    sub->add_option("--workers", cfg.workers, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_flag("--timing", cfg.timing, "Record wall-clock times in certificates");
  };

  auto* construct = app.add_subcommand("construct", "Print a family code");
  construct->add_option("--family", cfg.family, "dp7, dp8, dp9 or kai_dp7")->required();
  construct->add_option("--q", cfg.q, "Field size")->required();
  add_common(construct);

  auto* certify = app.add_subcommand("certify", "Certify a family instance");
  certify->add_option("--family", cfg.family, "dp7, dp8, dp9 or kai_dp7")->required();
  certify->add_option("--q", cfg.q, "Field size")->required();
  add_common(certify);
  add_budget(certify);

  auto* distance = app.add_subcommand("distance", "Exact distances of a constacyclic code");
  distance->add_option("--q", cfg.q, "Field size")->required();
  distance->add_option("--n", cfg.n, "Code length")->required();
  distance->add_option("--lambda", cfg.lambda, "Shift constant as an integer (default 1)");
  distance->add_option("--generator", cfg.generator, "Generator coefficient indices, low degree first");
  distance->add_option("--defining-set", cfg.defining_set, "Root exponents of the generator");
  distance->add_flag("--pair", cfg.pair, "Also compute the pair distance");
  add_common(distance);
  add_budget(distance);

  auto* table = app.add_subcommand("table", "Certify families over a list of q");
  table->add_option("--qs", cfg.qs, "Comma-separated field sizes")->required();
  table->add_option("--family", cfg.family, "Restrict to one family");
  add_common(table);
  add_budget(table);

  auto* check = app.add_subcommand("check", "Subcode, dual-generator and witness checks at one q");
  check->add_option("--q", cfg.q, "Field size")->required();
  add_common(check);

  std::vector<std::string> argv_store = {"sympair"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (*construct) return cmd_construct(cfg, out);
    if (*certify) return cmd_certify(cfg, out);
    if (*distance) return cmd_distance(cfg, out);
    if (*table) return cmd_table(cfg, out);
    if (*check) return cmd_check(cfg, out);
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kBudgetExceeded;
  } catch (const InvariantError& e) {
    err << "internal invariant violated: " << e.what() << "\n";
    return kDiscrepancy;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kBadInput;
}

}  // namespace sympair::cli
