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

#include "sympair/serialize.hpp"

namespace sympair {

using nlohmann::json;

namespace {

json indices(std::span<const Elem> word) {
  json a = json::array();
  for (Elem e : word) a.push_back(e.v);
  return a;
}

}  // namespace

json to_json(const Field& field) {
  return {{"p", field.characteristic()},
          {"m", field.degree()},
          {"modulus", field.modulus()},
          {"generator", field.generator().v}};
}

json to_json(const Poly& p) { return indices(p.coeffs()); }

json to_json(const DefiningSet& T) { return {{"n", T.n}, {"r", T.r}, {"residues", T.residues}}; }

json to_json(const ConstacyclicCode& code) {
  json doc = {{"field", to_json(code.field())},
              {"n", code.length()},
              {"k", code.dimension()},
              {"lambda", code.lambda().v},
              {"generator", to_json(code.generator())}};
  doc["root_base"] = code.root_base() ? json(code.root_base()->v) : json(nullptr);
  doc["defining_set"] = code.defining_set() ? to_json(*code.defining_set()) : json(nullptr);
  return doc;
}

json to_json(const DistanceCertificate& cert, bool timing) {
  return {{"kind", to_string(cert.kind)},
          {"value", cert.value},
          {"exact", cert.exact},
          {"method", to_string(cert.method)},
          {"search_bound", cert.search_bound},
          {"witness", indices(cert.witness)},
          {"scanned_digest", hex_digest(cert.scanned_digest)},
          {"scanned", cert.scanned},
          {"elapsed_ms", timing ? cert.elapsed_ms : 0}};
}

json to_json(const DecompositionPair& pair) {
  return {{"parent_digest", code_digest(pair.parent)}, {"c1", to_json(pair.c1)}, {"c2", to_json(pair.c2)}};
}

json to_json(const FamilyCertificate& cert, bool timing) {
  json shapes = json::array();
  for (const auto& s : cert.admissible_shapes) shapes.push_back(s.positions);
  json doc = {{"family", to_string(cert.family)},
              {"q", cert.q},
              {"n", cert.n},
              {"k", cert.k},
              {"generator", cert.generator},
              {"defining_set", cert.defining_set},
              {"claimed_d_H", cert.claimed_dH ? json(*cert.claimed_dH) : json(nullptr)},
              {"claimed_d_P", cert.claimed_dP},
              {"lemma3_ok", cert.lemma3_ok},
              {"sweep_pw", cert.sweep_pw},
              {"shapes_swept", cert.shapes_swept},
              {"admissible_shapes", shapes},
              {"singleton_defect", cert.singleton_defect},
              {"bch_bound", cert.bch_bound},
              {"hartmann_tzeng_bound", cert.hartmann_tzeng_bound},
              {"status", to_string(cert.status)},
              {"notes", cert.notes}};
  doc["d_H"] = cert.d_H ? to_json(*cert.d_H, timing) : json(nullptr);
  doc["d_P"] = cert.d_P ? to_json(*cert.d_P, timing) : json(nullptr);
  return doc;
}

json to_json(const StabilityReport& report) {
  json choices = json::array();
  for (const auto& c : report.choices) choices.push_back({{"exponent", c.exponent}, {"d_H", c.d_H}, {"d_P", c.d_P}});
  return {{"family", to_string(report.id)}, {"q", report.q}, {"choices", choices}, {"stable", report.stable}};
}

std::string code_digest(const ConstacyclicCode& code) {
  Fnv1a h;
  for (unsigned char c : to_json(code).dump()) h.add(c);
  return hex_digest(h.value());
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace sympair
