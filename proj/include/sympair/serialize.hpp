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

/// @file serialize.hpp
/// JSON documents for codes and certificates. Objects have sorted keys and
/// field elements are written as their integer indices, so equal inputs give
/// byte-identical output. Wall-clock timings are written only on request;
/// otherwise elapsed_ms is 0.

#include <string>

#include <json.hpp>

#include "sympair/certify.hpp"
#include "sympair/decomp.hpp"

namespace sympair {

nlohmann::json to_json(const Field& field);
nlohmann::json to_json(const Poly& p);
nlohmann::json to_json(const DefiningSet& T);
nlohmann::json to_json(const ConstacyclicCode& code);
nlohmann::json to_json(const DistanceCertificate& cert, bool timing = false);
nlohmann::json to_json(const DecompositionPair& pair);
nlohmann::json to_json(const FamilyCertificate& cert, bool timing = false);
nlohmann::json to_json(const StabilityReport& report);

/// FNV-1a of the code's canonical JSON, as 16 hex digits.
std::string code_digest(const ConstacyclicCode& code);

/// Two-space indented dump with a trailing newline.
std::string dump(const nlohmann::json& doc);

}  // namespace sympair
