// Copyright 2026 The bwverify Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <json.hpp>

#include "bwverify/protocol.hpp"
#include "bwverify/trap_gen.hpp"

namespace bwv {

using json = nlohmann::json;

/// {"n":…, "m":…, "angles":[[k,…],…]} with angles as integers 0..7.
json angle_matrix_to_json(const AngleMatrix &angles);
AngleMatrix angle_matrix_from_json(const json &j);

json trap_to_json(const TrapInstance &trap);
TrapInstance trap_from_json(const json &j);

json flip_pattern_to_json(const FlipPattern &pattern);
FlipPattern flip_pattern_from_json(const json &j);

json transcript_to_json(const Verdict &verdict, const Transcript &t);

} // namespace bwv
