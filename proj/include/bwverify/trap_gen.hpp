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

#include <stdexcept>
#include <vector>

#include "bwverify/grids.hpp"
#include "bwverify/layout.hpp"
#include "bwverify/rng.hpp"

namespace bwv {

struct MalformedTrap : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// How a row's tape was used by the R-trap sub-protocol.
enum class TapeUse : uint8_t { Hadamard, RotXY, RotZY };

/// One generated trap computation plus the coin record needed to replay or
/// predict it classically.
struct TrapInstance {
    ComputationKind kind = ComputationKind::RTrap;
    AngleMatrix angles;

    // R-trap record: tape_use[row-1][tape-1] over all w tapes.
    std::vector<std::vector<TapeUse>> tape_use;

    // C-trap record: initial_z[row-1]; brick_control_upper[k] for the k-th
    // brick of the layout's brick list (tape order).
    std::vector<uint8_t> initial_z;
    std::vector<uint8_t> brick_control_upper;

    // Deterministic last-column angle per row.
    std::vector<AngleZ8> predicted_final_angle;
};

/// Sub-protocol for rotation traps. Per row and tape a coin picks a Hadamard
/// triple (pi/2, pi/2, pi/2) or a random rotation; the counter alternates
/// rotations between the XY and ZY planes, and tape w closes the row so the
/// number of Hadamard tapes is even. The last column receives the angle that
/// makes an honest run yield outcome 0 on every row: the negated mod-2pi sum
/// of the row's random rotation angles. (The measured column teleports
/// H R_Z^dag(phi), so the wire ends in R_Z(-sum)|+>.)
TrapInstance gen_rtrap(const BwsLayout &layout, SplitRng &rng);

/// Same as gen_rtrap but accumulating the positive sum into the
/// last column. Kept as a fixture: the determinism oracle rejects it.
TrapInstance gen_rtrap_positive_sum_variant(const BwsLayout &layout, SplitRng &rng);

/// Sub-protocol for CNOT traps. Per row a coin assigns an initial logical
/// Pauli-Z (angle pi on the first column); per brick a coin picks the CNOT
/// orientation (coin 0: upper row is control). Last-column angles carry the
/// Z frame: seeded by the initial Zs and folded with phi_c += phi_t per
/// brick in tape order.
TrapInstance gen_ctrap(const BwsLayout &layout, SplitRng &rng);

/// Variant assigning pi/2 instead of pi to the flagged first-column
/// qubits. Kept as a fixture: the determinism oracle rejects it.
TrapInstance gen_ctrap_half_pi_variant(const BwsLayout &layout, SplitRng &rng);

/// O(nm) classical prediction of the expected last-column outcome, one bit
/// per row (all zeros for honestly generated traps). R-traps compare the
/// last-column angle against the row's accumulated rotation; C-traps replay
/// the binary Z-frame through the CNOT network. Throws MalformedTrap when
/// the final angle is not 0 or pi away from the deterministic one.
std::vector<int> predict_trap_outcome(const TrapInstance &trap, const BwsLayout &layout);

} // namespace bwv
