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

#include <array>
#include <string>
#include <vector>

#include "bwverify/pauli.hpp"

namespace bwv {

/// The three ways an R-trap uses a tape on one wire.
enum class TapeGateCase { RZ, RX, H };

/// Normal form of a phase-flipped tape after by-products are pushed to the
/// beginning (the right-hand side of the tape unitary):
///   RZ case:  R_Z(sign1*phi1 + sign3*phi3) . front
///   RX case:  R_X(sign2*phi2) . front
///   H  case:  H . front
struct TapeEffect {
    TapeGateCase gate_case = TapeGateCase::RZ;
    int sign1 = +1; // sign of phi1 (RZ case)
    int sign3 = +1; // sign of phi3 (RZ case)
    int sign2 = +1; // sign of phi2 (RX case)
    bool front_x = false;
    bool front_z = false;

    bool trivial() const {
        bool signs_ok = sign1 == +1 && sign3 == +1 && sign2 == +1;
        return signs_ok && !front_x && !front_z;
    }

    /// Rendering that matches the bundled transcription, e.g.
    /// "RZ(-p1+p3) XZ", "RX(p2)", "H Z", or "" for a trivial cell.
    std::string cell() const;
};

/// Flips l1..l5 of one tape: l1..l4 are this wire's qubits at columns
/// 4y-3..4y, l5 is the neighbouring wire's column-4y qubit (whose Pauli-X
/// crosses the brick cZ pair and lands here as a Z). Pushes all by-products
/// to the beginning of the tape using Z-commutes-with-RZ, X-flips-RZ,
/// X-commutes-with-RX, Z-flips-RX, and H exchanging X and Z.
TapeEffect propagate_tape(const std::array<bool, 5> &flips, TapeGateCase gate_case);

struct TapeTableRow {
    std::array<bool, 5> flips;
    std::string label; // e.g. "1,3,5"
    std::array<std::string, 3> cells; // RZ, RX, H
};

struct TapeTableReport {
    std::vector<TapeTableRow> symbolic;
    int oracle_mismatches = 0;          // symbolic vs brute-force unitary oracle
    int reference_mismatches = 0;   // symbolic vs the bundled reference cells
    std::vector<std::string> diffs;
    int cells() const { return static_cast<int>(symbolic.size()) * 3; }
};

/// All 31 nonempty flip subsets x 3 gate cases, computed symbolically and
/// cross-checked cell by cell against a brute-force 2x2 unitary comparison
/// (global phase quotiented, tolerance 1e-10) and against the transcription
/// of the bundled reference cells.
TapeTableReport build_tape_table();

/// The bundled reference transcription (31 rows).
const std::vector<TapeTableRow> &tape_table_reference();

} // namespace bwv
