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

#include <set>
#include <vector>

#include "bwverify/grids.hpp"
#include "bwverify/layout.hpp"
#include "bwverify/statevector.hpp"

namespace bwv {

enum class RotationAxis { Z, X };

/// The per-tape slot pattern of the logical circuit equivalent to a
/// brickwork computation:
///   [RZ(col 4y-3), RX(col 4y-2), RZ(col 4y-1), cZ layer, RX(col 4y), cZ layer]
/// with cZ pairing 1-2,3-4,... on odd tapes and 2-3,4-5,... on even ones.
/// Measuring a physical column applies the dagger of its rotation, so the
/// simulator below runs R^dag gates; slot angles are stored as written in
/// the angle matrix.
struct LogicalCircuit {
    struct RotationLayer {
        RotationAxis axis;
        int source_col = 0;              // physical column the layer came from
        std::vector<AngleZ8> angles;     // one per wire
    };
    struct CzLayer {
        std::vector<std::pair<int, int>> pairs; // 1-based wire indices
    };
    struct Layer {
        bool is_cz = false;
        RotationLayer rot;
        CzLayer cz;
    };

    int wires = 0;
    int tapes = 0;
    std::vector<Layer> layers;
    std::vector<AngleZ8> measurement; // last-column angles, one per wire

    /// Statevector run of the circuit on |+>^n, measuring wire i at
    /// measurement[i]. Flips are decorated via insert_flip_byproducts.
    std::vector<int> simulate(SplitRng &rng, const std::set<QubitPos> &flips = {}) const;

    /// True when every cZ layer is adjacent to its twin with only zero-angle
    /// rotations in between (the R-trap disentangling condition).
    bool cz_layers_cancel() const;
};

LogicalCircuit extract_logical_circuit(const AngleMatrix &angles, const BwsLayout &layout);

/// By-products a physical flip pattern induces on the logical circuit: a
/// flip at (i,j), j<m inserts Z (odd columns, the R_Z slots) or X (even
/// columns, the R_X slots) immediately before wire i's rotation for column
/// j; a flip at (i,m) anticommutes with the final X-basis measurement and
/// flips that wire's outcome deterministically.
struct ByproductDecoration {
    struct Insert {
        size_t layer_index; // rotation layer in LogicalCircuit::layers
        int wire;           // 1-based
        bool is_x;          // X before even-column slots, Z before odd ones
    };
    std::vector<Insert> inserts;
    std::vector<uint8_t> outcome_flips; // one per wire
};

ByproductDecoration insert_flip_byproducts(const LogicalCircuit &circuit,
                                           const std::set<QubitPos> &flips);

} // namespace bwv
