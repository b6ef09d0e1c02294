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

#include <functional>
#include <set>
#include <stdexcept>
#include <vector>

#include "bwverify/grids.hpp"
#include "bwverify/layout.hpp"
#include "bwverify/rational.hpp"
#include "bwverify/trap_gen.hpp"

namespace bwv {

struct UnsupportedPattern : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// One rotation slot of the logical circuit. The axis is implied by column
/// parity (odd columns rotate around Z, even around X); `random` marks
/// slots whose angle is a fresh uniform Z8 draw of the R-trap sub-protocol.
struct SlotSpec {
    bool random = false;
    AngleZ8 value{};
};

/// Result of pushing a flip pattern through one wire of a logical circuit.
struct WireEffect {
    /// A sign-flipped fresh random rotation makes the wire's outcome a fair
    /// coin, exactly (the residual is uniform over {0, pi/2, pi, 3pi/2}).
    bool uniform = false;
    /// Otherwise the outcome flips deterministically iff this is set.
    bool outcome_flip = false;
    /// A slot with angle outside {0, pi/2, pi, 3pi/2} had its sign flipped;
    /// the wire's distribution changed in a non-Pauli way.
    bool non_clifford_residual = false;

    bool corrupts() const { return uniform || outcome_flip || non_clifford_residual; }
};

/// Pushes Pauli-Z deviations forward through the logical circuit defined by
/// per-slot specs, handling cZ-layer crossings between vertically paired
/// wires (an X front emits a Z onto the partner). Exact: sign flips of
/// {pi/2, -pi/2} slots are folded into Pauli by-products, pi slots absorb
/// them, and flipped random slots raise `uniform`.
std::vector<WireEffect> propagate_flips(const BwsLayout &layout,
                                        const std::function<SlotSpec(int, int)> &slot,
                                        const std::set<QubitPos> &flips);

/// Exact probability (over Sub-protocol 1.1 randomness) that an R-trap
/// detects the flip pattern, i.e. produces a nonzero last-column outcome.
/// Enumerates the per-row tape coins and applies the Eq.-3 uniform average
/// for sign-flipped random rotations.
Rational rtrap_detection_probability(const std::set<QubitPos> &pattern, const BwsLayout &layout);

/// Exact probability (over Sub-protocol 1.2 randomness: initial-Z coins and
/// brick orientation coins) that a C-trap's outcome differs from prediction.
Rational ctrap_detection_probability(const std::set<QubitPos> &pattern, const BwsLayout &layout);

/// True when the pattern changes the computation defined by `angles`:
/// a flipped slot with non-{0,pi} angle, or a net outcome flip. Exact for
/// Clifford-angle instances; flips of odd-multiple-of-pi/4 slots always
/// count as corruption.
bool flips_corrupt_computation(const std::set<QubitPos> &pattern, const AngleMatrix &angles,
                               const BwsLayout &layout);

enum class PatternClassKind { TypeI, TypeII, MixedUndetectable, Detectable };

struct PatternClass {
    PatternClassKind kind = PatternClassKind::Detectable;
    Rational p_detect;
};

PatternClass classify_pattern(const std::set<QubitPos> &pattern, const BwsLayout &layout);

/// Exhaustively enumerates the nonempty flip patterns on one generic row
/// (all 4w+1 columns) and returns those with R-trap detection probability
/// exactly 0. The scan runs on a 4-row layout using row 2, so the row has
/// vertical partners on every tape. Positions are reported with row 2.
std::vector<std::set<QubitPos>> find_undetectable(int tape_count);

/// The generators the scan is expected to find: same-row pairs at columns
/// (4y-1, 4y+1) for each tape, and the (1, m) pair.
std::vector<std::set<QubitPos>> expected_undetectable_generators(int row, int tape_count);

} // namespace bwv
