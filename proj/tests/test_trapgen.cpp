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

#include <doctest.h>

#include <cmath>

#include "bwverify/logical.hpp"
#include "bwverify/mbqc.hpp"
#include "bwverify/serialize.hpp"
#include "bwverify/trap_gen.hpp"

using namespace bwv;

namespace {

bool honest_run_matches_prediction(const BwsLayout &layout, const TrapInstance &trap,
                                   SplitRng &rng, int runs = 3) {
    std::vector<int> predicted = predict_trap_outcome(trap, layout);
    for (int r = 0; r < runs; ++r) {
        OutcomeMatrix o = run_mbqc(layout, trap.angles, {}, rng);
        for (int i = 1; i <= layout.rows(); ++i) {
            if (o.at(i, layout.cols()) != predicted[i - 1]) return false;
        }
    }
    return true;
}

} // namespace

TEST_CASE("rtrap: honest runs are deterministic across dims and seeds") {
    for (auto [n, m] : std::vector<std::pair<int, int>>{{2, 5}, {2, 9}, {4, 9}, {6, 13}}) {
        BwsLayout lay(n, m);
        for (uint64_t seed = 0; seed < 50; ++seed) {
            SplitRng rng(seed * 31 + n + m);
            TrapInstance t = gen_rtrap(lay, rng);
            std::vector<int> predicted = predict_trap_outcome(t, lay);
            for (int b : predicted) CHECK(b == 0);
            CHECK(honest_run_matches_prediction(lay, t, rng, 2));
        }
    }
}

TEST_CASE("ctrap: honest runs are deterministic across dims and seeds") {
    for (auto [n, m] : std::vector<std::pair<int, int>>{{2, 5}, {2, 9}, {4, 9}, {6, 13}}) {
        BwsLayout lay(n, m);
        for (uint64_t seed = 0; seed < 50; ++seed) {
            SplitRng rng(seed * 37 + n * 3 + m);
            TrapInstance t = gen_ctrap(lay, rng);
            std::vector<int> predicted = predict_trap_outcome(t, lay);
            for (int b : predicted) CHECK(b == 0);
            CHECK(honest_run_matches_prediction(lay, t, rng, 2));
        }
    }
}

TEST_CASE("rtrap at 2x5: forced rotation path sums into the last column") {
    // With w = 1 the coin loop is empty, count stays 0, and both random
    // angles land at columns 1 and 3. Find a seed drawing (2, 3) for row 1.
    BwsLayout lay(2, 5);
    for (uint64_t seed = 0;; ++seed) {
        REQUIRE(seed < 4000);
        SplitRng rng(seed);
        TrapInstance t = gen_rtrap(lay, rng);
        if (t.angles.at(1, 1).units() == 2 && t.angles.at(1, 3).units() == 3) {
            CHECK(t.angles.at(1, 2).units() == 0);
            CHECK(t.angles.at(1, 4).units() == 0);
            // Deterministic closing angle is the negated sum: -(2+3) mod 8.
            // (The positive-sum variant accumulates +sum, which an honest
            // run rejects; see the positive-sum fixture below.)
            CHECK(t.angles.at(1, 5).units() == 3);
            SplitRng check(seed ^ 0xabc);
            CHECK(honest_run_matches_prediction(lay, t, check, 5));
            break;
        }
    }
}

TEST_CASE("rtrap positive-sum variant fails the determinism oracle") {
    // The positive-sum variant accumulates +sum into the last column; honest
    // runs of such a trap do not reproduce the all-zero string.
    BwsLayout lay(2, 5);
    int mismatches = 0;
    int tried = 0;
    for (uint64_t seed = 0; seed < 40; ++seed) {
        SplitRng rng(seed);
        TrapInstance t = gen_rtrap_positive_sum_variant(lay, rng);
        // skip draws where +sum == -sum (sum in {0, 4}) on both rows
        bool distinguishing = false;
        for (int i = 1; i <= 2; ++i) {
            int s = (t.angles.at(i, 1).units() + t.angles.at(i, 3).units()) % 8;
            if (s != 0 && s != 4) distinguishing = true;
        }
        if (!distinguishing) continue;
        ++tried;
        SplitRng check(seed ^ 0x123);
        bool all_zero = true;
        for (int run = 0; run < 16 && all_zero; ++run) {
            OutcomeMatrix o = run_mbqc(lay, t.angles, {}, check);
            for (int i = 1; i <= 2; ++i) {
                if (o.at(i, 5) != 0) all_zero = false;
            }
        }
        if (!all_zero) ++mismatches;
    }
    CHECK(tried > 15);
    CHECK(mismatches == tried);
}

TEST_CASE("rtrap at 2x9: hadamard tape assigns the pi/2 triple") {
    BwsLayout lay(2, 9);
    for (uint64_t seed = 0;; ++seed) {
        REQUIRE(seed < 200);
        SplitRng rng(seed);
        TrapInstance t = gen_rtrap(lay, rng);
        if (t.tape_use[0][0] == TapeUse::Hadamard) {
            for (int j = 1; j <= 3; ++j) CHECK(t.angles.at(1, j).units() == 2);
            CHECK(t.angles.at(1, 4).units() == 0);
            break;
        }
    }
}

TEST_CASE("rtrap: hadamard tapes per row come in pairs") {
    for (auto [n, m] : std::vector<std::pair<int, int>>{{2, 9}, {4, 13}, {2, 13}}) {
        BwsLayout lay(n, m);
        for (uint64_t seed = 0; seed < 100; ++seed) {
            SplitRng rng(seed + 7 * n + m);
            TrapInstance t = gen_rtrap(lay, rng);
            for (int i = 0; i < n; ++i) {
                int hadamards = 0;
                for (TapeUse u : t.tape_use[i]) {
                    if (u == TapeUse::Hadamard) ++hadamards;
                }
                CHECK(hadamards % 2 == 0);
            }
        }
    }
}

TEST_CASE("rtrap bookkeeping: last column is the negated sum of assigned rotations") {
    BwsLayout lay(4, 13);
    for (uint64_t seed = 0; seed < 50; ++seed) {
        SplitRng rng(seed);
        TrapInstance t = gen_rtrap(lay, rng);
        for (int i = 1; i <= 4; ++i) {
            AngleZ8 sum;
            for (int y = 1; y <= lay.tapes(); ++y) {
                switch (t.tape_use[i - 1][y - 1]) {
                    case TapeUse::Hadamard: break;
                    case TapeUse::RotXY:
                        sum = sum + t.angles.at(i, 4 * y - 3) + t.angles.at(i, 4 * y - 1);
                        break;
                    case TapeUse::RotZY:
                        sum = sum + t.angles.at(i, 4 * y - 2);
                        break;
                }
            }
            CHECK(t.angles.at(i, 13) == -sum);
        }
    }
}

TEST_CASE("predict flags a pi-offset trap as outcome 1 and rejects junk") {
    BwsLayout lay(2, 5);
    SplitRng rng(99);
    TrapInstance t = gen_rtrap(lay, rng);
    t.angles.at(1, 5) = t.angles.at(1, 5).plus_pi();
    std::vector<int> p = predict_trap_outcome(t, lay);
    CHECK(p[0] == 1);
    CHECK(p[1] == 0);
    SplitRng check(1);
    CHECK(honest_run_matches_prediction(lay, t, check, 5));

    t.angles.at(1, 5) = t.angles.at(1, 5) + AngleZ8(1);
    CHECK_THROWS_AS(predict_trap_outcome(t, lay), MalformedTrap);
}

TEST_CASE("ctrap frame fixtures at 2x5") {
    BwsLayout lay(2, 5);
    // find a seed with: Z on row 1 only, control = row 1
    bool found_a = false, found_b = false;
    for (uint64_t seed = 0; seed < 400 && !(found_a && found_b); ++seed) {
        SplitRng rng(seed);
        TrapInstance t = gen_ctrap(lay, rng);
        bool control_upper = t.brick_control_upper[0] != 0;
        if (t.initial_z[0] && !t.initial_z[1] && control_upper && !found_a) {
            found_a = true;
            CHECK(t.angles.at(1, 1).units() == 4);
            CHECK(t.angles.at(1, 3).units() == 2);
            CHECK(t.angles.at(2, 2).units() == 2);
            CHECK(t.angles.at(2, 4).units() == 6);
            CHECK(t.angles.at(1, 5).units() == 4);
            CHECK(t.angles.at(2, 5).units() == 0);
            SplitRng check(seed ^ 0x77);
            CHECK(honest_run_matches_prediction(lay, t, check, 5));
        }
        if (!t.initial_z[0] && t.initial_z[1] && control_upper && !found_b) {
            found_b = true;
            // Z on the target row copies onto the control through the CNOT
            CHECK(t.angles.at(1, 5).units() == 4);
            CHECK(t.angles.at(2, 5).units() == 4);
            SplitRng check(seed ^ 0x99);
            CHECK(honest_run_matches_prediction(lay, t, check, 5));
        }
    }
    CHECK(found_a);
    CHECK(found_b);
}

TEST_CASE("ctrap half-pi variant fails the determinism oracle") {
    BwsLayout lay(2, 5);
    int mismatches = 0;
    int tried = 0;
    for (uint64_t seed = 0; seed < 60; ++seed) {
        SplitRng rng(seed);
        TrapInstance t = gen_ctrap_half_pi_variant(lay, rng);
        bool has_z = t.initial_z[0] || t.initial_z[1];
        if (!has_z) continue;
        ++tried;
        SplitRng check(seed ^ 0x5);
        if (!honest_run_matches_prediction(lay, t, check, 16)) ++mismatches;
    }
    CHECK(tried > 5);
    CHECK(mismatches == tried); // pi/2 first-column angles break determinism
}

TEST_CASE("ctrap final angles are 0 or pi; every brick carries one orientation") {
    BwsLayout lay(6, 13);
    for (uint64_t seed = 0; seed < 30; ++seed) {
        SplitRng rng(seed);
        TrapInstance t = gen_ctrap(lay, rng);
        for (int i = 1; i <= 6; ++i) {
            CHECK(t.angles.at(i, 13).is_pauli_z_power());
        }
        CHECK(t.brick_control_upper.size() == lay.bricks().size());
        size_t k = 0;
        for (const Brick &b : lay.bricks()) {
            bool upper = t.brick_control_upper[k++] != 0;
            int control = upper ? b.upper_row : b.upper_row + 1;
            int target = upper ? b.upper_row + 1 : b.upper_row;
            CHECK(t.angles.at(control, 4 * b.tape - 1).units() == 2);
            CHECK(t.angles.at(target, 4 * b.tape - 2).units() == 2);
            CHECK(t.angles.at(target, 4 * b.tape).units() == 6);
        }
    }
}

TEST_CASE("trap json golden files and round-trip") {
    BwsLayout lay(2, 9);
    SplitRng r1(3), r2(999);
    TrapInstance rt = gen_rtrap(lay, r1);
    TrapInstance ct = gen_ctrap(lay, r2);

    const char *golden_r =
        R"({"angles":{"angles":[[2,2,2,0,2,2,2,0,0],[1,0,7,0,6,0,7,0,3]],"m":9,"n":2},)"
        R"("kind":"r-trap","predicted_final_angle":[0,3],"tape_use":[["H","H"],["RZ","RZ"]]})";
    const char *golden_c =
        R"({"angles":{"angles":[[4,2,0,6,0,0,0,0,4],[0,0,2,0,0,0,0,0,4]],"m":9,"n":2},)"
        R"("brick_control_upper":[0],"initial_z":[1,0],"kind":"c-trap",)"
        R"("predicted_final_angle":[4,4]})";
    CHECK(trap_to_json(rt).dump() == golden_r);
    CHECK(trap_to_json(ct).dump() == golden_c);

    for (const TrapInstance *t : {&rt, &ct}) {
        TrapInstance back = trap_from_json(trap_to_json(*t));
        CHECK(back.kind == t->kind);
        CHECK(back.angles == t->angles);
        CHECK(predict_trap_outcome(back, lay) == predict_trap_outcome(*t, lay));
    }
}

// ---------------------------------------------------------------------------
// Logical circuit extraction

TEST_CASE("all-zero circuit leaves |+> wires and cancelling cz layers") {
    BwsLayout lay(2, 5);
    AngleMatrix a(2, 5);
    LogicalCircuit lc = extract_logical_circuit(a, lay);
    CHECK(lc.wires == 2);
    CHECK(lc.tapes == 1);
    CHECK(lc.cz_layers_cancel());
    SplitRng rng(3);
    for (int t = 0; t < 20; ++t) {
        auto out = lc.simulate(rng);
        CHECK(out == std::vector<int>{0, 0});
    }
}

TEST_CASE("rtrap circuits keep wires disentangled") {
    BwsLayout lay(4, 9);
    for (uint64_t seed = 0; seed < 20; ++seed) {
        SplitRng rng(seed);
        TrapInstance t = gen_rtrap(lay, rng);
        LogicalCircuit lc = extract_logical_circuit(t.angles, lay);
        CHECK(lc.cz_layers_cancel());
    }
    SplitRng rng(5);
    TrapInstance c = gen_ctrap(lay, rng);
    CHECK_FALSE(extract_logical_circuit(c.angles, lay).cz_layers_cancel());
}

TEST_CASE("logical simulation reproduces run_mbqc last-column statistics") {
    BwsLayout lay(2, 5);
    AngleMatrix a(2, 5);
    int vals[2][5] = {{1, 5, 3, 2, 0}, {4, 2, 7, 6, 1}};
    for (int i = 1; i <= 2; ++i) {
        for (int j = 1; j <= 5; ++j) a.at(i, j) = AngleZ8(vals[i - 1][j - 1]);
    }
    LogicalCircuit lc = extract_logical_circuit(a, lay);
    const int trials = 8000;
    std::map<std::vector<int>, double> h1, h2;
    for (int t = 0; t < trials; ++t) {
        SplitRng r1(4000 + t), r2(9000 + t);
        h1[lc.simulate(r1)] += 1.0 / trials;
        OutcomeMatrix o = run_mbqc(lay, a, {}, r2);
        h2[{o.at(1, 5), o.at(2, 5)}] += 1.0 / trials;
    }
    double tv = 0;
    for (auto &[k, p] : h1) tv += std::abs(p - (h2.count(k) ? h2[k] : 0.0));
    for (auto &[k, p] : h2) {
        if (!h1.count(k)) tv += p;
    }
    CHECK(tv / 2 < 0.03);
}

TEST_CASE("ctrap brick equals cnot on two wires") {
    // Build the 4x4 brick unitary from the extracted circuit slots of a
    // 2x5 C-trap and compare with CNOT (global phase quotiented). The
    // first-column slots carry the initial Pauli-Zs and are excluded.
    BwsLayout lay(2, 5);
    for (uint64_t seed = 0; seed < 30; ++seed) {
        SplitRng rng(seed);
        TrapInstance t = gen_ctrap(lay, rng);
        bool upper_control = t.brick_control_upper[0] != 0;
        LogicalCircuit lc = extract_logical_circuit(t.angles, lay);

        // basis index: wire-1 bit + 2 * wire-2 bit (matches amplitude order
        // when label 1 is created first)
        cplx u[4][4];
        for (int col = 0; col < 4; ++col) {
            StateVector sv;
            sv.add_qubit(1, (col & 1) ? 0.0 : 1.0, (col & 1) ? 1.0 : 0.0);
            sv.add_qubit(2, (col & 2) ? 0.0 : 1.0, (col & 2) ? 1.0 : 0.0);
            for (const auto &layer : lc.layers) {
                if (layer.is_cz) {
                    for (auto [a, b] : layer.cz.pairs) sv.apply_cz(a, b);
                    continue;
                }
                if (layer.rot.source_col == 1) continue;
                for (int wire = 1; wire <= 2; ++wire) {
                    AngleZ8 ang = layer.rot.angles[wire - 1];
                    Mat2 g = layer.rot.axis == RotationAxis::Z
                                 ? gate_rz_dag(ang)
                                 : mat2_mul(gate_h(), mat2_mul(gate_rz_dag(ang), gate_h()));
                    sv.apply_1q(wire, g);
                }
            }
            for (int row = 0; row < 4; ++row) u[row][col] = sv.amplitudes()[row];
        }

        auto cnot_image = [&](int basis) {
            int w1 = basis & 1, w2 = (basis >> 1) & 1;
            if (upper_control) {
                w2 ^= w1;
            } else {
                w1 ^= w2;
            }
            return w1 | (w2 << 1);
        };
        cplx overlap = 0;
        for (int col = 0; col < 4; ++col) overlap += u[cnot_image(col)][col];
        CHECK(std::abs(overlap) / 4.0 == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("predict agrees with exhaustive statevector oracle at n=2") {
    // every coin combination at n=2, w<=2: initial coins 2^2, brick coins
    // 2^(#bricks); simulate the extracted circuit and compare
    for (int m : {5, 9}) {
        BwsLayout lay(2, m);
        int bricks = static_cast<int>(lay.bricks().size());
        for (uint32_t mask = 0; mask < (uint32_t{1} << (2 + bricks)); ++mask) {
            TrapInstance t;
            t.kind = ComputationKind::CTrap;
            t.angles = AngleMatrix(2, m);
            t.initial_z = {static_cast<uint8_t>(mask & 1), static_cast<uint8_t>((mask >> 1) & 1)};
            std::vector<uint8_t> frame = t.initial_z;
            for (int i = 1; i <= 2; ++i) {
                if (t.initial_z[i - 1]) t.angles.at(i, 1) = AngleZ8::pi();
            }
            for (int b = 0; b < bricks; ++b) {
                bool upper = (mask >> (2 + b)) & 1;
                t.brick_control_upper.push_back(upper ? 1 : 0);
                const Brick &brick = lay.bricks()[b];
                int control = upper ? brick.upper_row : brick.upper_row + 1;
                int target = upper ? brick.upper_row + 1 : brick.upper_row;
                t.angles.at(control, 4 * brick.tape - 1) = AngleZ8::half_pi();
                t.angles.at(target, 4 * brick.tape - 2) = AngleZ8::half_pi();
                t.angles.at(target, 4 * brick.tape) = AngleZ8::minus_half_pi();
                frame[control - 1] ^= frame[target - 1];
            }
            for (int i = 1; i <= 2; ++i) {
                t.angles.at(i, m) = frame[i - 1] ? AngleZ8::pi() : AngleZ8(0);
                t.predicted_final_angle.push_back(t.angles.at(i, m));
            }
            std::vector<int> predicted = predict_trap_outcome(t, lay);
            CHECK(predicted == std::vector<int>{0, 0});
            LogicalCircuit lc = extract_logical_circuit(t.angles, lay);
            SplitRng rng(mask * 131 + m);
            for (int run = 0; run < 3; ++run) {
                CHECK(lc.simulate(rng) == predicted);
            }
        }
    }
}
