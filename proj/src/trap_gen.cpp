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

#include "bwverify/trap_gen.hpp"

namespace bwv {

namespace {

TrapInstance gen_rtrap_impl(const BwsLayout &layout, SplitRng &rng, bool negate_sum) {
    int n = layout.rows(), m = layout.cols(), w = layout.tapes();
    TrapInstance t;
    t.kind = ComputationKind::RTrap;
    t.angles = AngleMatrix(n, m);
    t.tape_use.assign(n, std::vector<TapeUse>(w, TapeUse::Hadamard));
    t.predicted_final_angle.resize(n);

    for (int i = 1; i <= n; ++i) {
        int count = 0;
        AngleZ8 sum;
        for (int y = 1; y <= w - 1; ++y) {
            bool coin = rng.bit();
            if (!coin) {
                count ^= 1;
                t.tape_use[i - 1][y - 1] = TapeUse::Hadamard;
                t.angles.at(i, 4 * y - 3) = AngleZ8::half_pi();
                t.angles.at(i, 4 * y - 2) = AngleZ8::half_pi();
                t.angles.at(i, 4 * y - 1) = AngleZ8::half_pi();
            } else if (count == 0) {
                t.tape_use[i - 1][y - 1] = TapeUse::RotXY;
                AngleZ8 a = rng.angle(), b = rng.angle();
                t.angles.at(i, 4 * y - 3) = a;
                t.angles.at(i, 4 * y - 1) = b;
                sum = sum + a + b;
            } else {
                t.tape_use[i - 1][y - 1] = TapeUse::RotZY;
                AngleZ8 a = rng.angle();
                t.angles.at(i, 4 * y - 2) = a;
                sum = sum + a;
            }
        }
        if (count == 0) {
            t.tape_use[i - 1][w - 1] = TapeUse::RotXY;
            AngleZ8 a = rng.angle(), b = rng.angle();
            t.angles.at(i, 4 * w - 3) = a;
            t.angles.at(i, 4 * w - 1) = b;
            sum = sum + a + b;
        } else {
            t.tape_use[i - 1][w - 1] = TapeUse::Hadamard;
            t.angles.at(i, 4 * w - 3) = AngleZ8::half_pi();
            t.angles.at(i, 4 * w - 2) = AngleZ8::half_pi();
            t.angles.at(i, 4 * w - 1) = AngleZ8::half_pi();
        }
        AngleZ8 final_angle = negate_sum ? -sum : sum;
        t.angles.at(i, m) = final_angle;
        t.predicted_final_angle[i - 1] = final_angle;
    }
    return t;
}

TrapInstance gen_ctrap_impl(const BwsLayout &layout, SplitRng &rng, bool pauli_z_is_pi) {
    int n = layout.rows(), m = layout.cols();
    TrapInstance t;
    t.kind = ComputationKind::CTrap;
    t.angles = AngleMatrix(n, m);
    t.initial_z.resize(n);
    t.predicted_final_angle.resize(n);

    std::vector<uint8_t> frame(n, 0);
    for (int i = 1; i <= n; ++i) {
        bool coin = rng.bit();
        t.initial_z[i - 1] = coin ? 0 : 1; // coin 0 assigns the Z
        if (t.initial_z[i - 1]) {
            t.angles.at(i, 1) = pauli_z_is_pi ? AngleZ8::pi() : AngleZ8::half_pi();
            frame[i - 1] = 1;
        }
    }

    for (const Brick &brick : layout.bricks()) {
        bool upper_is_control = !rng.bit(); // coin 0: upper row is control
        t.brick_control_upper.push_back(upper_is_control ? 1 : 0);
        int control = upper_is_control ? brick.upper_row : brick.upper_row + 1;
        int target = upper_is_control ? brick.upper_row + 1 : brick.upper_row;
        int y = brick.tape;
        t.angles.at(control, 4 * y - 1) = AngleZ8::half_pi();
        t.angles.at(target, 4 * y - 2) = AngleZ8::half_pi();
        t.angles.at(target, 4 * y) = AngleZ8::minus_half_pi();
        // Z-frame through a CNOT: Z_t -> Z_c Z_t, Z_c -> Z_c.
        frame[control - 1] ^= frame[target - 1];
    }

    for (int i = 1; i <= n; ++i) {
        AngleZ8 final_angle = frame[i - 1] ? AngleZ8::pi() : AngleZ8(0);
        t.angles.at(i, m) = final_angle;
        t.predicted_final_angle[i - 1] = final_angle;
    }
    return t;
}

} // namespace

TrapInstance gen_rtrap(const BwsLayout &layout, SplitRng &rng) {
    return gen_rtrap_impl(layout, rng, /*negate_sum=*/true);
}

TrapInstance gen_rtrap_positive_sum_variant(const BwsLayout &layout, SplitRng &rng) {
    return gen_rtrap_impl(layout, rng, /*negate_sum=*/false);
}

TrapInstance gen_ctrap(const BwsLayout &layout, SplitRng &rng) {
    return gen_ctrap_impl(layout, rng, /*pauli_z_is_pi=*/true);
}

TrapInstance gen_ctrap_half_pi_variant(const BwsLayout &layout, SplitRng &rng) {
    return gen_ctrap_impl(layout, rng, /*pauli_z_is_pi=*/false);
}

std::vector<int> predict_trap_outcome(const TrapInstance &trap, const BwsLayout &layout) {
    int n = layout.rows(), m = layout.cols(), w = layout.tapes();
    std::vector<int> out(n, 0);

    if (trap.angles.rows() != n || trap.angles.cols() != m) {
        throw MalformedTrap("trap dimensions do not match layout");
    }

    if (trap.kind == ComputationKind::RTrap) {
        for (int i = 1; i <= n; ++i) {
            AngleZ8 sum;
            for (int y = 1; y <= w; ++y) {
                switch (trap.tape_use[i - 1][y - 1]) {
                    case TapeUse::Hadamard:
                        break;
                    case TapeUse::RotXY:
                        sum = sum + trap.angles.at(i, 4 * y - 3) + trap.angles.at(i, 4 * y - 1);
                        break;
                    case TapeUse::RotZY:
                        sum = sum + trap.angles.at(i, 4 * y - 2);
                        break;
                }
            }
            AngleZ8 offset = trap.angles.at(i, m) - (-sum);
            if (!offset.is_pauli_z_power()) {
                throw MalformedTrap("R-trap final angle is not deterministic");
            }
            out[i - 1] = offset.is_pi() ? 1 : 0;
        }
        return out;
    }

    if (trap.kind == ComputationKind::CTrap) {
        std::vector<uint8_t> frame(n, 0);
        for (int i = 1; i <= n; ++i) frame[i - 1] = trap.initial_z[i - 1];
        size_t k = 0;
        for (const Brick &brick : layout.bricks()) {
            bool upper_is_control = trap.brick_control_upper[k++] != 0;
            int control = upper_is_control ? brick.upper_row : brick.upper_row + 1;
            int target = upper_is_control ? brick.upper_row + 1 : brick.upper_row;
            frame[control - 1] ^= frame[target - 1];
        }
        for (int i = 1; i <= n; ++i) {
            AngleZ8 a = trap.angles.at(i, m);
            if (!a.is_pauli_z_power()) {
                throw MalformedTrap("C-trap final angle must be 0 or pi");
            }
            out[i - 1] = (frame[i - 1] ^ (a.is_pi() ? 1 : 0));
        }
        return out;
    }

    throw MalformedTrap("predict_trap_outcome needs a trap computation");
}

} // namespace bwv
