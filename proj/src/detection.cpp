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

#include "bwverify/detection.hpp"

namespace bwv {

std::vector<WireEffect> propagate_flips(const BwsLayout &layout,
                                        const std::function<SlotSpec(int, int)> &slot,
                                        const std::set<QubitPos> &flips) {
    int n = layout.rows(), m = layout.cols();
    for (const QubitPos &f : flips) {
        if (!layout.contains(f)) throw std::out_of_range("flip outside layout");
    }

    std::vector<uint8_t> x(n + 1, 0), z(n + 1, 0);
    std::vector<WireEffect> out(n);

    for (int j = 1; j <= m; ++j) {
        // cZ-layer crossing: X fronts emit a Z onto the vertical partner.
        // All emissions use the pre-layer fronts.
        if (layout.column_has_vertical_edges(j)) {
            std::vector<uint8_t> emit(n + 1, 0);
            for (int i = 1; i <= n; ++i) {
                int p = layout.vertical_partner(i, j);
                if (p != 0 && x[i]) emit[p] ^= 1;
            }
            for (int i = 1; i <= n; ++i) z[i] ^= emit[i];
        }
        for (int i = 1; i <= n; ++i) {
            bool z_axis = (j % 2) == 1;
            if (flips.count({i, j})) {
                (z_axis ? z[i] : x[i]) ^= 1;
            }
            if (j == m) continue; // final column is the measurement
            bool sign_flip = z_axis ? (x[i] != 0) : (z[i] != 0);
            if (!sign_flip) continue;
            SlotSpec s = slot(i, j);
            if (s.random) {
                out[i - 1].uniform = true;
            } else {
                switch (s.value.units()) {
                    case 0:
                    case 4:
                        break; // R(-phi) = R(phi) for phi in {0, pi}
                    case 2:
                    case 6:
                        // R_Z(-pi/2) = R_Z(pi/2) Z, R_X(-pi/2) = R_X(pi/2) X
                        (z_axis ? z[i] : x[i]) ^= 1;
                        break;
                    default:
                        out[i - 1].non_clifford_residual = true;
                        break;
                }
            }
        }
    }
    for (int i = 1; i <= n; ++i) {
        out[i - 1].outcome_flip = z[i] != 0;
    }
    return out;
}

namespace {

/// Acceptance probability of one joint tape-coin assignment: the product of
/// per-wire outcome-0 probabilities (R-trap wires end disentangled).
Rational rtrap_accept_for_coins(const BwsLayout &layout, const std::set<QubitPos> &pattern,
                                const std::vector<std::vector<TapeUse>> &use) {
    auto slot = [&](int i, int j) -> SlotSpec {
        int y = (j + 3) / 4; // tape of column j (j in 1..m-1)
        int pos = j - (4 * y - 3);
        TapeUse u = use[i - 1][y - 1];
        switch (u) {
            case TapeUse::Hadamard:
                return pos <= 2 ? SlotSpec{false, AngleZ8::half_pi()} : SlotSpec{false, AngleZ8(0)};
            case TapeUse::RotXY:
                return (pos == 0 || pos == 2) ? SlotSpec{true, AngleZ8(0)}
                                              : SlotSpec{false, AngleZ8(0)};
            case TapeUse::RotZY:
                return pos == 1 ? SlotSpec{true, AngleZ8(0)} : SlotSpec{false, AngleZ8(0)};
        }
        return {};
    };
    std::vector<WireEffect> eff = propagate_flips(layout, slot, pattern);
    Rational accept(1);
    for (const WireEffect &e : eff) {
        if (e.uniform) {
            accept *= Rational(1, 2);
        } else if (e.outcome_flip) {
            return Rational(0);
        }
    }
    return accept;
}

/// Enumerates one row's coin sequence c_1..c_{w-1} plus the forced tape-w
/// closure into a TapeUse vector.
std::vector<TapeUse> row_tapes_from_coins(int w, uint32_t coins) {
    std::vector<TapeUse> use(w);
    int count = 0;
    for (int y = 1; y <= w - 1; ++y) {
        bool c = (coins >> (y - 1)) & 1;
        if (!c) {
            count ^= 1;
            use[y - 1] = TapeUse::Hadamard;
        } else {
            use[y - 1] = (count == 0) ? TapeUse::RotXY : TapeUse::RotZY;
        }
    }
    use[w - 1] = (count == 0) ? TapeUse::RotXY : TapeUse::Hadamard;
    return use;
}

} // namespace

Rational rtrap_detection_probability(const std::set<QubitPos> &pattern, const BwsLayout &layout) {
    int n = layout.rows(), w = layout.tapes();
    int coin_bits = n * (w - 1);
    if (coin_bits > 20) {
        throw UnsupportedPattern("coin space too large for exact enumeration");
    }

    // Precompute the 2^{w-1} per-row coin decodings.
    std::vector<std::vector<TapeUse>> decoded;
    uint32_t per_row = uint32_t{1} << (w - 1);
    for (uint32_t c = 0; c < per_row; ++c) decoded.push_back(row_tapes_from_coins(w, c));

    Rational accept(0);
    uint64_t total = uint64_t{1} << coin_bits;
    std::vector<std::vector<TapeUse>> use(n);
    for (uint64_t assign = 0; assign < total; ++assign) {
        uint64_t a = assign;
        for (int i = 0; i < n; ++i) {
            use[i] = decoded[a & (per_row - 1)];
            a >>= (w - 1);
        }
        accept += rtrap_accept_for_coins(layout, pattern, use);
    }
    accept = accept / Rational(static_cast<int64_t>(total));
    return Rational(1) - accept;
}

Rational ctrap_detection_probability(const std::set<QubitPos> &pattern, const BwsLayout &layout) {
    int n = layout.rows();
    const auto &bricks = layout.bricks();
    int nb = static_cast<int>(bricks.size());
    if (nb + n > 24) throw UnsupportedPattern("coin space too large for exact enumeration");

    int64_t detected = 0;
    uint64_t total = uint64_t{1} << (nb + n);
    AngleMatrix angles(n, layout.cols());
    for (uint64_t assign = 0; assign < total; ++assign) {
        // initial-Z coins occupy the low n bits, brick coins the rest
        for (int i = 1; i <= n; ++i) {
            angles.at(i, 1) = ((assign >> (i - 1)) & 1) ? AngleZ8::pi() : AngleZ8(0);
        }
        for (int i = 1; i <= n; ++i) {
            for (int j = 2; j < layout.cols(); ++j) angles.at(i, j) = AngleZ8(0);
        }
        for (int b = 0; b < nb; ++b) {
            bool upper_control = (assign >> (n + b)) & 1;
            int control = upper_control ? bricks[b].upper_row : bricks[b].upper_row + 1;
            int target = upper_control ? bricks[b].upper_row + 1 : bricks[b].upper_row;
            int y = bricks[b].tape;
            angles.at(control, 4 * y - 1) = AngleZ8::half_pi();
            angles.at(target, 4 * y - 2) = AngleZ8::half_pi();
            angles.at(target, 4 * y) = AngleZ8::minus_half_pi();
        }
        auto slot = [&](int i, int j) { return SlotSpec{false, angles.at(i, j)}; };
        std::vector<WireEffect> eff = propagate_flips(layout, slot, pattern);
        for (const WireEffect &e : eff) {
            if (e.non_clifford_residual) {
                throw UnsupportedPattern("pattern left a non-Clifford residual on a C-trap");
            }
            if (e.outcome_flip) {
                ++detected;
                break;
            }
        }
    }
    return Rational(detected, static_cast<int64_t>(total));
}

bool flips_corrupt_computation(const std::set<QubitPos> &pattern, const AngleMatrix &angles,
                               const BwsLayout &layout) {
    auto slot = [&](int i, int j) { return SlotSpec{false, angles.at(i, j)}; };
    std::vector<WireEffect> eff = propagate_flips(layout, slot, pattern);
    for (const WireEffect &e : eff) {
        if (e.corrupts()) return true;
    }
    return false;
}

PatternClass classify_pattern(const std::set<QubitPos> &pattern, const BwsLayout &layout) {
    PatternClass c;
    c.p_detect = rtrap_detection_probability(pattern, layout);
    if (c.p_detect.num() != 0) {
        c.kind = PatternClassKind::Detectable;
        return c;
    }
    int m = layout.cols();
    // Single Type-II pair?
    if (pattern.size() == 2) {
        auto it = pattern.begin();
        QubitPos a = *it++, b = *it;
        if (a.row == b.row && a.col == 1 && b.col == m) {
            c.kind = PatternClassKind::TypeII;
            return c;
        }
        if (a.row == b.row && b.col == a.col + 2 && a.col % 4 == 3) {
            c.kind = PatternClassKind::TypeI;
            return c;
        }
    }
    c.kind = PatternClassKind::MixedUndetectable;
    return c;
}

std::vector<std::set<QubitPos>> find_undetectable(int tape_count) {
    int m = 4 * tape_count + 1;
    BwsLayout layout(4, m);
    const int row = 2; // interior row: vertical partners on every tape

    std::vector<std::set<QubitPos>> found;
    for (uint32_t mask = 1; mask < (uint32_t{1} << m); ++mask) {
        std::set<QubitPos> pattern;
        for (int j = 1; j <= m; ++j) {
            if ((mask >> (j - 1)) & 1) pattern.insert({row, j});
        }
        if (rtrap_detection_probability(pattern, layout).num() == 0) {
            found.push_back(std::move(pattern));
        }
    }
    return found;
}

std::vector<std::set<QubitPos>> expected_undetectable_generators(int row, int tape_count) {
    std::vector<std::set<QubitPos>> gens;
    for (int y = 1; y <= tape_count; ++y) {
        gens.push_back({{row, 4 * y - 1}, {row, 4 * y + 1}});
    }
    gens.push_back({{row, 1}, {row, 4 * tape_count + 1}});
    return gens;
}

} // namespace bwv
