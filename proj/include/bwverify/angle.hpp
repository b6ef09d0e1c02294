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

#include <cmath>
#include <cstdint>

namespace bwv {

/// An angle that is an integer multiple of pi/4, stored as its index mod 8.
/// All protocol-level angle arithmetic lives here; conversion to radians
/// happens only at the quantum-engine boundary.
class AngleZ8 {
  public:
    constexpr AngleZ8() : k_(0) {}
    constexpr explicit AngleZ8(int64_t k) : k_(static_cast<uint8_t>(((k % 8) + 8) % 8)) {}

    constexpr int units() const { return k_; }
    double radians() const { return static_cast<double>(k_) * M_PI / 4.0; }

    constexpr AngleZ8 operator+(AngleZ8 o) const { return AngleZ8(k_ + o.k_); }
    constexpr AngleZ8 operator-(AngleZ8 o) const { return AngleZ8(k_ - o.k_ + 8); }
    constexpr AngleZ8 operator-() const { return AngleZ8(8 - k_); }
    constexpr AngleZ8 plus_pi() const { return AngleZ8(k_ + 4); }
    constexpr bool operator==(const AngleZ8 &o) const = default;

    constexpr bool is_zero() const { return k_ == 0; }
    constexpr bool is_pi() const { return k_ == 4; }
    /// Multiples of pi; these are the only deterministic X-basis offsets.
    constexpr bool is_pauli_z_power() const { return k_ == 0 || k_ == 4; }

    static constexpr AngleZ8 pi() { return AngleZ8(4); }
    static constexpr AngleZ8 half_pi() { return AngleZ8(2); }
    static constexpr AngleZ8 minus_half_pi() { return AngleZ8(6); }

  private:
    uint8_t k_;
};

/// delta = (-1)^{r_prime} * phi + theta + r*pi, the one-time-padded angle
/// Alice announces (or measures at) for one qubit.
inline AngleZ8 delta_angle(AngleZ8 phi, AngleZ8 theta, bool r, bool r_prime) {
    AngleZ8 signed_phi = r_prime ? -phi : phi;
    AngleZ8 d = signed_phi + theta;
    return r ? d.plus_pi() : d;
}

/// phi' = (-1)^{s_X} * phi + s_Z*pi, the flow correction applied to
/// yet-to-be-measured qubits.
inline AngleZ8 adapt_angle(AngleZ8 phi, bool s_x, bool s_z) {
    AngleZ8 a = s_x ? -phi : phi;
    return s_z ? a.plus_pi() : a;
}

} // namespace bwv
