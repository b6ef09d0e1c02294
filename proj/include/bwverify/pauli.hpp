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

#include <cstdint>
#include <string>
#include <vector>

namespace bwv {

enum class PauliLetter : uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

/// Per-wire letter in symplectic (x, z) form plus a global power of i.
/// Multiplication follows X*Z = -iY etc.; the phase is tracked mod 4.
class PauliWord {
  public:
    explicit PauliWord(int wires = 1) : x_(wires, 0), z_(wires, 0), phase_(0) {}

    static PauliWord single(int wires, int wire, PauliLetter l) {
        PauliWord p(wires);
        p.set_letter(wire, l);
        return p;
    }

    int wires() const { return static_cast<int>(x_.size()); }

    /// Phase exponent t such that the word equals i^t times its letter
    /// string (I/X/Y/Z per wire) as a matrix.
    int phase_power_of_i() const {
        int y_count = 0;
        for (size_t k = 0; k < x_.size(); ++k) y_count += x_[k] & z_[k];
        return (phase_ + 4 - (y_count & 3)) & 3;
    }

    bool x_bit(int wire) const { return x_[wire] != 0; }
    bool z_bit(int wire) const { return z_[wire] != 0; }

    PauliLetter letter(int wire) const {
        int xb = x_[wire], zb = z_[wire];
        if (xb && zb) return PauliLetter::Y;
        if (xb) return PauliLetter::X;
        if (zb) return PauliLetter::Z;
        return PauliLetter::I;
    }

    void set_letter(int wire, PauliLetter l) {
        // Letters decompose as i^{xz} X^x Z^z; Y = iXZ.
        switch (l) {
            case PauliLetter::I: x_[wire] = 0; z_[wire] = 0; break;
            case PauliLetter::X: x_[wire] = 1; z_[wire] = 0; break;
            case PauliLetter::Z: x_[wire] = 0; z_[wire] = 1; break;
            case PauliLetter::Y:
                x_[wire] = 1;
                z_[wire] = 1;
                phase_ = (phase_ + 1) & 3;
                break;
        }
    }

    bool is_identity_letterwise() const {
        for (size_t k = 0; k < x_.size(); ++k) {
            if (x_[k] || z_[k]) return false;
        }
        return true;
    }

    /// this * other as matrices. Internally words are i^p * prod X^x Z^z,
    /// so per wire (X^a Z^b)(X^c Z^d) = (-1)^{bc} X^{a^c} Z^{b^d}.
    PauliWord operator*(const PauliWord &o) const {
        PauliWord r(wires());
        r.phase_ = (phase_ + o.phase_) & 3;
        for (int k = 0; k < wires(); ++k) {
            if (z_[k] && o.x_[k]) r.phase_ = (r.phase_ + 2) & 3;
            r.x_[k] = x_[k] ^ o.x_[k];
            r.z_[k] = z_[k] ^ o.z_[k];
        }
        return r;
    }

    bool operator==(const PauliWord &o) const = default;

    std::string str() const {
        static const char *phases[] = {"", "i", "-", "-i"};
        std::string s = phases[phase_power_of_i()];
        for (int k = 0; k < wires(); ++k) {
            s += "IXYZ"[static_cast<int>(letter(k))];
        }
        return s;
    }

  private:
    std::vector<uint8_t> x_;
    std::vector<uint8_t> z_;
    int phase_;
};

} // namespace bwv
