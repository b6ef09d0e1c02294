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

#include "bwverify/angle.hpp"

namespace bwv {

/// Splittable counter-based generator (splitmix64 core). Every stochastic
/// operation takes one of these explicitly, so runs are bit-reproducible
/// and independent streams can be derived for parallel workers.
class SplitRng {
  public:
    explicit SplitRng(uint64_t seed) : state_(seed) {}

    uint64_t next_u64() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Child stream independent of this one; does not advance this stream
    /// in a way that depends on how the child is used.
    SplitRng split(uint64_t stream) {
        uint64_t s = next_u64();
        return SplitRng(s ^ (0xd1342543de82ef95ULL * (stream + 1)));
    }

    bool bit() { return (next_u64() >> 63) != 0; }

    /// Uniform in [0, bound). Rejection-free for the tiny bounds used here
    /// (bound is always a power of two in protocol code).
    uint32_t below(uint32_t bound) { return static_cast<uint32_t>(next_u64() % bound); }

    AngleZ8 angle() { return AngleZ8(static_cast<int64_t>(next_u64() & 7)); }

    /// Uniform double in [0, 1) with 53 bits, platform independent.
    double real() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  private:
    uint64_t state_;
};

} // namespace bwv
