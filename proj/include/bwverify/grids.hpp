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

#include <map>
#include <set>
#include <vector>

#include "bwverify/angle.hpp"
#include "bwverify/layout.hpp"
#include "bwverify/rng.hpp"

namespace bwv {

/// Dense n x m grid with 1-based (row, col) indexing.
template <typename T>
class Grid {
  public:
    Grid() : n_(0), m_(0) {}
    Grid(int n, int m, T fill = T{}) : n_(n), m_(m), cells_(static_cast<size_t>(n) * m, fill) {}

    int rows() const { return n_; }
    int cols() const { return m_; }

    T &at(int i, int j) { return cells_[index(i, j)]; }
    const T &at(int i, int j) const { return cells_[index(i, j)]; }
    T &at(QubitPos q) { return at(q.row, q.col); }
    const T &at(QubitPos q) const { return at(q.row, q.col); }

    bool operator==(const Grid &) const = default;

  private:
    size_t index(int i, int j) const {
        if (i < 1 || i > n_ || j < 1 || j > m_) {
            throw std::out_of_range("grid index (" + std::to_string(i) + "," +
                                    std::to_string(j) + ") out of range");
        }
        return static_cast<size_t>(i - 1) * m_ + (j - 1);
    }

    int n_;
    int m_;
    std::vector<T> cells_;
};

/// phi_{i,j} of one computation.
using AngleMatrix = Grid<AngleZ8>;

/// s_{i,j} of one computation, filled in measurement order.
using OutcomeMatrix = Grid<uint8_t>;

/// Per-qubit secrets (theta, r, r') of one computation.
struct RandomPads {
    Grid<AngleZ8> theta;
    Grid<uint8_t> r;
    Grid<uint8_t> r_prime;

    static RandomPads draw(const BwsLayout &layout, SplitRng &rng) {
        RandomPads p;
        int n = layout.rows(), m = layout.cols();
        p.theta = Grid<AngleZ8>(n, m);
        p.r = Grid<uint8_t>(n, m);
        p.r_prime = Grid<uint8_t>(n, m);
        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= m; ++j) {
                p.theta.at(i, j) = rng.angle();
                p.r.at(i, j) = rng.bit() ? 1 : 0;
                p.r_prime.at(i, j) = rng.bit() ? 1 : 0;
            }
        }
        return p;
    }
};

enum class ComputationKind { Target, RTrap, CTrap };

/// Positions the adversary phase-flips, keyed by computation index (1..v+1).
using FlipPattern = std::map<int, std::set<QubitPos>>;

} // namespace bwv
