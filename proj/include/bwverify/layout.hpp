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
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bwv {

/// 1-indexed physical qubit position: row i in 1..n, column j in 1..m.
struct QubitPos {
    int row = 0;
    int col = 0;
    auto operator<=>(const QubitPos &) const = default;
};

struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// One two-qubit gate slot: tape y, rows (upper, upper+1).
struct Brick {
    int tape = 0;
    int upper_row = 0;
};

/// Brickwork-state geometry. Rows are entangled in a chain; vertical edges
/// sit at columns 4y-1 and 4y+1 of each tape y, pairing odd rows
/// (1-2, 3-4, ...) on odd tapes and even rows (2-3, 4-5, ...) on even ones.
class BwsLayout {
  public:
    BwsLayout(int n, int m);

    int rows() const { return n_; }
    int cols() const { return m_; }
    int tapes() const { return w_; }

    bool contains(QubitPos q) const {
        return q.row >= 1 && q.row <= n_ && q.col >= 1 && q.col <= m_;
    }

    const std::set<std::pair<QubitPos, QubitPos>> &edges() const { return edges_; }
    const std::vector<Brick> &bricks() const { return bricks_; }

    std::set<QubitPos> neighbors(QubitPos q) const;

    /// True when column j carries vertical edges, i.e. j in {4y-1, 4y+1}.
    bool column_has_vertical_edges(int j) const;

    /// Row paired with `row` by the vertical edge at column j, or 0 if the
    /// row is unpaired there.
    int vertical_partner(int row, int j) const;

    /// Tape whose column-(4y-1)/(4y+1) edges live at column j (0 if none).
    int tape_of_vertical_column(int j) const;

  private:
    int n_;
    int m_;
    int w_;
    std::set<std::pair<QubitPos, QubitPos>> edges_;
    std::vector<Brick> bricks_;
};

inline BwsLayout build_layout(int n, int m) { return BwsLayout(n, m); }

} // namespace bwv
