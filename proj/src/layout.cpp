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

#include "bwverify/layout.hpp"

namespace bwv {

namespace {

std::pair<QubitPos, QubitPos> ordered_edge(QubitPos a, QubitPos b) {
    return a < b ? std::pair{a, b} : std::pair{b, a};
}

} // namespace

BwsLayout::BwsLayout(int n, int m) : n_(n), m_(m), w_((m - 1) / 4) {
    if (n < 2 || n % 2 != 0) {
        throw DimensionError("n must be even and >= 2, got " + std::to_string(n));
    }
    if (m < 5 || m % 4 != 1) {
        throw DimensionError("m must satisfy m = 4w+1 with w >= 1, got " + std::to_string(m));
    }

    for (int i = 1; i <= n_; ++i) {
        for (int j = 1; j < m_; ++j) {
            edges_.insert(ordered_edge({i, j}, {i, j + 1}));
        }
    }
    for (int y = 1; y <= w_; ++y) {
        int first = (y % 2 == 1) ? 1 : 2;
        for (int i = first; i + 1 <= n_; i += 2) {
            for (int j : {4 * y - 1, 4 * y + 1}) {
                edges_.insert(ordered_edge({i, j}, {i + 1, j}));
            }
            bricks_.push_back({y, i});
        }
    }
}

std::set<QubitPos> BwsLayout::neighbors(QubitPos q) const {
    if (!contains(q)) {
        throw std::out_of_range("position (" + std::to_string(q.row) + "," +
                                std::to_string(q.col) + ") outside layout");
    }
    std::set<QubitPos> out;
    for (const auto &[a, b] : edges_) {
        if (a == q) out.insert(b);
        if (b == q) out.insert(a);
    }
    return out;
}

bool BwsLayout::column_has_vertical_edges(int j) const {
    return tape_of_vertical_column(j) != 0;
}

int BwsLayout::tape_of_vertical_column(int j) const {
    // j = 4y-1 or j = 4y+1 for some tape y in 1..w.
    if (j % 4 == 3) {
        int y = (j + 1) / 4;
        return (y >= 1 && y <= w_) ? y : 0;
    }
    if (j % 4 == 1 && j > 1) {
        int y = (j - 1) / 4;
        return (y >= 1 && y <= w_) ? y : 0;
    }
    return 0;
}

int BwsLayout::vertical_partner(int row, int j) const {
    int y = tape_of_vertical_column(j);
    if (y == 0) return 0;
    int first = (y % 2 == 1) ? 1 : 2;
    if (row < first) return 0;
    int offset = row - first;
    int partner = (offset % 2 == 0) ? row + 1 : row - 1;
    if (partner < first || partner > n_) return 0;
    return partner;
}

} // namespace bwv
