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

#include "bwverify/mbqc.hpp"

#include <algorithm>
#include <stdexcept>

namespace bwv {

FrontierSim::FrontierSim(const BwsLayout &layout, Preparer prepare)
    : layout_(layout), prepare_(std::move(prepare)) {}

void FrontierSim::ensure_column(int col) {
    while (created_cols_ < col && created_cols_ < layout_.cols()) {
        int c = ++created_cols_;
        for (int i = 1; i <= layout_.rows(); ++i) {
            prepare_(state_, {i, c});
        }
        // Vertical edges within the new column.
        for (int i = 1; i <= layout_.rows(); ++i) {
            int p = layout_.vertical_partner(i, c);
            if (p > i) {
                state_.apply_cz(qubit_label({i, c}), qubit_label({p, c}));
            }
        }
        // Horizontal edges from the still-live previous column.
        if (c > 1) {
            for (int i = 1; i <= layout_.rows(); ++i) {
                state_.apply_cz(qubit_label({i, c - 1}), qubit_label({i, c}));
            }
        }
    }
}

FlowDeps flow_deps(const BwsLayout &layout, const OutcomeMatrix &outcomes, QubitPos q) {
    FlowDeps d;
    if (q.col >= 2) d.s_x = outcomes.at(q.row, q.col - 1) != 0;
    bool z = false;
    if (q.col >= 3) z ^= outcomes.at(q.row, q.col - 2) != 0;
    int partner = layout.vertical_partner(q.row, q.col);
    if (partner != 0 && q.col >= 2) z ^= outcomes.at(partner, q.col - 1) != 0;
    d.s_z = z;
    return d;
}

OutcomeMatrix run_mbqc(const BwsLayout &layout, const AngleMatrix &angles,
                       const std::set<QubitPos> &flips, SplitRng &rng) {
    if (angles.rows() != layout.rows() || angles.cols() != layout.cols()) {
        throw DimensionError("angle matrix does not match layout");
    }
    for (const QubitPos &f : flips) {
        if (!layout.contains(f)) {
            throw std::out_of_range("flip position outside layout");
        }
    }

    FrontierSim sim(layout, [](StateVector &sv, QubitPos q) { sv.add_plus(qubit_label(q)); });
    OutcomeMatrix outcomes(layout.rows(), layout.cols());

    for (int j = 1; j <= layout.cols(); ++j) {
        sim.ensure_column(std::min(j + 1, layout.cols()));
        for (int i = 1; i <= layout.rows(); ++i) {
            QubitPos q{i, j};
            FlowDeps d = flow_deps(layout, outcomes, q);
            AngleZ8 meas = adapt_angle(angles.at(i, j), d.s_x, d.s_z);
            if (flips.count(q)) {
                sim.state().apply_z(qubit_label(q));
            }
            outcomes.at(i, j) =
                static_cast<uint8_t>(sim.state().measure_rotated(qubit_label(q), meas, rng));
        }
    }
    return outcomes;
}

} // namespace bwv
