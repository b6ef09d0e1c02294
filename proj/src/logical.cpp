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

#include "bwverify/logical.hpp"

namespace bwv {

LogicalCircuit extract_logical_circuit(const AngleMatrix &angles, const BwsLayout &layout) {
    if (angles.rows() != layout.rows() || angles.cols() != layout.cols()) {
        throw DimensionError("angle matrix does not match layout");
    }
    LogicalCircuit lc;
    lc.wires = layout.rows();
    lc.tapes = layout.tapes();

    auto rotation = [&](RotationAxis axis, int col) {
        LogicalCircuit::Layer layer;
        layer.rot.axis = axis;
        layer.rot.source_col = col;
        layer.rot.angles.resize(layout.rows());
        for (int i = 1; i <= layout.rows(); ++i) {
            layer.rot.angles[i - 1] = angles.at(i, col);
        }
        return layer;
    };
    auto cz_layer = [&](int tape) {
        LogicalCircuit::Layer layer;
        layer.is_cz = true;
        int first = (tape % 2 == 1) ? 1 : 2;
        for (int i = first; i + 1 <= layout.rows(); i += 2) {
            layer.cz.pairs.emplace_back(i, i + 1);
        }
        return layer;
    };

    for (int y = 1; y <= layout.tapes(); ++y) {
        lc.layers.push_back(rotation(RotationAxis::Z, 4 * y - 3));
        lc.layers.push_back(rotation(RotationAxis::X, 4 * y - 2));
        lc.layers.push_back(rotation(RotationAxis::Z, 4 * y - 1));
        lc.layers.push_back(cz_layer(y));
        lc.layers.push_back(rotation(RotationAxis::X, 4 * y));
        lc.layers.push_back(cz_layer(y));
    }
    lc.measurement.resize(layout.rows());
    for (int i = 1; i <= layout.rows(); ++i) {
        lc.measurement[i - 1] = angles.at(i, layout.cols());
    }
    return lc;
}

ByproductDecoration insert_flip_byproducts(const LogicalCircuit &circuit,
                                           const std::set<QubitPos> &flips) {
    ByproductDecoration d;
    d.outcome_flips.assign(circuit.wires, 0);
    int last_col = 0;
    for (size_t k = 0; k < circuit.layers.size(); ++k) {
        const LogicalCircuit::Layer &layer = circuit.layers[k];
        if (layer.is_cz) continue;
        last_col = layer.rot.source_col;
        for (int i = 1; i <= circuit.wires; ++i) {
            if (flips.count({i, layer.rot.source_col})) {
                d.inserts.push_back({k, i, layer.rot.axis == RotationAxis::X});
            }
        }
    }
    int meas_col = last_col + 1;
    for (int i = 1; i <= circuit.wires; ++i) {
        if (flips.count({i, meas_col})) d.outcome_flips[i - 1] = 1;
    }
    for (const QubitPos &f : flips) {
        if (f.col < 1 || f.col > meas_col || f.row < 1 || f.row > circuit.wires) {
            throw std::out_of_range("flip outside the circuit");
        }
    }
    return d;
}

std::vector<int> LogicalCircuit::simulate(SplitRng &rng, const std::set<QubitPos> &flips) const {
    ByproductDecoration deco = insert_flip_byproducts(*this, flips);
    StateVector sv;
    for (int i = 1; i <= wires; ++i) sv.add_plus(i);

    size_t insert_cursor = 0;
    for (size_t k = 0; k < layers.size(); ++k) {
        const Layer &layer = layers[k];
        if (layer.is_cz) {
            for (auto [a, b] : layer.cz.pairs) sv.apply_cz(a, b);
            continue;
        }
        while (insert_cursor < deco.inserts.size() && deco.inserts[insert_cursor].layer_index == k) {
            const ByproductDecoration::Insert &ins = deco.inserts[insert_cursor++];
            if (ins.is_x) {
                sv.apply_x(ins.wire);
            } else {
                sv.apply_z(ins.wire);
            }
        }
        for (int i = 1; i <= wires; ++i) {
            AngleZ8 a = layer.rot.angles[i - 1];
            if (layer.rot.axis == RotationAxis::Z) {
                sv.apply_1q(i, gate_rz_dag(a));
            } else {
                sv.apply_1q(i, mat2_mul(gate_h(), mat2_mul(gate_rz_dag(a), gate_h())));
            }
        }
    }

    std::vector<int> out(wires);
    for (int i = 1; i <= wires; ++i) {
        out[i - 1] = sv.measure_rotated(i, measurement[i - 1], rng) ^ deco.outcome_flips[i - 1];
    }
    return out;
}

bool LogicalCircuit::cz_layers_cancel() const {
    size_t k = 0;
    while (k < layers.size()) {
        if (!layers[k].is_cz) {
            ++k;
            continue;
        }
        // The twin must be the next cz layer, with only zero-angle rotations
        // in between and the same pairing.
        size_t j = k + 1;
        while (j < layers.size() && !layers[j].is_cz) {
            for (const AngleZ8 &a : layers[j].rot.angles) {
                if (!a.is_zero()) return false;
            }
            ++j;
        }
        if (j >= layers.size() || layers[j].cz.pairs != layers[k].cz.pairs) return false;
        k = j + 1;
    }
    return true;
}

} // namespace bwv
