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

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

#include "bwverify/angle.hpp"
#include "bwverify/rng.hpp"

namespace bwv {

using cplx = std::complex<double>;
using Mat2 = std::array<cplx, 4>; // row-major 2x2

Mat2 gate_rz(AngleZ8 phi);
Mat2 gate_rx(AngleZ8 phi);
Mat2 gate_rz_dag(AngleZ8 phi);
Mat2 gate_h();
Mat2 gate_x();
Mat2 gate_z();
Mat2 mat2_mul(const Mat2 &a, const Mat2 &b);

/// Dense simulator for a small register of labelled qubits. Labels are
/// arbitrary integers (MBQC code uses row*1000+col), so qubits can be
/// created and retired as a measurement frontier sweeps the graph.
class StateVector {
  public:
    StateVector() : amps_{cplx(1.0, 0.0)} {}

    int num_qubits() const { return static_cast<int>(labels_.size()); }
    bool has_label(int64_t label) const;

    /// Appends one qubit in state a0|0> + a1|1>.
    void add_qubit(int64_t label, cplx a0, cplx a1);
    void add_plus(int64_t label) { add_qubit(label, M_SQRT1_2, M_SQRT1_2); }
    /// |+>_theta = (|0> + e^{i theta} |1>)/sqrt(2)
    void add_plus_theta(int64_t label, AngleZ8 theta);

    void apply_1q(int64_t label, const Mat2 &g);
    void apply_rz(int64_t label, AngleZ8 phi) { apply_1q(label, gate_rz(phi)); }
    void apply_rx(int64_t label, AngleZ8 phi) { apply_1q(label, gate_rx(phi)); }
    void apply_h(int64_t label) { apply_1q(label, gate_h()); }
    void apply_x(int64_t label) { apply_1q(label, gate_x()); }
    void apply_z(int64_t label) { apply_1q(label, gate_z()); }
    void apply_cz(int64_t a, int64_t b);
    void apply_cnot(int64_t control, int64_t target);

    /// Probability of outcome 0 when measuring `label` in the basis
    /// { R_Z(delta)|+>, R_Z(delta)|-> }.
    double prob_outcome0(int64_t label, AngleZ8 delta) const;

    /// Projective measurement in the rotated basis; outcome 0 corresponds to
    /// the projector onto R_Z(delta)|+>. The measured qubit is removed from
    /// the register after the collapse.
    int measure_rotated(int64_t label, AngleZ8 delta, SplitRng &rng);

    /// Collapse without sampling (for oracle code that enumerates branches).
    /// Returns the branch probability; the state is renormalized.
    double project_rotated(int64_t label, AngleZ8 delta, int outcome);

    double norm() const;
    const std::vector<cplx> &amplitudes() const { return amps_; }
    const std::vector<int64_t> &labels() const { return labels_; }

    /// <a|b> with matching label sets (used by fidelity oracles).
    static cplx inner(const StateVector &a, const StateVector &b);

    /// Reduced density matrix of `keep` (row-major, dimension 2^|keep|),
    /// tracing out everything else. Ordering follows `keep`.
    std::vector<cplx> reduced_density(const std::vector<int64_t> &keep) const;

  private:
    int index_of(int64_t label) const;
    void remove_qubit_at(int idx, int fixed_outcome_bit);

    std::vector<cplx> amps_;
    std::vector<int64_t> labels_; // labels_[k] lives on bit k
};

} // namespace bwv
