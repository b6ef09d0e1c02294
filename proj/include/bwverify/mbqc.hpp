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

#include <functional>
#include <set>

#include "bwverify/grids.hpp"
#include "bwverify/layout.hpp"
#include "bwverify/statevector.hpp"

namespace bwv {

inline int64_t qubit_label(QubitPos q) { return int64_t{q.row} * 1024 + q.col; }

/// Lazy-frontier walk over a brickwork graph: column j+1 is created and
/// entangled just before column j is measured, so the live register never
/// exceeds 2n qubits. Initial states and the per-qubit measurement are
/// supplied by the caller, which is what lets the protocol engine put a
/// prover between "state exists" and "outcome reported".
class FrontierSim {
  public:
    /// prepare(i, j) returns the qubit's initial state as (a0, a1).
    using Preparer = std::function<void(StateVector &, QubitPos)>;

    FrontierSim(const BwsLayout &layout, Preparer prepare);

    /// Create (and entangle) columns up to `col`, in order.
    void ensure_column(int col);

    StateVector &state() { return state_; }
    const BwsLayout &layout() const { return layout_; }

  private:
    const BwsLayout &layout_;
    Preparer prepare_;
    StateVector state_;
    int created_cols_ = 0;
};

/// Tracks the flow dependencies: for qubit (i,j),
///   s_X = s_{i,j-1}
///   s_Z = s_{i,j-2} xor (xor of s_{i',j-1} over vertical partners i' at column j)
/// with out-of-range indices contributing 0.
struct FlowDeps {
    bool s_x = false;
    bool s_z = false;
};

FlowDeps flow_deps(const BwsLayout &layout, const OutcomeMatrix &outcomes, QubitPos q);

/// Runs the un-blinded computation: |+> qubits, cZ edges, adaptive
/// measurement of each column at adapt_angle(phi, s_X, s_Z). A Pauli-Z is
/// applied at each position in `flips` immediately before that qubit's
/// measurement. Returns all outcomes.
OutcomeMatrix run_mbqc(const BwsLayout &layout, const AngleMatrix &angles,
                       const std::set<QubitPos> &flips, SplitRng &rng);

} // namespace bwv
