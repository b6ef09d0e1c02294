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
#include <optional>
#include <string>
#include <vector>

#include "bwverify/grids.hpp"
#include "bwverify/layout.hpp"
#include "bwverify/mbqc.hpp"
#include "bwverify/trap_gen.hpp"

namespace bwv {

struct Message {
    enum class Type {
        QubitBatch,        // Alice -> Bob: the nm prepared qubits (Protocol 1)
        AngleAnnouncement, // Alice -> Bob: delta for one qubit (Protocol 1)
        OutcomeReport,     // Bob -> Alice: one measurement bit (Protocol 1)
        PrepRequest,       // Alice -> Bob: ask for an eight-qubit batch (Protocol 2)
        BatchDelivery,     // Bob -> Alice: the eight-qubit batch (Protocol 2)
        QubitForward,      // one qubit crossing the channel (Protocol 2)
    };
    enum class Direction { AliceToBob, BobToAlice };

    Type type;
    Direction direction;
    int computation = 0; // k in 1..v+1
    int row = 0;
    int col = 0;
    int delta_units = -1; // AngleAnnouncement
    int outcome = -1;     // OutcomeReport
    int qubit_count = 0;  // quantum payload size
    int bit_count = 0;    // classical payload size
};

struct TranscriptCounters {
    int64_t bits_alice = 0;   // classical bits Alice -> Bob
    int64_t qubits_alice = 0; // qubits Alice -> Bob
    int64_t bits_bob = 0;     // classical bits Bob -> Alice
    int64_t qubits_bob = 0;   // qubits Bob -> Alice
    bool operator==(const TranscriptCounters &) const = default;
};

struct Verdict {
    enum class Kind { Accept, Reject, Abort };
    Kind kind = Kind::Accept;
    std::vector<int> output_bits; // target last column, only when accepted
    bool accepted() const { return kind == Kind::Accept; }
};

struct Transcript {
    uint64_t seed = 0;
    int protocol = 1;
    int n = 0, m = 0, v = 0;
    int target_index = 0; // v_t
    TranscriptCounters counters;
    std::vector<ComputationKind> kinds;       // per computation
    std::vector<OutcomeMatrix> outcomes;      // de-padded, per computation
    std::vector<Message> messages;            // optionally elided
    bool log_messages = true;
    int64_t prep_retries = 0;                 // Protocol 2

    TranscriptCounters recount() const;
};

/// What the prover does with the qubits he touches.
struct ProverBehavior {
    enum class Kind { Honest, ZFlip, OutcomeFlip, UnitaryHook };
    Kind kind = Kind::Honest;

    /// Phase-flip positions per computation index (ZFlip / OutcomeFlip).
    FlipPattern pattern;

    /// UnitaryHook: called before each measurement with the live register
    /// (graph frontier plus the prover's ancilla qubits, labels -1 and -2).
    std::function<void(StateVector &, int computation, QubitPos)> hook;
    int ancillas = 0; // 0..2

    /// Protocol 2 only: replaces the honest eight-qubit batch preparation.
    /// Labels batch_labels[l] must be created in the state, l = tau in 0..7;
    /// ancilla labels may be entangled with them.
    std::function<void(StateVector &, const std::vector<int64_t> &batch_labels, int computation,
                       QubitPos)>
        prepare_batch;

    static ProverBehavior honest() { return {}; }
    static ProverBehavior z_flip(FlipPattern p) {
        ProverBehavior b;
        b.kind = Kind::ZFlip;
        b.pattern = std::move(p);
        return b;
    }
    static ProverBehavior outcome_flip(FlipPattern p) {
        ProverBehavior b;
        b.kind = Kind::OutcomeFlip;
        b.pattern = std::move(p);
        return b;
    }
};

struct ProtocolConfig {
    int n = 2;
    int m = 5;
    int v = 4;
    bool log_messages = false;
    int prep_retry_cap = 10000; // Protocol 2
    /// Forces every trap coin to the given kind (experiments use this to
    /// isolate R-trap-only detection); unset means a fair coin.
    std::optional<ComputationKind> forced_trap_kind;
};

std::pair<Verdict, Transcript> run_protocol1(const ProtocolConfig &config,
                                             const AngleMatrix &target_angles,
                                             const ProverBehavior &prover, SplitRng &rng);

std::pair<Verdict, Transcript> run_protocol2(const ProtocolConfig &config,
                                             const AngleMatrix &target_angles,
                                             const ProverBehavior &prover, SplitRng &rng);

/// Accept iff every non-target computation's last column is all zeros.
Verdict verify_traps(const std::vector<OutcomeMatrix> &outcomes,
                     const std::vector<ComputationKind> &kinds);

struct OverheadCheck {
    TranscriptCounters actual;
    TranscriptCounters expected;
    bool matches = false;
};

/// Compares the transcript's counters with the closed-form totals:
/// Protocol 1: 3(v+1)nm / (v+1)nm / (v+1)nm / 0; Protocol 2 (honest, no
/// retries): qubits only, (v+1)nm from Alice and 9(v+1)nm from Bob.
OverheadCheck overhead_counters(const Transcript &t);

} // namespace bwv
