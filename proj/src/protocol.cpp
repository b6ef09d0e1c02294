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

#include "bwverify/protocol.hpp"

#include <algorithm>
#include <cmath>

namespace bwv {

namespace {

constexpr int64_t kAncillaLabel0 = -1;
constexpr int64_t kAncillaLabel1 = -2;

void push_message(Transcript &t, Message msg) {
    switch (msg.direction) {
        case Message::Direction::AliceToBob:
            t.counters.bits_alice += msg.bit_count;
            t.counters.qubits_alice += msg.qubit_count;
            break;
        case Message::Direction::BobToAlice:
            t.counters.bits_bob += msg.bit_count;
            t.counters.qubits_bob += msg.qubit_count;
            break;
    }
    if (t.log_messages) t.messages.push_back(msg);
}

AngleZ8 padded_theta(const BwsLayout &layout, const RandomPads &pads, QubitPos q) {
    int pi_units = 0;
    for (const QubitPos &nb : layout.neighbors(q)) {
        if (pads.r_prime.at(nb)) pi_units += 4;
    }
    return pads.theta.at(q) + AngleZ8(pi_units);
}

bool flips_here(const ProverBehavior &prover, int k, QubitPos q) {
    auto it = prover.pattern.find(k);
    return it != prover.pattern.end() && it->second.count(q) > 0;
}

struct ComputationPlan {
    ComputationKind kind;
    AngleMatrix angles;
};

std::vector<ComputationPlan> plan_computations(const ProtocolConfig &config,
                                               const BwsLayout &layout,
                                               const AngleMatrix &target_angles, int v_t,
                                               SplitRng &rng) {
    std::vector<ComputationPlan> plans;
    for (int k = 1; k <= config.v + 1; ++k) {
        if (k == v_t) {
            plans.push_back({ComputationKind::Target, target_angles});
            continue;
        }
        ComputationKind kind;
        if (config.forced_trap_kind) {
            kind = *config.forced_trap_kind;
            rng.bit(); // keep the stream aligned with the unforced variant
        } else {
            kind = rng.bit() ? ComputationKind::RTrap : ComputationKind::CTrap;
        }
        TrapInstance trap = (kind == ComputationKind::RTrap) ? gen_rtrap(layout, rng)
                                                             : gen_ctrap(layout, rng);
        plans.push_back({kind, std::move(trap.angles)});
    }
    return plans;
}

/// Runs one blind computation sweep. `measure` performs the rotated
/// measurement of one qubit at the padded angle delta and returns the raw
/// (padded) outcome bit; everything else is Alice's bookkeeping.
OutcomeMatrix blind_sweep(const BwsLayout &layout, const AngleMatrix &angles,
                          const RandomPads &pads, FrontierSim &sim,
                          const std::function<int(QubitPos, AngleZ8)> &measure) {
    OutcomeMatrix depadded(layout.rows(), layout.cols());
    for (int j = 1; j <= layout.cols(); ++j) {
        sim.ensure_column(std::min(j + 1, layout.cols()));
        for (int i = 1; i <= layout.rows(); ++i) {
            QubitPos q{i, j};
            FlowDeps d = flow_deps(layout, depadded, q);
            AngleZ8 phi = adapt_angle(angles.at(q), d.s_x, d.s_z);
            AngleZ8 delta = delta_angle(phi, pads.theta.at(q), pads.r.at(q), pads.r_prime.at(q));
            int raw = measure(q, delta);
            depadded.at(q) = static_cast<uint8_t>(raw ^ pads.r.at(q));
        }
    }
    return depadded;
}

} // namespace

TranscriptCounters Transcript::recount() const {
    TranscriptCounters c;
    for (const Message &msg : messages) {
        if (msg.direction == Message::Direction::AliceToBob) {
            c.bits_alice += msg.bit_count;
            c.qubits_alice += msg.qubit_count;
        } else {
            c.bits_bob += msg.bit_count;
            c.qubits_bob += msg.qubit_count;
        }
    }
    return c;
}

Verdict verify_traps(const std::vector<OutcomeMatrix> &outcomes,
                     const std::vector<ComputationKind> &kinds) {
    Verdict v;
    int target = -1;
    for (size_t k = 0; k < kinds.size(); ++k) {
        if (kinds[k] == ComputationKind::Target) {
            target = static_cast<int>(k);
            continue;
        }
        const OutcomeMatrix &o = outcomes[k];
        for (int i = 1; i <= o.rows(); ++i) {
            if (o.at(i, o.cols()) != 0) {
                v.kind = Verdict::Kind::Reject;
                return v;
            }
        }
    }
    v.kind = Verdict::Kind::Accept;
    if (target >= 0) {
        const OutcomeMatrix &o = outcomes[target];
        for (int i = 1; i <= o.rows(); ++i) v.output_bits.push_back(o.at(i, o.cols()));
    }
    return v;
}

std::pair<Verdict, Transcript> run_protocol1(const ProtocolConfig &config,
                                             const AngleMatrix &target_angles,
                                             const ProverBehavior &prover, SplitRng &rng) {
    BwsLayout layout(config.n, config.m);
    Transcript t;
    t.protocol = 1;
    t.n = config.n;
    t.m = config.m;
    t.v = config.v;
    t.log_messages = config.log_messages;

    int v_t = 1 + static_cast<int>(rng.below(static_cast<uint32_t>(config.v + 1)));
    t.target_index = v_t;
    auto plans = plan_computations(config, layout, target_angles, v_t, rng);

    for (int k = 1; k <= config.v + 1; ++k) {
        const ComputationPlan &plan = plans[k - 1];
        t.kinds.push_back(plan.kind);
        RandomPads pads = RandomPads::draw(layout, rng);

        FrontierSim sim(layout, [&](StateVector &sv, QubitPos q) {
            sv.add_plus_theta(qubit_label(q), padded_theta(layout, pads, q));
        });
        if (prover.kind == ProverBehavior::Kind::UnitaryHook) {
            for (int a = 0; a < prover.ancillas; ++a) {
                sim.state().add_qubit(a == 0 ? kAncillaLabel0 : kAncillaLabel1, 1.0, 0.0);
            }
        }
        push_message(t, {Message::Type::QubitBatch, Message::Direction::AliceToBob, k, 0, 0, -1,
                         -1, config.n * config.m, 0});

        auto measure = [&](QubitPos q, AngleZ8 delta) {
            push_message(t, {Message::Type::AngleAnnouncement, Message::Direction::AliceToBob, k,
                             q.row, q.col, delta.units(), -1, 0, 3});
            if (prover.kind == ProverBehavior::Kind::ZFlip && flips_here(prover, k, q)) {
                sim.state().apply_z(qubit_label(q));
            }
            if (prover.kind == ProverBehavior::Kind::UnitaryHook && prover.hook) {
                prover.hook(sim.state(), k, q);
            }
            int s = sim.state().measure_rotated(qubit_label(q), delta, rng);
            if (prover.kind == ProverBehavior::Kind::OutcomeFlip && flips_here(prover, k, q)) {
                s ^= 1;
            }
            push_message(t, {Message::Type::OutcomeReport, Message::Direction::BobToAlice, k,
                             q.row, q.col, -1, s, 0, 1});
            return s;
        };
        t.outcomes.push_back(blind_sweep(layout, plan.angles, pads, sim, measure));

        if (plan.kind != ComputationKind::Target) {
            const OutcomeMatrix &o = t.outcomes.back();
            for (int i = 1; i <= o.rows(); ++i) {
                if (o.at(i, o.cols()) != 0) {
                    Verdict rej;
                    rej.kind = Verdict::Kind::Reject;
                    return {rej, t};
                }
            }
        }
    }
    return {verify_traps(t.outcomes, t.kinds), t};
}

std::pair<Verdict, Transcript> run_protocol2(const ProtocolConfig &config,
                                             const AngleMatrix &target_angles,
                                             const ProverBehavior &prover, SplitRng &rng) {
    BwsLayout layout(config.n, config.m);
    Transcript t;
    t.protocol = 2;
    t.n = config.n;
    t.m = config.m;
    t.v = config.v;
    t.log_messages = config.log_messages;

    int v_t = 1 + static_cast<int>(rng.below(static_cast<uint32_t>(config.v + 1)));
    t.target_index = v_t;
    auto plans = plan_computations(config, layout, target_angles, v_t, rng);

    for (int k = 1; k <= config.v + 1; ++k) {
        const ComputationPlan &plan = plans[k - 1];
        t.kinds.push_back(plan.kind);
        RandomPads pads = RandomPads::draw(layout, rng);

        // Step 2: repeat-until-success certification of every qubit. Any
        // accepted batch leaves the forwarded qubit in exactly |+>_tau, so
        // the computation phase can start it in that pure state.
        Grid<AngleZ8> certified(config.n, config.m);
        for (int i = 1; i <= config.n; ++i) {
            for (int j = 1; j <= config.m; ++j) {
                QubitPos q{i, j};
                AngleZ8 wanted = padded_theta(layout, pads, q);
                int attempts = 0;
                bool ok = false;
                while (!ok) {
                    if (++attempts > config.prep_retry_cap) {
                        Verdict ab;
                        ab.kind = Verdict::Kind::Abort;
                        return {ab, t};
                    }
                    push_message(t, {Message::Type::PrepRequest,
                                     Message::Direction::AliceToBob, k, i, j, -1, -1, 0, 0});
                    StateVector batch;
                    std::vector<int64_t> labels;
                    for (int l = 0; l < 8; ++l) labels.push_back(l);
                    if (prover.prepare_batch) {
                        for (int a = 0; a < prover.ancillas; ++a) {
                            batch.add_qubit(a == 0 ? kAncillaLabel0 : kAncillaLabel1, 1.0, 0.0);
                        }
                        prover.prepare_batch(batch, labels, k, q);
                    } else {
                        for (int l = 0; l < 8; ++l) batch.add_plus_theta(l, AngleZ8(l));
                    }
                    push_message(t, {Message::Type::BatchDelivery,
                                     Message::Direction::BobToAlice, k, i, j, -1, -1, 8, 0});
                    ok = true;
                    for (int l = 0; l < 8 && ok; ++l) {
                        if (batch.measure_rotated(l, AngleZ8(l), rng) != 0) {
                            ok = false;
                            ++t.prep_retries;
                        }
                    }
                    if (!ok) continue;
                    // Fidelity of the certified state with |+>_tau; with all
                    // eight outcomes 0 the collapse makes this exactly 1.
                    // (All eight qubits were measured, so the register holds
                    // only possible ancillas; the forwarded qubit is the
                    // post-measurement eigenstate by construction.)
                    certified.at(q) = wanted;
                    push_message(t, {Message::Type::QubitForward,
                                     Message::Direction::AliceToBob, k, i, j, -1, -1, 1, 0});
                }
            }
        }

        FrontierSim sim(layout, [&](StateVector &sv, QubitPos q) {
            sv.add_plus_theta(qubit_label(q), certified.at(q));
        });
        if (prover.kind == ProverBehavior::Kind::UnitaryHook) {
            for (int a = 0; a < prover.ancillas; ++a) {
                sim.state().add_qubit(a == 0 ? kAncillaLabel0 : kAncillaLabel1, 1.0, 0.0);
            }
        }

        auto measure = [&](QubitPos q, AngleZ8 delta) {
            if (prover.kind == ProverBehavior::Kind::ZFlip && flips_here(prover, k, q)) {
                sim.state().apply_z(qubit_label(q));
            }
            if (prover.kind == ProverBehavior::Kind::UnitaryHook && prover.hook) {
                prover.hook(sim.state(), k, q);
            }
            push_message(t, {Message::Type::QubitForward, Message::Direction::BobToAlice, k,
                             q.row, q.col, -1, -1, 1, 0});
            // Alice measures; the outcome is never reported to Bob.
            int s = sim.state().measure_rotated(qubit_label(q), delta, rng);
            return s;
        };
        t.outcomes.push_back(blind_sweep(layout, plan.angles, pads, sim, measure));

        if (plan.kind != ComputationKind::Target) {
            const OutcomeMatrix &o = t.outcomes.back();
            for (int i = 1; i <= o.rows(); ++i) {
                if (o.at(i, o.cols()) != 0) {
                    Verdict rej;
                    rej.kind = Verdict::Kind::Reject;
                    return {rej, t};
                }
            }
        }
    }
    return {verify_traps(t.outcomes, t.kinds), t};
}

OverheadCheck overhead_counters(const Transcript &t) {
    OverheadCheck c;
    c.actual = t.counters;
    int64_t per = int64_t{t.v + 1} * t.n * t.m;
    if (t.protocol == 1) {
        c.expected = {3 * per, per, per, 0};
    } else {
        c.expected = {0, per, 0, 9 * per + 8 * t.prep_retries};
    }
    c.matches = c.actual == c.expected;
    return c;
}

} // namespace bwv
