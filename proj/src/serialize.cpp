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

#include "bwverify/serialize.hpp"

namespace bwv {

namespace {

const char *kind_name(ComputationKind k) {
    switch (k) {
        case ComputationKind::Target: return "target";
        case ComputationKind::RTrap: return "r-trap";
        case ComputationKind::CTrap: return "c-trap";
    }
    return "?";
}

const char *verdict_name(Verdict::Kind k) {
    switch (k) {
        case Verdict::Kind::Accept: return "accept";
        case Verdict::Kind::Reject: return "reject";
        case Verdict::Kind::Abort: return "abort";
    }
    return "?";
}

const char *message_name(Message::Type t) {
    switch (t) {
        case Message::Type::QubitBatch: return "qubit-batch";
        case Message::Type::AngleAnnouncement: return "angle";
        case Message::Type::OutcomeReport: return "outcome";
        case Message::Type::PrepRequest: return "prep-request";
        case Message::Type::BatchDelivery: return "batch";
        case Message::Type::QubitForward: return "qubit";
    }
    return "?";
}

} // namespace

json angle_matrix_to_json(const AngleMatrix &angles) {
    json rows = json::array();
    for (int i = 1; i <= angles.rows(); ++i) {
        json row = json::array();
        for (int j = 1; j <= angles.cols(); ++j) row.push_back(angles.at(i, j).units());
        rows.push_back(std::move(row));
    }
    return json{{"n", angles.rows()}, {"m", angles.cols()}, {"angles", std::move(rows)}};
}

AngleMatrix angle_matrix_from_json(const json &j) {
    int n = j.at("n").get<int>();
    int m = j.at("m").get<int>();
    AngleMatrix a(n, m);
    const json &rows = j.at("angles");
    if (static_cast<int>(rows.size()) != n) throw std::invalid_argument("bad angle row count");
    for (int i = 1; i <= n; ++i) {
        const json &row = rows.at(i - 1);
        if (static_cast<int>(row.size()) != m) throw std::invalid_argument("bad angle col count");
        for (int jcol = 1; jcol <= m; ++jcol) {
            int k = row.at(jcol - 1).get<int>();
            if (k < 0 || k > 7) throw std::invalid_argument("angle out of range 0..7");
            a.at(i, jcol) = AngleZ8(k);
        }
    }
    return a;
}

json trap_to_json(const TrapInstance &trap) {
    json j;
    j["kind"] = trap.kind == ComputationKind::RTrap ? "r-trap" : "c-trap";
    j["angles"] = angle_matrix_to_json(trap.angles);
    if (trap.kind == ComputationKind::RTrap) {
        json uses = json::array();
        for (const auto &row : trap.tape_use) {
            json u = json::array();
            for (TapeUse t : row) {
                u.push_back(t == TapeUse::Hadamard ? "H" : (t == TapeUse::RotXY ? "RZ" : "RX"));
            }
            uses.push_back(std::move(u));
        }
        j["tape_use"] = std::move(uses);
    } else {
        j["initial_z"] = trap.initial_z;
        j["brick_control_upper"] = trap.brick_control_upper;
    }
    json finals = json::array();
    for (const AngleZ8 &a : trap.predicted_final_angle) finals.push_back(a.units());
    j["predicted_final_angle"] = std::move(finals);
    return j;
}

TrapInstance trap_from_json(const json &j) {
    TrapInstance t;
    std::string kind = j.at("kind").get<std::string>();
    t.kind = kind == "r-trap" ? ComputationKind::RTrap : ComputationKind::CTrap;
    t.angles = angle_matrix_from_json(j.at("angles"));
    if (t.kind == ComputationKind::RTrap) {
        for (const json &row : j.at("tape_use")) {
            std::vector<TapeUse> uses;
            for (const json &u : row) {
                std::string s = u.get<std::string>();
                uses.push_back(s == "H" ? TapeUse::Hadamard
                                        : (s == "RZ" ? TapeUse::RotXY : TapeUse::RotZY));
            }
            t.tape_use.push_back(std::move(uses));
        }
    } else {
        t.initial_z = j.at("initial_z").get<std::vector<uint8_t>>();
        t.brick_control_upper = j.at("brick_control_upper").get<std::vector<uint8_t>>();
    }
    for (const json &a : j.at("predicted_final_angle")) {
        t.predicted_final_angle.push_back(AngleZ8(a.get<int>()));
    }
    return t;
}

json flip_pattern_to_json(const FlipPattern &pattern) {
    json j = json::object();
    for (const auto &[k, positions] : pattern) {
        json arr = json::array();
        for (const QubitPos &q : positions) arr.push_back(json::array({q.row, q.col}));
        j[std::to_string(k)] = std::move(arr);
    }
    return j;
}

FlipPattern flip_pattern_from_json(const json &j) {
    FlipPattern p;
    for (auto it = j.begin(); it != j.end(); ++it) {
        int k = std::stoi(it.key());
        std::set<QubitPos> positions;
        for (const json &pos : it.value()) {
            positions.insert({pos.at(0).get<int>(), pos.at(1).get<int>()});
        }
        p[k] = std::move(positions);
    }
    return p;
}

json transcript_to_json(const Verdict &verdict, const Transcript &t) {
    json j;
    j["seed"] = t.seed;
    j["protocol"] = t.protocol;
    j["n"] = t.n;
    j["m"] = t.m;
    j["v"] = t.v;
    j["verdict"] = verdict_name(verdict.kind);
    if (verdict.accepted()) j["output"] = verdict.output_bits;
    j["counters"] = {{"bits_alice", t.counters.bits_alice},
                     {"qubits_alice", t.counters.qubits_alice},
                     {"bits_bob", t.counters.bits_bob},
                     {"qubits_bob", t.counters.qubits_bob}};
    j["prep_retries"] = t.prep_retries;
    json kinds = json::array();
    for (ComputationKind k : t.kinds) kinds.push_back(kind_name(k));
    j["kinds"] = std::move(kinds);
    if (t.log_messages) {
        json msgs = json::array();
        for (const Message &msg : t.messages) {
            json mj = {{"type", message_name(msg.type)},
                       {"dir", msg.direction == Message::Direction::AliceToBob ? "a->b" : "b->a"},
                       {"k", msg.computation}};
            if (msg.row) mj["i"] = msg.row;
            if (msg.col) mj["j"] = msg.col;
            if (msg.delta_units >= 0) mj["delta"] = msg.delta_units;
            if (msg.outcome >= 0) mj["s"] = msg.outcome;
            msgs.push_back(std::move(mj));
        }
        j["messages"] = std::move(msgs);
    }
    return j;
}

} // namespace bwv
