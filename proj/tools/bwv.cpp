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

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <thread>

#include "bwverify/detection.hpp"
#include "bwverify/experiments.hpp"
#include "bwverify/serialize.hpp"
#include "bwverify/tape_table.hpp"

using namespace bwv;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

void write_text(const std::string &path, const std::string &text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << text;
}

json load_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

int default_threads() {
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

struct TrapGenArgs {
    std::string kind = "r";
    int n = 2, m = 5;
    uint64_t seed = 0;
    bool verify = false;
    std::string out;
};

int cmd_trap_gen(const TrapGenArgs &a) {
    BwsLayout layout(a.n, a.m);
    SplitRng rng(a.seed);
    TrapInstance trap =
        a.kind == "r" ? gen_rtrap(layout, rng) : gen_ctrap(layout, rng);
    if (a.verify) {
        std::vector<int> predicted = predict_trap_outcome(trap, layout);
        SplitRng check_rng(a.seed ^ 0xfeed);
        for (int run = 0; run < 20; ++run) {
            OutcomeMatrix o = run_mbqc(layout, trap.angles, {}, check_rng);
            for (int i = 1; i <= a.n; ++i) {
                if (o.at(i, a.m) != predicted[i - 1]) {
                    std::cerr << "determinism check failed at row " << i << "\n";
                    return kExitCheckFailure;
                }
            }
        }
    }
    write_text(a.out, trap_to_json(trap).dump(2) + "\n");
    return kExitPass;
}

struct RunProtocolArgs {
    int protocol = 1;
    int n = 2, m = 5, v = 4;
    std::string behavior = "honest";
    std::string pattern_file;
    int64_t trials = 1;
    uint64_t seed = 0;
    bool no_log = false;
    int threads = 0;
    std::string out;
    std::string config_file;
};

int cmd_run_protocol(RunProtocolArgs a) {
    if (!a.config_file.empty()) {
        // config supplies defaults; explicitly passed flags already won when
        // the caller filled the struct, so only fill fields still at their
        // built-in defaults
        json cfg = load_json_file(a.config_file);
        RunProtocolArgs d;
        if (a.protocol == d.protocol && cfg.contains("protocol")) a.protocol = cfg["protocol"];
        if (a.n == d.n && cfg.contains("n")) a.n = cfg["n"];
        if (a.m == d.m && cfg.contains("m")) a.m = cfg["m"];
        if (a.v == d.v && cfg.contains("v")) a.v = cfg["v"];
        if (a.behavior == d.behavior && cfg.contains("behavior")) a.behavior = cfg["behavior"];
        if (a.pattern_file == d.pattern_file && cfg.contains("pattern"))
            a.pattern_file = cfg["pattern"];
        if (a.trials == d.trials && cfg.contains("trials")) a.trials = cfg["trials"];
        if (cfg.contains("seed") && a.seed == d.seed) a.seed = cfg["seed"];
    }

    ProtocolConfig cfg;
    cfg.n = a.n;
    cfg.m = a.m;
    cfg.v = a.v;
    cfg.log_messages = !a.no_log && a.trials == 1;

    FlipPattern pattern;
    if (!a.pattern_file.empty()) pattern = flip_pattern_from_json(load_json_file(a.pattern_file));
    ProverBehavior prover;
    if (a.behavior == "honest") {
        prover = ProverBehavior::honest();
    } else if (a.behavior == "zflip") {
        prover = ProverBehavior::z_flip(pattern);
    } else if (a.behavior == "outcomeflip") {
        prover = ProverBehavior::outcome_flip(pattern);
    } else {
        std::cerr << "unknown behavior: " << a.behavior << "\n";
        return kExitUsage;
    }

    AngleMatrix target(a.n, a.m); // all-zero target
    int threads = a.threads > 0 ? a.threads : default_threads();

    std::vector<int> verdicts(a.trials);
    std::vector<TranscriptCounters> counters(a.trials);
    json single_transcript;
    parallel_trials(a.trials, threads, [&](int64_t t) {
        SplitRng rng(a.seed + static_cast<uint64_t>(t));
        auto [verdict, transcript] =
            a.protocol == 1 ? run_protocol1(cfg, target, prover, rng)
                            : run_protocol2(cfg, target, prover, rng);
        transcript.seed = a.seed + static_cast<uint64_t>(t);
        verdicts[t] = static_cast<int>(verdict.kind);
        counters[t] = transcript.counters;
        if (a.trials == 1) single_transcript = transcript_to_json(verdict, transcript);
    });

    int64_t accepts = 0, rejects = 0, aborts = 0;
    for (int vkind : verdicts) {
        if (vkind == 0) ++accepts;
        if (vkind == 1) ++rejects;
        if (vkind == 2) ++aborts;
    }
    OverheadCheck expect;
    {
        // formula check against the first complete (accepting) transcript
        Transcript probe;
        probe.protocol = a.protocol;
        probe.n = a.n;
        probe.m = a.m;
        probe.v = a.v;
        for (int64_t t = 0; t < a.trials; ++t) {
            if (verdicts[t] == 0) {
                probe.counters = counters[t];
                break;
            }
        }
        expect = overhead_counters(probe);
    }
    json out;
    out["protocol"] = a.protocol;
    out["trials"] = a.trials;
    out["seed"] = a.seed;
    out["accepts"] = accepts;
    out["rejects"] = rejects;
    out["aborts"] = aborts;
    out["counters"] = {{"bits_alice", expect.actual.bits_alice},
                       {"qubits_alice", expect.actual.qubits_alice},
                       {"bits_bob", expect.actual.bits_bob},
                       {"qubits_bob", expect.actual.qubits_bob}};
    out["counters_expected"] = {{"bits_alice", expect.expected.bits_alice},
                                {"qubits_alice", expect.expected.qubits_alice},
                                {"bits_bob", expect.expected.bits_bob},
                                {"qubits_bob", expect.expected.qubits_bob}};
    out["counters_match"] = expect.matches;
    if (a.trials == 1) out["transcript"] = single_transcript;
    write_text(a.out, out.dump(2) + "\n");
    return expect.matches || accepts == 0 ? kExitPass : kExitCheckFailure;
}

int cmd_analyze_epsilon(int v, const std::string &out) {
    SoundnessResult r = epsilon_curve(v);
    json j;
    j["v"] = v;
    j["epsilon"] = r.epsilon_float;
    j["epsilon_exact"] = r.epsilon.str();
    j["maximizers"] = r.vtilde_star;
    j["curve"] = r.curve;
    j["small_v_regime"] = r.small_v_regime;
    write_text(out, j.dump(2) + "\n");
    return kExitPass;
}

int cmd_analyze_table1(const std::string &out) {
    TapeTableReport rep = build_tape_table();
    std::string csv = "flips,rz,rx,h,oracle_ok,reference_ok\n";
    const auto &ref = tape_table_reference();
    for (size_t r = 0; r < rep.symbolic.size(); ++r) {
        const TapeTableRow &row = rep.symbolic[r];
        bool ref_ok = row.cells == ref[r].cells;
        csv += "\"" + row.label + "\",\"" + row.cells[0] + "\",\"" + row.cells[1] + "\",\"" +
               row.cells[2] + "\",yes," + (ref_ok ? "yes" : "no") + "\n";
    }
    csv += "# oracle mismatches: " + std::to_string(rep.oracle_mismatches) + "\n";
    csv += "# reference mismatches: " + std::to_string(rep.reference_mismatches) + "\n";
    for (const std::string &d : rep.diffs) csv += "# " + d + "\n";
    write_text(out, csv);
    return rep.oracle_mismatches == 0 ? kExitPass : kExitCheckFailure;
}

int cmd_analyze_find_undetectable(int w, const std::string &out) {
    auto patterns = find_undetectable(w);
    json arr = json::array();
    for (const auto &p : patterns) {
        json pts = json::array();
        for (const QubitPos &q : p) pts.push_back(json::array({q.row, q.col}));
        arr.push_back(std::move(pts));
    }
    json j;
    j["w"] = w;
    j["row"] = 2;
    j["count"] = patterns.size();
    j["patterns"] = std::move(arr);
    // the zero-detection set is spanned by same-row pairs at columns
    // (4y-1, 4y+1) per tape plus the (1, m) pair
    json gens = json::array();
    for (const auto &g : expected_undetectable_generators(2, w)) {
        json pts = json::array();
        for (const QubitPos &q : g) pts.push_back(json::array({q.row, q.col}));
        gens.push_back(std::move(pts));
    }
    j["generators"] = std::move(gens);
    write_text(out, j.dump(2) + "\n");
    return kExitPass;
}

int cmd_analyze_blindness(const std::string &out) {
    ReportBundle b = blindness_suite();
    write_text(out, b.to_json().dump(2) + "\n");
    return b.all_pass() ? kExitPass : kExitCheckFailure;
}

int cmd_analyze_twirl(uint64_t seed, const std::string &out) {
    ReportBundle b = twirl_suite(seed);
    write_text(out, b.to_json().dump(2) + "\n");
    return b.all_pass() ? kExitPass : kExitCheckFailure;
}

int cmd_analyze_soundness(int v, int vtilde, int64_t trials, uint64_t seed, int threads,
                          const std::string &out) {
    ProtocolConfig cfg;
    cfg.n = 2;
    cfg.m = 5;
    BwsLayout layout(cfg.n, cfg.m);
    AngleMatrix target(cfg.n, cfg.m);
    // a target whose brick column is active, so R-trap-invisible patterns corrupt it
    target.at(1, 4) = AngleZ8::half_pi();
    target.at(2, 4) = AngleZ8::half_pi();
    std::vector<std::set<QubitPos>> family = {{{1, 3}, {1, 5}}, {{1, 1}, {1, 5}}};
    SoundnessResult r =
        soundness_mc(cfg, v, vtilde, family, target, trials, seed,
                     threads > 0 ? threads : default_threads());
    json j;
    j["v"] = v;
    j["vtilde"] = vtilde;
    j["trials"] = trials;
    j["estimate"] = r.mc_estimate;
    j["ci95"] = {r.ci_low, r.ci_high};
    j["bound"] = r.bound.to_double();
    j["bound_exact"] = r.bound.str();
    j["within_bound"] = r.within_bound;
    // the estimate quantifies over the implemented behavior classes, not
    // over arbitrary channels
    j["adversary_model"] = "pauli z-flip patterns on uniformly chosen computations";
    write_text(out, j.dump(2) + "\n");
    return r.within_bound ? kExitPass : kExitCheckFailure;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"brickwork-state trap verification laboratory"};
    app.require_subcommand(1);

    TrapGenArgs tg;
    CLI::App *trap = app.add_subcommand("trap-gen", "generate a trap computation");
    trap->add_option("--kind", tg.kind, "r or c")->check(CLI::IsMember({"r", "c"}));
    trap->add_option("--n", tg.n, "rows")->required();
    trap->add_option("--m", tg.m, "columns")->required();
    trap->add_option("--seed", tg.seed, "rng seed")->required();
    trap->add_flag("--verify", tg.verify, "run the determinism oracle first");
    trap->add_option("--out", tg.out, "output path (default stdout)");

    RunProtocolArgs rp;
    CLI::App *run = app.add_subcommand("run-protocol", "run verification protocol 1 or 2");
    run->add_option("--protocol", rp.protocol)->check(CLI::IsMember({1, 2}));
    run->add_option("--n", rp.n, "rows");
    run->add_option("--m", rp.m, "columns");
    run->add_option("--v", rp.v, "number of traps");
    run->add_option("--behavior", rp.behavior, "honest, zflip or outcomeflip");
    run->add_option("--pattern", rp.pattern_file, "flip pattern json");
    run->add_option("--trials", rp.trials, "number of seeded runs");
    CLI::Option *seed_opt = run->add_option("--seed", rp.seed, "rng seed");
    run->add_option("--threads", rp.threads, "worker threads (default: hardware)");
    run->add_flag("--no-log", rp.no_log, "omit the message log");
    run->add_option("--out", rp.out, "output path (default stdout)");
    run->add_option("--config", rp.config_file, "json config; flags win");

    CLI::App *analyze = app.add_subcommand("analyze", "protocol and trap analyses");
    analyze->require_subcommand(1);

    int eps_v = 7;
    std::string eps_out;
    CLI::App *eps = analyze->add_subcommand("epsilon", "soundness curve");
    eps->add_option("--v", eps_v, "number of traps")->required();
    eps->add_option("--out", eps_out);

    std::string t1_out;
    CLI::App *t1 = analyze->add_subcommand("table1", "single-tape flip effects");
    t1->add_option("--out", t1_out);

    int fu_w = 1;
    std::string fu_out;
    CLI::App *fu = analyze->add_subcommand("find-undetectable", "exhaustive single-row scan");
    fu->add_option("--w", fu_w, "tape count (1..3)")->check(CLI::Range(1, 3))->required();
    fu->add_option("--out", fu_out);

    std::string bl_out;
    CLI::App *bl = analyze->add_subcommand("blindness", "averaged prover views");
    bl->add_option("--out", bl_out);

    uint64_t tw_seed = 0;
    std::string tw_out;
    CLI::App *tw = analyze->add_subcommand("twirl", "pauli twirl residuals");
    tw->add_option("--seed", tw_seed)->required();
    tw->add_option("--out", tw_out);

    int so_v = 7, so_vtilde = 7, so_threads = 0;
    int64_t so_trials = 10000;
    uint64_t so_seed = 0;
    std::string so_out;
    CLI::App *so = analyze->add_subcommand("soundness", "monte-carlo soundness bound");
    so->add_option("--v", so_v)->required();
    so->add_option("--vtilde", so_vtilde)->required();
    so->add_option("--trials", so_trials);
    so->add_option("--seed", so_seed)->required();
    so->add_option("--threads", so_threads);
    so->add_option("--out", so_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (*trap) return cmd_trap_gen(tg);
        if (*run) {
            if (rp.config_file.empty() && seed_opt->count() == 0) {
                std::cerr << "--seed is required (no silent time-based seeding)\n";
                return kExitUsage;
            }
            return cmd_run_protocol(rp);
        }
        if (*eps) return cmd_analyze_epsilon(eps_v, eps_out);
        if (*t1) return cmd_analyze_table1(t1_out);
        if (*fu) return cmd_analyze_find_undetectable(fu_w, fu_out);
        if (*bl) return cmd_analyze_blindness(bl_out);
        if (*tw) return cmd_analyze_twirl(tw_seed, tw_out);
        if (*so) return cmd_analyze_soundness(so_v, so_vtilde, so_trials, so_seed, so_threads,
                                              so_out);
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
