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

#include "bwverify/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <thread>

#include "bwverify/detection.hpp"

namespace bwv {

// ---------------------------------------------------------------------------
// Reports

bool ReportBundle::all_pass() const {
    for (const CheckResult &c : checks) {
        if (!c.pass) return false;
    }
    return true;
}

json ReportBundle::to_json() const {
    json j;
    j["suite"] = suite;
    j["parameters"] = parameters;
    j["seed"] = seed;
    json arr = json::array();
    for (const CheckResult &c : checks) {
        arr.push_back(json{{"name", c.name}, {"pass", c.pass}, {"payload", c.payload}});
    }
    j["checks"] = std::move(arr);
    j["all_pass"] = all_pass();
    return j;
}

ReportBundle ReportBundle::from_json(const json &j) {
    ReportBundle b;
    b.suite = j.at("suite").get<std::string>();
    b.parameters = j.at("parameters");
    b.seed = j.at("seed").get<uint64_t>();
    for (const json &c : j.at("checks")) {
        b.checks.push_back({c.at("name").get<std::string>(), c.at("pass").get<bool>(),
                            c.at("payload")});
    }
    return b;
}

std::string ReportBundle::to_csv() const {
    std::ostringstream os;
    os << "suite,check,pass,payload\n";
    for (const CheckResult &c : checks) {
        std::string payload = c.payload.dump();
        std::string quoted;
        quoted.reserve(payload.size() + 2);
        quoted += '"';
        for (char ch : payload) {
            if (ch == '"') quoted += '"';
            quoted += ch;
        }
        quoted += '"';
        os << suite << ',' << c.name << ',' << (c.pass ? "true" : "false") << ',' << quoted
           << '\n';
    }
    return os.str();
}

void emit_report(const ReportBundle &bundle, const std::string &format, const std::string &path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path);
    if (format == "csv") {
        out << bundle.to_csv();
    } else {
        out << bundle.to_json().dump(2) << "\n";
    }
    if (!out) throw std::runtime_error("write failed for " + path);
}

// ---------------------------------------------------------------------------
// Statistics helpers

double total_variation(const std::map<std::vector<int>, int64_t> &a,
                       const std::map<std::vector<int>, int64_t> &b) {
    int64_t na = 0, nb = 0;
    for (const auto &[k, c] : a) na += c;
    for (const auto &[k, c] : b) nb += c;
    double tv = 0.0;
    std::map<std::vector<int>, int64_t> keys;
    for (const auto &[k, c] : a) keys[k] = 0;
    for (const auto &[k, c] : b) keys[k] = 0;
    for (const auto &[k, unused] : keys) {
        double pa = a.count(k) ? static_cast<double>(a.at(k)) / na : 0.0;
        double pb = b.count(k) ? static_cast<double>(b.at(k)) / nb : 0.0;
        tv += std::abs(pa - pb);
    }
    return tv / 2.0;
}

Wilson wilson_interval(int64_t successes, int64_t trials) {
    const double z = 1.959963984540054; // 95%
    double n = static_cast<double>(trials);
    double p = static_cast<double>(successes) / n;
    double z2 = z * z;
    double denom = 1.0 + z2 / n;
    double center = (p + z2 / (2 * n)) / denom;
    double half = z * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n)) / denom;
    return {center, std::max(0.0, center - half), std::min(1.0, center + half)};
}

void parallel_trials(int64_t trials, int threads, const std::function<void(int64_t)> &job) {
    threads = std::max(1, threads);
    if (threads == 1) {
        for (int64_t t = 0; t < trials; ++t) job(t);
        return;
    }
    std::vector<std::thread> pool;
    std::atomic<int64_t> next{0};
    for (int w = 0; w < threads; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                int64_t t = next.fetch_add(1);
                if (t >= trials) return;
                job(t);
            }
        });
    }
    for (auto &th : pool) th.join();
}

// ---------------------------------------------------------------------------
// Soundness

namespace {

Rational f_exact(int vtilde, int v) {
    // (vt/(v+1)) * (7/8)^{vt-1}
    Rational r(vtilde, v + 1);
    for (int i = 1; i < vtilde; ++i) r *= Rational(7, 8);
    return r;
}

} // namespace

SoundnessResult epsilon_curve(int v) {
    if (v < 0) throw std::invalid_argument("v must be nonnegative");
    SoundnessResult r;
    r.v = v;
    r.small_v_regime = v < 7;
    for (int vt = 1; vt <= v + 1; ++vt) {
        // f(vt+1)/f(vt) = ((vt+1)/vt)(7/8), so f rises until 7, ties at 8.
        r.curve.push_back(static_cast<double>(vt) / (v + 1) * std::pow(7.0 / 8.0, vt - 1));
    }
    if (v >= 7) {
        r.vtilde_star = {7, 8};
        r.epsilon = Rational(823543, 262144 * int64_t{v + 1}); // 7^7 / (8^6 (v+1))
    } else {
        r.vtilde_star = {v + 1};
        r.epsilon = f_exact(v + 1, v);
    }
    r.epsilon_float = r.epsilon.to_double();
    return r;
}

SoundnessResult soundness_mc(const ProtocolConfig &config, int v, int vtilde,
                             const std::vector<std::set<QubitPos>> &family,
                             const AngleMatrix &target_angles, int64_t trials, uint64_t seed,
                             int threads) {
    if (vtilde < 0 || vtilde > v + 1) throw std::invalid_argument("vtilde out of range");
    SoundnessResult r = epsilon_curve(v);
    r.vtilde = vtilde;
    r.trials = trials;
    r.bound = vtilde == 0 ? Rational(0) : f_exact(vtilde, v);

    BwsLayout layout(config.n, config.m);
    std::vector<uint8_t> corrupts;
    for (const auto &pattern : family) {
        corrupts.push_back(flips_corrupt_computation(pattern, target_angles, layout) ? 1 : 0);
    }

    ProtocolConfig cfg = config;
    cfg.v = v;
    std::vector<uint8_t> success(trials, 0);
    parallel_trials(trials, threads, [&](int64_t trial) {
        SplitRng rng(seed + static_cast<uint64_t>(trial));
        // pick vtilde distinct computations
        std::vector<int> all(v + 1);
        std::iota(all.begin(), all.end(), 1);
        for (int i = 0; i < vtilde; ++i) {
            int j = i + static_cast<int>(rng.below(static_cast<uint32_t>(v + 1 - i)));
            std::swap(all[i], all[j]);
        }
        FlipPattern pattern;
        std::vector<int> chosen_family(vtilde);
        for (int i = 0; i < vtilde; ++i) {
            int fam = family.empty() ? -1 : static_cast<int>(rng.below(
                                                static_cast<uint32_t>(family.size())));
            chosen_family[i] = fam;
            if (fam >= 0) pattern[all[i]] = family[fam];
        }
        auto [verdict, transcript] =
            run_protocol1(cfg, target_angles, ProverBehavior::z_flip(pattern), rng);
        bool e1 = false;
        for (int i = 0; i < vtilde; ++i) {
            if (all[i] == transcript.target_index && chosen_family[i] >= 0 &&
                corrupts[chosen_family[i]]) {
                e1 = true;
            }
        }
        bool e2 = verdict.accepted();
        success[trial] = (e1 && e2) ? 1 : 0;
    });

    int64_t hits = std::accumulate(success.begin(), success.end(), int64_t{0});
    r.mc_estimate = static_cast<double>(hits) / static_cast<double>(trials);
    Wilson w = wilson_interval(hits, trials);
    r.ci_low = w.low;
    r.ci_high = w.high;
    r.sigma = std::sqrt(r.mc_estimate * (1.0 - r.mc_estimate) / static_cast<double>(trials));
    r.within_bound = r.mc_estimate <= r.bound.to_double() + 3.0 * r.sigma;
    return r;
}

// ---------------------------------------------------------------------------
// Blindness

namespace {

DensityMatrix plus_theta_qubit(AngleZ8 theta) {
    std::vector<cplx> psi = {cplx(M_SQRT1_2, 0), std::polar(M_SQRT1_2, theta.radians())};
    return DensityMatrix::pure(psi);
}

DensityMatrix delta_label(AngleZ8 delta) {
    DensityMatrix d(8);
    d.at(delta.units(), delta.units()) = 1.0;
    return d;
}

} // namespace

DensityMatrix blind_qubit_view(AngleZ8 phi, bool neighbor_pad_sum) {
    DensityMatrix rho(16);
    for (int theta = 0; theta < 8; ++theta) {
        for (int r = 0; r < 2; ++r) {
            for (int rp = 0; rp < 2; ++rp) {
                AngleZ8 th(theta);
                AngleZ8 theta_prime = neighbor_pad_sum ? th.plus_pi() : th;
                AngleZ8 delta = delta_angle(phi, th, r != 0, rp != 0);
                rho.accumulate(plus_theta_qubit(theta_prime).kron(delta_label(delta)), 1.0 / 32.0);
            }
        }
    }
    return rho;
}

DensityMatrix blind_qubit_view_no_theta(AngleZ8 phi, bool neighbor_pad_sum) {
    DensityMatrix rho(16);
    AngleZ8 theta_prime = neighbor_pad_sum ? AngleZ8::pi() : AngleZ8(0);
    for (int r = 0; r < 2; ++r) {
        for (int rp = 0; rp < 2; ++rp) {
            AngleZ8 delta = delta_angle(phi, AngleZ8(0), r != 0, rp != 0);
            rho.accumulate(plus_theta_qubit(theta_prime).kron(delta_label(delta)), 1.0 / 4.0);
        }
    }
    return rho;
}

double blindness_check(const std::vector<std::pair<AngleZ8, AngleZ8>> &phi_pairs,
                       bool neighbor_pad_sum) {
    double worst = 0.0;
    for (const auto &[a, b] : phi_pairs) {
        worst = std::max(worst, trace_distance(blind_qubit_view(a, neighbor_pad_sum),
                                               blind_qubit_view(b, neighbor_pad_sum)));
    }
    return worst;
}

// ---------------------------------------------------------------------------
// Suites

ReportBundle completeness_suite(const std::vector<SuiteDims> &dims, int runs_per_dim,
                                uint64_t seed, int threads) {
    ReportBundle bundle;
    bundle.suite = "completeness";
    bundle.seed = seed;
    json params = json::array();
    for (const SuiteDims &d : dims) params.push_back({{"n", d.n}, {"m", d.m}, {"v", d.v}});
    bundle.parameters = {{"dims", params}, {"runs_per_dim", runs_per_dim}};

    uint64_t stream = 0;
    for (const SuiteDims &d : dims) {
        for (int protocol : {1, 2}) {
            int runs = protocol == 1 ? runs_per_dim : std::max(1, runs_per_dim / 2);
            std::vector<uint8_t> accepted(runs, 0);
            ProtocolConfig cfg;
            cfg.n = d.n;
            cfg.m = d.m;
            cfg.v = d.v;
            AngleMatrix target(d.n, d.m); // all-zero target computation
            uint64_t base = seed ^ (0x9e37 + (stream++ << 32));
            parallel_trials(runs, threads, [&](int64_t t) {
                SplitRng rng(base + static_cast<uint64_t>(t));
                auto [verdict, transcript] =
                    protocol == 1 ? run_protocol1(cfg, target, ProverBehavior::honest(), rng)
                                  : run_protocol2(cfg, target, ProverBehavior::honest(), rng);
                accepted[t] = verdict.accepted() ? 1 : 0;
            });
            int64_t ok = std::accumulate(accepted.begin(), accepted.end(), int64_t{0});
            CheckResult c;
            c.name = "honest-accept-p" + std::to_string(protocol) + "-n" + std::to_string(d.n) +
                     "-m" + std::to_string(d.m) + "-v" + std::to_string(d.v);
            c.pass = ok == runs;
            c.payload = {{"accepted", ok}, {"runs", runs}};
            bundle.checks.push_back(std::move(c));
        }
    }

    // Pad cancellation on a fixed small instance: de-padded Protocol-1 output
    // vs the un-blinded simulation.
    {
        const int samples = 10000;
        ProtocolConfig cfg;
        cfg.n = 2;
        cfg.m = 5;
        cfg.v = 0;
        AngleMatrix target(2, 5);
        for (int i = 1; i <= 2; ++i) {
            for (int j = 1; j <= 5; ++j) target.at(i, j) = AngleZ8(i + 2 * j);
        }
        BwsLayout layout(2, 5);
        std::vector<std::vector<int>> blind_out(samples), plain_out(samples);
        parallel_trials(samples, threads, [&](int64_t t) {
            SplitRng rng(seed + 0x5151 + static_cast<uint64_t>(t));
            auto [verdict, transcript] =
                run_protocol1(cfg, target, ProverBehavior::honest(), rng);
            blind_out[t] = verdict.output_bits;
            SplitRng rng2(seed + 0xa3a3 + static_cast<uint64_t>(t));
            OutcomeMatrix o = run_mbqc(layout, target, {}, rng2);
            plain_out[t] = {o.at(1, 5), o.at(2, 5)};
        });
        std::map<std::vector<int>, int64_t> ha, hb;
        for (auto &v : blind_out) ha[v]++;
        for (auto &v : plain_out) hb[v]++;
        double tv = total_variation(ha, hb);
        CheckResult c;
        c.name = "pad-cancellation-tv";
        c.pass = tv < 0.05;
        c.payload = {{"tv", tv}, {"samples", samples}};
        bundle.checks.push_back(std::move(c));
    }
    return bundle;
}

ReportBundle twirl_suite(uint64_t seed) {
    ReportBundle bundle;
    bundle.suite = "pauli-twirl";
    bundle.seed = seed;
    bundle.parameters = {{"tolerance", 1e-12}};
    SplitRng rng(seed);

    double worst1 = 0.0;
    for (int p = 0; p < 4; ++p) {
        for (int q = 0; q < 4; ++q) {
            if (p == q) continue;
            DensityMatrix rho = random_density(2, rng);
            worst1 = std::max(worst1, pauli_twirl_residual(1, {p}, {q}, rho));
        }
    }
    bundle.checks.push_back(
        {"single-qubit-pairs", worst1 < 1e-12, {{"max_residual", worst1}, {"pairs", 12}}});

    double worst2 = 0.0;
    int checked = 0;
    for (int trial = 0; trial < 50; ++trial) {
        int p = static_cast<int>(rng.below(16));
        int q = static_cast<int>(rng.below(16));
        if (p == q) q = (q + 1) % 16;
        DensityMatrix rho = random_density(4, rng);
        worst2 = std::max(worst2, pauli_twirl_residual(2, {p & 3, p >> 2}, {q & 3, q >> 2}, rho));
        ++checked;
    }
    bundle.checks.push_back(
        {"two-qubit-pairs", worst2 < 1e-12, {{"max_residual", worst2}, {"pairs", checked}}});
    return bundle;
}

ReportBundle blindness_suite() {
    ReportBundle bundle;
    bundle.suite = "blindness";
    bundle.parameters = {{"tolerance", 1e-12}};

    double worst = 0.0;
    for (int pad = 0; pad < 2; ++pad) {
        std::vector<std::pair<AngleZ8, AngleZ8>> pairs;
        for (int a = 0; a < 8; ++a) {
            for (int b = a + 1; b < 8; ++b) pairs.emplace_back(AngleZ8(a), AngleZ8(b));
        }
        worst = std::max(worst, blindness_check(pairs, pad != 0));
    }
    bundle.checks.push_back(
        {"padded-views-indistinguishable", worst < 1e-12, {{"max_distance", worst}, {"pairs", 56}}});

    double control = trace_distance(blind_qubit_view_no_theta(AngleZ8(0), false),
                                    blind_qubit_view_no_theta(AngleZ8(2), false));
    bundle.checks.push_back(
        {"no-pad-control-distinguishable", control > 0.1, {{"distance", control}}});
    return bundle;
}

ReportBundle delta_uniformity_suite(int64_t runs, uint64_t seed) {
    ReportBundle bundle;
    bundle.suite = "delta-uniformity";
    bundle.seed = seed;
    bundle.parameters = {{"runs", runs}, {"position", {2, 3}}, {"chi2_crit_p001_df7", 24.3219}};

    ProtocolConfig cfg;
    cfg.n = 2;
    cfg.m = 5;
    cfg.v = 0;
    cfg.log_messages = true;
    AngleMatrix target(2, 5);
    for (int i = 1; i <= 2; ++i) {
        for (int j = 1; j <= 5; ++j) target.at(i, j) = AngleZ8(3 * i + j);
    }
    std::vector<int64_t> counts(8, 0);
    for (int64_t t = 0; t < runs; ++t) {
        SplitRng rng(seed + static_cast<uint64_t>(t));
        auto [verdict, transcript] = run_protocol1(cfg, target, ProverBehavior::honest(), rng);
        for (const Message &msg : transcript.messages) {
            if (msg.type == Message::Type::AngleAnnouncement && msg.row == 2 && msg.col == 3) {
                counts[msg.delta_units]++;
            }
        }
    }
    double expected = static_cast<double>(runs) / 8.0;
    double chi2 = 0.0;
    for (int64_t c : counts) {
        double d = static_cast<double>(c) - expected;
        chi2 += d * d / expected;
    }
    bundle.checks.push_back({"delta-chi2-uniform",
                             chi2 < 24.3219,
                             {{"chi2", chi2}, {"counts", counts}}});
    return bundle;
}

} // namespace bwv
