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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bwverify/density.hpp"
#include "bwverify/protocol.hpp"
#include "bwverify/rational.hpp"
#include "bwverify/serialize.hpp"

namespace bwv {

// ---------------------------------------------------------------------------
// Reports

struct CheckResult {
    std::string name;
    bool pass = false;
    json payload; // numbers backing the verdict
};

struct ReportBundle {
    std::string suite;
    json parameters;
    uint64_t seed = 0;
    std::vector<CheckResult> checks;

    bool all_pass() const;
    json to_json() const;
    static ReportBundle from_json(const json &j);
    std::string to_csv() const; // one row per check
};

/// Deterministic bytes given the bundle; format "json" or "csv".
void emit_report(const ReportBundle &bundle, const std::string &format, const std::string &path);

// ---------------------------------------------------------------------------
// Soundness

struct SoundnessResult {
    int v = 0;
    std::vector<int> vtilde_star;  // argmax set of f
    Rational epsilon;              // max of f, exact
    double epsilon_float = 0.0;
    std::vector<double> curve;     // f(1..v+1)
    bool small_v_regime = false; // v < 7: the maximum sits at the boundary vt = v+1

    // Monte Carlo part (soundness_mc only)
    int vtilde = 0;
    int64_t trials = 0;
    double mc_estimate = 0.0;
    double ci_low = 0.0, ci_high = 0.0; // Wilson 95%
    double sigma = 0.0;
    Rational bound;                // f(vtilde), exact
    bool within_bound = false;     // mc_estimate <= bound + 3 sigma
};

/// f(vt) = (vt/(v+1)) (7/8)^{vt-1} maximized over integer vt in 1..v+1.
/// For v >= 7 the maximizers are {7, 8} and the maximum is 7^7/8^6/(v+1).
SoundnessResult epsilon_curve(int v);

/// Protocol-1 Monte Carlo estimate of p(E1 and E2): a ZFlip prover deviates
/// on `vtilde` uniformly chosen computations with patterns drawn from
/// `family`; E1 is "the target's computation is corrupted" (decided by
/// pushing the pattern through the pauli frame) and E2 is "Alice accepts".
SoundnessResult soundness_mc(const ProtocolConfig &config, int v, int vtilde,
                             const std::vector<std::set<QubitPos>> &family,
                             const AngleMatrix &target_angles, int64_t trials, uint64_t seed,
                             int threads = 1);

// ---------------------------------------------------------------------------
// Blindness

/// Bob's averaged view of one qubit: (1/32) sum over theta, r, r' of
/// |+_{theta'}><+_{theta'}| (x) |delta><delta| with theta' = theta + pad*pi
/// and delta = (-1)^{r'} phi + theta + r pi. 16-dimensional.
DensityMatrix blind_qubit_view(AngleZ8 phi, bool neighbor_pad_sum);

/// Control construction with theta pinned to 0 (shows the pad does the work).
DensityMatrix blind_qubit_view_no_theta(AngleZ8 phi, bool neighbor_pad_sum);

/// Max pairwise trace distance of the averaged views over the given pairs.
double blindness_check(const std::vector<std::pair<AngleZ8, AngleZ8>> &phi_pairs,
                       bool neighbor_pad_sum);

// ---------------------------------------------------------------------------
// Suites

struct SuiteDims {
    int n, m, v;
};

/// Honest Protocol 1 and Protocol 2 runs across the given dimensions:
/// asserts every run accepts, and that the de-padded Protocol-1 target
/// output distribution matches un-blinded run_mbqc (TV distance) on a fixed
/// small instance.
ReportBundle completeness_suite(const std::vector<SuiteDims> &dims, int runs_per_dim,
                                uint64_t seed, int threads = 1);

/// Twirl residuals for all ordered single-qubit pairs and random
/// two-qubit pairs.
ReportBundle twirl_suite(uint64_t seed);

/// Appendix-B check over all unordered phi pairs plus the no-pad control.
ReportBundle blindness_suite();

/// Chi-squared uniformity of announced delta values for a fixed position
/// over many seeded Protocol-1 runs.
ReportBundle delta_uniformity_suite(int64_t runs, uint64_t seed);

// ---------------------------------------------------------------------------
// Small statistics helpers

double total_variation(const std::map<std::vector<int>, int64_t> &a,
                       const std::map<std::vector<int>, int64_t> &b);

struct Wilson {
    double center, low, high;
};
Wilson wilson_interval(int64_t successes, int64_t trials);

/// Runs `trials` independent seeded jobs on `threads` workers; results are
/// merged in trial order so the aggregate is independent of thread count.
void parallel_trials(int64_t trials, int threads, const std::function<void(int64_t)> &job);

} // namespace bwv
