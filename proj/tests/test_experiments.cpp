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

#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "bwverify/detection.hpp"
#include "bwverify/experiments.hpp"

using namespace bwv;

TEST_CASE("epsilon curve at v=7") {
    SoundnessResult r = epsilon_curve(7);
    CHECK(r.epsilon == Rational(823543, 2097152));
    CHECK(r.epsilon_float == doctest::Approx(0.39269).epsilon(1e-4));
    CHECK(r.vtilde_star == std::vector<int>{7, 8});
    CHECK_FALSE(r.small_v_regime);
    // f(1) = 1/8
    CHECK(r.curve[0] == doctest::Approx(1.0 / 8.0).epsilon(1e-12));
    // the tie: f(7) == f(8) exactly in doubles too
    CHECK(r.curve[6] == doctest::Approx(r.curve[7]).epsilon(1e-15));
}

TEST_CASE("epsilon curve at v=99 approaches 3.1415/(v+1)") {
    SoundnessResult r = epsilon_curve(99);
    CHECK(r.epsilon_float == doctest::Approx(0.031415).epsilon(1e-3));
    CHECK(r.vtilde_star == std::vector<int>{7, 8});
}

TEST_CASE("epsilon times v+1 is constant for v >= 7") {
    Rational expected(823543, 262144); // 7^7 / 8^6
    double prev = 1.0;
    for (int v = 7; v <= 40; ++v) {
        SoundnessResult r = epsilon_curve(v);
        CHECK((r.epsilon * Rational(v + 1)) == expected);
        CHECK(r.epsilon_float < prev); // strictly decreasing
        prev = r.epsilon_float;
    }
}

TEST_CASE("epsilon curve in the small-v regime is flagged") {
    SoundnessResult r = epsilon_curve(4);
    CHECK(r.small_v_regime);
    CHECK(r.vtilde_star == std::vector<int>{5});
    CHECK(r.epsilon == Rational(2401, 4096)); // (7/8)^4
}

TEST_CASE("soundness mc: honest prover never corrupts") {
    ProtocolConfig cfg;
    cfg.n = 2;
    cfg.m = 5;
    AngleMatrix target(2, 5);
    SoundnessResult r = soundness_mc(cfg, 3, 0, {}, target, 300, 5, 2);
    CHECK(r.mc_estimate == 0.0);
    CHECK(r.within_bound);
}

TEST_CASE("soundness mc: single detectable flip lands at 1/(v+1)") {
    ProtocolConfig cfg;
    cfg.n = 2;
    cfg.m = 5;
    AngleMatrix target(2, 5); // all-zero: an output flip corrupts it
    std::vector<std::set<QubitPos>> family = {{{1, 5}}};
    SoundnessResult r = soundness_mc(cfg, 7, 1, family, target, 4000, 99, 2);
    // the flip hits the target with prob 1/8 and no trap is touched
    CHECK(r.mc_estimate == doctest::Approx(1.0 / 8.0).epsilon(0.15));
    CHECK(r.within_bound);
}

TEST_CASE("blindness: averaged views are independent of phi") {
    std::vector<std::pair<AngleZ8, AngleZ8>> pairs = {
        {AngleZ8(0), AngleZ8(3)}, {AngleZ8(1), AngleZ8(6)}, {AngleZ8(2), AngleZ8(7)}};
    CHECK(blindness_check(pairs, false) < 1e-12);
    CHECK(blindness_check(pairs, true) < 1e-12);
    CHECK(blindness_check({{AngleZ8(3), AngleZ8(3)}}, false) == doctest::Approx(0.0));
}

TEST_CASE("blindness control without the theta pad is distinguishable") {
    double d = trace_distance(blind_qubit_view_no_theta(AngleZ8(0), false),
                              blind_qubit_view_no_theta(AngleZ8(2), false));
    CHECK(d > 0.1);
}

TEST_CASE("blindness suite passes") {
    ReportBundle b = blindness_suite();
    CHECK(b.all_pass());
}

TEST_CASE("twirl suite passes") {
    ReportBundle b = twirl_suite(2024);
    CHECK(b.all_pass());
}

TEST_CASE("report bundle json round-trip and deterministic bytes") {
    ReportBundle b;
    b.suite = "demo";
    b.seed = 9;
    b.parameters = {{"alpha", 1}};
    b.checks.push_back({"first", true, {{"x", 0.5}}});
    b.checks.push_back({"second", false, {{"y", 2}}});
    json j = b.to_json();
    ReportBundle c = ReportBundle::from_json(j);
    CHECK(c.to_json() == j);
    CHECK_FALSE(c.all_pass());

    std::string path1 = "report_test_1.json";
    std::string path2 = "report_test_2.json";
    emit_report(b, "json", path1);
    emit_report(b, "json", path2);
    std::ifstream f1(path1), f2(path2);
    std::string s1((std::istreambuf_iterator<char>(f1)), std::istreambuf_iterator<char>());
    std::string s2((std::istreambuf_iterator<char>(f2)), std::istreambuf_iterator<char>());
    CHECK(s1 == s2);
    CHECK_FALSE(s1.empty());
    std::remove(path1.c_str());
    std::remove(path2.c_str());

    std::string csv = b.to_csv();
    CHECK(csv.find("demo,first,true") != std::string::npos);
    CHECK(csv.find("demo,second,false") != std::string::npos);
}

TEST_CASE("wilson interval sanity") {
    Wilson w = wilson_interval(50, 100);
    CHECK(w.center == doctest::Approx(0.5).epsilon(0.01));
    CHECK(w.low < 0.5);
    CHECK(w.high > 0.5);
    Wilson zero = wilson_interval(0, 100);
    CHECK(zero.low == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(zero.high < 0.05);
}

TEST_CASE("total variation of identical histograms is zero") {
    std::map<std::vector<int>, int64_t> a = {{{0, 0}, 10}, {{1, 1}, 30}};
    CHECK(total_variation(a, a) == doctest::Approx(0.0));
    std::map<std::vector<int>, int64_t> b = {{{0, 0}, 40}};
    CHECK(total_variation(a, b) == doctest::Approx(0.75));
}

TEST_CASE("parallel trials cover every index exactly once") {
    std::vector<int> hits(500, 0);
    parallel_trials(500, 4, [&](int64_t t) { hits[t]++; });
    for (int h : hits) CHECK(h == 1);
}

TEST_CASE("completeness suite small run") {
    ReportBundle b = completeness_suite({{2, 5, 2}}, 10, 7, 2);
    CHECK(b.all_pass());
}

TEST_CASE("rtrap-only protocol accepts undetectable patterns, mixed coin detects") {
    // For a pattern invisible to R-traps, a protocol whose trap coin is
    // forced to R accepts essentially always; the fair coin detects through
    // the C-trap path.
    ProtocolConfig cfg;
    cfg.n = 4;
    cfg.m = 9;
    cfg.v = 3;
    AngleMatrix target(4, 9);
    FlipPattern pattern;
    for (int k = 1; k <= 4; ++k) pattern[k] = {{2, 3}, {2, 5}};

    cfg.forced_trap_kind = ComputationKind::RTrap;
    int accept_forced = 0;
    const int trials = 400;
    for (int t = 0; t < trials; ++t) {
        SplitRng rng(880000 + t);
        accept_forced +=
            run_protocol1(cfg, target, ProverBehavior::z_flip(pattern), rng).first.accepted();
    }
    CHECK(accept_forced == trials);

    cfg.forced_trap_kind.reset();
    int rejects = 0;
    for (int t = 0; t < trials; ++t) {
        SplitRng rng(990000 + t);
        rejects +=
            run_protocol1(cfg, target, ProverBehavior::z_flip(pattern), rng).first.accepted()
                ? 0
                : 1;
    }
    CHECK(rejects > trials / 4);
}

TEST_CASE("delta uniformity suite") {
    ReportBundle b = delta_uniformity_suite(10000, 31);
    CHECK(b.all_pass());
}

TEST_CASE("soundness estimate is independent of worker count") {
    ProtocolConfig cfg;
    cfg.n = 2;
    cfg.m = 5;
    AngleMatrix target(2, 5);
    std::vector<std::set<QubitPos>> family = {{{1, 5}}};
    SoundnessResult one = soundness_mc(cfg, 3, 1, family, target, 600, 12, 1);
    SoundnessResult four = soundness_mc(cfg, 3, 1, family, target, 600, 12, 4);
    CHECK(one.mc_estimate == four.mc_estimate);
}
