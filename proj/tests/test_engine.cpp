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

#include <cmath>

#include "bwverify/density.hpp"
#include "bwverify/statevector.hpp"

using namespace bwv;

TEST_CASE("rz(pi) maps |+> to |->") {
    StateVector sv;
    sv.add_plus(0);
    sv.apply_rz(0, AngleZ8(4));
    // outcome 1 in the unrotated basis means the state is |->
    CHECK(sv.prob_outcome0(0, AngleZ8(0)) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("h maps |0> to |+>") {
    StateVector sv;
    sv.add_qubit(7, 1.0, 0.0);
    sv.apply_h(7);
    CHECK(sv.prob_outcome0(7, AngleZ8(0)) == doctest::Approx(1.0));
}

TEST_CASE("cz is an involution") {
    StateVector sv;
    sv.add_plus(0);
    sv.add_plus(1);
    StateVector before = sv;
    sv.apply_cz(0, 1);
    sv.apply_cz(0, 1);
    cplx overlap = StateVector::inner(before, sv);
    CHECK(std::abs(overlap) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("norm is preserved by gates") {
    SplitRng rng(3);
    StateVector sv;
    for (int q = 0; q < 4; ++q) sv.add_plus(q);
    for (int step = 0; step < 50; ++step) {
        int q = static_cast<int>(rng.below(4));
        switch (rng.below(4)) {
            case 0: sv.apply_rz(q, rng.angle()); break;
            case 1: sv.apply_rx(q, rng.angle()); break;
            case 2: sv.apply_h(q); break;
            default: sv.apply_cz(q, (q + 1) % 4); break;
        }
        CHECK(sv.norm() == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("gate errors") {
    StateVector sv;
    sv.add_plus(0);
    CHECK_THROWS_AS(sv.apply_h(1), std::out_of_range);
    CHECK_THROWS_AS(sv.add_plus(0), std::invalid_argument);
    sv.add_plus(1);
    CHECK_THROWS_AS(sv.apply_cz(1, 1), std::invalid_argument);
}

TEST_CASE("hrzh equals rx exactly") {
    for (int k = 0; k < 8; ++k) {
        Mat2 lhs = mat2_mul(gate_h(), mat2_mul(gate_rz(AngleZ8(k)), gate_h()));
        Mat2 rhs = gate_rx(AngleZ8(k));
        for (int e = 0; e < 4; ++e) {
            CHECK(std::abs(lhs[e] - rhs[e]) < 1e-15);
        }
    }
}

TEST_CASE("measure_rotated eigenstate and deterministic cases") {
    SplitRng rng(11);
    for (int k = 0; k < 8; ++k) {
        StateVector sv;
        sv.add_plus(0);
        sv.apply_rz(0, AngleZ8(k));
        CHECK(sv.prob_outcome0(0, AngleZ8(k)) == doctest::Approx(1.0).epsilon(1e-12));
        int s = sv.measure_rotated(0, AngleZ8(k), rng);
        CHECK(s == 0);
        CHECK(sv.num_qubits() == 0);
    }
    StateVector m;
    m.add_plus(0);
    m.apply_z(0); // |->
    CHECK(m.measure_rotated(0, AngleZ8(0), rng) == 1);
}

TEST_CASE("measure_rotated unbiased at pi/2 offset") {
    SplitRng rng(123);
    int ones = 0;
    const int trials = 20000;
    for (int t = 0; t < trials; ++t) {
        StateVector sv;
        sv.add_plus(0);
        ones += sv.measure_rotated(0, AngleZ8(2), rng);
    }
    double frac = static_cast<double>(ones) / trials;
    CHECK(frac == doctest::Approx(0.5).epsilon(0.04));
}

TEST_CASE("measurement branch probabilities sum to one") {
    SplitRng rng(9);
    StateVector sv;
    for (int q = 0; q < 3; ++q) {
        sv.add_plus(q);
        sv.apply_rz(q, rng.angle());
    }
    sv.apply_cz(0, 1);
    sv.apply_cz(1, 2);
    for (int k = 0; k < 8; ++k) {
        StateVector c0 = sv, c1 = sv;
        double p0 = c0.project_rotated(1, AngleZ8(k), 0);
        double p1 = c1.project_rotated(1, AngleZ8(k), 1);
        CHECK(p0 + p1 == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("cz commutes with rz on either endpoint") {
    for (int k = 0; k < 8; ++k) {
        StateVector a, b;
        for (StateVector *sv : {&a, &b}) {
            sv->add_plus(0);
            sv->add_plus(1);
            sv->apply_rx(0, AngleZ8(3)); // leave the +1 eigenstate
        }
        a.apply_cz(0, 1);
        a.apply_rz(0, AngleZ8(k));
        b.apply_rz(0, AngleZ8(k));
        b.apply_cz(0, 1);
        CHECK(std::abs(StateVector::inner(a, b) - cplx(1, 0)) < 1e-12);
    }
}

TEST_CASE("trace distance basics") {
    DensityMatrix zero = DensityMatrix::pure({1.0, 0.0});
    DensityMatrix one = DensityMatrix::pure({0.0, 1.0});
    DensityMatrix plus = DensityMatrix::pure({M_SQRT1_2, M_SQRT1_2});
    CHECK(trace_distance(zero, zero) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(trace_distance(zero, one) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(trace_distance(zero, plus) == doctest::Approx(M_SQRT1_2).epsilon(1e-10));
    CHECK_THROWS_AS(trace_distance(zero, DensityMatrix::identity(4)), std::invalid_argument);
}

TEST_CASE("density matrices from the engine are valid") {
    SplitRng rng(17);
    DensityMatrix rho = random_density(4, rng);
    CHECK(rho.is_hermitian());
    CHECK(std::abs(rho.trace() - cplx(1, 0)) < 1e-12);
    for (double ev : rho.hermitian_eigenvalues()) CHECK(ev > -1e-10);
}

TEST_CASE("pauli twirl kills off-diagonal pairs") {
    SplitRng rng(21);
    DensityMatrix rho1 = random_density(2, rng);
    CHECK(pauli_twirl_residual(1, {1}, {3}, rho1) < 1e-12);
    CHECK(pauli_twirl_residual(1, {2}, {1}, rho1) < 1e-12);

    DensityMatrix zero = DensityMatrix::pure({1.0, 0.0});
    CHECK(pauli_twirl_residual(1, {1}, {1}, zero) > 1.0); // sanity inverse case

    DensityMatrix rho2 = random_density(4, rng);
    CHECK(pauli_twirl_residual(2, {1, 3}, {3, 3}, rho2) < 1e-12);
}
