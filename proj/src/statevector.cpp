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

#include "bwverify/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace bwv {

Mat2 gate_rz(AngleZ8 phi) {
    return {cplx(1, 0), cplx(0, 0), cplx(0, 0), std::polar(1.0, phi.radians())};
}

Mat2 gate_rz_dag(AngleZ8 phi) { return gate_rz(-phi); }

Mat2 gate_h() {
    double s = M_SQRT1_2;
    return {cplx(s, 0), cplx(s, 0), cplx(s, 0), cplx(-s, 0)};
}

Mat2 gate_x() { return {cplx(0, 0), cplx(1, 0), cplx(1, 0), cplx(0, 0)}; }

Mat2 gate_z() { return {cplx(1, 0), cplx(0, 0), cplx(0, 0), cplx(-1, 0)}; }

Mat2 mat2_mul(const Mat2 &a, const Mat2 &b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

Mat2 gate_rx(AngleZ8 phi) { return mat2_mul(gate_h(), mat2_mul(gate_rz(phi), gate_h())); }

bool StateVector::has_label(int64_t label) const {
    return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

int StateVector::index_of(int64_t label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) {
        throw std::out_of_range("no qubit with label " + std::to_string(label));
    }
    return static_cast<int>(it - labels_.begin());
}

void StateVector::add_qubit(int64_t label, cplx a0, cplx a1) {
    if (has_label(label)) {
        throw std::invalid_argument("duplicate qubit label " + std::to_string(label));
    }
    size_t old_size = amps_.size();
    std::vector<cplx> next(old_size * 2);
    for (size_t idx = 0; idx < old_size; ++idx) {
        next[idx] = amps_[idx] * a0;
        next[idx + old_size] = amps_[idx] * a1;
    }
    amps_ = std::move(next);
    labels_.push_back(label);
}

void StateVector::add_plus_theta(int64_t label, AngleZ8 theta) {
    add_qubit(label, M_SQRT1_2, std::polar(M_SQRT1_2, theta.radians()));
}

void StateVector::apply_1q(int64_t label, const Mat2 &g) {
    int k = index_of(label);
    size_t stride = size_t{1} << k;
    for (size_t base = 0; base < amps_.size(); base += 2 * stride) {
        for (size_t off = 0; off < stride; ++off) {
            cplx a0 = amps_[base + off];
            cplx a1 = amps_[base + off + stride];
            amps_[base + off] = g[0] * a0 + g[1] * a1;
            amps_[base + off + stride] = g[2] * a0 + g[3] * a1;
        }
    }
}

void StateVector::apply_cz(int64_t a, int64_t b) {
    if (a == b) throw std::invalid_argument("cz targets must be distinct");
    size_t ma = size_t{1} << index_of(a);
    size_t mb = size_t{1} << index_of(b);
    for (size_t idx = 0; idx < amps_.size(); ++idx) {
        if ((idx & ma) && (idx & mb)) amps_[idx] = -amps_[idx];
    }
}

void StateVector::apply_cnot(int64_t control, int64_t target) {
    if (control == target) throw std::invalid_argument("cnot targets must be distinct");
    size_t mc = size_t{1} << index_of(control);
    size_t mt = size_t{1} << index_of(target);
    for (size_t idx = 0; idx < amps_.size(); ++idx) {
        if ((idx & mc) && !(idx & mt)) {
            std::swap(amps_[idx], amps_[idx | mt]);
        }
    }
}

double StateVector::prob_outcome0(int64_t label, AngleZ8 delta) const {
    int k = index_of(label);
    size_t stride = size_t{1} << k;
    cplx e = std::polar(M_SQRT1_2, -delta.radians());
    double p0 = 0.0;
    for (size_t base = 0; base < amps_.size(); base += 2 * stride) {
        for (size_t off = 0; off < stride; ++off) {
            cplx c0 = M_SQRT1_2 * amps_[base + off] + e * amps_[base + off + stride];
            p0 += std::norm(c0);
        }
    }
    return p0;
}

int StateVector::measure_rotated(int64_t label, AngleZ8 delta, SplitRng &rng) {
    double p0 = prob_outcome0(label, delta);
    int outcome = rng.real() < p0 ? 0 : 1;
    project_rotated(label, delta, outcome);
    return outcome;
}

double StateVector::project_rotated(int64_t label, AngleZ8 delta, int outcome) {
    int k = index_of(label);
    size_t stride = size_t{1} << k;
    // <outcome| in the rotated basis: (<0| +- e^{-i delta} <1|)/sqrt(2)
    cplx e = std::polar(outcome == 0 ? M_SQRT1_2 : -M_SQRT1_2, -delta.radians());
    double p = 0.0;
    for (size_t base = 0; base < amps_.size(); base += 2 * stride) {
        for (size_t off = 0; off < stride; ++off) {
            cplx c = M_SQRT1_2 * amps_[base + off] + e * amps_[base + off + stride];
            amps_[base + off] = c; // branch amplitude parked in the 0-slot
            p += std::norm(c);
        }
    }
    double inv = p > 0 ? 1.0 / std::sqrt(p) : 0.0;
    for (size_t base = 0; base < amps_.size(); base += 2 * stride) {
        for (size_t off = 0; off < stride; ++off) {
            amps_[base + off] *= inv;
        }
    }
    remove_qubit_at(k, 0);
    return p;
}

void StateVector::remove_qubit_at(int idx, int fixed_outcome_bit) {
    size_t stride = size_t{1} << idx;
    size_t half = amps_.size() / 2;
    std::vector<cplx> next(half);
    size_t out = 0;
    for (size_t base = 0; base < amps_.size(); base += 2 * stride) {
        for (size_t off = 0; off < stride; ++off) {
            next[out++] = amps_[base + off + (fixed_outcome_bit ? stride : 0)];
        }
    }
    amps_ = std::move(next);
    labels_.erase(labels_.begin() + idx);
}

double StateVector::norm() const {
    double s = 0.0;
    for (const cplx &a : amps_) s += std::norm(a);
    return std::sqrt(s);
}

cplx StateVector::inner(const StateVector &a, const StateVector &b) {
    if (a.labels_ != b.labels_) {
        throw std::invalid_argument("inner product needs identical registers");
    }
    cplx s = 0.0;
    for (size_t i = 0; i < a.amps_.size(); ++i) s += std::conj(a.amps_[i]) * b.amps_[i];
    return s;
}

std::vector<cplx> StateVector::reduced_density(const std::vector<int64_t> &keep) const {
    std::vector<int> bits;
    bits.reserve(keep.size());
    for (int64_t lb : keep) bits.push_back(index_of(lb));

    size_t dim = size_t{1} << keep.size();
    std::vector<cplx> rho(dim * dim, cplx(0, 0));

    size_t full = amps_.size();
    auto sub_index = [&](size_t idx) {
        size_t s = 0;
        for (size_t b = 0; b < bits.size(); ++b) {
            if (idx & (size_t{1} << bits[b])) s |= size_t{1} << b;
        }
        return s;
    };
    size_t traced_mask = full - 1;
    for (int b : bits) traced_mask &= ~(size_t{1} << b);

    for (size_t i = 0; i < full; ++i) {
        for (size_t j = 0; j < full; ++j) {
            if ((i & traced_mask) != (j & traced_mask)) continue;
            rho[sub_index(i) * dim + sub_index(j)] += amps_[i] * std::conj(amps_[j]);
        }
    }
    return rho;
}

} // namespace bwv
