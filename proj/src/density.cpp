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

#include "bwverify/density.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bwv {

DensityMatrix::DensityMatrix(size_t dim, std::vector<cplx> entries) : dim_(dim), a_(std::move(entries)) {
    if (a_.size() != dim * dim) throw std::invalid_argument("entry count does not match dimension");
}

DensityMatrix DensityMatrix::pure(const std::vector<cplx> &psi) {
    DensityMatrix rho(psi.size());
    for (size_t r = 0; r < psi.size(); ++r) {
        for (size_t c = 0; c < psi.size(); ++c) {
            rho.at(r, c) = psi[r] * std::conj(psi[c]);
        }
    }
    return rho;
}

DensityMatrix DensityMatrix::identity(size_t dim) {
    DensityMatrix m(dim);
    for (size_t r = 0; r < dim; ++r) m.at(r, r) = 1.0;
    return m;
}

DensityMatrix DensityMatrix::operator+(const DensityMatrix &o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("dimension mismatch");
    DensityMatrix m(dim_);
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] + o.a_[i];
    return m;
}

DensityMatrix DensityMatrix::operator-(const DensityMatrix &o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("dimension mismatch");
    DensityMatrix m(dim_);
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] - o.a_[i];
    return m;
}

DensityMatrix DensityMatrix::operator*(double s) const {
    DensityMatrix m(dim_);
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] * s;
    return m;
}

DensityMatrix DensityMatrix::mul(const DensityMatrix &o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("dimension mismatch");
    DensityMatrix m(dim_);
    for (size_t r = 0; r < dim_; ++r) {
        for (size_t k = 0; k < dim_; ++k) {
            cplx v = at(r, k);
            if (v == cplx(0, 0)) continue;
            for (size_t c = 0; c < dim_; ++c) {
                m.at(r, c) += v * o.at(k, c);
            }
        }
    }
    return m;
}

DensityMatrix DensityMatrix::kron(const DensityMatrix &o) const {
    DensityMatrix m(dim_ * o.dim_);
    for (size_t r1 = 0; r1 < dim_; ++r1)
        for (size_t c1 = 0; c1 < dim_; ++c1)
            for (size_t r2 = 0; r2 < o.dim_; ++r2)
                for (size_t c2 = 0; c2 < o.dim_; ++c2)
                    m.at(r1 * o.dim_ + r2, c1 * o.dim_ + c2) = at(r1, c1) * o.at(r2, c2);
    return m;
}

DensityMatrix DensityMatrix::adjoint() const {
    DensityMatrix m(dim_);
    for (size_t r = 0; r < dim_; ++r)
        for (size_t c = 0; c < dim_; ++c) m.at(c, r) = std::conj(at(r, c));
    return m;
}

void DensityMatrix::accumulate(const DensityMatrix &o, double weight) {
    if (dim_ != o.dim_) throw std::invalid_argument("dimension mismatch");
    for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i] * weight;
}

cplx DensityMatrix::trace() const {
    cplx t = 0.0;
    for (size_t r = 0; r < dim_; ++r) t += at(r, r);
    return t;
}

double DensityMatrix::max_abs_entry() const {
    double m = 0.0;
    for (const cplx &v : a_) m = std::max(m, std::abs(v));
    return m;
}

bool DensityMatrix::is_hermitian(double tol) const {
    for (size_t r = 0; r < dim_; ++r)
        for (size_t c = 0; c < dim_; ++c)
            if (std::abs(at(r, c) - std::conj(at(c, r))) > tol) return false;
    return true;
}

std::vector<double> DensityMatrix::hermitian_eigenvalues() const {
    // Cyclic complex Jacobi; plenty for the <= 16x16 operators used here.
    DensityMatrix w = *this;
    size_t n = dim_;
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (size_t p = 0; p < n; ++p)
            for (size_t q = p + 1; q < n; ++q) off += std::norm(w.at(p, q));
        if (off < 1e-28) break;
        for (size_t p = 0; p < n; ++p) {
            for (size_t q = p + 1; q < n; ++q) {
                cplx apq = w.at(p, q);
                if (std::abs(apq) < 1e-300) continue;
                double app = w.at(p, p).real();
                double aqq = w.at(q, q).real();
                // Diagonalize the 2x2 block [[app, apq], [conj(apq), aqq]].
                double absapq = std::abs(apq);
                cplx phase = apq / absapq;
                double tau = (aqq - app) / (2.0 * absapq);
                double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                double c = 1.0 / std::sqrt(1.0 + t * t);
                double s = t * c;
                // Rotation: p' = c*p + s*phase*q ; q' = -s*conj(phase)*p + c*q
                for (size_t k = 0; k < n; ++k) {
                    cplx wkp = w.at(k, p), wkq = w.at(k, q);
                    w.at(k, p) = c * wkp + s * phase * wkq;
                    w.at(k, q) = -s * std::conj(phase) * wkp + c * wkq;
                }
                for (size_t k = 0; k < n; ++k) {
                    cplx wpk = w.at(p, k), wqk = w.at(q, k);
                    w.at(p, k) = c * wpk + s * std::conj(phase) * wqk;
                    w.at(q, k) = -s * phase * wpk + c * wqk;
                }
            }
        }
    }
    std::vector<double> ev(n);
    for (size_t r = 0; r < n; ++r) ev[r] = w.at(r, r).real();
    std::sort(ev.begin(), ev.end());
    return ev;
}

double trace_distance(const DensityMatrix &a, const DensityMatrix &b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
    DensityMatrix d = a - b;
    double sum = 0.0;
    for (double ev : d.hermitian_eigenvalues()) sum += std::abs(ev);
    return 0.5 * sum;
}

DensityMatrix pauli_word_matrix(const std::vector<PauliLetterIdx> &letters) {
    static const cplx i(0, 1);
    static const std::array<std::array<cplx, 4>, 4> singles = {{
        {cplx(1, 0), cplx(0, 0), cplx(0, 0), cplx(1, 0)},  // I
        {cplx(0, 0), cplx(1, 0), cplx(1, 0), cplx(0, 0)},  // X
        {cplx(0, 0), -i, i, cplx(0, 0)},                   // Y
        {cplx(1, 0), cplx(0, 0), cplx(0, 0), cplx(-1, 0)}, // Z
    }};
    DensityMatrix m = DensityMatrix::identity(1);
    for (PauliLetterIdx l : letters) {
        DensityMatrix s(2);
        s.at(0, 0) = singles[l][0];
        s.at(0, 1) = singles[l][1];
        s.at(1, 0) = singles[l][2];
        s.at(1, 1) = singles[l][3];
        m = m.kron(s);
    }
    return m;
}

double pauli_twirl_residual(int n_qubits, const std::vector<PauliLetterIdx> &p,
                            const std::vector<PauliLetterIdx> &p_prime,
                            const DensityMatrix &rho) {
    size_t words = 1;
    for (int q = 0; q < n_qubits; ++q) words *= 4;
    DensityMatrix pm = pauli_word_matrix(p);
    DensityMatrix pm2 = pauli_word_matrix(p_prime);
    DensityMatrix acc(rho.dim());
    for (size_t r = 0; r < words; ++r) {
        std::vector<PauliLetterIdx> letters(n_qubits);
        size_t t = r;
        for (int q = 0; q < n_qubits; ++q) {
            letters[q] = static_cast<PauliLetterIdx>(t & 3);
            t >>= 2;
        }
        DensityMatrix qm = pauli_word_matrix(letters);
        acc.accumulate(qm.mul(pm).mul(qm).mul(rho).mul(qm).mul(pm2).mul(qm), 1.0);
    }
    return acc.max_abs_entry();
}

DensityMatrix random_density(size_t dim, SplitRng &rng) {
    DensityMatrix rho(dim);
    size_t mixture = dim + 1;
    double w = 1.0 / static_cast<double>(mixture);
    for (size_t s = 0; s < mixture; ++s) {
        std::vector<cplx> psi(dim);
        double nrm = 0.0;
        for (size_t r = 0; r < dim; ++r) {
            psi[r] = cplx(rng.real() - 0.5, rng.real() - 0.5);
            nrm += std::norm(psi[r]);
        }
        nrm = std::sqrt(nrm);
        for (auto &v : psi) v /= nrm;
        rho.accumulate(DensityMatrix::pure(psi), w);
    }
    return rho;
}

} // namespace bwv
