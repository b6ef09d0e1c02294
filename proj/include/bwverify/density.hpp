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

#include <vector>

#include "bwverify/statevector.hpp"

namespace bwv {

/// Square complex matrix, row-major. Used for density operators of a few
/// qubits, possibly tensored with a classical-label dimension.
class DensityMatrix {
  public:
    DensityMatrix() : dim_(0) {}
    explicit DensityMatrix(size_t dim) : dim_(dim), a_(dim * dim, cplx(0, 0)) {}
    DensityMatrix(size_t dim, std::vector<cplx> entries);

    static DensityMatrix pure(const std::vector<cplx> &psi);
    static DensityMatrix identity(size_t dim);

    size_t dim() const { return dim_; }
    cplx &at(size_t r, size_t c) { return a_[r * dim_ + c]; }
    const cplx &at(size_t r, size_t c) const { return a_[r * dim_ + c]; }

    DensityMatrix operator+(const DensityMatrix &o) const;
    DensityMatrix operator-(const DensityMatrix &o) const;
    DensityMatrix operator*(double s) const;
    DensityMatrix mul(const DensityMatrix &o) const;
    DensityMatrix kron(const DensityMatrix &o) const;
    DensityMatrix adjoint() const;

    void accumulate(const DensityMatrix &o, double weight);

    cplx trace() const;
    double max_abs_entry() const;
    bool is_hermitian(double tol = 1e-12) const;

    /// Eigenvalues of a Hermitian matrix (ascending), cyclic Jacobi.
    std::vector<double> hermitian_eigenvalues() const;

  private:
    size_t dim_;
    std::vector<cplx> a_;
};

/// D(a,b) = (1/2) Tr |a-b|. Requires matching dimensions.
double trace_distance(const DensityMatrix &a, const DensityMatrix &b);

/// Single-qubit Pauli index: 0=I, 1=X, 2=Y, 3=Z.
using PauliLetterIdx = int;

/// Dense matrix of an N-qubit Pauli word given per-qubit letters.
DensityMatrix pauli_word_matrix(const std::vector<PauliLetterIdx> &letters);

/// Max-entry magnitude of sum_r Q_r P Q_r rho Q_r P' Q_r over all 4^N Pauli
/// words Q_r. Vanishes (< 1e-12) whenever P != P'.
double pauli_twirl_residual(int n_qubits, const std::vector<PauliLetterIdx> &p,
                            const std::vector<PauliLetterIdx> &p_prime,
                            const DensityMatrix &rho);

/// Random valid density matrix (mixture of random pure states).
DensityMatrix random_density(size_t dim, SplitRng &rng);

} // namespace bwv
