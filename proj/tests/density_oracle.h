// Copyright 2026 The QSCW Simulator Authors
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

// Reference computations used only by the tests. None of this goes through the
// simulator's own state vector, sampler or game code.

#ifndef QSCW_TESTS_DENSITY_ORACLE_H
#define QSCW_TESTS_DENSITY_ORACLE_H

#include <Eigen/Dense>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

namespace qscw_test {

using Complex = std::complex<double>;

inline Eigen::MatrixXcd kron(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); i++) {
        for (Eigen::Index j = 0; j < a.cols(); j++) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

inline Eigen::Matrix2cd pauli_matrix(char axis) {
    Eigen::Matrix2cd m;
    const Complex i{0, 1};
    switch (axis) {
        case 'X':
            m << 0, 1, 1, 0;
            break;
        case 'Y':
            m << 0, -i, i, 0;
            break;
        case 'Z':
            m << 1, 0, 0, -1;
            break;
        default:
            m << 1, 0, 0, 1;
    }
    return m;
}

inline Eigen::Matrix2cd hadamard_matrix() {
    Eigen::Matrix2cd m;
    m << 1, 1, 1, -1;
    return m / std::sqrt(2.0);
}

/// `op` on qubit q of n, identity elsewhere. Qubit 0 is the least significant
/// index bit, i.e. the rightmost Kronecker factor.
inline Eigen::MatrixXcd on_qubit(const Eigen::Matrix2cd &op, size_t q, size_t n) {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
    for (size_t k = n; k-- > 0;) {
        out = kron(out, k == q ? Eigen::MatrixXcd(op) : Eigen::MatrixXcd(pauli_matrix('I')));
    }
    return out;
}

/// (|0..0> + (-1)^phase |1..1>)/sqrt(2), written down directly.
inline Eigen::VectorXcd ghz_vector(size_t n, int phase) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(int64_t{1} << n);
    v(0) = 1 / std::sqrt(2.0);
    v((int64_t{1} << n) - 1) = (phase ? -1.0 : 1.0) / std::sqrt(2.0);
    return v;
}

inline Eigen::MatrixXcd ghz_density(size_t n, int phase) {
    Eigen::VectorXcd v = ghz_vector(n, phase);
    return v * v.adjoint();
}

/// Per-qubit depolarizing channel rho -> (1-p) rho + p/3 (X rho X + Y rho Y + Z rho Z).
inline Eigen::MatrixXcd depolarize_all(Eigen::MatrixXcd rho, size_t n, double p) {
    for (size_t q = 0; q < n; q++) {
        Eigen::MatrixXcd next = (1 - p) * rho;
        for (char axis : {'X', 'Y', 'Z'}) {
            Eigen::MatrixXcd P = on_qubit(pauli_matrix(axis), q, n);
            next += (p / 3) * P * rho * P.adjoint();
        }
        rho = next;
    }
    return rho;
}

/// Outcome distribution of measuring every qubit in X (or Z when x_basis is false).
inline std::vector<double> outcome_distribution(const Eigen::MatrixXcd &rho, size_t n, bool x_basis) {
    Eigen::MatrixXcd r = rho;
    if (x_basis) {
        Eigen::MatrixXcd h = Eigen::MatrixXcd::Identity(1, 1);
        for (size_t k = 0; k < n; k++) {
            h = kron(h, Eigen::MatrixXcd(hadamard_matrix()));
        }
        r = h * rho * h.adjoint();
    }
    std::vector<double> out(static_cast<size_t>(r.rows()));
    for (Eigen::Index i = 0; i < r.rows(); i++) {
        out[static_cast<size_t>(i)] = r(i, i).real();
    }
    return out;
}

/// Probability that an X-basis outcome has parity `phase`.
inline double x_parity_probability(const Eigen::MatrixXcd &rho, size_t n, int phase) {
    auto dist = outcome_distribution(rho, n, true);
    double total = 0;
    for (size_t x = 0; x < dist.size(); x++) {
        if ((std::popcount(x) & 1) == phase) {
            total += dist[x];
        }
    }
    return total;
}

/// Probability that a Z-basis outcome is all zeros or all ones.
inline double z_all_equal_probability(const Eigen::MatrixXcd &rho, size_t n) {
    auto dist = outcome_distribution(rho, n, false);
    return dist.front() + dist.back();
}

/// H^{(x)n} applied by the defining sum: out[x] = 2^{-n/2} sum_y (-1)^{x.y} in[y].
inline std::vector<Complex> walsh_hadamard_by_sum(const std::vector<Complex> &in, size_t n) {
    const size_t dim = size_t{1} << n;
    std::vector<Complex> out(dim);
    const double scale = std::pow(2.0, -0.5 * static_cast<double>(n));
    for (size_t x = 0; x < dim; x++) {
        Complex acc = 0;
        for (size_t y = 0; y < dim; y++) {
            acc += (std::popcount(x & y) & 1 ? -1.0 : 1.0) * in[y];
        }
        out[x] = scale * acc;
    }
    return out;
}

}  // namespace qscw_test

#endif
