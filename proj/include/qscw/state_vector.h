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

#ifndef QSCW_STATE_VECTOR_H
#define QSCW_STATE_VECTOR_H

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qscw/bitstring.h"
#include "qscw/rng.h"

namespace qscw {

using Amplitude = std::complex<double>;

enum class Pauli : uint8_t { X, Y, Z };

enum class Basis : uint8_t { X, Z };

char basis_char(Basis b);

struct PauliError {
    Pauli axis;
    size_t qubit;
};

/// Dense pure state of n qubits. Qubit 0 is the least significant bit of the
/// amplitude index.
class StateVector {
   public:
    static constexpr size_t kMaxQubits = 24;

    /// |0...0> on n qubits. Throws ConfigError unless 1 <= n <= kMaxQubits.
    explicit StateVector(size_t num_qubits);

    /// Wraps raw amplitudes (length must be 2^num_qubits). Normalization is not
    /// enforced here; samplers reject unnormalized states.
    static StateVector from_amplitudes(size_t num_qubits, std::vector<Amplitude> amplitudes);

    size_t num_qubits() const {
        return num_qubits_;
    }
    std::span<const Amplitude> amplitudes() const {
        return amps_;
    }
    Amplitude amplitude(uint64_t index) const {
        return amps_.at(index);
    }
    double norm_squared() const;

    void apply_pauli(const PauliError &err);
    void apply_hadamard(size_t qubit);
    /// H on every qubit (in-place Walsh-Hadamard transform).
    void apply_hadamard_all();
    void apply_cnot(size_t control, size_t target);

    /// |amplitude|^2 per basis index.
    std::vector<double> probabilities() const;

   private:
    void check_qubit(size_t qubit) const;

    size_t num_qubits_;
    std::vector<Amplitude> amps_;
};

/// (|0...0> + |1...1>)/sqrt(2), built with H on qubit 0 and a CNOT fan-out.
StateVector prepare_ghz(size_t n);

StateVector apply_pauli(StateVector state, const PauliError &err);

/// Draws one depolarizing trajectory: independently per qubit, with
/// probability p one of X, Y, Z (each p/3). Throws ConfigError unless 0 <= p <= 1.
std::vector<PauliError> sample_depolarizing_errors(size_t num_qubits, double p, RngStream &rng);

/// Applies a freshly drawn trajectory and returns the perturbed state.
StateVector apply_depolarizing_trajectory(StateVector state, double p, RngStream &rng);

/// Draws basis indices with probability |a_i|^2 from a fixed state.
///
/// Building the sampler costs O(2^n); each draw is a binary search. Sampling
/// never collapses the source state.
class OutcomeSampler {
   public:
    OutcomeSampler(const StateVector &state, Basis basis);

    size_t num_qubits() const {
        return num_qubits_;
    }
    Bitstring sample(RngStream &rng) const;

   private:
    size_t num_qubits_;
    std::vector<double> cumulative_;
};

Bitstring sample_z_basis(const StateVector &state, RngStream &rng);
/// Hadamard on every qubit of a working copy, then a Z-basis sample.
Bitstring sample_x_basis(const StateVector &state, RngStream &rng);
Bitstring sample_basis(const StateVector &state, Basis basis, RngStream &rng);

}  // namespace qscw

#endif
