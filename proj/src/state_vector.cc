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

#include "qscw/state_vector.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "qscw/errors.h"

namespace qscw {

namespace {
constexpr double kSampleNormTolerance = 1e-6;
constexpr double kInvSqrt2 = 0.70710678118654752440;
}  // namespace

char basis_char(Basis b) {
    return b == Basis::X ? 'X' : 'Z';
}

StateVector::StateVector(size_t num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw ConfigError("qubit count " + std::to_string(num_qubits) + " outside [1, " +
                          std::to_string(kMaxQubits) + "]");
    }
    amps_.assign(size_t{1} << num_qubits, Amplitude{0.0, 0.0});
    amps_[0] = 1.0;
}

StateVector StateVector::from_amplitudes(size_t num_qubits, std::vector<Amplitude> amplitudes) {
    StateVector s(num_qubits);
    if (amplitudes.size() != s.amps_.size()) {
        throw ConfigError("expected " + std::to_string(s.amps_.size()) + " amplitudes for " +
                          std::to_string(num_qubits) + " qubits, got " + std::to_string(amplitudes.size()));
    }
    s.amps_ = std::move(amplitudes);
    return s;
}

double StateVector::norm_squared() const {
    double total = 0;
    for (const auto &a : amps_) {
        total += std::norm(a);
    }
    return total;
}

void StateVector::check_qubit(size_t qubit) const {
    if (qubit >= num_qubits_) {
        throw ConfigError("qubit index " + std::to_string(qubit) + " out of range for " +
                          std::to_string(num_qubits_) + "-qubit state");
    }
}

void StateVector::apply_pauli(const PauliError &err) {
    check_qubit(err.qubit);
    const uint64_t bit = uint64_t{1} << err.qubit;
    const Amplitude i_unit{0.0, 1.0};
    switch (err.axis) {
        case Pauli::Z:
            for (uint64_t k = 0; k < amps_.size(); k++) {
                if (k & bit) {
                    amps_[k] = -amps_[k];
                }
            }
            break;
        case Pauli::X:
            for (uint64_t k = 0; k < amps_.size(); k++) {
                if (!(k & bit)) {
                    std::swap(amps_[k], amps_[k | bit]);
                }
            }
            break;
        case Pauli::Y:
            // Y|0> = i|1>, Y|1> = -i|0>.
            for (uint64_t k = 0; k < amps_.size(); k++) {
                if (!(k & bit)) {
                    Amplitude a0 = amps_[k];
                    Amplitude a1 = amps_[k | bit];
                    amps_[k] = -i_unit * a1;
                    amps_[k | bit] = i_unit * a0;
                }
            }
            break;
    }
}

void StateVector::apply_hadamard(size_t qubit) {
    check_qubit(qubit);
    const uint64_t bit = uint64_t{1} << qubit;
    for (uint64_t k = 0; k < amps_.size(); k++) {
        if (!(k & bit)) {
            Amplitude a0 = amps_[k];
            Amplitude a1 = amps_[k | bit];
            amps_[k] = (a0 + a1) * kInvSqrt2;
            amps_[k | bit] = (a0 - a1) * kInvSqrt2;
        }
    }
}

void StateVector::apply_hadamard_all() {
    for (size_t q = 0; q < num_qubits_; q++) {
        apply_hadamard(q);
    }
}

void StateVector::apply_cnot(size_t control, size_t target) {
    check_qubit(control);
    check_qubit(target);
    if (control == target) {
        throw ConfigError("CNOT control and target must differ");
    }
    const uint64_t cbit = uint64_t{1} << control;
    const uint64_t tbit = uint64_t{1} << target;
    for (uint64_t k = 0; k < amps_.size(); k++) {
        if ((k & cbit) && !(k & tbit)) {
            std::swap(amps_[k], amps_[k | tbit]);
        }
    }
}

std::vector<double> StateVector::probabilities() const {
    std::vector<double> out(amps_.size());
    std::transform(amps_.begin(), amps_.end(), out.begin(), [](const Amplitude &a) { return std::norm(a); });
    return out;
}

StateVector prepare_ghz(size_t n) {
    StateVector s(n);
    s.apply_hadamard(0);
    for (size_t q = 1; q < n; q++) {
        s.apply_cnot(0, q);
    }
    return s;
}

StateVector apply_pauli(StateVector state, const PauliError &err) {
    state.apply_pauli(err);
    return state;
}

std::vector<PauliError> sample_depolarizing_errors(size_t num_qubits, double p, RngStream &rng) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw ConfigError("depolarizing probability " + std::to_string(p) + " outside [0, 1]");
    }
    std::vector<PauliError> errors;
    for (size_t q = 0; q < num_qubits; q++) {
        if (rng.bernoulli(p)) {
            errors.push_back({static_cast<Pauli>(rng.below(3)), q});
        }
    }
    return errors;
}

StateVector apply_depolarizing_trajectory(StateVector state, double p, RngStream &rng) {
    for (const PauliError &e : sample_depolarizing_errors(state.num_qubits(), p, rng)) {
        state.apply_pauli(e);
    }
    return state;
}

OutcomeSampler::OutcomeSampler(const StateVector &state, Basis basis) : num_qubits_(state.num_qubits()) {
    std::vector<double> probs;
    if (basis == Basis::X) {
        StateVector work = state;
        work.apply_hadamard_all();
        probs = work.probabilities();
    } else {
        probs = state.probabilities();
    }
    cumulative_.resize(probs.size());
    double running = 0;
    for (size_t i = 0; i < probs.size(); i++) {
        running += probs[i];
        cumulative_[i] = running;
    }
    if (std::abs(running - 1.0) > kSampleNormTolerance) {
        throw InvariantError("cannot sample an unnormalized state (norm^2 = " + std::to_string(running) + ")");
    }
}

Bitstring OutcomeSampler::sample(RngStream &rng) const {
    // u < total, so upper_bound always lands on an entry; it is strictly greater
    // than its predecessor, so zero-probability outcomes are never returned.
    double u = rng.next_unit() * cumulative_.back();
    auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
    return Bitstring(static_cast<uint64_t>(it - cumulative_.begin()), num_qubits_);
}

Bitstring sample_z_basis(const StateVector &state, RngStream &rng) {
    return OutcomeSampler(state, Basis::Z).sample(rng);
}

Bitstring sample_x_basis(const StateVector &state, RngStream &rng) {
    return OutcomeSampler(state, Basis::X).sample(rng);
}

Bitstring sample_basis(const StateVector &state, Basis basis, RngStream &rng) {
    return OutcomeSampler(state, basis).sample(rng);
}

}  // namespace qscw
