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

#include "qscw/witness.h"

#include <string>

#include "qscw/errors.h"

namespace qscw {

WitnessState init_witness(size_t n, uint8_t secret_phase) {
    if (n < 1 || n > StateVector::kMaxQubits) {
        throw ConfigError("n = " + std::to_string(n) + " outside [1, " + std::to_string(StateVector::kMaxQubits) +
                          "]");
    }
    if (secret_phase > 1) {
        throw ConfigError("secret_phase must be 0 or 1");
    }
    return WitnessState{n, secret_phase, 0};
}

WitnessState update(WitnessState witness, const Challenge &challenge) {
    if (challenge.round != witness.rounds_elapsed + 1) {
        throw ProtocolError("challenge for round " + std::to_string(challenge.round) +
                            " delivered to a witness expecting round " + std::to_string(witness.rounds_elapsed + 1));
    }
    witness.phase ^= parity(challenge.bits);
    witness.rounds_elapsed++;
    return witness;
}

StateVector prepare_phased_ghz(size_t n, uint8_t phase) {
    StateVector s = prepare_ghz(n);
    if (phase & 1) {
        s.apply_pauli({Pauli::Z, 0});
    }
    return s;
}

Evidence measure_shots(const StateVector &state, Basis basis, size_t shots, double noise_p, uint64_t round,
                       RngStream &rng) {
    if (shots < 1) {
        throw ConfigError("shots must be at least 1");
    }
    if (!(noise_p >= 0.0 && noise_p <= 1.0)) {
        throw ConfigError("noise_p = " + std::to_string(noise_p) + " outside [0, 1]");
    }
    Evidence ev;
    ev.basis = basis;
    ev.n = state.num_qubits();
    ev.round = round;
    ev.shots.reserve(shots);
    if (noise_p == 0.0) {
        OutcomeSampler sampler(state, basis);
        for (size_t s = 0; s < shots; s++) {
            ev.shots.push_back(sampler.sample(rng));
        }
    } else {
        for (size_t s = 0; s < shots; s++) {
            StateVector noisy = apply_depolarizing_trajectory(state, noise_p, rng);
            ev.shots.push_back(sample_basis(noisy, basis, rng));
        }
    }
    return ev;
}

Evidence generate_evidence(const WitnessState &witness, Basis basis, size_t shots, double noise_p, RngStream &rng) {
    return measure_shots(prepare_phased_ghz(witness.n, witness.phase), basis, shots, noise_p, witness.rounds_elapsed,
                         rng);
}

}  // namespace qscw
