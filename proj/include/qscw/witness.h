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

#ifndef QSCW_WITNESS_H
#define QSCW_WITNESS_H

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qscw/bitstring.h"
#include "qscw/rng.h"
#include "qscw/state_vector.h"

namespace qscw {

/// The continuity witness: an n-qubit GHZ state whose relative phase carries
/// the XOR of every challenge parity seen so far.
///
/// phase 0 is GHZ+ and phase 1 is GHZ-. The phase bit is the protected secret;
/// the quantum state is re-prepared from it for each shot.
struct WitnessState {
    size_t n = 0;
    uint8_t phase = 0;
    uint64_t rounds_elapsed = 0;

    bool operator==(const WitnessState &) const = default;
};

struct Challenge {
    Bitstring bits;
    uint64_t round = 0;
};

struct Evidence {
    Basis basis = Basis::X;
    size_t n = 0;
    std::vector<Bitstring> shots;
    uint64_t round = 0;
};

WitnessState init_witness(size_t n, uint8_t secret_phase);

/// Applies one challenge: odd parity flips the phase (Z on qubit 0).
/// Throws ProtocolError unless challenge.round == rounds_elapsed + 1.
WitnessState update(WitnessState witness, const Challenge &challenge);

/// GHZ with the given phase bit applied as Z on qubit 0.
StateVector prepare_phased_ghz(size_t n, uint8_t phase);

/// Per shot: prepare `state`, apply a depolarizing trajectory, sample in `basis`.
/// With noise_p == 0 every shot sees the same state, so one sampler is shared.
Evidence measure_shots(const StateVector &state, Basis basis, size_t shots, double noise_p, uint64_t round,
                       RngStream &rng);

/// Honest evidence for the witness's current phase.
Evidence generate_evidence(const WitnessState &witness, Basis basis, size_t shots, double noise_p, RngStream &rng);

}  // namespace qscw

#endif
