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

#ifndef QSCW_ADVERSARY_H
#define QSCW_ADVERSARY_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include "qscw/protocol.h"
#include "qscw/rng.h"
#include "qscw/witness.h"

namespace qscw {

/// Replaces the witness with a fresh classical approximation every round.
struct Memoryless {
    enum class Strategy : uint8_t { RandomPhaseGHZ, FixedPhaseGHZ, ProductState };
    Strategy strategy = Strategy::RandomPhaseGHZ;
    /// Base phase guess for FixedPhaseGHZ.
    uint8_t fixed_phase = 0;

    bool operator==(const Memoryless &) const = default;
};

/// Tracks challenge parities correctly but must re-guess its base phase every
/// `horizon` rounds after the fork.
struct LimitedMemory {
    uint64_t horizon = 1;

    bool operator==(const LimitedMemory &) const = default;
};

/// Upper-bound model: the forked branch holds a perfect copy of the witness.
/// Physically impossible (no-cloning); included as the ceiling.
struct IdealCoherent {
    bool operator==(const IdealCoherent &) const = default;
};

using AttackerModel = std::variant<Memoryless, LimitedMemory, IdealCoherent>;

/// Stable label used in CSV output and on the command line:
/// memoryless, memoryless-fixed-<b>, memoryless-product, limited-memory-k<k>,
/// ideal-coherent.
std::string attacker_label(const AttackerModel &model);
AttackerModel parse_attacker(std::string_view text);
void validate(const AttackerModel &model);

enum class BranchId : uint8_t { B0, B1 };

/// Classical data a non-coherent fork keeps in place of the witness. It never
/// contains the true phase.
struct SimulatedWitness {
    AttackerModel model;
    size_t n = 0;
    uint8_t base_guess = 0;
    /// XOR of challenge parities observed since base_guess was drawn.
    uint8_t observed_parity = 0;
    uint64_t rounds_since_fork = 0;
    uint64_t rounds_since_refresh = 0;
};

struct ForkBranch {
    BranchId id = BranchId::B0;
    std::variant<WitnessState, SimulatedWitness> access;
    /// Round index this branch expects next.
    uint64_t next_round = 1;

    bool holds_true_witness() const {
        return std::holds_alternative<WitnessState>(access);
    }
};

/// Forks the execution at round t_fork. history[t] is the witness after t
/// rounds (history[0] is the initial state), so t_fork < history.size() is
/// required; t_fork below the latest round is a rollback.
///
/// B0 receives the true witness. B1 receives a copy of it for IdealCoherent,
/// and otherwise a SimulatedWitness whose phase guess is drawn from `rng`
/// without reading the true phase.
std::pair<ForkBranch, ForkBranch> fork(std::span<const WitnessState> history, uint64_t t_fork,
                                       const AttackerModel &model, RngStream &rng);

/// Produces the branch's evidence for one challenge. A branch holding the true
/// witness updates it and measures honestly; a simulated branch acts per its
/// attacker model.
Evidence branch_respond(ForkBranch &branch, const Challenge &challenge, Basis basis, size_t shots, double noise_p,
                        RngStream &rng);

/// Phase a simulated branch will claim for `challenge`, advancing its
/// bookkeeping. ProductState models return their (unused) guess.
uint8_t simulated_phase_for(SimulatedWitness &sim, const Challenge &challenge, RngStream &rng);

}  // namespace qscw

#endif
