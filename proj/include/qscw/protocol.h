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

#ifndef QSCW_PROTOCOL_H
#define QSCW_PROTOCOL_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "qscw/rng.h"
#include "qscw/state_vector.h"
#include "qscw/witness.h"

namespace qscw {

struct BasisPolicy {
    enum class Kind : uint8_t { FixedX, FixedZ, Bernoulli };

    Kind kind = Kind::Bernoulli;
    /// Probability of auditing in X; only read for Bernoulli.
    double p_x = 0.5;

    static BasisPolicy fixed_x() {
        return {Kind::FixedX, 1.0};
    }
    static BasisPolicy fixed_z() {
        return {Kind::FixedZ, 0.0};
    }
    static BasisPolicy bernoulli(double p_x) {
        return {Kind::Bernoulli, p_x};
    }

    /// "fixed-x", "fixed-z" or "bernoulli-<p>" (also accepts "bernoulli" = 0.5).
    static BasisPolicy parse(std::string_view text);
    std::string str() const;
};

/// Verifier side of one execution. expected_phase is the verifier's classical
/// shadow of the witness phase.
struct VerifierState {
    uint8_t expected_phase = 0;
    double tau_x = 0.85;
    double tau_z = 0.85;
    BasisPolicy basis_policy;
    size_t k_challenge_bits = 8;
};

/// Throws ConfigError naming the offending field.
void validate(const VerifierState &verifier);

/// Prover-side parameters of a round.
struct RoundParams {
    size_t n = 4;
    size_t shots = 32;
    double noise_p = 0.0;
};

struct AuditOutcome {
    Basis basis = Basis::X;
    double pass_fraction = 0.0;
    bool accepted = false;
    uint64_t round = 0;

    bool operator==(const AuditOutcome &) const = default;
};

struct RoundTranscript {
    uint64_t round = 0;
    Challenge challenge;
    Basis basis = Basis::X;
    Evidence evidence;
    AuditOutcome outcome;
};

/// k uniform bits; folds their parity into verifier.expected_phase.
Challenge issue_challenge(VerifierState &verifier, uint64_t round, RngStream &rng);

Basis choose_basis(const VerifierState &verifier, RngStream &rng);

/// X evidence: fraction of shots whose parity equals expected_phase, against tau_x.
/// Z evidence: fraction of shots that are all zeros or all ones, against tau_z.
/// Throws ProtocolError if evidence.basis != requested and MalformedEvidence
/// for an empty shot list or shots of the wrong width.
AuditOutcome audit(const VerifierState &verifier, Basis requested, const Evidence &evidence);

struct TemporalRound {
    RoundTranscript transcript;
    WitnessState witness;
    VerifierState verifier;
};

/// One round of the stateful protocol: challenge, witness update, basis
/// choice, honest evidence, audit.
TemporalRound run_temporal_round(VerifierState verifier, WitnessState witness, const RoundParams &params,
                                 RngStream &rng);

/// Verifier half of a stateless round: a fresh secret phase that exists only
/// in this round's witness, the challenge, and the audit basis.
struct StatelessSetup {
    VerifierState verifier;
    WitnessState fresh_witness;
    Challenge challenge;
    Basis basis = Basis::X;
};

StatelessSetup begin_stateless_round(const VerifierState &policy, size_t n, uint64_t round, RngStream &rng);

struct StatelessRound {
    RoundTranscript transcript;
    bool accepted = false;
};

/// Stateless baseline round with an honest prover: nothing carries over to the
/// next round. `policy` supplies thresholds, basis policy and challenge width;
/// its expected_phase is ignored.
StatelessRound run_stateless_round(const VerifierState &policy, const RoundParams &params, uint64_t round,
                                   RngStream &rng);

}  // namespace qscw

#endif
