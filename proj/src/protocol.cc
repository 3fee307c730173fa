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

#include "qscw/protocol.h"

#include <charconv>
#include <sstream>

#include "qscw/errors.h"

namespace qscw {

namespace {
bool in_unit_interval(double x) {
    return x >= 0.0 && x <= 1.0;
}
}  // namespace

BasisPolicy BasisPolicy::parse(std::string_view text) {
    if (text == "fixed-x" || text == "x") {
        return fixed_x();
    }
    if (text == "fixed-z" || text == "z") {
        return fixed_z();
    }
    if (text == "bernoulli" || text == "random") {
        return bernoulli(0.5);
    }
    constexpr std::string_view prefix = "bernoulli-";
    if (text.starts_with(prefix)) {
        std::string_view num = text.substr(prefix.size());
        double p = -1;
        auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), p);
        if (ec == std::errc() && ptr == num.data() + num.size() && in_unit_interval(p)) {
            return bernoulli(p);
        }
    }
    throw ConfigError("basis_policy: unrecognized value '" + std::string(text) +
                      "' (expected fixed-x, fixed-z or bernoulli-<p>)");
}

std::string BasisPolicy::str() const {
    switch (kind) {
        case Kind::FixedX:
            return "fixed-x";
        case Kind::FixedZ:
            return "fixed-z";
        case Kind::Bernoulli:
            break;
    }
    std::ostringstream out;
    out << "bernoulli-" << p_x;
    return out.str();
}

void validate(const VerifierState &verifier) {
    if (!in_unit_interval(verifier.tau_x)) {
        throw ConfigError("tau_x must lie in [0, 1]");
    }
    if (!in_unit_interval(verifier.tau_z)) {
        throw ConfigError("tau_z must lie in [0, 1]");
    }
    if (verifier.k_challenge_bits < 1 || verifier.k_challenge_bits > Bitstring::kMaxLength) {
        throw ConfigError("k_challenge_bits must lie in [1, 64]");
    }
    if (verifier.basis_policy.kind == BasisPolicy::Kind::Bernoulli && !in_unit_interval(verifier.basis_policy.p_x)) {
        throw ConfigError("basis_policy: Bernoulli p_x must lie in [0, 1]");
    }
    if (verifier.expected_phase > 1) {
        throw ConfigError("expected_phase must be 0 or 1");
    }
}

Challenge issue_challenge(VerifierState &verifier, uint64_t round, RngStream &rng) {
    if (round < 1) {
        throw ProtocolError("challenge rounds are numbered from 1");
    }
    const size_t k = verifier.k_challenge_bits;
    uint64_t v = rng.next_u64() & Bitstring::mask(k);
    Challenge c{Bitstring(v, k), round};
    verifier.expected_phase ^= parity(c.bits);
    return c;
}

Basis choose_basis(const VerifierState &verifier, RngStream &rng) {
    switch (verifier.basis_policy.kind) {
        case BasisPolicy::Kind::FixedX:
            return Basis::X;
        case BasisPolicy::Kind::FixedZ:
            return Basis::Z;
        case BasisPolicy::Kind::Bernoulli:
            break;
    }
    return rng.bernoulli(verifier.basis_policy.p_x) ? Basis::X : Basis::Z;
}

AuditOutcome audit(const VerifierState &verifier, Basis requested, const Evidence &evidence) {
    if (evidence.basis != requested) {
        throw ProtocolError(std::string("audit requested basis ") + basis_char(requested) +
                            " but evidence was measured in " + basis_char(evidence.basis));
    }
    if (evidence.shots.empty()) {
        throw MalformedEvidence("evidence for round " + std::to_string(evidence.round) + " has no shots");
    }
    size_t consistent = 0;
    for (const Bitstring &shot : evidence.shots) {
        if (shot.size() != evidence.n) {
            throw MalformedEvidence("shot width " + std::to_string(shot.size()) + " does not match n = " +
                                    std::to_string(evidence.n));
        }
        if (evidence.basis == Basis::X) {
            consistent += parity(shot) == verifier.expected_phase;
        } else {
            consistent += shot.all_zeros() || shot.all_ones();
        }
    }
    AuditOutcome out;
    out.basis = evidence.basis;
    out.round = evidence.round;
    out.pass_fraction = static_cast<double>(consistent) / static_cast<double>(evidence.shots.size());
    double tau = evidence.basis == Basis::X ? verifier.tau_x : verifier.tau_z;
    out.accepted = out.pass_fraction >= tau;
    return out;
}

TemporalRound run_temporal_round(VerifierState verifier, WitnessState witness, const RoundParams &params,
                                 RngStream &rng) {
    const uint64_t round = witness.rounds_elapsed + 1;
    Challenge challenge = issue_challenge(verifier, round, rng);
    witness = update(witness, challenge);
    Basis basis = choose_basis(verifier, rng);
    Evidence evidence = generate_evidence(witness, basis, params.shots, params.noise_p, rng);
    AuditOutcome outcome = audit(verifier, basis, evidence);
    return TemporalRound{RoundTranscript{round, challenge, basis, std::move(evidence), outcome}, witness, verifier};
}

StatelessSetup begin_stateless_round(const VerifierState &policy, size_t n, uint64_t round, RngStream &rng) {
    if (round < 1) {
        throw ProtocolError("stateless rounds are numbered from 1");
    }
    StatelessSetup setup;
    setup.verifier = policy;
    uint8_t fresh = rng.next_bit() ? 1 : 0;
    setup.verifier.expected_phase = fresh;
    setup.fresh_witness = init_witness(n, fresh);
    // The fresh state is created for this round only, positioned just before it.
    setup.fresh_witness.rounds_elapsed = round - 1;
    setup.challenge = issue_challenge(setup.verifier, round, rng);
    setup.basis = choose_basis(setup.verifier, rng);
    return setup;
}

StatelessRound run_stateless_round(const VerifierState &policy, const RoundParams &params, uint64_t round,
                                   RngStream &rng) {
    StatelessSetup setup = begin_stateless_round(policy, params.n, round, rng);
    WitnessState w = update(setup.fresh_witness, setup.challenge);
    Evidence evidence = generate_evidence(w, setup.basis, params.shots, params.noise_p, rng);
    AuditOutcome outcome = audit(setup.verifier, setup.basis, evidence);
    return StatelessRound{RoundTranscript{round, setup.challenge, setup.basis, std::move(evidence), outcome},
                          outcome.accepted};
}

}  // namespace qscw
