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

#include "qscw/game.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

#include "qscw/errors.h"
#include "qscw/parallel.h"

namespace qscw {

namespace {

// Stream tags for derive_seed; each kind of per-trial work gets its own stream.
constexpr uint64_t kGameStream = 1;
constexpr uint64_t kHonestStream = 2;

constexpr uint64_t kMaxWindow = 1'000'000;

VerifierState make_verifier(const GameConfig &config, uint8_t secret) {
    VerifierState v;
    v.expected_phase = secret;
    v.tau_x = config.tau_x;
    v.tau_z = config.tau_z;
    v.basis_policy = config.basis_policy;
    v.k_challenge_bits = config.k_challenge_bits;
    return v;
}

RoundParams round_params(const GameConfig &config) {
    return RoundParams{config.n, config.shots, config.noise_p};
}

uint8_t draw_secret(const GameConfig &config, RngStream &rng) {
    if (config.secret_phase.has_value()) {
        return *config.secret_phase;
    }
    return rng.next_bit() ? 1 : 0;
}

}  // namespace

std::string protocol_label(ProtocolKind p) {
    return p == ProtocolKind::Temporal ? "temporal" : "stateless";
}

ProtocolKind parse_protocol(std::string_view text) {
    if (text == "temporal") {
        return ProtocolKind::Temporal;
    }
    if (text == "stateless") {
        return ProtocolKind::Stateless;
    }
    throw ConfigError("protocol: unrecognized value '" + std::string(text) + "' (expected temporal or stateless)");
}

std::string challenge_mode_label(ChallengeMode m) {
    return m == ChallengeMode::Shared ? "shared" : "independent";
}

ChallengeMode parse_challenge_mode(std::string_view text) {
    if (text == "shared") {
        return ChallengeMode::Shared;
    }
    if (text == "independent") {
        return ChallengeMode::Independent;
    }
    throw ConfigError("challenge_mode: unrecognized value '" + std::string(text) +
                      "' (expected shared or independent)");
}

void validate(const GameConfig &config) {
    if (config.n < 1 || config.n > StateVector::kMaxQubits) {
        throw ConfigError("n must lie in [1, " + std::to_string(StateVector::kMaxQubits) + "], got " +
                          std::to_string(config.n));
    }
    if (config.window > kMaxWindow) {
        throw ConfigError("window must not exceed " + std::to_string(kMaxWindow));
    }
    if (config.t_fork > kMaxWindow) {
        throw ConfigError("t_fork must not exceed " + std::to_string(kMaxWindow));
    }
    if (config.shots < 1) {
        throw ConfigError("shots must be at least 1");
    }
    if (!(config.noise_p >= 0.0 && config.noise_p <= 1.0)) {
        throw ConfigError("noise_p must lie in [0, 1]");
    }
    if (config.trials < 1) {
        throw ConfigError("trials must be at least 1");
    }
    if (config.secret_phase.has_value() && *config.secret_phase > 1) {
        throw ConfigError("secret_phase must be 0 or 1");
    }
    if (config.protocol == ProtocolKind::Stateless && config.window < 1) {
        throw ConfigError("window must be at least 1 for the stateless protocol");
    }
    validate(make_verifier(config, 0));
    validate(config.attacker);
}

std::string format_number(double x) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    if (ec != std::errc()) {
        throw std::runtime_error("number formatting failed");
    }
    return std::string(buf, ptr);
}

std::string describe(const GameConfig &config) {
    std::ostringstream out;
    out << "n=" << config.n << ";window=" << config.window << ";t_fork=" << config.t_fork
        << ";shots=" << config.shots << ";k_challenge_bits=" << config.k_challenge_bits
        << ";tau_x=" << format_number(config.tau_x) << ";tau_z=" << format_number(config.tau_z)
        << ";basis_policy=" << config.basis_policy.str() << ";noise_p=" << format_number(config.noise_p)
        << ";attacker=" << attacker_label(config.attacker)
        << ";trials=" << config.trials << ";master_seed=" << config.master_seed
        << ";challenge_mode=" << challenge_mode_label(config.challenge_mode)
        << ";protocol=" << protocol_label(config.protocol) << ";secret_phase="
        << (config.secret_phase ? std::to_string(*config.secret_phase) : std::string("random"));
    return out.str();
}

std::string config_digest(const GameConfig &config) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : describe(config)) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

Interval wilson_interval(uint64_t successes, uint64_t n, double z) {
    if (n == 0) {
        return {0.0, 1.0};
    }
    const double nn = static_cast<double>(n);
    const double p = static_cast<double>(successes) / nn;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / nn;
    const double center = (p + z2 / (2 * nn)) / denom;
    const double half = z / denom * std::sqrt(p * (1 - p) / nn + z2 / (4 * nn * nn));
    Interval ci{std::max(0.0, center - half), std::min(1.0, center + half)};
    // Rounding can leave the bound a hair inside p at p = 0 or 1.
    ci.low = std::min(ci.low, p);
    ci.high = std::max(ci.high, p);
    return ci;
}

bool run_security_game(const GameConfig &config, uint64_t trial_index) {
    validate(config);
    RngStream rng(derive_seed(config.master_seed, trial_index, kGameStream));
    const RoundParams params = round_params(config);

    // Setup and Phase 1: honest history up to the fork point.
    VerifierState verifier = make_verifier(config, draw_secret(config, rng));
    std::vector<WitnessState> history;
    history.reserve(config.t_fork + 1);
    history.push_back(init_witness(config.n, verifier.expected_phase));
    for (uint64_t t = 1; t <= config.t_fork; t++) {
        TemporalRound r = run_temporal_round(verifier, history.back(), params, rng);
        verifier = r.verifier;
        history.push_back(r.witness);
    }

    auto [b0, b1] = fork(history, config.t_fork, config.attacker, rng);
    VerifierState v0 = verifier;
    VerifierState v1 = verifier;

    // Phase 2: the verdict is only disclosed after the window, so the adversary
    // gains nothing from an early exit; stopping at the first rejection changes
    // no outcome.
    for (uint64_t i = 1; i <= config.window; i++) {
        const uint64_t round = config.t_fork + i;
        Challenge c0 = issue_challenge(v0, round, rng);
        Challenge c1;
        if (config.challenge_mode == ChallengeMode::Shared) {
            c1 = c0;
            v1.expected_phase ^= parity(c1.bits);
        } else {
            c1 = issue_challenge(v1, round, rng);
        }
        Basis basis0 = choose_basis(v0, rng);
        Basis basis1 = choose_basis(v1, rng);
        Evidence e0 = branch_respond(b0, c0, basis0, config.shots, config.noise_p, rng);
        Evidence e1 = branch_respond(b1, c1, basis1, config.shots, config.noise_p, rng);
        if (!audit(v0, basis0, e0).accepted || !audit(v1, basis1, e1).accepted) {
            return false;
        }
    }
    return true;
}

StatelessForkTally run_stateless_fork_game(const GameConfig &config, uint64_t trial_index) {
    validate(config);
    RngStream rng(derive_seed(config.master_seed, trial_index, kGameStream));
    const VerifierState policy = make_verifier(config, 0);

    // Stateless rounds carry no history; the fork happens before the window
    // and B1 only ever has its attacker model to go on.
    std::vector<WitnessState> start{init_witness(config.n, 0)};
    auto [unused_b0, b1] = fork(start, 0, config.attacker, rng);
    (void)unused_b0;
    b1.next_round = config.t_fork + 1;

    StatelessForkTally tally;
    for (uint64_t i = 1; i <= config.window; i++) {
        const uint64_t round = config.t_fork + i;
        StatelessSetup s0 = begin_stateless_round(policy, config.n, round, rng);
        StatelessSetup s1 = s0;
        if (config.challenge_mode == ChallengeMode::Independent) {
            s1 = begin_stateless_round(policy, config.n, round, rng);
        } else {
            s1.basis = choose_basis(s1.verifier, rng);
        }
        // B0 is the honest holder of this round's fresh state.
        WitnessState w0 = update(s0.fresh_witness, s0.challenge);
        Evidence e0 = generate_evidence(w0, s0.basis, config.shots, config.noise_p, rng);
        // An ideal-coherent B1 copies this round's fresh state; others respond from their model.
        if (b1.holds_true_witness()) {
            b1.access = s1.fresh_witness;
        }
        Evidence e1 = branch_respond(b1, s1.challenge, s1.basis, config.shots, config.noise_p, rng);
        bool both = audit(s0.verifier, s0.basis, e0).accepted && audit(s1.verifier, s1.basis, e1).accepted;
        tally.both_accepted += both;
        tally.rounds++;
    }
    return tally;
}

double run_honest_execution(const GameConfig &config, uint64_t trial_index) {
    validate(config);
    RngStream rng(derive_seed(config.master_seed, trial_index, kHonestStream));
    const RoundParams params = round_params(config);
    const uint64_t total = config.t_fork + config.window;
    if (total == 0) {
        return 1.0;
    }
    uint64_t accepted = 0;
    if (config.protocol == ProtocolKind::Stateless) {
        const VerifierState policy = make_verifier(config, 0);
        for (uint64_t t = 1; t <= total; t++) {
            accepted += run_stateless_round(policy, params, t, rng).accepted;
        }
    } else {
        VerifierState verifier = make_verifier(config, draw_secret(config, rng));
        WitnessState witness = init_witness(config.n, verifier.expected_phase);
        for (uint64_t t = 1; t <= total; t++) {
            TemporalRound r = run_temporal_round(verifier, witness, params, rng);
            accepted += r.transcript.outcome.accepted;
            verifier = r.verifier;
            witness = r.witness;
        }
    }
    return static_cast<double>(accepted) / static_cast<double>(total);
}

GameResult estimate_fsr(const GameConfig &config, unsigned jobs) {
    validate(config);
    std::vector<double> apr(config.trials);
    std::vector<uint64_t> wins(config.trials);
    std::vector<uint64_t> samples(config.trials);
    parallel_for(config.trials, jobs, [&](uint64_t i) {
        apr[i] = run_honest_execution(config, i);
        if (config.protocol == ProtocolKind::Temporal) {
            wins[i] = run_security_game(config, i) ? 1 : 0;
            samples[i] = 1;
        } else {
            StatelessForkTally t = run_stateless_fork_game(config, i);
            wins[i] = t.both_accepted;
            samples[i] = t.rounds;
        }
    });
    GameResult result;
    result.trials_run = config.trials;
    double apr_sum = 0;
    for (uint64_t i = 0; i < config.trials; i++) {
        apr_sum += apr[i];
        result.wins += wins[i];
        result.samples += samples[i];
    }
    result.apr = apr_sum / static_cast<double>(config.trials);
    result.fsr = static_cast<double>(result.wins) / static_cast<double>(result.samples);
    result.fsr_ci = wilson_interval(result.wins, result.samples);
    return result;
}

}  // namespace qscw
