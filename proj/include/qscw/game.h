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

#ifndef QSCW_GAME_H
#define QSCW_GAME_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "qscw/adversary.h"
#include "qscw/protocol.h"

namespace qscw {

enum class ProtocolKind : uint8_t { Temporal, Stateless };

std::string protocol_label(ProtocolKind p);
ProtocolKind parse_protocol(std::string_view text);

/// Shared: both branches receive the same challenge each window round.
/// Independent: each branch's verifier draws its own challenge.
enum class ChallengeMode : uint8_t { Shared, Independent };

std::string challenge_mode_label(ChallengeMode m);
ChallengeMode parse_challenge_mode(std::string_view text);

struct GameConfig {
    size_t n = 4;
    /// Audit window W: rounds after the fork that both branches must pass.
    uint64_t window = 5;
    uint64_t t_fork = 3;
    size_t shots = 32;
    size_t k_challenge_bits = 8;
    double tau_x = 0.85;
    double tau_z = 0.85;
    BasisPolicy basis_policy = BasisPolicy::bernoulli(0.5);
    double noise_p = 0.0;
    AttackerModel attacker = Memoryless{};
    uint64_t trials = 5000;
    uint64_t master_seed = 20260101;
    ChallengeMode challenge_mode = ChallengeMode::Shared;
    ProtocolKind protocol = ProtocolKind::Temporal;
    /// Initial witness phase. Unset means drawn uniformly per trial by the challenger.
    std::optional<uint8_t> secret_phase;
};

/// Throws ConfigError naming the first offending field.
void validate(const GameConfig &config);

/// Shortest round-trip decimal form; identical input gives identical text.
std::string format_number(double x);

/// Canonical one-line key=value description; stable across runs.
std::string describe(const GameConfig &config);
/// 16 hex digits of FNV-1a over describe(config).
std::string config_digest(const GameConfig &config);

struct Interval {
    double low = 0.0;
    double high = 1.0;
};

/// Wilson score interval (95% by default), clamped to [0, 1].
Interval wilson_interval(uint64_t successes, uint64_t n, double z = 1.959963984540054);

struct GameResult {
    /// Mean fraction of accepted honest rounds.
    double apr = 0.0;
    /// Temporal: fraction of trials the adversary won. Stateless: fraction of
    /// window rounds in which both branches passed.
    double fsr = 0.0;
    Interval fsr_ci;
    uint64_t trials_run = 0;
    uint64_t wins = 0;
    /// Denominator of fsr (trials, or trials * window for the stateless baseline).
    uint64_t samples = 0;
};

/// One play of the two-branch fork game on the temporal protocol. Phase 1 runs
/// t_fork honest rounds, the adversary forks, then W rounds are played against
/// both branches. True iff every window round of both branches is accepted.
bool run_security_game(const GameConfig &config, uint64_t trial_index);

/// Stateless counterpart: counts window rounds in which both branches pass.
struct StatelessForkTally {
    uint64_t both_accepted = 0;
    uint64_t rounds = 0;
};
StatelessForkTally run_stateless_fork_game(const GameConfig &config, uint64_t trial_index);

/// Fraction of t_fork + W honest rounds accepted (1.0 when there are no rounds).
/// Uses the protocol named in the config.
double run_honest_execution(const GameConfig &config, uint64_t trial_index);

/// Runs config.trials independent trials (jobs workers; 0 = hardware
/// concurrency). Per-trial seeds come from (master_seed, trial_index), so the
/// result does not depend on jobs.
GameResult estimate_fsr(const GameConfig &config, unsigned jobs = 0);

}  // namespace qscw

#endif
