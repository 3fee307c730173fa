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

#include "qscw/adversary.h"

#include <charconv>

#include "qscw/errors.h"

namespace qscw {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};

std::string attacker_label(const AttackerModel &model) {
    return std::visit(
        Overloaded{
            [](const Memoryless &m) -> std::string {
                switch (m.strategy) {
                    case Memoryless::Strategy::RandomPhaseGHZ:
                        return "memoryless";
                    case Memoryless::Strategy::FixedPhaseGHZ:
                        return "memoryless-fixed-" + std::to_string(m.fixed_phase);
                    case Memoryless::Strategy::ProductState:
                        return "memoryless-product";
                }
                return "memoryless";
            },
            [](const LimitedMemory &l) { return "limited-memory-k" + std::to_string(l.horizon); },
            [](const IdealCoherent &) -> std::string { return "ideal-coherent"; },
        },
        model);
}

AttackerModel parse_attacker(std::string_view text) {
    if (text == "memoryless" || text == "memoryless-random") {
        return Memoryless{};
    }
    if (text == "memoryless-fixed-0" || text == "memoryless-fixed") {
        return Memoryless{Memoryless::Strategy::FixedPhaseGHZ, 0};
    }
    if (text == "memoryless-fixed-1") {
        return Memoryless{Memoryless::Strategy::FixedPhaseGHZ, 1};
    }
    if (text == "memoryless-product") {
        return Memoryless{Memoryless::Strategy::ProductState, 0};
    }
    if (text == "ideal-coherent" || text == "ideal") {
        return IdealCoherent{};
    }
    constexpr std::string_view prefix = "limited-memory-k";
    if (text.starts_with(prefix)) {
        std::string_view num = text.substr(prefix.size());
        uint64_t k = 0;
        auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), k);
        if (ec == std::errc() && ptr == num.data() + num.size() && k >= 1) {
            return LimitedMemory{k};
        }
    }
    throw ConfigError("attacker: unrecognized model '" + std::string(text) +
                      "' (expected memoryless, memoryless-fixed-<0|1>, memoryless-product, "
                      "limited-memory-k<k>, ideal-coherent)");
}

void validate(const AttackerModel &model) {
    if (const auto *l = std::get_if<LimitedMemory>(&model); l != nullptr && l->horizon < 1) {
        throw ConfigError("attacker: limited-memory horizon k must be at least 1");
    }
    if (const auto *m = std::get_if<Memoryless>(&model); m != nullptr && m->fixed_phase > 1) {
        throw ConfigError("attacker: fixed phase guess must be 0 or 1");
    }
}

std::pair<ForkBranch, ForkBranch> fork(std::span<const WitnessState> history, uint64_t t_fork,
                                       const AttackerModel &model, RngStream &rng) {
    validate(model);
    if (t_fork >= history.size()) {
        throw ConfigError("t_fork = " + std::to_string(t_fork) + " exceeds the history length " +
                          std::to_string(history.empty() ? 0 : history.size() - 1));
    }
    const WitnessState &at_fork = history[t_fork];
    ForkBranch b0{BranchId::B0, at_fork, t_fork + 1};
    ForkBranch b1{BranchId::B1, at_fork, t_fork + 1};
    if (!std::holds_alternative<IdealCoherent>(model)) {
        SimulatedWitness sim;
        sim.model = model;
        sim.n = at_fork.n;
        sim.base_guess = rng.next_bit() ? 1 : 0;
        b1.access = sim;
    }
    return {std::move(b0), std::move(b1)};
}

uint8_t simulated_phase_for(SimulatedWitness &sim, const Challenge &challenge, RngStream &rng) {
    const uint8_t p = parity(challenge.bits);
    std::visit(Overloaded{
                   [&](const Memoryless &m) {
                       // Fresh approximation each round: only the current challenge is folded in.
                       sim.base_guess = m.strategy == Memoryless::Strategy::FixedPhaseGHZ ? m.fixed_phase
                                                                                           : (rng.next_bit() ? 1 : 0);
                       sim.observed_parity = p;
                       sim.rounds_since_refresh = 1;
                   },
                   [&](const LimitedMemory &l) {
                       if (sim.rounds_since_refresh == l.horizon) {
                           sim.base_guess = rng.next_bit() ? 1 : 0;
                           sim.observed_parity = 0;
                           sim.rounds_since_refresh = 0;
                       }
                       sim.observed_parity ^= p;
                       sim.rounds_since_refresh++;
                   },
                   [](const IdealCoherent &) {
                       throw ProtocolError("an ideal-coherent branch holds the witness, not a simulation");
                   },
               },
               sim.model);
    sim.rounds_since_fork++;
    return sim.base_guess ^ sim.observed_parity;
}

Evidence branch_respond(ForkBranch &branch, const Challenge &challenge, Basis basis, size_t shots, double noise_p,
                        RngStream &rng) {
    if (challenge.round != branch.next_round) {
        throw ProtocolError("branch expected round " + std::to_string(branch.next_round) + " but got challenge for " +
                            std::to_string(challenge.round));
    }
    branch.next_round++;
    if (auto *w = std::get_if<WitnessState>(&branch.access)) {
        *w = update(*w, challenge);
        return generate_evidence(*w, basis, shots, noise_p, rng);
    }
    auto &sim = std::get<SimulatedWitness>(branch.access);
    uint8_t claimed = simulated_phase_for(sim, challenge, rng);
    const auto *m = std::get_if<Memoryless>(&sim.model);
    if (m != nullptr && m->strategy == Memoryless::Strategy::ProductState) {
        return measure_shots(StateVector(sim.n), basis, shots, noise_p, challenge.round, rng);
    }
    return measure_shots(prepare_phased_ghz(sim.n, claimed), basis, shots, noise_p, challenge.round, rng);
}

}  // namespace qscw
