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

#include <gtest/gtest.h>

#include <cmath>

#include "stat_oracle.h"
#include "qscw/errors.h"

using namespace qscw;

namespace {

std::vector<WitnessState> honest_history(size_t n, uint8_t secret, uint64_t rounds, RngStream &rng) {
    VerifierState v;
    v.expected_phase = secret;
    std::vector<WitnessState> h{init_witness(n, secret)};
    for (uint64_t t = 1; t <= rounds; t++) {
        h.push_back(update(h.back(), issue_challenge(v, t, rng)));
    }
    return h;
}

Challenge challenge_for(uint64_t round, RngStream &rng) {
    return {Bitstring(rng.next_u64() & 0xff, 8), round};
}

}  // namespace

TEST(Attacker, LabelsRoundTrip) {
    for (const char *label : {"memoryless", "memoryless-fixed-0", "memoryless-fixed-1", "memoryless-product",
                              "limited-memory-k1", "limited-memory-k16", "ideal-coherent"}) {
        EXPECT_EQ(attacker_label(parse_attacker(label)), label);
    }
    EXPECT_THROW(parse_attacker("limited-memory-k0"), ConfigError);
    EXPECT_THROW(parse_attacker("clairvoyant"), ConfigError);
    EXPECT_THROW(validate(AttackerModel{LimitedMemory{0}}), ConfigError);
}

TEST(Fork, IdealCoherentCopiesWitnessExactly) {
    RngStream rng(1);
    auto history = honest_history(4, 1, 6, rng);
    for (uint64_t t = 0; t < history.size(); t++) {
        auto [b0, b1] = fork(history, t, IdealCoherent{}, rng);
        ASSERT_TRUE(b0.holds_true_witness());
        ASSERT_TRUE(b1.holds_true_witness());
        EXPECT_EQ(std::get<WitnessState>(b0.access), history[t]);
        EXPECT_EQ(std::get<WitnessState>(b1.access), history[t]);
        EXPECT_EQ(b0.next_round, t + 1);
        EXPECT_EQ(b1.next_round, t + 1);
        EXPECT_EQ(b0.id, BranchId::B0);
        EXPECT_EQ(b1.id, BranchId::B1);
    }
}

TEST(Fork, RejectsForkPointBeyondHistory) {
    RngStream rng(2);
    auto history = honest_history(3, 0, 2, rng);
    EXPECT_THROW(fork(history, 3, Memoryless{}, rng), ConfigError);
    std::vector<WitnessState> empty;
    EXPECT_THROW(fork(empty, 0, Memoryless{}, rng), ConfigError);
    EXPECT_NO_THROW(fork(history, 0, Memoryless{}, rng));
}

TEST(Fork, NonCoherentBranchGetsSimulation) {
    RngStream rng(3);
    auto history = honest_history(3, 0, 3, rng);
    for (AttackerModel m : {AttackerModel{Memoryless{}}, AttackerModel{LimitedMemory{4}}}) {
        auto [b0, b1] = fork(history, 3, m, rng);
        EXPECT_TRUE(b0.holds_true_witness());
        EXPECT_FALSE(b1.holds_true_witness());
        EXPECT_EQ(std::get<SimulatedWitness>(b1.access).n, 3u);
    }
}

// The simulated branch's claimed phase agrees with the true one half the time
// and carries no information about it.
TEST(Fork, MemorylessClaimIsIndependentOfTruePhase) {
    RngStream rng(4);
    const size_t trials = 20000;
    size_t agree[2] = {0, 0}, count[2] = {0, 0};
    for (size_t i = 0; i < trials; i++) {
        uint8_t secret = rng.next_bit();
        auto history = honest_history(2, secret, 2, rng);
        auto [b0, b1] = fork(history, 2, Memoryless{}, rng);
        Challenge c = challenge_for(3, rng);
        uint8_t claimed = simulated_phase_for(std::get<SimulatedWitness>(b1.access), c, rng);
        uint8_t truth = history[2].phase ^ parity(c.bits);
        agree[truth] += claimed == truth;
        count[truth]++;
    }
    for (int t : {0, 1}) {
        double f = static_cast<double>(agree[t]) / count[t];
        EXPECT_NEAR(f, 0.5, qscw_test::three_sigma(0.5, count[t])) << "truth " << t;
    }
}

TEST(Fork, FixedPhaseClaimFollowsCurrentParityOnly) {
    RngStream rng(5);
    SimulatedWitness sim;
    sim.model = Memoryless{Memoryless::Strategy::FixedPhaseGHZ, 1};
    sim.n = 3;
    for (uint64_t t = 1; t <= 20; t++) {
        Challenge c = challenge_for(t, rng);
        EXPECT_EQ(simulated_phase_for(sim, c, rng), 1 ^ parity(c.bits));
    }
}

// Within each k-round block the claim tracks the parities exactly, so every
// round in a block is right iff the block's guess was right.
TEST(Fork, LimitedMemoryReguessesEveryKRounds) {
    RngStream rng(6);
    for (uint64_t k : {1, 2, 3, 4}) {
        for (int trial = 0; trial < 200; trial++) {
            auto history = honest_history(3, rng.next_bit(), 1, rng);
            auto [b0, b1] = fork(history, 1, LimitedMemory{k}, rng);
            auto &sim = std::get<SimulatedWitness>(b1.access);
            uint8_t truth = history[1].phase;
            std::vector<bool> correct;
            for (uint64_t i = 1; i <= 12; i++) {
                Challenge c = challenge_for(1 + i, rng);
                truth ^= parity(c.bits);
                correct.push_back(simulated_phase_for(sim, c, rng) == truth);
            }
            for (size_t i = 0; i < correct.size(); i++) {
                EXPECT_EQ(correct[i], correct[i - i % k]) << "k=" << k << " round " << i;
            }
        }
    }
}

TEST(Fork, LimitedMemorySurvivalMatchesCeilingLaw) {
    const uint64_t window = 6;
    const size_t trials = 20000;
    for (uint64_t k : {1, 2, 3, 6}) {
        RngStream rng(derive_seed(7, k));
        size_t survived = 0;
        for (size_t i = 0; i < trials; i++) {
            auto history = honest_history(2, rng.next_bit(), 0, rng);
            auto [b0, b1] = fork(history, 0, LimitedMemory{k}, rng);
            auto &sim = std::get<SimulatedWitness>(b1.access);
            uint8_t truth = history[0].phase;
            bool ok = true;
            for (uint64_t r = 1; r <= window; r++) {
                Challenge c = challenge_for(r, rng);
                truth ^= parity(c.bits);
                ok &= simulated_phase_for(sim, c, rng) == truth;
            }
            survived += ok;
        }
        double want = std::pow(2.0, -std::ceil(static_cast<double>(window) / k));
        EXPECT_NEAR(static_cast<double>(survived) / trials, want, qscw_test::three_sigma(want, trials)) << k;
    }
}

TEST(Branch, RespondsInRoundOrder) {
    RngStream rng(8);
    auto history = honest_history(3, 0, 2, rng);
    auto [b0, b1] = fork(history, 2, Memoryless{}, rng);
    EXPECT_THROW(branch_respond(b0, challenge_for(4, rng), Basis::X, 4, 0.0, rng), ProtocolError);
    EXPECT_NO_THROW(branch_respond(b0, challenge_for(3, rng), Basis::X, 4, 0.0, rng));
    EXPECT_EQ(b0.next_round, 4u);
    EXPECT_THROW(branch_respond(b1, challenge_for(2, rng), Basis::Z, 4, 0.0, rng), ProtocolError);
}

TEST(Branch, TrueWitnessBranchIsHonest) {
    RngStream rng(9);
    VerifierState v;
    v.expected_phase = 1;
    std::vector<WitnessState> history{init_witness(4, 1)};
    auto [b0, b1] = fork(history, 0, IdealCoherent{}, rng);
    for (uint64_t t = 1; t <= 10; t++) {
        Challenge c = issue_challenge(v, t, rng);
        EXPECT_TRUE(audit(v, Basis::X, branch_respond(b0, c, Basis::X, 16, 0.0, rng)).accepted);
        EXPECT_TRUE(audit(v, Basis::X, branch_respond(b1, c, Basis::X, 16, 0.0, rng)).accepted);
    }
}

TEST(Branch, ProductStateFailsXAndPassesZ) {
    RngStream rng(10);
    std::vector<WitnessState> history{init_witness(4, 0)};
    auto [b0, b1] = fork(history, 0, Memoryless{Memoryless::Strategy::ProductState, 0}, rng);
    VerifierState v;
    size_t x_accepted = 0;
    for (uint64_t t = 1; t <= 200; t++) {
        Challenge c = issue_challenge(v, t, rng);
        Basis basis = t % 2 ? Basis::X : Basis::Z;
        AuditOutcome out = audit(v, basis, branch_respond(b1, c, basis, 32, 0.0, rng));
        if (basis == Basis::Z) {
            EXPECT_TRUE(out.accepted);
        } else {
            x_accepted += out.accepted;
        }
    }
    EXPECT_LE(x_accepted, 1u);
}
