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

#include <gtest/gtest.h>

#include <array>
#include <cmath>

#include "density_oracle.h"
#include "stat_oracle.h"
#include "qscw/errors.h"

using namespace qscw;

namespace {

constexpr double kTol = 1e-12;
const double kHalfRoot = 1 / std::sqrt(2.0);

void expect_amplitudes_near(const StateVector &s, const std::vector<Amplitude> &expected) {
    ASSERT_EQ(s.amplitudes().size(), expected.size());
    for (size_t i = 0; i < expected.size(); i++) {
        EXPECT_NEAR(std::abs(s.amplitude(i) - expected[i]), 0.0, kTol) << "index " << i;
    }
}

StateVector random_state(size_t n, RngStream &rng) {
    std::vector<Amplitude> amps(size_t{1} << n);
    double norm = 0;
    for (auto &a : amps) {
        a = {rng.next_unit() - 0.5, rng.next_unit() - 0.5};
        norm += std::norm(a);
    }
    for (auto &a : amps) {
        a /= std::sqrt(norm);
    }
    return StateVector::from_amplitudes(n, amps);
}

}  // namespace

TEST(StateVector, StartsInAllZeros) {
    StateVector s(3);
    EXPECT_EQ(s.num_qubits(), 3u);
    std::vector<Amplitude> expected(8);
    expected[0] = 1;
    expect_amplitudes_near(s, expected);
}

TEST(StateVector, RejectsQubitCountsOutsideRange) {
    EXPECT_THROW(StateVector(0), ConfigError);
    EXPECT_THROW(StateVector(25), ConfigError);
    EXPECT_THROW(prepare_ghz(25), ConfigError);
    EXPECT_NO_THROW(StateVector(1));
}

TEST(StateVector, FromAmplitudesChecksLength) {
    EXPECT_THROW(StateVector::from_amplitudes(2, std::vector<Amplitude>(3)), ConfigError);
}

TEST(StateVector, GhzAmplitudes) {
    for (size_t n : {1, 2, 3, 4, 6}) {
        StateVector s = prepare_ghz(n);
        std::vector<Amplitude> expected(size_t{1} << n);
        expected.front() = kHalfRoot;
        expected.back() = kHalfRoot;
        expect_amplitudes_near(s, expected);
    }
}

TEST(StateVector, ZOnGhzFlipsRelativeSign) {
    StateVector s = apply_pauli(prepare_ghz(3), {Pauli::Z, 0});
    std::vector<Amplitude> expected(8);
    expected[0] = kHalfRoot;
    expected[7] = -kHalfRoot;
    expect_amplitudes_near(s, expected);
}

TEST(StateVector, PauliActionOnBasisStates) {
    const Amplitude i{0, 1};
    StateVector zero(1);
    expect_amplitudes_near(apply_pauli(zero, {Pauli::X, 0}), {0, 1});
    expect_amplitudes_near(apply_pauli(zero, {Pauli::Y, 0}), {0, i});
    expect_amplitudes_near(apply_pauli(zero, {Pauli::Z, 0}), {1, 0});
    StateVector one = apply_pauli(zero, {Pauli::X, 0});
    expect_amplitudes_near(apply_pauli(one, {Pauli::Y, 0}), {-i, 0});
    expect_amplitudes_near(apply_pauli(one, {Pauli::Z, 0}), {0, -1});

    // X on qubit 1 of |00> gives index 2 (qubit 0 is the low bit).
    StateVector two(2);
    two.apply_pauli({Pauli::X, 1});
    expect_amplitudes_near(two, {0, 0, 1, 0});
}

TEST(StateVector, PauliQubitOutOfRange) {
    StateVector s(2);
    EXPECT_THROW(s.apply_pauli({Pauli::X, 2}), ConfigError);
    EXPECT_THROW(s.apply_hadamard(5), ConfigError);
    EXPECT_THROW(s.apply_cnot(0, 0), ConfigError);
}

TEST(StateVector, PaulisAreInvolutionsAndPreserveNorm) {
    RngStream rng(7);
    for (int trial = 0; trial < 50; trial++) {
        size_t n = 1 + rng.below(6);
        StateVector s = random_state(n, rng);
        StateVector original = s;
        PauliError e{static_cast<Pauli>(rng.below(3)), static_cast<size_t>(rng.below(n))};
        s.apply_pauli(e);
        EXPECT_NEAR(s.norm_squared(), 1.0, 1e-12);
        s.apply_pauli(e);
        expect_amplitudes_near(s, {original.amplitudes().begin(), original.amplitudes().end()});
    }
}

TEST(StateVector, RandomGateSequencesPreserveNorm) {
    RngStream rng(11);
    for (int trial = 0; trial < 30; trial++) {
        size_t n = 2 + rng.below(5);
        StateVector s = random_state(n, rng);
        for (int g = 0; g < 40; g++) {
            switch (rng.below(3)) {
                case 0:
                    s.apply_pauli({static_cast<Pauli>(rng.below(3)), static_cast<size_t>(rng.below(n))});
                    break;
                case 1:
                    s.apply_hadamard(rng.below(n));
                    break;
                default: {
                    size_t c = rng.below(n);
                    size_t t = (c + 1 + rng.below(n - 1)) % n;
                    s.apply_cnot(c, t);
                }
            }
        }
        EXPECT_NEAR(s.norm_squared(), 1.0, 1e-10);
    }
}

TEST(StateVector, HadamardIsSelfInverse) {
    RngStream rng(3);
    StateVector s = random_state(4, rng);
    StateVector t = s;
    t.apply_hadamard_all();
    t.apply_hadamard_all();
    expect_amplitudes_near(t, {s.amplitudes().begin(), s.amplitudes().end()});
}

TEST(StateVector, HadamardTransformMatchesDefiningSum) {
    RngStream rng(5);
    for (size_t n = 1; n <= 5; n++) {
        StateVector s = random_state(n, rng);
        std::vector<Amplitude> in(s.amplitudes().begin(), s.amplitudes().end());
        auto expected = qscw_test::walsh_hadamard_by_sum(in, n);
        s.apply_hadamard_all();
        expect_amplitudes_near(s, expected);
    }
}

TEST(Sampling, ZOnGhzGivesOnlyAllZerosOrAllOnes) {
    RngStream rng(1);
    StateVector s = prepare_ghz(4);
    size_t ones = 0;
    const size_t draws = 10000;
    for (size_t i = 0; i < draws; i++) {
        Bitstring b = sample_z_basis(s, rng);
        ASSERT_TRUE(b.all_zeros() || b.all_ones()) << b.str();
        ones += b.all_ones();
    }
    double f = static_cast<double>(ones) / draws;
    EXPECT_NEAR(f, 0.5, qscw_test::three_sigma(0.5, draws));
}

TEST(Sampling, AllZerosStateAlwaysSamplesZero) {
    RngStream rng(2);
    StateVector s(5);
    for (int i = 0; i < 200; i++) {
        EXPECT_TRUE(sample_z_basis(s, rng).all_zeros());
    }
}

TEST(Sampling, XParityOfGhzIsDeterministic) {
    RngStream rng(4);
    for (size_t n = 1; n <= 8; n++) {
        for (uint8_t phase : {0, 1}) {
            StateVector s = prepare_ghz(n);
            if (phase) {
                s.apply_pauli({Pauli::Z, 0});
            }
            OutcomeSampler sampler(s, Basis::X);
            for (int i = 0; i < 300; i++) {
                ASSERT_EQ(parity(sampler.sample(rng)), phase) << "n=" << n;
            }
        }
    }
}

TEST(Sampling, XOnZeroIsUnbiased) {
    RngStream rng(6);
    StateVector s(1);
    const size_t draws = 20000;
    size_t ones = 0;
    for (size_t i = 0; i < draws; i++) {
        ones += sample_x_basis(s, rng)[0];
    }
    EXPECT_NEAR(static_cast<double>(ones) / draws, 0.5, qscw_test::three_sigma(0.5, draws));
}

TEST(Sampling, DoesNotCollapseTheState) {
    RngStream rng(8);
    StateVector s = prepare_ghz(3);
    StateVector before = s;
    for (int i = 0; i < 10; i++) {
        sample_basis(s, Basis::Z, rng);
        sample_basis(s, Basis::X, rng);
    }
    expect_amplitudes_near(s, {before.amplitudes().begin(), before.amplitudes().end()});
}

TEST(Sampling, UnnormalizedStateIsRejected) {
    StateVector s = StateVector::from_amplitudes(1, {1.0, 1.0});
    RngStream rng(0);
    EXPECT_THROW(sample_z_basis(s, rng), InvariantError);
    EXPECT_THROW(OutcomeSampler(s, Basis::X), InvariantError);
    StateVector tiny = StateVector::from_amplitudes(1, {1.0 + 1e-9, 0.0});
    EXPECT_NO_THROW(sample_z_basis(tiny, rng));
}

TEST(Sampling, ZeroProbabilityOutcomesNeverAppear) {
    RngStream rng(9);
    StateVector s = StateVector::from_amplitudes(2, {0.0, kHalfRoot, 0.0, kHalfRoot});
    for (int i = 0; i < 2000; i++) {
        EXPECT_TRUE(sample_z_basis(s, rng)[0]);
    }
}

TEST(Sampling, SameSeedSameOutcomes) {
    StateVector s = prepare_ghz(5);
    s.apply_hadamard(2);
    RngStream a(123), b(123);
    for (int i = 0; i < 100; i++) {
        EXPECT_EQ(sample_x_basis(s, a), sample_x_basis(s, b));
    }
}

TEST(Depolarizing, ZeroProbabilityLeavesStateUnchanged) {
    RngStream rng(10);
    StateVector s = prepare_ghz(4);
    for (int i = 0; i < 20; i++) {
        EXPECT_TRUE(sample_depolarizing_errors(4, 0.0, rng).empty());
        StateVector t = apply_depolarizing_trajectory(s, 0.0, rng);
        expect_amplitudes_near(t, {s.amplitudes().begin(), s.amplitudes().end()});
    }
}

TEST(Depolarizing, FullProbabilityHitsEveryQubitOnce) {
    RngStream rng(12);
    std::array<size_t, 3> axis_counts{};
    const size_t draws = 6000;
    for (size_t i = 0; i < draws; i++) {
        auto errors = sample_depolarizing_errors(1, 1.0, rng);
        ASSERT_EQ(errors.size(), 1u);
        axis_counts[static_cast<size_t>(errors[0].axis)]++;
    }
    for (size_t c : axis_counts) {
        EXPECT_NEAR(static_cast<double>(c) / draws, 1.0 / 3, qscw_test::three_sigma(1.0 / 3, draws));
    }
    auto errors = sample_depolarizing_errors(5, 1.0, rng);
    ASSERT_EQ(errors.size(), 5u);
    for (size_t q = 0; q < 5; q++) {
        EXPECT_EQ(errors[q].qubit, q);
    }
}

TEST(Depolarizing, RejectsProbabilityOutsideUnitInterval) {
    RngStream rng(0);
    EXPECT_THROW(apply_depolarizing_trajectory(StateVector(2), -0.1, rng), ConfigError);
    EXPECT_THROW(apply_depolarizing_trajectory(StateVector(2), 1.5, rng), ConfigError);
    EXPECT_THROW(sample_depolarizing_errors(2, std::nan(""), rng), ConfigError);
}

// Trajectory averages against the exact channel computed on density matrices.
TEST(Depolarizing, TrajectoriesMatchDensityMatrixChannel) {
    const size_t trajectories = 10000;
    for (size_t n : {1, 2, 3}) {
        for (double p : {0.05, 0.2}) {
            for (int phase : {0, 1}) {
                auto rho = qscw_test::depolarize_all(qscw_test::ghz_density(n, phase), n, p);
                double want_x = qscw_test::x_parity_probability(rho, n, phase);
                double want_z = qscw_test::z_all_equal_probability(rho, n);

                RngStream rng(derive_seed(99, n * 100 + static_cast<uint64_t>(p * 1000) + phase));
                StateVector clean = prepare_ghz(n);
                if (phase) {
                    clean.apply_pauli({Pauli::Z, 0});
                }
                size_t x_hits = 0, z_hits = 0;
                for (size_t t = 0; t < trajectories; t++) {
                    StateVector s = apply_depolarizing_trajectory(clean, p, rng);
                    x_hits += parity(sample_x_basis(s, rng)) == phase;
                    StateVector s2 = apply_depolarizing_trajectory(clean, p, rng);
                    Bitstring z = sample_z_basis(s2, rng);
                    z_hits += z.all_zeros() || z.all_ones();
                }
                EXPECT_NEAR(static_cast<double>(x_hits) / trajectories, want_x,
                            qscw_test::three_sigma(want_x, trajectories))
                    << "n=" << n << " p=" << p;
                EXPECT_NEAR(static_cast<double>(z_hits) / trajectories, want_z,
                            qscw_test::three_sigma(want_z, trajectories))
                    << "n=" << n << " p=" << p;
            }
        }
    }
}

TEST(Rng, SameSeedSameStream) {
    RngStream a(42), b(42);
    for (int i = 0; i < 100; i++) {
        EXPECT_EQ(a.next_u64(), b.next_u64());
        EXPECT_EQ(a.next_bit(), b.next_bit());
        EXPECT_EQ(a.below(17), b.below(17));
    }
}

TEST(Rng, BelowStaysInRange) {
    RngStream rng(1);
    for (int i = 0; i < 1000; i++) {
        EXPECT_LT(rng.below(3), 3u);
        double u = rng.next_unit();
        EXPECT_GE(u, 0.0);
        EXPECT_LT(u, 1.0);
    }
}

TEST(Rng, DerivedSeedsDiffer) {
    EXPECT_NE(derive_seed(1, 0), derive_seed(1, 1));
    EXPECT_NE(derive_seed(1, 0, 1), derive_seed(1, 0, 2));
    EXPECT_NE(derive_seed(1, 0), derive_seed(2, 0));
    EXPECT_EQ(derive_seed(5, 6, 7), derive_seed(5, 6, 7));
}

TEST(Bitstring, ParseAndPrint) {
    Bitstring b = Bitstring::parse("1011");
    EXPECT_EQ(b.size(), 4u);
    EXPECT_EQ(b.value(), 11u);
    EXPECT_TRUE(b[0]);
    EXPECT_FALSE(b[2]);
    EXPECT_EQ(b.str(), "1011");
    EXPECT_TRUE(Bitstring::parse("1111").all_ones());
    EXPECT_TRUE(Bitstring::parse("0000").all_zeros());
    EXPECT_THROW(Bitstring::parse("10a1"), ConfigError);
}
