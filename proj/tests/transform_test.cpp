// Copyright 2026 The minorembed Authors
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

#include <random>

#include <gtest/gtest.h>

#include "minorembed/transform.hpp"
#include "oracles.hpp"
#include "random_instances.hpp"

namespace minorembed {
namespace {

BitConfig bits(std::uint64_t mask, std::size_t n) {
    BitConfig x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = (mask >> i) & 1U;
    return x;
}

TEST(QuboToIsing, SingleVertex) {
    const auto [p, link] = qubo_to_ising(QuboProblem(Graph(1, {}), {2.0}, {}));
    EXPECT_EQ(p.h(0), -4.0);
    EXPECT_EQ(link.offset, 1.0);
    EXPECT_EQ(link.scale, -0.25);
    EXPECT_EQ(link.direction, LinkDirection::qubo_max_to_ising_min);
    EXPECT_EQ(link.offset + link.scale * energy(p, SpinConfig{1}), 2.0);
}

TEST(QuboToIsing, SymmetricPair) {
    const auto [p, link] = qubo_to_ising(QuboProblem(Graph(2, {{0, 1}}), {1.0, 1.0}, {2.0}));
    EXPECT_EQ(p.h(0), 0.0);
    EXPECT_EQ(p.h(1), 0.0);
    EXPECT_EQ(p.coupling(0, 1), 2.0);
}

TEST(QuboToIsing, StarIdentityOverAllAssignments) {
    const auto q = make_qubo(4, {1, 0, 0, 0}, {{0, 1, 1.0}, {0, 2, 1.0}, {0, 3, 1.0}});
    const auto [p, link] = qubo_to_ising(q);
    EXPECT_EQ(p.h(0), 1.0);
    for (Vertex leaf = 1; leaf < 4; ++leaf) EXPECT_EQ(p.h(leaf), 1.0);
    for (std::uint64_t m = 0; m < 16; ++m) {
        EXPECT_EQ(oracle::qubo_value(q, m), link.offset - oracle::ising_energy(p, m) / 4);
    }
}

TEST(QuboToIsing, IdentityHoldsOnRandomInstances) {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 1 + trial % 10;
        const auto q = fixtures::random_qubo(rng, n);
        const auto [p, link] = qubo_to_ising(q);
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
            const auto x = bits(m, n);
            ASSERT_EQ(objective(q, x), link.offset + link.scale * energy(p, spins_from_bits(x)));
        }
    }
}

TEST(IsingToQubo, ZeroBiasGivesHalfCouplingSums) {
    const auto p = make_ising(3, {}, {{0, 1, 2.0}, {1, 2, -1.0}});
    const auto [q, link] = ising_to_qubo(p);
    EXPECT_EQ(q.c(0), 1.0);
    EXPECT_EQ(q.c(1), 0.5);
    EXPECT_EQ(q.c(2), -0.5);
    EXPECT_EQ(link.direction, LinkDirection::ising_min_to_qubo_max);
    EXPECT_EQ(link.scale, -4.0);
}

TEST(IsingToQubo, DirectSubstitution) {
    const auto [q, link] = ising_to_qubo(IsingProblem(Graph(2, {{0, 1}}), {1.0, -1.0}, {2.0}));
    EXPECT_EQ(q.c(0), 0.5);
    EXPECT_EQ(q.c(1), 1.5);
    for (std::uint64_t m = 0; m < 4; ++m) {
        const auto x = bits(m, 2);
        const IsingProblem p(Graph(2, {{0, 1}}), {1.0, -1.0}, {2.0});
        EXPECT_EQ(energy(p, spins_from_bits(x)), link.offset + link.scale * objective(q, x));
    }
}

TEST(IsingToQubo, RoundTripsAreBitExact) {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 50; ++trial) {
        const auto q = fixtures::random_qubo(rng, 7);
        EXPECT_EQ(ising_to_qubo(qubo_to_ising(q).first).first, q);
        const auto p = fixtures::random_ising(rng, 7);
        EXPECT_EQ(qubo_to_ising(ising_to_qubo(p).first).first, p);
    }
}

TEST(SpinBits, ConventionAndRoundTrip) {
    EXPECT_EQ(spins_from_bits(BitConfig{0, 1}), (SpinConfig{-1, 1}));
    EXPECT_EQ(spins_from_bits(BitConfig{1, 1, 1}), (SpinConfig{1, 1, 1}));
    for (std::uint64_t m = 0; m < 16; ++m) {
        const auto x = bits(m, 4);
        EXPECT_EQ(bits_from_spins(spins_from_bits(x)), x);
        const auto s = oracle::spins(m, 4);
        EXPECT_EQ(spins_from_bits(bits_from_spins(s)), s);
    }
}

TEST(BasisStateEnergy, OrientationIsReversed) {
    const auto p = make_ising(3, {1.0, -0.5, 0.25}, {{0, 1, 2.0}, {1, 2, -1.0}});
    EXPECT_EQ(basis_state_energy(p, BitConfig{0, 0, 0}), 1.0 - 0.5 + 0.25 + 2.0 - 1.0);
    EXPECT_EQ(basis_state_energy(IsingProblem(Graph(1, {}), {1.0}, {}), BitConfig{1}), -1.0);
}

TEST(BasisStateEnergy, MatchesEnergyOnAllStates) {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        const auto p = fixtures::random_ising(rng, 4);
        for (std::uint64_t m = 0; m < 16; ++m) {
            const auto z = bits(m, 4);
            SpinConfig s(4);
            for (std::size_t i = 0; i < 4; ++i) s[i] = z[i] ? -1 : 1;
            EXPECT_EQ(basis_state_energy(p, z), energy(p, s));
        }
    }
}

}  // namespace
}  // namespace minorembed
