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

#pragma once

#include <cstdint>
#include <span>
#include <utility>

#include "minorembed/model.hpp"

namespace minorembed {

enum class LinkDirection { qubo_max_to_ising_min, ising_min_to_qubo_max };

// Affine relation between the optimum of a source problem and the optimum of
// the converted problem:
//   qubo_max_to_ising_min:  Y(x) = offset + scale * E(s),  scale = -1/4
//   ising_min_to_qubo_max:  E(s) = offset + scale * Y(x),  scale = -4
// with s_i = 2 x_i - 1 in both directions.
struct AffineLink {
    double scale = 1.0;
    double offset = 0.0;
    LinkDirection direction = LinkDirection::qubo_max_to_ising_min;
};

// h_i = sum_{j in nbr(i)} J_ij - 2 c_i, J unchanged.
std::pair<IsingProblem, AffineLink> qubo_to_ising(const QuboProblem& q);

// c_i = (sum_{j in nbr(i)} J_ij - h_i) / 2, J unchanged.
std::pair<QuboProblem, AffineLink> ising_to_qubo(const IsingProblem& p);

// x = 1 <-> s = +1, x = 0 <-> s = -1.
SpinConfig spins_from_bits(std::span<const std::uint8_t> x);
BitConfig bits_from_spins(std::span<const std::int8_t> s);

// Eigenvalue of the diagonal Hamiltonian on basis state |z>, i.e. E with
// s_i = (-1)^{z_i}. Note the orientation: z = 0 <-> s = +1, the reverse of
// spins_from_bits.
double basis_state_energy(const IsingProblem& p, std::span<const std::uint8_t> z);

}  // namespace minorembed
