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

#include "minorembed/transform.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace minorembed {

namespace {

// sum_{j in nbr(i)} J_ij for every vertex.
std::vector<double> incident_sums(const Graph& g, std::span<const double> values) {
    std::vector<double> sums(g.num_vertices(), 0.0);
    const auto edges = g.edges();
    for (std::size_t k = 0; k < edges.size(); ++k) {
        sums[edges[k].u] += values[k];
        sums[edges[k].v] += values[k];
    }
    return sums;
}

double total(std::span<const double> values) {
    double sum = 0.0;
    for (double v : values) sum += v;
    return sum;
}

}  // namespace

std::pair<IsingProblem, AffineLink> qubo_to_ising(const QuboProblem& q) {
    const auto sums = incident_sums(q.graph(), q.penalties());
    std::vector<double> h(q.size());
    for (std::size_t i = 0; i < h.size(); ++i) {
        h[i] = sums[i] - 2.0 * q.c(static_cast<Vertex>(i));
    }
    std::vector<double> J(q.penalties().begin(), q.penalties().end());
    AffineLink link{-0.25, 0.5 * total(q.c()) - 0.25 * total(q.penalties()), LinkDirection::qubo_max_to_ising_min};
    return {IsingProblem(q.graph(), std::move(h), std::move(J)), link};
}

std::pair<QuboProblem, AffineLink> ising_to_qubo(const IsingProblem& p) {
    const auto sums = incident_sums(p.graph(), p.couplings());
    std::vector<double> c(p.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] = 0.5 * (sums[i] - p.h(static_cast<Vertex>(i)));
    }
    std::vector<double> J(p.couplings().begin(), p.couplings().end());
    // At x = 0 (all spins down) Y = 0 and E = sum J - sum h.
    AffineLink link{-4.0, total(p.couplings()) - total(p.h()), LinkDirection::ising_min_to_qubo_max};
    return {QuboProblem(p.graph(), std::move(c), std::move(J)), link};
}

SpinConfig spins_from_bits(std::span<const std::uint8_t> x) {
    SpinConfig s(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] > 1) throw std::domain_error("bit at vertex " + std::to_string(i) + " is not 0/1");
        s[i] = x[i] ? 1 : -1;
    }
    return s;
}

BitConfig bits_from_spins(std::span<const std::int8_t> s) {
    BitConfig x(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] != 1 && s[i] != -1) throw std::domain_error("spin at vertex " + std::to_string(i) + " is not +-1");
        x[i] = s[i] == 1 ? 1 : 0;
    }
    return x;
}

double basis_state_energy(const IsingProblem& p, std::span<const std::uint8_t> z) {
    if (z.size() != p.size()) {
        throw std::domain_error("basis state has " + std::to_string(z.size()) + " entries, problem has " +
                                std::to_string(p.size()) + " vertices");
    }
    auto sign = [&](std::size_t i) {
        if (z[i] > 1) throw std::domain_error("basis bit at vertex " + std::to_string(i) + " is not 0/1");
        return z[i] ? -1.0 : 1.0;
    };
    double e = 0.0;
    for (std::size_t i = 0; i < z.size(); ++i) {
        e += p.h(static_cast<Vertex>(i)) * sign(i);
    }
    const auto edges = p.graph().edges();
    for (std::size_t k = 0; k < edges.size(); ++k) {
        e += p.coupling(k) * sign(edges[k].u) * sign(edges[k].v);
    }
    return e;
}

}  // namespace minorembed
