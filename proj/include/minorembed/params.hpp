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
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "minorembed/embedding.hpp"
#include "minorembed/model.hpp"

namespace minorembed {

// A required condition on the input problem does not hold (for example a
// vertex with negative coupling slack handed to the tight parameter rule).
class PreconditionError : public std::domain_error {
public:
    PreconditionError(const std::string& message, std::vector<Vertex> vertices)
        : std::domain_error(message), vertices_(std::move(vertices)) {}

    const std::vector<Vertex>& vertices() const { return vertices_; }

private:
    std::vector<Vertex> vertices_;
};

// Coupler in the embedded problem, endpoints in embedded-vertex numbering.
struct Coupler {
    Edge edge;
    double strength = 0.0;

    friend bool operator==(const Coupler&, const Coupler&) = default;
};

// Ising problem on the used part of the hardware graph. Embedded vertex k is
// hardware vertex hardware_ids[k] and belongs to logical vertex owner[k];
// vertices are grouped by owner, each group in ascending hardware order.
struct EmbeddedIsing {
    IsingProblem problem;
    std::vector<Vertex> hardware_ids;
    std::vector<Vertex> owner;
    // Ferromagnetic tree couplers, per logical vertex.
    std::vector<std::vector<Coupler>> chain_edges;
    // Couplers realizing logical edges, indexed like the logical edges.
    std::vector<Coupler> original_edges;
    // Sum of all chain strengths: min E_emb = min E + offset when chains align.
    double offset = 0.0;
    // Per-logical-vertex gap targets when built with GapPolicy, else empty.
    std::vector<double> gap_targets;
    std::optional<MinorEmbedding> source;

    std::size_t logical_size() const { return chain_edges.size(); }
};

// Easy bound F < -(|h_i| + sum_j |J_ij|), any bias split.
struct EasyPolicy {
    std::optional<double> margin;
};

// Tight bound F < -((l_i - 1) / l_i) C_i with leaf-aware bias split.
struct TightPolicy {
    std::optional<double> margin;
};

// F = -((l_i - 1) / l_i) C_i - g_i / 2.
struct GapPolicy {
    std::vector<double> g;
};

using ChainStrengthPolicy = std::variant<EasyPolicy, TightPolicy, GapPolicy>;

std::string to_string(const ChainStrengthPolicy& policy);

// Margin used when a policy leaves it unset: 1e-6 * max(1, bound).
double default_margin(double bound);

// C_i = sum_{j in nbr(i)} |J_ij| - |h_i|.
double compute_C(const IsingProblem& p, Vertex i);

// |h_i| + sum_j |J_ij|.
double easy_bound(const IsingProblem& p, Vertex i);

// ((l_i - 1) / l_i) * C_i for the tree of i in e.
double tight_bound(const IsingProblem& p, const MinorEmbedding& e, Vertex i);

struct FixedSpin {
    Vertex vertex = 0;
    std::int8_t spin = 1;
};

// Result of forcing every vertex whose bias dominates its couplings.
// E(s) = constant + E_residual(s restricted to residual_vertices) for every s
// that agrees with the fixed spins.
struct Preprocessing {
    std::vector<FixedSpin> fixed;
    IsingProblem residual;
    std::vector<Vertex> residual_vertices;
    double constant = 0.0;

    // Full configuration from a residual configuration plus the fixed spins.
    SpinConfig lift(std::span<const std::int8_t> residual_spins, std::size_t original_size) const;
};

// Fixes s_i = -sign(h_i) while some vertex has C_i < 0, folding J_ij s_i into
// the neighbours' biases, until every remaining vertex has C_i >= 0.
Preprocessing preprocess_fix(const IsingProblem& p);

EmbeddedIsing set_params_easy(const MinorEmbedding& e, const IsingProblem& p, std::optional<double> margin = {});

// Accepts TightPolicy or GapPolicy. Throws PreconditionError when some C_i < 0.
EmbeddedIsing set_params_tight(const MinorEmbedding& e, const IsingProblem& p, const ChainStrengthPolicy& policy);

EmbeddedIsing set_params(const MinorEmbedding& e, const IsingProblem& p, const ChainStrengthPolicy& policy);

// Generalized split: h'_{i_k} = sign(h_i) (sum_{Onbr(i_k)} |J_ij| - split[i][k])
// where split[i] is aligned with e.trees[i] and sums to C_i. chain_F[i] is
// aligned with e.tree_edges[i] and installed verbatim; every entry must be
// negative.
EmbeddedIsing set_params_custom_split(const MinorEmbedding& e, const IsingProblem& p,
                                      const std::vector<std::vector<double>>& split,
                                      const std::vector<std::vector<double>>& chain_F);

}  // namespace minorembed
