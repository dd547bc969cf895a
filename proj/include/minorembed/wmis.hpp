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

#include <variant>
#include <vector>

#include "minorembed/embedding.hpp"
#include "minorembed/model.hpp"
#include "minorembed/params.hpp"

namespace minorembed {

// Vertex-weighted graph; weights must be strictly positive.
class WmisInstance {
public:
    WmisInstance(Graph graph, std::vector<double> weights);

    const Graph& graph() const { return graph_; }
    std::span<const double> weights() const { return weights_; }

private:
    Graph graph_;
    std::vector<double> weights_;
};

// J_ij = min{c_i, c_j} + delta.
struct StrictMinPlus {
    double delta = 0.0;
};

// J_ij = J on every edge.
struct UniformPenalty {
    double J = 0.0;
};

using PenaltyRule = std::variant<StrictMinPlus, UniformPenalty>;

struct WmisQubo {
    QuboProblem qubo;
    // J_ij > min{c_i, c_j} everywhere: every maximizer is independent.
    bool strict_condition = false;
    // J_ij >= min{c_i, c_j} everywhere: max Y equals the WMIS weight.
    bool value_condition = false;
};

WmisQubo wmis_to_qubo(const WmisInstance& w, const PenaltyRule& rule);

struct IndependentSetCheck {
    std::vector<Vertex> vertices;
    bool independent = false;
    double weight = 0.0;
};

// Support of x, checked for independence in q's graph; weight is sum of c_i
// over the support.
IndependentSetCheck extract_independent_set(const QuboProblem& q, std::span<const std::uint8_t> x);

struct EmbeddedMis {
    // Degree-0 (and other dominated) vertices forced before embedding.
    Preprocessing preprocessing;
    MinorEmbedding embedding;
    EmbeddedIsing embedded;
    double J = 0.0;
    double F = 0.0;
};

// Unweighted MIS pipeline: uniform penalty J = 1 + eps, Ising conversion,
// forced vertices removed, then the tight rule with F = -(1 + eps) on every
// chain. e must be a chain (subgraph or topological-minor) embedding of g.
EmbeddedMis build_embedded_mis(const Graph& g, const MinorEmbedding& e, double eps);

}  // namespace minorembed
