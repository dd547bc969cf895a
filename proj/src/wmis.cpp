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

#include "minorembed/wmis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "minorembed/transform.hpp"

namespace minorembed {

WmisInstance::WmisInstance(Graph graph, std::vector<double> weights)
    : graph_(std::move(graph)), weights_(std::move(weights)) {
    if (weights_.size() != graph_.num_vertices()) {
        throw std::domain_error("WMIS instance needs one weight per vertex");
    }
    for (std::size_t i = 0; i < weights_.size(); ++i) {
        if (!(weights_[i] > 0.0) || !std::isfinite(weights_[i])) {
            throw std::domain_error("weight of vertex " + std::to_string(i) + " must be positive");
        }
    }
}

WmisQubo wmis_to_qubo(const WmisInstance& w, const PenaltyRule& rule) {
    const auto c = w.weights();
    const auto edges = w.graph().edges();
    std::vector<double> J(edges.size());
    WmisQubo out;
    out.strict_condition = true;
    out.value_condition = true;
    for (std::size_t k = 0; k < edges.size(); ++k) {
        const double floor = std::min(c[edges[k].u], c[edges[k].v]);
        if (const auto* strict = std::get_if<StrictMinPlus>(&rule)) {
            if (!(strict->delta > 0.0)) throw std::domain_error("strict penalty rule needs delta > 0");
            J[k] = floor + strict->delta;
        } else {
            J[k] = std::get<UniformPenalty>(rule).J;
        }
        out.strict_condition = out.strict_condition && J[k] > floor;
        out.value_condition = out.value_condition && J[k] >= floor;
    }
    out.qubo = QuboProblem(w.graph(), std::vector<double>(c.begin(), c.end()), std::move(J));
    return out;
}

IndependentSetCheck extract_independent_set(const QuboProblem& q, std::span<const std::uint8_t> x) {
    if (x.size() != q.size()) throw std::domain_error("bit configuration size mismatch");
    IndependentSetCheck out;
    for (Vertex i = 0; i < x.size(); ++i) {
        if (x[i]) {
            out.vertices.push_back(i);
            out.weight += q.c(i);
        }
    }
    out.independent = true;
    for (const Edge& e : q.graph().edges()) {
        if (x[e.u] && x[e.v]) {
            out.independent = false;
            break;
        }
    }
    return out;
}

EmbeddedMis build_embedded_mis(const Graph& g, const MinorEmbedding& e, double eps) {
    if (!(eps > 0.0)) throw std::domain_error("epsilon must be positive");
    if (!(e.logical == g)) throw std::domain_error("embedding was built for a different graph");
    if (classify(e) == EmbeddingClass::general_minor) {
        throw std::domain_error("embedded MIS parameters are defined for chain embeddings only");
    }
    const double J = 1.0 + eps;
    const WmisInstance instance(g, std::vector<double>(g.num_vertices(), 1.0));
    const auto qubo = wmis_to_qubo(instance, UniformPenalty{J});
    const auto ising = qubo_to_ising(qubo.qubo).first;

    EmbeddedMis out;
    out.J = J;
    out.F = -J;
    out.preprocessing = preprocess_fix(ising);
    out.embedding = restrict_embedding(e, out.preprocessing.residual_vertices);
    const auto& residual = out.preprocessing.residual;

    // Chain strength -(1 + eps) must beat the tight bound on every tree.
    std::vector<std::vector<double>> split(residual.size());
    std::vector<std::vector<double>> chain_F(residual.size());
    for (Vertex i = 0; i < residual.size(); ++i) {
        const double C = compute_C(residual, i);
        const auto tree_leaves = leaves(out.embedding, i);
        const double l = static_cast<double>(tree_leaves.size());
        if (!(out.F < -(l - 1.0) / l * C)) {
            throw PreconditionError("F = -(1 + eps) does not satisfy the chain bound at logical vertex " +
                                        std::to_string(out.preprocessing.residual_vertices[i]),
                                    {out.preprocessing.residual_vertices[i]});
        }
        for (Vertex p : out.embedding.trees[i]) {
            split[i].push_back(std::binary_search(tree_leaves.begin(), tree_leaves.end(), p) ? C / l : 0.0);
        }
        chain_F[i].assign(out.embedding.tree_edges[i].size(), out.F);
    }
    out.embedded = set_params_custom_split(out.embedding, residual, split, chain_F);
    return out;
}

}  // namespace minorembed
