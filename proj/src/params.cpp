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

#include "minorembed/params.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace minorembed {

namespace {

double sign_of(double h) { return h >= 0.0 ? 1.0 : -1.0; }

void require_valid(const MinorEmbedding& e, const IsingProblem& p) {
    const auto report = validate(e);
    if (!report.ok()) {
        throw std::domain_error("invalid embedding: " + report.violations.front());
    }
    if (!(e.logical == p.graph())) {
        throw std::domain_error("embedding was built for a different logical graph");
    }
}

// Sum of |J_ij| over logical edges ij carried at physical vertex p of tree i.
double carried_weight(const MinorEmbedding& e, const IsingProblem& p, Vertex i, Vertex physical) {
    double sum = 0.0;
    const auto edges = e.logical.edges();
    for (std::size_t k = 0; k < edges.size(); ++k) {
        const auto& a = e.edge_assignment[k];
        if ((edges[k].u == i && a.from == physical) || (edges[k].v == i && a.to == physical)) {
            sum += std::abs(p.coupling(k));
        }
    }
    return sum;
}

// Assembles the embedded problem from per-tree biases (aligned with
// e.trees[i]) and per-tree chain strengths (aligned with e.tree_edges[i]).
EmbeddedIsing assemble(const MinorEmbedding& e, const IsingProblem& p, const std::vector<std::vector<double>>& bias,
                       const std::vector<std::vector<double>>& strength) {
    EmbeddedIsing out;
    std::vector<std::int64_t> index(e.hardware.num_vertices(), -1);
    std::vector<double> h;
    for (Vertex i = 0; i < e.trees.size(); ++i) {
        for (std::size_t k = 0; k < e.trees[i].size(); ++k) {
            const Vertex physical = e.trees[i][k];
            index[physical] = static_cast<std::int64_t>(out.hardware_ids.size());
            out.hardware_ids.push_back(physical);
            out.owner.push_back(i);
            h.push_back(bias[i][k]);
        }
    }
    auto local = [&](Vertex physical) { return static_cast<Vertex>(index[physical]); };

    std::vector<QuadraticTerm> terms;
    out.chain_edges.resize(e.trees.size());
    for (Vertex i = 0; i < e.trees.size(); ++i) {
        for (std::size_t k = 0; k < e.tree_edges[i].size(); ++k) {
            const Edge& he = e.tree_edges[i][k];
            const Coupler c{Edge(local(he.u), local(he.v)), strength[i][k]};
            out.chain_edges[i].push_back(c);
            terms.push_back({c.edge.u, c.edge.v, c.strength});
            out.offset += c.strength;
        }
    }
    for (std::size_t k = 0; k < e.edge_assignment.size(); ++k) {
        const auto& a = e.edge_assignment[k];
        const Coupler c{Edge(local(a.from), local(a.to)), p.coupling(k)};
        out.original_edges.push_back(c);
        terms.push_back({c.edge.u, c.edge.v, c.strength});
    }
    out.problem = make_ising(out.hardware_ids.size(), std::move(h), terms);
    out.source = e;
    return out;
}

std::vector<std::vector<double>> uniform_strengths(const MinorEmbedding& e, const std::vector<double>& per_vertex) {
    std::vector<std::vector<double>> strength(e.trees.size());
    for (std::size_t i = 0; i < e.trees.size(); ++i) {
        strength[i].assign(e.tree_edges[i].size(), per_vertex[i]);
    }
    return strength;
}

void require_nonnegative_slack(const IsingProblem& p) {
    std::vector<Vertex> bad;
    for (Vertex i = 0; i < p.size(); ++i) {
        if (compute_C(p, i) < 0.0) bad.push_back(i);
    }
    if (!bad.empty()) {
        std::ostringstream msg;
        msg << "coupling slack C_i < 0 at vertices";
        for (Vertex v : bad) msg << ' ' << v;
        msg << "; run preprocess_fix first";
        throw PreconditionError(msg.str(), std::move(bad));
    }
}

}  // namespace

std::string to_string(const ChainStrengthPolicy& policy) {
    std::ostringstream out;
    out.precision(17);
    if (const auto* easy = std::get_if<EasyPolicy>(&policy)) {
        out << "easy";
        if (easy->margin) out << ':' << *easy->margin;
    } else if (const auto* tight = std::get_if<TightPolicy>(&policy)) {
        out << "tight";
        if (tight->margin) out << ':' << *tight->margin;
    } else {
        out << "gap";
        const auto& g = std::get<GapPolicy>(policy).g;
        for (std::size_t i = 0; i < g.size(); ++i) out << (i == 0 ? ':' : ',') << g[i];
    }
    return out.str();
}

double default_margin(double bound) { return 1e-6 * std::max(1.0, bound); }

double compute_C(const IsingProblem& p, Vertex i) {
    double sum = 0.0;
    for (Vertex j : p.graph().neighbors(i)) sum += std::abs(p.coupling(i, j));
    return sum - std::abs(p.h(i));
}

double easy_bound(const IsingProblem& p, Vertex i) {
    double sum = std::abs(p.h(i));
    for (Vertex j : p.graph().neighbors(i)) sum += std::abs(p.coupling(i, j));
    return sum;
}

double tight_bound(const IsingProblem& p, const MinorEmbedding& e, Vertex i) {
    const auto l = static_cast<double>(leaf_count(e, i));
    return (l - 1.0) / l * compute_C(p, i);
}

SpinConfig Preprocessing::lift(std::span<const std::int8_t> residual_spins, std::size_t original_size) const {
    if (residual_spins.size() != residual_vertices.size()) {
        throw std::domain_error("residual configuration size mismatch");
    }
    SpinConfig s(original_size, 0);
    for (const auto& f : fixed) s.at(f.vertex) = f.spin;
    for (std::size_t k = 0; k < residual_vertices.size(); ++k) s.at(residual_vertices[k]) = residual_spins[k];
    return s;
}

Preprocessing preprocess_fix(const IsingProblem& p) {
    const std::size_t n = p.size();
    std::vector<double> h(p.h().begin(), p.h().end());
    std::vector<bool> alive(n, true);
    Preprocessing out;

    auto slack = [&](Vertex i) {
        double sum = 0.0;
        for (Vertex j : p.graph().neighbors(i)) {
            if (alive[j]) sum += std::abs(p.coupling(i, j));
        }
        return sum - std::abs(h[i]);
    };

    for (bool changed = true; changed;) {
        changed = false;
        for (Vertex i = 0; i < n; ++i) {
            if (!alive[i] || slack(i) >= 0.0) continue;
            // C_i < 0 implies h_i != 0.
            const std::int8_t spin = h[i] > 0.0 ? -1 : 1;
            out.fixed.push_back({i, spin});
            out.constant += h[i] * spin;
            alive[i] = false;
            for (Vertex j : p.graph().neighbors(i)) {
                if (alive[j]) h[j] += p.coupling(i, j) * spin;
            }
            changed = true;
            break;
        }
    }

    const auto edges = p.graph().edges();
    std::vector<std::int64_t> renumber(n, -1);
    std::vector<double> residual_h;
    for (Vertex i = 0; i < n; ++i) {
        if (!alive[i]) continue;
        renumber[i] = static_cast<std::int64_t>(out.residual_vertices.size());
        out.residual_vertices.push_back(i);
        residual_h.push_back(h[i]);
    }
    std::vector<QuadraticTerm> terms;
    for (std::size_t k = 0; k < edges.size(); ++k) {
        if (alive[edges[k].u] && alive[edges[k].v]) {
            terms.push_back({static_cast<Vertex>(renumber[edges[k].u]), static_cast<Vertex>(renumber[edges[k].v]),
                             p.coupling(k)});
        }
    }
    out.residual = make_ising(out.residual_vertices.size(), std::move(residual_h), terms);
    return out;
}

EmbeddedIsing set_params_easy(const MinorEmbedding& e, const IsingProblem& p, std::optional<double> margin) {
    require_valid(e, p);
    if (margin && !(*margin > 0.0)) throw std::domain_error("margin must be positive");
    std::vector<std::vector<double>> bias(p.size());
    std::vector<double> F(p.size());
    for (Vertex i = 0; i < p.size(); ++i) {
        const double count = static_cast<double>(e.trees[i].size());
        bias[i].assign(e.trees[i].size(), p.h(i) / count);
        const double bound = easy_bound(p, i);
        F[i] = -bound - margin.value_or(default_margin(bound));
    }
    return assemble(e, p, bias, uniform_strengths(e, F));
}

EmbeddedIsing set_params_tight(const MinorEmbedding& e, const IsingProblem& p, const ChainStrengthPolicy& policy) {
    require_valid(e, p);
    const auto* tight = std::get_if<TightPolicy>(&policy);
    const auto* gap = std::get_if<GapPolicy>(&policy);
    if (!tight && !gap) throw std::domain_error("set_params_tight needs a tight or gap policy");
    if (tight && tight->margin && !(*tight->margin > 0.0)) throw std::domain_error("margin must be positive");
    if (gap) {
        if (gap->g.size() != p.size()) throw std::domain_error("gap policy needs one target per logical vertex");
        for (double g : gap->g) {
            if (!(g > 0.0)) throw std::domain_error("gap targets must be positive");
        }
    }
    require_nonnegative_slack(p);

    std::vector<std::vector<double>> bias(p.size());
    std::vector<double> F(p.size());
    for (Vertex i = 0; i < p.size(); ++i) {
        const double C = compute_C(p, i);
        const auto tree_leaves = leaves(e, i);
        const double l = static_cast<double>(tree_leaves.size());
        const double sign = sign_of(p.h(i));
        for (Vertex physical : e.trees[i]) {
            double value = carried_weight(e, p, i, physical);
            if (std::binary_search(tree_leaves.begin(), tree_leaves.end(), physical)) value -= C / l;
            bias[i].push_back(sign * value);
        }
        const double bound = (l - 1.0) / l * C;
        F[i] = gap ? -bound - gap->g[i] / 2.0 : -bound - tight->margin.value_or(default_margin(C));
    }
    auto out = assemble(e, p, bias, uniform_strengths(e, F));
    if (gap) out.gap_targets = gap->g;
    return out;
}

EmbeddedIsing set_params(const MinorEmbedding& e, const IsingProblem& p, const ChainStrengthPolicy& policy) {
    if (const auto* easy = std::get_if<EasyPolicy>(&policy)) return set_params_easy(e, p, easy->margin);
    return set_params_tight(e, p, policy);
}

EmbeddedIsing set_params_custom_split(const MinorEmbedding& e, const IsingProblem& p,
                                      const std::vector<std::vector<double>>& split,
                                      const std::vector<std::vector<double>>& chain_F) {
    require_valid(e, p);
    if (split.size() != p.size() || chain_F.size() != p.size()) {
        throw std::domain_error("custom split needs one entry per logical vertex");
    }
    std::vector<std::vector<double>> bias(p.size());
    for (Vertex i = 0; i < p.size(); ++i) {
        if (split[i].size() != e.trees[i].size()) {
            throw std::domain_error("split for logical vertex " + std::to_string(i) + " does not match its tree");
        }
        if (chain_F[i].size() != e.tree_edges[i].size()) {
            throw std::domain_error("chain strengths for logical vertex " + std::to_string(i) +
                                    " do not match its tree edges");
        }
        double total = 0.0;
        for (double part : split[i]) total += part;
        const double C = compute_C(p, i);
        if (std::abs(total - C) > 1e-12) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "split for logical vertex " << i << " sums to " << total << ", expected C_i = " << C;
            throw std::domain_error(msg.str());
        }
        for (double F : chain_F[i]) {
            if (!(F < 0.0)) throw std::domain_error("chain strengths must be negative");
        }
        const double sign = sign_of(p.h(i));
        for (std::size_t k = 0; k < e.trees[i].size(); ++k) {
            bias[i].push_back(sign * (carried_weight(e, p, i, e.trees[i][k]) - split[i][k]));
        }
    }
    return assemble(e, p, bias, chain_F);
}

}  // namespace minorembed
