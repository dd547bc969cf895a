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

#include "minorembed/model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace minorembed {

std::string to_string(const Edge& e) {
    return std::to_string(e.u) + "-" + std::to_string(e.v);
}

Graph::Graph(std::size_t num_vertices, std::vector<Edge> edges)
    : edges_(std::move(edges)), adjacency_(num_vertices) {
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t k = 0; k < edges_.size(); ++k) {
        const Edge& e = edges_[k];
        if (e.u == e.v) {
            throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
        }
        if (e.v >= num_vertices) {
            throw std::invalid_argument("edge " + to_string(e) + " references an undeclared vertex");
        }
        if (k > 0 && edges_[k - 1] == e) {
            throw std::invalid_argument("duplicate edge " + to_string(e));
        }
        adjacency_[e.u].push_back(e.v);
        adjacency_[e.v].push_back(e.u);
    }
    for (auto& nbrs : adjacency_) {
        std::sort(nbrs.begin(), nbrs.end());
    }
}

std::size_t Graph::max_degree() const {
    std::size_t best = 0;
    for (const auto& nbrs : adjacency_) {
        best = std::max(best, nbrs.size());
    }
    return best;
}

bool Graph::has_edge(Vertex a, Vertex b) const {
    return edge_index(a, b).has_value();
}

std::optional<std::size_t> Graph::edge_index(Vertex a, Vertex b) const {
    if (a == b) {
        return std::nullopt;
    }
    const Edge key(a, b);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || *it != key) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - edges_.begin());
}

namespace {

void check_edge_values(const Graph& graph, const std::vector<double>& values, const char* what) {
    if (values.size() != graph.num_edges()) {
        throw std::invalid_argument(std::string(what) + " count does not match edge count");
    }
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (!std::isfinite(values[k])) {
            throw std::invalid_argument(std::string(what) + " on edge " + to_string(graph.edge(k)) + " is not finite");
        }
        if (values[k] == 0.0) {
            throw std::invalid_argument(std::string(what) + " on edge " + to_string(graph.edge(k)) +
                                        " is zero; omit the edge instead");
        }
    }
}

void check_vertex_values(const Graph& graph, const std::vector<double>& values, const char* what) {
    if (values.size() != graph.num_vertices()) {
        throw std::invalid_argument(std::string(what) + " count does not match vertex count");
    }
    for (double value : values) {
        if (!std::isfinite(value)) {
            throw std::invalid_argument(std::string(what) + " value is not finite");
        }
    }
}

}  // namespace

IsingProblem::IsingProblem(Graph graph, std::vector<double> h, std::vector<double> couplings)
    : graph_(std::move(graph)), h_(std::move(h)), couplings_(std::move(couplings)) {
    if (h_.empty() && graph_.num_vertices() > 0) {
        h_.assign(graph_.num_vertices(), 0.0);
    }
    check_vertex_values(graph_, h_, "bias");
    check_edge_values(graph_, couplings_, "coupling");
}

double IsingProblem::coupling(Vertex a, Vertex b) const {
    auto k = graph_.edge_index(a, b);
    return k ? couplings_[*k] : 0.0;
}

QuboProblem::QuboProblem(Graph graph, std::vector<double> c, std::vector<double> penalties)
    : graph_(std::move(graph)), c_(std::move(c)), penalties_(std::move(penalties)) {
    if (c_.empty() && graph_.num_vertices() > 0) {
        c_.assign(graph_.num_vertices(), 0.0);
    }
    check_vertex_values(graph_, c_, "linear weight");
    check_edge_values(graph_, penalties_, "penalty");
}

namespace {

struct TermSplit {
    Graph graph;
    std::vector<double> values;
};

TermSplit split_terms(std::size_t n, const std::vector<QuadraticTerm>& terms) {
    std::vector<Edge> edges;
    edges.reserve(terms.size());
    for (const auto& t : terms) {
        edges.emplace_back(t.u, t.v);
    }
    Graph graph(n, edges);
    std::vector<double> values(terms.size());
    for (const auto& t : terms) {
        values[*graph.edge_index(t.u, t.v)] = t.value;
    }
    return {std::move(graph), std::move(values)};
}

}  // namespace

IsingProblem make_ising(std::size_t n, std::vector<double> h, const std::vector<QuadraticTerm>& couplings) {
    auto split = split_terms(n, couplings);
    return IsingProblem(std::move(split.graph), std::move(h), std::move(split.values));
}

QuboProblem make_qubo(std::size_t n, std::vector<double> c, const std::vector<QuadraticTerm>& penalties) {
    auto split = split_terms(n, penalties);
    return QuboProblem(std::move(split.graph), std::move(c), std::move(split.values));
}

double energy(const IsingProblem& p, std::span<const std::int8_t> s) {
    if (s.size() != p.size()) {
        throw std::domain_error("spin configuration has " + std::to_string(s.size()) + " entries, problem has " +
                                std::to_string(p.size()) + " vertices");
    }
    double total = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] != 1 && s[i] != -1) {
            throw std::domain_error("spin at vertex " + std::to_string(i) + " is not +-1");
        }
        total += p.h(static_cast<Vertex>(i)) * s[i];
    }
    const auto edges = p.graph().edges();
    for (std::size_t k = 0; k < edges.size(); ++k) {
        total += p.coupling(k) * s[edges[k].u] * s[edges[k].v];
    }
    return total;
}

double objective(const QuboProblem& q, std::span<const std::uint8_t> x) {
    if (x.size() != q.size()) {
        throw std::domain_error("bit configuration has " + std::to_string(x.size()) + " entries, problem has " +
                                std::to_string(q.size()) + " vertices");
    }
    double total = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] > 1) {
            throw std::domain_error("bit at vertex " + std::to_string(i) + " is not 0/1");
        }
        if (x[i]) {
            total += q.c(static_cast<Vertex>(i));
        }
    }
    const auto edges = q.graph().edges();
    for (std::size_t k = 0; k < edges.size(); ++k) {
        if (x[edges[k].u] && x[edges[k].v]) {
            total -= q.penalty(k);
        }
    }
    return total;
}

std::string to_string(HardwareKind kind) {
    switch (kind) {
        case HardwareKind::square_lattice:
            return "square";
        case HardwareKind::extended_grid:
            return "extended";
        case HardwareKind::custom:
            return "custom";
    }
    return "custom";
}

HardwareGraph make_hardware(HardwareKind kind, long rows, long cols) {
    if (rows < 1 || cols < 1) {
        throw std::domain_error("hardware dimensions must be positive, got " + std::to_string(rows) + "x" +
                                std::to_string(cols));
    }
    if (kind == HardwareKind::custom) {
        throw std::domain_error("custom hardware has no lattice generator");
    }
    const auto R = static_cast<std::size_t>(rows);
    const auto C = static_cast<std::size_t>(cols);
    auto id = [C](std::size_t r, std::size_t c) { return static_cast<Vertex>(r * C + c); };

    std::vector<Edge> edges;
    for (std::size_t r = 0; r < R; ++r) {
        for (std::size_t c = 0; c < C; ++c) {
            if (c + 1 < C) edges.emplace_back(id(r, c), id(r, c + 1));
            if (r + 1 < R) edges.emplace_back(id(r, c), id(r + 1, c));
            if (kind == HardwareKind::extended_grid && r + 1 < R) {
                if (c + 1 < C) edges.emplace_back(id(r, c), id(r + 1, c + 1));
                if (c > 0) edges.emplace_back(id(r, c), id(r + 1, c - 1));
            }
        }
    }
    HardwareGraph hw{Graph(R * C, std::move(edges)), kind, R, C, 0};
    hw.max_degree = hw.base.max_degree();
    return hw;
}

HardwareGraph make_custom_hardware(Graph graph) {
    HardwareGraph hw{std::move(graph), HardwareKind::custom, 0, 0, 0};
    hw.max_degree = hw.base.max_degree();
    return hw;
}

}  // namespace minorembed
