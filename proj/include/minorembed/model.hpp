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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace minorembed {

using Vertex = std::uint32_t;

// Undirected edge, always stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    bool contains(Vertex x) const { return x == u || x == v; }
    Vertex other(Vertex x) const { return x == u ? v : u; }

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

std::string to_string(const Edge& e);

// Simple undirected graph on dense vertex ids 0..n-1. Edges are kept sorted,
// so edge indices are stable and deterministic.
class Graph {
public:
    Graph() = default;

    // Throws std::invalid_argument on self-loops, duplicates or out-of-range
    // endpoints.
    Graph(std::size_t num_vertices, std::vector<Edge> edges);

    std::size_t num_vertices() const { return adjacency_.size(); }
    std::size_t num_edges() const { return edges_.size(); }

    std::span<const Edge> edges() const { return edges_; }
    const Edge& edge(std::size_t index) const { return edges_.at(index); }

    // Sorted neighbor list of v.
    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
    std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
    std::size_t max_degree() const;

    bool has_edge(Vertex a, Vertex b) const;
    std::optional<std::size_t> edge_index(Vertex a, Vertex b) const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.edges_ == b.edges_ && a.adjacency_.size() == b.adjacency_.size(); }

private:
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adjacency_;
};

// Spin assignment s_i in {-1,+1}, indexed by vertex.
using SpinConfig = std::vector<std::int8_t>;
// Bit assignment x_i in {0,1}, indexed by vertex.
using BitConfig = std::vector<std::uint8_t>;

// E(s) = sum_i h_i s_i + sum_ij J_ij s_i s_j.
// couplings[k] belongs to graph.edge(k); zero couplings are rejected with
// std::invalid_argument (omit the edge instead).
class IsingProblem {
public:
    IsingProblem() = default;
    IsingProblem(Graph graph, std::vector<double> h, std::vector<double> couplings);

    const Graph& graph() const { return graph_; }
    std::size_t size() const { return graph_.num_vertices(); }

    std::span<const double> h() const { return h_; }
    double h(Vertex v) const { return h_.at(v); }

    std::span<const double> couplings() const { return couplings_; }
    double coupling(std::size_t edge_index) const { return couplings_.at(edge_index); }
    // J between a and b, 0 when the edge is absent.
    double coupling(Vertex a, Vertex b) const;

    friend bool operator==(const IsingProblem&, const IsingProblem&) = default;

private:
    Graph graph_;
    std::vector<double> h_;
    std::vector<double> couplings_;
};

// Y(x) = sum_i c_i x_i - sum_ij J_ij x_i x_j, to be maximized.
class QuboProblem {
public:
    QuboProblem() = default;
    QuboProblem(Graph graph, std::vector<double> c, std::vector<double> penalties);

    const Graph& graph() const { return graph_; }
    std::size_t size() const { return graph_.num_vertices(); }

    std::span<const double> c() const { return c_; }
    double c(Vertex v) const { return c_.at(v); }

    std::span<const double> penalties() const { return penalties_; }
    double penalty(std::size_t edge_index) const { return penalties_.at(edge_index); }

    friend bool operator==(const QuboProblem&, const QuboProblem&) = default;

private:
    Graph graph_;
    std::vector<double> c_;
    std::vector<double> penalties_;
};

struct QuadraticTerm {
    Vertex u = 0;
    Vertex v = 0;
    double value = 0.0;
};

// Builders taking quadratic terms in any order. An empty linear vector means
// all zeros.
IsingProblem make_ising(std::size_t n, std::vector<double> h, const std::vector<QuadraticTerm>& couplings);
QuboProblem make_qubo(std::size_t n, std::vector<double> c, const std::vector<QuadraticTerm>& penalties);

// Throws std::domain_error unless s assigns +-1 to every vertex of p.
double energy(const IsingProblem& p, std::span<const std::int8_t> s);

// Throws std::domain_error unless x assigns 0/1 to every vertex of q.
double objective(const QuboProblem& q, std::span<const std::uint8_t> x);

enum class HardwareKind { square_lattice, extended_grid, custom };

std::string to_string(HardwareKind kind);

struct HardwareGraph {
    Graph base;
    HardwareKind kind = HardwareKind::custom;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::size_t max_degree = 0;
};

// Row-major lattice: vertex (r, c) has id r * cols + c. The square lattice
// couples 4-neighbors; the extended grid adds the diagonals (king moves).
// Throws std::domain_error for non-positive dimensions.
HardwareGraph make_hardware(HardwareKind kind, long rows, long cols);

HardwareGraph make_custom_hardware(Graph graph);

}  // namespace minorembed
