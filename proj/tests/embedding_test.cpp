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

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "minorembed/embedding.hpp"
#include "random_instances.hpp"

namespace minorembed {
namespace {

MinorEmbedding identity_embedding(const Graph& g) {
    std::vector<std::vector<Vertex>> trees(g.num_vertices());
    for (Vertex i = 0; i < g.num_vertices(); ++i) trees[i] = {i};
    return derive_edge_assignment(g, g, trees, std::vector<std::vector<Edge>>(g.num_vertices()));
}

// Diamond (4-cycle plus one chord) on a 3x3 square lattice; logical vertex 0
// is the middle column.
MinorEmbedding diamond_on_lattice() {
    const Graph g(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}});
    const auto hw = make_hardware(HardwareKind::square_lattice, 3, 3);
    return derive_edge_assignment(g, hw.base, {{1, 4, 7}, {0}, {3}, {6}}, {{{1, 4}, {4, 7}}, {}, {}, {}});
}

bool mentions(const ValidationReport& r, const std::string& text) {
    return std::any_of(r.violations.begin(), r.violations.end(),
                       [&](const std::string& v) { return v.find(text) != std::string::npos; });
}

TEST(Validate, IdentityEmbeddingIsSubgraph) {
    const auto e = identity_embedding(Graph(3, {{0, 1}, {1, 2}, {0, 2}}));
    EXPECT_TRUE(validate(e).ok());
    EXPECT_EQ(classify(e), EmbeddingClass::subgraph);
}

TEST(Validate, NonadjacentPairWithoutTreeEdgesIsDisconnected) {
    const auto hw = make_hardware(HardwareKind::square_lattice, 1, 3);
    MinorEmbedding e{Graph(2, {}), hw.base, {{0}, {1}}, {{}, {}}, {}};
    e.trees[1] = {0, 2};
    e.trees[0] = {1};
    const auto report = validate(e);
    EXPECT_FALSE(report.ok());
    EXPECT_TRUE(mentions(report, "logical vertex 1: tree disconnected"));
    EXPECT_THROW(classify(e), std::domain_error);
}

TEST(Validate, ChainOfThreeOnLatticeIsTopologicalMinor) {
    const auto e = diamond_on_lattice();
    EXPECT_TRUE(validate(e).ok());
    EXPECT_EQ(classify(e), EmbeddingClass::topological_minor);
    EXPECT_EQ(e.physical_size(), 6u);
}

TEST(Validate, ReportsOverlapCycleAndBadAssignment) {
    auto e = diamond_on_lattice();
    e.trees[1] = {0, 1};
    EXPECT_TRUE(mentions(validate(e), "already belongs to"));

    const auto king = make_hardware(HardwareKind::extended_grid, 2, 2);
    MinorEmbedding cyc{Graph(1, {}), king.base, {{0, 1, 2}}, {{{0, 1}, {1, 2}, {0, 2}}}, {}};
    EXPECT_TRUE(mentions(validate(cyc), "cycle"));

    auto bad = diamond_on_lattice();
    bad.edge_assignment[0] = {4, 3};
    EXPECT_TRUE(mentions(validate(bad), "logical edge 0-1"));

    auto outside = diamond_on_lattice();
    outside.tree_edges[0].push_back({7, 8});
    EXPECT_TRUE(mentions(validate(outside), "leaves the tree"));
}

TEST(Classify, StarIsGeneralMinor) {
    const auto hw = make_hardware(HardwareKind::square_lattice, 3, 3);
    const MinorEmbedding e{Graph(1, {}), hw.base, {{1, 3, 4, 5}}, {{{1, 4}, {3, 4}, {4, 5}}}, {}};
    EXPECT_EQ(classify(e), EmbeddingClass::general_minor);
    EXPECT_EQ(leaf_count(e, 0), 3u);
    EXPECT_EQ(leaves(e, 0), (std::vector<Vertex>{1, 3, 5}));
}

TEST(Classify, InvariantUnderHardwareRelabeling) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        const Graph g = fixtures::random_graph(rng, 4, 0.6);
        const auto e = fixtures::random_embedding(rng, g);
        const std::size_t m = e.hardware.num_vertices();
        std::vector<Vertex> perm(m);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<Edge> hw_edges;
        for (const Edge& x : e.hardware.edges()) hw_edges.emplace_back(perm[x.u], perm[x.v]);
        MinorEmbedding r{e.logical, Graph(m, hw_edges), {}, {}, {}};
        for (std::size_t i = 0; i < e.trees.size(); ++i) {
            std::vector<Vertex> t;
            for (Vertex p : e.trees[i]) t.push_back(perm[p]);
            std::sort(t.begin(), t.end());
            r.trees.push_back(t);
            std::vector<Edge> te;
            for (const Edge& x : e.tree_edges[i]) te.emplace_back(perm[x.u], perm[x.v]);
            r.tree_edges.push_back(te);
        }
        for (const auto& a : e.edge_assignment) r.edge_assignment.push_back({perm[a.from], perm[a.to]});
        ASSERT_TRUE(validate(r).ok());
        EXPECT_EQ(classify(r), classify(e));
    }
}

TEST(Leaves, SingletonPathAndStar) {
    const auto e = diamond_on_lattice();
    EXPECT_EQ(leaf_count(e, 1), 1u);
    EXPECT_EQ(leaves(e, 1), (std::vector<Vertex>{0}));
    EXPECT_EQ(leaves(e, 0), (std::vector<Vertex>{1, 7}));

    const auto hw = make_hardware(HardwareKind::square_lattice, 1, 4);
    const MinorEmbedding path{Graph(1, {}), hw.base, {{0, 1, 2, 3}}, {{{0, 1}, {1, 2}, {2, 3}}}, {}};
    EXPECT_EQ(leaves(path, 0), (std::vector<Vertex>{0, 3}));
}

TEST(OriginalNeighbors, FollowTheAssignment) {
    const auto e = diamond_on_lattice();
    EXPECT_EQ(original_neighbors(e, 0, 1), (std::vector<Vertex>{1}));
    EXPECT_EQ(original_neighbors(e, 0, 4), (std::vector<Vertex>{2}));
    EXPECT_EQ(original_neighbors(e, 0, 7), (std::vector<Vertex>{3}));
    EXPECT_EQ(original_neighbors(e, 2, 3), (std::vector<Vertex>{0, 1, 3}));
}

TEST(DeriveEdgeAssignment, UniqueCoupler) {
    const auto hw = make_hardware(HardwareKind::square_lattice, 1, 2);
    const auto e = derive_edge_assignment(Graph(2, {{0, 1}}), hw.base, {{1}, {0}}, {{}, {}});
    ASSERT_EQ(e.edge_assignment.size(), 1u);
    EXPECT_EQ(e.edge_assignment[0], (EdgeAssignment{1, 0}));
}

TEST(DeriveEdgeAssignment, SmallestOfParallelCouplersIsStable) {
    // Two vertical chains side by side on a 2x2 lattice: couplers 0-1 and 2-3.
    const auto hw = make_hardware(HardwareKind::square_lattice, 2, 2);
    for (int run = 0; run < 3; ++run) {
        const auto e = derive_edge_assignment(Graph(2, {{0, 1}}), hw.base, {{1, 3}, {0, 2}}, {{{1, 3}}, {{0, 2}}});
        EXPECT_EQ(e.edge_assignment[0], (EdgeAssignment{1, 0}));
    }
}

TEST(DeriveEdgeAssignment, OnlyLogicalEdgesAreAssigned) {
    const auto hw = make_hardware(HardwareKind::square_lattice, 1, 2);
    const auto e = derive_edge_assignment(Graph(2, {}), hw.base, {{0}, {1}}, {{}, {}});
    EXPECT_TRUE(e.edge_assignment.empty());
    EXPECT_TRUE(validate(e).ok());
}

TEST(DeriveEdgeAssignment, MissingCouplerIsNotAnEmbedding) {
    const auto hw = make_hardware(HardwareKind::square_lattice, 1, 3);
    try {
        derive_edge_assignment(Graph(2, {{0, 1}}), hw.base, {{0}, {2}}, {{}, {}});
        FAIL() << "expected EmbeddingError";
    } catch (const EmbeddingError& err) {
        EXPECT_NE(std::string(err.what()).find("not an embedding"), std::string::npos);
    }
}

TEST(SpanningTree, DeterministicAndRejectsDisconnected) {
    const auto hw = make_hardware(HardwareKind::square_lattice, 2, 2);
    const auto t = spanning_tree(hw.base, {0, 1, 2, 3});
    EXPECT_EQ(t.size(), 3u);
    EXPECT_EQ(t, spanning_tree(hw.base, {0, 1, 2, 3}));
    EXPECT_THROW(spanning_tree(hw.base, {0, 3}), EmbeddingError);
}

TEST(RestrictEmbedding, RenumbersKeptVertices) {
    const auto e = diamond_on_lattice();
    const auto r = restrict_embedding(e, {0, 2});
    EXPECT_TRUE(validate(r).ok());
    EXPECT_EQ(r.logical.num_vertices(), 2u);
    EXPECT_EQ(r.logical.num_edges(), 1u);
    EXPECT_EQ(r.trees[1], (std::vector<Vertex>{3}));
    EXPECT_EQ(r.edge_assignment[0], (EdgeAssignment{4, 3}));
}

TEST(GreedyChainEmbed, SingleEdgeIntoSquare) {
    const auto hw = make_hardware(HardwareKind::square_lattice, 2, 2);
    const auto e = greedy_chain_embed(Graph(2, {{0, 1}}), hw, 1);
    ASSERT_TRUE(e.has_value());
    EXPECT_TRUE(validate(*e).ok());
    EXPECT_EQ(classify(*e), EmbeddingClass::subgraph);
}

TEST(GreedyChainEmbed, K4IntoKingSquare) {
    const Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    const auto e = greedy_chain_embed(k4, make_hardware(HardwareKind::extended_grid, 2, 2), 3);
    ASSERT_TRUE(e.has_value());
    EXPECT_EQ(classify(*e), EmbeddingClass::subgraph);
}

TEST(GreedyChainEmbed, K5DoesNotFitInFourQubits) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < 5; ++u)
        for (Vertex v = u + 1; v < 5; ++v) edges.emplace_back(u, v);
    EXPECT_FALSE(greedy_chain_embed(Graph(5, edges), make_hardware(HardwareKind::extended_grid, 2, 2), 0));
}

TEST(GreedyChainEmbed, DeterministicGivenSeed) {
    const Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    const auto hw = make_hardware(HardwareKind::square_lattice, 4, 4);
    const auto a = greedy_chain_embed(k4, hw, 42);
    const auto b = greedy_chain_embed(k4, hw, 42);
    ASSERT_TRUE(a && b);
    EXPECT_EQ(a->trees, b->trees);
    EXPECT_EQ(a->tree_edges, b->tree_edges);
    EXPECT_TRUE(validate(*a).ok());
}

// Merging every tree into one vertex must recover every logical edge.
TEST(Contraction, RecoversLogicalGraph) {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 50; ++trial) {
        const Graph g = fixtures::random_graph(rng, 2 + trial % 5, 0.6);
        const auto e = fixtures::random_embedding(rng, g);
        std::map<Vertex, Vertex> owner;
        std::size_t used = 0;
        for (Vertex i = 0; i < e.trees.size(); ++i) {
            for (Vertex p : e.trees[i]) owner[p] = i;
            used += e.trees[i].size();
        }
        EXPECT_EQ(owner.size(), used);
        EXPECT_EQ(e.physical_size(), used);
        std::set<Edge> contracted;
        for (const auto& a : e.edge_assignment) {
            ASSERT_TRUE(e.hardware.has_edge(a.from, a.to));
            contracted.insert(Edge(owner.at(a.from), owner.at(a.to)));
        }
        for (const Edge& x : g.edges()) EXPECT_TRUE(contracted.count(x));
        // Onbr membership mirrors logical adjacency.
        for (Vertex i = 0; i < e.trees.size(); ++i) {
            for (Vertex p : e.trees[i]) {
                for (Vertex j : original_neighbors(e, i, p)) EXPECT_TRUE(g.has_edge(i, j));
            }
        }
    }
}

}  // namespace
}  // namespace minorembed
