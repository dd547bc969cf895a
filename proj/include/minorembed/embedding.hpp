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
#include <vector>

#include "minorembed/model.hpp"

namespace minorembed {

// Raised when a logical edge cannot be realized by any hardware coupler.
class EmbeddingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Physical endpoints of one logical edge ij (i < j): from lies in trees[i],
// to lies in trees[j].
struct EdgeAssignment {
    Vertex from = 0;
    Vertex to = 0;

    friend bool operator==(const EdgeAssignment&, const EdgeAssignment&) = default;
};

// A minor-embedding of a logical graph into a hardware graph. Every logical
// vertex i owns a subtree of hardware vertices (trees[i], sorted) spanned by
// tree_edges[i]; logical edge k is carried by edge_assignment[k].
struct MinorEmbedding {
    Graph logical;
    Graph hardware;
    std::vector<std::vector<Vertex>> trees;
    std::vector<std::vector<Edge>> tree_edges;
    std::vector<EdgeAssignment> edge_assignment;

    // Number of hardware vertices used, N.
    std::size_t physical_size() const;
};

struct ValidationReport {
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

enum class EmbeddingClass { subgraph, topological_minor, general_minor };

std::string to_string(EmbeddingClass c);

ValidationReport validate(const MinorEmbedding& e);

// Throws std::domain_error when e is not a valid embedding.
EmbeddingClass classify(const MinorEmbedding& e);

// Deterministic spanning tree of the hardware subgraph induced by vertices
// (BFS from the smallest vertex, neighbors in ascending order). Throws
// EmbeddingError if the induced subgraph is disconnected.
std::vector<Edge> spanning_tree(const Graph& hardware, const std::vector<Vertex>& vertices);

// Chooses, for every logical edge, the lexicographically smallest hardware
// edge joining the two trees. Throws EmbeddingError naming the first logical
// edge without such a coupler.
MinorEmbedding derive_edge_assignment(const Graph& logical, const Graph& hardware,
                                      std::vector<std::vector<Vertex>> trees,
                                      std::vector<std::vector<Edge>> tree_edges);

// Leaves of trees[i]: vertices of degree <= 1 inside tree_edges[i]. A
// singleton tree has one leaf.
std::vector<Vertex> leaves(const MinorEmbedding& e, Vertex i);
std::size_t leaf_count(const MinorEmbedding& e, Vertex i);

// Original-edge neighbours of physical vertex p in tree i: the logical
// neighbours j whose edge ij is carried at p.
std::vector<Vertex> original_neighbors(const MinorEmbedding& e, Vertex i, Vertex p);

// Embedding of the subgraph of e.logical induced by keep (ascending logical
// ids); logical vertices are renumbered 0..keep.size()-1 in that order.
MinorEmbedding restrict_embedding(const MinorEmbedding& e, const std::vector<Vertex>& keep);

struct GreedyOptions {
    std::size_t max_attempts = 64;
};

// Heuristic tree embedder: places logical vertices one at a time, growing each
// tree along shortest free paths towards already-placed neighbours. Returns
// nullopt when every attempt fails. Deterministic for a given seed.
std::optional<MinorEmbedding> greedy_chain_embed(const Graph& logical, const HardwareGraph& hardware,
                                                 std::uint64_t seed, const GreedyOptions& options = {});

}  // namespace minorembed
