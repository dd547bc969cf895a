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

#include "minorembed/embedding.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <random>

namespace minorembed {

namespace {

constexpr std::int64_t kFree = -1;

struct DisjointSets {
    std::vector<std::size_t> parent;

    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    std::size_t find(std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

// owner[p] = logical vertex whose tree holds hardware vertex p, or kFree.
std::vector<std::int64_t> owner_map(std::size_t hardware_size, const std::vector<std::vector<Vertex>>& trees) {
    std::vector<std::int64_t> owner(hardware_size, kFree);
    for (std::size_t i = 0; i < trees.size(); ++i) {
        for (Vertex p : trees[i]) {
            if (p < hardware_size) owner[p] = static_cast<std::int64_t>(i);
        }
    }
    return owner;
}

std::string vertex_label(std::size_t i) { return "logical vertex " + std::to_string(i); }

}  // namespace

std::size_t MinorEmbedding::physical_size() const {
    std::size_t total = 0;
    for (const auto& t : trees) total += t.size();
    return total;
}

std::string to_string(EmbeddingClass c) {
    switch (c) {
        case EmbeddingClass::subgraph:
            return "subgraph";
        case EmbeddingClass::topological_minor:
            return "topological_minor";
        case EmbeddingClass::general_minor:
            return "general_minor";
    }
    return "general_minor";
}

ValidationReport validate(const MinorEmbedding& e) {
    ValidationReport report;
    auto fail = [&](std::string message) { report.violations.push_back(std::move(message)); };

    const std::size_t n = e.logical.num_vertices();
    const std::size_t hw = e.hardware.num_vertices();
    if (e.trees.size() != n) {
        fail("embedding has " + std::to_string(e.trees.size()) + " trees for " + std::to_string(n) +
             " logical vertices");
        return report;
    }
    if (e.tree_edges.size() != n) {
        fail("embedding has " + std::to_string(e.tree_edges.size()) + " tree edge lists for " + std::to_string(n) +
             " logical vertices");
        return report;
    }

    std::vector<std::int64_t> owner(hw, kFree);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& tree = e.trees[i];
        if (tree.empty()) {
            fail(vertex_label(i) + ": empty tree");
            continue;
        }
        for (Vertex p : tree) {
            if (p >= hw) {
                fail(vertex_label(i) + ": hardware vertex " + std::to_string(p) + " does not exist");
                continue;
            }
            if (owner[p] == static_cast<std::int64_t>(i)) {
                fail(vertex_label(i) + ": hardware vertex " + std::to_string(p) + " listed twice");
            } else if (owner[p] != kFree) {
                fail(vertex_label(i) + ": hardware vertex " + std::to_string(p) + " already belongs to " +
                     vertex_label(static_cast<std::size_t>(owner[p])));
            } else {
                owner[p] = static_cast<std::int64_t>(i);
            }
        }
    }
    if (!report.ok()) return report;

    for (std::size_t i = 0; i < n; ++i) {
        const auto& tree = e.trees[i];
        const auto& edges = e.tree_edges[i];
        std::vector<Vertex> sorted = tree;
        std::sort(sorted.begin(), sorted.end());
        auto local = [&](Vertex p) {
            return static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), p) - sorted.begin());
        };
        DisjointSets sets(sorted.size());
        bool edges_ok = true;
        for (const Edge& edge : edges) {
            if (!e.hardware.has_edge(edge.u, edge.v)) {
                fail(vertex_label(i) + ": tree edge " + to_string(edge) + " is not a hardware edge");
                edges_ok = false;
                continue;
            }
            if (owner[edge.u] != static_cast<std::int64_t>(i) || owner[edge.v] != static_cast<std::int64_t>(i)) {
                fail(vertex_label(i) + ": tree edge " + to_string(edge) + " leaves the tree");
                edges_ok = false;
                continue;
            }
            if (!sets.unite(local(edge.u), local(edge.v))) {
                fail(vertex_label(i) + ": tree edges contain a cycle at " + to_string(edge));
                edges_ok = false;
            }
        }
        if (!edges_ok) continue;
        const auto root = sets.find(0);
        for (std::size_t k = 1; k < sorted.size(); ++k) {
            if (sets.find(k) != root) {
                fail(vertex_label(i) + ": tree disconnected");
                break;
            }
        }
    }

    const auto logical_edges = e.logical.edges();
    if (e.edge_assignment.size() != logical_edges.size()) {
        fail("edge assignment has " + std::to_string(e.edge_assignment.size()) + " entries for " +
             std::to_string(logical_edges.size()) + " logical edges");
        return report;
    }
    for (std::size_t k = 0; k < logical_edges.size(); ++k) {
        const Edge& le = logical_edges[k];
        const EdgeAssignment& a = e.edge_assignment[k];
        const std::string label = "logical edge " + to_string(le);
        if (a.from >= hw || a.to >= hw) {
            fail(label + ": assigned hardware vertex does not exist");
            continue;
        }
        if (owner[a.from] != static_cast<std::int64_t>(le.u) || owner[a.to] != static_cast<std::int64_t>(le.v)) {
            fail(label + ": assigned coupler " + to_string(Edge(a.from, a.to)) + " does not join the two trees");
            continue;
        }
        if (!e.hardware.has_edge(a.from, a.to)) {
            fail(label + ": assigned coupler " + to_string(Edge(a.from, a.to)) + " is not a hardware edge");
        }
    }
    return report;
}

EmbeddingClass classify(const MinorEmbedding& e) {
    const auto report = validate(e);
    if (!report.ok()) {
        throw std::domain_error("cannot classify an invalid embedding: " + report.violations.front());
    }
    bool singletons = true;
    bool paths = true;
    for (std::size_t i = 0; i < e.trees.size(); ++i) {
        if (e.trees[i].size() > 1) singletons = false;
        std::vector<std::size_t> degree(e.hardware.num_vertices(), 0);
        for (const Edge& edge : e.tree_edges[i]) {
            if (++degree[edge.u] > 2 || ++degree[edge.v] > 2) paths = false;
        }
    }
    if (singletons) return EmbeddingClass::subgraph;
    return paths ? EmbeddingClass::topological_minor : EmbeddingClass::general_minor;
}

std::vector<Edge> spanning_tree(const Graph& hardware, const std::vector<Vertex>& vertices) {
    std::vector<Vertex> sorted = vertices;
    std::sort(sorted.begin(), sorted.end());
    if (sorted.empty()) return {};
    auto member = [&](Vertex p) { return std::binary_search(sorted.begin(), sorted.end(), p); };

    std::vector<Edge> edges;
    std::vector<Vertex> seen{sorted.front()};
    std::queue<Vertex> frontier;
    frontier.push(sorted.front());
    while (!frontier.empty()) {
        const Vertex p = frontier.front();
        frontier.pop();
        for (Vertex q : hardware.neighbors(p)) {
            if (!member(q) || std::find(seen.begin(), seen.end(), q) != seen.end()) continue;
            seen.push_back(q);
            edges.emplace_back(p, q);
            frontier.push(q);
        }
    }
    if (seen.size() != sorted.size()) {
        throw EmbeddingError("hardware vertices do not induce a connected subgraph");
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

MinorEmbedding derive_edge_assignment(const Graph& logical, const Graph& hardware,
                                      std::vector<std::vector<Vertex>> trees,
                                      std::vector<std::vector<Edge>> tree_edges) {
    for (auto& t : trees) std::sort(t.begin(), t.end());
    for (auto& t : tree_edges) std::sort(t.begin(), t.end());
    const auto owner = owner_map(hardware.num_vertices(), trees);

    std::vector<EdgeAssignment> assignment;
    assignment.reserve(logical.num_edges());
    for (const Edge& le : logical.edges()) {
        std::optional<Edge> best;
        EdgeAssignment chosen;
        if (le.u < trees.size()) {
            for (Vertex p : trees[le.u]) {
                if (p >= hardware.num_vertices()) continue;
                for (Vertex q : hardware.neighbors(p)) {
                    if (owner[q] != static_cast<std::int64_t>(le.v)) continue;
                    const Edge candidate(p, q);
                    if (!best || candidate < *best) {
                        best = candidate;
                        chosen = {p, q};
                    }
                }
            }
        }
        if (!best) {
            throw EmbeddingError("not an embedding: no hardware coupler joins the trees of logical edge " +
                                 to_string(le));
        }
        assignment.push_back(chosen);
    }
    return MinorEmbedding{logical, hardware, std::move(trees), std::move(tree_edges), std::move(assignment)};
}

std::vector<Vertex> leaves(const MinorEmbedding& e, Vertex i) {
    const auto& tree = e.trees.at(i);
    if (tree.size() == 1) return tree;
    std::vector<Vertex> result;
    for (Vertex p : tree) {
        std::size_t degree = 0;
        for (const Edge& edge : e.tree_edges.at(i)) {
            if (edge.contains(p)) ++degree;
        }
        if (degree <= 1) result.push_back(p);
    }
    return result;
}

std::size_t leaf_count(const MinorEmbedding& e, Vertex i) { return leaves(e, i).size(); }

std::vector<Vertex> original_neighbors(const MinorEmbedding& e, Vertex i, Vertex p) {
    std::vector<Vertex> result;
    const auto edges = e.logical.edges();
    for (std::size_t k = 0; k < edges.size(); ++k) {
        const auto& a = e.edge_assignment.at(k);
        if (edges[k].u == i && a.from == p) result.push_back(edges[k].v);
        if (edges[k].v == i && a.to == p) result.push_back(edges[k].u);
    }
    return result;
}

MinorEmbedding restrict_embedding(const MinorEmbedding& e, const std::vector<Vertex>& keep) {
    std::vector<std::int64_t> renumber(e.logical.num_vertices(), kFree);
    for (std::size_t k = 0; k < keep.size(); ++k) {
        renumber.at(keep[k]) = static_cast<std::int64_t>(k);
    }
    std::vector<Edge> edges;
    std::vector<std::pair<Edge, EdgeAssignment>> carried;
    const auto logical_edges = e.logical.edges();
    for (std::size_t k = 0; k < logical_edges.size(); ++k) {
        const auto a = renumber[logical_edges[k].u];
        const auto b = renumber[logical_edges[k].v];
        if (a == kFree || b == kFree) continue;
        // Renumbering is monotone, so the orientation u < v is preserved.
        const Edge edge(static_cast<Vertex>(a), static_cast<Vertex>(b));
        edges.push_back(edge);
        carried.emplace_back(edge, e.edge_assignment.at(k));
    }
    MinorEmbedding result;
    result.logical = Graph(keep.size(), edges);
    result.hardware = e.hardware;
    for (Vertex v : keep) {
        result.trees.push_back(e.trees.at(v));
        result.tree_edges.push_back(e.tree_edges.at(v));
    }
    std::sort(carried.begin(), carried.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    for (const auto& [edge, assignment] : carried) result.edge_assignment.push_back(assignment);
    return result;
}

namespace {

struct BfsResult {
    std::vector<std::int64_t> parent;
    std::vector<std::size_t> dist;
};

constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

BfsResult free_bfs(const Graph& hw, const std::vector<std::int64_t>& owner, Vertex root) {
    BfsResult r{std::vector<std::int64_t>(hw.num_vertices(), -1), std::vector<std::size_t>(hw.num_vertices(), kUnreached)};
    std::queue<Vertex> frontier;
    r.dist[root] = 0;
    frontier.push(root);
    while (!frontier.empty()) {
        const Vertex p = frontier.front();
        frontier.pop();
        for (Vertex q : hw.neighbors(p)) {
            if (owner[q] != kFree || r.dist[q] != kUnreached) continue;
            r.dist[q] = r.dist[p] + 1;
            r.parent[q] = p;
            frontier.push(q);
        }
    }
    return r;
}

// Closest vertex reached by the BFS that touches tree j, or nullopt.
std::optional<Vertex> closest_contact(const Graph& hw, const std::vector<std::int64_t>& owner, const BfsResult& bfs,
                                      Vertex j) {
    std::optional<Vertex> best;
    for (Vertex p = 0; p < hw.num_vertices(); ++p) {
        if (bfs.dist[p] == kUnreached) continue;
        if (best && bfs.dist[p] >= bfs.dist[*best]) continue;
        for (Vertex q : hw.neighbors(p)) {
            if (owner[q] == static_cast<std::int64_t>(j)) {
                best = p;
                break;
            }
        }
    }
    return best;
}

std::vector<Vertex> placement_order(const Graph& logical, std::mt19937_64& rng) {
    const std::size_t n = logical.num_vertices();
    std::vector<Vertex> starts(n);
    std::iota(starts.begin(), starts.end(), 0);
    std::shuffle(starts.begin(), starts.end(), rng);
    std::vector<bool> seen(n, false);
    std::vector<Vertex> order;
    for (Vertex s : starts) {
        if (seen[s]) continue;
        seen[s] = true;
        std::queue<Vertex> frontier;
        frontier.push(s);
        while (!frontier.empty()) {
            const Vertex v = frontier.front();
            frontier.pop();
            order.push_back(v);
            std::vector<Vertex> next(logical.neighbors(v).begin(), logical.neighbors(v).end());
            std::shuffle(next.begin(), next.end(), rng);
            for (Vertex w : next) {
                if (seen[w]) continue;
                seen[w] = true;
                frontier.push(w);
            }
        }
    }
    return order;
}

std::optional<MinorEmbedding> try_embed(const Graph& logical, const Graph& hw, std::mt19937_64& rng) {
    const std::size_t n = logical.num_vertices();
    std::vector<std::int64_t> owner(hw.num_vertices(), kFree);
    std::vector<std::vector<Vertex>> trees(n);
    std::vector<std::vector<Edge>> tree_edges(n);
    std::vector<bool> placed(n, false);

    for (Vertex v : placement_order(logical, rng)) {
        std::vector<Vertex> targets;
        for (Vertex w : logical.neighbors(v)) {
            if (placed[w]) targets.push_back(w);
        }
        std::vector<Vertex> candidates;
        for (Vertex p = 0; p < hw.num_vertices(); ++p) {
            if (owner[p] == kFree) candidates.push_back(p);
        }
        if (candidates.empty()) return std::nullopt;
        std::shuffle(candidates.begin(), candidates.end(), rng);

        std::optional<Vertex> best_root;
        std::size_t best_cost = kUnreached;
        std::vector<Vertex> best_contacts;
        BfsResult best_bfs;
        for (Vertex root : candidates) {
            auto bfs = free_bfs(hw, owner, root);
            std::size_t cost = 0;
            std::vector<Vertex> contacts;
            bool reachable = true;
            for (Vertex j : targets) {
                auto contact = closest_contact(hw, owner, bfs, j);
                if (!contact) {
                    reachable = false;
                    break;
                }
                cost += bfs.dist[*contact];
                contacts.push_back(*contact);
            }
            if (!reachable || cost >= best_cost) continue;
            best_cost = cost;
            best_root = root;
            best_contacts = std::move(contacts);
            best_bfs = std::move(bfs);
            if (targets.empty()) break;
        }
        if (!best_root) return std::nullopt;

        // Union of BFS-tree paths from the root is itself a tree.
        std::vector<Vertex> tree{*best_root};
        std::vector<Edge> edges;
        owner[*best_root] = v;
        for (Vertex contact : best_contacts) {
            Vertex p = contact;
            while (owner[p] != static_cast<std::int64_t>(v)) {
                owner[p] = v;
                tree.push_back(p);
                const auto up = static_cast<Vertex>(best_bfs.parent[p]);
                edges.emplace_back(p, up);
                p = up;
            }
        }
        trees[v] = std::move(tree);
        tree_edges[v] = std::move(edges);
        placed[v] = true;
    }
    auto embedding = derive_edge_assignment(logical, hw, std::move(trees), std::move(tree_edges));
    if (!validate(embedding).ok()) return std::nullopt;
    return embedding;
}

}  // namespace

std::optional<MinorEmbedding> greedy_chain_embed(const Graph& logical, const HardwareGraph& hardware,
                                                 std::uint64_t seed, const GreedyOptions& options) {
    if (logical.num_vertices() > hardware.base.num_vertices()) return std::nullopt;
    std::mt19937_64 rng(seed);
    for (std::size_t attempt = 0; attempt < options.max_attempts; ++attempt) {
        if (auto embedding = try_embed(logical, hardware.base, rng)) return embedding;
    }
    return std::nullopt;
}

}  // namespace minorembed
