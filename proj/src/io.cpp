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

#include "minorembed/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>

namespace minorembed::io {

namespace {

std::size_t as_count(const json& value, const std::string& what) {
    if (!value.is_number_integer() || value.get<long long>() < 0) {
        throw InputError(what + " must be a non-negative integer");
    }
    return value.get<std::size_t>();
}

Vertex as_vertex(const json& value, std::size_t n, const std::string& what) {
    if (!value.is_number_integer()) throw InputError(what + " must be an integer vertex id");
    const auto v = value.get<long long>();
    if (v < 0 || static_cast<std::size_t>(v) >= n) {
        throw InputError(what + " " + std::to_string(v) + " is outside 0.." + std::to_string(n == 0 ? 0 : n - 1));
    }
    return static_cast<Vertex>(v);
}

Vertex key_vertex(const std::string& key, std::size_t n, const std::string& what) {
    long long v = -1;
    const auto* end = key.data() + key.size();
    auto [ptr, ec] = std::from_chars(key.data(), end, v);
    if (ec != std::errc() || ptr != end) throw InputError(what + " key '" + key + "' is not a vertex id");
    if (v < 0 || static_cast<std::size_t>(v) >= n) {
        throw InputError(what + " key '" + key + "' is outside 0.." + std::to_string(n == 0 ? 0 : n - 1));
    }
    return static_cast<Vertex>(v);
}

double as_finite(const json& value, const std::string& what) {
    if (!value.is_number()) throw InputError(what + " must be a number");
    const double x = value.get<double>();
    if (!std::isfinite(x)) throw InputError(what + " must be finite");
    return x;
}

const json& require(const json& doc, const char* key) {
    if (!doc.is_object() || !doc.contains(key)) throw InputError(std::string("missing field '") + key + "'");
    return doc.at(key);
}

std::vector<double> parse_linear(const json& doc, std::size_t n) {
    std::vector<double> values(n, 0.0);
    if (!doc.contains("linear")) return values;
    const auto& linear = doc.at("linear");
    if (!linear.is_object()) throw InputError("'linear' must be an object");
    for (const auto& [key, value] : linear.items()) {
        values[key_vertex(key, n, "linear")] = as_finite(value, "linear value for vertex " + key);
    }
    return values;
}

std::vector<QuadraticTerm> parse_quadratic(const json& doc, std::size_t n) {
    std::vector<QuadraticTerm> terms;
    if (!doc.contains("quadratic")) return terms;
    const auto& quadratic = doc.at("quadratic");
    if (!quadratic.is_array()) throw InputError("'quadratic' must be an array of [u, v, value] triples");
    std::set<Edge> seen;
    for (const auto& triple : quadratic) {
        if (!triple.is_array() || triple.size() != 3) throw InputError("quadratic entries must be [u, v, value]");
        const Vertex u = as_vertex(triple[0], n, "quadratic endpoint");
        const Vertex v = as_vertex(triple[1], n, "quadratic endpoint");
        if (u >= v) {
            throw InputError("quadratic entry [" + std::to_string(u) + ", " + std::to_string(v) + "] needs u < v");
        }
        const double value = as_finite(triple[2], "quadratic value");
        if (value == 0.0) {
            throw InputError("quadratic entry [" + std::to_string(u) + ", " + std::to_string(v) +
                             "] is zero; omit the edge instead");
        }
        if (!seen.insert(Edge(u, v)).second) {
            throw InputError("duplicate quadratic entry [" + std::to_string(u) + ", " + std::to_string(v) + "]");
        }
        terms.push_back({u, v, value});
    }
    return terms;
}

std::vector<Edge> parse_edge_list(const json& list, std::size_t n, const std::string& what) {
    if (!list.is_array()) throw InputError(what + " must be an array of [u, v] pairs");
    std::vector<Edge> edges;
    std::set<Edge> seen;
    for (const auto& pair : list) {
        if (!pair.is_array() || pair.size() != 2) throw InputError(what + " entries must be [u, v]");
        const Vertex u = as_vertex(pair[0], n, what + " endpoint");
        const Vertex v = as_vertex(pair[1], n, what + " endpoint");
        if (u == v) throw InputError(what + " contains a self-loop at " + std::to_string(u));
        if (!seen.insert(Edge(u, v)).second) throw InputError(what + " repeats edge " + to_string(Edge(u, v)));
        edges.emplace_back(u, v);
    }
    return edges;
}

json linear_json(std::span<const double> values, bool skip_zero) {
    json linear = json::object();
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (skip_zero && values[i] == 0.0) continue;
        linear[std::to_string(i)] = values[i];
    }
    return linear;
}

json quadratic_json(const Graph& g, std::span<const double> values) {
    json quadratic = json::array();
    const auto edges = g.edges();
    for (std::size_t k = 0; k < edges.size(); ++k) quadratic.push_back({edges[k].u, edges[k].v, values[k]});
    return quadratic;
}

json edges_json(std::span<const Edge> edges) {
    json list = json::array();
    for (const Edge& e : edges) list.push_back({e.u, e.v});
    return list;
}

}  // namespace

std::string problem_type(const Problem& p) {
    if (std::holds_alternative<IsingProblem>(p)) return "ising";
    if (std::holds_alternative<QuboProblem>(p)) return "qubo";
    return "wmis";
}

ProblemDocument parse_problem(const json& doc) {
    if (!doc.is_object()) throw InputError("problem document must be a JSON object");
    const auto& type_field = require(doc, "type");
    if (!type_field.is_string()) throw InputError("'type' must be a string");
    const auto type = type_field.get<std::string>();
    const std::size_t n = as_count(require(doc, "n"), "'n'");

    ProblemDocument out{IsingProblem(), {}, json::object()};
    for (const auto& [key, value] : doc.items()) {
        if (key != "type" && key != "n" && key != "linear" && key != "quadratic" && key != "edges") {
            out.extra[key] = value;
        }
    }
    try {
        if (type == "ising") {
            out.problem = make_ising(n, parse_linear(doc, n), parse_quadratic(doc, n));
        } else if (type == "qubo") {
            out.problem = make_qubo(n, parse_linear(doc, n), parse_quadratic(doc, n));
        } else if (type == "wmis") {
            if (doc.contains("quadratic")) {
                out.warnings.push_back("'quadratic' is ignored for wmis problems; the graph comes from 'edges'");
            }
            std::vector<Edge> edges;
            if (doc.contains("edges")) edges = parse_edge_list(doc.at("edges"), n, "'edges'");
            if (!doc.contains("linear")) throw InputError("wmis problem needs weights in 'linear'");
            std::vector<double> weights(n, 0.0);
            std::vector<bool> given(n, false);
            for (const auto& [key, value] : doc.at("linear").items()) {
                const Vertex v = key_vertex(key, n, "linear");
                weights[v] = as_finite(value, "weight of vertex " + key);
                given[v] = true;
            }
            for (std::size_t i = 0; i < n; ++i) {
                if (!given[i]) throw InputError("wmis weight missing for vertex " + std::to_string(i));
            }
            out.problem = WmisInstance(Graph(n, std::move(edges)), std::move(weights));
        } else {
            throw InputError("unknown problem type '" + type + "'");
        }
    } catch (const std::invalid_argument& err) {
        throw InputError(err.what());
    } catch (const std::domain_error& err) {
        throw InputError(err.what());
    }
    return out;
}

json problem_to_json(const Problem& p) {
    json doc;
    doc["type"] = problem_type(p);
    if (const auto* ising = std::get_if<IsingProblem>(&p)) {
        doc["n"] = ising->size();
        doc["linear"] = linear_json(ising->h(), true);
        doc["quadratic"] = quadratic_json(ising->graph(), ising->couplings());
    } else if (const auto* qubo = std::get_if<QuboProblem>(&p)) {
        doc["n"] = qubo->size();
        doc["linear"] = linear_json(qubo->c(), true);
        doc["quadratic"] = quadratic_json(qubo->graph(), qubo->penalties());
    } else {
        const auto& w = std::get<WmisInstance>(p);
        doc["n"] = w.graph().num_vertices();
        doc["linear"] = linear_json(w.weights(), false);
        doc["edges"] = edges_json(w.graph().edges());
    }
    return doc;
}

json affine_to_json(const AffineLink& link) {
    return {{"scale", link.scale},
            {"offset", link.offset},
            {"direction", link.direction == LinkDirection::qubo_max_to_ising_min ? "qubo_max_to_ising_min"
                                                                                 : "ising_min_to_qubo_max"}};
}

HardwareGraph parse_hardware(const json& block) {
    if (!block.is_object()) throw InputError("'hardware' must be an object");
    try {
        if (block.contains("kind")) {
            const auto kind = block.at("kind").get<std::string>();
            HardwareKind k;
            if (kind == "square") {
                k = HardwareKind::square_lattice;
            } else if (kind == "extended") {
                k = HardwareKind::extended_grid;
            } else {
                throw InputError("unknown hardware kind '" + kind + "'");
            }
            const auto& rows = require(block, "rows");
            const auto& cols = require(block, "cols");
            if (!rows.is_number_integer() || !cols.is_number_integer()) {
                throw InputError("hardware rows and cols must be integers");
            }
            auto hw = make_hardware(k, rows.get<long>(), cols.get<long>());
            if (block.contains("edges")) {
                auto listed = parse_edge_list(block.at("edges"), hw.base.num_vertices(), "hardware edges");
                std::sort(listed.begin(), listed.end());
                if (!std::equal(listed.begin(), listed.end(), hw.base.edges().begin(), hw.base.edges().end())) {
                    throw InputError("hardware edges do not match the " + kind + " lattice");
                }
            }
            return hw;
        }
        const std::size_t n = as_count(require(block, "n"), "hardware 'n'");
        return make_custom_hardware(Graph(n, parse_edge_list(require(block, "edges"), n, "hardware edges")));
    } catch (const json::exception& err) {
        throw InputError(std::string("malformed hardware block: ") + err.what());
    } catch (const std::domain_error& err) {
        throw InputError(err.what());
    }
}

json hardware_to_json(const HardwareGraph& hw) {
    json block;
    if (hw.kind != HardwareKind::custom) {
        block["kind"] = to_string(hw.kind);
        block["rows"] = hw.rows;
        block["cols"] = hw.cols;
    }
    block["n"] = hw.base.num_vertices();
    block["edges"] = edges_json(hw.base.edges());
    return block;
}

MinorEmbedding parse_embedding(const json& doc, const Graph& logical) {
    auto reading = read_embedding(doc, logical);
    if (!reading.violations.empty()) {
        std::string message = "invalid embedding:";
        for (const auto& v : reading.violations) message += "\n  " + v;
        throw InputError(message);
    }
    return std::move(reading.embedding);
}

EmbeddingReading read_embedding(const json& doc, const Graph& logical) {
    if (!doc.is_object()) throw InputError("embedding document must be a JSON object");
    const auto hw = parse_hardware(require(doc, "hardware"));
    const std::size_t n = logical.num_vertices();
    const std::size_t hn = hw.base.num_vertices();

    const auto& chains = require(doc, "chains");
    if (!chains.is_object()) throw InputError("'chains' must be an object");
    std::vector<std::vector<Vertex>> trees(n);
    std::vector<bool> has_chain(n, false);
    for (const auto& [key, list] : chains.items()) {
        const Vertex i = key_vertex(key, n, "chains");
        if (!list.is_array() || list.empty()) throw InputError("chain of logical vertex " + key + " must be a non-empty array");
        for (const auto& p : list) trees[i].push_back(as_vertex(p, hn, "chain vertex"));
        std::sort(trees[i].begin(), trees[i].end());
        has_chain[i] = true;
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!has_chain[i]) throw InputError("no chain for logical vertex " + std::to_string(i));
    }

    std::vector<std::vector<Edge>> tree_edges(n);
    std::vector<bool> has_edges(n, false);
    if (doc.contains("chain_edges")) {
        for (const auto& [key, list] : doc.at("chain_edges").items()) {
            const Vertex i = key_vertex(key, n, "chain_edges");
            tree_edges[i] = parse_edge_list(list, hn, "chain edges of logical vertex " + key);
            has_edges[i] = true;
        }
    }
    std::vector<std::string> violations;
    for (std::size_t i = 0; i < n; ++i) {
        if (has_edges[i]) continue;
        try {
            tree_edges[i] = spanning_tree(hw.base, trees[i]);
        } catch (const EmbeddingError&) {
            violations.push_back("logical vertex " + std::to_string(i) + ": tree disconnected");
        }
    }
    if (!violations.empty()) {
        return {MinorEmbedding{logical, hw.base, trees, tree_edges, {}}, hw, std::move(violations)};
    }

    // Explicit assignments override the derived ones.
    std::vector<std::optional<EdgeAssignment>> given(logical.num_edges());
    if (doc.contains("edge_assignment")) {
        for (const auto& [key, pair] : doc.at("edge_assignment").items()) {
            const auto dash = key.find('-');
            if (dash == std::string::npos) throw InputError("edge_assignment key '" + key + "' must look like 'u-v'");
            const Vertex u = key_vertex(key.substr(0, dash), n, "edge_assignment");
            const Vertex v = key_vertex(key.substr(dash + 1), n, "edge_assignment");
            const auto k = logical.edge_index(u, v);
            if (!k) throw InputError("edge_assignment names " + key + ", which is not a logical edge");
            if (!pair.is_array() || pair.size() != 2) throw InputError("edge_assignment values must be [pu, pv]");
            Vertex pu = as_vertex(pair[0], hn, "edge_assignment vertex");
            Vertex pv = as_vertex(pair[1], hn, "edge_assignment vertex");
            if (u > v) std::swap(pu, pv);
            given[*k] = EdgeAssignment{pu, pv};
        }
    }

    MinorEmbedding e;
    bool derived = false;
    try {
        e = derive_edge_assignment(logical, hw.base, trees, tree_edges);
        derived = true;
    } catch (const EmbeddingError&) {
        // Fall through: only acceptable when every missing assignment is given.
    }
    if (!derived) {
        e = MinorEmbedding{logical, hw.base, trees, tree_edges, std::vector<EdgeAssignment>(logical.num_edges())};
        for (auto& t : e.tree_edges) std::sort(t.begin(), t.end());
        for (std::size_t k = 0; k < given.size(); ++k) {
            if (!given[k]) {
                violations.push_back("logical edge " + to_string(logical.edge(k)) +
                                     ": no hardware coupler joins the two trees");
            }
        }
        if (!violations.empty()) return {std::move(e), hw, std::move(violations)};
    }
    for (std::size_t k = 0; k < given.size(); ++k) {
        if (given[k]) e.edge_assignment[k] = *given[k];
    }
    auto report = validate(e);
    return {std::move(e), hw, std::move(report.violations)};
}

json embedding_to_json(const MinorEmbedding& e, const HardwareGraph& hw) {
    json doc;
    doc["hardware"] = hardware_to_json(hw);
    json chains = json::object();
    json chain_edges = json::object();
    for (std::size_t i = 0; i < e.trees.size(); ++i) {
        chains[std::to_string(i)] = e.trees[i];
        chain_edges[std::to_string(i)] = edges_json(e.tree_edges[i]);
    }
    doc["chains"] = chains;
    doc["chain_edges"] = chain_edges;
    json assignment = json::object();
    const auto edges = e.logical.edges();
    for (std::size_t k = 0; k < edges.size(); ++k) {
        assignment[to_string(edges[k])] = {e.edge_assignment[k].from, e.edge_assignment[k].to};
    }
    doc["edge_assignment"] = assignment;
    return doc;
}

json embedded_to_json(const EmbeddedIsing& emb, const std::string& policy,
                      const std::optional<Preprocessing>& preprocessing) {
    json doc = problem_to_json(emb.problem);
    json meta;
    meta["offset"] = emb.offset;
    meta["policy"] = policy;
    meta["logical_n"] = emb.logical_size();
    meta["owner"] = emb.owner;
    meta["hardware_ids"] = emb.hardware_ids;
    json chains = json::object();
    for (std::size_t i = 0; i < emb.chain_edges.size(); ++i) {
        json list = json::array();
        for (const auto& c : emb.chain_edges[i]) list.push_back({c.edge.u, c.edge.v, c.strength});
        chains[std::to_string(i)] = list;
    }
    meta["chain_edges"] = chains;
    if (!emb.gap_targets.empty()) meta["gap_targets"] = emb.gap_targets;
    if (preprocessing) {
        json fixed = json::array();
        for (const auto& f : preprocessing->fixed) fixed.push_back({f.vertex, f.spin});
        meta["preprocessing"] = {{"fixed", fixed},
                                 {"residual_vertices", preprocessing->residual_vertices},
                                 {"constant", preprocessing->constant}};
    }
    doc["metadata"] = meta;
    return doc;
}

EmbeddedDocument parse_embedded(const json& doc) {
    auto parsed = parse_problem(doc);
    auto* ising = std::get_if<IsingProblem>(&parsed.problem);
    if (!ising) throw InputError("embedded problem must have type 'ising'");
    if (!parsed.extra.contains("metadata")) throw InputError("embedded problem has no 'metadata' block");
    const auto& meta = parsed.extra.at("metadata");

    EmbeddedDocument out;
    auto& emb = out.embedded;
    emb.problem = *ising;
    const std::size_t N = ising->size();
    try {
        as_finite(require(meta, "offset"), "offset");
        if (meta.contains("policy")) out.policy = meta.at("policy").get<std::string>();
        const std::size_t n = as_count(require(meta, "logical_n"), "logical_n");
        const auto& owner = require(meta, "owner");
        if (!owner.is_array() || owner.size() != N) throw InputError("'owner' must list one logical vertex per qubit");
        for (const auto& o : owner) emb.owner.push_back(as_vertex(o, n, "owner"));
        if (meta.contains("hardware_ids")) emb.hardware_ids = meta.at("hardware_ids").get<std::vector<Vertex>>();
        emb.chain_edges.resize(n);
        for (const auto& [key, list] : require(meta, "chain_edges").items()) {
            const Vertex i = key_vertex(key, n, "chain_edges");
            for (const auto& triple : list) {
                if (!triple.is_array() || triple.size() != 3) throw InputError("chain edges must be [u, v, F]");
                const Edge edge(as_vertex(triple[0], N, "chain edge endpoint"),
                                as_vertex(triple[1], N, "chain edge endpoint"));
                as_finite(triple[2], "chain strength");
                // The coupling in the problem body wins over the copy kept here.
                const auto k = ising->graph().edge_index(edge.u, edge.v);
                if (!k) throw InputError("chain edge " + to_string(edge) + " is not a coupler of the problem");
                emb.chain_edges[i].push_back({edge, ising->coupling(*k)});
            }
        }
        double offset = 0.0;
        for (const auto& chain : emb.chain_edges) {
            for (const auto& c : chain) offset += c.strength;
        }
        emb.offset = offset;
        if (meta.contains("gap_targets")) emb.gap_targets = meta.at("gap_targets").get<std::vector<double>>();
        if (meta.contains("preprocessing")) {
            const auto& pre = meta.at("preprocessing");
            out.preprocessed = true;
            for (const auto& f : require(pre, "fixed")) {
                out.fixed.push_back({f.at(0).get<Vertex>(), static_cast<std::int8_t>(f.at(1).get<int>())});
            }
            out.residual_vertices = require(pre, "residual_vertices").get<std::vector<Vertex>>();
            if (out.residual_vertices.size() != n) throw InputError("residual_vertices does not match logical_n");
        }
    } catch (const json::exception& err) {
        throw InputError(std::string("malformed metadata: ") + err.what());
    }
    return out;
}

double parse_number(const std::string& text) {
    auto parse_plain = [&](const std::string& part) {
        double value = 0.0;
        const auto* end = part.data() + part.size();
        auto [ptr, ec] = std::from_chars(part.data(), end, value);
        if (ec != std::errc() || ptr != end || part.empty()) throw InputError("'" + text + "' is not a number");
        return value;
    };
    const auto slash = text.find('/');
    if (slash == std::string::npos) return parse_plain(text);
    const double num = parse_plain(text.substr(0, slash));
    const double den = parse_plain(text.substr(slash + 1));
    if (den == 0.0) throw InputError("'" + text + "' divides by zero");
    return num / den;
}

ChainStrengthPolicy parse_policy(const std::string& text) {
    const auto colon = text.find(':');
    const std::string name = text.substr(0, colon);
    const std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);
    auto positive = [&](const std::string& part) {
        const double value = parse_number(part);
        if (!(value > 0.0)) throw InputError("policy parameter '" + part + "' must be positive");
        return value;
    };
    if (name == "easy") {
        return EasyPolicy{arg.empty() ? std::nullopt : std::optional<double>(positive(arg))};
    }
    if (name == "tight") {
        return TightPolicy{arg.empty() ? std::nullopt : std::optional<double>(positive(arg))};
    }
    if (name == "gap") {
        if (arg.empty()) throw InputError("gap policy needs targets, e.g. gap:0.5 or gap:0.25,0.5");
        GapPolicy policy;
        std::size_t start = 0;
        while (start <= arg.size()) {
            const auto comma = arg.find(',', start);
            policy.g.push_back(positive(arg.substr(start, comma - start)));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        return policy;
    }
    throw InputError("unknown policy '" + text + "'; expected easy[:M], tight[:M] or gap:G[,G...]");
}

PenaltyRule parse_penalty(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw InputError("penalty must be strict:DELTA or uniform:J");
    const std::string name = text.substr(0, colon);
    const double value = parse_number(text.substr(colon + 1));
    if (name == "strict") {
        if (!(value > 0.0)) throw InputError("strict penalty needs a positive delta");
        return StrictMinPlus{value};
    }
    if (name == "uniform") {
        if (value == 0.0) throw InputError("uniform penalty must be non-zero");
        return UniformPenalty{value};
    }
    throw InputError("unknown penalty rule '" + name + "'");
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& err) {
        throw InputError(path + ": " + err.what());
    }
}

void write_json_file(const std::string& path, const json& doc) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    out << doc.dump(2) << '\n';
}

}  // namespace minorembed::io
