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

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "minorembed/embedding.hpp"
#include "minorembed/model.hpp"
#include "minorembed/params.hpp"
#include "minorembed/transform.hpp"
#include "minorembed/wmis.hpp"

namespace minorembed::io {

using json = nlohmann::json;

// Malformed or inconsistent input document.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using Problem = std::variant<IsingProblem, QuboProblem, WmisInstance>;

struct ProblemDocument {
    Problem problem;
    std::vector<std::string> warnings;
    // Extra top-level blocks ("metadata", "affine", ...) kept verbatim.
    json extra = json::object();
};

std::string problem_type(const Problem& p);

// {"type", "n", "linear": {"i": value}, "quadratic": [[u, v, value], ...]}.
// WMIS documents carry weights in "linear" and their graph in "edges".
ProblemDocument parse_problem(const json& doc);
json problem_to_json(const Problem& p);

json affine_to_json(const AffineLink& link);

// Hardware block: {"kind", "rows", "cols"} for lattices (n and edges are
// written too), or {"n", "edges"} for a custom graph.
HardwareGraph parse_hardware(const json& block);
json hardware_to_json(const HardwareGraph& hw);

// {"hardware", "chains", "chain_edges"?, "edge_assignment"?}. Missing tree
// edges become a BFS spanning tree; missing assignments are derived. Throws
// InputError listing every violation when the result is not a valid embedding.
MinorEmbedding parse_embedding(const json& doc, const Graph& logical);

struct EmbeddingReading {
    MinorEmbedding embedding;
    HardwareGraph hardware;
    // Empty when the embedding is valid.
    std::vector<std::string> violations;
};

// Like parse_embedding, but structural violations are returned as data.
// Malformed documents still throw InputError.
EmbeddingReading read_embedding(const json& doc, const Graph& logical);
json embedding_to_json(const MinorEmbedding& e, const HardwareGraph& hw);

// Embedded problem as a problem document with a "metadata" block.
json embedded_to_json(const EmbeddedIsing& emb, const std::string& policy,
                      const std::optional<Preprocessing>& preprocessing = std::nullopt);

struct EmbeddedDocument {
    EmbeddedIsing embedded;
    std::string policy;
    // Present when the problem was preprocessed before embedding.
    std::vector<FixedSpin> fixed;
    std::vector<Vertex> residual_vertices;
    bool preprocessed = false;
};

EmbeddedDocument parse_embedded(const json& doc);

// "0.25", "1e-3" or a fraction "1/16".
double parse_number(const std::string& text);

ChainStrengthPolicy parse_policy(const std::string& text);
PenaltyRule parse_penalty(const std::string& text);

json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& doc);

}  // namespace minorembed::io
