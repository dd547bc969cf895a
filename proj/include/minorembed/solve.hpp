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

#include "minorembed/embedding.hpp"
#include "minorembed/model.hpp"
#include "minorembed/params.hpp"

namespace minorembed {

// Refusal to enumerate a problem larger than the configured cap.
class CapExceeded : public std::runtime_error {
public:
    CapExceeded(std::size_t n, std::size_t cap)
        : std::runtime_error("problem has " + std::to_string(n) + " variables, enumeration cap is " +
                             std::to_string(cap)),
          n_(n),
          cap_(cap) {}

    std::size_t size() const { return n_; }
    std::size_t cap() const { return cap_; }

private:
    std::size_t n_;
    std::size_t cap_;
};

struct SpectrumOptions {
    // Energies within tol of a level's first-seen representative join that level.
    double tol = 1e-9;
    std::size_t max_n = 24;
    // Ground states beyond this count are counted but not materialized.
    std::size_t ground_state_cap = std::size_t{1} << 16;
    // Only the lowest max_levels levels are kept.
    std::size_t max_levels = std::size_t{1} << 16;
    // 0 picks MINOREMBED_THREADS or the hardware concurrency.
    unsigned threads = 0;
};

struct Level {
    double energy = 0.0;
    std::uint64_t count = 0;
};

struct SpectrumReport {
    std::vector<Level> levels;
    bool levels_truncated = false;
    // Ascending by the bit pattern (bit i set <-> s_i = +1).
    std::vector<SpinConfig> ground_states;
    std::uint64_t ground_state_count = 0;
    bool ground_states_truncated = false;
    std::uint64_t state_count = 0;

    double ground_energy() const { return levels.front().energy; }
    // levels[1] - levels[0]; nullopt with a single level.
    std::optional<double> gap() const;
};

// Visits all 2^n spin assignments. Throws CapExceeded when n > options.max_n.
SpectrumReport enumerate_spectrum(const IsingProblem& p, const SpectrumOptions& options = {});

struct QuboMaxResult {
    double max_value = 0.0;
    std::vector<BitConfig> argmax;
    std::uint64_t argmax_count = 0;
    bool argmax_truncated = false;
};

// Exhaustive maximization of Y, evaluated directly in bit space.
QuboMaxResult solve_qubo_max(const QuboProblem& q, const SpectrumOptions& options = {});

struct CorrespondenceReport {
    bool ok = false;
    bool chains_aligned = false;
    bool ground_sets_match = false;
    bool offset_identity = false;
    // Set only when the embedded problem carries gap targets.
    std::optional<bool> gap_bound_ok;
    // Diagnostic: embedded gap equals min(min g_i, original gap).
    std::optional<bool> gap_bound_attained;

    std::vector<SpinConfig> projected_ground_states;
    std::vector<SpinConfig> original_ground_states;
    double original_min = 0.0;
    double embedded_min = 0.0;
    double offset = 0.0;
    std::optional<double> original_gap;
    std::optional<double> embedded_gap;
    std::vector<std::string> details;
};

// Compares the ground states of orig and emb.problem: every embedded ground
// state must keep its chains aligned and project onto the original ground
// states one to one, with min E_emb = min E + offset.
CorrespondenceReport verify_correspondence(const IsingProblem& orig, const EmbeddedIsing& emb, double tol = 1e-9,
                                           const SpectrumOptions& options = {});

struct ChainThreshold {
    Vertex vertex = 0;
    bool applicable = false;
    // Smallest |F| found to preserve the correspondence, within resolution.
    double empirical = 0.0;
    double tight_bound = 0.0;
    double easy_bound = 0.0;
};

// Per logical vertex with a non-trivial tree, binary-searches the shared
// chain strength magnitude at which verify_correspondence starts to pass,
// with the leaf-uniform bias split and every other tree at its tight bound.
// Requires C_i >= 0 everywhere.
std::vector<ChainThreshold> min_working_F(const IsingProblem& orig, const MinorEmbedding& e, double resolution,
                                          const SpectrumOptions& options = {});

}  // namespace minorembed
