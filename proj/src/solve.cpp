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

#include "minorembed/solve.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <map>
#include <thread>

namespace minorembed {

namespace {

unsigned resolve_threads(unsigned requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("MINOREMBED_THREADS")) {
        const long value = std::strtol(env, nullptr, 10);
        if (value > 0) return static_cast<unsigned>(value);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

// Levels below a moving ceiling; once a level is evicted, nothing at or above
// it is accepted again, so the kept levels are always complete.
class LevelTable {
public:
    LevelTable(double tol, std::size_t max_levels) : tol_(tol), max_levels_(std::max<std::size_t>(max_levels, 2)) {}

    void add(double e, std::uint64_t count) {
        if (e >= ceiling_) {
            truncated_ = true;
            return;
        }
        auto it = levels_.lower_bound(e - tol_);
        if (it != levels_.end() && it->first <= e + tol_) {
            it->second += count;
            return;
        }
        levels_.emplace(e, count);
        if (levels_.size() > max_levels_) {
            auto last = std::prev(levels_.end());
            ceiling_ = std::min(ceiling_, last->first);
            levels_.erase(last);
            truncated_ = true;
        }
    }

    void merge(const LevelTable& other) {
        ceiling_ = std::min(ceiling_, other.ceiling_);
        truncated_ = truncated_ || other.truncated_;
        for (const auto& [e, count] : other.levels_) add(e, count);
        while (!levels_.empty() && std::prev(levels_.end())->first >= ceiling_) levels_.erase(std::prev(levels_.end()));
    }

    const std::map<double, std::uint64_t>& levels() const { return levels_; }
    bool truncated() const { return truncated_; }

private:
    double tol_;
    std::size_t max_levels_;
    double ceiling_ = std::numeric_limits<double>::infinity();
    bool truncated_ = false;
    std::map<double, std::uint64_t> levels_;
};

class GroundTable {
public:
    GroundTable(double tol, std::size_t cap) : tol_(tol), cap_(cap) {}

    void add(double e, std::uint64_t mask) {
        if (count_ > 0 && e > best_ + tol_) return;
        if (count_ == 0 || e < best_ - tol_) {
            best_ = e;
            masks_.clear();
            count_ = 0;
            truncated_ = false;
        }
        ++count_;
        if (masks_.size() < cap_) {
            masks_.push_back(mask);
        } else {
            truncated_ = true;
        }
    }

    void merge(const GroundTable& other) {
        if (other.count_ == 0) return;
        if (count_ > 0 && other.best_ > best_ + tol_) return;
        if (count_ == 0 || other.best_ < best_ - tol_) {
            *this = other;
            return;
        }
        count_ += other.count_;
        for (auto mask : other.masks_) {
            if (masks_.size() < cap_) {
                masks_.push_back(mask);
            } else {
                truncated_ = true;
            }
        }
        truncated_ = truncated_ || other.truncated_;
    }

    double best() const { return best_; }
    std::uint64_t count() const { return count_; }
    bool truncated() const { return truncated_; }
    std::vector<std::uint64_t> sorted_masks() const {
        auto out = masks_;
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    double tol_;
    std::size_t cap_;
    double best_ = 0.0;
    std::uint64_t count_ = 0;
    bool truncated_ = false;
    std::vector<std::uint64_t> masks_;
};

struct Neighbor {
    Vertex vertex;
    double weight;
};

std::vector<std::vector<Neighbor>> weighted_adjacency(const Graph& g, std::span<const double> weights) {
    std::vector<std::vector<Neighbor>> adj(g.num_vertices());
    const auto edges = g.edges();
    for (std::size_t k = 0; k < edges.size(); ++k) {
        adj[edges[k].u].push_back({edges[k].v, weights[k]});
        adj[edges[k].v].push_back({edges[k].u, weights[k]});
    }
    return adj;
}

// Ising energy with bit i set <-> s_i = +1.
struct IsingModel {
    std::vector<double> h;
    std::vector<std::vector<Neighbor>> adj;

    explicit IsingModel(const IsingProblem& p)
        : h(p.h().begin(), p.h().end()), adj(weighted_adjacency(p.graph(), p.couplings())) {}

    static double spin(std::uint64_t mask, std::size_t i) { return (mask >> i) & 1 ? 1.0 : -1.0; }

    double value(std::uint64_t mask) const {
        double e = 0.0;
        for (std::size_t i = 0; i < h.size(); ++i) {
            e += h[i] * spin(mask, i);
            for (const auto& nb : adj[i]) {
                if (nb.vertex > i) e += nb.weight * spin(mask, i) * spin(mask, nb.vertex);
            }
        }
        return e;
    }

    // Change when bit b of mask flips.
    double delta(std::uint64_t mask, std::size_t b) const {
        double field = h[b];
        for (const auto& nb : adj[b]) field += nb.weight * spin(mask, nb.vertex);
        return -2.0 * spin(mask, b) * field;
    }
};

// -Y(x) with bit i <-> x_i, so the minimum of this model is the QUBO maximum.
struct NegatedQuboModel {
    std::vector<double> c;
    std::vector<std::vector<Neighbor>> adj;

    explicit NegatedQuboModel(const QuboProblem& q)
        : c(q.c().begin(), q.c().end()), adj(weighted_adjacency(q.graph(), q.penalties())) {}

    double value(std::uint64_t mask) const {
        double y = 0.0;
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (!((mask >> i) & 1)) continue;
            y += c[i];
            for (const auto& nb : adj[i]) {
                if (nb.vertex > i && ((mask >> nb.vertex) & 1)) y -= nb.weight;
            }
        }
        return -y;
    }

    double delta(std::uint64_t mask, std::size_t b) const {
        double gain = c[b];
        for (const auto& nb : adj[b]) {
            if ((mask >> nb.vertex) & 1) gain -= nb.weight;
        }
        // Setting the bit adds gain to Y; clearing it removes it.
        return (mask >> b) & 1 ? gain : -gain;
    }
};

struct PartitionResult {
    LevelTable levels;
    GroundTable ground;
};

template <class Model>
std::pair<LevelTable, GroundTable> enumerate(const Model& model, std::size_t n, const SpectrumOptions& options,
                                             bool track_levels) {
    const unsigned threads = resolve_threads(options.threads);
    std::size_t fixed_bits = 0;
    while (fixed_bits < n && fixed_bits < 10 && (std::size_t{1} << fixed_bits) < 4 * threads) ++fixed_bits;
    const std::size_t free_bits = n - fixed_bits;
    const std::size_t partitions = std::size_t{1} << fixed_bits;

    std::vector<PartitionResult> results;
    results.reserve(partitions);
    for (std::size_t t = 0; t < partitions; ++t) {
        results.push_back({LevelTable(options.tol, options.max_levels), GroundTable(options.tol, options.ground_state_cap)});
    }

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t t = next++; t < partitions; t = next++) {
            auto& r = results[t];
            std::uint64_t mask = static_cast<std::uint64_t>(t) << free_bits;
            double e = model.value(mask);
            const std::uint64_t steps = std::uint64_t{1} << free_bits;
            for (std::uint64_t step = 1;; ++step) {
                if (track_levels) r.levels.add(e, 1);
                r.ground.add(e, mask);
                if (step == steps) break;
                const auto b = static_cast<std::size_t>(std::countr_zero(step));
                e += model.delta(mask, b);
                mask ^= std::uint64_t{1} << b;
            }
        }
    };
    const unsigned spawn = static_cast<unsigned>(std::min<std::size_t>(threads, partitions));
    if (spawn <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned k = 0; k < spawn; ++k) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    LevelTable levels(options.tol, options.max_levels);
    GroundTable ground(options.tol, options.ground_state_cap);
    for (const auto& r : results) {
        if (track_levels) levels.merge(r.levels);
        ground.merge(r.ground);
    }
    return {std::move(levels), std::move(ground)};
}

void check_cap(std::size_t n, const SpectrumOptions& options) {
    if (n > options.max_n || n > 62) throw CapExceeded(n, std::min<std::size_t>(options.max_n, 62));
}

SpinConfig spins_of(std::uint64_t mask, std::size_t n) {
    SpinConfig s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = (mask >> i) & 1 ? 1 : -1;
    return s;
}

}  // namespace

std::optional<double> SpectrumReport::gap() const {
    if (levels.size() < 2) return std::nullopt;
    return levels[1].energy - levels[0].energy;
}

SpectrumReport enumerate_spectrum(const IsingProblem& p, const SpectrumOptions& options) {
    if (!(options.tol >= 0.0)) throw std::domain_error("tolerance must be non-negative");
    const std::size_t n = p.size();
    check_cap(n, options);
    auto [levels, ground] = enumerate(IsingModel(p), n, options, true);

    SpectrumReport report;
    for (const auto& [e, count] : levels.levels()) report.levels.push_back({e, count});
    report.levels_truncated = levels.truncated();
    for (auto mask : ground.sorted_masks()) report.ground_states.push_back(spins_of(mask, n));
    report.ground_state_count = ground.count();
    report.ground_states_truncated = ground.truncated();
    report.state_count = std::uint64_t{1} << n;
    return report;
}

QuboMaxResult solve_qubo_max(const QuboProblem& q, const SpectrumOptions& options) {
    const std::size_t n = q.size();
    check_cap(n, options);
    auto [levels, ground] = enumerate(NegatedQuboModel(q), n, options, false);

    QuboMaxResult result;
    result.max_value = -ground.best();
    for (auto mask : ground.sorted_masks()) {
        BitConfig x(n);
        for (std::size_t i = 0; i < n; ++i) x[i] = (mask >> i) & 1;
        result.argmax.push_back(std::move(x));
    }
    result.argmax_count = ground.count();
    result.argmax_truncated = ground.truncated();
    return result;
}

CorrespondenceReport verify_correspondence(const IsingProblem& orig, const EmbeddedIsing& emb, double tol,
                                           const SpectrumOptions& options) {
    if (emb.logical_size() != orig.size()) {
        throw std::domain_error("embedded problem was built for " + std::to_string(emb.logical_size()) +
                                " logical vertices, original has " + std::to_string(orig.size()));
    }
    SpectrumOptions opts = options;
    opts.tol = tol;
    const auto original = enumerate_spectrum(orig, opts);
    const auto embedded = enumerate_spectrum(emb.problem, opts);

    CorrespondenceReport report;
    report.original_min = original.ground_energy();
    report.embedded_min = embedded.ground_energy();
    report.offset = emb.offset;
    report.original_gap = original.gap();
    report.embedded_gap = embedded.gap();
    report.original_ground_states = original.ground_states;

    if (original.ground_states_truncated || embedded.ground_states_truncated) {
        report.details.push_back("ground-state set exceeds the materialization cap; correspondence not decided");
    }

    report.chains_aligned = true;
    for (const auto& s : embedded.ground_states) {
        bool aligned = true;
        for (std::size_t i = 0; i < emb.chain_edges.size() && aligned; ++i) {
            for (const auto& c : emb.chain_edges[i]) {
                if (s[c.edge.u] != s[c.edge.v]) {
                    aligned = false;
                    report.details.push_back("chain misalignment: logical vertex " + std::to_string(i) +
                                             " breaks at embedded coupler " + to_string(c.edge));
                    break;
                }
            }
        }
        if (!aligned) {
            report.chains_aligned = false;
            continue;
        }
        SpinConfig logical(orig.size(), 0);
        for (std::size_t k = 0; k < s.size(); ++k) logical[emb.owner[k]] = s[k];
        report.projected_ground_states.push_back(std::move(logical));
    }
    std::sort(report.projected_ground_states.begin(), report.projected_ground_states.end());
    auto expected = original.ground_states;
    std::sort(expected.begin(), expected.end());
    report.ground_sets_match = report.chains_aligned && !original.ground_states_truncated &&
                               !embedded.ground_states_truncated &&
                               embedded.ground_state_count == original.ground_state_count &&
                               report.projected_ground_states == expected;
    if (report.chains_aligned && !report.ground_sets_match) {
        report.details.push_back("projected ground states differ from the original ground states");
    }

    report.offset_identity = std::abs(report.embedded_min - (report.original_min + emb.offset)) <= tol;
    if (!report.offset_identity) report.details.push_back("min E_emb differs from min E + offset");

    if (!emb.gap_targets.empty()) {
        const double inf = std::numeric_limits<double>::infinity();
        const double target = std::min(*std::min_element(emb.gap_targets.begin(), emb.gap_targets.end()),
                                       report.original_gap.value_or(inf));
        const double realized = report.embedded_gap.value_or(inf);
        report.gap_bound_ok = realized >= target - tol;
        report.gap_bound_attained = std::abs(realized - target) <= tol || (realized == inf && target == inf);
        if (!*report.gap_bound_ok) report.details.push_back("embedded gap below min(min g_i, original gap)");
    }

    report.ok = report.chains_aligned && report.ground_sets_match && report.offset_identity;
    return report;
}

std::vector<ChainThreshold> min_working_F(const IsingProblem& orig, const MinorEmbedding& e, double resolution,
                                          const SpectrumOptions& options) {
    if (!(resolution > 0.0)) throw std::domain_error("resolution must be positive");
    check_cap(e.physical_size(), options);
    const std::size_t n = orig.size();

    // Leaf-uniform split reproduces the tight-rule biases.
    std::vector<std::vector<double>> split(n);
    std::vector<std::vector<double>> base_F(n);
    for (Vertex i = 0; i < n; ++i) {
        const double C = compute_C(orig, i);
        const auto tree_leaves = leaves(e, i);
        for (Vertex p : e.trees.at(i)) {
            const bool leaf = std::binary_search(tree_leaves.begin(), tree_leaves.end(), p);
            split[i].push_back(leaf ? C / static_cast<double>(tree_leaves.size()) : 0.0);
        }
        base_F[i].assign(e.tree_edges.at(i).size(), -tight_bound(orig, e, i) - default_margin(C));
    }

    std::vector<ChainThreshold> out;
    for (Vertex i = 0; i < n; ++i) {
        ChainThreshold t;
        t.vertex = i;
        t.tight_bound = tight_bound(orig, e, i);
        t.easy_bound = easy_bound(orig, i);
        t.applicable = !e.tree_edges.at(i).empty();
        if (!t.applicable) {
            out.push_back(t);
            continue;
        }
        auto works = [&](double magnitude) {
            auto F = base_F;
            F[i].assign(F[i].size(), -magnitude);
            return verify_correspondence(orig, set_params_custom_split(e, orig, split, F), options.tol, options).ok;
        };
        double lo = 0.0;
        double hi = t.easy_bound + 1.0;
        if (!works(hi)) {
            t.empirical = std::numeric_limits<double>::quiet_NaN();
            out.push_back(t);
            continue;
        }
        while (hi - lo > resolution) {
            const double mid = 0.5 * (lo + hi);
            if (mid > 0.0 && works(mid)) {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        t.empirical = hi;
        out.push_back(t);
    }
    return out;
}

}  // namespace minorembed
