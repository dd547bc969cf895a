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

#include "minorembed/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "minorembed/embedding.hpp"
#include "minorembed/io.hpp"
#include "minorembed/params.hpp"
#include "minorembed/solve.hpp"
#include "minorembed/transform.hpp"
#include "minorembed/wmis.hpp"

namespace minorembed::cli {

using io::InputError;
using io::json;

std::string format_number(double value) {
    char buffer[64];
    auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
    return ec == std::errc() ? std::string(buffer, ptr) : std::string("nan");
}

namespace {

std::string spin_string(const SpinConfig& s) {
    std::string out;
    for (auto v : s) out += v > 0 ? '+' : '-';
    return out;
}

std::string bit_string(const BitConfig& x) {
    std::string out;
    for (auto v : x) out += v ? '1' : '0';
    return out;
}

std::string vertex_set(const std::vector<Vertex>& vs) {
    std::string out = "{";
    for (std::size_t k = 0; k < vs.size(); ++k) out += (k ? "," : "") + std::to_string(vs[k]);
    return out + "}";
}

std::string optional_number(const std::optional<double>& v) { return v ? format_number(*v) : "none"; }

PenaltyRule default_penalty(const WmisInstance& w) {
    const auto weights = w.weights();
    const double lightest = weights.empty() ? 1.0 : *std::min_element(weights.begin(), weights.end());
    return StrictMinPlus{lightest / 4.0};
}

std::string penalty_string(const PenaltyRule& rule) {
    if (const auto* strict = std::get_if<StrictMinPlus>(&rule)) return "strict:" + format_number(strict->delta);
    return "uniform:" + format_number(std::get<UniformPenalty>(rule).J);
}

io::ProblemDocument load_problem(const std::string& path, std::ostream& err) {
    auto doc = io::parse_problem(io::read_json_file(path));
    for (const auto& w : doc.warnings) err << "warning: " << w << '\n';
    return doc;
}

// Ising view of an ising or qubo document.
IsingProblem as_ising(const io::Problem& problem) {
    if (const auto* ising = std::get_if<IsingProblem>(&problem)) return *ising;
    if (const auto* qubo = std::get_if<QuboProblem>(&problem)) return qubo_to_ising(*qubo).first;
    throw InputError("expected an ising or qubo problem; convert wmis input with 'convert --to qubo' first");
}

HardwareKind parse_kind(const std::string& kind) {
    if (kind == "square") return HardwareKind::square_lattice;
    if (kind == "extended") return HardwareKind::extended_grid;
    throw InputError("unknown hardware kind '" + kind + "'; expected square or extended");
}

struct HardwareArgs {
    std::string file;
    std::string kind;
    long rows = 0;
    long cols = 0;
};

HardwareGraph load_hardware(const HardwareArgs& a) {
    if (!a.file.empty()) {
        auto doc = io::read_json_file(a.file);
        return io::parse_hardware(doc.contains("hardware") ? doc.at("hardware") : doc);
    }
    if (a.kind.empty()) throw InputError("give --hardware FILE or --kind with --rows and --cols");
    try {
        return make_hardware(parse_kind(a.kind), a.rows, a.cols);
    } catch (const std::domain_error& e) {
        throw InputError(e.what());
    }
}

// Gap targets given once are shared by every vertex.
ChainStrengthPolicy widen_policy(ChainStrengthPolicy policy, std::size_t n) {
    if (auto* gap = std::get_if<GapPolicy>(&policy)) {
        if (gap->g.size() == 1) {
            gap->g.assign(n, gap->g.front());
        } else if (gap->g.size() != n) {
            throw InputError("gap policy lists " + std::to_string(gap->g.size()) + " targets for " +
                             std::to_string(n) + " logical vertices");
        }
    }
    return policy;
}

ChainStrengthPolicy restrict_policy(const ChainStrengthPolicy& policy, const std::vector<Vertex>& keep) {
    if (const auto* gap = std::get_if<GapPolicy>(&policy)) {
        GapPolicy out;
        for (Vertex v : keep) out.g.push_back(gap->g.at(v));
        return out;
    }
    return policy;
}

bool needs_slack(const ChainStrengthPolicy& policy) { return !std::holds_alternative<EasyPolicy>(policy); }

std::vector<Vertex> negative_slack(const IsingProblem& p) {
    std::vector<Vertex> bad;
    for (Vertex i = 0; i < p.size(); ++i) {
        if (compute_C(p, i) < 0.0) bad.push_back(i);
    }
    return bad;
}

void print_parameter_table(std::ostream& out, const EmbeddedIsing& emb, const MinorEmbedding& e,
                           const IsingProblem& p, const std::vector<Vertex>& names) {
    out << std::left << std::setw(8) << "vertex" << std::setw(12) << "C" << std::setw(8) << "leaves"
        << std::setw(12) << "tight" << std::setw(12) << "easy" << "F\n";
    for (Vertex i = 0; i < p.size(); ++i) {
        const auto& chain = emb.chain_edges[i];
        out << std::setw(8) << names[i] << std::setw(12) << format_number(compute_C(p, i)) << std::setw(8)
            << leaf_count(e, i) << std::setw(12) << format_number(tight_bound(p, e, i)) << std::setw(12)
            << format_number(easy_bound(p, i)) << (chain.empty() ? "-" : format_number(chain.front().strength))
            << '\n';
    }
    out << "offset " << format_number(emb.offset) << '\n';
}

void print_report(std::ostream& out, const CorrespondenceReport& r) {
    out << "ok: " << (r.ok ? "true" : "false") << '\n'
        << "chains_aligned: " << (r.chains_aligned ? "true" : "false") << '\n'
        << "ground_sets_match: " << (r.ground_sets_match ? "true" : "false") << '\n'
        << "offset_identity: " << (r.offset_identity ? "true" : "false") << '\n'
        << "original_min: " << format_number(r.original_min) << '\n'
        << "embedded_min: " << format_number(r.embedded_min) << '\n'
        << "offset: " << format_number(r.offset) << '\n'
        << "original_gap: " << optional_number(r.original_gap) << '\n'
        << "embedded_gap: " << optional_number(r.embedded_gap) << '\n';
    if (r.gap_bound_ok) {
        out << "gap_bound_ok: " << (*r.gap_bound_ok ? "true" : "false") << '\n'
            << "gap_bound_attained: " << (*r.gap_bound_attained ? "true" : "false") << '\n';
    }
    out << "projected_ground_states:";
    for (const auto& s : r.projected_ground_states) out << ' ' << spin_string(s);
    out << '\n';
    // Misalignment details repeat per ground state; show each once.
    std::vector<std::string> details = r.details;
    std::sort(details.begin(), details.end());
    details.erase(std::unique(details.begin(), details.end()), details.end());
    for (const auto& d : details) out << "detail: " << d << '\n';
}

// ---------------------------------------------------------------- commands

int gen_hardware(const std::string& kind, long rows, long cols, const std::string& out_path, std::ostream& out) {
    HardwareGraph hw;
    try {
        hw = make_hardware(parse_kind(kind), rows, cols);
    } catch (const std::domain_error& e) {
        throw InputError(e.what());
    }
    io::write_json_file(out_path, json{{"hardware", io::hardware_to_json(hw)}});
    out << to_string(hw.kind) << ' ' << hw.rows << 'x' << hw.cols << ": " << hw.base.num_vertices() << " vertices, "
        << hw.base.num_edges() << " edges, max degree " << hw.max_degree << '\n';
    return kOk;
}

int convert(const std::string& in_path, const std::string& to, const std::string& penalty_text,
            const std::string& out_path, std::ostream& out, std::ostream& err) {
    auto doc = load_problem(in_path, err);
    const auto from = io::problem_type(doc.problem);
    if (to != "ising" && to != "qubo") throw InputError("--to must be ising or qubo");
    if (from == to) throw InputError("input is already of type " + to);

    json result;
    if (const auto* ising = std::get_if<IsingProblem>(&doc.problem)) {
        auto [qubo, link] = ising_to_qubo(*ising);
        result = io::problem_to_json(qubo);
        result["affine"] = io::affine_to_json(link);
    } else if (const auto* qubo = std::get_if<QuboProblem>(&doc.problem)) {
        auto [converted, link] = qubo_to_ising(*qubo);
        result = io::problem_to_json(converted);
        result["affine"] = io::affine_to_json(link);
    } else {
        const auto& w = std::get<WmisInstance>(doc.problem);
        const auto rule = penalty_text.empty() ? default_penalty(w) : io::parse_penalty(penalty_text);
        const auto reduced = wmis_to_qubo(w, rule);
        if (!reduced.strict_condition) {
            err << "warning: penalties do not exceed min{c_i, c_j} on every edge; maximizers may not be independent\n";
        }
        if (to == "qubo") {
            result = io::problem_to_json(reduced.qubo);
        } else {
            auto [converted, link] = qubo_to_ising(reduced.qubo);
            result = io::problem_to_json(converted);
            result["affine"] = io::affine_to_json(link);
        }
        result["penalty"] = {{"rule", penalty_string(rule)},
                             {"strict_condition", reduced.strict_condition},
                             {"value_condition", reduced.value_condition}};
    }
    io::write_json_file(out_path, result);
    out << "converted " << from << " -> " << to << " (" << result.at("n").get<std::size_t>() << " variables)\n";
    return kOk;
}

int embed(const std::string& problem_path, const HardwareArgs& hw_args, std::uint64_t seed, std::size_t attempts,
          const std::string& out_path, std::ostream& out, std::ostream& err) {
    auto doc = load_problem(problem_path, err);
    const Graph logical = std::visit([](const auto& p) { return p.graph(); }, doc.problem);
    const auto hw = load_hardware(hw_args);
    auto e = greedy_chain_embed(logical, hw, seed, GreedyOptions{attempts});
    if (!e) {
        err << "no embedding found after " << attempts << " attempts\n";
        return kVerificationFailed;
    }
    io::write_json_file(out_path, io::embedding_to_json(*e, hw));
    out << "embedded " << logical.num_vertices() << " vertices on " << e->physical_size() << " qubits, class "
        << to_string(classify(*e)) << '\n';
    return kOk;
}

int validate_cmd(const std::string& problem_path, const std::string& embedding_path, std::ostream& out,
                 std::ostream& err) {
    auto doc = load_problem(problem_path, err);
    const Graph logical = std::visit([](const auto& p) { return p.graph(); }, doc.problem);
    auto reading = io::read_embedding(io::read_json_file(embedding_path), logical);
    if (!reading.violations.empty()) {
        out << "invalid\n";
        for (const auto& v : reading.violations) out << "violation: " << v << '\n';
        return kVerificationFailed;
    }
    const auto& e = reading.embedding;
    out << "valid\nclass: " << to_string(classify(e)) << "\nqubits: " << e.physical_size() << '\n';
    for (Vertex i = 0; i < logical.num_vertices(); ++i) {
        out << "vertex " << i << ": tree " << vertex_set(e.trees[i]) << ", leaves " << vertex_set(leaves(e, i))
            << '\n';
    }
    return kOk;
}

int set_params_cmd(const std::string& problem_path, const std::string& embedding_path,
                   const std::string& policy_text, bool preprocess, const std::string& out_path, std::ostream& out,
                   std::ostream& err) {
    auto doc = load_problem(problem_path, err);
    const auto ising = as_ising(doc.problem);
    auto e = io::parse_embedding(io::read_json_file(embedding_path), ising.graph());
    auto policy = widen_policy(io::parse_policy(policy_text), ising.size());

    std::optional<Preprocessing> pre;
    IsingProblem target = ising;
    std::vector<Vertex> names(ising.size());
    for (Vertex i = 0; i < names.size(); ++i) names[i] = i;

    if (preprocess) {
        pre = preprocess_fix(ising);
        for (const auto& f : pre->fixed) {
            out << "fixed vertex " << f.vertex << " to " << (f.spin > 0 ? "+1" : "-1") << '\n';
        }
        e = restrict_embedding(e, pre->residual_vertices);
        policy = restrict_policy(policy, pre->residual_vertices);
        target = pre->residual;
        names = pre->residual_vertices;
    } else if (needs_slack(policy)) {
        const auto bad = negative_slack(ising);
        if (!bad.empty()) {
            err << "C_i < 0 at vertices " << vertex_set(bad) << "; rerun with --preprocess\n";
            return kPreconditionError;
        }
    }
    const auto emb = set_params(e, target, policy);
    print_parameter_table(out, emb, e, target, names);
    io::write_json_file(out_path, io::embedded_to_json(emb, to_string(policy), pre));
    return kOk;
}

int solve_cmd(const std::string& problem_path, std::size_t max_n, std::size_t show, double tol, std::ostream& out,
              std::ostream& err) {
    auto doc = load_problem(problem_path, err);
    SpectrumOptions options;
    options.max_n = max_n;
    options.tol = tol;

    auto report_qubo = [&](const QuboProblem& q) {
        const auto result = solve_qubo_max(q, options);
        out << "max value: " << format_number(result.max_value) << '\n'
            << "maximizers: " << result.argmax_count << (result.argmax_truncated ? " (list truncated)" : "") << '\n';
        std::size_t dependent = 0;
        for (std::size_t k = 0; k < result.argmax.size(); ++k) {
            const auto set = extract_independent_set(q, result.argmax[k]);
            if (!set.independent) ++dependent;
            if (k < show) {
                out << "  " << bit_string(result.argmax[k]) << " support " << vertex_set(set.vertices)
                    << (set.independent ? " independent" : " NOT independent") << '\n';
            }
        }
        if (dependent > 0) out << "note: " << dependent << " maximizer(s) have a non-independent support\n";
    };

    if (const auto* ising = std::get_if<IsingProblem>(&doc.problem)) {
        const auto spectrum = enumerate_spectrum(*ising, options);
        out << "min energy: " << format_number(spectrum.ground_energy()) << '\n'
            << "gap: " << optional_number(spectrum.gap()) << '\n'
            << "ground states: " << spectrum.ground_state_count
            << (spectrum.ground_states_truncated ? " (list truncated)" : "") << '\n';
        for (std::size_t k = 0; k < spectrum.ground_states.size() && k < show; ++k) {
            out << "  " << spin_string(spectrum.ground_states[k]) << '\n';
        }
    } else if (const auto* qubo = std::get_if<QuboProblem>(&doc.problem)) {
        report_qubo(*qubo);
    } else {
        const auto& w = std::get<WmisInstance>(doc.problem);
        const auto rule = default_penalty(w);
        out << "penalty: " << penalty_string(rule) << '\n';
        report_qubo(wmis_to_qubo(w, rule).qubo);
    }
    return kOk;
}

int verify_cmd(const std::string& original_path, const std::string& embedded_path, double tol, std::size_t max_n,
               std::ostream& out, std::ostream& err) {
    auto original = as_ising(load_problem(original_path, err).problem);
    const auto embedded = io::parse_embedded(io::read_json_file(embedded_path));
    if (embedded.preprocessed) {
        auto pre = preprocess_fix(original);
        bool same = pre.residual_vertices == embedded.residual_vertices && pre.fixed.size() == embedded.fixed.size();
        for (std::size_t k = 0; same && k < pre.fixed.size(); ++k) {
            same = pre.fixed[k].vertex == embedded.fixed[k].vertex && pre.fixed[k].spin == embedded.fixed[k].spin;
        }
        if (!same) throw InputError("embedded problem was preprocessed differently from the original");
        original = pre.residual;
    }
    if (embedded.embedded.logical_size() != original.size()) {
        throw InputError("embedded problem covers " + std::to_string(embedded.embedded.logical_size()) +
                         " logical vertices, original has " + std::to_string(original.size()));
    }
    SpectrumOptions options;
    options.max_n = max_n;
    const auto report = verify_correspondence(original, embedded.embedded, tol, options);
    print_report(out, report);
    return report.ok ? kOk : kVerificationFailed;
}

struct PipelineArgs {
    std::string wmis_path;
    std::string embedding_path;
    HardwareArgs hardware;
    std::uint64_t seed = 0;
    std::string penalty;
    std::string policy = "tight:1/16";
    double tol = 1e-9;
    std::string out_dir;
};

int pipeline(const PipelineArgs& a, std::ostream& out, std::ostream& err) {
    auto doc = load_problem(a.wmis_path, err);
    const auto* w = std::get_if<WmisInstance>(&doc.problem);
    if (!w) throw InputError("pipeline expects a wmis problem");

    const auto rule = a.penalty.empty() ? default_penalty(*w) : io::parse_penalty(a.penalty);
    const auto reduced = wmis_to_qubo(*w, rule);
    const auto [ising, link] = qubo_to_ising(reduced.qubo);
    out << "[1] wmis -> qubo with penalty " << penalty_string(rule)
        << (reduced.strict_condition ? " (strict)" : " (not strict)") << '\n'
        << "[2] qubo -> ising, Y = " << format_number(link.offset) << " + " << format_number(link.scale) << " * E\n";

    const auto pre = preprocess_fix(ising);
    out << "[3] preprocessing fixed " << pre.fixed.size() << " vertex(es)";
    for (const auto& f : pre.fixed) out << ' ' << f.vertex << (f.spin > 0 ? "=+1" : "=-1");
    out << '\n';

    MinorEmbedding full;
    HardwareGraph hw;
    if (!a.embedding_path.empty()) {
        full = io::parse_embedding(io::read_json_file(a.embedding_path), ising.graph());
        hw = make_custom_hardware(full.hardware);
    } else {
        hw = load_hardware(a.hardware);
        auto found = greedy_chain_embed(ising.graph(), hw, a.seed);
        if (!found) {
            err << "greedy embedder found no embedding\n";
            return kVerificationFailed;
        }
        full = std::move(*found);
    }
    const auto e = restrict_embedding(full, pre.residual_vertices);
    out << "[4] embedding valid, class " << to_string(classify(full)) << ", " << e.physical_size()
        << " qubits after preprocessing\n";

    auto policy = restrict_policy(widen_policy(io::parse_policy(a.policy), ising.size()), pre.residual_vertices);
    const auto emb = set_params(e, pre.residual, policy);
    out << "[5] parameters set with policy " << to_string(policy) << '\n';
    print_parameter_table(out, emb, e, pre.residual, pre.residual_vertices);

    const auto report = verify_correspondence(pre.residual, emb, a.tol);
    out << "[6] verification\n";
    print_report(out, report);

    const auto best = solve_qubo_max(reduced.qubo);
    bool decoded_ok = report.ok;
    out << "[7] decoded independent sets (max weight " << format_number(best.max_value) << ")\n";
    for (const auto& s : report.projected_ground_states) {
        const auto x = bits_from_spins(pre.lift(s, ising.size()));
        const auto set = extract_independent_set(reduced.qubo, x);
        const bool optimal = set.independent && set.weight == best.max_value;
        decoded_ok = decoded_ok && optimal;
        out << "  " << vertex_set(set.vertices) << " weight " << format_number(set.weight)
            << (set.independent ? "" : " NOT independent") << (optimal ? "" : " NOT optimal") << '\n';
    }

    if (!a.out_dir.empty()) {
        std::filesystem::create_directories(a.out_dir);
        const std::filesystem::path dir(a.out_dir);
        auto qubo_doc = io::problem_to_json(reduced.qubo);
        io::write_json_file((dir / "qubo.json").string(), qubo_doc);
        auto ising_doc = io::problem_to_json(ising);
        ising_doc["affine"] = io::affine_to_json(link);
        io::write_json_file((dir / "ising.json").string(), ising_doc);
        io::write_json_file((dir / "embedding.json").string(), io::embedding_to_json(full, hw));
        io::write_json_file((dir / "embedded.json").string(), io::embedded_to_json(emb, to_string(policy), pre));
    }
    out << (decoded_ok ? "pipeline ok" : "pipeline FAILED") << '\n';
    return decoded_ok ? kOk : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Minor-embedding compiler for QUBO and Ising problems"};
    app.name("minorembed");
    app.require_subcommand(1);

    std::string kind, out_path, in_path, to, penalty, problem_path, embedding_path, policy = "tight";
    long rows = 0, cols = 0;
    bool preprocess = false;
    std::size_t max_n = 24, show = 8, attempts = 64;
    double tol = 1e-9;
    std::uint64_t seed = 0;
    HardwareArgs hw_args;
    PipelineArgs pipe;
    std::string original_path, embedded_path;

    auto* gen = app.add_subcommand("gen-hardware", "Write a square or extended (king) lattice");
    gen->add_option("--kind", kind, "square or extended")->required();
    gen->add_option("--rows", rows, "Lattice rows")->required();
    gen->add_option("--cols", cols, "Lattice columns")->required();
    gen->add_option("--out", out_path, "Output file")->required();

    auto* conv = app.add_subcommand("convert", "Convert between wmis, qubo and ising forms");
    conv->add_option("--in", in_path, "Input problem")->required();
    conv->add_option("--to", to, "ising or qubo")->required();
    conv->add_option("--penalty", penalty, "WMIS penalty rule: strict:DELTA or uniform:J");
    conv->add_option("--out", out_path, "Output file")->required();

    auto* emb = app.add_subcommand("embed", "Find a tree embedding with the greedy heuristic");
    emb->add_option("--problem", problem_path, "Problem whose graph is embedded")->required();
    emb->add_option("--hardware", hw_args.file, "Hardware file (from gen-hardware)");
    emb->add_option("--kind", hw_args.kind, "square or extended");
    emb->add_option("--rows", hw_args.rows, "Lattice rows");
    emb->add_option("--cols", hw_args.cols, "Lattice columns");
    emb->add_option("--seed", seed, "Random seed");
    emb->add_option("--attempts", attempts, "Restart budget");
    emb->add_option("--out", out_path, "Output embedding file")->required();

    auto* val = app.add_subcommand("validate", "Check an embedding file against a problem graph");
    val->add_option("--problem", problem_path, "Problem file")->required();
    val->add_option("--embedding", embedding_path, "Embedding file")->required();

    auto* set = app.add_subcommand("set-params", "Compute embedded biases and chain strengths");
    set->add_option("--problem", problem_path, "Ising or qubo problem")->required();
    set->add_option("--embedding", embedding_path, "Embedding file")->required();
    set->add_option("--policy", policy, "easy[:MARGIN], tight[:MARGIN] or gap:G[,G...]");
    set->add_flag("--preprocess", preprocess, "Fix vertices with C_i < 0 before embedding");
    set->add_option("--out", out_path, "Output embedded problem")->required();

    auto* sol = app.add_subcommand("solve", "Exhaustively solve a problem");
    sol->add_option("--problem", problem_path, "Problem file")->required();
    sol->add_option("--max-n", max_n, "Enumeration cap");
    sol->add_option("--show", show, "Ground states to print");
    sol->add_option("--tol", tol, "Level grouping tolerance");

    auto* ver = app.add_subcommand("verify", "Check ground-state correspondence of an embedded problem");
    ver->add_option("--original", original_path, "Original ising or qubo problem")->required();
    ver->add_option("--embedded", embedded_path, "Embedded problem from set-params")->required();
    ver->add_option("--tol", tol, "Energy tolerance");
    ver->add_option("--max-n", max_n, "Enumeration cap");

    auto* pipe_cmd = app.add_subcommand("pipeline", "wmis -> qubo -> ising -> embed -> set-params -> verify");
    pipe_cmd->add_option("--wmis", pipe.wmis_path, "WMIS problem")->required();
    pipe_cmd->add_option("--embedding", pipe.embedding_path, "Embedding file");
    pipe_cmd->add_option("--hardware", pipe.hardware.file, "Hardware file for the greedy embedder");
    pipe_cmd->add_option("--kind", pipe.hardware.kind, "square or extended");
    pipe_cmd->add_option("--rows", pipe.hardware.rows, "Lattice rows");
    pipe_cmd->add_option("--cols", pipe.hardware.cols, "Lattice columns");
    pipe_cmd->add_option("--seed", pipe.seed, "Random seed for the greedy embedder");
    pipe_cmd->add_option("--penalty", pipe.penalty, "strict:DELTA or uniform:J (default strict:min/4)");
    pipe_cmd->add_option("--policy", pipe.policy, "Chain strength policy (default tight:1/16)");
    pipe_cmd->add_option("--tol", pipe.tol, "Energy tolerance");
    pipe_cmd->add_option("--out-dir", pipe.out_dir, "Directory for intermediate files");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return kInputError;
    }

    try {
        if (*gen) return gen_hardware(kind, rows, cols, out_path, out);
        if (*conv) return convert(in_path, to, penalty, out_path, out, err);
        if (*emb) return embed(problem_path, hw_args, seed, attempts, out_path, out, err);
        if (*val) return validate_cmd(problem_path, embedding_path, out, err);
        if (*set) return set_params_cmd(problem_path, embedding_path, policy, preprocess, out_path, out, err);
        if (*sol) return solve_cmd(problem_path, max_n, show, tol, out, err);
        if (*ver) return verify_cmd(original_path, embedded_path, tol, max_n, out, err);
        if (*pipe_cmd) return pipeline(pipe, out, err);
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return kPreconditionError;
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kResourceCap;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}

}  // namespace minorembed::cli
