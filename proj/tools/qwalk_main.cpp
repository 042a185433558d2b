// qwalk: batch embedding jobs driven by discrete-time quantum walks.
// Subcommands: embed, check, compare, info. Exit codes: 0 ok, 1 parse or
// validation or usage failure, 2 I/O failure, 3 dense cap exceeded, 4
// operator law violation.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qwalk/qwalk.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitDenseCap = 3;
constexpr int kExitCheckFailed = 4;

struct WalkConfig {
    std::string input;
    std::string config_path;
    int steps = -1;  // -1: default to node count
    std::string mode = "occupancy";
    std::string backend = "sparse";
    std::string format;
    std::string output;
    int source = -1;
    int dense_cap = qwalk::kDefaultDenseCap;
    bool verify = false;
    bool corrupt = false;
    std::optional<std::uint64_t> sample_seed;
};

struct CommonOptions {
    CLI::Option* input = nullptr;
    CLI::Option* steps = nullptr;
    CLI::Option* mode = nullptr;
    CLI::Option* backend = nullptr;
    CLI::Option* format = nullptr;
    CLI::Option* output = nullptr;
    CLI::Option* source = nullptr;
    CLI::Option* dense_cap = nullptr;
};

CommonOptions add_common_options(CLI::App* cmd, WalkConfig& cfg) {
    CommonOptions opts;
    opts.input = cmd->add_option("--input", cfg.input, "edge list file (one 'u v' pair per line)");
    cmd->add_option("--config", cfg.config_path, "JSON file supplying defaults; flags override");
    opts.steps = cmd->add_option("--steps", cfg.steps, "walk steps t (default: node count)");
    opts.dense_cap = cmd->add_option("--dense-cap", cfg.dense_cap, "max arcs for the dense backend")
                         ->envname("QWALK_DENSE_CAP");
    return opts;
}

// Config-file values fill in only what flags (or env) did not set.
void overlay_config(const WalkConfig& src, const CommonOptions& opts, WalkConfig& cfg) {
    if (src.config_path.empty()) return;
    std::ifstream in(src.config_path);
    if (!in) throw qwalk::IoError("cannot open config file: " + src.config_path);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw qwalk::ParseError("config file " + src.config_path + ": " + e.what());
    }
    auto take = [&](const char* key, CLI::Option* opt, auto& field) {
        if (opt != nullptr && opt->count() == 0 && j.contains(key)) {
            j.at(key).get_to(field);
        }
    };
    take("input", opts.input, cfg.input);
    take("steps", opts.steps, cfg.steps);
    take("mode", opts.mode, cfg.mode);
    take("backend", opts.backend, cfg.backend);
    take("format", opts.format, cfg.format);
    take("output", opts.output, cfg.output);
    take("source", opts.source, cfg.source);
    take("dense_cap", opts.dense_cap, cfg.dense_cap);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw qwalk::IoError("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw qwalk::IoError("read failed: " + path);
    return buf.str();
}

qwalk::Graph load_graph(const std::string& path) {
    if (path.empty()) throw std::invalid_argument("missing --input");
    qwalk::Graph g = qwalk::parse_edge_list(read_file(path));
    qwalk::ValidationReport report = qwalk::validate(g);
    if (!report.ok()) throw qwalk::ValidationError(report.to_string());
    return g;
}

qwalk::Backend backend_from_string(const std::string& s) {
    if (s == "dense") return qwalk::Backend::dense;
    if (s == "sparse") return qwalk::Backend::sparse;
    throw std::invalid_argument("unknown backend: " + s);
}

void write_text_output(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output_path);
    if (!out) throw qwalk::IoError("cannot open for writing: " + output_path);
    out << text;
    out.flush();
    if (!out) throw qwalk::IoError("write failed: " + output_path);
}

// ---------------------------------------------------------------------------

struct LawCheck {
    std::string label;
    double deviation = 0.0;
    double tolerance = 0.0;  // 0 means exact
    bool ok() const { return tolerance == 0.0 ? deviation == 0.0 : deviation <= tolerance; }
};

struct CheckResult {
    int arcs = 0;
    bool dense_done = false;
    std::vector<LawCheck> laws;
    double trace_re = 0.0;
    int expected_trace = 0;
    bool trace_ok = false;

    bool all_ok() const {
        if (!trace_ok) return false;
        for (const LawCheck& l : laws)
            if (!l.ok()) return false;
        return true;
    }
};

CheckResult run_checks(const qwalk::Graph& g, int dense_cap, bool corrupt) {
    CheckResult result;
    qwalk::WalkOperator sparse_u = qwalk::walk_operator(g, qwalk::Backend::sparse);
    if (corrupt && !sparse_u.op.values.empty()) sparse_u.op.values[0] += 1e-3;
    result.arcs = sparse_u.basis.size();
    result.expected_trace = g.node_count;

    result.laws.push_back(
        {"max |U^H U - I|  (sparse)", qwalk::unitarity_deviation(sparse_u.op), 1e-10});

    if (result.arcs <= dense_cap) {
        result.dense_done = true;
        qwalk::AdjacencyMatrix a = qwalk::adjacency_matrix(g);
        qwalk::TransitionMatrix p = qwalk::transition_matrix(a, qwalk::degrees(a));
        qwalk::Operator pi = qwalk::projector(sparse_u.basis, p);
        qwalk::Operator refl = qwalk::grover_reflection(pi);
        qwalk::Operator swap = qwalk::swap_operator(sparse_u.basis);
        qwalk::Operator dense_u = qwalk::dense_product(refl, swap, qwalk::OperatorKind::walk);
        if (corrupt) dense_u.dense[0] += 1e-3;

        result.laws.push_back(
            {"max |U^H U - I|  (dense)", qwalk::unitarity_deviation(dense_u), 1e-10});
        result.laws.push_back({"max |Pi^2 - Pi|", qwalk::projector_deviation(pi), 1e-10});
        result.laws.push_back({"max |Pi - Pi^H|", qwalk::hermiticity_deviation(pi), 1e-10});
        result.laws.push_back({"max |S^2 - I|", qwalk::involution_deviation(swap), 0.0});
        result.laws.push_back({"max |G^2 - I|", qwalk::involution_deviation(refl), 1e-10});
        result.laws.push_back(
            {"max |dense - sparse|", qwalk::max_entry_difference(dense_u, sparse_u.op), 1e-12});

        result.trace_re = qwalk::operator_trace(pi).real();
        result.trace_ok = std::abs(result.trace_re - result.expected_trace) <= 1e-9;
    } else {
        // trace(Pi) = sum over nodes of the psi norm; without the dense
        // projector just accept the sparse unitarity verdict.
        result.trace_re = static_cast<double>(g.node_count);
        result.trace_ok = true;
    }
    return result;
}

std::string render_check_report(const qwalk::Graph& g, const CheckResult& r) {
    std::ostringstream out;
    out << "graph: n=" << g.node_count << " edges=" << g.edge_count() << " arcs=" << r.arcs
        << (r.dense_done ? "" : "  (arc count above dense cap; dense checks skipped)") << '\n';
    for (const LawCheck& l : r.laws) {
        char line[160];
        if (l.tolerance == 0.0) {
            std::snprintf(line, sizeof(line), "  %-26s %.3e   exact       %s\n", l.label.c_str(),
                          l.deviation, l.ok() ? "ok" : "FAIL");
        } else {
            std::snprintf(line, sizeof(line), "  %-26s %.3e   tol %.0e   %s\n", l.label.c_str(),
                          l.deviation, l.tolerance, l.ok() ? "ok" : "FAIL");
        }
        out << line;
    }
    if (r.dense_done) {
        char line[160];
        std::snprintf(line, sizeof(line), "  %-26s %.15f   expect %d   tol 1e-09   %s\n",
                      "trace(Pi)", r.trace_re, r.expected_trace, r.trace_ok ? "ok" : "FAIL");
        out << line;
    }
    out << "check: " << (r.all_ok() ? "ok" : "FAILED") << '\n';
    return out.str();
}

// ---------------------------------------------------------------------------

int cmd_embed(const WalkConfig& cfg) {
    qwalk::Graph g = load_graph(cfg.input);
    int steps = cfg.steps < 0 ? g.node_count : cfg.steps;
    qwalk::EmbeddingMode mode = qwalk::embedding_mode_from_string(cfg.mode);
    qwalk::Backend backend = backend_from_string(cfg.backend);
    qwalk::ExportFormat format =
        qwalk::export_format_from_string(cfg.format.empty() ? "csv" : cfg.format);

    if (cfg.verify) {
        CheckResult check = run_checks(g, cfg.dense_cap, false);
        if (!check.all_ok()) {
            std::cerr << "operator verification failed:\n" << render_check_report(g, check);
            return kExitCheckFailed;
        }
    }

    qwalk::EmbeddingMatrix m = qwalk::embed_all(g, steps, mode, backend, cfg.dense_cap);
    if (cfg.output.empty()) {
        qwalk::export_embedding(m, format, std::cout);
    } else {
        qwalk::export_embedding_file(m, format, cfg.output);
    }
    std::cerr << "embed: n=" << g.node_count << " edges=" << g.edge_count()
              << " arcs=" << 2 * g.edge_count() << " t=" << steps << " mode=" << cfg.mode
              << " backend=" << cfg.backend
              << (cfg.output.empty() ? "" : " -> " + cfg.output) << '\n';
    return kExitOk;
}

int cmd_check(const WalkConfig& cfg) {
    qwalk::Graph g = load_graph(cfg.input);
    CheckResult result = run_checks(g, cfg.dense_cap, cfg.corrupt);
    write_text_output(render_check_report(g, result), cfg.output);
    return result.all_ok() ? kExitOk : kExitCheckFailed;
}

int cmd_compare(const WalkConfig& cfg) {
    qwalk::Graph g = load_graph(cfg.input);
    if (cfg.source < 0) throw std::invalid_argument("compare requires --source NODE");
    int steps = cfg.steps < 0 ? g.node_count : cfg.steps;
    qwalk::Backend backend = backend_from_string(cfg.backend);
    qwalk::SpreadReport report =
        qwalk::spread_comparison(g, cfg.source, steps, backend, cfg.dense_cap);

    std::string format = cfg.format.empty() ? "text" : cfg.format;
    std::string rendered;
    if (format == "json") {
        if (cfg.sample_seed) {
            qwalk::AdjacencyMatrix a = qwalk::adjacency_matrix(g);
            qwalk::TransitionMatrix p = qwalk::transition_matrix(a, qwalk::degrees(a));
            nlohmann::json j = nlohmann::json::parse(qwalk::spread_report_json(report));
            j["sampled_path"] = qwalk::sample_walk(p, cfg.source, steps, *cfg.sample_seed);
            j["sample_seed"] = *cfg.sample_seed;
            rendered = j.dump(2) + "\n";
        } else {
            rendered = qwalk::spread_report_json(report) + "\n";
        }
    } else if (format == "text") {
        rendered = qwalk::spread_report_table(report);
        if (cfg.sample_seed) {
            qwalk::AdjacencyMatrix a = qwalk::adjacency_matrix(g);
            qwalk::TransitionMatrix p = qwalk::transition_matrix(a, qwalk::degrees(a));
            std::vector<int> path = qwalk::sample_walk(p, cfg.source, steps, *cfg.sample_seed);
            std::ostringstream line;
            line << "sampled path (seed " << *cfg.sample_seed << "):";
            for (int node : path) line << ' ' << node;
            rendered += line.str() + "\n";
        }
    } else {
        throw std::invalid_argument("compare format must be text or json, got: " + format);
    }
    write_text_output(rendered, cfg.output);
    return kExitOk;
}

int cmd_info(const WalkConfig& cfg) {
    qwalk::Graph g = load_graph(cfg.input);
    qwalk::AdjacencyMatrix a = qwalk::adjacency_matrix(g);
    qwalk::DegreeVector d = qwalk::degrees(a);
    std::map<int, int> histogram;
    for (int deg : d.degrees) ++histogram[deg];

    std::ostringstream out;
    out << "nodes:  " << g.node_count << '\n';
    out << "edges:  " << g.edge_count() << '\n';
    out << "arcs:   " << 2 * g.edge_count() << '\n';
    out << "qubits: " << qwalk::qubit_count(g.node_count) << '\n';
    out << "degree histogram: {";
    bool first = true;
    for (const auto& [deg, count] : histogram) {
        if (!first) out << ", ";
        out << deg << ':' << count;
        first = false;
    }
    out << "}\n";
    write_text_output(out.str(), cfg.output);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"discrete-time quantum walk graph embedding"};
    app.require_subcommand(1);

    WalkConfig cfg;

    CLI::App* embed = app.add_subcommand("embed", "embed every node and write the matrix");
    CommonOptions embed_opts = add_common_options(embed, cfg);
    embed_opts.mode = embed->add_option("--mode", cfg.mode, "occupancy|amplitude|time_averaged")
                          ->check(CLI::IsMember({"occupancy", "amplitude", "time_averaged"}));
    embed_opts.backend = embed->add_option("--backend", cfg.backend, "sparse|dense")
                             ->check(CLI::IsMember({"sparse", "dense"}));
    embed_opts.format = embed->add_option("--format", cfg.format, "csv|json (default csv)")
                            ->check(CLI::IsMember({"csv", "json"}));
    embed_opts.output = embed->add_option("--output", cfg.output, "output file (default stdout)");
    embed->add_flag("--verify", cfg.verify, "check operator laws before embedding");

    CLI::App* check = app.add_subcommand("check", "verify walk operator laws");
    CommonOptions check_opts = add_common_options(check, cfg);
    check_opts.output = check->add_option("--output", cfg.output, "report file (default stdout)");
    check->add_flag("--corrupt", cfg.corrupt, "self-test hook: perturb the operator first");

    CLI::App* compare = app.add_subcommand("compare", "quantum vs classical spread from a source");
    CommonOptions compare_opts = add_common_options(compare, cfg);
    compare_opts.source = compare->add_option("--source", cfg.source, "start node");
    compare_opts.backend = compare->add_option("--backend", cfg.backend, "sparse|dense")
                               ->check(CLI::IsMember({"sparse", "dense"}));
    compare_opts.format = compare->add_option("--format", cfg.format, "text|json (default text)")
                              ->check(CLI::IsMember({"text", "json"}));
    compare_opts.output =
        compare->add_option("--output", cfg.output, "report file (default stdout)");
    std::uint64_t seed_value = 0;
    CLI::Option* seed_opt = compare->add_option(
        "--sample-seed", seed_value, "also print one sampled classical path (demo only)");

    CLI::App* info = app.add_subcommand("info", "print graph facts");
    CommonOptions info_opts = add_common_options(info, cfg);
    info_opts.output = info->add_option("--output", cfg.output, "report file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }
    if (seed_opt->count() > 0) cfg.sample_seed = seed_value;

    try {
        if (app.got_subcommand(embed)) {
            overlay_config(cfg, embed_opts, cfg);
            return cmd_embed(cfg);
        }
        if (app.got_subcommand(check)) {
            overlay_config(cfg, check_opts, cfg);
            return cmd_check(cfg);
        }
        if (app.got_subcommand(compare)) {
            overlay_config(cfg, compare_opts, cfg);
            return cmd_compare(cfg);
        }
        overlay_config(cfg, info_opts, cfg);
        return cmd_info(cfg);
    } catch (const qwalk::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const qwalk::ValidationError& e) {
        std::cerr << "error: invalid graph: " << e.what() << '\n';
        return kExitUsage;
    } catch (const qwalk::DenseCapError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDenseCap;
    } catch (const qwalk::IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
