#include "qwalk/embedding.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <json.hpp>

#include "qwalk/errors.hpp"
#include "qwalk/states.hpp"

namespace qwalk {

EmbeddingMode embedding_mode_from_string(const std::string& s) {
    if (s == "occupancy") return EmbeddingMode::occupancy;
    if (s == "amplitude") return EmbeddingMode::amplitude;
    if (s == "time_averaged") return EmbeddingMode::time_averaged;
    throw std::invalid_argument("unknown embedding mode: " + s);
}

std::string to_string(EmbeddingMode mode) {
    switch (mode) {
        case EmbeddingMode::occupancy: return "occupancy";
        case EmbeddingMode::amplitude: return "amplitude";
        case EmbeddingMode::time_averaged: return "time_averaged";
    }
    return "occupancy";
}

ExportFormat export_format_from_string(const std::string& s) {
    if (s == "csv") return ExportFormat::csv;
    if (s == "json") return ExportFormat::json;
    throw std::invalid_argument("unknown export format: " + s);
}

std::string to_string(ExportFormat format) {
    return format == ExportFormat::csv ? "csv" : "json";
}

namespace {

std::vector<double> embedding_row(const WalkOperator& u, const TransitionMatrix& p, int node,
                                  int steps, EmbeddingMode mode) {
    ArcStateVector state = psi_state(u.basis, p, node);

    if (mode == EmbeddingMode::time_averaged) {
        ProbabilityVector acc = occupancy_distribution(state, u.basis);
        for (int k = 0; k < steps; ++k) {
            state = apply_step(u, state);
            ProbabilityVector occ = occupancy_distribution(state, u.basis);
            for (std::size_t i = 0; i < acc.probabilities.size(); ++i)
                acc.probabilities[i] += occ.probabilities[i];
        }
        for (double& v : acc.probabilities) v /= steps + 1;
        return acc.probabilities;
    }

    state = evolve_final(u, state, steps);
    if (mode == EmbeddingMode::occupancy) {
        return occupancy_distribution(state, u.basis).probabilities;
    }
    std::vector<double> row(state.amplitudes.size() * 2);
    for (std::size_t i = 0; i < state.amplitudes.size(); ++i) {
        row[2 * i] = state.amplitudes[i].real();
        row[2 * i + 1] = state.amplitudes[i].imag();
    }
    return row;
}

}  // namespace

std::vector<double> node_embedding(const Graph& g, int node, int steps, EmbeddingMode mode,
                                   Backend backend, int dense_arc_cap) {
    if (node < 0 || node >= g.node_count)
        throw std::out_of_range("node_embedding: node " + std::to_string(node) + " out of range");
    if (steps < 0) throw std::invalid_argument("node_embedding: negative step count");
    WalkOperator u = walk_operator(g, backend, dense_arc_cap);
    AdjacencyMatrix a = adjacency_matrix(g);
    TransitionMatrix p = transition_matrix(a, degrees(a));
    return embedding_row(u, p, node, steps, mode);
}

EmbeddingMatrix embed_all(const Graph& g, int steps, EmbeddingMode mode, Backend backend,
                          int dense_arc_cap) {
    if (steps < 0) throw std::invalid_argument("embed_all: negative step count");
    WalkOperator u = walk_operator(g, backend, dense_arc_cap);
    AdjacencyMatrix a = adjacency_matrix(g);
    TransitionMatrix p = transition_matrix(a, degrees(a));

    EmbeddingMatrix m;
    m.mode = mode;
    m.steps = steps;
    m.dimension = mode == EmbeddingMode::amplitude ? 2 * u.basis.size() : g.node_count;
    m.rows.reserve(static_cast<std::size_t>(g.node_count));
    for (int node = 0; node < g.node_count; ++node) {
        m.rows.push_back(embedding_row(u, p, node, steps, mode));
    }
    return m;
}

namespace {

// 17 significant digits: enough for strtod to reproduce the double exactly.
void append_number(std::string& out, double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    out += buf;
}

void export_csv(const EmbeddingMatrix& m, std::ostream& out) {
    std::string line = "node";
    for (int c = 0; c < m.dimension; ++c) {
        line += ",c";
        line += std::to_string(c);
    }
    line += '\n';
    out << line;
    for (std::size_t i = 0; i < m.rows.size(); ++i) {
        line = std::to_string(i);
        for (double v : m.rows[i]) {
            line += ',';
            append_number(line, v);
        }
        line += '\n';
        out << line;
    }
}

void export_json(const EmbeddingMatrix& m, std::ostream& out) {
    nlohmann::json j;
    j["mode"] = to_string(m.mode);
    j["steps"] = m.steps;
    j["dimension"] = m.dimension;
    j["rows"] = m.rows;
    out << j.dump(2) << '\n';
}

}  // namespace

void export_embedding(const EmbeddingMatrix& m, ExportFormat format, std::ostream& out) {
    if (m.rows.empty()) throw std::invalid_argument("export_embedding: empty matrix");
    if (format == ExportFormat::csv) {
        export_csv(m, out);
    } else {
        export_json(m, out);
    }
    if (!out) throw IoError("export_embedding: write failed");
}

void export_embedding_file(const EmbeddingMatrix& m, ExportFormat format,
                           const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open for writing: " + path);
    export_embedding(m, format, out);
    out.flush();
    if (!out) throw IoError("write failed: " + path);
}

namespace {

EmbeddingMatrix import_csv(std::istream& in) {
    EmbeddingMatrix m;
    std::string line;
    if (!std::getline(in, line) || line.rfind("node", 0) != 0)
        throw ParseError("embedding csv: missing header");
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<double> row;
        std::size_t pos = line.find(',');
        if (pos == std::string::npos) throw ParseError("embedding csv: row without values");
        while (pos != std::string::npos) {
            std::size_t next = line.find(',', pos + 1);
            std::string cell = line.substr(pos + 1, next == std::string::npos ? std::string::npos
                                                                              : next - pos - 1);
            char* end = nullptr;
            double v = std::strtod(cell.c_str(), &end);
            if (end == cell.c_str()) throw ParseError("embedding csv: bad number '" + cell + "'");
            row.push_back(v);
            pos = next;
        }
        m.rows.push_back(std::move(row));
    }
    if (m.rows.empty()) throw ParseError("embedding csv: no rows");
    m.dimension = static_cast<int>(m.rows.front().size());
    return m;
}

EmbeddingMatrix import_json(std::istream& in) {
    nlohmann::json j = nlohmann::json::parse(in);
    EmbeddingMatrix m;
    m.mode = embedding_mode_from_string(j.at("mode").get<std::string>());
    m.steps = j.at("steps").get<int>();
    m.dimension = j.at("dimension").get<int>();
    m.rows = j.at("rows").get<std::vector<std::vector<double>>>();
    return m;
}

}  // namespace

EmbeddingMatrix import_embedding(ExportFormat format, std::istream& in) {
    return format == ExportFormat::csv ? import_csv(in) : import_json(in);
}

EmbeddingMatrix import_embedding_file(ExportFormat format, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open for reading: " + path);
    return import_embedding(format, in);
}

}  // namespace qwalk
