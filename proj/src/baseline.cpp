#include "qwalk/baseline.hpp"

#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <json.hpp>

#include "qwalk/states.hpp"

namespace qwalk {

ProbabilityVector classical_step(const TransitionMatrix& p, const ProbabilityVector& d) {
    if (d.dim() != p.n) throw std::invalid_argument("classical_step: dimension mismatch");
    ProbabilityVector out;
    out.probabilities.assign(static_cast<std::size_t>(p.n), 0.0);
    for (int i = 0; i < p.n; ++i) {
        double di = d.probabilities[static_cast<std::size_t>(i)];
        if (di == 0.0) continue;
        for (int j = 0; j < p.n; ++j) {
            out.probabilities[static_cast<std::size_t>(j)] += di * p.at(i, j);
        }
    }
    return out;
}

ClassicalTrajectory classical_evolve(const TransitionMatrix& p, const ProbabilityVector& d0,
                                     int steps) {
    if (steps < 0) throw std::invalid_argument("classical_evolve: negative step count");
    ClassicalTrajectory t;
    t.distributions.reserve(static_cast<std::size_t>(steps) + 1);
    t.distributions.push_back(d0);
    for (int k = 0; k < steps; ++k) {
        t.distributions.push_back(classical_step(p, t.distributions.back()));
    }
    return t;
}

double total_variation(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("total_variation: size mismatch");
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) sum += std::abs(a[i] - b[i]);
    return 0.5 * sum;
}

namespace {

int support_size(const std::vector<double>& dist, double eps = 1e-12) {
    int count = 0;
    for (double v : dist)
        if (v > eps) ++count;
    return count;
}

}  // namespace

SpreadReport spread_comparison(const Graph& g, int source, int steps, Backend backend,
                               int dense_arc_cap) {
    if (source < 0 || source >= g.node_count)
        throw std::invalid_argument("spread_comparison: source node " + std::to_string(source) +
                                    " out of range");
    if (steps < 0) throw std::invalid_argument("spread_comparison: negative step count");

    WalkOperator u = walk_operator(g, backend, dense_arc_cap);
    AdjacencyMatrix a = adjacency_matrix(g);
    TransitionMatrix p = transition_matrix(a, degrees(a));

    ArcStateVector state = psi_state(u.basis, p, source);
    ProbabilityVector classical;
    classical.probabilities.assign(static_cast<std::size_t>(g.node_count), 0.0);
    classical.probabilities[static_cast<std::size_t>(source)] = 1.0;

    // each walk measures spread against its own step-0 distribution
    std::vector<double> quantum_start = occupancy_distribution(state, u.basis).probabilities;
    std::vector<double> classical_start = classical.probabilities;

    SpreadReport report;
    report.source = source;
    report.steps.reserve(static_cast<std::size_t>(steps) + 1);
    for (int k = 0; k <= steps; ++k) {
        if (k > 0) {
            state = apply_step(u, state);
            classical = classical_step(p, classical);
        }
        SpreadStep row;
        row.step = k;
        row.quantum = occupancy_distribution(state, u.basis).probabilities;
        row.classical = classical.probabilities;
        row.quantum_tv_from_start = total_variation(row.quantum, quantum_start);
        row.classical_tv_from_start = total_variation(row.classical, classical_start);
        row.quantum_support = support_size(row.quantum);
        row.classical_support = support_size(row.classical);
        report.steps.push_back(std::move(row));
    }
    return report;
}

std::vector<int> sample_walk(const TransitionMatrix& p, int source, int steps,
                             std::uint64_t seed) {
    if (source < 0 || source >= p.n)
        throw std::invalid_argument("sample_walk: source node out of range");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<int> path;
    path.reserve(static_cast<std::size_t>(steps) + 1);
    int node = source;
    path.push_back(node);
    for (int k = 0; k < steps; ++k) {
        double r = unit(rng);
        double acc = 0.0;
        int next = node;
        for (int j = 0; j < p.n; ++j) {
            acc += p.at(node, j);
            if (r < acc) {
                next = j;
                break;
            }
        }
        node = next;
        path.push_back(node);
    }
    return path;
}

namespace {

std::string fmt(double v, const char* spec) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), spec, v);
    return buf;
}

}  // namespace

std::string spread_report_table(const SpreadReport& r) {
    std::ostringstream out;
    out << "step |   tv_q |   tv_c | supp_q | supp_c | quantum / classical\n";
    for (const SpreadStep& s : r.steps) {
        char head[96];
        std::snprintf(head, sizeof(head), "%4d | %6.4f | %6.4f | %6d | %6d | ", s.step,
                      s.quantum_tv_from_start, s.classical_tv_from_start, s.quantum_support,
                      s.classical_support);
        out << head;
        for (double v : s.quantum) out << fmt(v, "%.6f") << ' ';
        out << "/ ";
        for (double v : s.classical) out << fmt(v, "%.6f") << ' ';
        out << '\n';
    }
    return out.str();
}

std::string spread_report_json(const SpreadReport& r) {
    nlohmann::json j;
    j["source"] = r.source;
    nlohmann::json steps = nlohmann::json::array();
    for (const SpreadStep& s : r.steps) {
        nlohmann::json row;
        row["step"] = s.step;
        row["quantum"] = s.quantum;
        row["classical"] = s.classical;
        row["tv_quantum"] = s.quantum_tv_from_start;
        row["tv_classical"] = s.classical_tv_from_start;
        row["support_quantum"] = s.quantum_support;
        row["support_classical"] = s.classical_support;
        steps.push_back(std::move(row));
    }
    j["steps"] = std::move(steps);
    return j.dump(2);
}

}  // namespace qwalk
