#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qwalk/evolution.hpp"
#include "qwalk/graph.hpp"

namespace qwalk {

// Exact distribution-level Markov chain, steps 0..t.
struct ClassicalTrajectory {
    std::vector<ProbabilityVector> distributions;

    int step_count() const { return static_cast<int>(distributions.size()) - 1; }
};

// out[j] = sum_i d[i] * P[i][j].
ProbabilityVector classical_step(const TransitionMatrix& p, const ProbabilityVector& d);

ClassicalTrajectory classical_evolve(const TransitionMatrix& p, const ProbabilityVector& d0,
                                     int steps);

// Half the L1 distance between two distributions.
double total_variation(const std::vector<double>& a, const std::vector<double>& b);

// Side-by-side quantum occupancy vs classical distribution, one row per step.
struct SpreadStep {
    int step = 0;
    std::vector<double> quantum;
    std::vector<double> classical;
    double quantum_tv_from_start = 0.0;
    double classical_tv_from_start = 0.0;
    int quantum_support = 0;
    int classical_support = 0;
};

struct SpreadReport {
    int source = 0;
    std::vector<SpreadStep> steps;
};

// Runs both walks from a one-hot start at source. Throws
// std::invalid_argument if source is out of range.
SpreadReport spread_comparison(const Graph& g, int source, int steps,
                               Backend backend = Backend::sparse,
                               int dense_arc_cap = kDefaultDenseCap);

// Demonstration-only sampled node path of the classical chain; never used by
// the exact comparisons.
std::vector<int> sample_walk(const TransitionMatrix& p, int source, int steps,
                             std::uint64_t seed);

std::string spread_report_table(const SpreadReport& r);
std::string spread_report_json(const SpreadReport& r);

}  // namespace qwalk
