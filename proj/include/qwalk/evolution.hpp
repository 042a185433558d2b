#pragma once

#include <string>
#include <vector>

#include "qwalk/operators.hpp"
#include "qwalk/states.hpp"

namespace qwalk {

// Node-level probabilities; sums to 1.
struct ProbabilityVector {
    std::vector<double> probabilities;

    int dim() const { return static_cast<int>(probabilities.size()); }
};

// Which arc index carries the walker's position when marginalizing. After a
// step the state sits on arcs leaving the node just reached, so the tail is
// the position; the head marginal exists for sensitivity checks.
enum class Marginal { tail, head };

// States for steps 0..t, states[k+1] = U states[k].
struct Trajectory {
    std::vector<ArcStateVector> states;

    int step_count() const { return static_cast<int>(states.size()) - 1; }
    const ArcStateVector& final_state() const { return states.back(); }
};

// Amplitude sqrt(P[i][j] / N) on every arc (i, j): the whole-graph
// superposition over all outgoing paths.
ArcStateVector initial_global_state(const ArcBasis& basis, const TransitionMatrix& p);

// Iterates the walk, retaining every intermediate state.
Trajectory evolve(const WalkOperator& u, const ArcStateVector& s0, int steps);

// Low-memory variant: only the final state.
ArcStateVector evolve_final(const WalkOperator& u, const ArcStateVector& s0, int steps);

// Born-rule node occupancy: probability of node w is the sum of squared
// amplitudes over arcs whose marginalized index is w.
ProbabilityVector occupancy_distribution(const ArcStateVector& s, const ArcBasis& basis,
                                         Marginal marginal = Marginal::tail);

// JSON array of states, each a list of [re, im] pairs in arc order.
std::string trajectory_to_json(const Trajectory& t);

}  // namespace qwalk
