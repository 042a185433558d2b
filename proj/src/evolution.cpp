#include "qwalk/evolution.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include <json.hpp>

namespace qwalk {

ArcStateVector initial_global_state(const ArcBasis& basis, const TransitionMatrix& p) {
    ArcStateVector s;
    s.amplitudes.assign(static_cast<std::size_t>(basis.size()), Complex{0.0, 0.0});
    const double n = basis.node_count();
    for (int id = 0; id < basis.size(); ++id) {
        const Arc& a = basis.arc(id);
        s.amplitudes[static_cast<std::size_t>(id)] = std::sqrt(p.at(a.tail, a.head) / n);
    }
    return s;
}

Trajectory evolve(const WalkOperator& u, const ArcStateVector& s0, int steps) {
    if (steps < 0) throw std::invalid_argument("evolve: negative step count");
    Trajectory t;
    t.states.reserve(static_cast<std::size_t>(steps) + 1);
    t.states.push_back(s0);
    for (int k = 0; k < steps; ++k) {
        t.states.push_back(apply_step(u, t.states.back()));
    }
    return t;
}

ArcStateVector evolve_final(const WalkOperator& u, const ArcStateVector& s0, int steps) {
    if (steps < 0) throw std::invalid_argument("evolve_final: negative step count");
    ArcStateVector s = s0;
    for (int k = 0; k < steps; ++k) s = apply_step(u, s);
    return s;
}

ProbabilityVector occupancy_distribution(const ArcStateVector& s, const ArcBasis& basis,
                                         Marginal marginal) {
    if (s.dim() != basis.size())
        throw std::invalid_argument("occupancy_distribution: state dimension mismatch");
    ProbabilityVector p;
    p.probabilities.assign(static_cast<std::size_t>(basis.node_count()), 0.0);
    for (int id = 0; id < basis.size(); ++id) {
        const Arc& a = basis.arc(id);
        int node = marginal == Marginal::tail ? a.tail : a.head;
        p.probabilities[static_cast<std::size_t>(node)] +=
            std::norm(s.amplitudes[static_cast<std::size_t>(id)]);
    }
    return p;
}

std::string trajectory_to_json(const Trajectory& t) {
    nlohmann::json states = nlohmann::json::array();
    for (const ArcStateVector& s : t.states) {
        nlohmann::json amps = nlohmann::json::array();
        for (const Complex& a : s.amplitudes) amps.push_back({a.real(), a.imag()});
        states.push_back(std::move(amps));
    }
    return states.dump();
}

}  // namespace qwalk
