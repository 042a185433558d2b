#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <doctest.h>
#include <json.hpp>

#include "fixtures.hpp"
#include "qwalk/evolution.hpp"
#include "qwalk/operators.hpp"

using namespace qwalk;

namespace {

TransitionMatrix transition_of(const Graph& g) {
    AdjacencyMatrix a = adjacency_matrix(g);
    return transition_matrix(a, degrees(a));
}

}  // namespace

TEST_SUITE_BEGIN("evolution");

TEST_CASE("initial_global_state examples") {
    {
        Graph g = fixtures::single_edge();
        ArcStateVector s = initial_global_state(arc_basis(g), transition_of(g));
        CHECK(std::abs(s.amplitudes[0] - std::sqrt(0.5)) < 1e-15);
        CHECK(std::abs(s.amplitudes[1] - std::sqrt(0.5)) < 1e-15);
    }
    {
        Graph g = fixtures::cycle4();
        ArcStateVector s = initial_global_state(arc_basis(g), transition_of(g));
        for (const Complex& a : s.amplitudes) CHECK(std::abs(a - std::sqrt(0.125)) < 1e-15);
    }
    {
        Graph g = fixtures::star3();
        ArcBasis basis = arc_basis(g);
        ArcStateVector s = initial_global_state(basis, transition_of(g));
        for (int leaf : {1, 2, 3}) {
            CHECK(std::abs(s.amplitudes[static_cast<std::size_t>(basis.index_of(0, leaf))] -
                           std::sqrt(1.0 / 12.0)) < 1e-15);
            CHECK(std::abs(s.amplitudes[static_cast<std::size_t>(basis.index_of(leaf, 0))] - 0.5) <
                  1e-15);
        }
    }
    for (const auto& [name, g] : fixtures::all()) {
        INFO(name);
        CHECK(norm(initial_global_state(arc_basis(g), transition_of(g))) ==
              doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("evolve with zero steps returns exactly the input") {
    Graph g = fixtures::cycle4();
    WalkOperator u = walk_operator(g, Backend::sparse);
    ArcStateVector s0 = psi_state(u.basis, transition_of(g), 2);
    Trajectory t = evolve(u, s0, 0);
    CHECK(t.step_count() == 0);
    CHECK(t.states.size() == 1);
    CHECK(t.states[0].amplitudes == s0.amplitudes);
}

TEST_CASE("evolve rejects negative steps") {
    Graph g = fixtures::single_edge();
    WalkOperator u = walk_operator(g, Backend::sparse);
    ArcStateVector s0 = psi_state(u.basis, transition_of(g), 0);
    CHECK_THROWS_AS(evolve(u, s0, -1), std::invalid_argument);
}

TEST_CASE("single edge returns to the start after two steps, exactly") {
    Graph g = fixtures::single_edge();
    WalkOperator u = walk_operator(g, Backend::sparse);
    ArcStateVector s0;
    s0.amplitudes = {Complex{1.0, 0.0}, Complex{0.0, 0.0}};
    Trajectory t = evolve(u, s0, 2);
    CHECK(t.states[1].amplitudes == std::vector<Complex>{Complex{0.0, 0.0}, Complex{1.0, 0.0}});
    CHECK(t.states[2].amplitudes == s0.amplitudes);
}

TEST_CASE("cycle4 transports the lifted node state deterministically") {
    Graph g = fixtures::cycle4();
    WalkOperator u = walk_operator(g, Backend::sparse);
    TransitionMatrix p = transition_of(g);
    Trajectory t = evolve(u, psi_state(u.basis, p, 0), 2);

    // after two steps the state sits on the arcs leaving node 2
    const ArcStateVector& final = t.final_state();
    double on_node2 = std::norm(final.amplitudes[static_cast<std::size_t>(u.basis.index_of(2, 1))]) +
                      std::norm(final.amplitudes[static_cast<std::size_t>(u.basis.index_of(2, 3))]);
    CHECK(on_node2 == doctest::Approx(1.0).epsilon(1e-12));
    for (int id = 0; id < u.basis.size(); ++id) {
        if (u.basis.arc(id).tail != 2)
            CHECK(std::abs(final.amplitudes[static_cast<std::size_t>(id)]) < 1e-12);
    }
}

TEST_CASE("evolve_final equals the trajectory's last state") {
    Graph g = fixtures::random16();
    WalkOperator u = walk_operator(g, Backend::sparse);
    ArcStateVector s0 = initial_global_state(u.basis, transition_of(g));
    Trajectory t = evolve(u, s0, 9);
    ArcStateVector direct = evolve_final(u, s0, 9);
    CHECK(direct.amplitudes == t.final_state().amplitudes);
}

TEST_CASE("norm is conserved over a long run") {
    Graph g = fixtures::random32();
    WalkOperator u = walk_operator(g, Backend::sparse);
    Trajectory t = evolve(u, initial_global_state(u.basis, transition_of(g)), 1000);
    REQUIRE(t.states.size() == 1001);
    for (const ArcStateVector& s : t.states) {
        CHECK(std::abs(norm(s) - 1.0) < 1e-10);
    }
}

TEST_CASE("adjoint application reverses a step") {
    std::mt19937_64 rng(17);
    for (const auto& [name, g] : fixtures::all()) {
        INFO(name);
        WalkOperator u = walk_operator(g, Backend::sparse);
        ArcStateVector s;
        s.amplitudes.resize(static_cast<std::size_t>(u.basis.size()));
        for (Complex& a : s.amplitudes) {
            a = Complex{static_cast<double>(rng() % 1000) - 500.0,
                        static_cast<double>(rng() % 1000) - 500.0};
        }
        double n = norm(s);
        for (Complex& a : s.amplitudes) a /= n;

        Trajectory t = evolve(u, s, 20);
        for (int k = 20; k > 0; --k) {
            ArcStateVector back = apply_step_adjoint(u, t.states[static_cast<std::size_t>(k)]);
            double dev = 0.0;
            for (std::size_t i = 0; i < back.amplitudes.size(); ++i) {
                dev = std::max(dev,
                               std::abs(back.amplitudes[i] -
                                        t.states[static_cast<std::size_t>(k - 1)].amplitudes[i]));
            }
            CHECK(dev < 1e-9);
        }
    }
}

TEST_CASE("occupancy_distribution marginalizes over the head index") {
    Graph g = fixtures::single_edge();
    ArcBasis basis = arc_basis(g);
    ArcStateVector s;
    s.amplitudes = {Complex{0.0, 0.0}, Complex{1.0, 0.0}};  // arc (1, 0)
    ProbabilityVector p = occupancy_distribution(s, basis);
    CHECK(p.probabilities == std::vector<double>{0.0, 1.0});
}

TEST_CASE("cycle4 occupancy spreads then focuses") {
    Graph g = fixtures::cycle4();
    WalkOperator u = walk_operator(g, Backend::sparse);
    Trajectory t = evolve(u, psi_state(u.basis, transition_of(g), 0), 2);

    ProbabilityVector p1 = occupancy_distribution(t.states[1], u.basis);
    CHECK(p1.probabilities[0] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(p1.probabilities[1] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(p1.probabilities[3] == doctest::Approx(0.5).epsilon(1e-12));

    ProbabilityVector p2 = occupancy_distribution(t.states[2], u.basis);
    CHECK(p2.probabilities[2] == doctest::Approx(1.0).epsilon(1e-12));

    // head marginal sees the about-to-be-visited side
    ProbabilityVector h1 = occupancy_distribution(t.states[1], u.basis, Marginal::head);
    CHECK(h1.probabilities[2] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("occupancy sums to one and stays nonnegative") {
    for (const auto& [name, g] : fixtures::all()) {
        INFO(name);
        WalkOperator u = walk_operator(g, Backend::sparse);
        Trajectory t = evolve(u, initial_global_state(u.basis, transition_of(g)), 12);
        for (const ArcStateVector& s : t.states) {
            ProbabilityVector p = occupancy_distribution(s, u.basis);
            double sum = 0.0;
            for (double v : p.probabilities) {
                CHECK(v >= 0.0);
                sum += v;
            }
            CHECK(sum == doctest::Approx(1.0).epsilon(1e-10));
        }
    }
}

TEST_CASE("trajectory_to_json lists re/im pairs in arc order") {
    Graph g = fixtures::single_edge();
    WalkOperator u = walk_operator(g, Backend::sparse);
    ArcStateVector s0;
    s0.amplitudes = {Complex{1.0, 0.0}, Complex{0.0, 0.0}};
    Trajectory t = evolve(u, s0, 1);
    nlohmann::json j = nlohmann::json::parse(trajectory_to_json(t));
    REQUIRE(j.size() == 2);
    CHECK(j[0] == nlohmann::json({{1.0, 0.0}, {0.0, 0.0}}));
    CHECK(j[1] == nlohmann::json({{0.0, 0.0}, {1.0, 0.0}}));
}

TEST_SUITE_END();
