#pragma once

#include <complex>
#include <vector>

#include "qwalk/arc_basis.hpp"
#include "qwalk/graph.hpp"

namespace qwalk {

using Complex = std::complex<double>;

// One-hot node register state |i>.
struct NodeStateVector {
    std::vector<Complex> amplitudes;
};

// Complex amplitude vector over the arc basis (the walk state).
struct ArcStateVector {
    std::vector<Complex> amplitudes;

    int dim() const { return static_cast<int>(amplitudes.size()); }
};

double norm(const ArcStateVector& s);

NodeStateVector node_state(int i, int n);

// Minimum qubits to index n node states: ceil(log2 n), 0 for n = 1.
int qubit_count(int n);

// Nonzero amplitude sqrt(P[i][head]) for each neighbor of i; squared
// coefficients sum to 1.
struct PhiCoefficient {
    int head = 0;
    double value = 0.0;
};

std::vector<PhiCoefficient> phi_coefficients(const TransitionMatrix& p, int i);

// Unit vector with amplitude sqrt(P[i][j]) on each arc (i, j): node i lifted
// into the arc space.
ArcStateVector psi_state(const ArcBasis& basis, const TransitionMatrix& p, int i);

}  // namespace qwalk
