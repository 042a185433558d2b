#include "qwalk/states.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qwalk {

double norm(const ArcStateVector& s) {
    double sum = 0.0;
    for (const Complex& a : s.amplitudes) sum += std::norm(a);
    return std::sqrt(sum);
}

NodeStateVector node_state(int i, int n) {
    if (i < 0 || i >= n)
        throw std::out_of_range("node_state: index " + std::to_string(i) + " out of range [0, " +
                                std::to_string(n) + ")");
    NodeStateVector v;
    v.amplitudes.assign(static_cast<std::size_t>(n), Complex{0.0, 0.0});
    v.amplitudes[static_cast<std::size_t>(i)] = Complex{1.0, 0.0};
    return v;
}

int qubit_count(int n) {
    int bits = 0;
    while ((1LL << bits) < n) ++bits;
    return bits;
}

std::vector<PhiCoefficient> phi_coefficients(const TransitionMatrix& p, int i) {
    std::vector<PhiCoefficient> coeffs;
    for (int j = 0; j < p.n; ++j) {
        double pij = p.at(i, j);
        if (pij > 0.0) coeffs.push_back({j, std::sqrt(pij)});
    }
    return coeffs;
}

ArcStateVector psi_state(const ArcBasis& basis, const TransitionMatrix& p, int i) {
    ArcStateVector s;
    s.amplitudes.assign(static_cast<std::size_t>(basis.size()), Complex{0.0, 0.0});
    for (int id : basis.out_arcs(i)) {
        const Arc& a = basis.arc(id);
        s.amplitudes[static_cast<std::size_t>(id)] = std::sqrt(p.at(a.tail, a.head));
    }
    return s;
}

}  // namespace qwalk
