#include "qwalk/operators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include <json.hpp>

#include "qwalk/errors.hpp"

namespace qwalk {

namespace {

std::size_t idx(int r, int c, int dim) {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(dim) + static_cast<std::size_t>(c);
}

void check_dim(const Operator& op, const std::vector<Complex>& x, const char* what) {
    if (static_cast<int>(x.size()) != op.dim)
        throw std::invalid_argument(std::string(what) + ": state dimension " +
                                    std::to_string(x.size()) + " != operator dimension " +
                                    std::to_string(op.dim));
}

}  // namespace

Complex Operator::at(int r, int c) const {
    if (!is_sparse) return dense[idx(r, c, dim)];
    std::size_t lo = col_start[static_cast<std::size_t>(c)];
    std::size_t hi = col_start[static_cast<std::size_t>(c) + 1];
    auto first = row_index.begin() + static_cast<std::ptrdiff_t>(lo);
    auto last = row_index.begin() + static_cast<std::ptrdiff_t>(hi);
    auto it = std::lower_bound(first, last, r);
    if (it == last || *it != r) return Complex{0.0, 0.0};
    return values[static_cast<std::size_t>(it - row_index.begin())];
}

std::vector<Complex> Operator::apply(const std::vector<Complex>& x) const {
    check_dim(*this, x, "apply");
    std::vector<Complex> y(static_cast<std::size_t>(dim), Complex{0.0, 0.0});
    if (is_sparse) {
        for (int c = 0; c < dim; ++c) {
            const Complex xc = x[static_cast<std::size_t>(c)];
            if (xc == Complex{0.0, 0.0}) continue;
            for (std::size_t k = col_start[static_cast<std::size_t>(c)];
                 k < col_start[static_cast<std::size_t>(c) + 1]; ++k) {
                y[static_cast<std::size_t>(row_index[k])] += values[k] * xc;
            }
        }
    } else {
        for (int r = 0; r < dim; ++r) {
            Complex sum{0.0, 0.0};
            const Complex* row = dense.data() + idx(r, 0, dim);
            for (int c = 0; c < dim; ++c) sum += row[c] * x[static_cast<std::size_t>(c)];
            y[static_cast<std::size_t>(r)] = sum;
        }
    }
    return y;
}

std::vector<Complex> Operator::apply_adjoint(const std::vector<Complex>& x) const {
    check_dim(*this, x, "apply_adjoint");
    std::vector<Complex> y(static_cast<std::size_t>(dim), Complex{0.0, 0.0});
    if (is_sparse) {
        // column c of U becomes row c of U^H: y[c] = conj(col_c) . x
        for (int c = 0; c < dim; ++c) {
            Complex sum{0.0, 0.0};
            for (std::size_t k = col_start[static_cast<std::size_t>(c)];
                 k < col_start[static_cast<std::size_t>(c) + 1]; ++k) {
                sum += std::conj(values[k]) * x[static_cast<std::size_t>(row_index[k])];
            }
            y[static_cast<std::size_t>(c)] = sum;
        }
    } else {
        for (int c = 0; c < dim; ++c) {
            Complex sum{0.0, 0.0};
            for (int r = 0; r < dim; ++r)
                sum += std::conj(dense[idx(r, c, dim)]) * x[static_cast<std::size_t>(r)];
            y[static_cast<std::size_t>(c)] = sum;
        }
    }
    return y;
}

Operator projector(const ArcBasis& basis, const TransitionMatrix& p) {
    Operator op;
    op.kind = OperatorKind::projector;
    op.dim = basis.size();
    op.dense.assign(static_cast<std::size_t>(op.dim) * op.dim, Complex{0.0, 0.0});
    for (int node = 0; node < basis.node_count(); ++node) {
        ArcStateVector psi = psi_state(basis, p, node);
        for (int a : basis.out_arcs(node)) {
            for (int b : basis.out_arcs(node)) {
                op.dense[idx(a, b, op.dim)] += psi.amplitudes[static_cast<std::size_t>(a)] *
                                               std::conj(psi.amplitudes[static_cast<std::size_t>(b)]);
            }
        }
    }
    return op;
}

Operator grover_reflection(const Operator& pi) {
    if (pi.kind != OperatorKind::projector)
        throw std::invalid_argument("grover_reflection: operator kind is not projector");
    Operator op;
    op.kind = OperatorKind::reflection;
    op.dim = pi.dim;
    op.dense.assign(static_cast<std::size_t>(op.dim) * op.dim, Complex{0.0, 0.0});
    for (int r = 0; r < op.dim; ++r) {
        for (int c = 0; c < op.dim; ++c) {
            Complex v = 2.0 * pi.at(r, c);
            if (r == c) v -= 1.0;
            op.dense[idx(r, c, op.dim)] = v;
        }
    }
    return op;
}

Operator swap_operator(const ArcBasis& basis) {
    Operator op;
    op.kind = OperatorKind::swap;
    op.dim = basis.size();
    op.dense.assign(static_cast<std::size_t>(op.dim) * op.dim, Complex{0.0, 0.0});
    for (int c = 0; c < op.dim; ++c) {
        op.dense[idx(basis.swapped(c), c, op.dim)] = Complex{1.0, 0.0};
    }
    return op;
}

Operator dense_product(const Operator& a, const Operator& b, OperatorKind kind) {
    if (a.is_sparse || b.is_sparse)
        throw std::invalid_argument("dense_product: both factors must be dense");
    if (a.dim != b.dim) throw std::invalid_argument("dense_product: dimension mismatch");
    const int dim = a.dim;
    Operator out;
    out.kind = kind;
    out.dim = dim;
    out.dense.assign(static_cast<std::size_t>(dim) * dim, Complex{0.0, 0.0});

    if (b.kind == OperatorKind::swap) {
        // b's columns are unit basis vectors; gather a's columns instead of
        // the full triple loop.
        for (int c = 0; c < dim; ++c) {
            int src = -1;
            for (int r = 0; r < dim; ++r) {
                if (b.dense[idx(r, c, dim)] != Complex{0.0, 0.0}) {
                    src = r;
                    break;
                }
            }
            if (src < 0) continue;
            for (int r = 0; r < dim; ++r) out.dense[idx(r, c, dim)] = a.dense[idx(r, src, dim)];
        }
        return out;
    }

    for (int r = 0; r < dim; ++r) {
        for (int m = 0; m < dim; ++m) {
            const Complex arm = a.dense[idx(r, m, dim)];
            if (arm == Complex{0.0, 0.0}) continue;
            const Complex* brow = b.dense.data() + idx(m, 0, dim);
            Complex* orow = out.dense.data() + idx(r, 0, dim);
            for (int c = 0; c < dim; ++c) orow[c] += arm * brow[c];
        }
    }
    return out;
}

namespace {

Operator sparse_walk_from_scatter_rule(const ArcBasis& basis) {
    Operator op;
    op.kind = OperatorKind::walk;
    op.dim = basis.size();
    op.is_sparse = true;
    op.col_start.assign(static_cast<std::size_t>(op.dim) + 1, 0);

    std::size_t nnz = 0;
    for (int c = 0; c < op.dim; ++c) {
        nnz += static_cast<std::size_t>(basis.degree(basis.arc(c).head));
    }
    op.row_index.reserve(nnz);
    op.values.reserve(nnz);

    for (int c = 0; c < op.dim; ++c) {
        const Arc& arc = basis.arc(c);
        const int j = arc.head;
        const double dj = basis.degree(j);
        // out_arcs(j) is ascending, so rows within the column stay sorted
        for (int r : basis.out_arcs(j)) {
            const bool back = basis.arc(r).head == arc.tail;
            op.row_index.push_back(r);
            op.values.push_back(Complex{back ? 2.0 / dj - 1.0 : 2.0 / dj, 0.0});
        }
        op.col_start[static_cast<std::size_t>(c) + 1] = op.values.size();
    }
    return op;
}

}  // namespace

WalkOperator walk_operator(const Graph& g, Backend backend, int dense_arc_cap) {
    require_valid(g);
    ArcBasis basis(g);

    if (backend == Backend::dense) {
        if (basis.size() > dense_arc_cap)
            throw DenseCapError("dense backend refused: " + std::to_string(basis.size()) +
                                " arcs exceed cap " + std::to_string(dense_arc_cap));
        AdjacencyMatrix a = adjacency_matrix(g);
        DegreeVector d = degrees(a);
        TransitionMatrix p = transition_matrix(a, d);
        Operator pi = projector(basis, p);
        Operator g_refl = grover_reflection(pi);
        Operator s = swap_operator(basis);
        Operator u = dense_product(g_refl, s, OperatorKind::walk);
        return WalkOperator{std::move(u), std::move(basis), backend};
    }

    Operator u = sparse_walk_from_scatter_rule(basis);
    return WalkOperator{std::move(u), std::move(basis), backend};
}

ArcStateVector apply_step(const WalkOperator& u, const ArcStateVector& s) {
    return ArcStateVector{u.op.apply(s.amplitudes)};
}

ArcStateVector apply_step_adjoint(const WalkOperator& u, const ArcStateVector& s) {
    return ArcStateVector{u.op.apply_adjoint(s.amplitudes)};
}

double unitarity_deviation(const Operator& u) {
    double dev = 0.0;
    if (u.is_sparse) {
        // column-by-column: U^H (U e_c) should be e_c
        std::vector<Complex> e(static_cast<std::size_t>(u.dim), Complex{0.0, 0.0});
        for (int c = 0; c < u.dim; ++c) {
            e[static_cast<std::size_t>(c)] = 1.0;
            std::vector<Complex> round_trip = u.apply_adjoint(u.apply(e));
            for (int r = 0; r < u.dim; ++r) {
                Complex expect = r == c ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
                dev = std::max(dev, std::abs(round_trip[static_cast<std::size_t>(r)] - expect));
            }
            e[static_cast<std::size_t>(c)] = 0.0;
        }
        return dev;
    }
    for (int r = 0; r < u.dim; ++r) {
        for (int c = 0; c < u.dim; ++c) {
            Complex sum{0.0, 0.0};
            for (int m = 0; m < u.dim; ++m) sum += std::conj(u.at(m, r)) * u.at(m, c);
            if (r == c) sum -= 1.0;
            dev = std::max(dev, std::abs(sum));
        }
    }
    return dev;
}

double involution_deviation(const Operator& u) {
    double dev = 0.0;
    for (int r = 0; r < u.dim; ++r) {
        for (int c = 0; c < u.dim; ++c) {
            Complex sum{0.0, 0.0};
            for (int m = 0; m < u.dim; ++m) sum += u.at(r, m) * u.at(m, c);
            if (r == c) sum -= 1.0;
            dev = std::max(dev, std::abs(sum));
        }
    }
    return dev;
}

double projector_deviation(const Operator& p) {
    double dev = 0.0;
    for (int r = 0; r < p.dim; ++r) {
        for (int c = 0; c < p.dim; ++c) {
            Complex sum{0.0, 0.0};
            for (int m = 0; m < p.dim; ++m) sum += p.at(r, m) * p.at(m, c);
            dev = std::max(dev, std::abs(sum - p.at(r, c)));
        }
    }
    return dev;
}

double hermiticity_deviation(const Operator& p) {
    double dev = 0.0;
    for (int r = 0; r < p.dim; ++r) {
        for (int c = 0; c < p.dim; ++c) {
            dev = std::max(dev, std::abs(p.at(r, c) - std::conj(p.at(c, r))));
        }
    }
    return dev;
}

double max_entry_difference(const Operator& a, const Operator& b) {
    if (a.dim != b.dim) throw std::invalid_argument("max_entry_difference: dimension mismatch");
    double dev = 0.0;
    for (int r = 0; r < a.dim; ++r) {
        for (int c = 0; c < a.dim; ++c) {
            dev = std::max(dev, std::abs(a.at(r, c) - b.at(r, c)));
        }
    }
    return dev;
}

Complex operator_trace(const Operator& p) {
    Complex sum{0.0, 0.0};
    for (int i = 0; i < p.dim; ++i) sum += p.at(i, i);
    return sum;
}

std::string operator_to_json(const Operator& op, const ArcBasis& basis) {
    nlohmann::json out;
    switch (op.kind) {
        case OperatorKind::projector: out["kind"] = "projector"; break;
        case OperatorKind::reflection: out["kind"] = "reflection"; break;
        case OperatorKind::swap: out["kind"] = "swap"; break;
        case OperatorKind::walk: out["kind"] = "walk"; break;
    }
    out["dim"] = op.dim;
    nlohmann::json arcs = nlohmann::json::array();
    for (const Arc& a : basis.arcs()) arcs.push_back({a.tail, a.head});
    out["arcs"] = std::move(arcs);

    nlohmann::json triplets = nlohmann::json::array();
    if (op.is_sparse) {
        for (int c = 0; c < op.dim; ++c) {
            for (std::size_t k = op.col_start[static_cast<std::size_t>(c)];
                 k < op.col_start[static_cast<std::size_t>(c) + 1]; ++k) {
                triplets.push_back(
                    {op.row_index[k], c, op.values[k].real(), op.values[k].imag()});
            }
        }
    } else {
        for (int c = 0; c < op.dim; ++c) {
            for (int r = 0; r < op.dim; ++r) {
                Complex v = op.at(r, c);
                if (v != Complex{0.0, 0.0}) triplets.push_back({r, c, v.real(), v.imag()});
            }
        }
    }
    out["triplets"] = std::move(triplets);
    return out.dump();
}

}  // namespace qwalk
