#pragma once

#include <string>
#include <vector>

#include "qwalk/arc_basis.hpp"
#include "qwalk/states.hpp"

namespace qwalk {

enum class OperatorKind { projector, reflection, swap, walk };
enum class Backend { dense, sparse };

inline constexpr int kDefaultDenseCap = 4096;

// Linear operator on the arc space, either a dense row-major matrix or a
// column-compressed sparse matrix (row indices ascending within a column).
struct Operator {
    OperatorKind kind = OperatorKind::walk;
    int dim = 0;
    bool is_sparse = false;

    std::vector<Complex> dense;  // dim*dim, row-major; empty when sparse

    std::vector<std::size_t> col_start;  // dim+1; empty when dense
    std::vector<int> row_index;
    std::vector<Complex> values;

    Complex at(int r, int c) const;
    std::size_t stored_entries() const { return is_sparse ? values.size() : dense.size(); }

    std::vector<Complex> apply(const std::vector<Complex>& x) const;
    std::vector<Complex> apply_adjoint(const std::vector<Complex>& x) const;
};

// Pi = sum_i |psi_i><psi_i| on the arc space: Hermitian, idempotent, rank N.
Operator projector(const ArcBasis& basis, const TransitionMatrix& p);

// G = 2*Pi - I. Throws std::invalid_argument unless pi has projector kind.
Operator grover_reflection(const Operator& pi);

// Permutation sending arc (i, j) to arc (j, i); its own inverse.
Operator swap_operator(const ArcBasis& basis);

// Dense product a*b. Columns of a swap-kind right factor are gathered
// directly instead of running the full triple loop.
Operator dense_product(const Operator& a, const Operator& b, OperatorKind kind);

// One walk step. Each arc (i, j) scatters at its head j onto the out-arcs of
// j: amplitude 2/d(j) - 1 back onto (j, i) and 2/d(j) onto every other (j, k).
// The dense backend composes the Grover reflection with the arc swap; the
// sparse backend fills that scattering stencil column by column without
// forming the projector. Both agree entrywise.
struct WalkOperator {
    Operator op;  // kind walk
    ArcBasis basis;
    Backend backend = Backend::sparse;
};

// Throws DenseCapError when a dense backend is requested above dense_arc_cap,
// ValidationError when the graph has isolated or out-of-range nodes.
WalkOperator walk_operator(const Graph& g, Backend backend = Backend::sparse,
                           int dense_arc_cap = kDefaultDenseCap);

// Applies one step; throws std::invalid_argument on dimension mismatch.
ArcStateVector apply_step(const WalkOperator& u, const ArcStateVector& s);

// Applies the conjugate transpose (undoes one step).
ArcStateVector apply_step_adjoint(const WalkOperator& u, const ArcStateVector& s);

// Law-check helpers; each returns the max absolute entry of the deviation.
double unitarity_deviation(const Operator& u);    // U^H U - I
double involution_deviation(const Operator& u);   // U U - I
double projector_deviation(const Operator& p);    // P P - P
double hermiticity_deviation(const Operator& p);  // P - P^H
double max_entry_difference(const Operator& a, const Operator& b);
Complex operator_trace(const Operator& p);

// Debug/test dump: {"kind", "dim", "arcs": [[tail, head], ...],
// "triplets": [[row, col, re, im], ...]} ordered by (col, row).
std::string operator_to_json(const Operator& op, const ArcBasis& basis);

}  // namespace qwalk
