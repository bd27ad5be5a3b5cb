#pragma once

#include <optional>
#include <random>
#include <vector>

#include "tnn/diagram.hpp"
#include "tnn/matrix.hpp"
#include "tnn/rational.hpp"

namespace tnn {

/// One step of the reduction: the box r = (j, b) and the pivot x^{(r+)}_{j,b}
/// used there. A zero pivot means the step left the matrix unchanged.
struct ReductionStep {
    GridIndex r;
    Rational pivot;
};

struct ReductionTrace {
    Matrix input;
    /// In execution order: r runs from (m,p) down to (1,2).
    std::vector<ReductionStep> steps;
    /// M^{(r)} after each step, parallel to `steps`; empty unless requested.
    std::vector<Matrix> intermediates;
    /// The reduced matrix, t_{i,a} = x^{(1,2)}_{i,a}.
    Matrix t_matrix;
};

/// Cauchon reduction (deleting derivations). Sweeps r over E° in decreasing
/// lexicographic order; at r = (j,b) with nonzero pivot x_{j,b}, every entry
/// with i < j and a < b becomes x_{i,a} - x_{i,b} x_{j,b}^{-1} x_{j,a}.
ReductionTrace cauchon_reduce(const Matrix& m, bool keep_intermediates = false);

/// Just the reduced matrix.
Matrix reduced_matrix(const Matrix& m);

struct CellAssignment {
    /// pi(M); present exactly when is_tnn.
    std::optional<CauchonDiagram> diagram;
    Matrix t_matrix;
    bool is_tnn = false;
};

/// M is tnn iff its reduced matrix is nonnegative with a Cauchon zero set;
/// that zero set is then the diagram of M's cell.
CellAssignment classify(const Matrix& m);

/// True iff every entry is >= 0 and the zero entries form a Cauchon diagram.
bool is_nonnegative_cauchon_matrix(const Matrix& t);

/// Inverse of cauchon_reduce on cell data: sweeps r upward from (1,2) and
/// adds back x_{i,b} x_{j,b}^{-1} x_{j,a}. Throws DomainError unless t is a
/// nonnegative Cauchon matrix.
Matrix restore(const Matrix& t);

/// t-values 0 on black boxes and `white_values` (which must be > 0 there)
/// elsewhere. Throws DomainError on shape mismatch or a nonpositive white value.
Matrix t_values_for(const CauchonDiagram& c, const Matrix& white_values);

/// restore() of the t-matrix with 0 on black boxes and 1 on white boxes.
Matrix representative(const CauchonDiagram& c);

/// restore() of a t-matrix with random values n/d, 1 <= n, d <= max_part,
/// on the white boxes.
Matrix random_representative(const CauchonDiagram& c, std::mt19937_64& rng, int max_part = 9);

/// For a totally positive M checks t_{i,a} [i+1..i+r | a+1..a+r] = [i..i+r | a..a+r]
/// for every (i,a), r = min(m-i, p-a). Throws DomainError if M fails the
/// final-minor total positivity test.
bool tp_t_formula_check(const Matrix& m);

}  // namespace tnn
