#include "tnn/reduction.hpp"

#include <set>

#include "tnn/errors.hpp"
#include "tnn/minors.hpp"

namespace tnn {

namespace {

std::set<GridIndex> zero_set(const Matrix& t) {
    std::set<GridIndex> zeros;
    for (int i = 1; i <= t.rows(); ++i) {
        for (int a = 1; a <= t.cols(); ++a) {
            if (t(i, a).is_zero()) zeros.insert({i, a});
        }
    }
    return zeros;
}

bool all_nonnegative(const Matrix& t) {
    for (const Rational& x : t.entries()) {
        if (x.is_negative()) return false;
    }
    return true;
}

}  // namespace

ReductionTrace cauchon_reduce(const Matrix& m, bool keep_intermediates) {
    ReductionTrace trace;
    trace.input = m;
    Matrix x = m;
    const int rows = m.rows();
    const int cols = m.cols();
    for (int j = rows; j >= 1; --j) {
        for (int b = cols; b >= 1; --b) {
            if (j == 1 && b == 1) break;
            // x holds M^{(r+)} here; entries at or after r are final.
            const Rational pivot = x(j, b);
            if (!pivot.is_zero()) {
                for (int i = 1; i < j; ++i) {
                    if (x(i, b).is_zero()) continue;
                    const Rational factor = x(i, b) / pivot;
                    for (int a = 1; a < b; ++a) {
                        x(i, a) -= factor * x(j, a);
                    }
                }
            }
            trace.steps.push_back({{j, b}, pivot});
            if (keep_intermediates) trace.intermediates.push_back(x);
        }
    }
    trace.t_matrix = std::move(x);
    return trace;
}

Matrix reduced_matrix(const Matrix& m) { return cauchon_reduce(m).t_matrix; }

bool is_nonnegative_cauchon_matrix(const Matrix& t) {
    return all_nonnegative(t) && is_cauchon(t.rows(), t.cols(), zero_set(t));
}

CellAssignment classify(const Matrix& m) {
    CellAssignment out;
    out.t_matrix = reduced_matrix(m);
    if (all_nonnegative(out.t_matrix)) {
        const auto zeros = zero_set(out.t_matrix);
        if (is_cauchon(m.rows(), m.cols(), zeros)) {
            out.is_tnn = true;
            out.diagram = CauchonDiagram(m.rows(), m.cols(), zeros);
        }
    }
    return out;
}

Matrix restore(const Matrix& t) {
    if (!all_nonnegative(t)) {
        throw DomainError("restore: t-matrix has a negative entry");
    }
    if (!is_cauchon(t.rows(), t.cols(), zero_set(t))) {
        throw DomainError("restore: zero entries of the t-matrix do not form a Cauchon diagram");
    }
    Matrix x = t;
    const int rows = t.rows();
    const int cols = t.cols();
    for (int j = 1; j <= rows; ++j) {
        for (int b = 1; b <= cols; ++b) {
            if (j == 1 && b == 1) continue;
            // x holds M^{(r)}; the pivot, row j and column b are untouched by step r.
            const Rational& pivot = x(j, b);
            if (pivot.is_zero()) continue;
            for (int i = 1; i < j; ++i) {
                if (x(i, b).is_zero()) continue;
                const Rational factor = x(i, b) / pivot;
                for (int a = 1; a < b; ++a) {
                    x(i, a) += factor * x(j, a);
                }
            }
        }
    }
    return x;
}

Matrix t_values_for(const CauchonDiagram& c, const Matrix& white_values) {
    if (white_values.rows() != c.rows() || white_values.cols() != c.cols()) {
        throw DomainError("t_values_for: value matrix shape does not match the diagram");
    }
    Matrix t(c.rows(), c.cols());
    for (int i = 1; i <= c.rows(); ++i) {
        for (int a = 1; a <= c.cols(); ++a) {
            if (c.is_black(i, a)) continue;
            if (!white_values(i, a).is_positive()) {
                throw DomainError("t_values_for: white boxes need positive values");
            }
            t(i, a) = white_values(i, a);
        }
    }
    return t;
}

Matrix representative(const CauchonDiagram& c) {
    Matrix ones(c.rows(), c.cols());
    for (int i = 1; i <= c.rows(); ++i) {
        for (int a = 1; a <= c.cols(); ++a) ones(i, a) = 1;
    }
    return restore(t_values_for(c, ones));
}

Matrix random_representative(const CauchonDiagram& c, std::mt19937_64& rng, int max_part) {
    if (max_part < 1) {
        throw DomainError("random_representative: max_part must be >= 1");
    }
    std::uniform_int_distribution<int> part(1, max_part);
    Matrix values(c.rows(), c.cols());
    for (int i = 1; i <= c.rows(); ++i) {
        for (int a = 1; a <= c.cols(); ++a) {
            const int n = part(rng);
            const int d = part(rng);
            values(i, a) = Rational(n, d);
        }
    }
    return restore(t_values_for(c, values));
}

bool tp_t_formula_check(const Matrix& m) {
    if (!gasca_pena_tp_test(m)) {
        throw DomainError("tp_t_formula_check: matrix is not totally positive");
    }
    const Matrix t = reduced_matrix(m);
    const int rows = m.rows();
    const int cols = m.cols();
    for (int i = 1; i <= rows; ++i) {
        for (int a = 1; a <= cols; ++a) {
            const MinorSpec outer = final_minor_at(i, a, rows, cols);
            const Rational big = minor(m, outer);
            Rational small = 1;
            if (outer.size() > 1) {
                MinorSpec inner{{outer.rows.begin() + 1, outer.rows.end()},
                                {outer.cols.begin() + 1, outer.cols.end()}};
                small = minor(m, inner);
            }
            if (t(i, a) * small != big) return false;
        }
    }
    return true;
}

}  // namespace tnn
