#include "tnn/recognition.hpp"

#include <sstream>

#include "tnn/errors.hpp"
#include "tnn/reduction.hpp"

namespace tnn {

CellMinorScheme::CellMinorScheme(CauchonDiagram diagram, std::vector<Entry> entries)
    : diagram_(std::move(diagram)), entries_(std::move(entries)) {
    const int m = diagram_.rows();
    const int p = diagram_.cols();
    if (entries_.size() != static_cast<std::size_t>(m * p)) {
        throw DomainError("scheme must have exactly one entry per box");
    }
    std::size_t k = 0;
    for (int i = 1; i <= m; ++i) {
        for (int a = 1; a <= p; ++a, ++k) {
            const Entry& e = entries_[k];
            std::ostringstream where;
            where << "scheme entry for box (" << i << ',' << a << ')';
            if (e.box != GridIndex{i, a}) {
                throw DomainError(where.str() + ": entries must be in row-major box order");
            }
            if (e.sequence.points.empty() || e.sequence.start() != e.box) {
                throw DomainError(where.str() + ": sequence does not start at its box");
            }
            if (!is_lacunary(diagram_, e.sequence.points)) {
                throw DomainError(where.str() + ": sequence is not lacunary for the diagram");
            }
            if (e.spec != e.sequence.minor_spec()) {
                throw DomainError(where.str() + ": minor does not match the sequence");
            }
        }
    }
}

const CellMinorScheme::Entry& CellMinorScheme::at(GridIndex box) const {
    if (box.row < 1 || box.row > diagram_.rows() || box.col < 1 || box.col > diagram_.cols()) {
        throw DomainError("scheme box out of range");
    }
    return entries_[static_cast<std::size_t>((box.row - 1) * diagram_.cols() + (box.col - 1))];
}

CellMinorScheme build_scheme(const CauchonDiagram& c) { return build_scheme(c, {}); }

CellMinorScheme build_scheme(const CauchonDiagram& c, const std::map<GridIndex, LacunarySequence>& overrides) {
    for (const auto& [box, seq] : overrides) {
        if (box.row < 1 || box.row > c.rows() || box.col < 1 || box.col > c.cols()) {
            throw DomainError("scheme override for a box outside the diagram");
        }
    }
    std::vector<CellMinorScheme::Entry> entries;
    for (int i = 1; i <= c.rows(); ++i) {
        for (int a = 1; a <= c.cols(); ++a) {
            auto it = overrides.find({i, a});
            LacunarySequence seq = it != overrides.end() ? it->second : lacunary_from(c, i, a);
            MinorSpec spec = seq.minor_spec();
            entries.push_back({{i, a}, std::move(seq), std::move(spec)});
        }
    }
    return CellMinorScheme(c, std::move(entries));
}

const char* to_string(Expectation e) { return e == Expectation::Zero ? "zero" : "positive"; }

MembershipReport membership_test(const Matrix& m, const CellMinorScheme& scheme) {
    const CauchonDiagram& c = scheme.diagram();
    if (m.rows() != c.rows() || m.cols() != c.cols()) {
        throw DomainError("membership_test: matrix shape does not match the scheme");
    }
    MembershipReport report;
    report.verdict = true;
    const MinorCallScope calls;
    for (const auto& e : scheme.entries()) {
        BoxCheck check;
        check.box = e.box;
        check.spec = e.spec;
        check.value = minor(m, e.spec);
        check.expected = c.is_black(e.box) ? Expectation::Zero : Expectation::Positive;
        check.pass = check.expected == Expectation::Zero ? check.value.is_zero() : check.value.is_positive();
        report.verdict = report.verdict && check.pass;
        report.boxes.push_back(std::move(check));
    }
    report.minors_evaluated = calls.calls();
    return report;
}

bool product_identity_check(const Matrix& m, const CauchonDiagram& c, const LacunarySequence& seq) {
    if (m.rows() != c.rows() || m.cols() != c.cols()) {
        throw DomainError("product_identity_check: matrix shape does not match the diagram");
    }
    if (!is_lacunary(c, seq.points)) {
        throw DomainError("product_identity_check: sequence is not lacunary for the diagram");
    }
    const CellAssignment cell = classify(m);
    const bool in_cell_by_reduction = cell.is_tnn && cell.diagram == c;
    if (!in_cell_by_reduction && !membership_test(m, build_scheme(c)).verdict) {
        throw DomainError("product_identity_check: matrix is not in the diagram's cell");
    }
    Rational product = 1;
    for (const GridIndex& g : seq.points) product *= cell.t_matrix(g.row, g.col);
    return minor(m, seq.minor_spec()) == product;
}

std::optional<CauchonDiagram> cell_of(const Matrix& m) {
    const CellAssignment cell = classify(m);
    if (!cell.is_tnn) return std::nullopt;
    if (!membership_test(m, build_scheme(*cell.diagram)).verdict) {
        throw InternalInconsistency("cell_of: reduction places the matrix in cell\n" + cell.diagram->to_ascii() +
                                    "but its minor scheme rejects it");
    }
    return cell.diagram;
}

}  // namespace tnn
