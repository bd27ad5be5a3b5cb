#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "tnn/diagram.hpp"
#include "tnn/lacunary.hpp"
#include "tnn/matrix.hpp"
#include "tnn/minors.hpp"

namespace tnn {

/// The m*p-minor membership test for one cell: for every box (j, b) a
/// lacunary sequence starting there and the minor on its rows and columns.
class CellMinorScheme {
public:
    struct Entry {
        GridIndex box;
        LacunarySequence sequence;
        MinorSpec spec;
    };

    /// Throws DomainError unless there is exactly one entry per box, each
    /// sequence is lacunary for `diagram` and starts at its box.
    CellMinorScheme(CauchonDiagram diagram, std::vector<Entry> entries);

    const CauchonDiagram& diagram() const { return diagram_; }
    /// Row-major by box.
    const std::vector<Entry>& entries() const { return entries_; }
    const Entry& at(GridIndex box) const;

private:
    CauchonDiagram diagram_;
    std::vector<Entry> entries_;
};

/// One lacunary sequence per box from lacunary_from.
CellMinorScheme build_scheme(const CauchonDiagram& c);

/// build_scheme(c) with some boxes' sequences replaced. Throws DomainError
/// if an override is not lacunary or does not start at its box.
CellMinorScheme build_scheme(const CauchonDiagram& c, const std::map<GridIndex, LacunarySequence>& overrides);

enum class Expectation { Zero, Positive };

const char* to_string(Expectation e);

struct BoxCheck {
    GridIndex box;
    MinorSpec spec;
    Rational value;
    Expectation expected = Expectation::Positive;
    bool pass = false;
};

struct MembershipReport {
    std::vector<BoxCheck> boxes;  // row-major
    bool verdict = false;
    std::uint64_t minors_evaluated = 0;
};

/// Evaluates the scheme's m*p minors: passes iff every black box gives 0 and
/// every white box gives > 0, which holds exactly when M is totally
/// nonnegative and lies in the scheme's cell. Throws DomainError on a shape
/// mismatch.
MembershipReport membership_test(const Matrix& m, const CellMinorScheme& scheme);

/// Checks minor(M, seq) = product of t-values of M along seq. Requires that
/// M lies in the cell of C, established by the reduction or by the scheme's
/// sign pattern; throws DomainError otherwise, or if seq is not lacunary for C.
bool product_identity_check(const Matrix& m, const CauchonDiagram& c, const LacunarySequence& seq);

/// The diagram of M's cell when M is totally nonnegative. Runs both the
/// reduction and the minor-scheme test and throws InternalInconsistency if
/// they disagree.
std::optional<CauchonDiagram> cell_of(const Matrix& m);

}  // namespace tnn
