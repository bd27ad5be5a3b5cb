#pragma once

#include <vector>

#include "tnn/diagram.hpp"
#include "tnn/matrix.hpp"
#include "tnn/minors.hpp"

namespace tnn {

/// A chain of boxes ((i_0,a_0), ..., (i_t,a_t)) that is lacunary with respect
/// to some diagram. Construct through lacunary_from / all_lacunary_from, or
/// check arbitrary point lists with is_lacunary.
struct LacunarySequence {
    std::vector<GridIndex> points;

    GridIndex start() const { return points.front(); }
    /// The minor on the sequence's rows and columns.
    MinorSpec minor_spec() const;

    friend bool operator==(const LacunarySequence&, const LacunarySequence&) = default;
};

/// Checks the six defining conditions:
///  1. at least one point;
///  2. every point after the first is white;
///  3. rows and columns strictly increase;
///  4. every box strictly south-east of the last point is black;
///  5. for each s, the rows strictly between i_s and i_{s+1} are black either
///     on all columns > a_s or on all columns in [a_0, a_{s+1});
///  6. for each s, the columns strictly between a_s and a_{s+1} are black
///     either on all rows > i_s or on all rows < i_{s+1}.
/// Throws DomainError if a point is outside the diagram.
bool is_lacunary(const CauchonDiagram& c, const std::vector<GridIndex>& points);

/// The canonical lacunary sequence starting at (j, beta). While the part of
/// the diagram strictly south-east of the current point (i, a) has a white
/// box, the next point is chosen by the first applicable rule:
///  - rows > i are black on columns <= a: take the first column with a white
///    box below row i, then the first white row below i in it;
///  - columns > a are black on rows <= i: take the first row with a white box
///    right of column a, then the first white column right of a in it;
///  - otherwise: take the first column right of a with a white box in rows
///    <= i, then the first white row below i in it.
/// Throws DomainError if (j, beta) is outside the diagram.
LacunarySequence lacunary_from(const CauchonDiagram& c, int j, int beta);

/// Every lacunary sequence starting at (j, beta), by exhaustive search over
/// increasing chains. Guarded by kMaxLacunarySearchCells.
std::vector<LacunarySequence> all_lacunary_from(const CauchonDiagram& c, int j, int beta);

}  // namespace tnn
