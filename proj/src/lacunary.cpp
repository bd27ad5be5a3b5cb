#include "tnn/lacunary.hpp"

#include <functional>
#include <sstream>

#include "tnn/errors.hpp"
#include "tnn/limits.hpp"

namespace tnn {

namespace {

void require_box(const CauchonDiagram& c, GridIndex g, const char* who) {
    if (g.row < 1 || g.row > c.rows() || g.col < 1 || g.col > c.cols()) {
        std::ostringstream msg;
        msg << who << ": box " << g << " outside " << c.rows() << 'x' << c.cols() << " diagram";
        throw DomainError(msg.str());
    }
}

// Every box with row in [r0, r1] and column in [c0, c1] is black (vacuous if empty).
bool block_black(const CauchonDiagram& c, int r0, int r1, int c0, int c1) {
    for (int i = r0; i <= r1; ++i) {
        for (int a = c0; a <= c1; ++a) {
            if (c.is_white(i, a)) return false;
        }
    }
    return true;
}

}  // namespace

MinorSpec LacunarySequence::minor_spec() const {
    MinorSpec s;
    for (const GridIndex& g : points) {
        s.rows.push_back(g.row);
        s.cols.push_back(g.col);
    }
    return s;
}

bool is_lacunary(const CauchonDiagram& c, const std::vector<GridIndex>& points) {
    for (const GridIndex& g : points) require_box(c, g, "is_lacunary");

    const int m = c.rows();
    const int p = c.cols();
    if (points.empty()) return false;  // 1
    const std::size_t t = points.size() - 1;

    for (std::size_t s = 1; s <= t; ++s) {  // 2
        if (c.is_black(points[s])) return false;
    }
    for (std::size_t s = 0; s < t; ++s) {  // 3
        if (points[s].row >= points[s + 1].row || points[s].col >= points[s + 1].col) return false;
    }
    if (!block_black(c, points[t].row + 1, m, points[t].col + 1, p)) return false;  // 4

    const int a0 = points[0].col;
    for (std::size_t s = 0; s < t; ++s) {
        const GridIndex cur = points[s];
        const GridIndex next = points[s + 1];
        const bool five = block_black(c, cur.row + 1, next.row - 1, cur.col + 1, p) ||
                          block_black(c, cur.row + 1, next.row - 1, a0, next.col - 1);
        if (!five) return false;
        const bool six = block_black(c, cur.row + 1, m, cur.col + 1, next.col - 1) ||
                         block_black(c, 1, next.row - 1, cur.col + 1, next.col - 1);
        if (!six) return false;
    }
    return true;
}

LacunarySequence lacunary_from(const CauchonDiagram& c, int j, int beta) {
    require_box(c, {j, beta}, "lacunary_from");
    const int m = c.rows();
    const int p = c.cols();

    LacunarySequence seq;
    seq.points.push_back({j, beta});
    int i = j;
    int a = beta;
    while (!block_black(c, i + 1, m, a + 1, p)) {
        int next_row = 0;
        int next_col = 0;
        if (block_black(c, i + 1, m, 1, a)) {
            // First non-black column of the rows below i.
            for (int col = 1; col <= p && next_col == 0; ++col) {
                if (!block_black(c, i + 1, m, col, col)) next_col = col;
            }
            for (int k = i + 1; k <= m && next_row == 0; ++k) {
                if (c.is_white(k, next_col)) next_row = k;
            }
        } else if (block_black(c, 1, i, a + 1, p)) {
            // First non-black row of the columns right of a.
            for (int k = 1; k <= m && next_row == 0; ++k) {
                if (!block_black(c, k, k, a + 1, p)) next_row = k;
            }
            for (int col = a + 1; col <= p && next_col == 0; ++col) {
                if (c.is_white(next_row, col)) next_col = col;
            }
        } else {
            for (int col = a + 1; col <= p && next_col == 0; ++col) {
                if (!block_black(c, 1, i, col, col)) next_col = col;
            }
            for (int k = i + 1; k <= m && next_row == 0; ++k) {
                if (c.is_white(k, next_col)) next_row = k;
            }
        }
        if (next_row == 0 || next_col == 0 || next_row <= i || next_col <= a) {
            throw InternalInconsistency("lacunary_from: no admissible successor; input is not a Cauchon diagram");
        }
        seq.points.push_back({next_row, next_col});
        i = next_row;
        a = next_col;
    }
    return seq;
}

std::vector<LacunarySequence> all_lacunary_from(const CauchonDiagram& c, int j, int beta) {
    require_box(c, {j, beta}, "all_lacunary_from");
    require_cells_within(c.rows(), c.cols(), kMaxLacunarySearchCells, "all_lacunary_from");

    std::vector<LacunarySequence> found;
    std::vector<GridIndex> chain{{j, beta}};
    std::function<void()> extend = [&] {
        if (is_lacunary(c, chain)) found.push_back({chain});
        const GridIndex last = chain.back();
        for (int i = last.row + 1; i <= c.rows(); ++i) {
            for (int a = last.col + 1; a <= c.cols(); ++a) {
                if (c.is_black(i, a)) continue;  // condition 2 prunes black successors
                chain.push_back({i, a});
                extend();
                chain.pop_back();
            }
        }
    };
    extend();
    return found;
}

}  // namespace tnn
