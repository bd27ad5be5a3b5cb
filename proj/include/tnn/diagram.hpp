#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "tnn/matrix.hpp"

namespace tnn {

/// An m x p grid of black and white boxes in which every black box has
/// either its whole row segment to the left black or its whole column
/// segment above black. Immutable once built.
class CauchonDiagram {
public:
    /// Throws DomainError if the indices are out of range or the Cauchon
    /// condition fails.
    CauchonDiagram(int m, int p, const std::set<GridIndex>& black);

    static CauchonDiagram all_white(int m, int p);
    static CauchonDiagram all_black(int m, int p);

    /// Parses the ASCII grid ('#' black, '.' white, one line per row).
    /// Throws ParseError on malformed text, DomainError if not Cauchon.
    static CauchonDiagram parse_ascii(std::string_view text);
    /// Same, from one string per row.
    static CauchonDiagram from_lines(const std::vector<std::string>& lines);

    int rows() const { return m_; }
    int cols() const { return p_; }

    /// Throws DomainError outside the grid.
    bool is_black(int i, int alpha) const;
    bool is_black(GridIndex g) const { return is_black(g.row, g.col); }
    bool is_white(int i, int alpha) const { return !is_black(i, alpha); }

    std::set<GridIndex> black_boxes() const;
    std::size_t black_count() const;

    /// Rows as ASCII, '#' black and '.' white.
    std::vector<std::string> ascii_lines() const;
    /// ascii_lines() joined, each row newline-terminated.
    std::string to_ascii() const;
    /// Row-major '1' (black) / '0' (white) string.
    std::string fingerprint() const;

    friend bool operator==(const CauchonDiagram&, const CauchonDiagram&) = default;

private:
    struct Unchecked {};
    CauchonDiagram(int m, int p, std::vector<std::uint8_t> cells, Unchecked);

    friend void for_each_diagram(int, int, const std::function<void(const CauchonDiagram&)>&);
    friend CauchonDiagram random_diagram(int, int, std::mt19937_64&, double);

    int m_ = 0;
    int p_ = 0;
    std::vector<std::uint8_t> black_;  // row-major
};

/// True iff every black box has its strict-left row segment black or its
/// strict-above column segment black. Throws DomainError on out-of-range boxes.
bool is_cauchon(int m, int p, const std::set<GridIndex>& black);

/// Visits every m x p Cauchon diagram once, in increasing fingerprint order.
/// Guarded by kMaxEnumerationCells (CapacityError).
void for_each_diagram(int m, int p, const std::function<void(const CauchonDiagram&)>& visit);

/// All m x p Cauchon diagrams, in increasing fingerprint order.
std::vector<CauchonDiagram> enumerate_diagrams(int m, int p);

std::uint64_t count_diagrams(int m, int p);

/// A random diagram grown box by box: each box that may legally be black is
/// black with probability black_probability. Works for any size.
CauchonDiagram random_diagram(int m, int p, std::mt19937_64& rng, double black_probability = 0.5);

struct DiagramCensus {
    struct Entry {
        std::string fingerprint;
        bool determinant_vanishes = false;
    };

    int m = 0;
    int p = 0;
    std::uint64_t total_diagrams = 0;
    /// Only for square shapes with determinant statistics requested.
    std::optional<std::uint64_t> det_vanishing;
    std::vector<Entry> per_diagram;
};

/// Counts diagrams; for m = p with with_det_stats, also counts the cells whose
/// t = 1 representative has vanishing determinant (the cells contained in
/// the hypersurface det = 0). Throws DomainError if det stats are requested
/// for a non-square shape.
DiagramCensus census(int m, int p, bool with_det_stats = false, bool keep_per_diagram = false);

/// True iff there are more than m^p diagrams.
bool diagram_count_exceeds_power_bound(int m, int p);

}  // namespace tnn
