#include "tnn/diagram.hpp"

#include <sstream>

#include "tnn/errors.hpp"
#include "tnn/limits.hpp"
#include "tnn/minors.hpp"
#include "tnn/reduction.hpp"

namespace tnn {

namespace {

void require_shape(int m, int p) {
    if (m < 1 || p < 1) {
        throw DomainError("diagram dimensions must be positive");
    }
}

std::vector<std::uint8_t> cells_from_set(int m, int p, const std::set<GridIndex>& black) {
    require_shape(m, p);
    std::vector<std::uint8_t> cells(static_cast<std::size_t>(m * p), 0);
    for (const GridIndex& g : black) {
        if (g.row < 1 || g.row > m || g.col < 1 || g.col > p) {
            std::ostringstream msg;
            msg << "box " << g << " outside " << m << 'x' << p << " diagram";
            throw DomainError(msg.str());
        }
        cells[static_cast<std::size_t>((g.row - 1) * p + (g.col - 1))] = 1;
    }
    return cells;
}

// First black box violating the condition, if any.
std::optional<GridIndex> cauchon_violation(int m, int p, const std::vector<std::uint8_t>& cells) {
    auto black = [&](int i, int a) { return cells[static_cast<std::size_t>((i - 1) * p + (a - 1))] != 0; };
    for (int i = 1; i <= m; ++i) {
        for (int a = 1; a <= p; ++a) {
            if (!black(i, a)) continue;
            bool left = true;
            for (int b = 1; b < a && left; ++b) left = black(i, b);
            bool above = true;
            for (int k = 1; k < i && above; ++k) above = black(k, a);
            if (!left && !above) return GridIndex{i, a};
        }
    }
    return std::nullopt;
}

}  // namespace

CauchonDiagram::CauchonDiagram(int m, int p, std::vector<std::uint8_t> cells, Unchecked)
    : m_(m), p_(p), black_(std::move(cells)) {}

CauchonDiagram::CauchonDiagram(int m, int p, const std::set<GridIndex>& black)
    : m_(m), p_(p), black_(cells_from_set(m, p, black)) {
    if (auto bad = cauchon_violation(m, p, black_)) {
        std::ostringstream msg;
        msg << "not a Cauchon diagram: black box " << *bad
            << " has a white box both to its left and above it";
        throw DomainError(msg.str());
    }
}

CauchonDiagram CauchonDiagram::all_white(int m, int p) {
    require_shape(m, p);
    return {m, p, std::vector<std::uint8_t>(static_cast<std::size_t>(m * p), 0), Unchecked{}};
}

CauchonDiagram CauchonDiagram::all_black(int m, int p) {
    require_shape(m, p);
    return {m, p, std::vector<std::uint8_t>(static_cast<std::size_t>(m * p), 1), Unchecked{}};
}

CauchonDiagram CauchonDiagram::from_lines(const std::vector<std::string>& lines) {
    if (lines.empty()) {
        throw ParseError("diagram has no rows");
    }
    const int m = static_cast<int>(lines.size());
    const int p = static_cast<int>(lines.front().size());
    if (p == 0) {
        throw ParseError("diagram row 1 is empty");
    }
    std::set<GridIndex> black;
    for (int i = 1; i <= m; ++i) {
        const std::string& line = lines[static_cast<std::size_t>(i - 1)];
        if (static_cast<int>(line.size()) != p) {
            throw ParseError("diagram row " + std::to_string(i) + " has " + std::to_string(line.size()) +
                             " boxes, expected " + std::to_string(p));
        }
        for (int a = 1; a <= p; ++a) {
            const char c = line[static_cast<std::size_t>(a - 1)];
            if (c == '#') {
                black.insert({i, a});
            } else if (c != '.') {
                throw ParseError("diagram row " + std::to_string(i) + ": unexpected character '" +
                                 std::string(1, c) + "'");
            }
        }
    }
    return CauchonDiagram(m, p, black);
}

CauchonDiagram CauchonDiagram::parse_ascii(std::string_view text) {
    std::vector<std::string> lines;
    std::string current;
    for (char c : text) {
        if (c == '\n') {
            if (!current.empty() && current.back() == '\r') current.pop_back();
            lines.push_back(current);
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    if (!current.empty()) lines.push_back(current);
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    return from_lines(lines);
}

bool CauchonDiagram::is_black(int i, int alpha) const {
    if (i < 1 || i > m_ || alpha < 1 || alpha > p_) {
        std::ostringstream msg;
        msg << "box (" << i << ',' << alpha << ") outside " << m_ << 'x' << p_ << " diagram";
        throw DomainError(msg.str());
    }
    return black_[static_cast<std::size_t>((i - 1) * p_ + (alpha - 1))] != 0;
}

std::set<GridIndex> CauchonDiagram::black_boxes() const {
    std::set<GridIndex> out;
    for (int i = 1; i <= m_; ++i) {
        for (int a = 1; a <= p_; ++a) {
            if (is_black(i, a)) out.insert({i, a});
        }
    }
    return out;
}

std::size_t CauchonDiagram::black_count() const {
    std::size_t n = 0;
    for (auto c : black_) n += c;
    return n;
}

std::vector<std::string> CauchonDiagram::ascii_lines() const {
    std::vector<std::string> lines;
    for (int i = 1; i <= m_; ++i) {
        std::string row;
        for (int a = 1; a <= p_; ++a) row.push_back(is_black(i, a) ? '#' : '.');
        lines.push_back(std::move(row));
    }
    return lines;
}

std::string CauchonDiagram::to_ascii() const {
    std::string out;
    for (const auto& line : ascii_lines()) {
        out += line;
        out += '\n';
    }
    return out;
}

std::string CauchonDiagram::fingerprint() const {
    std::string bits;
    bits.reserve(black_.size());
    for (auto c : black_) bits.push_back(c ? '1' : '0');
    return bits;
}

bool is_cauchon(int m, int p, const std::set<GridIndex>& black) {
    return !cauchon_violation(m, p, cells_from_set(m, p, black)).has_value();
}

void for_each_diagram(int m, int p, const std::function<void(const CauchonDiagram&)>& visit) {
    require_shape(m, p);
    require_cells_within(m, p, kMaxEnumerationCells, "enumerate_diagrams");

    const auto cells = static_cast<std::size_t>(m * p);
    std::vector<std::uint8_t> grid(cells, 0);
    // col_black[a]: every box above the current row in column a is black.
    std::vector<std::uint8_t> col_black(static_cast<std::size_t>(p), 1);

    // Depth-first over boxes in row-major order, white before black, so the
    // output is sorted by fingerprint. State is restored on backtrack.
    std::function<void(std::size_t, bool)> place = [&](std::size_t pos, bool row_black) {
        if (pos == cells) {
            visit(CauchonDiagram(m, p, grid, CauchonDiagram::Unchecked{}));
            return;
        }
        const int a = static_cast<int>(pos % static_cast<std::size_t>(p));
        if (a == 0) row_black = true;
        const std::uint8_t col_prev = col_black[static_cast<std::size_t>(a)];

        grid[pos] = 0;
        col_black[static_cast<std::size_t>(a)] = 0;
        place(pos + 1, false);
        col_black[static_cast<std::size_t>(a)] = col_prev;

        if (row_black || col_prev) {
            grid[pos] = 1;
            place(pos + 1, row_black);
            grid[pos] = 0;
        }
    };
    place(0, true);
}

std::vector<CauchonDiagram> enumerate_diagrams(int m, int p) {
    std::vector<CauchonDiagram> out;
    for_each_diagram(m, p, [&](const CauchonDiagram& c) { out.push_back(c); });
    return out;
}

std::uint64_t count_diagrams(int m, int p) {
    std::uint64_t n = 0;
    for_each_diagram(m, p, [&](const CauchonDiagram&) { ++n; });
    return n;
}

CauchonDiagram random_diagram(int m, int p, std::mt19937_64& rng, double black_probability) {
    require_shape(m, p);
    std::bernoulli_distribution coin(black_probability);
    std::vector<std::uint8_t> grid(static_cast<std::size_t>(m * p), 0);
    std::vector<std::uint8_t> col_black(static_cast<std::size_t>(p), 1);
    for (int i = 0; i < m; ++i) {
        bool row_black = true;
        for (int a = 0; a < p; ++a) {
            const bool may_be_black = row_black || col_black[static_cast<std::size_t>(a)];
            const bool black = may_be_black && coin(rng);
            grid[static_cast<std::size_t>(i * p + a)] = black ? 1 : 0;
            if (!black) {
                row_black = false;
                col_black[static_cast<std::size_t>(a)] = 0;
            }
        }
    }
    return {m, p, std::move(grid), CauchonDiagram::Unchecked{}};
}

DiagramCensus census(int m, int p, bool with_det_stats, bool keep_per_diagram) {
    if (with_det_stats && m != p) {
        throw DomainError("determinant statistics need a square shape");
    }
    DiagramCensus result;
    result.m = m;
    result.p = p;
    std::uint64_t vanishing = 0;
    for_each_diagram(m, p, [&](const CauchonDiagram& c) {
        ++result.total_diagrams;
        bool vanishes = false;
        if (with_det_stats) {
            vanishes = determinant(representative(c)).is_zero();
            if (vanishes) ++vanishing;
        }
        if (keep_per_diagram) result.per_diagram.push_back({c.fingerprint(), vanishes});
    });
    if (with_det_stats) result.det_vanishing = vanishing;
    return result;
}

bool diagram_count_exceeds_power_bound(int m, int p) {
    const std::uint64_t total = count_diagrams(m, p);
    std::uint64_t power = 1;
    for (int k = 0; k < p; ++k) {
        power *= static_cast<std::uint64_t>(m);
        if (power >= total) return false;
    }
    return total > power;
}

}  // namespace tnn
