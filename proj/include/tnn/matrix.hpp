#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "tnn/rational.hpp"

namespace tnn {

/// 1-based (row, column) position in an m x p grid. Ordered lexicographically.
struct GridIndex {
    int row = 1;
    int col = 1;

    friend auto operator<=>(const GridIndex&, const GridIndex&) = default;
};

std::ostream& operator<<(std::ostream& os, const GridIndex& g);

/// (j,b)^+ : the lexicographic successor of r inside E = E° ∪ {(m+1,p)},
/// where E° is the m x p grid without (1,1).
/// Throws DomainError when r is (1,1) or outside the grid.
GridIndex lex_successor(GridIndex r, int m, int p);

/// Lexicographic predecessor inside E; the inverse of lex_successor.
/// Defined for r in E \ {(1,2)}.
GridIndex lex_predecessor(GridIndex r, int m, int p);

/// Dense m x p matrix of exact rationals, addressed with 1-based indices.
class Matrix {
public:
    Matrix() = default;
    /// Zero matrix. Throws DomainError unless rows, cols >= 1.
    Matrix(int rows, int cols);
    /// Row-major entries; throws DomainError if the count is not rows*cols.
    Matrix(int rows, int cols, std::vector<Rational> entries);
    /// Convenience for literals: Matrix{{16, 5, 0}, {12, 6, 3}}.
    Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool same_shape(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

    /// Bounds-checked access; throws DomainError outside [1,m] x [1,p].
    const Rational& at(int i, int alpha) const;
    Rational& at(int i, int alpha);
    const Rational& at(GridIndex g) const { return at(g.row, g.col); }
    Rational& at(GridIndex g) { return at(g.row, g.col); }

    /// Unchecked access for inner loops.
    const Rational& operator()(int i, int alpha) const { return data_[offset(i, alpha)]; }
    Rational& operator()(int i, int alpha) { return data_[offset(i, alpha)]; }

    std::span<const Rational> entries() const { return data_; }

    bool contains(GridIndex g) const {
        return g.row >= 1 && g.row <= rows_ && g.col >= 1 && g.col <= cols_;
    }

    Matrix transposed() const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t offset(int i, int alpha) const {
        return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(cols_) +
               static_cast<std::size_t>(alpha - 1);
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> data_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

}  // namespace tnn
