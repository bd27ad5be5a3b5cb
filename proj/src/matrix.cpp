#include "tnn/matrix.hpp"

#include <ostream>
#include <sstream>

#include "tnn/errors.hpp"

namespace tnn {

std::ostream& operator<<(std::ostream& os, const GridIndex& g) {
    return os << '(' << g.row << ',' << g.col << ')';
}

GridIndex lex_successor(GridIndex r, int m, int p) {
    const bool in_grid = r.row >= 1 && r.row <= m && r.col >= 1 && r.col <= p;
    if (!in_grid || (r.row == 1 && r.col == 1)) {
        std::ostringstream msg;
        msg << "lex_successor: " << r << " is not in E° for a " << m << 'x' << p << " grid";
        throw DomainError(msg.str());
    }
    if (r.col < p) return {r.row, r.col + 1};
    if (r.row < m) return {r.row + 1, 1};
    return {m + 1, p};
}

GridIndex lex_predecessor(GridIndex r, int m, int p) {
    if (r.row == m + 1 && r.col == p) return {m, p};
    const bool in_grid = r.row >= 1 && r.row <= m && r.col >= 1 && r.col <= p;
    if (!in_grid || (r.row == 1 && r.col <= 2)) {
        std::ostringstream msg;
        msg << "lex_predecessor: " << r << " has no predecessor in E°";
        throw DomainError(msg.str());
    }
    if (r.col > 1) return {r.row, r.col - 1};
    return {r.row - 1, p};
}

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 1 || cols < 1) {
        throw DomainError("matrix dimensions must be positive");
    }
    data_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), Rational{});
}

Matrix::Matrix(int rows, int cols, std::vector<Rational> entries) : rows_(rows), cols_(cols) {
    if (rows < 1 || cols < 1) {
        throw DomainError("matrix dimensions must be positive");
    }
    if (entries.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
        throw DomainError("matrix entry count does not match its shape");
    }
    data_ = std::move(entries);
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
    if (rows_ < 1 || cols_ < 1) {
        throw DomainError("matrix dimensions must be positive");
    }
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != cols_) {
            throw DomainError("ragged matrix literal");
        }
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

const Rational& Matrix::at(int i, int alpha) const {
    if (!contains({i, alpha})) {
        std::ostringstream msg;
        msg << "index (" << i << ',' << alpha << ") outside " << rows_ << 'x' << cols_ << " matrix";
        throw DomainError(msg.str());
    }
    return (*this)(i, alpha);
}

Rational& Matrix::at(int i, int alpha) {
    return const_cast<Rational&>(static_cast<const Matrix&>(*this).at(i, alpha));
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_);
    for (int i = 1; i <= rows_; ++i) {
        for (int a = 1; a <= cols_; ++a) {
            t(a, i) = (*this)(i, a);
        }
    }
    return t;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << '[';
    for (int i = 1; i <= m.rows(); ++i) {
        os << (i > 1 ? ", [" : "[");
        for (int a = 1; a <= m.cols(); ++a) {
            os << (a > 1 ? ", " : "") << m(i, a);
        }
        os << ']';
    }
    return os << ']';
}

}  // namespace tnn
