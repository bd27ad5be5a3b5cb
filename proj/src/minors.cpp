#include "tnn/minors.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "tnn/errors.hpp"

namespace tnn {

namespace {

thread_local std::uint64_t minor_calls = 0;

void require_square(const Matrix& m, const char* who) {
    if (m.rows() != m.cols()) {
        throw DomainError(std::string(who) + ": matrix is not square");
    }
}

void check_increasing(const std::vector<int>& v, int bound, const char* what) {
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k] < 1 || v[k] > bound) {
            throw DomainError(std::string("minor ") + what + " index " + std::to_string(v[k]) +
                              " out of range [1," + std::to_string(bound) + "]");
        }
        if (k > 0 && v[k - 1] >= v[k]) {
            throw DomainError(std::string("minor ") + what + " set is not strictly increasing");
        }
    }
}

// Calls visit(subset) for every k-subset of [1,n] in lexicographic order.
template <typename Visit>
void for_each_subset(int n, int k, Visit&& visit) {
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int t = 0; t < k; ++t) idx[static_cast<std::size_t>(t)] = t + 1;
    while (true) {
        visit(idx);
        int t = k - 1;
        while (t >= 0 && idx[static_cast<std::size_t>(t)] == n - k + t + 1) --t;
        if (t < 0) return;
        ++idx[static_cast<std::size_t>(t)];
        for (int u = t + 1; u < k; ++u) {
            idx[static_cast<std::size_t>(u)] = idx[static_cast<std::size_t>(u - 1)] + 1;
        }
    }
}

std::vector<int> range(int first, int last) {
    std::vector<int> v;
    for (int x = first; x <= last; ++x) v.push_back(x);
    return v;
}

}  // namespace

void MinorSpec::validate(int m, int p) const {
    if (rows.empty() || rows.size() != cols.size()) {
        throw DomainError("minor " + to_string() + ": row and column sets must be nonempty and equal in size");
    }
    check_increasing(rows, m, "row");
    check_increasing(cols, p, "column");
}

std::string MinorSpec::to_string() const {
    const bool wide = std::any_of(rows.begin(), rows.end(), [](int x) { return x > 9; }) ||
                      std::any_of(cols.begin(), cols.end(), [](int x) { return x > 9; });
    std::ostringstream os;
    auto emit = [&](const std::vector<int>& v) {
        for (std::size_t k = 0; k < v.size(); ++k) {
            if (wide && k > 0) os << ',';
            os << v[k];
        }
    };
    os << '[';
    emit(rows);
    os << '|';
    emit(cols);
    os << ']';
    return os.str();
}

bool operator<(const MinorSpec& a, const MinorSpec& b) {
    if (a.rows.size() != b.rows.size()) return a.rows.size() < b.rows.size();
    if (a.rows != b.rows) return a.rows < b.rows;
    return a.cols < b.cols;
}

std::ostream& operator<<(std::ostream& os, const MinorSpec& s) { return os << s.to_string(); }

Rational determinant(const Matrix& square) {
    require_square(square, "determinant");
    const int n = square.rows();
    if (n == 1) return square(1, 1);

    // Clear denominators row by row: det(A) = det(D A) / prod(row scales).
    std::vector<std::vector<mpz_class>> a(static_cast<std::size_t>(n),
                                          std::vector<mpz_class>(static_cast<std::size_t>(n)));
    mpz_class scale = 1;
    for (int i = 0; i < n; ++i) {
        mpz_class l = 1;
        for (int j = 0; j < n; ++j) {
            mpz_class d = square(i + 1, j + 1).denominator();
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
        }
        for (int j = 0; j < n; ++j) {
            const Rational& x = square(i + 1, j + 1);
            a[i][j] = x.numerator() * (l / x.denominator());
        }
        scale *= l;
    }

    int sign = 1;
    mpz_class prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i) {
                if (a[i][k] != 0) {
                    swap_row = i;
                    break;
                }
            }
            if (swap_row < 0) return Rational{};
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                // Exact by Sylvester's identity.
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]);
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = a[k][k];
    }
    mpz_class det = a[n - 1][n - 1];
    if (sign < 0) det = -det;
    return Rational(det, scale);
}

Rational determinant_by_cofactors(const Matrix& square) {
    require_square(square, "determinant_by_cofactors");
    const int n = square.rows();
    if (n > 8) {
        throw CapacityError("cofactor expansion is limited to n <= 8");
    }
    if (n == 1) return square(1, 1);
    Rational total;
    for (int c = 1; c <= n; ++c) {
        if (square(1, c).is_zero()) continue;
        Matrix sub(n - 1, n - 1);
        for (int i = 2; i <= n; ++i) {
            int cc = 1;
            for (int j = 1; j <= n; ++j) {
                if (j == c) continue;
                sub(i - 1, cc++) = square(i, j);
            }
        }
        Rational term = square(1, c) * determinant_by_cofactors(sub);
        if (c % 2 == 0) term = -term;
        total += term;
    }
    return total;
}

Matrix submatrix(const Matrix& m, const MinorSpec& s) {
    s.validate(m.rows(), m.cols());
    const int k = s.size();
    Matrix sub(k, k);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            sub(i + 1, j + 1) = m(s.rows[static_cast<std::size_t>(i)], s.cols[static_cast<std::size_t>(j)]);
        }
    }
    return sub;
}

Rational minor(const Matrix& m, const MinorSpec& s) {
    Matrix sub = submatrix(m, s);
    ++minor_calls;
    return determinant(sub);
}

MinorCallScope::MinorCallScope() : start_(minor_calls) {}

std::uint64_t MinorCallScope::calls() const { return minor_calls - start_; }

std::vector<MinorSpec> all_minor_specs(int m, int p) {
    if (m < 1 || p < 1) {
        throw DomainError("all_minor_specs: dimensions must be positive");
    }
    std::vector<MinorSpec> specs;
    for (int k = 1; k <= std::min(m, p); ++k) {
        for_each_subset(m, k, [&](const std::vector<int>& rows) {
            for_each_subset(p, k, [&](const std::vector<int>& cols) { specs.push_back({rows, cols}); });
        });
    }
    return specs;
}

std::uint64_t minor_count(int m, int p) {
    auto choose = [](int n, int k) {
        std::uint64_t c = 1;
        for (int t = 1; t <= k; ++t) c = c * static_cast<std::uint64_t>(n - k + t) / static_cast<std::uint64_t>(t);
        return c;
    };
    std::uint64_t total = 0;
    for (int k = 1; k <= std::min(m, p); ++k) total += choose(m, k) * choose(p, k);
    return total;
}

MinorSpec final_minor_at(int i, int alpha, int m, int p) {
    if (i < 1 || i > m || alpha < 1 || alpha > p) {
        throw DomainError("final_minor_at: corner outside the grid");
    }
    const int r = std::min(m - i, p - alpha);
    return {range(i, i + r), range(alpha, alpha + r)};
}

std::vector<MinorSpec> final_minor_specs(int m, int p) {
    if (m < 1 || p < 1) {
        throw DomainError("final_minor_specs: dimensions must be positive");
    }
    std::vector<MinorSpec> specs;
    for (int i = 1; i <= m; ++i) {
        for (int a = 1; a <= p; ++a) specs.push_back(final_minor_at(i, a, m, p));
    }
    std::sort(specs.begin(), specs.end());
    return specs;
}

std::vector<MinorSpec> initial_minor_specs(int m, int p) {
    if (m < 1 || p < 1) {
        throw DomainError("initial_minor_specs: dimensions must be positive");
    }
    std::vector<MinorSpec> specs;
    for (int i = 1; i <= m; ++i) {
        for (int a = 1; a <= p; ++a) {
            const int r = std::min(i, a) - 1;
            specs.push_back({range(i - r, i), range(a - r, a)});
        }
    }
    std::sort(specs.begin(), specs.end());
    return specs;
}

Matrix antidiagonal_reflect(const Matrix& m) {
    const int rows = m.rows();
    const int cols = m.cols();
    Matrix r(cols, rows);
    for (int i = 1; i <= cols; ++i) {
        for (int j = 1; j <= rows; ++j) {
            r(i, j) = m(rows + 1 - j, cols + 1 - i);
        }
    }
    return r;
}

MinorSpec reflect_spec(const MinorSpec& s, int m, int p) {
    s.validate(m, p);
    MinorSpec out;
    for (auto it = s.cols.rbegin(); it != s.cols.rend(); ++it) out.rows.push_back(p + 1 - *it);
    for (auto it = s.rows.rbegin(); it != s.rows.rend(); ++it) out.cols.push_back(m + 1 - *it);
    return out;
}

bool gasca_pena_tp_test(const Matrix& m) {
    for (const MinorSpec& s : final_minor_specs(m.rows(), m.cols())) {
        if (!minor(m, s).is_positive()) return false;
    }
    return true;
}

}  // namespace tnn
