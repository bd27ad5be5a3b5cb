#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "tnn/matrix.hpp"
#include "tnn/rational.hpp"

namespace tnn {

/// The minor [I|J]: strictly increasing 1-based row and column sets of equal size.
struct MinorSpec {
    std::vector<int> rows;
    std::vector<int> cols;

    int size() const { return static_cast<int>(rows.size()); }

    /// Throws DomainError unless |I| = |J| >= 1, both strictly increasing,
    /// and inside an m x p grid.
    void validate(int m, int p) const;

    /// "[13|12]"; indices are comma separated when any exceeds 9 ("[1,10|2,11]").
    std::string to_string() const;

    /// Size-major, then rows, then columns (lexicographic).
    friend bool operator<(const MinorSpec& a, const MinorSpec& b);
    friend bool operator==(const MinorSpec&, const MinorSpec&) = default;
};

std::ostream& operator<<(std::ostream& os, const MinorSpec& s);

/// Determinant of a square matrix by fraction-free (Bareiss) elimination over
/// the integers after clearing each row's denominators.
Rational determinant(const Matrix& square);

/// Laplace expansion along the first row. Exponential; kept as an
/// independent check for n <= 8 (CapacityError above that).
Rational determinant_by_cofactors(const Matrix& square);

/// Submatrix on the given rows and columns.
Matrix submatrix(const Matrix& m, const MinorSpec& s);

/// Exact [I|J](M). Every call is counted by MinorCallScope.
Rational minor(const Matrix& m, const MinorSpec& s);

/// Counts minor() evaluations made on the current thread while alive.
class MinorCallScope {
public:
    MinorCallScope();
    std::uint64_t calls() const;

private:
    std::uint64_t start_;
};

/// Every minor of an m x p matrix in canonical order. For m = p there are
/// C(2m, m) - 1 of them.
std::vector<MinorSpec> all_minor_specs(int m, int p);

/// Number of minors sum_k C(m,k) C(p,k), without enumerating them.
std::uint64_t minor_count(int m, int p);

/// The m*p minors with consecutive I and J and m in I or p in J,
/// one per top-left corner, in canonical order.
std::vector<MinorSpec> final_minor_specs(int m, int p);

/// The m*p minors with consecutive I and J and 1 in I ∪ J,
/// one per bottom-right corner, in canonical order.
std::vector<MinorSpec> initial_minor_specs(int m, int p);

/// The final minor whose top-left entry is (i, alpha).
MinorSpec final_minor_at(int i, int alpha, int m, int p);

/// M^rho, the p x m matrix with (M^rho)_{ij} = M_{m+1-j, p+1-i}.
Matrix antidiagonal_reflect(const Matrix& m);

/// For s a spec of an m x p matrix M, the spec s' of M^rho with s'(M^rho) = s(M):
/// rows p+1-J, columns m+1-I.
MinorSpec reflect_spec(const MinorSpec& s, int m, int p);

/// Total positivity via the m*p final minors: true iff all are > 0.
bool gasca_pena_tp_test(const Matrix& m);

}  // namespace tnn
