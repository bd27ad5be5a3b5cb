#include "tnn/oracle.hpp"

#include "tnn/limits.hpp"

namespace tnn {

namespace {

template <typename Pred>
bool every_minor(const Matrix& m, Pred&& pred) {
    require_cells_within(m.rows(), m.cols(), kMaxOracleCells, "all-minors oracle");
    for (const MinorSpec& s : all_minor_specs(m.rows(), m.cols())) {
        if (!pred(minor(m, s))) return false;
    }
    return true;
}

}  // namespace

bool is_tnn_bruteforce(const Matrix& m) {
    return every_minor(m, [](const Rational& v) { return !v.is_negative(); });
}

bool is_tp_bruteforce(const Matrix& m) {
    return every_minor(m, [](const Rational& v) { return v.is_positive(); });
}

ZeroPattern zero_pattern(const Matrix& m) {
    require_cells_within(m.rows(), m.cols(), kMaxOracleCells, "zero_pattern");
    ZeroPattern z;
    z.m = m.rows();
    z.p = m.cols();
    for (MinorSpec& s : all_minor_specs(m.rows(), m.cols())) {
        ++z.total_minors;
        if (minor(m, s).is_zero()) z.vanishing.push_back(std::move(s));
    }
    return z;
}

}  // namespace tnn
