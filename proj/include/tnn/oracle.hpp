#pragma once

#include <cstdint>
#include <vector>

#include "tnn/matrix.hpp"
#include "tnn/minors.hpp"

namespace tnn {

// Brute-force ground truth over every minor. Exponential in min(m, p);
// guarded by kMaxOracleCells (CapacityError).

struct ZeroPattern {
    int m = 0;
    int p = 0;
    /// Vanishing minors, in canonical order.
    std::vector<MinorSpec> vanishing;
    std::uint64_t total_minors = 0;

    friend bool operator==(const ZeroPattern&, const ZeroPattern&) = default;
};

bool is_tnn_bruteforce(const Matrix& m);
bool is_tp_bruteforce(const Matrix& m);
ZeroPattern zero_pattern(const Matrix& m);

}  // namespace tnn
