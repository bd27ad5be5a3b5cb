#pragma once

#include <cstdint>

namespace tnn::cli {

struct BenchResult {
    int n = 0;
    int trials = 0;
    std::uint64_t scheme_minors_per_trial = 0;  // n^2 expected
    std::uint64_t oracle_minors_per_trial = 0;  // C(2n, n) - 1 expected
    bool counts_exact = false;                  // every trial hit both expected counts
    double scheme_seconds = 0;
    double oracle_seconds = 0;

    double speedup() const { return scheme_seconds > 0 ? oracle_seconds / scheme_seconds : 0; }
};

/// Times the m*p-minor membership test against the all-minors zero pattern
/// on `trials` random cell representatives of n x n shape.
/// Throws CapacityError for n > 8, DomainError for n < 1 or trials < 1.
BenchResult run_bench(int n, int trials, std::uint64_t seed);

}  // namespace tnn::cli
