#include "bench.hpp"

#include <chrono>
#include <random>

#include "tnn/errors.hpp"
#include "tnn/oracle.hpp"
#include "tnn/recognition.hpp"
#include "tnn/reduction.hpp"

namespace tnn::cli {

BenchResult run_bench(int n, int trials, std::uint64_t seed) {
    if (n < 1 || trials < 1) {
        throw DomainError("bench: n and trials must be positive");
    }
    if (n > 8) {
        throw CapacityError("bench: the all-minors side is limited to n <= 8");
    }
    using Clock = std::chrono::steady_clock;
    std::mt19937_64 rng(seed);
    const std::uint64_t want_scheme = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n);
    const std::uint64_t want_oracle = minor_count(n, n);

    BenchResult r;
    r.n = n;
    r.trials = trials;
    r.counts_exact = true;
    for (int k = 0; k < trials; ++k) {
        const CauchonDiagram c = random_diagram(n, n, rng);
        const Matrix m = random_representative(c, rng);
        const CellMinorScheme scheme = build_scheme(c);

        auto t0 = Clock::now();
        MinorCallScope scheme_calls;
        const MembershipReport report = membership_test(m, scheme);
        const std::uint64_t s_calls = scheme_calls.calls();
        auto t1 = Clock::now();
        MinorCallScope oracle_calls;
        const ZeroPattern z = zero_pattern(m);
        const std::uint64_t o_calls = oracle_calls.calls();
        auto t2 = Clock::now();

        if (!report.verdict) {
            throw InternalInconsistency("bench: a cell representative failed its own membership test");
        }
        r.scheme_seconds += std::chrono::duration<double>(t1 - t0).count();
        r.oracle_seconds += std::chrono::duration<double>(t2 - t1).count();
        r.scheme_minors_per_trial = s_calls;
        r.oracle_minors_per_trial = o_calls;
        r.counts_exact = r.counts_exact && s_calls == want_scheme && o_calls == want_oracle &&
                         z.total_minors == want_oracle;
    }
    return r;
}

}  // namespace tnn::cli
