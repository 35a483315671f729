/* vim: set sw=4 sts=4 et : */

#ifndef COLORBOUND_GUARD_VERIFY_HH
#define COLORBOUND_GUARD_VERIFY_HH 1

#include <colorbound/oracle.hh>

#include <cstdint>
#include <string>
#include <vector>

namespace colorbound
{
    /**
     * Outcome of one of the exhaustive checking suites. Every check is of a
     * proven fact, so a nonempty failures list points at a defect here.
     */
    struct SuiteResult
    {
        std::string suite;
        int min_v = 0, max_v = 0;
        /// Top-level items examined: (v, n) pairs, partitions, or partition orderings.
        std::uint64_t checked = 0;
        /// Individual comparisons made along the way.
        std::uint64_t comparisons = 0;
        std::vector<std::string> failures;

        auto passed() const -> bool { return failures.empty(); }
    };

    /**
     * For each 1 <= n <= v in range: lambda >= v - n with equality exactly
     * when 2n >= v, both lambda routes agreeing, the complementarity identity
     * on every partition, and the balanced partition attaining the
     * exhaustive maximum.
     */
    auto verify_theorem(int min_v, int max_v) -> SuiteResult;

    /**
     * For every ordering of every partition of each v in range (v >= 2):
     * term-wise domination, the sum identities, per-block and padding gaps,
     * a strict witness whenever some part exceeds 1, and the arithmetic-run
     * sum of s1 over each block.
     */
    auto verify_proof_terms(int min_v, int max_v) -> SuiteResult;

    /// Exhaustive subgraph counts against 2^exponent for each partition with exponent <= max_exponent.
    auto verify_eq1(int min_v, int max_v, unsigned max_exponent, const OracleOptions & options) -> SuiteResult;
}

#endif
