/* vim: set sw=4 sts=4 et : */

#ifndef COLORBOUND_GUARD_BOUNDS_HH
#define COLORBOUND_GUARD_BOUNDS_HH 1

#include <colorbound/partitions.hh>

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace colorbound
{
    /**
     * The term lists obtained by writing log2 of the total graph count and
     * log2 of the partition-compatible count as sums of v - 1 terms.
     *
     * Indices are 1-based in block_ranges, matching how the terms are
     * numbered; s1 and s2 themselves are plain 0-based vectors, so term i
     * lives at s1[i - 1].
     */
    struct TermSequence
    {
        /// Parts in the order the expansion used, which need not be canonical.
        std::vector<int> parts;
        std::vector<std::int64_t> s1;
        std::vector<std::int64_t> s2;
        /// Inclusive [first, last] term indices for each part except the last.
        std::vector<std::pair<int, int>> block_ranges;

        auto v() const -> int;

        /// Term indices past the last block, where s2 is zero padded.
        auto padding_range() const -> std::pair<int, int>;
    };

    enum class BoundRelation
    {
        equality,
        strict
    };

    auto to_string(BoundRelation r) -> std::string;

    struct BoundReport
    {
        int v, n, y;
        std::uint64_t log2_total;
        Partition best_partition;
        Log2Count e_star;
        std::uint64_t lambda;
        BoundRelation relation;
        bool corollary_condition;
    };

    /// C(v, 2), the base 2 logarithm of the number of labeled graphs on v vertices.
    auto total_log2(int v) -> Log2Count;

    /// C(v, 2) minus the largest exponent over partitions of v into n parts.
    auto lambda(int v, int n) -> std::uint64_t;

    /// The same gap computed as the least number of intra-class pairs over partitions.
    auto lambda_by_intra_pairs(int v, int n) -> std::uint64_t;

    /**
     * Evaluates the upper bound at (v, n). The bound is a theorem, so any
     * failure of lambda >= y, any disagreement between the two lambda routes,
     * or any mismatch between equality and 2n >= v throws InternalInconsistency.
     */
    auto check_upper_bound(int v, int n) -> BoundReport;

    auto expand_term_sequences(std::span<const int> ordered_parts) -> TermSequence;
    auto expand_term_sequences(const Partition & p) -> TermSequence;

    /**
     * Per-block gap between the s1 and s2 sums over that block's term range,
     * with one final entry for the zero padded tail.
     */
    auto psi_gap(std::span<const int> ordered_parts) -> std::vector<std::int64_t>;
    auto psi_gap(const Partition & p) -> std::vector<std::int64_t>;

    auto to_json_string(const BoundReport & r) -> std::string;
}

#endif
