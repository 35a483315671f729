/* vim: set sw=4 sts=4 et : */

#ifndef COLORBOUND_GUARD_KERNELS_HH
#define COLORBOUND_GUARD_KERNELS_HH 1

#include <colorbound/graph.hh>
#include <colorbound/partitions.hh>

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace colorbound
{
    /**
     * A family of graphs on a fixed vertex set: every subset of `pairs` is
     * one graph, selected by an integer mask whose bit k stands for pairs[k].
     */
    struct EdgeSpace
    {
        int vertex_count = 0;
        std::vector<std::pair<int, int>> pairs;

        /// All pairs in lexicographic order, so a mask is exactly an edge bit vector.
        static auto all_graphs(int v) -> EdgeSpace;

        /// The cross-class pairs of complete_multipartite(p), in lexicographic order.
        static auto subgraphs_of(const Partition & p) -> EdgeSpace;

        auto bits() const -> unsigned { return static_cast<unsigned>(pairs.size()); }

        /// Number of masks, 2^bits; bits must be below 64.
        auto size() const -> std::uint64_t;

        auto graph_at(std::uint64_t mask) const -> Graph;
    };

    /// Count of graphs per chromatic number, indexed 0..vertex_count.
    using ChiTally = std::vector<std::uint64_t>;

    /// Adds b into a entry-wise; the two must have equal length.
    auto merge_into(ChiTally & a, const ChiTally & b) -> void;

    /**
     * Serial reference kernels. These walk masks in [begin, end) one after
     * another and are what the parallel versions are tested against.
     */
    namespace serial
    {
        auto tally_chromatic(const EdgeSpace & space, std::uint64_t begin, std::uint64_t end) -> ChiTally;

        /// Number of masks in [begin, end) whose graph is properly colored by colours.
        auto count_properly_coloured(const EdgeSpace & space, std::span<const int> colours,
                std::uint64_t begin, std::uint64_t end) -> std::uint64_t;
    }

    /**
     * OpenMP kernels. The mask range is cut into fixed shards independent of
     * the worker count, each shard is reduced on its own, and shard results
     * are merged in shard order, so the result never depends on jobs.
     */
    namespace parallel
    {
        /// Shard boundaries used for a range of `size` masks.
        auto shard_bounds(std::uint64_t size) -> std::vector<std::uint64_t>;

        auto tally_chromatic(const EdgeSpace & space, int jobs) -> ChiTally;

        auto count_properly_coloured(const EdgeSpace & space, std::span<const int> colours, int jobs) -> std::uint64_t;
    }
}

#endif
