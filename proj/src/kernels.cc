/* vim: set sw=4 sts=4 et : */

#include <colorbound/kernels.hh>
#include <colorbound/errors.hh>

#include <omp.h>

#include <algorithm>
#include <array>
#include <bit>

using std::span;
using std::uint32_t;
using std::uint64_t;
using std::vector;

namespace colorbound
{
    namespace
    {
        constexpr uint64_t target_shards = 256;

        /// Per-pair endpoint masks so a graph's adjacency can be assembled one set bit at a time.
        struct PairMasks
        {
            vector<std::pair<int, int>> endpoints;

            explicit PairMasks(const EdgeSpace & space)
            {
                if (space.vertex_count > max_mask_vertices)
                    throw ResourceGuardError{ "edge spaces are limited to " + std::to_string(max_mask_vertices) + " vertices" };
                if (space.bits() >= 64)
                    throw ResourceGuardError{ "edge spaces are limited to 63 pairs" };
                endpoints = space.pairs;
            }

            auto build(uint64_t mask, std::array<uint32_t, max_mask_vertices> & adjacency, int v) const -> void
            {
                std::fill(adjacency.begin(), adjacency.begin() + v, 0);
                for ( ; mask ; mask &= mask - 1) {
                    auto & [i, j] = endpoints[std::countr_zero(mask)];
                    adjacency[i] |= uint32_t{ 1 } << j;
                    adjacency[j] |= uint32_t{ 1 } << i;
                }
            }
        };

        auto require_range(const EdgeSpace & space, uint64_t begin, uint64_t end) -> void
        {
            if (begin > end || end > space.size())
                throw PreconditionError{ "mask range [" + std::to_string(begin) + ", " + std::to_string(end)
                    + ") outside the edge space of size " + std::to_string(space.size()) };
        }

        auto require_jobs(int jobs) -> void
        {
            if (jobs < 1)
                throw PreconditionError{ "worker count must be at least 1" };
        }
    }

    auto EdgeSpace::all_graphs(int v) -> EdgeSpace
    {
        if (v < 0)
            throw PreconditionError{ "vertex count must be nonnegative" };
        EdgeSpace result{ .vertex_count = v, .pairs = { } };
        for (int i = 0 ; i < v ; ++i)
            for (int j = i + 1 ; j < v ; ++j)
                result.pairs.emplace_back(i, j);
        return result;
    }

    auto EdgeSpace::subgraphs_of(const Partition & p) -> EdgeSpace
    {
        return EdgeSpace{ .vertex_count = p.total(), .pairs = complete_multipartite(p).edges() };
    }

    auto EdgeSpace::size() const -> uint64_t
    {
        if (bits() >= 64)
            throw ResourceGuardError{ "edge spaces are limited to 63 pairs" };
        return uint64_t{ 1 } << bits();
    }

    auto EdgeSpace::graph_at(uint64_t mask) const -> Graph
    {
        vector<std::pair<int, int>> chosen;
        for (unsigned k = 0 ; k < bits() ; ++k)
            if ((mask >> k) & 1)
                chosen.push_back(pairs[k]);
        return Graph{ vertex_count, chosen };
    }

    auto merge_into(ChiTally & a, const ChiTally & b) -> void
    {
        if (a.size() != b.size())
            throw PreconditionError{ "cannot merge tallies of different lengths" };
        for (std::size_t i = 0 ; i < a.size() ; ++i)
            a[i] += b[i];
    }

    auto serial::tally_chromatic(const EdgeSpace & space, uint64_t begin, uint64_t end) -> ChiTally
    {
        require_range(space, begin, end);
        PairMasks masks{ space };
        int v = space.vertex_count;
        ChiTally tally(v + 1, 0);
        std::array<uint32_t, max_mask_vertices> adjacency{ };
        for (uint64_t mask = begin ; mask < end ; ++mask) {
            masks.build(mask, adjacency, v);
            ++tally[chromatic_number_of_masks(span<const uint32_t>{ adjacency.data(), std::size_t(v) })];
        }
        return tally;
    }

    auto serial::count_properly_coloured(const EdgeSpace & space, span<const int> colours,
            uint64_t begin, uint64_t end) -> uint64_t
    {
        require_range(space, begin, end);
        if (colours.size() != std::size_t(space.vertex_count))
            throw PreconditionError{ "need one colour per vertex" };

        PairMasks masks{ space };
        int v = space.vertex_count;

        std::array<uint32_t, max_mask_vertices> same_colour{ };
        for (int a = 0 ; a < v ; ++a)
            for (int b = 0 ; b < v ; ++b)
                if (a != b && colours[a] == colours[b])
                    same_colour[a] |= uint32_t{ 1 } << b;

        uint64_t result = 0;
        std::array<uint32_t, max_mask_vertices> adjacency{ };
        for (uint64_t mask = begin ; mask < end ; ++mask) {
            masks.build(mask, adjacency, v);
            bool proper = true;
            for (int a = 0 ; a < v && proper ; ++a)
                proper = 0 == (adjacency[a] & same_colour[a]);
            if (proper)
                ++result;
        }
        return result;
    }

    auto parallel::shard_bounds(uint64_t size) -> vector<uint64_t>
    {
        uint64_t shards = std::min(size, target_shards);
        vector<uint64_t> bounds;
        bounds.reserve(shards + 1);
        for (uint64_t s = 0 ; s <= shards ; ++s)
            bounds.push_back(shards == 0 ? 0 : size / shards * s + std::min(s, size % shards));
        return bounds;
    }

    auto parallel::tally_chromatic(const EdgeSpace & space, int jobs) -> ChiTally
    {
        require_jobs(jobs);
        PairMasks validate{ space };
        auto bounds = shard_bounds(space.size());
        auto shards = static_cast<std::int64_t>(bounds.size() - 1);
        vector<ChiTally> partial(shards);

#pragma omp parallel for num_threads(jobs) schedule(dynamic, 1)
        for (std::int64_t s = 0 ; s < shards ; ++s)
            partial[s] = serial::tally_chromatic(space, bounds[s], bounds[s + 1]);

        ChiTally result(space.vertex_count + 1, 0);
        for (auto & t : partial)
            merge_into(result, t);
        return result;
    }

    auto parallel::count_properly_coloured(const EdgeSpace & space, span<const int> colours, int jobs) -> uint64_t
    {
        require_jobs(jobs);
        PairMasks validate{ space };
        if (colours.size() != std::size_t(space.vertex_count))
            throw PreconditionError{ "need one colour per vertex" };
        auto bounds = shard_bounds(space.size());
        auto shards = static_cast<std::int64_t>(bounds.size() - 1);
        vector<uint64_t> partial(shards, 0);

#pragma omp parallel for num_threads(jobs) schedule(dynamic, 1)
        for (std::int64_t s = 0 ; s < shards ; ++s)
            partial[s] = serial::count_properly_coloured(space, colours, bounds[s], bounds[s + 1]);

        uint64_t result = 0;
        for (auto c : partial)
            result += c;
        return result;
    }
}
