/* vim: set sw=4 sts=4 et : */

#include <colorbound/bounds.hh>
#include <colorbound/errors.hh>

#include <nlohmann/json.hpp>

#include <algorithm>
#include <numeric>

using std::int64_t;
using std::span;
using std::string;
using std::uint64_t;
using std::vector;

namespace colorbound
{
    auto TermSequence::v() const -> int
    {
        return std::accumulate(parts.begin(), parts.end(), 0);
    }

    auto TermSequence::padding_range() const -> std::pair<int, int>
    {
        int first = block_ranges.empty() ? 1 : block_ranges.back().second + 1;
        return { first, v() - 1 };
    }

    auto to_string(BoundRelation r) -> string
    {
        switch (r) {
            case BoundRelation::equality: return "equality";
            case BoundRelation::strict:   return "strict";
        }
        throw InternalInconsistency{ "unknown BoundRelation" };
    }

    auto total_log2(int v) -> Log2Count
    {
        if (v < 0)
            throw PreconditionError{ "vertex count must be nonnegative" };
        if (v < 2)
            return Log2Count{ 0 };
        return Log2Count{ uint64_t(v) * uint64_t(v - 1) / 2 };
    }

    auto lambda(int v, int n) -> uint64_t
    {
        require_valid_vn(v, n);
        return total_log2(v).exponent - max_partition(v, n).second.exponent;
    }

    auto lambda_by_intra_pairs(int v, int n) -> uint64_t
    {
        PartitionGenerator generator{ v, n };
        auto best = intra_class_pairs(generator.next()->parts());
        while (auto p = generator.next())
            best = std::min(best, intra_class_pairs(p->parts()));
        return best;
    }

    auto check_upper_bound(int v, int n) -> BoundReport
    {
        require_valid_vn(v, n);

        auto [best, e_star] = max_partition(v, n);
        auto log2_total = total_log2(v).exponent;
        auto gap = log2_total - e_star.exponent;
        auto y = v - n;
        bool corollary = 2 * n >= v;

        auto context = [&] {
            return " at v = " + std::to_string(v) + ", n = " + std::to_string(n) + ", partition " + to_string(best)
                + ", C(v,2) = " + std::to_string(log2_total) + ", e* = " + std::to_string(e_star.exponent)
                + ", lambda = " + std::to_string(gap);
        };

        if (auto other = lambda_by_intra_pairs(v, n) ; other != gap)
            throw InternalInconsistency{ "lambda routes disagree (" + std::to_string(other) + " by intra-class pairs)" + context() };
        if (gap < uint64_t(y))
            throw InternalInconsistency{ "upper bound violated, lambda < y = " + std::to_string(y) + context() };
        if ((gap == uint64_t(y)) != corollary)
            throw InternalInconsistency{ "equality case does not match 2n >= v" + context() };

        return BoundReport{
            .v = v,
            .n = n,
            .y = y,
            .log2_total = log2_total,
            .best_partition = std::move(best),
            .e_star = e_star,
            .lambda = gap,
            .relation = gap == uint64_t(y) ? BoundRelation::equality : BoundRelation::strict,
            .corollary_condition = corollary
        };
    }

    auto expand_term_sequences(span<const int> ordered_parts) -> TermSequence
    {
        validate_parts(ordered_parts);

        TermSequence result;
        result.parts.assign(ordered_parts.begin(), ordered_parts.end());
        int v = result.v();
        if (v < 2)
            throw PreconditionError{ "term expansion needs at least 2 vertices" };

        result.s1.resize(v - 1);
        for (int i = 1 ; i < v ; ++i)
            result.s1[i - 1] = v - i;

        result.s2.assign(v - 1, 0);
        int end_of_block = 0;
        for (std::size_t j = 0 ; j + 1 < result.parts.size() ; ++j) {
            int first = end_of_block + 1;
            end_of_block += result.parts[j];
            // x_j copies of (x_{j+1} + ... + x_n), which is v minus everything up to this block.
            for (int i = first ; i <= end_of_block ; ++i)
                result.s2[i - 1] = v - end_of_block;
            result.block_ranges.emplace_back(first, end_of_block);
        }

        return result;
    }

    auto expand_term_sequences(const Partition & p) -> TermSequence
    {
        return expand_term_sequences(p.parts());
    }

    auto psi_gap(span<const int> ordered_parts) -> vector<int64_t>
    {
        auto terms = expand_term_sequences(ordered_parts);
        auto range_gap = [&] (int first, int last) {
            int64_t gap = 0;
            for (int i = first ; i <= last ; ++i)
                gap += terms.s1[i - 1] - terms.s2[i - 1];
            return gap;
        };

        vector<int64_t> result;
        for (auto & [first, last] : terms.block_ranges)
            result.push_back(range_gap(first, last));
        auto [pad_first, pad_last] = terms.padding_range();
        result.push_back(range_gap(pad_first, pad_last));
        return result;
    }

    auto psi_gap(const Partition & p) -> vector<int64_t>
    {
        return psi_gap(p.parts());
    }

    auto to_json_string(const BoundReport & r) -> string
    {
        nlohmann::ordered_json j;
        j["v"] = r.v;
        j["n"] = r.n;
        j["y"] = r.y;
        j["log2_total"] = r.log2_total;
        j["best_partition"] = to_string(r.best_partition);
        j["e_star"] = r.e_star.exponent;
        j["lambda"] = r.lambda;
        j["relation"] = to_string(r.relation);
        j["corollary"] = r.corollary_condition;
        return j.dump();
    }
}
