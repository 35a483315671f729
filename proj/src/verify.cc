/* vim: set sw=4 sts=4 et : */

#include <colorbound/verify.hh>
#include <colorbound/bounds.hh>
#include <colorbound/errors.hh>

#include <algorithm>
#include <functional>
#include <sstream>

using std::int64_t;
using std::string;
using std::uint64_t;
using std::vector;

namespace colorbound
{
    namespace
    {
        auto join(const vector<int> & parts) -> string
        {
            string result;
            for (auto x : parts)
                result += (result.empty() ? "" : ",") + std::to_string(x);
            return result;
        }

        auto join(const vector<int64_t> & values) -> string
        {
            string result;
            for (auto x : values)
                result += (result.empty() ? "" : ",") + std::to_string(x);
            return "[" + result + "]";
        }

        auto choose2(int64_t x) -> int64_t
        {
            return x * (x - 1) / 2;
        }
    }

    auto verify_theorem(int min_v, int max_v) -> SuiteResult
    {
        SuiteResult result{ .suite = "theorem", .min_v = min_v, .max_v = max_v, .checked = 0, .comparisons = 0, .failures = { } };

        auto fail = [&] (const string & what) { result.failures.push_back(what); };

        for (int v = std::max(min_v, 1) ; v <= max_v ; ++v) {
            auto total = total_log2(v).exponent;

            for (auto & p : all_partitions(v)) {
                ++result.comparisons;
                if (exponent(p).exponent + intra_class_pairs(p.parts()) != total)
                    fail("complementarity fails for partition " + to_string(p) + " of v = " + std::to_string(v));
            }

            for (int n = 1 ; n <= v ; ++n) {
                ++result.checked;
                try {
                    auto report = check_upper_bound(v, n);

                    uint64_t best = 0;
                    for (auto & p : enumerate_partitions(v, n))
                        best = std::max(best, exponent(p).exponent);
                    result.comparisons += 4;

                    if (exponent(balanced_partition(v, n)).exponent != best)
                        fail("balanced partition is not the maximizer at v = " + std::to_string(v) + ", n = " + std::to_string(n));
                    if (report.e_star.exponent != best)
                        fail("e* = " + std::to_string(report.e_star.exponent) + " but exhaustive maximum is "
                                + std::to_string(best) + " at v = " + std::to_string(v) + ", n = " + std::to_string(n));
                    if (report.lambda < uint64_t(v - n))
                        fail("lambda < y at v = " + std::to_string(v) + ", n = " + std::to_string(n));
                    if ((report.lambda == uint64_t(v - n)) != (2 * n >= v))
                        fail("equality case mismatch at v = " + std::to_string(v) + ", n = " + std::to_string(n));
                }
                catch (const InternalInconsistency & e) {
                    fail(e.what());
                }
            }
        }

        return result;
    }

    auto verify_proof_terms(int min_v, int max_v) -> SuiteResult
    {
        SuiteResult result{ .suite = "proof-terms", .min_v = min_v, .max_v = max_v, .checked = 0, .comparisons = 0, .failures = { } };

        for (int v = std::max(min_v, 2) ; v <= max_v ; ++v) {
            auto total = int64_t(total_log2(v).exponent);

            for (auto & p : all_partitions(v)) {
                vector<int> order(p.parts().begin(), p.parts().end());
                std::sort(order.begin(), order.end());
                do {
                    ++result.checked;
                    auto where = [&] { return " for ordering " + join(order) + " of v = " + std::to_string(v); };
                    auto fail = [&] (const string & what) { result.failures.push_back(what + where()); };

                    auto terms = expand_term_sequences(order);
                    auto e = int64_t(nested_exponent(order));

                    if (terms.s1.size() != std::size_t(v - 1) || terms.s2.size() != std::size_t(v - 1)) {
                        fail("term lists have the wrong length");
                        continue;
                    }

                    bool strict = false;
                    int64_t sum1 = 0, sum2 = 0;
                    for (std::size_t i = 0 ; i < terms.s1.size() ; ++i) {
                        ++result.comparisons;
                        if (terms.s1[i] < terms.s2[i])
                            fail("s1 < s2 at term " + std::to_string(i + 1));
                        if (terms.s1[i] > terms.s2[i])
                            strict = true;
                        sum1 += terms.s1[i];
                        sum2 += terms.s2[i];
                    }

                    result.comparisons += 2;
                    if (sum1 != total)
                        fail("sum of s1 is " + std::to_string(sum1) + ", expected C(v,2) = " + std::to_string(total));
                    if (sum2 != e)
                        fail("sum of s2 is " + std::to_string(sum2) + ", expected exponent " + std::to_string(e));

                    bool some_part_above_one = std::any_of(order.begin(), order.end(), [] (int x) { return x > 1; });
                    ++result.comparisons;
                    if (some_part_above_one && ! strict)
                        fail("no strict term although a part exceeds 1");

                    auto gaps = psi_gap(order);
                    int64_t gap_total = 0;
                    for (std::size_t j = 0 ; j < gaps.size() ; ++j) {
                        ++result.comparisons;
                        gap_total += gaps[j];
                        if (gaps[j] != choose2(order[j]))
                            fail("gap " + std::to_string(gaps[j]) + " for part " + std::to_string(j + 1) + " of size "
                                    + std::to_string(order[j]) + ", gaps " + join(gaps));
                    }
                    ++result.comparisons;
                    if (gap_total != total - e)
                        fail("gaps total " + std::to_string(gap_total) + ", expected " + std::to_string(total - e));

                    int end_of_block = 0;
                    for (std::size_t j = 0 ; j < terms.block_ranges.size() ; ++j) {
                        auto [first, last] = terms.block_ranges[j];
                        end_of_block += order[j];
                        int64_t run = 0;
                        for (int i = first ; i <= last ; ++i) {
                            run += terms.s1[i - 1];
                            ++result.comparisons;
                            if (terms.s2[i - 1] != v - end_of_block)
                                fail("s2 is not constant v - (x_1 + ... + x_j) over block " + std::to_string(j + 1));
                        }
                        ++result.comparisons;
                        if (2 * run != (terms.s1[first - 1] + terms.s1[last - 1]) * order[j])
                            fail("s1 over block " + std::to_string(j + 1) + " is not an arithmetic run");
                    }
                } while (std::next_permutation(order.begin(), order.end()));
            }
        }

        return result;
    }

    auto verify_eq1(int min_v, int max_v, unsigned max_exponent, const OracleOptions & options) -> SuiteResult
    {
        SuiteResult result{ .suite = "eq1", .min_v = min_v, .max_v = max_v, .checked = 0, .comparisons = 0, .failures = { } };
        options.budget.require(max_exponent);

        for (int v = std::max(min_v, 1) ; v <= max_v ; ++v)
            for (auto & p : all_partitions(v)) {
                auto e = exponent(p);
                if (e.exponent > max_exponent)
                    continue;

                ++result.checked;
                result.comparisons += uint64_t{ 1 } << e.exponent;
                auto counted = count_partition_subgraphs(p, options);
                if (counted != e.to_exact())
                    result.failures.push_back("partition " + to_string(p) + " has " + counted.str()
                            + " compatible graphs, expected 2^" + std::to_string(e.exponent));
            }

        return result;
    }
}
