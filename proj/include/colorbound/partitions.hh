/* vim: set sw=4 sts=4 et : */

#ifndef COLORBOUND_GUARD_PARTITIONS_HH
#define COLORBOUND_GUARD_PARTITIONS_HH 1

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace colorbound
{
    /// Arbitrary precision nonnegative count.
    using ExactCount = boost::multiprecision::cpp_int;

    /// A count known to be an exact power of two, held as its exponent.
    struct Log2Count
    {
        std::uint64_t exponent = 0;

        auto to_exact() const -> ExactCount;

        auto operator<=> (const Log2Count &) const = default;
    };

    /**
     * A partition of v = sum of parts into n positive parts, held in
     * non-increasing (canonical) order whatever order it was built from.
     */
    class Partition
    {
        private:
            std::vector<int> _parts;
            int _total;

        public:
            explicit Partition(std::vector<int> parts);
            Partition(std::initializer_list<int> parts);

            auto parts() const -> std::span<const int> { return _parts; }
            auto part_count() const -> int { return static_cast<int>(_parts.size()); }
            auto total() const -> int { return _total; }
            auto largest_part() const -> int { return _parts.front(); }

            auto operator== (const Partition &) const -> bool = default;
    };

    /// Throws PreconditionError unless every part is at least 1 and there is at least one part.
    auto validate_parts(std::span<const int> parts) -> void;

    /**
     * Yields the partitions of v into exactly n parts, one at a time, in
     * reverse lexicographic order of their canonical forms.
     */
    class PartitionGenerator
    {
        private:
            int _v, _n;
            std::vector<int> _current;
            bool _started = false, _done = false;

            auto fill_from(int position, int remaining, int cap) -> bool;

        public:
            PartitionGenerator(int v, int n);

            auto next() -> std::optional<Partition>;
    };

    auto enumerate_partitions(int v, int n) -> std::vector<Partition>;

    /// Every partition of v with any number of parts, grouped by part count ascending.
    auto all_partitions(int v) -> std::vector<Partition>;

    /// p(v, n) by the recurrence p(v, n) = p(v - 1, n - 1) + p(v - n, n).
    auto partition_count(int v, int n) -> std::uint64_t;

    /// Sum over i < j of x_i x_j, evaluated as the nested sum in the given part order.
    auto nested_exponent(std::span<const int> parts) -> std::uint64_t;

    /// (v^2 - sum of x_j^2) / 2.
    auto closed_form_exponent(std::span<const int> parts) -> std::uint64_t;

    /// Sum of C(x_j, 2): the pairs that fall inside a color class.
    auto intra_class_pairs(std::span<const int> parts) -> std::uint64_t;

    /**
     * Number of cross-class pairs of p, so that the number of graphs
     * compatible with p is 2 to this power. Both evaluation routes are
     * computed and must agree.
     */
    auto exponent(const Partition & p) -> Log2Count;

    /// The first partition in enumeration order attaining the largest exponent.
    auto max_partition(int v, int n) -> std::pair<Partition, Log2Count>;

    /// Parts ceil(v / n) (v mod n of them) and floor(v / n) (the rest).
    auto balanced_partition(int v, int n) -> Partition;

    /// Comma separated canonical parts, e.g. `3,2,2`.
    auto to_string(const Partition & p) -> std::string;
    auto parse_partition(const std::string & text) -> Partition;

    /// Throws PreconditionError unless 1 <= n <= v.
    auto require_valid_vn(int v, int n) -> void;
}

#endif
