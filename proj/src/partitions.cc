/* vim: set sw=4 sts=4 et : */

#include <colorbound/partitions.hh>
#include <colorbound/errors.hh>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

using std::span;
using std::string;
using std::uint64_t;
using std::vector;

namespace colorbound
{
    auto Log2Count::to_exact() const -> ExactCount
    {
        ExactCount result = 1;
        result <<= exponent;
        return result;
    }

    auto validate_parts(span<const int> parts) -> void
    {
        if (parts.empty())
            throw PreconditionError{ "a partition needs at least one part" };
        for (auto x : parts)
            if (x < 1)
                throw PreconditionError{ "partition parts must be positive, got " + std::to_string(x) };
    }

    Partition::Partition(vector<int> parts) :
        _parts(std::move(parts))
    {
        validate_parts(_parts);
        std::sort(_parts.begin(), _parts.end(), std::greater<>{ });
        _total = std::accumulate(_parts.begin(), _parts.end(), 0);
    }

    Partition::Partition(std::initializer_list<int> parts) :
        Partition(vector<int>(parts))
    {
    }

    auto require_valid_vn(int v, int n) -> void
    {
        if (n < 1 || n > v)
            throw PreconditionError{ "no partition of " + std::to_string(v) + " into " + std::to_string(n)
                + " positive parts (need 1 <= n <= v)" };
    }

    PartitionGenerator::PartitionGenerator(int v, int n) :
        _v(v),
        _n(n),
        _current(n > 0 ? n : 0, 0)
    {
        require_valid_vn(v, n);
    }

    auto PartitionGenerator::fill_from(int position, int remaining, int cap) -> bool
    {
        int slots = _n - position;
        if (remaining < slots || remaining > slots * cap)
            return false;

        for (int i = position ; i < _n ; ++i) {
            int later = _n - i - 1;
            int x = std::min(cap, remaining - later);
            _current[i] = x;
            remaining -= x;
            cap = x;
        }
        return true;
    }

    auto PartitionGenerator::next() -> std::optional<Partition>
    {
        if (_done)
            return std::nullopt;

        if (! _started) {
            _started = true;
            fill_from(0, _v, _v);
            return Partition{ _current };
        }

        // Rightmost position that can shrink by one while the tail can still be completed.
        int prefix = std::accumulate(_current.begin(), _current.end() - 1, 0);
        for (int i = _n - 2 ; i >= 0 ; --i) {
            prefix -= _current[i];
            int shrunk = _current[i] - 1;
            if (shrunk >= 1 && (i == 0 || shrunk <= _current[i - 1])) {
                int remaining = _v - prefix - shrunk;
                int slots = _n - i - 1;
                if (remaining >= slots && remaining <= slots * shrunk) {
                    _current[i] = shrunk;
                    fill_from(i + 1, remaining, shrunk);
                    return Partition{ _current };
                }
            }
        }

        _done = true;
        return std::nullopt;
    }

    auto enumerate_partitions(int v, int n) -> vector<Partition>
    {
        vector<Partition> result;
        PartitionGenerator generator{ v, n };
        while (auto p = generator.next())
            result.push_back(std::move(*p));
        return result;
    }

    auto all_partitions(int v) -> vector<Partition>
    {
        vector<Partition> result;
        for (int n = 1 ; n <= v ; ++n) {
            auto some = enumerate_partitions(v, n);
            result.insert(result.end(), some.begin(), some.end());
        }
        return result;
    }

    auto partition_count(int v, int n) -> uint64_t
    {
        std::map<std::pair<int, int>, uint64_t> memo;
        std::function<uint64_t (int, int)> count = [&] (int a, int b) -> uint64_t {
            if (a == 0 && b == 0)
                return 1;
            if (a <= 0 || b <= 0 || b > a)
                return 0;
            auto key = std::pair{ a, b };
            if (auto m = memo.find(key) ; m != memo.end())
                return m->second;
            auto r = count(a - 1, b - 1) + count(a - b, b);
            memo.emplace(key, r);
            return r;
        };
        return count(v, n);
    }

    auto nested_exponent(span<const int> parts) -> uint64_t
    {
        // (x_2 + ... + x_n) x_1 + (x_3 + ... + x_n) x_2 + ... + x_n x_{n-1}
        uint64_t result = 0;
        uint64_t suffix = 0;
        for (auto x = parts.rbegin() ; x != parts.rend() ; ++x) {
            result += suffix * uint64_t(*x);
            suffix += uint64_t(*x);
        }
        return result;
    }

    auto closed_form_exponent(span<const int> parts) -> uint64_t
    {
        uint64_t v = 0, squares = 0;
        for (auto x : parts) {
            v += uint64_t(x);
            squares += uint64_t(x) * uint64_t(x);
        }
        return (v * v - squares) / 2;
    }

    auto intra_class_pairs(span<const int> parts) -> uint64_t
    {
        uint64_t result = 0;
        for (auto x : parts)
            result += uint64_t(x) * uint64_t(x - 1) / 2;
        return result;
    }

    auto exponent(const Partition & p) -> Log2Count
    {
        auto nested = nested_exponent(p.parts());
        auto closed = closed_form_exponent(p.parts());
        if (nested != closed)
            throw InternalInconsistency{ "exponent routes disagree for " + to_string(p) + ": nested "
                + std::to_string(nested) + ", closed form " + std::to_string(closed) };
        return Log2Count{ nested };
    }

    auto max_partition(int v, int n) -> std::pair<Partition, Log2Count>
    {
        PartitionGenerator generator{ v, n };
        auto best = *generator.next();
        auto best_exponent = exponent(best);
        while (auto p = generator.next()) {
            auto e = exponent(*p);
            if (e > best_exponent) {
                best = std::move(*p);
                best_exponent = e;
            }
        }

        auto balanced = exponent(balanced_partition(v, n));
        if (balanced != best_exponent)
            throw InternalInconsistency{ "exhaustive maximum " + std::to_string(best_exponent.exponent)
                + " differs from balanced partition exponent " + std::to_string(balanced.exponent)
                + " at v = " + std::to_string(v) + ", n = " + std::to_string(n) };

        return { std::move(best), best_exponent };
    }

    auto balanced_partition(int v, int n) -> Partition
    {
        require_valid_vn(v, n);
        vector<int> parts(n, v / n);
        for (int i = 0 ; i < v % n ; ++i)
            ++parts[i];
        return Partition{ std::move(parts) };
    }

    auto to_string(const Partition & p) -> string
    {
        string result;
        for (auto x : p.parts()) {
            if (! result.empty())
                result += ',';
            result += std::to_string(x);
        }
        return result;
    }

    auto parse_partition(const string & text) -> Partition
    {
        vector<int> parts;
        std::istringstream in{ text };
        string piece;
        while (std::getline(in, piece, ',')) {
            std::size_t used = 0;
            int x = 0;
            try {
                x = std::stoi(piece, &used);
            }
            catch (const std::exception &) {
                throw PreconditionError{ "not a partition: '" + text + "'" };
            }
            if (used != piece.size())
                throw PreconditionError{ "not a partition: '" + text + "'" };
            parts.push_back(x);
        }
        return Partition{ std::move(parts) };
    }
}
