/* vim: set sw=4 sts=4 et : */

#include <colorbound/oracle.hh>
#include <colorbound/errors.hh>

#include <nlohmann/json.hpp>

using std::optional;
using std::string;
using std::uint64_t;

namespace colorbound
{
    namespace
    {
        auto require_cap(int v, const ColoringLimits & limits) -> void
        {
            if (v > limits.max_vertices)
                throw ResourceGuardError{ "coloring is capped at " + std::to_string(limits.max_vertices)
                    + " vertices, enumeration needs " + std::to_string(v) };
        }

        auto to_exact(uint64_t c) -> ExactCount
        {
            return ExactCount{ c };
        }

        auto require_conjecture(int which, int v, int n) -> void
        {
            if (which < 1 || which > 3)
                throw PreconditionError{ "conjectures are numbered 1 to 3, got " + std::to_string(which) };
            if (n < 2 || n > v)
                throw PreconditionError{ "conjecture instances need 2 <= n <= v, got v = " + std::to_string(v)
                    + ", n = " + std::to_string(n) };
        }

        auto gamma(int v, int n) -> ExactCount
        {
            return max_partition(v, n).second.to_exact();
        }

        auto verdict_from(int which, int v, int n, Interpretation interpretation, const GammaChi * chi) -> ConjectureVerdict
        {
            ConjectureVerdict result{ .which = which, .v = v, .n = n, .interpretation = interpretation,
                .lhs = 0, .rhs = 0, .holds = false, .witness = std::nullopt };

            switch (which) {
                case 1:
                    result.lhs = chi->count;
                    result.rhs = gamma(v, n) - gamma(v, n - 1);
                    result.holds = result.lhs == result.rhs;
                    result.witness = chi->witness;
                    break;

                case 2:
                    result.lhs = gamma(v, n);
                    result.rhs = 2 * gamma(v, n - 1);
                    result.holds = result.lhs >= result.rhs;
                    break;

                case 3:
                    result.lhs = chi->count;
                    result.rhs = gamma(v, n - 1);
                    result.holds = result.lhs >= result.rhs;
                    result.witness = chi->witness;
                    break;
            }

            return result;
        }
    }

    BudgetExceeded::BudgetExceeded(unsigned required_bits, unsigned allowed_bits) :
        std::runtime_error("enumeration needs 2^" + std::to_string(required_bits) + " graphs but the budget allows 2^"
                + std::to_string(allowed_bits) + "; pass the budget override to run it anyway"),
        _required_bits(required_bits),
        _allowed_bits(allowed_bits)
    {
    }

    auto EnumerationBudget::require(unsigned required_bits) const -> void
    {
        if (required_bits > max_bits && ! override_cap)
            throw BudgetExceeded{ required_bits, max_bits };
    }

    auto to_string(Interpretation i) -> string
    {
        switch (i) {
            case Interpretation::partition_subgraph: return "partition-subgraph";
            case Interpretation::census:             return "census";
        }
        throw InternalInconsistency{ "unknown Interpretation" };
    }

    auto count_partition_subgraphs(const Partition & p, const OracleOptions & options) -> ExactCount
    {
        auto space = EdgeSpace::subgraphs_of(p);
        options.budget.require(space.bits());
        auto colouring = class_coloring(p);
        return to_exact(parallel::count_properly_coloured(space, colouring.colors(), options.jobs));
    }

    auto chi_distribution(const Partition & p, const OracleOptions & options) -> ChiTally
    {
        auto space = EdgeSpace::subgraphs_of(p);
        options.budget.require(space.bits());
        require_cap(space.vertex_count, options.limits);
        return parallel::tally_chromatic(space, options.jobs);
    }

    auto count_chi_exact(const Partition & p, int n, const OracleOptions & options) -> ExactCount
    {
        if (n < 0)
            throw PreconditionError{ "chromatic number must be nonnegative" };
        auto tally = chi_distribution(p, options);
        return std::size_t(n) < tally.size() ? to_exact(tally[n]) : ExactCount{ 0 };
    }

    auto gamma_chi(int v, int n, Interpretation interpretation, const OracleOptions & options) -> GammaChi
    {
        require_valid_vn(v, n);

        if (interpretation == Interpretation::census) {
            auto census = chromatic_census(v, options);
            return GammaChi{ .count = census.counts.at(n), .witness = std::nullopt };
        }

        // Check the whole family before enumerating any of it.
        options.budget.require(unsigned(max_partition(v, n).second.exponent));

        optional<GammaChi> best;
        PartitionGenerator generator{ v, n };
        while (auto p = generator.next()) {
            auto count = count_chi_exact(*p, n, options);
            if (! best || count > best->count)
                best = GammaChi{ .count = std::move(count), .witness = std::move(*p) };
        }
        return std::move(*best);
    }

    auto chromatic_census(int v, const OracleOptions & options) -> ChiCensus
    {
        if (v < 0)
            throw PreconditionError{ "vertex count must be nonnegative" };

        auto space = EdgeSpace::all_graphs(v);
        options.budget.require(space.bits());
        require_cap(v, options.limits);
        auto tally = parallel::tally_chromatic(space, options.jobs);

        ChiCensus result{ .v = v, .counts = { } };
        if (v == 0)
            result.counts.emplace(0, to_exact(tally[0]));
        for (int chi = 1 ; chi <= v ; ++chi)
            result.counts.emplace(chi, to_exact(tally[chi]));
        return result;
    }

    auto conjecture_required_bits(int which, int v, int n, Interpretation interpretation) -> optional<unsigned>
    {
        require_conjecture(which, v, n);
        if (which == 2)
            return std::nullopt;
        if (interpretation == Interpretation::census)
            return unsigned(pair_count(v));
        return unsigned(max_partition(v, n).second.exponent);
    }

    auto test_conjecture(int which, int v, int n, Interpretation interpretation, const OracleOptions & options)
        -> ConjectureVerdict
    {
        require_conjecture(which, v, n);
        if (which == 2)
            return verdict_from(which, v, n, interpretation, nullptr);

        auto chi = gamma_chi(v, n, interpretation, options);
        return verdict_from(which, v, n, interpretation, &chi);
    }

    ConjectureOracle::ConjectureOracle(OracleOptions options) :
        _options(std::move(options))
    {
    }

    auto ConjectureOracle::census(int v) -> const ChiCensus &
    {
        auto c = _censuses.find(v);
        if (c == _censuses.end())
            c = _censuses.emplace(v, chromatic_census(v, _options)).first;
        return c->second;
    }

    auto ConjectureOracle::lookup_gamma_chi(int v, int n, Interpretation interpretation) -> const GammaChi &
    {
        auto key = std::tuple{ v, n, interpretation };
        auto g = _gamma_chi.find(key);
        if (g == _gamma_chi.end()) {
            GammaChi value;
            if (interpretation == Interpretation::census)
                value = GammaChi{ .count = census(v).counts.at(n), .witness = std::nullopt };
            else
                value = gamma_chi(v, n, interpretation, _options);
            g = _gamma_chi.emplace(key, std::move(value)).first;
        }
        return g->second;
    }

    auto ConjectureOracle::verdict(int which, int v, int n, Interpretation interpretation) -> ConjectureVerdict
    {
        require_conjecture(which, v, n);
        if (which == 2)
            return verdict_from(which, v, n, interpretation, nullptr);
        return verdict_from(which, v, n, interpretation, &lookup_gamma_chi(v, n, interpretation));
    }

    auto to_json_string(const ChiCensus & c) -> string
    {
        nlohmann::ordered_json j;
        j["v"] = c.v;
        nlohmann::ordered_json counts = nlohmann::ordered_json::object();
        for (auto & [chi, count] : c.counts)
            counts[std::to_string(chi)] = count.str();
        j["counts"] = counts;
        return j.dump();
    }

    auto to_json_string(const ConjectureVerdict & v) -> string
    {
        nlohmann::ordered_json j;
        j["conjecture"] = v.which;
        j["v"] = v.v;
        j["n"] = v.n;
        j["interpretation"] = to_string(v.interpretation);
        j["lhs"] = v.lhs.str();
        j["rhs"] = v.rhs.str();
        j["holds"] = v.holds;
        if (v.witness)
            j["witness"] = to_string(*v.witness);
        else
            j["witness"] = nullptr;
        return j.dump();
    }
}
