/* vim: set sw=4 sts=4 et : */

#ifndef COLORBOUND_GUARD_ORACLE_HH
#define COLORBOUND_GUARD_ORACLE_HH 1

#include <colorbound/graph.hh>
#include <colorbound/kernels.hh>
#include <colorbound/partitions.hh>

#include <map>
#include <optional>
#include <string>
#include <tuple>

namespace colorbound
{
    /**
     * How "graphs with chromatic number n and partition P" is read:
     * partition_subgraph counts spanning subgraphs of the complete
     * multipartite graph on P whose chromatic number is exactly n, and
     * census counts every labeled graph on v vertices with chromatic
     * number n, whatever its partition.
     */
    enum class Interpretation
    {
        partition_subgraph,
        census
    };

    auto to_string(Interpretation i) -> std::string;

    /// Caps an enumeration at 2^max_bits graphs unless override_cap is set.
    struct EnumerationBudget
    {
        unsigned max_bits = 28;
        bool override_cap = false;

        /// Throws BudgetExceeded if 2^required_bits graphs would exceed the cap.
        auto require(unsigned required_bits) const -> void;
    };

    struct OracleOptions
    {
        EnumerationBudget budget = { };
        ColoringLimits limits = { };
        int jobs = 1;
    };

    /// Exhaustively counts the spanning subgraphs of complete_multipartite(p) that the class coloring keeps proper.
    auto count_partition_subgraphs(const Partition & p, const OracleOptions & options = { }) -> ExactCount;

    /// How many spanning subgraphs of complete_multipartite(p) have each chromatic number.
    auto chi_distribution(const Partition & p, const OracleOptions & options = { }) -> ChiTally;

    /// Spanning subgraphs of complete_multipartite(p) with chromatic number exactly n.
    auto count_chi_exact(const Partition & p, int n, const OracleOptions & options = { }) -> ExactCount;

    struct GammaChi
    {
        ExactCount count;
        std::optional<Partition> witness;
    };

    /// Maximum over partitions of count_chi_exact, or the census count, per interpretation.
    auto gamma_chi(int v, int n, Interpretation interpretation, const OracleOptions & options = { }) -> GammaChi;

    struct ChiCensus
    {
        int v;
        std::map<int, ExactCount> counts;
    };

    auto chromatic_census(int v, const OracleOptions & options = { }) -> ChiCensus;

    struct ConjectureVerdict
    {
        int which, v, n;
        Interpretation interpretation;
        ExactCount lhs, rhs;
        bool holds;
        std::optional<Partition> witness;
    };

    /**
     * Evaluates one conjecture instance. Both sides are computed exactly;
     * the instance failing is reported through holds, not by throwing.
     */
    auto test_conjecture(int which, int v, int n, Interpretation interpretation, const OracleOptions & options = { })
        -> ConjectureVerdict;

    /// Log2 of the number of graphs an instance enumerates, or nothing if it needs no enumeration.
    auto conjecture_required_bits(int which, int v, int n, Interpretation interpretation) -> std::optional<unsigned>;

    /// Evaluates many conjecture instances, computing each census and gamma_chi value once.
    class ConjectureOracle
    {
        private:
            OracleOptions _options;
            std::map<int, ChiCensus> _censuses;
            std::map<std::tuple<int, int, Interpretation>, GammaChi> _gamma_chi;

            auto lookup_gamma_chi(int v, int n, Interpretation interpretation) -> const GammaChi &;

        public:
            explicit ConjectureOracle(OracleOptions options);

            auto census(int v) -> const ChiCensus &;
            auto verdict(int which, int v, int n, Interpretation interpretation) -> ConjectureVerdict;
    };

    /// `{"v":4,"counts":{"1":"1","2":"40",...}}`
    auto to_json_string(const ChiCensus & c) -> std::string;
    /// `{"conjecture":1,"v":4,"n":3,"interpretation":"partition-subgraph","lhs":"7","rhs":"16","holds":false,"witness":"2,1,1"}`
    auto to_json_string(const ConjectureVerdict & v) -> std::string;
}

#endif
