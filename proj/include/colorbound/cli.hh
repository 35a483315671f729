/* vim: set sw=4 sts=4 et : */

#ifndef COLORBOUND_GUARD_CLI_HH
#define COLORBOUND_GUARD_CLI_HH 1

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace colorbound::cli
{
    enum class Command
    {
        table,
        verify,
        conjectures,
        census
    };

    enum class VerifySuite
    {
        theorem,
        proof_terms,
        eq1
    };

    enum class OutputFormat
    {
        json,
        csv
    };

    enum class InterpretationChoice
    {
        partition,
        census,
        both
    };

    namespace exit_status
    {
        inline constexpr int success = 0;
        inline constexpr int proven_fact_failure = 1;
        inline constexpr int usage = 2;
        inline constexpr int budget = 3;
    }

    class UsageError : public std::invalid_argument
    {
        public:
            using std::invalid_argument::invalid_argument;
    };

    struct RunConfig
    {
        Command command = Command::table;
        std::optional<VerifySuite> suite;
        int min_v = 1;
        /// Unset means the per-command default.
        std::optional<int> max_v;
        /// Inclusive range of color counts; unset means every meaningful n.
        std::optional<std::pair<int, int>> n_range;
        InterpretationChoice interpretation = InterpretationChoice::partition;
        int jobs = 1;
        bool budget_override = false;
        /// Largest partition exponent the eq1 suite enumerates.
        unsigned max_exponent = 16;
        OutputFormat format = OutputFormat::json;
        std::optional<std::string> out_path;
    };

    /// Default upper end of the vertex range for a command.
    auto default_max_v(Command command, std::optional<VerifySuite> suite = std::nullopt) -> int;

    /// Throws UsageError for an inconsistent configuration.
    auto validate(const RunConfig & config) -> void;

    /// Parses `N` or `A:B` into an inclusive range.
    auto parse_n_range(const std::string & text) -> std::pair<int, int>;

    auto cmd_table(const RunConfig & config, std::ostream & out, std::ostream & err) -> int;
    auto cmd_verify(const RunConfig & config, std::ostream & out, std::ostream & err) -> int;
    auto cmd_conjectures(const RunConfig & config, std::ostream & out, std::ostream & err) -> int;
    auto cmd_census(const RunConfig & config, std::ostream & out, std::ostream & err) -> int;

    /// Validates config and dispatches on config.command, mapping errors onto exit statuses.
    auto run(const RunConfig & config, std::ostream & out, std::ostream & err) -> int;

    /// Full command line handling, including --out redirection.
    auto main_with_args(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;
}

#endif
