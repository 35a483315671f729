/* vim: set sw=4 sts=4 et : */

#include <colorbound/cli.hh>
#include <colorbound/bounds.hh>
#include <colorbound/errors.hh>
#include <colorbound/oracle.hh>
#include <colorbound/verify.hh>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>

using nlohmann::ordered_json;
using std::optional;
using std::ostream;
using std::pair;
using std::string;
using std::vector;

namespace colorbound::cli
{
    namespace
    {
        /// Writes rows either as newline-delimited JSON or as CSV under a fixed header.
        class RowWriter
        {
            private:
                ostream & _out;
                OutputFormat _format;
                vector<string> _columns;

                static auto csv_field(const ordered_json & value) -> string
                {
                    if (value.is_null())
                        return "";
                    if (value.is_string()) {
                        auto s = value.get<string>();
                        if (s.find_first_of(",\"\n") == string::npos)
                            return s;
                        string quoted = "\"";
                        for (auto c : s) {
                            if (c == '"')
                                quoted += '"';
                            quoted += c;
                        }
                        return quoted + "\"";
                    }
                    return value.dump();
                }

            public:
                RowWriter(ostream & out, OutputFormat format, vector<string> columns) :
                    _out(out),
                    _format(format),
                    _columns(std::move(columns))
                {
                    if (_format == OutputFormat::csv) {
                        for (std::size_t c = 0 ; c < _columns.size() ; ++c)
                            _out << (c ? "," : "") << _columns[c];
                        _out << '\n';
                    }
                }

                /// Emits row as JSON, or its columns as one CSV line.
                auto write(const ordered_json & row) -> void
                {
                    if (_format == OutputFormat::json)
                        _out << row.dump() << '\n';
                    else
                        write_csv(row);
                }

                auto write_csv(const ordered_json & row) -> void
                {
                    for (std::size_t c = 0 ; c < _columns.size() ; ++c)
                        _out << (c ? "," : "") << csv_field(row.at(_columns[c]));
                    _out << '\n';
                }
        };

        auto vertex_range(const RunConfig & config) -> pair<int, int>
        {
            return { config.min_v, config.max_v.value_or(default_max_v(config.command, config.suite)) };
        }

        auto n_in_range(const RunConfig & config, int n) -> bool
        {
            return ! config.n_range || (n >= config.n_range->first && n <= config.n_range->second);
        }

        auto interpretations(InterpretationChoice choice) -> vector<Interpretation>
        {
            switch (choice) {
                case InterpretationChoice::partition: return { Interpretation::partition_subgraph };
                case InterpretationChoice::census:    return { Interpretation::census };
                case InterpretationChoice::both:      return { Interpretation::partition_subgraph, Interpretation::census };
            }
            throw InternalInconsistency{ "unknown InterpretationChoice" };
        }

        auto oracle_options(const RunConfig & config) -> OracleOptions
        {
            OracleOptions options;
            options.budget.override_cap = config.budget_override;
            options.jobs = config.jobs;
            return options;
        }

        auto suite_name(VerifySuite s) -> string
        {
            switch (s) {
                case VerifySuite::theorem:     return "theorem";
                case VerifySuite::proof_terms: return "proof-terms";
                case VerifySuite::eq1:         return "eq1";
            }
            throw InternalInconsistency{ "unknown VerifySuite" };
        }
    }

    auto default_max_v(Command command, optional<VerifySuite> suite) -> int
    {
        switch (command) {
            case Command::table:       return 12;
            case Command::verify:      return suite == VerifySuite::eq1 ? 8 : 12;
            case Command::conjectures: return 7;
            case Command::census:      return 7;
        }
        throw InternalInconsistency{ "unknown Command" };
    }

    auto validate(const RunConfig & config) -> void
    {
        auto [min_v, max_v] = vertex_range(config);
        if (min_v < 1)
            throw UsageError{ "--min-v must be at least 1" };
        if (max_v < min_v)
            throw UsageError{ "--max-v must not be below --min-v" };
        if (config.jobs < 1)
            throw UsageError{ "--jobs must be at least 1" };
        if (config.n_range && (config.n_range->first < 1 || config.n_range->second < config.n_range->first))
            throw UsageError{ "--n must be a positive value or a nondecreasing range A:B" };
        if (config.command == Command::verify && ! config.suite)
            throw UsageError{ "verify needs a suite: theorem, proof-terms or eq1" };
    }

    auto parse_n_range(const string & text) -> pair<int, int>
    {
        auto number = [&] (const string & piece) {
            std::size_t used = 0;
            int value = 0;
            try {
                value = std::stoi(piece, &used);
            }
            catch (const std::exception &) {
                throw UsageError{ "bad --n value '" + text + "'" };
            }
            if (used != piece.size())
                throw UsageError{ "bad --n value '" + text + "'" };
            return value;
        };

        if (auto colon = text.find(':') ; colon != string::npos)
            return { number(text.substr(0, colon)), number(text.substr(colon + 1)) };
        auto n = number(text);
        return { n, n };
    }

    auto cmd_table(const RunConfig & config, ostream & out, ostream &) -> int
    {
        auto [min_v, max_v] = vertex_range(config);
        RowWriter writer{ out, config.format,
            { "v", "n", "y", "log2_total", "best_partition", "e_star", "lambda", "relation", "corollary" } };

        for (int v = min_v ; v <= max_v ; ++v)
            for (int n = 1 ; n <= v ; ++n)
                if (n_in_range(config, n))
                    writer.write(ordered_json::parse(to_json_string(check_upper_bound(v, n))));

        return exit_status::success;
    }

    auto cmd_verify(const RunConfig & config, ostream & out, ostream & err) -> int
    {
        auto [min_v, max_v] = vertex_range(config);

        SuiteResult result;
        switch (*config.suite) {
            case VerifySuite::theorem:     result = verify_theorem(min_v, max_v); break;
            case VerifySuite::proof_terms: result = verify_proof_terms(min_v, max_v); break;
            case VerifySuite::eq1:         result = verify_eq1(min_v, max_v, config.max_exponent, oracle_options(config)); break;
        }

        for (auto & f : result.failures)
            err << "FAIL " << suite_name(*config.suite) << ": " << f << '\n';

        ordered_json row;
        row["suite"] = result.suite;
        row["min_v"] = result.min_v;
        row["max_v"] = result.max_v;
        row["checked"] = result.checked;
        row["comparisons"] = result.comparisons;
        row["failures"] = result.failures.size();

        RowWriter writer{ out, config.format, { "suite", "min_v", "max_v", "checked", "comparisons", "failures" } };
        writer.write(row);

        return result.passed() ? exit_status::success : exit_status::proven_fact_failure;
    }

    auto cmd_conjectures(const RunConfig & config, ostream & out, ostream &) -> int
    {
        auto [min_v, max_v] = vertex_range(config);
        auto options = oracle_options(config);
        auto wanted = interpretations(config.interpretation);

        struct Instance
        {
            int which, v, n;
            Interpretation interpretation;
        };

        vector<Instance> instances;
        for (int v = std::max(min_v, 2) ; v <= max_v ; ++v)
            for (int n = 2 ; n <= v ; ++n)
                if (n_in_range(config, n))
                    for (int which = 1 ; which <= 3 ; ++which)
                        for (auto i : wanted)
                            instances.push_back(Instance{ which, v, n, i });

        // Refuse before printing anything if some instance is over budget.
        for (auto & i : instances)
            if (auto bits = conjecture_required_bits(i.which, i.v, i.n, i.interpretation)) {
                options.budget.require(*bits);
                if (i.v > options.limits.max_vertices)
                    throw ResourceGuardError{ "conjecture instances are capped at "
                        + std::to_string(options.limits.max_vertices) + " vertices" };
            }

        RowWriter writer{ out, config.format, { "conjecture", "v", "n", "interpretation", "lhs", "rhs", "holds", "witness" } };
        ConjectureOracle oracle{ options };
        for (auto & i : instances)
            writer.write(ordered_json::parse(to_json_string(oracle.verdict(i.which, i.v, i.n, i.interpretation))));

        return exit_status::success;
    }

    auto cmd_census(const RunConfig & config, ostream & out, ostream &) -> int
    {
        auto [min_v, max_v] = vertex_range(config);
        auto options = oracle_options(config);

        for (int v = min_v ; v <= max_v ; ++v)
            options.budget.require(unsigned(pair_count(v)));

        RowWriter writer{ out, config.format, { "v", "chi", "count" } };
        for (int v = min_v ; v <= max_v ; ++v) {
            auto census = chromatic_census(v, options);
            if (config.format == OutputFormat::json)
                writer.write(ordered_json::parse(to_json_string(census)));
            else
                for (auto & [chi, count] : census.counts) {
                    ordered_json row;
                    row["v"] = v;
                    row["chi"] = chi;
                    row["count"] = count.str();
                    writer.write(row);
                }
        }

        return exit_status::success;
    }

    auto run(const RunConfig & config, ostream & out, ostream & err) -> int
    {
        try {
            validate(config);
            switch (config.command) {
                case Command::table:       return cmd_table(config, out, err);
                case Command::verify:      return cmd_verify(config, out, err);
                case Command::conjectures: return cmd_conjectures(config, out, err);
                case Command::census:      return cmd_census(config, out, err);
            }
            throw InternalInconsistency{ "unknown Command" };
        }
        catch (const UsageError & e) {
            err << "usage error: " << e.what() << '\n';
            return exit_status::usage;
        }
        catch (const PreconditionError & e) {
            err << "usage error: " << e.what() << '\n';
            return exit_status::usage;
        }
        catch (const BudgetExceeded & e) {
            err << "budget exceeded: " << e.what() << '\n';
            return exit_status::budget;
        }
        catch (const ResourceGuardError & e) {
            err << "resource limit: " << e.what() << '\n';
            return exit_status::budget;
        }
        catch (const InternalInconsistency & e) {
            err << "internal inconsistency: " << e.what() << '\n';
            return exit_status::proven_fact_failure;
        }
    }

    auto main_with_args(const vector<string> & args, ostream & out, ostream & err) -> int
    {
        CLI::App app{ "Exact counts of labeled graphs compatible with vertex color partitions", "colorbound" };
        app.require_subcommand(1);

        RunConfig config;
        optional<int> max_v;
        string n_text, interpretation = "partition", format = "json", out_path, suite;

        auto common = [&] (CLI::App * sub) {
            sub->add_option("--min-v", config.min_v, "Smallest vertex count");
            sub->add_option("--max-v", max_v, "Largest vertex count");
            sub->add_option("--n", n_text, "Number of colors, N or A:B");
            sub->add_option("--interpretation", interpretation, "How graphs with chromatic number n are counted")
                ->check(CLI::IsMember({ "partition", "census", "both" }));
            sub->add_option("--jobs", config.jobs, "Worker threads for enumeration");
            sub->add_flag("--budget-override", config.budget_override, "Allow enumerations beyond 2^28 graphs");
            sub->add_option("--format", format, "Output format")->check(CLI::IsMember({ "json", "csv" }));
            sub->add_option("--out", out_path, "Write the report here instead of standard output");
        };

        auto table = app.add_subcommand("table", "Upper bound report for every (v, n)");
        common(table);

        auto verify = app.add_subcommand("verify", "Exhaustively check the bound, the proof terms, or the subgraph counts");
        common(verify);
        verify->add_option("suite", suite, "theorem, proof-terms or eq1")
            ->required()
            ->check(CLI::IsMember({ "theorem", "proof-terms", "eq1" }));
        verify->add_option("--max-exponent", config.max_exponent, "Largest partition exponent the eq1 suite enumerates");

        auto conjectures = app.add_subcommand("conjectures", "Evaluate the three conjectures against exhaustive counts");
        common(conjectures);

        auto census = app.add_subcommand("census", "Count all labeled graphs by chromatic number");
        common(census);

        try {
            vector<string> reversed{ args.rbegin(), args.rend() };
            app.parse(reversed);

            if (table->parsed())
                config.command = Command::table;
            else if (verify->parsed())
                config.command = Command::verify;
            else if (conjectures->parsed())
                config.command = Command::conjectures;
            else
                config.command = Command::census;

            config.max_v = max_v;
            if (! n_text.empty())
                config.n_range = parse_n_range(n_text);
            config.interpretation = interpretation == "census" ? InterpretationChoice::census
                : interpretation == "both" ? InterpretationChoice::both : InterpretationChoice::partition;
            config.format = format == "csv" ? OutputFormat::csv : OutputFormat::json;
            if (! suite.empty())
                config.suite = suite == "theorem" ? VerifySuite::theorem
                    : suite == "proof-terms" ? VerifySuite::proof_terms : VerifySuite::eq1;
            if (! out_path.empty())
                config.out_path = out_path;
        }
        catch (const CLI::ParseError & e) {
            if (e.get_exit_code() == 0) {
                app.exit(e, out, err);
                return exit_status::success;
            }
            app.exit(e, err, err);
            return exit_status::usage;
        }
        catch (const UsageError & e) {
            err << "usage error: " << e.what() << '\n';
            return exit_status::usage;
        }

        if (config.out_path) {
            std::ofstream file{ *config.out_path };
            if (! file) {
                err << "usage error: cannot write to " << *config.out_path << '\n';
                return exit_status::usage;
            }
            return run(config, file, err);
        }

        return run(config, out, err);
    }
}
