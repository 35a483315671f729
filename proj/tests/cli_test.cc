/* vim: set sw=4 sts=4 et : */

#include <colorbound/cli.hh>

#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace colorbound::cli;
using nlohmann::json;

namespace
{
    struct Run
    {
        int status;
        std::string out, err;
    };

    auto run_cli(std::vector<std::string> args) -> Run
    {
        std::ostringstream out, err;
        int status = main_with_args(args, out, err);
        return Run{ status, out.str(), err.str() };
    }

    auto lines(const std::string & text) -> std::vector<std::string>
    {
        std::vector<std::string> result;
        std::istringstream in{ text };
        for (std::string line ; std::getline(in, line) ; )
            result.push_back(line);
        return result;
    }

    auto split_csv(const std::string & line) -> std::vector<std::string>
    {
        std::vector<std::string> fields{ "" };
        bool quoted = false;
        for (auto c : line) {
            if (c == '"')
                quoted = ! quoted;
            else if (c == ',' && ! quoted)
                fields.emplace_back();
            else
                fields.back() += c;
        }
        return fields;
    }

    auto as_csv_text(const json & value) -> std::string
    {
        if (value.is_string())
            return value.get<std::string>();
        if (value.is_null())
            return "";
        return value.dump();
    }
}

TEST(Table, GridRowsInOrder)
{
    auto r = run_cli({ "table", "--min-v", "2", "--max-v", "4" });
    ASSERT_EQ(r.status, exit_status::success);
    auto rows = lines(r.out);
    ASSERT_EQ(rows.size(), 9u);
    std::vector<std::pair<int, int>> seen;
    for (auto & row : rows) {
        auto j = json::parse(row);
        seen.emplace_back(j["v"], j["n"]);
    }
    EXPECT_EQ(seen, (std::vector<std::pair<int, int>>{ { 2, 1 }, { 2, 2 }, { 3, 1 }, { 3, 2 }, { 3, 3 },
                { 4, 1 }, { 4, 2 }, { 4, 3 }, { 4, 4 } }));
}

TEST(Table, SpecificRows)
{
    auto r = run_cli({ "table", "--min-v", "5", "--max-v", "6" });
    ASSERT_EQ(r.status, 0);
    bool saw_63 = false, saw_52 = false;
    for (auto & row : lines(r.out)) {
        auto j = json::parse(row);
        if (j["v"] == 6 && j["n"] == 3) {
            saw_63 = true;
            EXPECT_EQ(j["lambda"], 3);
            EXPECT_EQ(j["relation"], "equality");
        }
        if (j["v"] == 5 && j["n"] == 2) {
            saw_52 = true;
            EXPECT_EQ(j["lambda"], 4);
            EXPECT_EQ(j["y"], 3);
            EXPECT_EQ(j["relation"], "strict");
        }
    }
    EXPECT_TRUE(saw_63 && saw_52);
}

TEST(Table, NRangeFilters)
{
    auto r = run_cli({ "table", "--max-v", "6", "--n", "2:3" });
    ASSERT_EQ(r.status, 0);
    auto rows = lines(r.out);
    EXPECT_EQ(rows.size(), 9u);
    for (auto & row : rows) {
        int n = json::parse(row)["n"];
        EXPECT_TRUE(n == 2 || n == 3);
    }
}

TEST(Table, DefaultRangeIsTwelve)
{
    auto r = run_cli({ "table" });
    ASSERT_EQ(r.status, 0);
    EXPECT_EQ(lines(r.out).size(), 78u);
}

TEST(UsageErrors, ExitTwo)
{
    EXPECT_EQ(run_cli({ "table", "--min-v", "5", "--max-v", "2" }).status, exit_status::usage);
    EXPECT_EQ(run_cli({ "table", "--min-v", "0" }).status, exit_status::usage);
    EXPECT_EQ(run_cli({ "table", "--jobs", "0" }).status, exit_status::usage);
    EXPECT_EQ(run_cli({ "table", "--n", "3:1" }).status, exit_status::usage);
    EXPECT_EQ(run_cli({ "table", "--n", "x" }).status, exit_status::usage);
    EXPECT_EQ(run_cli({ "table", "--format", "xml" }).status, exit_status::usage);
    EXPECT_EQ(run_cli({ "verify" }).status, exit_status::usage);
    EXPECT_EQ(run_cli({ "verify", "lemma" }).status, exit_status::usage);
    EXPECT_EQ(run_cli({ "frobnicate" }).status, exit_status::usage);
    EXPECT_EQ(run_cli({ }).status, exit_status::usage);
    EXPECT_EQ(run_cli({ "conjectures", "--interpretation", "other" }).status, exit_status::usage);
}

TEST(Help, ExitZero)
{
    auto r = run_cli({ "--help" });
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("conjectures"), std::string::npos);
}

TEST(Verify, SuitesPass)
{
    auto theorem = run_cli({ "verify", "theorem", "--max-v", "12" });
    EXPECT_EQ(theorem.status, exit_status::success);
    auto j = json::parse(theorem.out);
    EXPECT_EQ(j["checked"], 78);
    EXPECT_EQ(j["failures"], 0);

    auto eq1 = run_cli({ "verify", "eq1", "--max-exponent", "16" });
    EXPECT_EQ(eq1.status, exit_status::success);
    EXPECT_GT(json::parse(eq1.out)["checked"].get<int>(), 0);

    auto terms = run_cli({ "verify", "proof-terms", "--max-v", "12" });
    EXPECT_EQ(terms.status, exit_status::success);
    auto t = json::parse(terms.out);
    EXPECT_GT(t["checked"].get<int>(), 77);
    EXPECT_GT(t["comparisons"].get<int>(), 0);
}

TEST(Verify, Eq1BeyondBudgetExitsThree)
{
    EXPECT_EQ(run_cli({ "verify", "eq1", "--max-exponent", "30" }).status, exit_status::budget);
}

TEST(Conjectures, PartitionRunContainsTheKnownVerdicts)
{
    auto r = run_cli({ "conjectures", "--max-v", "4", "--interpretation", "partition" });
    ASSERT_EQ(r.status, exit_status::success);
    bool holds_32 = false, violated_43 = false;
    for (auto & row : lines(r.out)) {
        auto j = json::parse(row);
        EXPECT_EQ(j["interpretation"], "partition-subgraph");
        if (j["conjecture"] == 1 && j["v"] == 3 && j["n"] == 2)
            holds_32 = j["holds"] == true && j["lhs"] == "3" && j["rhs"] == "3";
        if (j["conjecture"] == 1 && j["v"] == 4 && j["n"] == 3)
            violated_43 = j["holds"] == false && j["lhs"] == "7" && j["rhs"] == "16";
    }
    EXPECT_TRUE(holds_32);
    EXPECT_TRUE(violated_43);
}

TEST(Conjectures, TwoVerticesGiveOnlyNEqualsTwo)
{
    auto r = run_cli({ "conjectures", "--max-v", "2" });
    ASSERT_EQ(r.status, 0);
    auto rows = lines(r.out);
    EXPECT_EQ(rows.size(), 3u);
    for (auto & row : rows) {
        auto j = json::parse(row);
        EXPECT_EQ(j["v"], 2);
        EXPECT_EQ(j["n"], 2);
    }
}

TEST(Conjectures, BudgetExitsThreeWithoutOutput)
{
    auto r = run_cli({ "conjectures", "--min-v", "9", "--max-v", "9", "--interpretation", "census" });
    EXPECT_EQ(r.status, exit_status::budget);
    EXPECT_TRUE(r.out.empty());
    EXPECT_NE(r.err.find("budget"), std::string::npos);
}

TEST(Census, Rows)
{
    auto r = run_cli({ "census", "--min-v", "3", "--max-v", "4" });
    ASSERT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "{\"v\":3,\"counts\":{\"1\":\"1\",\"2\":\"6\",\"3\":\"1\"}}\n"
            "{\"v\":4,\"counts\":{\"1\":\"1\",\"2\":\"40\",\"3\":\"22\",\"4\":\"1\"}}\n");

    auto csv = run_cli({ "census", "--min-v", "3", "--max-v", "3", "--format", "csv" });
    EXPECT_EQ(csv.out, "v,chi,count\n3,1,1\n3,2,6\n3,3,1\n");
}

TEST(Formats, CsvAndJsonCarryTheSameValues)
{
    for (auto command : { std::vector<std::string>{ "table", "--max-v", "6" },
            std::vector<std::string>{ "conjectures", "--max-v", "4", "--interpretation", "both" },
            std::vector<std::string>{ "verify", "theorem", "--max-v", "6" } }) {
        auto as_json = run_cli(command);
        auto with_csv = command;
        with_csv.insert(with_csv.end(), { "--format", "csv" });
        auto as_csv = run_cli(with_csv);
        ASSERT_EQ(as_json.status, 0);
        ASSERT_EQ(as_csv.status, 0);

        auto json_rows = lines(as_json.out);
        auto csv_rows = lines(as_csv.out);
        ASSERT_EQ(csv_rows.size(), json_rows.size() + 1);
        auto header = split_csv(csv_rows[0]);
        for (std::size_t i = 0 ; i < json_rows.size() ; ++i) {
            auto j = json::parse(json_rows[i]);
            auto fields = split_csv(csv_rows[i + 1]);
            ASSERT_EQ(fields.size(), header.size());
            ASSERT_EQ(j.size(), header.size());
            for (std::size_t c = 0 ; c < header.size() ; ++c)
                ASSERT_EQ(fields[c], as_csv_text(j[header[c]])) << header[c];
        }
    }
}

TEST(Output, JobsDoNotChangeThePayload)
{
    auto base = run_cli({ "conjectures", "--max-v", "5", "--interpretation", "both", "--jobs", "1" });
    for (auto jobs : { "2", "8" })
        EXPECT_EQ(run_cli({ "conjectures", "--max-v", "5", "--interpretation", "both", "--jobs", jobs }).out, base.out);
}

TEST(Output, OutPathWritesTheFile)
{
    std::string path = ::testing::TempDir() + "colorbound_table.json";
    auto r = run_cli({ "table", "--max-v", "3", "--out", path });
    ASSERT_EQ(r.status, 0);
    EXPECT_TRUE(r.out.empty());
    std::ifstream in{ path };
    std::stringstream contents;
    contents << in.rdbuf();
    EXPECT_EQ(lines(contents.str()).size(), 6u);
    std::remove(path.c_str());

    EXPECT_EQ(run_cli({ "table", "--out", "/nonexistent-dir/x.json" }).status, exit_status::usage);
}

TEST(ParseNRange, Forms)
{
    EXPECT_EQ(parse_n_range("3"), std::make_pair(3, 3));
    EXPECT_EQ(parse_n_range("2:5"), std::make_pair(2, 5));
    EXPECT_THROW(parse_n_range("2:"), UsageError);
    EXPECT_THROW(parse_n_range("2-5"), UsageError);
}
