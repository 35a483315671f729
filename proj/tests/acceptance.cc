/* vim: set sw=4 sts=4 et : */

#include <colorbound/bounds.hh>
#include <colorbound/cli.hh>
#include <colorbound/oracle.hh>
#include <colorbound/partitions.hh>
#include <colorbound/verify.hh>

#include "brute_force.hh"

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace colorbound;

namespace
{
    using Parts = std::vector<int>;

    // Non-increasing vectors of exactly n positive parts summing to v.
    auto partitions_into(int v, int n) -> std::vector<Parts>
    {
        std::vector<Parts> result;
        Parts current;
        std::function<void (int, int, int)> extend = [&] (int remaining, int slots, int cap) {
            if (slots == 0) {
                if (remaining == 0)
                    result.push_back(current);
                return;
            }
            for (int x = std::min(cap, remaining - (slots - 1)) ; x >= 1 ; --x) {
                if (x * slots < remaining)
                    break;
                current.push_back(x);
                extend(remaining - x, slots - 1, x);
                current.pop_back();
            }
        };
        extend(v, n, v);
        return result;
    }

    auto choose2(std::int64_t x) -> std::int64_t
    {
        return x * (x - 1) / 2;
    }

    auto cross_pairs(const Parts & parts) -> std::int64_t
    {
        std::int64_t e = 0;
        for (std::size_t i = 0 ; i < parts.size() ; ++i)
            for (std::size_t j = i + 1 ; j < parts.size() ; ++j)
                e += std::int64_t(parts[i]) * parts[j];
        return e;
    }

    auto best_cross_pairs(int v, int n) -> std::int64_t
    {
        std::int64_t best = -1;
        for (auto & p : partitions_into(v, n))
            best = std::max(best, cross_pairs(p));
        return best;
    }

    // Graphs whose edges all cross the classes of parts, laid out on consecutive vertex ranges.
    auto subgraphs_with_chromatic(const Parts & parts, int chi) -> long long
    {
        int v = 0;
        std::vector<int> cls;
        for (std::size_t c = 0 ; c < parts.size() ; ++c)
            for (int k = 0 ; k < parts[c] ; ++k, ++v)
                cls.push_back(int(c));
        std::vector<std::pair<int, int>> cross;
        for (int i = 0 ; i < v ; ++i)
            for (int j = i + 1 ; j < v ; ++j)
                if (cls[i] != cls[j])
                    cross.emplace_back(i, j);

        long long count = 0;
        for (std::uint64_t mask = 0 ; mask < (std::uint64_t{ 1 } << cross.size()) ; ++mask) {
            std::vector<std::pair<int, int>> edges;
            for (std::size_t b = 0 ; b < cross.size() ; ++b)
                if (mask >> b & 1)
                    edges.push_back(cross[b]);
            if (brute_force::chromatic(Graph{ v, edges }) == chi)
                ++count;
        }
        return count;
    }

    auto gamma_count(int v, int n) -> long long
    {
        return 1ll << best_cross_pairs(v, n);
    }

    auto gamma_chi_count(int v, int n) -> long long
    {
        long long best = 0;
        for (auto & p : partitions_into(v, n))
            best = std::max(best, subgraphs_with_chromatic(p, n));
        return best;
    }

    auto seconds_since(std::chrono::steady_clock::time_point start) -> double
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }

    struct Outcome
    {
        bool ok = true;
        std::string detail;

        auto expect(bool condition, const std::string & what) -> void
        {
            if (! condition) {
                ok = false;
                detail += (detail.empty() ? "" : "; ") + what;
            }
        }
    };

    auto criterion_theorem() -> Outcome
    {
        Outcome o;
        auto start = std::chrono::steady_clock::now();
        int pairs = 0;
        for (int v = 1 ; v <= 12 ; ++v)
            for (int n = 1 ; n <= v ; ++n, ++pairs) {
                auto r = check_upper_bound(v, n);
                auto expected = choose2(v) - best_cross_pairs(v, n);
                o.expect(std::int64_t(r.lambda) == expected, "lambda(" + std::to_string(v) + "," + std::to_string(n) + ")");
                o.expect(expected >= v - n, "bound at " + std::to_string(v) + "," + std::to_string(n));
                o.expect((expected == v - n) == (2 * n >= v), "equality case at " + std::to_string(v) + "," + std::to_string(n));
                o.expect((r.relation == BoundRelation::equality) == (expected == v - n), "relation");
            }
        auto suite = verify_theorem(1, 12);
        o.expect(suite.passed() && suite.checked == unsigned(pairs), "verify suite");
        o.expect(pairs == 78, "pair count " + std::to_string(pairs));
        double t = seconds_since(start);
        o.expect(t < 1.0, "took " + std::to_string(t) + " s");
        if (o.ok)
            o.detail = std::to_string(pairs) + " pairs (v,n) with 1 <= n <= v <= 12, " + std::to_string(t) + " s";
        return o;
    }

    auto criterion_eq1() -> Outcome
    {
        Outcome o;
        auto start = std::chrono::steady_clock::now();
        int checked = 0;
        for (int v = 1 ; v <= 8 ; ++v)
            for (int n = 1 ; n <= v ; ++n)
                for (auto & parts : partitions_into(v, n)) {
                    auto e = cross_pairs(parts);
                    if (e > 16)
                        continue;
                    ++checked;
                    auto count = count_partition_subgraphs(Partition{ parts });
                    o.expect(count == ExactCount{ 1 } << unsigned(e), "partition " + to_string(Partition{ parts }));
                }
        double t = seconds_since(start);
        o.expect(t < 10.0, "took " + std::to_string(t) + " s");
        if (o.ok)
            o.detail = std::to_string(checked) + " partitions, " + std::to_string(t) + " s";
        return o;
    }

    auto criterion_proof_terms() -> Outcome
    {
        Outcome o;
        auto start = std::chrono::steady_clock::now();
        int checked = 0;
        for (int v = 2 ; v <= 12 ; ++v)
            for (int n = 1 ; n <= v ; ++n)
                for (auto & parts : partitions_into(v, n)) {
                    ++checked;
                    auto t = expand_term_sequences(Partition{ parts });
                    std::string name = to_string(Partition{ parts });
                    o.expect(t.s1.size() == std::size_t(v - 1) && t.s2.size() == std::size_t(v - 1), "length " + name);

                    std::int64_t sum1 = 0, sum2 = 0;
                    bool strict = false;
                    for (std::size_t i = 0 ; i < t.s1.size() ; ++i) {
                        o.expect(t.s1[i] == std::int64_t(v) - std::int64_t(i) - 1, "s1 term " + name);
                        o.expect(t.s1[i] >= t.s2[i], "domination " + name);
                        strict = strict || t.s1[i] > t.s2[i];
                        sum1 += t.s1[i];
                        sum2 += t.s2[i];
                    }
                    o.expect(sum1 == choose2(v), "sum s1 " + name);
                    o.expect(sum2 == cross_pairs(parts), "sum s2 " + name);
                    o.expect(strict == (parts.front() > 1), "strict witness " + name);

                    auto gaps = psi_gap(Partition{ parts });
                    o.expect(gaps.size() == parts.size(), "gap count " + name);
                    for (std::size_t j = 0 ; j + 1 < parts.size() && j < gaps.size() ; ++j)
                        o.expect(gaps[j] == choose2(parts[j]), "block gap " + name);
                    o.expect(! gaps.empty() && gaps.back() == choose2(parts.back()), "padding gap " + name);
                }
        auto suite = verify_proof_terms(1, 12);
        o.expect(suite.passed(), "verify suite");
        double t = seconds_since(start);
        o.expect(t < 1.0, "took " + std::to_string(t) + " s");
        if (o.ok)
            o.detail = std::to_string(checked) + " partitions, " + std::to_string(suite.checked) + " orderings, "
                + std::to_string(t) + " s";
        return o;
    }

    auto criterion_complementarity() -> Outcome
    {
        Outcome o;
        auto start = std::chrono::steady_clock::now();
        int checked = 0;
        for (int v = 1 ; v <= 12 ; ++v)
            for (int n = 1 ; n <= v ; ++n) {
                std::int64_t best = -1;
                for (auto & parts : partitions_into(v, n)) {
                    ++checked;
                    std::int64_t intra = 0;
                    for (auto x : parts)
                        intra += choose2(x);
                    auto e = cross_pairs(parts);
                    o.expect(e + intra == choose2(v), "identity " + to_string(Partition{ parts }));
                    o.expect(std::int64_t(exponent(Partition{ parts }).exponent) == e, "exponent " + to_string(Partition{ parts }));
                    best = std::max(best, e);
                }
                auto balanced = balanced_partition(v, n);
                o.expect(cross_pairs(Parts(balanced.parts().begin(), balanced.parts().end())) == best,
                        "balanced argmax " + std::to_string(v) + "," + std::to_string(n));
                o.expect(max_partition(v, n).first == balanced, "max_partition " + std::to_string(v) + "," + std::to_string(n));
            }
        double t = seconds_since(start);
        o.expect(t < 1.0, "took " + std::to_string(t) + " s");
        if (o.ok)
            o.detail = std::to_string(checked) + " partitions, " + std::to_string(t) + " s";
        return o;
    }

    auto criterion_census() -> Outcome
    {
        Outcome o;
        auto start = std::chrono::steady_clock::now();
        auto c3 = chromatic_census(3), c4 = chromatic_census(4);
        o.expect(c3.counts == std::map<int, ExactCount>{ { 1, 1 }, { 2, 6 }, { 3, 1 } }, "v=3 fixture");
        o.expect(c4.counts == std::map<int, ExactCount>{ { 1, 1 }, { 2, 40 }, { 3, 22 }, { 4, 1 } }, "v=4 fixture");
        for (auto * c : { &c3, &c4 }) {
            ExactCount sum = 0;
            for (auto & [_, count] : c->counts)
                sum += count;
            o.expect(sum == ExactCount{ 1 } << unsigned(choose2(c->v)), "sum at v=" + std::to_string(c->v));
        }
        double small = seconds_since(start);
        o.expect(small < 1.0, "fixtures took " + std::to_string(small) + " s");

        start = std::chrono::steady_clock::now();
        auto c6 = chromatic_census(6);
        double six = seconds_since(start);
        o.expect(six < 5.0, "v=6 took " + std::to_string(six) + " s");
        auto brute6 = brute_force::census(6);
        for (auto & [chi, count] : brute6)
            o.expect(c6.counts.count(chi) && c6.counts.at(chi) == count, "v=6 chi " + std::to_string(chi));

        OracleOptions parallel;
        parallel.jobs = 8;
        start = std::chrono::steady_clock::now();
        auto c7 = chromatic_census(7, parallel);
        double seven = seconds_since(start);
        o.expect(seven < 120.0, "v=7 took " + std::to_string(seven) + " s");
        ExactCount sum7 = 0;
        for (auto & [_, count] : c7.counts)
            sum7 += count;
        o.expect(sum7 == ExactCount{ 1 } << 21u, "v=7 sum");

        if (o.ok) {
            std::ostringstream s;
            s << "fixtures " << small << " s, v=6 " << six << " s single worker, v=7 " << seven << " s with 8 workers";
            o.detail = s.str();
        }
        return o;
    }

    auto criterion_conjectures() -> Outcome
    {
        Outcome o;
        struct Instance { int which, v, n; };
        std::ostringstream census_rows;
        for (auto [which, v, n] : { Instance{ 1, 3, 2 }, Instance{ 1, 4, 3 }, Instance{ 2, 4, 3 } }) {
            auto verdict = test_conjecture(which, v, n, Interpretation::partition_subgraph);
            long long lhs = 0, rhs = 0;
            bool holds = false;
            if (which == 1) {
                lhs = gamma_chi_count(v, n);
                rhs = gamma_count(v, n) - gamma_count(v, n - 1);
                holds = lhs == rhs;
            }
            else {
                lhs = gamma_count(v, n);
                rhs = 2 * gamma_count(v, n - 1);
                holds = lhs >= rhs;
            }
            std::string name = "C" + std::to_string(which) + "(" + std::to_string(v) + "," + std::to_string(n) + ")";
            o.expect(verdict.lhs == lhs && verdict.rhs == rhs && verdict.holds == holds, name + " disagrees with recomputation");

            auto census = test_conjecture(which, v, n, Interpretation::census);
            if (which == 1) {
                auto tally = brute_force::census(v);
                o.expect(census.lhs == tally[n], name + " census lhs");
            }
            census_rows << " " << name << (census.holds ? " holds " : " violated ") << census.lhs << " vs " << census.rhs << ";";
        }

        auto c1_32 = test_conjecture(1, 3, 2, Interpretation::partition_subgraph);
        o.expect(c1_32.holds && c1_32.lhs == 3 && c1_32.rhs == 3, "C1(3,2) holds 3 = 3");
        auto c1_43 = test_conjecture(1, 4, 3, Interpretation::partition_subgraph);
        o.expect(! c1_43.holds && c1_43.lhs == 7 && c1_43.rhs == 16, "C1(4,3) violated 7 vs 16");
        auto c2_43 = test_conjecture(2, 4, 3, Interpretation::partition_subgraph);
        o.expect(c2_43.holds && c2_43.lhs == 32 && c2_43.rhs == 32, "C2(4,3) holds 32 = 32");

        if (o.ok)
            o.detail = "C1(3,2) holds 3 = 3; C1(4,3) violated 7 vs 16; C2(4,3) holds 32 = 32; census:" + census_rows.str();
        return o;
    }

    auto payload(cli::RunConfig config, int jobs) -> std::string
    {
        config.jobs = jobs;
        std::ostringstream out, err;
        int status = cli::run(config, out, err);
        return std::to_string(status) + "\n" + out.str();
    }

    auto criterion_determinism() -> Outcome
    {
        Outcome o;
        std::vector<std::pair<std::string, cli::RunConfig>> suites;
        suites.emplace_back("table", cli::RunConfig{ });
        for (auto suite : { cli::VerifySuite::theorem, cli::VerifySuite::proof_terms, cli::VerifySuite::eq1 }) {
            cli::RunConfig c;
            c.command = cli::Command::verify;
            c.suite = suite;
            suites.emplace_back("verify", c);
        }
        {
            cli::RunConfig c;
            c.command = cli::Command::conjectures;
            c.interpretation = cli::InterpretationChoice::both;
            suites.emplace_back("conjectures", c);
        }
        {
            cli::RunConfig c;
            c.command = cli::Command::census;
            suites.emplace_back("census", c);
        }

        std::size_t bytes = 0;
        for (auto & [name, config] : suites)
            for (auto format : { cli::OutputFormat::json, cli::OutputFormat::csv }) {
                config.format = format;
                auto base = payload(config, 1);
                o.expect(base.rfind("0\n", 0) == 0, name + " exit status");
                bytes += base.size();
                for (int jobs : { 2, 8 })
                    o.expect(payload(config, jobs) == base, name + " differs at jobs=" + std::to_string(jobs));
            }
        if (o.ok)
            o.detail = std::to_string(suites.size() * 2) + " reports, " + std::to_string(bytes) + " bytes each run";
        return o;
    }
}

int main()
{
    struct Criterion
    {
        int number;
        const char * name;
        Outcome (* check)();
    };

    const Criterion criteria[] = {
        { 1, "upper bound and equality case", criterion_theorem },
        { 2, "subgraph count equals 2^e", criterion_eq1 },
        { 3, "term sequences and gaps", criterion_proof_terms },
        { 4, "complementarity and balanced argmax", criterion_complementarity },
        { 5, "chromatic census", criterion_census },
        { 6, "conjecture verdicts", criterion_conjectures },
        { 7, "determinism across jobs", criterion_determinism },
    };

    int failed = 0;
    for (auto & c : criteria) {
        Outcome o;
        try {
            o = c.check();
        }
        catch (const std::exception & e) {
            o.ok = false;
            o.detail = std::string{ "exception: " } + e.what();
        }
        std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << c.number << " (" << c.name << "): " << o.detail << std::endl;
        if (! o.ok)
            ++failed;
    }
    std::cout << (failed ? "FAILED " : "ALL PASSED ") << (7 - failed) << "/7" << std::endl;
    return failed ? 1 : 0;
}
