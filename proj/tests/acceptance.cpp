// End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
// exits nonzero if any criterion fails.

#include "ucf/bounds.hpp"
#include "ucf/cli.hpp"
#include "ucf/decomposition.hpp"
#include "ucf/enumeration.hpp"
#include "ucf/ucf_format.hpp"

#include "json.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace ucf;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
    bool pass;
    std::string detail;
};

struct CliResult {
    int code;
    std::string out;
};

CliResult run_cli(std::vector<std::string> args)
{
    args.insert(args.begin(), "ucf");
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str()};
}

const char* const tallies[] = {"theorem1_violations",   "corollary21_violations", "decomposition_failures",
                               "theorem2_violations",   "reimer_violations",      "equality_mismatches"};

// Checks every violation tally in an enumerate JSON report is zero.
bool tallies_zero(const nlohmann::json& j, std::string& why)
{
    for (const char* key : tallies)
        if (j.at(key).get<std::uint64_t>() != 0) {
            why += std::string(key) + "=" + std::to_string(j.at(key).get<std::uint64_t>()) + " ";
            return false;
        }
    return true;
}

Outcome exhaustive_audit()
{
    const auto start = Clock::now();
    bool ok = true;
    std::string detail;
    for (int n = 1; n <= 4; ++n) {
        const auto r = run_cli({"enumerate", "--n", std::to_string(n), "--exhaustive", "--format", "json"});
        const auto j = nlohmann::json::parse(r.out);
        std::string why;
        const bool zero = tallies_zero(j, why);
        const auto equalities = j.at("theorem1_equalities").get<std::uint64_t>();
        const bool n_ok = r.code == 0 && zero && equalities == static_cast<std::uint64_t>(n + 1);
        ok = ok && n_ok;
        detail += "n=" + std::to_string(n) + ": families " + std::to_string(j.at("families_checked").get<std::uint64_t>()) +
                  ", equalities " + std::to_string(equalities) + (n_ok ? "" : " [" + why + "]") + "; ";
    }
    const double t = seconds_since(start);
    ok = ok && t < 60.0;
    return {ok, detail + "time " + std::to_string(t) + " s (limit 60)"};
}

Outcome base_case()
{
    std::vector<SetFamily> seen;
    enumerate_exhaustive(1, [&](const SetFamily& f) { seen.push_back(f); });
    const SetFamily only_one = SetFamily::from_sets({ElementSet::of({1})});
    const SetFamily with_empty = SetFamily::from_sets({ElementSet::of({1}), ElementSet{}});
    bool ok = seen.size() == 2 && seen[0] == only_one && seen[1] == with_empty;
    if (ok) {
        ok = seen[0].size() == 1 && theorem1_bound(1, length(seen[0])) == 1 && seen[1].size() == 2 &&
             theorem1_bound(1, length(seen[1])) == 2;
    }
    const auto report = audit(1, AuditMode::exhaustive());
    ok = ok && report.families_checked == 2 && report.clean();
    return {ok, "visited " + std::to_string(seen.size()) + " families: {{1}} size 1 bound 1, {{1},-} size 2 bound 2"};
}

Outcome sampled_audit()
{
    const auto start = Clock::now();
    bool ok = true;
    std::string detail;
    for (int n : {5, 6}) {
        const auto r =
            run_cli({"enumerate", "--n", std::to_string(n), "--samples", "10000", "--seed", "1", "--format", "json"});
        const auto j = nlohmann::json::parse(r.out);
        std::string why;
        const bool n_ok = r.code == 0 && tallies_zero(j, why) && j.at("families_checked") == 10000;
        ok = ok && n_ok;
        detail += "n=" + std::to_string(n) + (n_ok ? " clean" : " [" + why + "]") + "; ";
    }
    const double t = seconds_since(start);
    ok = ok && t < 120.0;
    return {ok, detail + "time " + std::to_string(t) + " s (limit 120)"};
}

Outcome theorem2_grid()
{
    const auto start = Clock::now();
    int rows = 0, failures = 0;
    for (int n = 1; n <= 30; ++n)
        for (int k = 1; k <= n; ++k) {
            ++rows;
            const BigInt prefix = theorem1_bound(n, k);
            const DyadicRational bound = theta(k, n, p_hat(n, k));
            if ((bound <=> prefix) < 0) ++failures;
            if (k == 1 && !(bound == DyadicRational(n + 1) && prefix == n + 1)) ++failures;
            if (k == n && !(bound == DyadicRational(BigInt(1) << n) && prefix == (BigInt(1) << n))) ++failures;
        }
    const double t = seconds_since(start);
    return {failures == 0 && t < 5.0, std::to_string(rows) + " rows, " + std::to_string(failures) + " failures, time " +
                                          std::to_string(t) + " s (limit 5)"};
}

Outcome phat_optimality()
{
    int pairs = 0, value_failures = 0, step_failures = 0;
    for (int n = 1; n <= 30; ++n)
        for (int k = 1; k <= n; ++k) {
            ++pairs;
            const int best = p_hat(n, k);
            const auto scan = theta_min_scan(n, k, best + 10);
            if (!(scan.value == theta(k, n, best))) ++value_failures;
            for (int p = 0; p <= best + 10; ++p) {
                const bool observed = theta(k, n, p + 1) <= theta(k, n, p);
                if (observed != theta_step_nonincreasing(n, k, p)) ++step_failures;
            }
        }
    return {value_failures == 0 && step_failures == 0,
            std::to_string(pairs) + " (n,k) pairs; min-value mismatches " + std::to_string(value_failures) +
                ", monotonicity mismatches " + std::to_string(step_failures)};
}

Outcome binomial_identity()
{
    const auto start = Clock::now();
    int triples = 0, failures = 0;
    for (int n = 0; n <= 20; ++n)
        for (int k = 0; k <= n; ++k)
            for (int m = 0; m <= n; ++m) {
                ++triples;
                if (!chain_identity_check(n, k, m)) ++failures;
            }
    const double t = seconds_since(start);
    return {failures == 0 && t < 2.0, std::to_string(triples) + " triples, " + std::to_string(failures) +
                                          " failures, time " + std::to_string(t) + " s (limit 2)"};
}

Outcome decomposition_replay()
{
    int cases = 0, failures = 0;
    for (int n = 1; n <= 8; ++n)
        for (int ell = 0; ell <= n; ++ell) {
            ++cases;
            const SetFamily f = top_layers(n, ell);
            const Decomposition d = build_decomposition(f, max_chain(f));
            std::size_t total = 1;
            for (const auto& b : d.blocks) total += b.d_family.size();
            if (!verify_decomposition(f, d).all_ok() || BigInt(total) != theorem1_bound(n, ell)) ++failures;
        }
    return {failures == 0, std::to_string(cases) + " (n, ell) cases, " + std::to_string(failures) + " failures"};
}

Outcome length_oracle()
{
    oracle::TestRng rng{0x5EED0008ull};
    int mismatches = 0;
    for (int i = 0; i < 500; ++i) {
        const int n = 1 + static_cast<int>(rng.below(8));
        const SetFamily f = oracle::random_family(rng, n, 12);
        if (length(f) != oracle::max_chain_size(oracle::masks_of(f)) - 1) ++mismatches;
    }
    return {mismatches == 0, "500 families, " + std::to_string(mismatches) + " mismatches"};
}

Outcome round_trip()
{
    oracle::TestRng rng{0x5EED0009ull};
    int failures = 0;
    for (int i = 0; i < 200; ++i) {
        std::vector<ElementSet> sets;
        const int count = 1 + static_cast<int>(rng.below(30));
        for (int j = 0; j < count; ++j) sets.push_back(ElementSet::from_bits(rng.next() >> (1 + rng.below(60))));
        std::sort(sets.begin(), sets.end());
        sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
        if (sets.back().empty()) sets.push_back(ElementSet::of({1}));
        const SetFamily f = SetFamily::from_sets(sets);
        const std::string text = format_ucf(f);
        const SetFamily back = parse_ucf(text);
        if (!(back == f) || format_ucf(back) != text || format_ucf(f) != text) ++failures;
    }
    return {failures == 0, "200 families, " + std::to_string(failures) + " failures"};
}

}  // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"1 exhaustive theorem audit n=1..4", exhaustive_audit},
        {"2 base-case fidelity n=1", base_case},
        {"3 sampled audit n=5,6 x10000 seed 1", sampled_audit},
        {"4 depth-bound grid 1<=k<=n<=30", theorem2_grid},
        {"5 p_hat optimality and monotonicity", phat_optimality},
        {"6 binomial chain identity n<=20", binomial_identity},
        {"7 decomposition replay on top layers n<=8", decomposition_replay},
        {"8 length oracle equivalence", length_oracle},
        {"9 .ucf round trip", round_trip},
    };

    int failed = 0;
    for (const auto& [name, check] : criteria) {
        Outcome o{false, ""};
        try {
            o = check();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.pass) ++failed;
        std::printf("[%s] %s -- %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
