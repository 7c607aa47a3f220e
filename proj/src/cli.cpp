#include "ucf/cli.hpp"

#include "ucf/bounds.hpp"
#include "ucf/decomposition.hpp"
#include "ucf/enumeration.hpp"
#include "ucf/errors.hpp"
#include "ucf/ucf_format.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <memory>
#include <ostream>
#include <sstream>

namespace ucf::cli {

namespace {

using nlohmann::json;

const char* yes_no(bool b) { return b ? "yes" : "no"; }

// Where command output goes: the caller's stream or a file named by --output.
class Sink {
public:
    Sink(std::ostream& fallback, const std::string& path)
    {
        if (path.empty()) {
            stream_ = &fallback;
            return;
        }
        file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
        if (!*file_) throw InputError("cannot write " + path);
        stream_ = file_.get();
    }

    std::ostream& get() { return *stream_; }

private:
    std::unique_ptr<std::ofstream> file_;
    std::ostream* stream_ = nullptr;
};

json family_json(const SetFamily& family)
{
    json out = json::array();
    for (ElementSet m : family.members()) out.push_back(m.to_string());
    return out;
}

// ---- check ----

int cmd_check(const std::string& path, const std::string& format, std::ostream& out)
{
    const SetFamily family = read_ucf_file(path);
    const auto violation = find_union_violation(family);
    const int n = family.universe().size();
    const int ell = length(family);

    if (violation) {
        const std::string missing = "{" + violation->first.to_string() + "} | {" + violation->second.to_string() + "}";
        const BigInt erdos = erdos_bound(n, ell);
        if (format == "json") {
            json j;
            j["union_closed"] = false;
            j["violating_pair"] = {violation->first.to_string(), violation->second.to_string()};
            j["n"] = n;
            j["ell"] = ell;
            j["size"] = family.size();
            j["erdos"] = erdos.str();
            out << j.dump(2) << '\n';
        } else if (format == "csv") {
            out << "union_closed,n,ell,size,erdos\n" << "no," << n << ',' << ell << ',' << family.size() << ','
                << erdos << '\n';
        } else {
            out << "union_closed: no (missing union of " << missing << ")\n"
                << "n: " << n << '\n'
                << "ell: " << ell << '\n'
                << "size: " << family.size() << '\n'
                << "erdos: " << erdos << '\n';
        }
        return exit_ok;
    }

    const BoundReport r = bound_report(family);
    if (format == "json") {
        json j;
        j["union_closed"] = true;
        j["n"] = r.n;
        j["ell"] = r.ell;
        j["size"] = r.family_size.str();
        j["theorem1"] = r.theorem1.str();
        j["theorem1_tight"] = r.theorem1_tight;
        j["erdos"] = r.erdos.str();
        if (r.theta_at_phat) {
            j["p_hat"] = *r.p_hat;
            j["theorem2"] = {{"num", r.theta_at_phat->numerator().str()}, {"exp", r.theta_at_phat->exponent()}};
        } else {
            j["p_hat"] = nullptr;
            j["theorem2"] = nullptr;
        }
        j["reimer_holds"] = r.reimer_holds;
        j["consistent"] = r.consistent();
        out << j.dump(2) << '\n';
    } else if (format == "csv") {
        out << "union_closed,n,ell,size,theorem1,theorem1_tight,erdos,p_hat,theta_num,theta_exp,reimer_holds\n"
            << "yes," << r.n << ',' << r.ell << ',' << r.family_size << ',' << r.theorem1 << ','
            << yes_no(r.theorem1_tight) << ',' << r.erdos << ',';
        if (r.theta_at_phat)
            out << *r.p_hat << ',' << r.theta_at_phat->numerator() << ',' << r.theta_at_phat->exponent();
        else
            out << ",,";
        out << ',' << yes_no(r.reimer_holds) << '\n';
    } else {
        out << "union_closed: yes\n"
            << "n: " << r.n << '\n'
            << "ell: " << r.ell << '\n'
            << "size: " << r.family_size << '\n'
            << "theorem1: " << r.theorem1 << '\n'
            << "theorem1_tight: " << yes_no(r.theorem1_tight) << '\n'
            << "erdos: " << r.erdos << '\n';
        if (r.theta_at_phat)
            out << "p_hat: " << *r.p_hat << '\n'
                << "theorem2: " << r.theta_at_phat->to_fraction_string() << " (~"
                << r.theta_at_phat->to_decimal_string() << ")\n";
        else
            out << "p_hat: n/a (ell = 0)\n"
                << "theorem2: n/a (ell = 0)\n";
        out << "reimer: " << (r.reimer_holds ? "holds" : "FAILS") << '\n';
    }
    return r.consistent() ? exit_ok : exit_check_failed;
}

// ---- closure / extremal ----

int cmd_closure(const std::string& path, std::ostream& out)
{
    write_ucf(out, union_closure(read_ucf_file(path)));
    return exit_ok;
}

int cmd_extremal(int n, int ell, std::ostream& out)
{
    write_ucf(out, top_layers(n, ell));
    return exit_ok;
}

// ---- decompose ----

int cmd_decompose(const std::string& path, const std::string& format, std::ostream& out)
{
    const SetFamily family = read_ucf_file(path);
    const Decomposition d = build_decomposition(family, max_chain(family));
    const DecompositionCheck check = verify_decomposition(family, d);

    std::size_t d_total = 0;
    for (const auto& b : d.blocks) d_total += b.d_family.size();

    if (format == "json") {
        json j;
        j["universe"] = family.universe().to_string();
        j["length"] = d.blocks.size();
        j["size"] = family.size();
        json chain = json::array();
        for (ElementSet c : d.chain.sets()) chain.push_back(c.to_string());
        j["chain"] = chain;
        json blocks = json::array();
        for (const auto& b : d.blocks)
            blocks.push_back(
                {{"diff", b.diff_mask.to_string()}, {"c_family", family_json(b.c_family)}, {"d_family", family_json(b.d_family)}});
        j["blocks"] = blocks;
        j["residual"] = d.residual.to_string();
        j["checks"] = {{"partition_ok", check.partition_ok},
                       {"size_ok", check.size_ok},
                       {"closure_ok", check.closure_ok},
                       {"shrink_ok", check.shrink_ok},
                       {"closure_skipped", check.closure_skipped}};
        out << j.dump(2) << '\n';
    } else {
        out << "universe: " << family.universe().to_string() << '\n'
            << "length: " << d.blocks.size() << '\n'
            << "chain:\n";
        for (ElementSet c : d.chain.sets()) out << "  " << c.to_string() << '\n';
        for (std::size_t i = 0; i < d.blocks.size(); ++i) {
            const auto& b = d.blocks[i];
            out << "block " << i + 1 << ": diff " << b.diff_mask.to_string() << '\n' << "  C_" << i + 1 << ":\n";
            for (ElementSet x : b.c_family.members()) out << "    " << x.to_string() << '\n';
            out << "  D_" << i + 1 << ":\n";
            for (ElementSet x : b.d_family.members()) out << "    " << x.to_string() << '\n';
        }
        out << "residual: " << d.residual.to_string() << '\n'
            << "partition_ok: " << yes_no(check.partition_ok) << '\n'
            << "size_ok: " << yes_no(check.size_ok) << " (1 + " << d_total << " = " << 1 + d_total << ", |family| = "
            << family.size() << ")\n"
            << "closure_ok: " << yes_no(check.closure_ok) << '\n';
        for (int skipped : check.closure_skipped)
            out << "  closure check skipped for block " << skipped + 1 << " (next chain set is empty)\n";
        out << "shrink_ok: " << yes_no(check.shrink_ok) << '\n';
    }
    return check.all_ok() ? exit_ok : exit_check_failed;
}

// ---- enumerate ----

int cmd_enumerate(int n, bool exhaustive, bool sampled, std::uint64_t samples, std::uint64_t seed, int threads,
                  const std::string& format, std::ostream& out)
{
    if (exhaustive == sampled) throw InputError("give exactly one of --exhaustive or --samples");
    const AuditMode mode = exhaustive ? AuditMode::exhaustive() : AuditMode::sampled(samples, seed);
    const AuditReport report = audit(n, mode, threads);
    if (format == "json")
        out << report.to_json() << '\n';
    else if (format == "csv")
        out << AuditReport::csv_header() << '\n' << report.to_csv_row() << '\n';
    else
        out << report.to_text();
    return report.clean() ? exit_ok : exit_check_failed;
}

// ---- theta-table ----

int cmd_theta_table(int n_min, int n_max, const std::vector<int>& ks, std::ostream& out)
{
    if (n_min < 1 || n_max > max_formula_n || n_min > n_max)
        throw InputError("need 1 <= --n-min <= --n-max <= " + std::to_string(max_formula_n));
    bool all_hold = true;
    out << "n,k,prefix_sum,p_hat,theta_num,theta_exp,ratio\n";
    for (int n = n_min; n <= n_max; ++n) {
        std::vector<int> row_ks;
        if (ks.empty())
            for (int k = 1; k <= n; ++k) row_ks.push_back(k);
        else
            for (int k : ks)
                if (k >= 1 && k <= n) row_ks.push_back(k);
        for (int k : row_ks) {
            const BigInt prefix = theorem1_bound(n, k);
            const int depth = p_hat(n, k);
            const DyadicRational bound = theta(k, n, depth);
            if ((bound <=> prefix) < 0) all_hold = false;
            out << n << ',' << k << ',' << prefix << ',' << depth << ',' << bound.numerator() << ','
                << bound.exponent() << ',' << ratio_decimal_string(bound, DyadicRational(prefix)) << '\n';
        }
    }
    return all_hold ? exit_ok : exit_check_failed;
}

std::vector<char*> make_argv(std::vector<std::string>& storage)
{
    std::vector<char*> argv;
    for (auto& s : storage) argv.push_back(s.data());
    return argv;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Analyze union-closed set families: bounds, chain decompositions and exhaustive audits", "ucf"};
    app.require_subcommand(1);

    std::string path, output, format = "text";
    int n = 0, ell = 0, threads = 1, n_min = 1, n_max = 30;
    std::uint64_t seed = 0, sample_count = 0;
    bool exhaustive = false;
    std::vector<int> ks;

    const auto formats = CLI::IsMember({"text", "json", "csv"});

    auto* check = app.add_subcommand("check", "Report union-closedness and every size bound for a .ucf file");
    check->add_option("path", path, "Input .ucf file")->required();
    check->add_option("--format", format, "text, json or csv")->check(formats);
    check->add_option("-o,--output", output, "Write to this file instead of stdout");

    auto* closure = app.add_subcommand("closure", "Write the union closure of a .ucf file");
    closure->add_option("path", path, "Input .ucf file")->required();
    closure->add_option("-o,--output", output, "Write to this file instead of stdout");

    auto* decompose = app.add_subcommand("decompose", "Build and verify the maximum-chain decomposition");
    decompose->add_option("path", path, "Input .ucf file")->required();
    decompose->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    decompose->add_option("-o,--output", output, "Write to this file instead of stdout");

    auto* extremal = app.add_subcommand("extremal", "Write all subsets of {1..n} with at least n-ell elements");
    extremal->add_option("--n", n, "Universe size (1..24)")->required();
    extremal->add_option("--ell", ell, "Length (0..n)")->required();
    extremal->add_option("-o,--output", output, "Write to this file instead of stdout");

    auto* enumerate = app.add_subcommand("enumerate", "Audit every bound over generated union-closed families");
    enumerate->add_option("--n", n, "Universe size")->required();
    auto* exhaustive_flag = enumerate->add_flag("--exhaustive", exhaustive, "Visit every family (n <= 4)");
    auto* samples_opt = enumerate->add_option("--samples", sample_count, "Number of random families");
    exhaustive_flag->excludes(samples_opt);
    enumerate->add_option("--seed", seed, "Sampling seed");
    enumerate->add_option("--threads", threads, "Worker count")->check(CLI::PositiveNumber);
    enumerate->add_option("--format", format, "text, json or csv")->check(formats);
    enumerate->add_option("-o,--output", output, "Write to this file instead of stdout");

    auto* table = app.add_subcommand("theta-table", "CSV of prefix binomial sums against the depth bound");
    table->add_option("--n-min", n_min, "Smallest n");
    table->add_option("--n-max", n_max, "Largest n (<= 1000)");
    table->add_option("--k", ks, "Only these k values (default: all 1..n)")->delimiter(',');
    table->add_option("-o,--output", output, "Write to this file instead of stdout");

    std::vector<std::string> storage = args;
    if (storage.empty()) storage.emplace_back("ucf");
    auto argv = make_argv(storage);
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        Sink sink(out, output);
        std::ostream& dest = sink.get();
        if (check->parsed()) return cmd_check(path, format, dest);
        if (closure->parsed()) return cmd_closure(path, dest);
        if (decompose->parsed()) return cmd_decompose(path, format, dest);
        if (extremal->parsed()) return cmd_extremal(n, ell, dest);
        if (enumerate->parsed())
            return cmd_enumerate(n, exhaustive, samples_opt->count() > 0, sample_count, seed, threads, format, dest);
        if (table->parsed()) return cmd_theta_table(n_min, n_max, ks, dest);
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

}  // namespace ucf::cli
