#include "ucf/enumeration.hpp"

#include "ucf/bounds.hpp"
#include "ucf/decomposition.hpp"
#include "ucf/errors.hpp"

#include "json.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

namespace ucf {

namespace {

// splitmix64; fixed here rather than taken from <random> so sampled streams
// replay identically across standard libraries.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t state) : state_(state) {}

    std::uint64_t next()
    {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

constexpr int density_steps = 10;  // probabilities 1/20, 2/20, ..., 10/20

std::uint64_t density_threshold(int step)
{
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(step) << 64) / 20);
}

void require_exhaustive_n(int n)
{
    if (n < 1 || n > max_exhaustive_n)
        throw InputError("exhaustive enumeration supports n in 1.." + std::to_string(max_exhaustive_n) +
                         "; use sampling for larger n");
}

void require_sample_n(int n)
{
    if (n < 1 || n > max_dense_universe)
        throw InputError("sampling supports n in 1.." + std::to_string(max_dense_universe));
}

BigInt prefix_binomial_sum(int n, int ell)
{
    BigInt sum = 0;
    for (int i = 0; i <= ell; ++i) sum += binomial(n, i);
    return sum;
}

}  // namespace

std::uint64_t exhaustive_candidate_count(int n)
{
    require_exhaustive_n(n);
    return std::uint64_t{1} << ((1u << n) - 1);
}

std::optional<SetFamily> exhaustive_candidate(int n, std::uint64_t index)
{
    require_exhaustive_n(n);
    const Mask full = ElementSet::range(n).bits();
    std::vector<ElementSet> sets;
    for (Mask j = 0; j < full; ++j)
        if ((index >> j) & 1u) sets.push_back(ElementSet::from_bits(j));
    sets.push_back(ElementSet::from_bits(full));
    SetFamily family = SetFamily::from_sets(std::move(sets));
    if (!is_union_closed(family)) return std::nullopt;
    return family;
}

std::uint64_t enumerate_exhaustive(int n, const FamilyVisitor& visitor)
{
    const std::uint64_t total = exhaustive_candidate_count(n);
    std::uint64_t visited = 0;
    for (std::uint64_t index = 0; index < total; ++index)
        if (auto family = exhaustive_candidate(n, index)) {
            visitor(*family);
            ++visited;
        }
    return visited;
}

SetFamily sample_family(int n, std::uint64_t seed, std::uint64_t index)
{
    require_sample_n(n);
    SplitMix64 keyed(seed);
    const std::uint64_t stream = keyed.next() ^ SplitMix64(index + 0x632BE59BD9B4E019ull).next();
    SplitMix64 rng(stream);

    const int step = 1 + static_cast<int>(rng.next() % density_steps);
    const std::uint64_t threshold = density_threshold(step);
    const Mask full = ElementSet::range(n).bits();
    std::vector<ElementSet> generators;
    for (Mask bits = 0; bits < full; ++bits)
        if (rng.next() < threshold) generators.push_back(ElementSet::from_bits(bits));
    generators.push_back(ElementSet::from_bits(full));
    return union_closure(SetFamily::from_sets(std::move(generators)));
}

std::uint64_t sample_random(int n, std::uint64_t count, std::uint64_t seed, const FamilyVisitor& visitor)
{
    require_sample_n(n);
    for (std::uint64_t i = 0; i < count; ++i) visitor(sample_family(n, seed, i));
    return count;
}

AuditReport& AuditReport::merge(const AuditReport& other)
{
    families_checked += other.families_checked;
    theorem1_violations += other.theorem1_violations;
    theorem1_equalities += other.theorem1_equalities;
    equality_mismatches += other.equality_mismatches;
    corollary21_violations += other.corollary21_violations;
    decomposition_failures += other.decomposition_failures;
    theorem2_violations += other.theorem2_violations;
    reimer_violations += other.reimer_violations;
    return *this;
}

bool AuditReport::clean() const noexcept
{
    return theorem1_violations == 0 && equality_mismatches == 0 && corollary21_violations == 0 &&
           decomposition_failures == 0 && theorem2_violations == 0 && reimer_violations == 0;
}

namespace {

const char* mode_name(const AuditMode& mode)
{
    return mode.kind == AuditMode::Kind::exhaustive ? "exhaustive" : "sampled";
}

}  // namespace

std::string AuditReport::to_json() const
{
    nlohmann::json j;
    j["n"] = n;
    j["mode"] = mode_name(mode);
    if (mode.kind == AuditMode::Kind::sampled) {
        j["seed"] = mode.seed;
        j["samples"] = mode.count;
    }
    j["families_checked"] = families_checked;
    j["theorem1_violations"] = theorem1_violations;
    j["theorem1_equalities"] = theorem1_equalities;
    j["equality_mismatches"] = equality_mismatches;
    j["corollary21_violations"] = corollary21_violations;
    j["decomposition_failures"] = decomposition_failures;
    j["theorem2_violations"] = theorem2_violations;
    j["reimer_violations"] = reimer_violations;
    j["clean"] = clean();
    return j.dump(2);
}

std::string AuditReport::csv_header()
{
    return "n,mode,seed,families_checked,theorem1_violations,theorem1_equalities,equality_mismatches,"
           "corollary21_violations,decomposition_failures,theorem2_violations,reimer_violations";
}

std::string AuditReport::to_csv_row() const
{
    std::ostringstream out;
    out << n << ',' << mode_name(mode) << ',';
    if (mode.kind == AuditMode::Kind::sampled) out << mode.seed;
    out << ',' << families_checked << ',' << theorem1_violations << ',' << theorem1_equalities << ','
        << equality_mismatches << ',' << corollary21_violations << ',' << decomposition_failures << ','
        << theorem2_violations << ',' << reimer_violations;
    return out.str();
}

std::string AuditReport::to_text() const
{
    std::ostringstream out;
    out << "n: " << n << '\n' << "mode: " << mode_name(mode);
    if (mode.kind == AuditMode::Kind::sampled) out << " (samples " << mode.count << ", seed " << mode.seed << ')';
    out << '\n'
        << "families_checked: " << families_checked << '\n'
        << "theorem1_violations: " << theorem1_violations << '\n'
        << "theorem1_equalities: " << theorem1_equalities << '\n'
        << "equality_mismatches: " << equality_mismatches << '\n'
        << "corollary21_violations: " << corollary21_violations << '\n'
        << "decomposition_failures: " << decomposition_failures << '\n'
        << "theorem2_violations: " << theorem2_violations << '\n'
        << "reimer_violations: " << reimer_violations << '\n'
        << "result: " << (clean() ? "clean" : "VIOLATIONS FOUND") << '\n';
    return out.str();
}

void audit_family(const SetFamily& family, int n, AuditReport& report)
{
    if (family.universe() != ElementSet::range(n))
        throw DomainError("audited family must have universe exactly {1.." + std::to_string(n) + "}");
    ++report.families_checked;
    const BigInt size = family.size();
    const int ell = length(family);

    const BigInt bound = theorem1_bound(n, ell);
    if (size > bound) ++report.theorem1_violations;
    if (size == bound) {
        ++report.theorem1_equalities;
        if (!(family == top_layers(n, ell))) ++report.equality_mismatches;
    }

    const auto freq = element_frequencies(family);
    std::size_t rarest = family.size();
    for (const auto& [element, count] : freq) rarest = std::min(rarest, count);
    if (BigInt(rarest) > prefix_binomial_sum(n - 1, ell)) ++report.corollary21_violations;

    try {
        const Decomposition d = build_decomposition(family, max_chain(family));
        if (!verify_decomposition(family, d).all_ok()) ++report.decomposition_failures;
    } catch (const std::exception&) {
        ++report.decomposition_failures;
    }

    if (ell >= 1) {
        const int deepest = p_hat(n, ell);
        for (int p = 0; p <= deepest; ++p)
            if ((theta(ell, n, p) <=> size) < 0) {
                ++report.theorem2_violations;
                break;
            }
    }

    if (!reimer_check(family)) ++report.reimer_violations;
}

AuditReport audit(int n, const AuditMode& mode, int threads)
{
    if (threads < 1) throw InputError("thread count must be at least 1");
    std::uint64_t total = 0;
    if (mode.kind == AuditMode::Kind::exhaustive) {
        total = exhaustive_candidate_count(n);
    } else {
        require_sample_n(n);
        total = mode.count;
    }

    auto run_range = [&](std::uint64_t begin, std::uint64_t end, AuditReport& tally) {
        for (std::uint64_t index = begin; index < end; ++index) {
            if (mode.kind == AuditMode::Kind::exhaustive) {
                if (auto family = exhaustive_candidate(n, index)) audit_family(*family, n, tally);
            } else {
                audit_family(sample_family(n, mode.seed, index), n, tally);
            }
        }
    };

    const auto workers = static_cast<std::uint64_t>(threads);
    std::vector<AuditReport> tallies(workers);
    if (workers == 1) {
        run_range(0, total, tallies[0]);
    } else {
        std::vector<std::jthread> pool;
        const std::uint64_t chunk = (total + workers - 1) / workers;
        for (std::uint64_t w = 0; w < workers; ++w) {
            const std::uint64_t begin = std::min(total, w * chunk);
            const std::uint64_t end = std::min(total, begin + chunk);
            pool.emplace_back([&, begin, end, w] { run_range(begin, end, tallies[w]); });
        }
    }

    AuditReport report;
    report.n = n;
    report.mode = mode;
    for (const auto& t : tallies) report.merge(t);
    return report;
}

}  // namespace ucf
