#ifndef UCF_ENUMERATION_HPP
#define UCF_ENUMERATION_HPP

#include "ucf/set_family.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

namespace ucf {

/// Largest n that enumerate_exhaustive accepts.
inline constexpr int max_exhaustive_n = 4;

using FamilyVisitor = std::function<void(const SetFamily&)>;

/// Visits every union-closed family whose universe is exactly {1..n}, in
/// ascending candidate order. Returns the number visited.
/// Throws InputError unless 1 <= n <= 4.
std::uint64_t enumerate_exhaustive(int n, const FamilyVisitor& visitor);

/// Number of candidate sub-families scanned by the exhaustive mode:
/// 2^(2^n - 1), every choice of the sets other than {1..n}.
std::uint64_t exhaustive_candidate_count(int n);

/// Candidate `index` of the exhaustive scan: {1..n} plus mask j for every
/// bit j of index. Returns nullopt when it is not union-closed.
std::optional<SetFamily> exhaustive_candidate(int n, std::uint64_t index);

/// Draws `count` random union-closed families on {1..n}; identical output
/// for identical (n, count, seed). Throws InputError unless 1 <= n <= 24.
std::uint64_t sample_random(int n, std::uint64_t count, std::uint64_t seed, const FamilyVisitor& visitor);

/// Sample `index` of the stream keyed by `seed`: every subset of {1..n} is
/// drawn as a generator with a per-family probability in {0.05, ..., 0.50},
/// {1..n} is forced in, and the union closure is returned.
SetFamily sample_family(int n, std::uint64_t seed, std::uint64_t index);

struct AuditMode {
    enum class Kind { exhaustive, sampled };

    Kind kind = Kind::exhaustive;
    std::uint64_t count = 0;
    std::uint64_t seed = 0;

    static AuditMode exhaustive() { return {}; }
    static AuditMode sampled(std::uint64_t count, std::uint64_t seed) { return {Kind::sampled, count, seed}; }

    friend bool operator==(const AuditMode&, const AuditMode&) = default;
};

struct AuditReport {
    int n = 0;
    AuditMode mode;
    std::uint64_t families_checked = 0;
    std::uint64_t theorem1_violations = 0;
    std::uint64_t theorem1_equalities = 0;
    std::uint64_t equality_mismatches = 0;
    std::uint64_t corollary21_violations = 0;
    std::uint64_t decomposition_failures = 0;
    std::uint64_t theorem2_violations = 0;
    std::uint64_t reimer_violations = 0;

    /// Adds another partial tally over the same n and mode.
    AuditReport& merge(const AuditReport& other);

    /// True when every violation, mismatch and failure count is zero.
    bool clean() const noexcept;

    std::string to_json() const;
    static std::string csv_header();
    std::string to_csv_row() const;
    std::string to_text() const;

    friend bool operator==(const AuditReport&, const AuditReport&) = default;
};

/// Checks one family with universe exactly {1..n} against every bound and
/// the chain decomposition, adding the outcome to `report`.
void audit_family(const SetFamily& family, int n, AuditReport& report);

/// Runs audit_family over the exhaustive or sampled population. The index
/// space is split into `threads` contiguous ranges with private tallies, so
/// the report does not depend on the thread count.
AuditReport audit(int n, const AuditMode& mode, int threads = 1);

}  // namespace ucf

#endif  // UCF_ENUMERATION_HPP
