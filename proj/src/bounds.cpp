#include "ucf/bounds.hpp"

#include "ucf/errors.hpp"

#include <bit>
#include <string>

namespace ucf {

namespace {

using boost::multiprecision::pow;

void require(bool ok, const char* what)
{
    if (!ok) throw InputError(what);
}

void require_formula_n(int n)
{
    require(n >= 0 && n <= max_formula_n, "n must be in 0..1000");
}

BigInt pow2(long long e) { return BigInt(1) << static_cast<unsigned>(e); }

}  // namespace

BigInt binomial(int n, int i)
{
    require(n >= 0, "binomial: n must be nonnegative");
    if (i < 0 || i > n) return 0;
    if (i > n - i) i = n - i;
    BigInt c = 1;
    for (int j = 1; j <= i; ++j) c = c * (n - i + j) / j;
    return c;
}

BigInt theorem1_bound(int n, int ell)
{
    require_formula_n(n);
    require(ell >= 0 && ell <= n, "ell must be in 0..n");
    BigInt term = 1;
    BigInt sum = 1;
    for (int i = 1; i <= ell; ++i) {
        term = term * (n - i + 1) / i;
        sum += term;
    }
    return sum;
}

BigInt erdos_bound(int n, int ell)
{
    require_formula_n(n);
    require(ell >= 0 && ell <= n, "ell must be in 0..n");
    // Coefficients are unimodal around n/2, so the largest ell+1 form a
    // window grown outward from the middle.
    int lo = n / 2;
    int hi = n / 2;
    BigInt low_c = binomial(n, lo);
    BigInt high_c = low_c;
    BigInt sum = low_c;
    for (int taken = 1; taken <= ell; ++taken) {
        const BigInt below = lo > 0 ? low_c * lo / (n - lo + 1) : BigInt(0);
        const BigInt above = hi < n ? high_c * (n - hi) / (hi + 1) : BigInt(0);
        if (lo > 0 && (hi == n || below >= above)) {
            --lo;
            low_c = below;
            sum += below;
        } else {
            ++hi;
            high_c = above;
            sum += above;
        }
    }
    return sum;
}

bool reimer_check(const SetFamily& family)
{
    const std::uint64_t m = family.size();
    require(m > 0, "reimer_check: family must be nonempty");
    std::uint64_t total = 0;
    for (ElementSet a : family.members()) total += static_cast<std::uint64_t>(a.size());

    // m^m <= 2^(2 total). With floor(log2 m) = L we have
    // 2^(mL) <= m^m < 2^(m(L+1)), which settles most cases without big powers.
    const std::uint64_t log_floor = static_cast<std::uint64_t>(std::bit_width(m) - 1);
    const unsigned __int128 rhs_exp = static_cast<unsigned __int128>(2) * total;
    if (static_cast<unsigned __int128>(m) * (log_floor + 1) <= rhs_exp) return true;
    if (static_cast<unsigned __int128>(m) * log_floor > rhs_exp) return false;
    return pow(BigInt(m), static_cast<unsigned>(m)) <= pow2(static_cast<long long>(rhs_exp));
}

BigInt geometric_sum(int x, int z)
{
    require(x >= 0 && z >= 0, "geometric_sum: x and z must be nonnegative");
    BigInt sum = 0;
    BigInt term = 1;
    for (int i = 0; i < z; ++i) {
        sum += term;
        term *= x;
    }
    return sum;
}

DyadicRational theta(int k, int n, int p)
{
    require(k >= 0 && n >= 0 && p >= 0, "theta: arguments must be nonnegative");
    const BigInt decayed = pow(pow2(k) - 1, static_cast<unsigned>(p));
    const long long shift = static_cast<long long>(n) - static_cast<long long>(k) * p;
    return DyadicRational(geometric_sum(k, p)) + DyadicRational(decayed, -shift);
}

bool theta_step_nonincreasing(int n, int k, int p)
{
    require(k >= 1 && k <= n, "k must be in 1..n");
    require(p >= 0, "p must be nonnegative");
    const BigInt lhs = pow(BigInt(k) << static_cast<unsigned>(k), static_cast<unsigned>(p));
    const BigInt rhs = pow2(n - k) * pow(pow2(k) - 1, static_cast<unsigned>(p));
    return lhs <= rhs;
}

int p_hat(int n, int k)
{
    require_formula_n(n);
    require(k >= 1 && k <= n, "k must be in 1..n");
    // The ratio k 2^k / (2^k - 1) exceeds 1, so the left side outgrows the
    // right after at most n - k + 1 steps.
    const BigInt base_lhs = BigInt(k) << static_cast<unsigned>(k);
    const BigInt base_rhs = pow2(k) - 1;
    BigInt lhs = 1;
    BigInt rhs = pow2(n - k);
    int largest = 0;
    for (int p = 1;; ++p) {
        lhs *= base_lhs;
        rhs *= base_rhs;
        if (lhs > rhs) break;
        largest = p;
    }
    return largest + 1;
}

DyadicRational theorem2_bound(int n, int k) { return theta(k, n, p_hat(n, k)); }

ThetaMinimum theta_min_scan(int n, int k, int p_max)
{
    const int best_depth = p_hat(n, k);
    require(p_max >= best_depth + 2, "theta_min_scan: p_max must be at least p_hat + 2");
    ThetaMinimum out{0, theta(k, n, 0)};
    for (int p = 1; p <= p_max; ++p) {
        DyadicRational value = theta(k, n, p);
        if (value < out.value) out = ThetaMinimum{p, std::move(value)};
    }
    return out;
}

bool chain_identity_check(int n, int k, int m)
{
    require(n >= 0 && k >= 0 && k <= n, "k must be in 0..n");
    require(m >= 0 && m <= n, "m must be in 0..n");
    BigInt lhs = 0;
    for (int i = 0; i <= k; ++i) lhs += binomial(n, i);
    BigInt rhs = 0;
    for (int i = 0; i <= m; ++i) {
        BigInt inner = 0;
        for (int j = 0; j <= k - i; ++j) inner += binomial(n - m, j);
        rhs += binomial(m, i) * inner;
    }
    return lhs == rhs;
}

bool BoundReport::consistent() const
{
    if (family_size > theorem1 || theorem1 > erdos || !reimer_holds) return false;
    if (theta_at_phat && (*theta_at_phat <=> family_size) < 0) return false;
    return true;
}

BoundReport bound_report(const SetFamily& family)
{
    if (auto bad = find_union_violation(family))
        throw DomainError("family is not union-closed: {" + bad->first.to_string() + "} ∪ {" +
                          bad->second.to_string() + "} is missing");
    BoundReport r;
    r.family_size = family.size();
    r.n = family.universe().size();
    r.ell = length(family);
    r.theorem1 = theorem1_bound(r.n, r.ell);
    r.erdos = erdos_bound(r.n, r.ell);
    if (r.ell >= 1) {
        r.p_hat = p_hat(r.n, r.ell);
        r.theta_at_phat = theta(r.ell, r.n, *r.p_hat);
    }
    r.theorem1_tight = r.family_size == r.theorem1;
    r.reimer_holds = reimer_check(family);
    return r;
}

}  // namespace ucf
