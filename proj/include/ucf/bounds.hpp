#ifndef UCF_BOUNDS_HPP
#define UCF_BOUNDS_HPP

#include "ucf/dyadic.hpp"
#include "ucf/set_family.hpp"

#include <optional>
#include <utility>

namespace ucf {

/// Largest n accepted by the formula-only bound functions.
inline constexpr int max_formula_n = 1000;

/// C(n, i); zero when i < 0 or i > n. Requires n >= 0.
BigInt binomial(int n, int i);

/// Sum of C(n, i) for i = 0..ell: the size bound for a union-closed family
/// with universe [n] and length ell. Requires 0 <= ell <= n.
BigInt theorem1_bound(int n, int ell);

/// Sum of the ell+1 largest coefficients C(n, ·): the size bound for an
/// arbitrary family of length ell on n points. Requires 0 <= ell <= n.
BigInt erdos_bound(int n, int ell);

/// |F|^|F| <= 4^(sum of member sizes), i.e. |F| <= 4^(average member size),
/// decided in exact integer arithmetic.
bool reimer_check(const SetFamily& family);

/// x^0 + x^1 + ... + x^(z-1). Requires x, z >= 0.
BigInt geometric_sum(int x, int z);

/// geometric_sum(k, p) + 2^n (1 - 2^-k)^p, evaluated exactly as
/// geometric_sum(k, p) + (2^k - 1)^p * 2^(n - kp). Requires k, n, p >= 0.
DyadicRational theta(int k, int n, int p);

/// The depth p minimising theta(k, n, ·): one more than the largest p >= 0
/// with (k 2^k)^p <= 2^(n-k) (2^k - 1)^p. Requires 1 <= k <= n.
int p_hat(int n, int k);

/// theta(k, n, p_hat(n, k)), an upper bound on theorem1_bound(n, k).
DyadicRational theorem2_bound(int n, int k);

struct ThetaMinimum {
    int argmin = 0;  ///< smallest p attaining the minimum
    DyadicRational value;
};

/// Exhaustive exact scan of theta(k, n, p) over p = 0..p_max.
/// Requires 1 <= k <= n and p_max >= p_hat(n, k) + 2.
ThetaMinimum theta_min_scan(int n, int k, int p_max);

/// True iff theta(k, n, p+1) <= theta(k, n, p) is predicted, i.e.
/// (k 2^k)^p <= 2^(n-k) (2^k - 1)^p. Requires 1 <= k <= n, p >= 0.
bool theta_step_nonincreasing(int n, int k, int p);

/// Checks sum_{i<=k} C(n,i) == sum_{i<=m} C(m,i) sum_{j<=k-i} C(n-m,j).
/// Requires 0 <= k <= n and 0 <= m <= n.
bool chain_identity_check(int n, int k, int m);

struct BoundReport {
    BigInt family_size;
    int n = 0;
    int ell = 0;
    BigInt theorem1;
    BigInt erdos;
    /// Absent when ell == 0, where the depth bound needs k >= 1.
    std::optional<DyadicRational> theta_at_phat;
    std::optional<int> p_hat;
    bool theorem1_tight = false;
    bool reimer_holds = false;

    /// True when every bound that should hold does.
    bool consistent() const;
};

/// Throws DomainError naming a violating pair when the family is not
/// union-closed, and InputError when the universe exceeds max_formula_n.
BoundReport bound_report(const SetFamily& family);

}  // namespace ucf

#endif  // UCF_BOUNDS_HPP
