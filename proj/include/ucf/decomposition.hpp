#ifndef UCF_DECOMPOSITION_HPP
#define UCF_DECOMPOSITION_HPP

#include "ucf/set_family.hpp"

#include <vector>

namespace ucf {

/// One level of the chain decomposition.
struct DecompositionBlock {
    ElementSet diff_mask;  ///< chain[i] minus chain[i+1]
    SetFamily c_family;    ///< members containing diff_mask and avoiding every earlier diff
    SetFamily d_family;    ///< c_family with diff_mask removed from each member
};

/**
 * A maximum chain C_1 ⊋ ... ⊋ C_{ℓ+1} of a union-closed family together with
 * its ℓ blocks. Every member other than the bottom of the chain lands in
 * exactly one block.
 */
struct Decomposition {
    Chain chain;
    std::vector<DecompositionBlock> blocks;
    ElementSet residual;  ///< last set of the chain
};

struct DecompositionCheck {
    bool partition_ok = true;  ///< blocks are disjoint and cover everything but the residual
    bool size_ok = true;       ///< 1 + sum |D_i| == |family|
    bool closure_ok = true;    ///< each D_i with nonempty C_{i+1} is union-closed
    bool shrink_ok = true;     ///< |U(D_i)| <= n - i and length(D_i) <= ℓ
    /// 0-based block indices whose closure check was skipped (C_{i+1} empty).
    std::vector<int> closure_skipped;

    bool all_ok() const noexcept { return partition_ok && size_ok && closure_ok && shrink_ok; }
};

/// Deterministic maximum chain starting at the universe. At each step the
/// smallest-mask member that still admits a longest continuation is taken.
/// Throws DomainError if the family is not union-closed.
Chain max_chain(const SetFamily& family);

/// Throws DomainError unless the family is union-closed and the chain is a
/// maximum chain of it starting at the universe.
Decomposition build_decomposition(const SetFamily& family, const Chain& chain);

/// Never throws on a failed property; failures are reported in the result.
DecompositionCheck verify_decomposition(const SetFamily& family, const Decomposition& decomposition);

}  // namespace ucf

#endif  // UCF_DECOMPOSITION_HPP
