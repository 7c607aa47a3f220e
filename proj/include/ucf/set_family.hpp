#ifndef UCF_SET_FAMILY_HPP
#define UCF_SET_FAMILY_HPP

#include "ucf/element_set.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace ucf {

/**
 * A finite family of distinct sets, kept in ascending mask order with the
 * union of all members cached as the universe.
 *
 * Families built with from_sets() are "proper": nonempty and with at least
 * one nonempty member. Sub-families produced by splitting or decomposing a
 * proper family may legitimately be empty or equal to {∅}; those are built
 * with derived() and report is_derived() == true.
 */
class SetFamily {
public:
    /// Throws InputError on duplicates, on an empty list, or when every
    /// member is the empty set.
    static SetFamily from_sets(std::vector<ElementSet> sets);

    /// Relaxed constructor for derived sub-families. Still rejects duplicates.
    static SetFamily derived(std::vector<ElementSet> sets);

    std::span<const ElementSet> members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    ElementSet universe() const noexcept { return universe_; }
    bool is_derived() const noexcept { return derived_; }

    /// Binary search over the sorted members.
    bool contains(ElementSet set) const noexcept;

    /// Member-sequence equality; the derived flag is not compared.
    friend bool operator==(const SetFamily& a, const SetFamily& b) noexcept
    {
        return a.members_ == b.members_;
    }

private:
    SetFamily(std::vector<ElementSet> sorted, bool derived);

    std::vector<ElementSet> members_;
    ElementSet universe_;
    bool derived_ = false;
};

/// Sets ordered strictly downward by inclusion: sets()[i+1] ⊊ sets()[i].
class Chain {
public:
    Chain() = default;
    /// Throws InputError if some adjacent pair is not a proper containment.
    explicit Chain(std::vector<ElementSet> sets);

    std::span<const ElementSet> sets() const noexcept { return sets_; }
    std::size_t size() const noexcept { return sets_.size(); }
    const ElementSet& operator[](std::size_t i) const { return sets_[i]; }

    friend bool operator==(const Chain&, const Chain&) = default;

private:
    std::vector<ElementSet> sets_;
};

/// The members of a family split on one element x.
struct ElementSplit {
    SetFamily containing;  ///< members that contain x
    SetFamily stripped;    ///< those same members with x removed
    SetFamily avoiding;    ///< members that do not contain x
};

ElementSet universe(const SetFamily& family);

bool is_union_closed(const SetFamily& family);

/// Some pair of members whose union is missing, or nullopt when the family is
/// union-closed.
std::optional<std::pair<ElementSet, ElementSet>> find_union_violation(const SetFamily& family);

/// Smallest union-closed family containing every generator.
SetFamily union_closure(const SetFamily& generators);

/// One less than the largest chain size; 0 for {∅} and for an empty view.
int length(const SetFamily& family);

/// For each member (same index as members()), the size of the longest chain
/// of members whose largest set is that member.
std::vector<int> chain_heights(const SetFamily& family);

/// Throws InputError when x is not in the family's universe.
ElementSplit split_on_element(const SetFamily& family, int x);

/// Every subset of {1..n} with at least n-ell elements. Requires
/// 1 <= n <= 24 and 0 <= ell <= n.
SetFamily top_layers(int n, int ell);

/// Element -> number of members containing it, for every universe element.
std::map<int, std::size_t> element_frequencies(const SetFamily& family);

namespace detail {

// Independent evaluation routes. The public functions above pick one by
// family size; tests compare them against each other.

bool is_union_closed_pairwise(const SetFamily& family);
/// Requires universe size <= max_dense_universe.
bool is_union_closed_dense(const SetFamily& family);

std::vector<ElementSet> closure_worklist(std::span<const ElementSet> generators);
/// Requires universe size <= max_dense_universe.
std::vector<ElementSet> closure_dense(std::span<const ElementSet> generators, ElementSet universe);

std::vector<int> chain_heights_dag(const SetFamily& family);
/// Requires universe size <= max_dense_universe.
std::vector<int> chain_heights_dense(const SetFamily& family);

}  // namespace detail

}  // namespace ucf

#endif  // UCF_SET_FAMILY_HPP
