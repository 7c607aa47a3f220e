#include "ucf/decomposition.hpp"

#include "ucf/errors.hpp"

#include <algorithm>

namespace ucf {

namespace {

void require_union_closed(const SetFamily& family)
{
    if (family.empty()) throw DomainError("cannot decompose an empty family");
    if (auto bad = find_union_violation(family))
        throw DomainError("family is not union-closed: {" + bad->first.to_string() + "} ∪ {" +
                          bad->second.to_string() + "} is missing");
}

std::size_t index_of(const SetFamily& family, ElementSet set)
{
    const auto m = family.members();
    return static_cast<std::size_t>(std::lower_bound(m.begin(), m.end(), set) - m.begin());
}

}  // namespace

Chain max_chain(const SetFamily& family)
{
    require_union_closed(family);
    const auto m = family.members();
    const auto height = chain_heights(family);

    std::size_t current = index_of(family, family.universe());
    std::vector<ElementSet> sets{m[current]};
    while (height[current] > 1) {
        const int want = height[current] - 1;
        std::size_t next = m.size();
        for (std::size_t j = 0; j < m.size(); ++j)
            if (height[j] == want && m[j].proper_subset_of(m[current])) {
                next = j;
                break;
            }
        current = next;
        sets.push_back(m[current]);
    }
    return Chain(std::move(sets));
}

Decomposition build_decomposition(const SetFamily& family, const Chain& chain)
{
    require_union_closed(family);
    const int ell = length(family);
    if (chain.size() != static_cast<std::size_t>(ell) + 1)
        throw DomainError("chain has " + std::to_string(chain.size()) + " sets; a maximum chain has " +
                          std::to_string(ell + 1));
    for (ElementSet c : chain.sets())
        if (!family.contains(c)) throw DomainError("chain set {" + c.to_string() + "} is not a member");
    if (chain[0] != family.universe()) throw DomainError("chain must start at the universe");

    Decomposition d;
    d.chain = chain;
    d.residual = chain[chain.size() - 1];
    ElementSet earlier;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        const ElementSet diff = chain[i] - chain[i + 1];
        std::vector<ElementSet> c_members, d_members;
        for (ElementSet x : family.members())
            if (diff.subset_of(x) && x.disjoint(earlier)) {
                c_members.push_back(x);
                d_members.push_back(x - diff);
            }
        d.blocks.push_back(DecompositionBlock{diff, SetFamily::derived(std::move(c_members)),
                                              SetFamily::derived(std::move(d_members))});
        earlier |= diff;
    }
    return d;
}

DecompositionCheck verify_decomposition(const SetFamily& family, const Decomposition& decomposition)
{
    DecompositionCheck check;
    const int n = family.universe().size();
    const int ell = length(family);

    std::vector<int> hits(family.size(), 0);
    std::size_t d_total = 0;
    for (std::size_t i = 0; i < decomposition.blocks.size(); ++i) {
        const auto& block = decomposition.blocks[i];
        for (ElementSet x : block.c_family.members()) {
            if (!family.contains(x)) {
                check.partition_ok = false;
                continue;
            }
            ++hits[index_of(family, x)];
        }
        d_total += block.d_family.size();

        const ElementSet below = decomposition.chain[i + 1];
        if (below.empty())
            check.closure_skipped.push_back(static_cast<int>(i));
        else if (!is_union_closed(block.d_family))
            check.closure_ok = false;

        const int level = static_cast<int>(i) + 1;
        if (block.d_family.universe().size() > n - level || length(block.d_family) > ell)
            check.shrink_ok = false;
    }

    for (std::size_t j = 0; j < family.size(); ++j) {
        const int expected = family.members()[j] == decomposition.residual ? 0 : 1;
        if (hits[j] != expected) check.partition_ok = false;
    }
    check.size_ok = 1 + d_total == family.size();
    return check;
}

}  // namespace ucf
