#include "ucf/set_family.hpp"

#include "dense_lattice.hpp"
#include "ucf/errors.hpp"

#include <algorithm>
#include <unordered_set>

namespace ucf {

namespace {

// Above this many members the quadratic routes give way to the dense
// lattice routes whenever the universe is small enough to index.
constexpr std::size_t pairwise_limit = 4096;
constexpr std::size_t worklist_generator_limit = 64;

bool dense_ok(ElementSet universe) { return universe.size() <= max_dense_universe; }

// subset_or[X] = union of all members contained in X, in compressed indices.
std::vector<std::uint32_t> subset_or(const detail::DenseLattice& lattice,
                                     std::span<const ElementSet> members)
{
    std::vector<std::uint32_t> table(lattice.cells(), 0);
    for (ElementSet m : members) {
        const std::uint32_t c = lattice.compress(m);
        table[c] = c;
    }
    for (int bit = 0; bit < lattice.rank(); ++bit) {
        const std::uint32_t b = std::uint32_t{1} << bit;
        for (std::uint32_t x = 0; x < lattice.cells(); ++x)
            if (x & b) table[x] |= table[x ^ b];
    }
    return table;
}

}  // namespace

ElementSet ElementSet::from_bits(Mask bits)
{
    if (bits >> max_element)
        throw InputError("element set uses bit 63; labels are limited to 1.." + std::to_string(max_element));
    return ElementSet{bits};
}

ElementSet ElementSet::of(std::initializer_list<int> elements)
{
    return of(std::vector<int>(elements));
}

ElementSet ElementSet::of(const std::vector<int>& elements)
{
    Mask bits = 0;
    for (int e : elements) {
        if (e < 1 || e > max_element)
            throw InputError("element " + std::to_string(e) + " outside 1.." + std::to_string(max_element));
        bits |= Mask{1} << (e - 1);
    }
    return ElementSet{bits};
}

ElementSet ElementSet::range(int n)
{
    if (n < 0 || n > max_element)
        throw InputError("universe size " + std::to_string(n) + " outside 0.." + std::to_string(max_element));
    return ElementSet{n == 0 ? Mask{0} : (~Mask{0} >> (64 - n))};
}

std::vector<int> ElementSet::elements() const
{
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (Mask rest = bits_; rest != 0; rest &= rest - 1)
        out.push_back(std::countr_zero(rest) + 1);
    return out;
}

std::string ElementSet::to_string() const
{
    if (bits_ == 0) return "-";
    std::string out;
    for (int e : elements()) {
        if (!out.empty()) out += ' ';
        out += std::to_string(e);
    }
    return out;
}

SetFamily::SetFamily(std::vector<ElementSet> sorted, bool derived)
    : members_(std::move(sorted)), derived_(derived)
{
    for (ElementSet m : members_) universe_ |= m;
}

namespace {

std::vector<ElementSet> sort_unique_or_throw(std::vector<ElementSet> sets)
{
    std::sort(sets.begin(), sets.end());
    auto dup = std::adjacent_find(sets.begin(), sets.end());
    if (dup != sets.end()) throw InputError("duplicate set {" + dup->to_string() + "} in family");
    return sets;
}

}  // namespace

SetFamily SetFamily::from_sets(std::vector<ElementSet> sets)
{
    auto sorted = sort_unique_or_throw(std::move(sets));
    if (sorted.empty()) throw InputError("a family needs at least one member");
    if (sorted.back().empty()) throw InputError("a family needs at least one nonempty member");
    return SetFamily(std::move(sorted), false);
}

SetFamily SetFamily::derived(std::vector<ElementSet> sets)
{
    return SetFamily(sort_unique_or_throw(std::move(sets)), true);
}

bool SetFamily::contains(ElementSet set) const noexcept
{
    return std::binary_search(members_.begin(), members_.end(), set);
}

Chain::Chain(std::vector<ElementSet> sets) : sets_(std::move(sets))
{
    for (std::size_t i = 0; i + 1 < sets_.size(); ++i)
        if (!sets_[i + 1].proper_subset_of(sets_[i]))
            throw InputError("chain is not strictly decreasing at position " + std::to_string(i + 1));
}

ElementSet universe(const SetFamily& family) { return family.universe(); }

namespace detail {

bool is_union_closed_pairwise(const SetFamily& family)
{
    const auto m = family.members();
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j) {
            const ElementSet u = m[i] | m[j];
            if (u != m[i] && u != m[j] && !family.contains(u)) return false;
        }
    return true;
}

bool is_union_closed_dense(const SetFamily& family)
{
    const DenseLattice lattice(family.universe());
    const auto table = subset_or(lattice, family.members());
    std::vector<bool> present(lattice.cells(), false);
    for (ElementSet m : family.members()) present[lattice.compress(m)] = true;
    for (std::uint32_t x = 1; x < lattice.cells(); ++x)
        if (table[x] == x && !present[x]) return false;
    return true;
}

std::vector<ElementSet> closure_worklist(std::span<const ElementSet> generators)
{
    std::vector<ElementSet> found;
    std::unordered_set<Mask> seen;
    for (ElementSet g : generators)
        if (seen.insert(g.bits()).second) found.push_back(g);
    // Each pair (j, i) with j < i is united exactly once, when i is reached.
    for (std::size_t i = 0; i < found.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) {
            const ElementSet u = found[i] | found[j];
            if (seen.insert(u.bits()).second) found.push_back(u);
        }
    std::sort(found.begin(), found.end());
    return found;
}

std::vector<ElementSet> closure_dense(std::span<const ElementSet> generators, ElementSet universe)
{
    const DenseLattice lattice(universe);
    const auto table = subset_or(lattice, generators);
    std::vector<ElementSet> out;
    if (std::find(generators.begin(), generators.end(), ElementSet{}) != generators.end())
        out.push_back(ElementSet{});
    // X is a union of generators exactly when the generators below X cover it.
    for (std::uint32_t x = 1; x < lattice.cells(); ++x)
        if (table[x] == x) out.push_back(lattice.expand(x));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> chain_heights_dag(const SetFamily& family)
{
    const auto m = family.members();
    std::vector<std::size_t> order(m.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return m[a].size() < m[b].size(); });

    std::vector<int> height(m.size(), 1);
    for (std::size_t oi = 0; oi < order.size(); ++oi) {
        const std::size_t top = order[oi];
        int best = 0;
        for (std::size_t oj = 0; oj < oi; ++oj) {
            const std::size_t below = order[oj];
            if (m[below].proper_subset_of(m[top])) best = std::max(best, height[below]);
        }
        height[top] = best + 1;
    }
    return height;
}

std::vector<int> chain_heights_dense(const SetFamily& family)
{
    const DenseLattice lattice(family.universe());
    std::vector<bool> present(lattice.cells(), false);
    for (ElementSet m : family.members()) present[lattice.compress(m)] = true;

    // best[X] = longest chain of members that all lie inside X.
    std::vector<std::uint8_t> best(lattice.cells(), 0);
    for (std::uint32_t x = 0; x < lattice.cells(); ++x) {
        std::uint8_t below = 0;
        for (std::uint32_t rest = x; rest != 0; rest &= rest - 1)
            below = std::max(below, best[x ^ (rest & (~rest + 1))]);
        best[x] = static_cast<std::uint8_t>(below + (present[x] ? 1 : 0));
    }

    std::vector<int> height;
    height.reserve(family.size());
    for (ElementSet m : family.members()) height.push_back(best[lattice.compress(m)]);
    return height;
}

}  // namespace detail

bool is_union_closed(const SetFamily& family)
{
    if (family.size() > pairwise_limit && dense_ok(family.universe()))
        return detail::is_union_closed_dense(family);
    return detail::is_union_closed_pairwise(family);
}

std::optional<std::pair<ElementSet, ElementSet>> find_union_violation(const SetFamily& family)
{
    const auto m = family.members();
    if (family.size() <= pairwise_limit || !dense_ok(family.universe())) {
        for (std::size_t i = 0; i < m.size(); ++i)
            for (std::size_t j = i + 1; j < m.size(); ++j) {
                const ElementSet u = m[i] | m[j];
                if (u != m[i] && u != m[j] && !family.contains(u)) return std::pair{m[i], m[j]};
            }
        return std::nullopt;
    }

    const detail::DenseLattice lattice(family.universe());
    const auto table = subset_or(lattice, m);
    for (std::uint32_t x = 1; x < lattice.cells(); ++x) {
        if (table[x] != x) continue;
        const ElementSet target = lattice.expand(x);
        if (family.contains(target)) continue;
        // target is a union of members below it but not itself a member, so
        // folding those members together must hit a missing union en route.
        std::optional<ElementSet> acc;
        for (ElementSet y : m) {
            if (!y.subset_of(target)) continue;
            if (!acc) {
                acc = y;
                continue;
            }
            const ElementSet u = *acc | y;
            if (!family.contains(u)) return std::pair{*acc, y};
            acc = u;
        }
    }
    return std::nullopt;
}

SetFamily union_closure(const SetFamily& generators)
{
    const auto g = generators.members();
    std::vector<ElementSet> closed = (g.size() > worklist_generator_limit && dense_ok(generators.universe()))
                                         ? detail::closure_dense(g, generators.universe())
                                         : detail::closure_worklist(g);
    return generators.is_derived() ? SetFamily::derived(std::move(closed)) : SetFamily::from_sets(std::move(closed));
}

std::vector<int> chain_heights(const SetFamily& family)
{
    if (family.size() > pairwise_limit && dense_ok(family.universe()))
        return detail::chain_heights_dense(family);
    return detail::chain_heights_dag(family);
}

int length(const SetFamily& family)
{
    const auto heights = chain_heights(family);
    if (heights.empty()) return 0;
    return *std::max_element(heights.begin(), heights.end()) - 1;
}

ElementSplit split_on_element(const SetFamily& family, int x)
{
    if (!family.universe().contains(x))
        throw InputError("element " + std::to_string(x) + " is not in the family's universe");
    const ElementSet single = ElementSet::of({x});
    std::vector<ElementSet> containing, stripped, avoiding;
    for (ElementSet m : family.members()) {
        if (m.contains(x)) {
            containing.push_back(m);
            stripped.push_back(m - single);
        } else {
            avoiding.push_back(m);
        }
    }
    return ElementSplit{SetFamily::derived(std::move(containing)), SetFamily::derived(std::move(stripped)),
                        SetFamily::derived(std::move(avoiding))};
}

SetFamily top_layers(int n, int ell)
{
    if (n < 1 || n > max_dense_universe)
        throw InputError("top_layers: n must be in 1.." + std::to_string(max_dense_universe));
    if (ell < 0 || ell > n) throw InputError("top_layers: ell must be in 0..n");
    std::vector<ElementSet> sets;
    const Mask end = Mask{1} << n;
    for (Mask bits = 0; bits < end; ++bits)
        if (std::popcount(bits) >= n - ell) sets.push_back(ElementSet::from_bits(bits));
    return SetFamily::from_sets(std::move(sets));
}

std::map<int, std::size_t> element_frequencies(const SetFamily& family)
{
    std::map<int, std::size_t> counts;
    for (int e : family.universe().elements()) counts[e] = 0;
    for (ElementSet m : family.members())
        for (int e : m.elements()) ++counts[e];
    return counts;
}

}  // namespace ucf
