#include "ucf/bounds.hpp"
#include "ucf/decomposition.hpp"
#include "ucf/enumeration.hpp"
#include "ucf/errors.hpp"

#include "doctest.h"
#include "oracles.hpp"

using namespace ucf;

namespace {

ElementSet S(std::initializer_list<int> e) { return ElementSet::of(e); }
const ElementSet E{};
SetFamily F(std::vector<ElementSet> sets) { return SetFamily::from_sets(std::move(sets)); }
SetFamily D(std::vector<ElementSet> sets) { return SetFamily::derived(std::move(sets)); }

// Replays the block definitions directly from the chain.
void check_blocks_by_definition(const SetFamily& family, const Decomposition& d)
{
    ElementSet earlier;
    for (std::size_t i = 0; i < d.blocks.size(); ++i) {
        const auto& b = d.blocks[i];
        CHECK(b.diff_mask == d.chain[i] - d.chain[i + 1]);
        CHECK_FALSE(b.diff_mask.empty());
        CHECK(b.diff_mask.disjoint(earlier));
        std::size_t expected = 0;
        for (ElementSet x : family.members())
            if (b.diff_mask.subset_of(x) && x.disjoint(earlier)) ++expected;
        CHECK(b.c_family.size() == expected);
        for (ElementSet x : b.c_family.members()) {
            CHECK(b.diff_mask.subset_of(x));
            CHECK(x.disjoint(earlier));
            CHECK(b.d_family.contains(x - b.diff_mask));
        }
        CHECK(b.d_family.size() == b.c_family.size());
        CHECK(b.c_family.contains(d.chain[i]));
        CHECK(b.d_family.contains(d.chain[i + 1]));
        earlier |= b.diff_mask;
    }
}

}  // namespace

TEST_CASE("max_chain")
{
    CHECK(max_chain(F({S({1})})) == Chain({S({1})}));
    CHECK(max_chain(F({S({1}), E})) == Chain({S({1}), E}));
    CHECK(max_chain(top_layers(3, 1)) == Chain({S({1, 2, 3}), S({1, 2})}));
    CHECK(max_chain(top_layers(3, 3)) == Chain({S({1, 2, 3}), S({1, 2}), S({1}), E}));
    CHECK_THROWS_AS(max_chain(F({S({1}), S({2})})), DomainError);
}

TEST_CASE("build_decomposition: top_layers(3,1)")
{
    const auto f = top_layers(3, 1);
    const auto d = build_decomposition(f, max_chain(f));
    REQUIRE(d.blocks.size() == 1);
    CHECK(d.blocks[0].diff_mask == S({3}));
    CHECK(d.blocks[0].c_family == D({S({1, 2, 3}), S({1, 3}), S({2, 3})}));
    CHECK(d.blocks[0].d_family == D({S({1, 2}), S({1}), S({2})}));
    CHECK(d.residual == S({1, 2}));

    const auto check = verify_decomposition(f, d);
    CHECK(check.partition_ok);
    CHECK(check.size_ok);
    CHECK(check.closure_ok);
    CHECK(check.shrink_ok);
    CHECK(check.closure_skipped.empty());
}

TEST_CASE("build_decomposition: base cases")
{
    const auto pair = F({S({1}), E});
    const auto d = build_decomposition(pair, max_chain(pair));
    REQUIRE(d.blocks.size() == 1);
    CHECK(d.blocks[0].diff_mask == S({1}));
    CHECK(d.blocks[0].c_family == D({S({1})}));
    CHECK(d.blocks[0].d_family == D({E}));
    CHECK(d.residual == E);
    const auto check = verify_decomposition(pair, d);
    CHECK(check.all_ok());
    CHECK(check.closure_skipped == std::vector<int>{0});

    const auto single = F({S({1})});
    const auto s = build_decomposition(single, max_chain(single));
    CHECK(s.blocks.empty());
    CHECK(s.residual == S({1}));
    CHECK(verify_decomposition(single, s).all_ok());
}

TEST_CASE("build_decomposition rejects bad chains")
{
    const auto f = top_layers(3, 2);
    CHECK_THROWS_AS(build_decomposition(f, Chain({S({1, 2, 3}), S({1, 2})})), DomainError);
    CHECK_THROWS_AS(build_decomposition(f, Chain({S({1, 2, 3}), S({1, 2}), S({4})})), InputError);
    CHECK_THROWS_AS(build_decomposition(F({S({1}), S({2})}), Chain({S({1})})), DomainError);
    const auto g = F({S({1, 2}), S({1}), S({2})});
    CHECK_THROWS_AS(build_decomposition(g, Chain({S({1, 2}), E})), DomainError);
    CHECK_THROWS_AS(build_decomposition(g, Chain({S({1}), E})), DomainError);
}

TEST_CASE("verify_decomposition reports a tampered decomposition instead of throwing")
{
    const auto f = top_layers(3, 2);
    auto d = build_decomposition(f, max_chain(f));
    d.blocks[0].d_family = D({S({1})});
    const auto check = verify_decomposition(f, d);
    CHECK_FALSE(check.size_ok);
    CHECK_FALSE(check.all_ok());

    auto d2 = build_decomposition(f, max_chain(f));
    d2.blocks[1].c_family = d2.blocks[0].c_family;
    CHECK_FALSE(verify_decomposition(f, d2).partition_ok);

    auto d3 = build_decomposition(f, max_chain(f));
    d3.blocks[0].d_family = D({S({1}), S({2}), S({3}), E});
    CHECK_FALSE(verify_decomposition(f, d3).closure_ok);
}

TEST_CASE("decompositions of every union-closed family on up to 4 points")
{
    for (int n = 1; n <= 4; ++n) {
        int families = 0;
        enumerate_exhaustive(n, [&](const SetFamily& f) {
            ++families;
            const auto chain = max_chain(f);
            CHECK(chain == max_chain(f));
            CHECK(static_cast<int>(chain.size()) == length(f) + 1);
            CHECK(chain[0] == f.universe());
            const auto d = build_decomposition(f, chain);
            check_blocks_by_definition(f, d);
            const auto check = verify_decomposition(f, d);
            CHECK(check.all_ok());
            for (int skipped : check.closure_skipped) {
                CHECK(d.chain[static_cast<std::size_t>(skipped) + 1].empty());
                CHECK(d.blocks[static_cast<std::size_t>(skipped)].d_family == D({E}));
            }
        });
        CHECK(families > 0);
    }
}

TEST_CASE("decompositions of sampled families on 5 to 8 points")
{
    for (int n = 5; n <= 8; ++n)
        sample_random(n, 150, 11, [&](const SetFamily& f) {
            const auto d = build_decomposition(f, max_chain(f));
            check_blocks_by_definition(f, d);
            CHECK(verify_decomposition(f, d).all_ok());
        });
}

TEST_CASE("top layers: size identity")
{
    for (int n = 1; n <= 8; ++n)
        for (int ell = 0; ell <= n; ++ell) {
            const auto f = top_layers(n, ell);
            const auto d = build_decomposition(f, max_chain(f));
            std::size_t total = 1;
            for (const auto& b : d.blocks) total += b.d_family.size();
            CHECK(BigInt(total) == theorem1_bound(n, ell));
            CHECK(verify_decomposition(f, d).all_ok());
        }
}
