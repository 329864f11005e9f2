#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "coorbit/composition.hpp"

using namespace coorbit;

namespace {

// Independent chain count: chains from the full prefix-sum set down to the
// empty one are ordered set partitions, counted by the Fubini recurrence
// a(k) = sum_j C(k,j) a(k-j) -- a different route than the library's
// submask recursion.
long long fubini(int k)
{
    std::vector<long long> a(static_cast<std::size_t>(k) + 1, 0);
    a[0] = 1;
    for (int m = 1; m <= k; ++m) {
        long long binom = 1;  // C(m, j) built incrementally
        for (int j = 1; j <= m; ++j) {
            binom = binom * (m - j + 1) / j;
            a[m] += binom * a[m - j];
        }
    }
    return a[static_cast<std::size_t>(k)];
}

int dropped_prefix_sums(const Composition& from, const Composition& to)
{
    auto fs = from.proper_prefix_sums();
    auto ts = to.proper_prefix_sums();
    std::set<int> f(fs.begin(), fs.end()), t(ts.begin(), ts.end());
    int count = 0;
    for (int s : f)
        if (!t.count(s))
            ++count;
    return count;
}

}  // namespace

TEST_CASE("composition construction validates parts")
{
    Composition p({1, 1, 1, 1});
    CHECK(p.n() == 4);
    CHECK(p.num_parts() == 4);

    Composition single({4});
    CHECK(single.n() == 4);
    CHECK(single.num_parts() == 1);
    CHECK(single.is_full_group());

    CHECK_THROWS_AS(Composition({1, 0, 3}), std::invalid_argument);
    CHECK_THROWS_AS(Composition({-1, 5}), std::invalid_argument);
    CHECK_THROWS_AS(Composition(std::vector<int>{}), std::invalid_argument);
}

TEST_CASE("composition parse and to_string round trip")
{
    CHECK(Composition::parse("1,1,2") == Composition({1, 1, 2}));
    CHECK(Composition({1, 1, 2}).to_string() == "1,1,2");
    CHECK(Composition::parse("7").to_string() == "7");
    CHECK_THROWS_AS(Composition::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Composition::parse("1,,2"), std::invalid_argument);
    CHECK_THROWS_AS(Composition::parse("1,x"), std::invalid_argument);
    CHECK_THROWS_AS(Composition::parse("1,0,3"), std::invalid_argument);
}

TEST_CASE("composition helpers")
{
    CHECK(Composition::ones(3) == Composition({1, 1, 1}));
    CHECK(Composition({1, 3, 2}).sorted_descending() == Composition({3, 2, 1}));
    CHECK(Composition({1, 1, 2}).proper_prefix_sums() == std::vector<int>{1, 2});
    CHECK(Composition({4}).proper_prefix_sums().empty());
}

TEST_CASE("refines: spec examples")
{
    auto w = refines(Composition({1, 1, 1, 1}), Composition({2, 2}));
    REQUIRE(w.has_value());
    CHECK(w->groups == std::vector<std::pair<std::size_t, std::size_t>>{{0, 2}, {2, 4}});

    CHECK_FALSE(refines(Composition({1, 2, 1}), Composition({2, 2})).has_value());

    auto absorb = refines(Composition({1, 1, 2}), Composition({4}));
    REQUIRE(absorb.has_value());
    CHECK(absorb->groups == std::vector<std::pair<std::size_t, std::size_t>>{{0, 3}});

    CHECK_THROWS_AS(refines(Composition({1, 1}), Composition({3})), std::invalid_argument);
}

TEST_CASE("refines is reflexive with the identity witness")
{
    for (int n = 1; n <= 6; ++n)
        for (const auto& p : all_compositions(n)) {
            auto w = refines(p, p);
            REQUIRE(w.has_value());
            REQUIRE(w->groups.size() == static_cast<std::size_t>(p.num_parts()));
            for (std::size_t j = 0; j < w->groups.size(); ++j)
                CHECK(w->groups[j] == std::make_pair(j, j + 1));
        }
}

TEST_CASE("refinement witness reconstructs the coarse composition")
{
    for (int n = 1; n <= 6; ++n) {
        const auto comps = all_compositions(n);
        for (const auto& fine : comps)
            for (const auto& coarse : comps) {
                auto w = refines(fine, coarse);
                if (!w)
                    continue;
                REQUIRE(w->groups.size() == static_cast<std::size_t>(coarse.num_parts()));
                for (std::size_t j = 0; j < w->groups.size(); ++j)
                    CHECK(group_parts(fine, w->groups[j]).n() == coarse.part(j));
            }
    }
}

TEST_CASE("refines is antisymmetric")
{
    for (int n = 1; n <= 6; ++n) {
        const auto comps = all_compositions(n);
        for (const auto& a : comps)
            for (const auto& b : comps)
                if (refines(a, b) && refines(b, a))
                    CHECK(a == b);
    }
}

TEST_CASE("refinement witnesses compose transitively")
{
    for (int n = 1; n <= 5; ++n) {
        const auto comps = all_compositions(n);
        for (const auto& fine : comps)
            for (const auto& mid : comps) {
                auto w1 = refines(fine, mid);
                if (!w1)
                    continue;
                for (const auto& coarse : comps) {
                    auto w2 = refines(mid, coarse);
                    if (!w2)
                        continue;
                    auto direct = refines(fine, coarse);
                    REQUIRE(direct.has_value());
                    CHECK(compose(*w1, *w2).groups == direct->groups);
                }
            }
    }
}

TEST_CASE("refinement_obstruction names the missing prefix sum")
{
    auto msg = refinement_obstruction(Composition({1, 2, 1}), Composition({2, 2}));
    CHECK(msg.find("prefix sum 2") != std::string::npos);
    CHECK(refinement_obstruction(Composition({1, 1, 2}), Composition({2, 2})).empty());
}

TEST_CASE("all_compositions enumerates 2^(n-1) distinct compositions")
{
    for (int n = 1; n <= 8; ++n) {
        auto comps = all_compositions(n);
        CHECK(comps.size() == (std::size_t{1} << (n - 1)));
        std::set<Composition> uniq(comps.begin(), comps.end());
        CHECK(uniq.size() == comps.size());
        for (const auto& p : comps)
            CHECK(p.n() == n);
    }
    CHECK_THROWS_AS(all_compositions(25), std::domain_error);
}

TEST_CASE("refinement_chains: n = 3 enumerates exactly the three chains")
{
    auto chains = refinement_chains(Composition::ones(3), Composition({3}));
    REQUIRE(chains.size() == 3);
    std::set<std::string> got;
    for (const auto& c : chains)
        got.insert(chain_to_string(c));
    CHECK(got == std::set<std::string>{"1,1,1|3", "1,1,1|1,2|3", "1,1,1|2,1|3"});
}

TEST_CASE("refinement_chains: degenerate and error cases")
{
    auto self = refinement_chains(Composition({2, 1}), Composition({2, 1}));
    REQUIRE(self.size() == 1);
    CHECK(self[0] == std::vector<Composition>{Composition({2, 1})});

    CHECK_THROWS_WITH_AS(refinement_chains(Composition::ones(10), Composition({10})),
                         doctest::Contains("instance too large"), std::domain_error);
    CHECK_THROWS_AS(refinement_chains(Composition({1, 2, 1}), Composition({2, 2})),
                    std::invalid_argument);
}

TEST_CASE("refinement_chains counts match the Fubini oracle")
{
    // The chain count from `from` down to `to` depends only on how many
    // prefix sums get dropped: each chain is an ordered set partition of
    // the dropped sums. In particular (1,1,1,1) -> (4) drops 3 and has
    // fubini(3) = 13 chains.
    struct Case {
        Composition from, to;
    };
    const Case cases[] = {
        {Composition::ones(4), Composition({4})},
        {Composition::ones(4), Composition({2, 2})},
        {Composition::ones(5), Composition({5})},
        {Composition({1, 2, 1, 3}), Composition({7})},
        {Composition::ones(6), Composition({3, 3})},
    };
    for (const auto& c : cases) {
        auto chains = refinement_chains(c.from, c.to);
        CHECK(static_cast<long long>(chains.size()) == fubini(dropped_prefix_sums(c.from, c.to)));
        for (const auto& chain : chains) {
            REQUIRE(chain.size() >= 1);
            CHECK(chain.front() == c.from);
            CHECK(chain.back() == c.to);
            for (std::size_t j = 0; j + 1 < chain.size(); ++j) {
                CHECK(refines(chain[j], chain[j + 1]).has_value());
                CHECK(chain[j] != chain[j + 1]);
            }
        }
    }
    CHECK(refinement_chains(Composition::ones(4), Composition({4})).size() == 13);
}

TEST_CASE("maximal_refinement_chains merge adjacent parts down to two blocks")
{
    const long long expected[] = {0, 0, 0, 2, 6, 24, 120};  // (n-1)! for n >= 3
    for (int n = 1; n <= 6; ++n) {
        auto chains = maximal_refinement_chains(n);
        CHECK(static_cast<long long>(chains.size()) == expected[n]);
        for (const auto& chain : chains) {
            CHECK(chain.front() == Composition::ones(n));
            CHECK(chain.back().num_parts() == 2);
            for (std::size_t j = 0; j + 1 < chain.size(); ++j) {
                CHECK(chain[j].num_parts() == chain[j + 1].num_parts() + 1);
                CHECK(refines(chain[j], chain[j + 1]).has_value());
            }
        }
    }
    CHECK_THROWS_AS(maximal_refinement_chains(10), std::domain_error);
}

TEST_CASE("chain serialization round trips")
{
    const std::string text = "1,1,1,1|2,1,1|2,2|4";
    auto chain = parse_chain(text);
    REQUIRE(chain.size() == 4);
    CHECK(chain_to_string(chain) == text);
    CHECK_THROWS_AS(parse_chain("1,1|x"), std::invalid_argument);
}
