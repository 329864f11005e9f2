#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "coorbit/cross_check.hpp"
#include "coorbit/oracle.hpp"
#include "coorbit/orbits.hpp"
#include "test_util.hpp"

using namespace coorbit;
using testutil::dense;
using testutil::qser;

namespace {

// Slow reference: walk all permutations with std::next_permutation and
// count inversions from scratch each time.
std::vector<std::uint64_t> histogram_by_recount(int n)
{
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<std::uint64_t> hist(static_cast<std::size_t>(n) * (n - 1) / 2 + 1, 0);
    do {
        std::size_t inv = 0;
        for (std::size_t a = 0; a < perm.size(); ++a)
            for (std::size_t b = a + 1; b < perm.size(); ++b)
                if (perm[a] > perm[b])
                    ++inv;
        ++hist[inv];
    } while (std::next_permutation(perm.begin(), perm.end()));
    return hist;
}

// Slow reference for coset representatives: filter all of S_n for
// "increasing within each block of positions".
GradedDims coset_series_by_filter(const Composition& p)
{
    const int n = p.n();
    std::vector<std::pair<int, int>> blocks;
    int start = 0;
    for (int part : p.parts()) {
        blocks.emplace_back(start, start + part);
        start += part;
    }
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<mpz_class> hist(static_cast<std::size_t>(n) * (n - 1) / 2 + 1, mpz_class(0));
    do {
        bool increasing = true;
        for (auto [lo, hi] : blocks)
            for (int i = lo; i + 1 < hi && increasing; ++i)
                increasing = perm[static_cast<std::size_t>(i)] < perm[static_cast<std::size_t>(i) + 1];
        if (!increasing)
            continue;
        std::size_t inv = 0;
        for (std::size_t a = 0; a < perm.size(); ++a)
            for (std::size_t b = a + 1; b < perm.size(); ++b)
                if (perm[a] > perm[b])
                    ++inv;
        hist[inv] += 1;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return GradedDims::from_q_coeffs(hist);
}

}  // namespace

TEST_CASE("inversion_histogram: small cases and table invariants")
{
    auto h3 = inversion_histogram(3);
    CHECK(h3.length_histogram == std::vector<std::uint64_t>{1, 2, 2, 1});

    auto h1 = inversion_histogram(1);
    CHECK(h1.length_histogram == std::vector<std::uint64_t>{1});

    for (int n = 1; n <= 7; ++n) {
        auto table = inversion_histogram(n);
        CHECK(table.length_histogram.size() ==
              static_cast<std::size_t>(n) * (n - 1) / 2 + 1);
        std::uint64_t sum = 0;
        for (std::uint64_t c : table.length_histogram)
            sum += c;
        CHECK(mpz_class(static_cast<unsigned long>(sum)) ==
              testutil::factorial(static_cast<unsigned long>(n)));
        for (std::size_t i = 0; i < table.length_histogram.size(); ++i)
            CHECK(table.length_histogram[i] ==
                  table.length_histogram[table.length_histogram.size() - 1 - i]);
    }
}

TEST_CASE("incremental inversion tracking matches per-permutation recount")
{
    for (int n = 1; n <= 6; ++n)
        CHECK(inversion_histogram(n).length_histogram == histogram_by_recount(n));
}

TEST_CASE("inversion_histogram bounds are hard errors")
{
    CHECK_THROWS_WITH_AS(inversion_histogram(0), doctest::Contains("instance too large"),
                         std::domain_error);
    CHECK_THROWS_WITH_AS(inversion_histogram(12), doctest::Contains("instance too large"),
                         std::domain_error);
}

TEST_CASE("flag_series_by_enumeration")
{
    CHECK(flag_series_by_enumeration(3) == dense({1, 0, 2, 0, 2, 0, 1}));
    CHECK(flag_series_by_enumeration(1) == GradedDims::unit());
    CHECK(flag_series_by_enumeration(4) == poincare_flag(4));
}

TEST_CASE("partial_flag_series_by_cosets: worked values")
{
    CHECK(partial_flag_series_by_cosets(Composition({2, 2})) == qser({1, 1, 2, 1, 1}));
    for (int n = 1; n <= 6; ++n)
        CHECK(partial_flag_series_by_cosets(Composition({n})) == GradedDims::unit());
    CHECK(partial_flag_series_by_cosets(Composition({1, 1, 2})) == qser({1, 2, 3, 3, 2, 1}));
    CHECK(total_dim(partial_flag_series_by_cosets(Composition({1, 1, 2}))) == 12);
    CHECK_THROWS_WITH_AS(partial_flag_series_by_cosets(Composition::ones(12)),
                         doctest::Contains("instance too large"), std::domain_error);
}

TEST_CASE("coset enumeration equals the block-increasing permutation filter")
{
    for (int n = 1; n <= 6; ++n)
        for (const auto& p : all_compositions(n))
            CHECK(partial_flag_series_by_cosets(p) == coset_series_by_filter(p));
}

TEST_CASE("grassmannian_series_by_boxes")
{
    CHECK(grassmannian_series_by_boxes(2, 4) == qser({1, 1, 2, 1, 1}));
    CHECK(grassmannian_series_by_boxes(0, 6) == GradedDims::unit());
    CHECK(grassmannian_series_by_boxes(6, 6) == GradedDims::unit());
    CHECK(total_dim(grassmannian_series_by_boxes(3, 6)) == 20);
    CHECK_THROWS_WITH_AS(grassmannian_series_by_boxes(3, 15),
                         doctest::Contains("instance too large"), std::domain_error);
    CHECK_THROWS_AS(grassmannian_series_by_boxes(5, 4), std::domain_error);
}

TEST_CASE("closed forms equal enumeration for every composition of n <= 7")
{
    for (int n = 1; n <= 7; ++n)
        for (const auto& p : all_compositions(n))
            CHECK(partial_flag_series_by_cosets(p) == poincare_partial_flag(p));
}

TEST_CASE("splitting holds at the oracle level, without closed forms")
{
    // tensor of coset-enumerated base and fiber series reproduces the
    // coset-enumerated total series
    const std::vector<std::pair<Composition, Composition>> pairs = {
        {Composition::ones(4), Composition({2, 2})},
        {Composition({1, 1, 2}), Composition({2, 2})},
        {Composition({1, 2, 1, 2}), Composition({3, 3})},
        {Composition({1, 1, 1, 2, 2}), Composition({3, 4})},
    };
    for (const auto& [fine, coarse] : pairs) {
        auto witness = refines(fine, coarse);
        REQUIRE(witness.has_value());
        GradedDims rhs = partial_flag_series_by_cosets(coarse);
        for (auto group : witness->groups)
            rhs = tensor(rhs, partial_flag_series_by_cosets(group_parts(fine, group)));
        CHECK(partial_flag_series_by_cosets(fine) == rhs);
    }
}

TEST_CASE("cross_check: spec examples")
{
    auto g22 = cross_check(Composition({2, 2}));
    CHECK(g22.all_agree);
    REQUIRE(g22.comparisons.size() == 2);  // coset and box oracles
    CHECK(g22.comparisons[0].verdict);
    CHECK(g22.comparisons[1].verdict);
    CHECK(g22.comparisons[0].lhs_label == "closed-form");
    CHECK(g22.comparisons[0].factors[0].label == "coset-oracle");
    CHECK(g22.comparisons[1].factors[0].label == "box-oracle");

    auto flag5 = cross_check(Composition::ones(5));
    CHECK(flag5.all_agree);
    REQUIRE(flag5.comparisons.size() == 1);
    CHECK(total_dim(flag5.comparisons[0].lhs) == 120);

    auto point = cross_check(Composition({5}));
    CHECK(point.all_agree);
    CHECK(point.comparisons[0].lhs == GradedDims::unit());
}
