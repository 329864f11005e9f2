#include "coorbit/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "coorbit/box_partitions.hpp"

namespace coorbit {

namespace {

// Advance `w` to its lexicographic successor among arrangements of its
// letters (duplicates allowed), updating the inversion count in place.
// Only inversions inside positions [pivot..end) change, and both the old
// and new counts there are computable by a scan of the suffix, so the
// update costs O(suffix) instead of O(n^2). Returns false at the last
// arrangement.
bool next_arrangement_tracked(std::vector<int>& w, long long& inv)
{
    const int n = static_cast<int>(w.size());
    int i = n - 2;
    while (i >= 0 && w[i] >= w[i + 1])
        --i;
    if (i < 0)
        return false;

    // Suffix w[i+1..] is weakly decreasing. Count, before the step, the
    // inversions it forms internally and against w[i].
    long long before = 0;
    for (int a = i + 1; a < n; ++a) {
        if (w[a] < w[i])
            ++before;
        for (int b = a + 1; b < n; ++b)
            if (w[a] > w[b])
                ++before;
    }

    int j = n - 1;
    while (w[j] <= w[i])
        --j;
    std::swap(w[i], w[j]);
    std::reverse(w.begin() + i + 1, w.end());

    // Suffix is now weakly increasing: no internal inversions left.
    long long after = 0;
    for (int a = i + 1; a < n; ++a)
        if (w[a] < w[i])
            ++after;
    inv += after - before;
    return true;
}

std::vector<std::uint64_t> inversion_histogram_of_word(std::vector<int> word)
{
    std::sort(word.begin(), word.end());
    long long max_inv = 0;
    for (std::size_t a = 0; a < word.size(); ++a)
        for (std::size_t b = a + 1; b < word.size(); ++b)
            if (word[a] != word[b])
                ++max_inv;
    std::vector<std::uint64_t> hist(static_cast<std::size_t>(max_inv) + 1, 0);
    long long inv = 0;  // sorted ascending: none
    do {
        ++hist[static_cast<std::size_t>(inv)];
    } while (next_arrangement_tracked(word, inv));
    return hist;
}

GradedDims series_from_histogram(const std::vector<std::uint64_t>& hist)
{
    std::vector<mpz_class> q;
    q.reserve(hist.size());
    for (std::uint64_t c : hist)
        q.emplace_back(static_cast<unsigned long>(c));
    return GradedDims::from_q_coeffs(q);
}

}  // namespace

PermutationTable inversion_histogram(int n)
{
    if (n < 1 || n > kMaxEnumerationN)
        throw std::domain_error("inversion_histogram: instance too large (need 1 <= n <= " +
                                std::to_string(kMaxEnumerationN) + ", got " + std::to_string(n) + ")");
    std::vector<int> word(static_cast<std::size_t>(n));
    std::iota(word.begin(), word.end(), 1);
    return PermutationTable{n, inversion_histogram_of_word(std::move(word))};
}

GradedDims flag_series_by_enumeration(int n)
{
    return series_from_histogram(inversion_histogram(n).length_histogram);
}

GradedDims partial_flag_series_by_cosets(const Composition& p)
{
    if (p.n() > kMaxEnumerationN)
        throw std::domain_error("partial_flag_series_by_cosets: instance too large (n = " +
                                std::to_string(p.n()) + " exceeds " +
                                std::to_string(kMaxEnumerationN) + ")");
    // A representative is fixed by which position block each value lands
    // in: sending value v to the letter block_of(v) is a bijection between
    // block-increasing permutations and arrangements of the multiset word
    // 1^{i_1} 2^{i_2} ... s^{i_s}, and it preserves inversion counts.
    std::vector<int> word;
    word.reserve(static_cast<std::size_t>(p.n()));
    for (int b = 0; b < p.num_parts(); ++b)
        word.insert(word.end(), static_cast<std::size_t>(p.part(static_cast<std::size_t>(b))), b);
    return series_from_histogram(inversion_histogram_of_word(std::move(word)));
}

GradedDims grassmannian_series_by_boxes(int k, int n)
{
    if (k < 0 || n < k || n > kMaxBoxGrassmannianN)
        throw std::domain_error("grassmannian_series_by_boxes: instance too large (need 0 <= k <= n <= " +
                                std::to_string(kMaxBoxGrassmannianN) + ")");
    const int m = n - k;
    std::vector<mpz_class> q;
    q.reserve(static_cast<std::size_t>(k) * m + 1);
    for (long long w = 0; w <= static_cast<long long>(k) * m; ++w)
        q.push_back(box_partitions(k, m, w));
    return GradedDims::from_q_coeffs(q);
}

}  // namespace coorbit
