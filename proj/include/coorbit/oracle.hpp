#pragma once

#include <cstdint>
#include <vector>

#include "coorbit/composition.hpp"
#include "coorbit/graded_dims.hpp"

namespace coorbit {

// Brute-force recomputation of the closed forms by exhaustive enumeration.
// Nothing here may call into orbits; the two routes stay independent so the
// pipeline is never checked against itself.

inline constexpr int kMaxEnumerationN = 11;  // 11! ~ 4e7 permutations
inline constexpr int kMaxBoxGrassmannianN = 14;

/// Counts of permutations of {1..n} by inversion number (= Coxeter length).
struct PermutationTable {
    int n = 0;
    std::vector<std::uint64_t> length_histogram;  // index = inversion count
};

/// Enumerates S_n in lexicographic order with incremental inversion-count
/// updates. 1 <= n <= kMaxEnumerationN, else "instance too large".
PermutationTable inversion_histogram(int n);

/// Betti number at degree 2l = permutations of n letters with l inversions.
GradedDims flag_series_by_enumeration(int n);

/// Enumerates the minimal-length coset representatives of the Young
/// subgroup S_{i_1} x ... x S_{i_s}: the permutations increasing within
/// each block of positions. Betti at degree 2l = representatives with l
/// inversions. p.n() <= kMaxEnumerationN.
GradedDims partial_flag_series_by_cosets(const Composition& p);

/// Betti at degree 2w = partitions of w in a k x (n-k) box (Schubert cells).
/// 0 <= k <= n <= kMaxBoxGrassmannianN.
GradedDims grassmannian_series_by_boxes(int k, int n);

}  // namespace coorbit
