#pragma once

#include <gmpxx.h>

#include <vector>

namespace coorbit {

/// An integer partition constrained to a k x m box: at most k rows, every
/// row at most m. Indexes the Schubert cells of the Grassmannian G_{k,m}.
struct BoxPartition {
    std::vector<int> rows;  // weakly decreasing, positive entries
    int box_height = 0;     // k
    int box_width = 0;      // m

    bool valid() const;
    long long weight() const;
};

/// Number of partitions of `weight` fitting in a k x m box. Out-of-range
/// weight counts 0. Computed by the Young-diagram recurrence
/// N(k, m, w) = N(k, m-1, w) + N(k-1, m, w-m), independent of any
/// product-formula expansion.
mpz_class box_partitions(int k, int m, long long weight);

/// Explicit enumeration of the same set, for small boxes.
std::vector<BoxPartition> box_partition_list(int k, int m, long long weight);

}  // namespace coorbit
