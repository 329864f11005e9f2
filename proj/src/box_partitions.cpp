#include "coorbit/box_partitions.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace coorbit {

bool BoxPartition::valid() const
{
    if (box_height < 0 || box_width < 0)
        return false;
    if (rows.size() > static_cast<std::size_t>(box_height))
        return false;
    int prev = box_width;
    for (int r : rows) {
        if (r < 1 || r > prev)
            return false;
        prev = r;
    }
    return true;
}

long long BoxPartition::weight() const
{
    long long w = 0;
    for (int r : rows)
        w += r;
    return w;
}

mpz_class box_partitions(int k, int m, long long weight)
{
    if (k < 0 || m < 0)
        throw std::invalid_argument("box_partitions: box dimensions must be >= 0");
    const long long cells = static_cast<long long>(k) * m;
    if (weight < 0 || weight > cells)
        return 0;
    if (weight == 0)
        return 1;

    // memo[(h * (m+1) + wd) * (weight+1) + w], -1 = unset
    const std::size_t stride = static_cast<std::size_t>(weight) + 1;
    std::vector<mpz_class> memo(static_cast<std::size_t>(k + 1) * (m + 1) * stride, mpz_class(-1));

    std::function<mpz_class(int, int, long long)> count = [&](int h, int wd, long long w) -> mpz_class {
        if (w == 0)
            return 1;
        if (h == 0 || wd == 0 || w < 0 || w > static_cast<long long>(h) * wd)
            return 0;
        mpz_class& slot = memo[(static_cast<std::size_t>(h) * (m + 1) + static_cast<std::size_t>(wd)) * stride +
                               static_cast<std::size_t>(w)];
        if (slot >= 0)
            return slot;
        // Either no row reaches wd, or strip off one row of exactly wd.
        slot = count(h, wd - 1, w) + count(h - 1, wd, w - wd);
        return slot;
    };
    return count(k, m, weight);
}

std::vector<BoxPartition> box_partition_list(int k, int m, long long weight)
{
    if (k < 0 || m < 0)
        throw std::invalid_argument("box_partition_list: box dimensions must be >= 0");
    std::vector<BoxPartition> out;
    if (weight < 0 || weight > static_cast<long long>(k) * m)
        return out;
    std::vector<int> rows;
    std::function<void(int, long long)> rec = [&](int max_part, long long rem) {
        if (rem == 0) {
            out.push_back(BoxPartition{rows, k, m});
            return;
        }
        if (static_cast<int>(rows.size()) == k)
            return;
        int hi = static_cast<int>(std::min<long long>(max_part, rem));
        for (int p = hi; p >= 1; --p) {
            if (static_cast<long long>(p) * (k - static_cast<int>(rows.size())) < rem)
                break;  // even filling every remaining row with p falls short
            rows.push_back(p);
            rec(p, rem - p);
            rows.pop_back();
        }
    };
    rec(m, weight);
    return out;
}

}  // namespace coorbit
