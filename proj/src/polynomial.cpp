#include "coorbit/polynomial.hpp"

#include <stdexcept>

namespace coorbit::poly {

void trim(Coeffs& c)
{
    while (!c.empty() && c.back() == 0)
        c.pop_back();
}

long degree(const Coeffs& c)
{
    return static_cast<long>(c.size()) - 1;
}

Coeffs mul(const Coeffs& a, const Coeffs& b)
{
    if (a.empty() || b.empty())
        return {};
    Coeffs r(a.size() + b.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

Coeffs one_minus_power(long k)
{
    if (k < 1)
        throw std::invalid_argument("one_minus_power: exponent must be >= 1");
    Coeffs c(static_cast<std::size_t>(k) + 1, mpz_class(0));
    c.front() = 1;
    c.back() = -1;
    return c;
}

std::optional<Coeffs> divide_by_one_minus_power(const Coeffs& p, long k)
{
    if (k < 1)
        throw std::invalid_argument("divide_by_one_minus_power: exponent must be >= 1");
    if (p.empty())
        return Coeffs{};
    const std::size_t n = p.size();
    const std::size_t step = static_cast<std::size_t>(k);
    Coeffs q(n, mpz_class(0));
    for (std::size_t d = 0; d < n; ++d) {
        q[d] = p[d];
        if (d >= step)
            q[d] += q[d - step];
    }
    // Exact division leaves deg(q) = deg(p) - k, so the top k slots are zero.
    for (std::size_t d = n < step ? 0 : n - step; d < n; ++d)
        if (q[d] != 0)
            return std::nullopt;
    q.resize(n < step ? 0 : n - step);
    trim(q);
    return q;
}

}  // namespace coorbit::poly
