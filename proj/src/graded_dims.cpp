#include "coorbit/graded_dims.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

#include "coorbit/polynomial.hpp"

namespace coorbit {

GradedDims::GradedDims(std::vector<mpz_class> betti) : betti_(std::move(betti))
{
    for (std::size_t d = 0; d < betti_.size(); ++d)
        if (betti_[d] < 0)
            throw std::invalid_argument("GradedDims: negative entry at degree " + std::to_string(d));
    poly::trim(betti_);
}

GradedDims GradedDims::unit()
{
    return GradedDims{{mpz_class(1)}};
}

GradedDims GradedDims::from_q_coeffs(const std::vector<mpz_class>& q_coeffs)
{
    std::vector<mpz_class> t(q_coeffs.empty() ? 0 : 2 * q_coeffs.size() - 1, mpz_class(0));
    for (std::size_t j = 0; j < q_coeffs.size(); ++j)
        t[2 * j] = q_coeffs[j];
    return GradedDims(std::move(t));
}

mpz_class GradedDims::at(long degree) const
{
    if (degree < 0 || static_cast<std::size_t>(degree) >= betti_.size())
        return 0;
    return betti_[static_cast<std::size_t>(degree)];
}

long GradedDims::top_degree() const
{
    return static_cast<long>(betti_.size()) - 1;
}

bool GradedDims::has_odd_support() const
{
    for (std::size_t d = 1; d < betti_.size(); d += 2)
        if (betti_[d] != 0)
            return true;
    return false;
}

bool equals(const GradedDims& a, const GradedDims& b)
{
    return a == b;
}

GradedDims tensor(const GradedDims& a, const GradedDims& b)
{
    return GradedDims(poly::mul(a.coeffs(), b.coeffs()));
}

GradedDims tensor_all(const std::vector<GradedDims>& factors)
{
    GradedDims r = GradedDims::unit();
    for (const auto& f : factors)
        r = tensor(r, f);
    return r;
}

bool is_palindromic(const GradedDims& a)
{
    const auto& c = a.coeffs();
    for (std::size_t d = 0; d < c.size() / 2; ++d)
        if (c[d] != c[c.size() - 1 - d])
            return false;
    return true;
}

mpz_class total_dim(const GradedDims& a)
{
    mpz_class sum = 0;
    for (const auto& c : a.coeffs())
        sum += c;
    return sum;
}

std::optional<GradedDims> divide_exact(const GradedDims& num, const GradedDims& den)
{
    if (den.at(0) == 0)
        throw std::invalid_argument("divide_exact: denominator has zero constant term");
    if (num.is_zero())
        return GradedDims{};
    const auto& n = num.coeffs();
    const auto& d = den.coeffs();
    if (n.size() < d.size())
        return std::nullopt;

    // Long division from the bottom degree up; the quotient must stay
    // nonnegative and integral, and the remainder must vanish.
    poly::Coeffs rem = n;
    poly::Coeffs q(n.size() - d.size() + 1, mpz_class(0));
    for (std::size_t k = 0; k < q.size(); ++k) {
        if (rem[k] == 0)
            continue;
        if (rem[k] < 0 || rem[k] % d[0] != 0)
            return std::nullopt;
        q[k] = rem[k] / d[0];
        for (std::size_t j = 0; j < d.size(); ++j)
            rem[k + j] -= q[k] * d[j];
    }
    for (const auto& r : rem)
        if (r != 0)
            return std::nullopt;
    return GradedDims(std::move(q));
}

GradedDims free_algebra_series(const std::vector<long>& generator_degrees, long max_degree)
{
    if (max_degree < 0)
        throw std::invalid_argument("free_algebra_series: max_degree must be >= 0");
    for (long g : generator_degrees) {
        if (g <= 0)
            throw std::invalid_argument("free_algebra_series: generator degree must be positive");
        if (g % 2 != 0)
            throw std::invalid_argument("free_algebra_series: odd generator degree " + std::to_string(g) +
                                        " (exterior generators unsupported)");
    }
    // Truncation of prod_g 1/(1 - t^g): count monomials by total degree.
    std::vector<mpz_class> c(static_cast<std::size_t>(max_degree) + 1, mpz_class(0));
    c[0] = 1;
    for (long g : generator_degrees)
        for (std::size_t d = static_cast<std::size_t>(g); d < c.size(); ++d)
            c[d] += c[d - static_cast<std::size_t>(g)];
    return GradedDims(std::move(c));
}

GradedDims complete_intersection_series(const std::vector<long>& generator_degrees,
                                        const std::vector<long>& relation_degrees)
{
    for (long g : generator_degrees)
        if (g <= 0)
            throw std::invalid_argument("complete_intersection_series: generator degree must be positive");
    for (long r : relation_degrees)
        if (r <= 0)
            throw std::invalid_argument("complete_intersection_series: relation degree must be positive");

    poly::Coeffs p{mpz_class(1)};
    for (long r : relation_degrees)
        p = poly::mul(p, poly::one_minus_power(r));
    for (long g : generator_degrees) {
        auto q = poly::divide_by_one_minus_power(p, g);
        if (!q)
            throw std::domain_error("complete_intersection_series: quotient is not a polynomial "
                                    "(presentation is not a regular sequence)");
        p = std::move(*q);
    }
    for (const auto& c : p)
        if (c < 0)
            throw std::domain_error("complete_intersection_series: negative coefficient in quotient "
                                    "(presentation is not a regular sequence)");
    return GradedDims(std::move(p));
}

std::string to_string(const GradedDims& a)
{
    std::ostringstream os;
    os << a;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const GradedDims& a)
{
    os << '(';
    const auto& c = a.coeffs();
    if (c.empty())
        os << '0';
    for (std::size_t d = 0; d < c.size(); ++d) {
        if (d)
            os << ',';
        os << c[d];
    }
    return os << ')';
}

}  // namespace coorbit
