#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace coorbit::poly {

// Dense univariate polynomials over Z; index = degree. The zero polynomial
// is the empty vector. Coefficients are exact (GMP integers).
using Coeffs = std::vector<mpz_class>;

// Drop trailing zero coefficients in place.
void trim(Coeffs& c);

// Degree, with deg(0) = -1.
long degree(const Coeffs& c);

Coeffs mul(const Coeffs& a, const Coeffs& b);

// The binomial 1 - t^k, k >= 1.
Coeffs one_minus_power(long k);

// Exact quotient p / (1 - t^k), or nullopt when p is not divisible.
// Uses the recurrence q[d] = p[d] + q[d-k]; p is divisible exactly when the
// recurrence leaves the top k computed coefficients at zero.
std::optional<Coeffs> divide_by_one_minus_power(const Coeffs& p, long k);

}  // namespace coorbit::poly
