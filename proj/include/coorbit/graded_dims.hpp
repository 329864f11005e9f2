#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace coorbit {

/// Finitely supported sequence of nonnegative integers indexed by
/// cohomological degree: the additive shadow of H*(., Q). Stored dense with
/// trailing zeros trimmed, so comparison ignores padding. Coefficients are
/// exact arbitrary-precision integers.
class GradedDims {
public:
    GradedDims() = default;  // the zero series
    explicit GradedDims(std::vector<mpz_class> betti);

    /// The series (1): a point. Unit of the tensor product.
    static GradedDims unit();

    /// Re-grade a q-coefficient vector with q = t^2: coefficient of q^j
    /// lands in cohomological degree 2j, odd slots are zero.
    static GradedDims from_q_coeffs(const std::vector<mpz_class>& q_coeffs);

    const std::vector<mpz_class>& coeffs() const { return betti_; }
    mpz_class at(long degree) const;
    long top_degree() const;  // -1 for the zero series
    bool is_zero() const { return betti_.empty(); }
    bool has_odd_support() const;

    bool operator==(const GradedDims&) const = default;

private:
    std::vector<mpz_class> betti_;
};

/// Exact degree-wise equality (trailing zeros already ignored by storage).
bool equals(const GradedDims& a, const GradedDims& b);

/// Kunneth product: degree-wise convolution, r[d] = sum a[i] b[d-i].
GradedDims tensor(const GradedDims& a, const GradedDims& b);
GradedDims tensor_all(const std::vector<GradedDims>& factors);

/// betti[d] == betti[D-d] for all d, D the top degree (Poincare duality).
bool is_palindromic(const GradedDims& a);

/// Sum of all entries (= Euler characteristic when odd degrees vanish).
mpz_class total_dim(const GradedDims& a);

/// The series q with tensor(q, den) == num and q >= 0, if one exists.
/// Throws std::invalid_argument when den has zero constant term.
std::optional<GradedDims> divide_exact(const GradedDims& num, const GradedDims& den);

/// Dimension series of the free graded-commutative algebra on generators of
/// the given (positive even) degrees, truncated at max_degree inclusive.
GradedDims free_algebra_series(const std::vector<long>& generator_degrees, long max_degree);

/// Expands prod_rels (1 - t^r) / prod_gens (1 - t^g) as a polynomial.
/// Throws std::domain_error when the quotient is not a polynomial or has a
/// negative coefficient (the presentation is not a regular sequence).
GradedDims complete_intersection_series(const std::vector<long>& generator_degrees,
                                        const std::vector<long>& relation_degrees);

std::string to_string(const GradedDims& a);  // "(1,0,3,0,5,...)"
std::ostream& operator<<(std::ostream& os, const GradedDims& a);

}  // namespace coorbit
