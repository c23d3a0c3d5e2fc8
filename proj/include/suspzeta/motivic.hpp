#pragma once

#include "suspzeta/laurent.hpp"
#include "suspzeta/rational_function.hpp"

#include <vector>

namespace suspzeta {

/// Formal exponent a + b*s arising from L^(-a) T^(b) under T = L^(-s).
struct AffineExponent {
    long long a = 0;
    long long b = 0;
};

/// One denominator factor (1 - L^(-a) T^(b)); (a, b) != (0, 0), b >= 0.
struct DenomFactor {
    long long a = 0;
    long long b = 0;
    auto operator<=>(const DenomFactor&) const = default;
};

/// numer / prod (1 - L^(-a_j) T^(b_j)). The factor list is kept sorted so it
/// behaves as a multiset.
struct MotivicTerm {
    LaurentLT numer;
    std::vector<DenomFactor> denom;
};

/// Finite sum of factored terms in (L, T); houses naive motivic zeta functions
/// and the cone generating functions.
class MotivicExpression {
public:
    MotivicExpression() = default;

    static MotivicExpression zero() { return MotivicExpression(); }
    static MotivicExpression from_term(MotivicTerm term);
    /// A plain Laurent polynomial (empty denominator).
    static MotivicExpression from_laurent(LaurentLT p);

    const std::vector<MotivicTerm>& terms() const { return terms_; }
    bool has_terms() const { return !terms_.empty(); }

    MotivicExpression operator-() const;
    MotivicExpression operator+(const MotivicExpression& other) const;
    MotivicExpression operator-(const MotivicExpression& other) const;
    MotivicExpression operator*(const MotivicExpression& other) const;

    /// Multiply every term's numerator by a Laurent polynomial.
    MotivicExpression scaled(const LaurentLT& factor) const;
    /// Multiply by the single factored term numer / prod(extraFactors).
    MotivicExpression times_term(const LaurentLT& numer, const std::vector<DenomFactor>& extraFactors) const;

private:
    std::vector<MotivicTerm> terms_;
};

/// Equality in the localized module, decided by clearing denominators.
bool motivic_equal(const MotivicExpression& x, const MotivicExpression& y);

/// Exact T-expansion up to T^tBound, coefficients are Laurent polynomials in L
/// (returned as one bivariate polynomial). Every denominator factor must have
/// b >= 1; a b = 0 factor throws std::domain_error("not T-expandable").
LaurentLT motivic_series(const MotivicExpression& x, long long tBound);

/// T-expansion that additionally expands b = 0 factors (1 - L^(-a)), a > 0, as
/// power series in L^(-1). The result is exact for every kept monomial and
/// keeps exactly those with L-exponent >= -lBound and T-exponent <= tBound.
LaurentLT motivic_series_truncated(const MotivicExpression& x, long long tBound, long long lBound);

/// Euler-characteristic specialization: the limit L -> 1 of x at T = L^(-s),
/// computed through the Laurent expansion in h = log L with coefficients in
/// Q(s). Throws std::domain_error("divergent specialization") when the
/// expansion has a pole at h = 0.
RationalFunction euler_specialize(const MotivicExpression& x);

} // namespace suspzeta
