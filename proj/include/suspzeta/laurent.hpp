#pragma once

#include "suspzeta/numbers.hpp"

#include <compare>
#include <map>

namespace suspzeta {

/// Exponent pair of a monomial L^l * T^t.
struct LTExp {
    long long l = 0;
    long long t = 0;
    auto operator<=>(const LTExp&) const = default;
};

/// Integer Laurent polynomial in L and T. L-exponents range over Z; callers
/// that need T-exponents >= 0 enforce it at their construction sites.
class LaurentLT {
public:
    LaurentLT() = default;

    static LaurentLT zero() { return LaurentLT(); }
    static LaurentLT one() { return monomial(1, 0, 0); }
    static LaurentLT monomial(BigInt coeff, long long lexp, long long texp);
    /// (L - 1)
    static LaurentLT l_minus_one();

    bool is_zero() const { return coeffs_.empty(); }
    const std::map<LTExp, BigInt>& coeffs() const { return coeffs_; }
    BigInt coeff(long long lexp, long long texp) const;

    bool operator==(const LaurentLT& other) const { return coeffs_ == other.coeffs_; }
    bool operator!=(const LaurentLT& other) const { return !(*this == other); }

    LaurentLT operator-() const;
    LaurentLT operator+(const LaurentLT& other) const;
    LaurentLT operator-(const LaurentLT& other) const;
    LaurentLT operator*(const LaurentLT& other) const;
    LaurentLT operator*(const BigInt& c) const;

    LaurentLT& operator+=(const LaurentLT& other);

    LaurentLT pow(unsigned exponent) const;

    void add_monomial(const BigInt& coeff, long long lexp, long long texp);

    /// Drop monomials with T-exponent above tBound.
    LaurentLT truncate_t(long long tBound) const;
    /// Drop monomials with L-exponent below lMin.
    LaurentLT truncate_l_below(long long lMin) const;
    /// Product with both truncations applied on the fly.
    LaurentLT mul_truncated(const LaurentLT& other, long long tBound, long long lMin) const;

    long long max_l_exponent() const;       // 0 when zero
    long long max_t_exponent() const;       // 0 when zero
    /// Σ coeff * 1^l * 1^t, i.e. the evaluation at L = T = 1.
    BigInt evaluate_at_one() const;

private:
    std::map<LTExp, BigInt> coeffs_;
};

LaurentLT operator*(const BigInt& c, const LaurentLT& p);

} // namespace suspzeta
