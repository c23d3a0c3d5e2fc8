#pragma once

#include "suspzeta/numbers.hpp"

#include <utility>
#include <vector>

namespace suspzeta {

/// Univariate polynomial over BigRational in a formal variable (written "s").
/// Coefficients are stored densely by degree; trailing zeros are trimmed, the
/// zero polynomial has no stored coefficients.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly constant(BigRational c);
    /// The variable s itself.
    static Poly variable();
    /// a + b*s
    static Poly linear(const BigRational& a, const BigRational& b);

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    BigRational coeff(int deg) const;
    const BigRational& leading() const;
    const std::vector<BigRational>& coeffs() const { return coeffs_; }

    bool operator==(const Poly& other) const { return coeffs_ == other.coeffs_; }
    bool operator!=(const Poly& other) const { return !(*this == other); }

    Poly operator-() const;
    Poly operator+(const Poly& other) const;
    Poly operator-(const Poly& other) const;
    Poly operator*(const Poly& other) const;
    Poly operator*(const BigRational& c) const;

    Poly pow(unsigned exponent) const;

    /// Quotient and remainder of exact field division; divisor must be nonzero.
    std::pair<Poly, Poly> divrem(const Poly& divisor) const;

    /// Monic gcd over the rationals; gcd(0,0) = 0.
    static Poly gcd(Poly a, Poly b);

    BigRational evaluate(const BigRational& x) const;

    /// p(alpha*s + beta)
    Poly compose_affine(const BigRational& alpha, const BigRational& beta) const;

    Poly monic() const;

private:
    void trim();
    std::vector<BigRational> coeffs_;
};

Poly operator*(const BigRational& c, const Poly& p);

} // namespace suspzeta
