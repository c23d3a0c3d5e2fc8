#pragma once

#include "suspzeta/poly.hpp"

#include <set>

namespace suspzeta {

/// Exact rational function num/den in the formal variable s.
/// Canonical form: den is monic, gcd(num, den) = 1; the zero function is 0/1.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(Poly::constant(1)) {}
    explicit RationalFunction(Poly numerator) : num_(std::move(numerator)), den_(Poly::constant(1)) {}
    RationalFunction(Poly numerator, Poly denominator);

    static RationalFunction from_rational(const BigRational& c) { return RationalFunction(Poly::constant(c)); }
    static RationalFunction variable() { return RationalFunction(Poly::variable()); }
    /// (a + b*s) as a rational function.
    static RationalFunction linear(const BigRational& a, const BigRational& b) {
        return RationalFunction(Poly::linear(a, b));
    }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    bool operator==(const RationalFunction& other) const { return num_ == other.num_ && den_ == other.den_; }
    bool operator!=(const RationalFunction& other) const { return !(*this == other); }

    RationalFunction operator-() const;
    RationalFunction operator+(const RationalFunction& other) const;
    RationalFunction operator-(const RationalFunction& other) const;
    RationalFunction operator*(const RationalFunction& other) const;
    /// Throws std::domain_error when dividing by the zero function.
    RationalFunction operator/(const RationalFunction& other) const;

    RationalFunction reciprocal() const;

    /// x(alpha*s + beta); alpha must be nonzero.
    RationalFunction substitute_affine(const BigRational& alpha, const BigRational& beta) const;

    /// Exact evaluation; throws std::domain_error at a pole.
    BigRational evaluate(const BigRational& x) const;

private:
    void normalize();
    Poly num_, den_;
};

RationalFunction operator*(const BigRational& c, const RationalFunction& x);
RationalFunction operator*(const RationalFunction& x, const BigRational& c);

/// Roots of the reduced denominator, with multiplicity collapsed to a set.
/// All computed zeta denominators split into rational linear factors; throws
/// std::domain_error if a nonconstant factor without rational roots remains.
std::set<BigRational> denominator_roots(const RationalFunction& x);

/// Rational roots of an integer-content-free polynomial, removed with
/// multiplicity; returns the remaining (rootless) factor through `remainder`.
std::multiset<BigRational> rational_roots(const Poly& p, Poly* remainder = nullptr);

} // namespace suspzeta
