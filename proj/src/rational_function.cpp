#include "suspzeta/rational_function.hpp"

#include <stdexcept>

namespace suspzeta {

RationalFunction::RationalFunction(Poly numerator, Poly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    normalize();
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = Poly::constant(1);
        return;
    }
    Poly g = Poly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divrem(g).first;
        den_ = den_.divrem(g).first;
    }
    const BigRational lead = den_.leading();
    if (lead != 1) {
        const BigRational inv = BigRational(1) / lead;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r(*this);
    r.num_ = -r.num_;
    return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& other) const {
    return RationalFunction(num_ * other.den_ + other.num_ * den_, den_ * other.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& other) const { return *this + (-other); }

RationalFunction RationalFunction::operator*(const RationalFunction& other) const {
    return RationalFunction(num_ * other.num_, den_ * other.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& other) const {
    if (other.is_zero()) throw std::domain_error("division by the zero rational function");
    return RationalFunction(num_ * other.den_, den_ * other.num_);
}

RationalFunction RationalFunction::reciprocal() const {
    if (is_zero()) throw std::domain_error("reciprocal of the zero rational function");
    return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::substitute_affine(const BigRational& alpha, const BigRational& beta) const {
    if (alpha == 0) throw std::invalid_argument("affine substitution requires alpha != 0");
    return RationalFunction(num_.compose_affine(alpha, beta), den_.compose_affine(alpha, beta));
}

BigRational RationalFunction::evaluate(const BigRational& x) const {
    const BigRational d = den_.evaluate(x);
    if (d == 0) throw std::domain_error("evaluation at a pole");
    return num_.evaluate(x) / d;
}

RationalFunction operator*(const BigRational& c, const RationalFunction& x) {
    return RationalFunction::from_rational(c) * x;
}

RationalFunction operator*(const RationalFunction& x, const BigRational& c) { return c * x; }

namespace {

std::vector<BigInt> positive_divisors(BigInt n) {
    if (n < 0) n = -n;
    std::vector<BigInt> divs;
    for (BigInt d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            divs.push_back(d);
            if (d * d != n) divs.push_back(n / d);
        }
    }
    return divs;
}

// Scale to an integer polynomial (content ignored; roots are scale-invariant).
std::vector<BigInt> integer_coefficients(const Poly& p) {
    BigInt denlcm = 1;
    for (const auto& c : p.coeffs()) denlcm = big_lcm(denlcm, denominator_of(c));
    std::vector<BigInt> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.push_back(numerator_of(c) * (denlcm / denominator_of(c)));
    return out;
}

} // namespace

std::multiset<BigRational> rational_roots(const Poly& p, Poly* remainder) {
    std::multiset<BigRational> roots;
    Poly current = p;
    if (current.degree() <= 0) {
        if (remainder) *remainder = current;
        return roots;
    }
    // Strip roots at zero first.
    while (current.degree() >= 1 && current.coeff(0) == 0) {
        roots.insert(BigRational(0));
        std::vector<BigRational> shifted(current.coeffs().begin() + 1, current.coeffs().end());
        current = Poly(std::move(shifted));
    }
    bool progress = true;
    while (progress && current.degree() >= 1) {
        progress = false;
        const auto ints = integer_coefficients(current);
        const auto ps = positive_divisors(ints.front());
        const auto qs = positive_divisors(ints.back());
        for (const auto& pp : ps) {
            for (const auto& qq : qs) {
                for (int sign : {1, -1}) {
                    const BigRational cand = BigRational(sign * pp, qq);
                    if (current.evaluate(cand) == 0) {
                        roots.insert(cand);
                        current = current.divrem(Poly::linear(-cand, 1)).first;
                        progress = true;
                    }
                    if (current.degree() < 1) break;
                }
                if (current.degree() < 1) break;
            }
            if (current.degree() < 1) break;
        }
    }
    if (remainder) *remainder = current;
    return roots;
}

std::set<BigRational> denominator_roots(const RationalFunction& x) {
    Poly rest;
    const auto multi = rational_roots(x.den(), &rest);
    if (rest.degree() >= 1)
        throw std::domain_error("denominator has a nonconstant factor without rational roots");
    return {multi.begin(), multi.end()};
}

} // namespace suspzeta
