#include "suspzeta/poly.hpp"

#include <stdexcept>

namespace suspzeta {

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::constant(BigRational c) {
    Poly p;
    if (c != 0) p.coeffs_.push_back(std::move(c));
    return p;
}

Poly Poly::variable() { return linear(0, 1); }

Poly Poly::linear(const BigRational& a, const BigRational& b) {
    Poly p;
    p.coeffs_ = {a, b};
    p.trim();
    return p;
}

BigRational Poly::coeff(int deg) const {
    if (deg < 0 || deg >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(deg)];
}

const BigRational& Poly::leading() const {
    if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Poly Poly::operator+(const Poly& other) const {
    Poly r;
    r.coeffs_.resize(std::max(coeffs_.size(), other.coeffs_.size()));
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) {
        if (i < coeffs_.size()) r.coeffs_[i] += coeffs_[i];
        if (i < other.coeffs_.size()) r.coeffs_[i] += other.coeffs_[i];
    }
    r.trim();
    return r;
}

Poly Poly::operator-(const Poly& other) const { return *this + (-other); }

Poly Poly::operator*(const Poly& other) const {
    if (is_zero() || other.is_zero()) return Poly();
    Poly r;
    r.coeffs_.assign(coeffs_.size() + other.coeffs_.size() - 1, BigRational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
            r.coeffs_[i + j] += coeffs_[i] * other.coeffs_[j];
    r.trim();
    return r;
}

Poly Poly::operator*(const BigRational& c) const {
    if (c == 0) return Poly();
    Poly r(*this);
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

Poly operator*(const BigRational& c, const Poly& p) { return p * c; }

Poly Poly::pow(unsigned exponent) const {
    Poly result = Poly::constant(1);
    Poly base = *this;
    while (exponent > 0) {
        if (exponent & 1u) result = result * base;
        base = base * base;
        exponent >>= 1u;
    }
    return result;
}

std::pair<Poly, Poly> Poly::divrem(const Poly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
    Poly rem(*this);
    Poly quot;
    const int dd = divisor.degree();
    if (rem.degree() >= dd) quot.coeffs_.assign(static_cast<std::size_t>(rem.degree() - dd) + 1, BigRational(0));
    while (!rem.is_zero() && rem.degree() >= dd) {
        const int shift = rem.degree() - dd;
        const BigRational factor = rem.leading() / divisor.leading();
        quot.coeffs_[static_cast<std::size_t>(shift)] += factor;
        for (int i = 0; i <= dd; ++i)
            rem.coeffs_[static_cast<std::size_t>(i + shift)] -= factor * divisor.coeffs_[static_cast<std::size_t>(i)];
        rem.trim();
    }
    quot.trim();
    return {quot, rem};
}

Poly Poly::gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a.divrem(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.monic();
}

BigRational Poly::evaluate(const BigRational& x) const {
    BigRational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::compose_affine(const BigRational& alpha, const BigRational& beta) const {
    // Horner with the inner polynomial alpha*s + beta.
    Poly inner = Poly::linear(beta, alpha);
    Poly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * inner + Poly::constant(*it);
    return acc;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return *this * (BigRational(1) / leading());
}

} // namespace suspzeta
