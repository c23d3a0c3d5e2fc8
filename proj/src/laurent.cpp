#include "suspzeta/laurent.hpp"

namespace suspzeta {

LaurentLT LaurentLT::monomial(BigInt coeff, long long lexp, long long texp) {
    LaurentLT p;
    if (coeff != 0) p.coeffs_[{lexp, texp}] = std::move(coeff);
    return p;
}

LaurentLT LaurentLT::l_minus_one() {
    LaurentLT p;
    p.coeffs_[{1, 0}] = 1;
    p.coeffs_[{0, 0}] = -1;
    return p;
}

BigInt LaurentLT::coeff(long long lexp, long long texp) const {
    auto it = coeffs_.find({lexp, texp});
    return it == coeffs_.end() ? BigInt(0) : it->second;
}

void LaurentLT::add_monomial(const BigInt& coeff, long long lexp, long long texp) {
    if (coeff == 0) return;
    auto [it, inserted] = coeffs_.try_emplace({lexp, texp}, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) coeffs_.erase(it);
    }
}

LaurentLT LaurentLT::operator-() const {
    LaurentLT r(*this);
    for (auto& [k, v] : r.coeffs_) v = -v;
    return r;
}

LaurentLT& LaurentLT::operator+=(const LaurentLT& other) {
    for (const auto& [k, v] : other.coeffs_) add_monomial(v, k.l, k.t);
    return *this;
}

LaurentLT LaurentLT::operator+(const LaurentLT& other) const {
    LaurentLT r(*this);
    r += other;
    return r;
}

LaurentLT LaurentLT::operator-(const LaurentLT& other) const { return *this + (-other); }

LaurentLT LaurentLT::operator*(const LaurentLT& other) const {
    LaurentLT r;
    for (const auto& [ka, va] : coeffs_)
        for (const auto& [kb, vb] : other.coeffs_) r.add_monomial(va * vb, ka.l + kb.l, ka.t + kb.t);
    return r;
}

LaurentLT LaurentLT::operator*(const BigInt& c) const {
    LaurentLT r;
    if (c == 0) return r;
    for (const auto& [k, v] : coeffs_) r.coeffs_[k] = v * c;
    return r;
}

LaurentLT operator*(const BigInt& c, const LaurentLT& p) { return p * c; }

LaurentLT LaurentLT::pow(unsigned exponent) const {
    LaurentLT result = LaurentLT::one();
    LaurentLT base = *this;
    while (exponent > 0) {
        if (exponent & 1u) result = result * base;
        base = base * base;
        exponent >>= 1u;
    }
    return result;
}

LaurentLT LaurentLT::truncate_t(long long tBound) const {
    LaurentLT r;
    for (const auto& [k, v] : coeffs_)
        if (k.t <= tBound) r.coeffs_[k] = v;
    return r;
}

LaurentLT LaurentLT::truncate_l_below(long long lMin) const {
    LaurentLT r;
    for (const auto& [k, v] : coeffs_)
        if (k.l >= lMin) r.coeffs_[k] = v;
    return r;
}

LaurentLT LaurentLT::mul_truncated(const LaurentLT& other, long long tBound, long long lMin) const {
    LaurentLT r;
    for (const auto& [ka, va] : coeffs_)
        for (const auto& [kb, vb] : other.coeffs_) {
            const long long t = ka.t + kb.t;
            const long long l = ka.l + kb.l;
            if (t > tBound || l < lMin) continue;
            r.add_monomial(va * vb, l, t);
        }
    return r;
}

long long LaurentLT::max_l_exponent() const {
    long long m = 0;
    for (const auto& [k, v] : coeffs_) m = std::max(m, k.l);
    return m;
}

long long LaurentLT::max_t_exponent() const {
    long long m = 0;
    for (const auto& [k, v] : coeffs_) m = std::max(m, k.t);
    return m;
}

BigInt LaurentLT::evaluate_at_one() const {
    BigInt s = 0;
    for (const auto& [k, v] : coeffs_) s += v;
    return s;
}

} // namespace suspzeta
