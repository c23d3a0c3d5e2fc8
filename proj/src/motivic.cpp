#include "suspzeta/motivic.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

namespace suspzeta {

namespace {

void check_factor(const DenomFactor& f) {
    if (f.a == 0 && f.b == 0) throw std::domain_error("denominator factor (1 - L^0 T^0) vanishes");
    if (f.b < 0) throw std::domain_error("denominator factor with negative T-exponent");
}

LaurentLT factor_poly(const DenomFactor& f) {
    return LaurentLT::one() - LaurentLT::monomial(1, -f.a, f.b);
}

} // namespace

MotivicExpression MotivicExpression::from_term(MotivicTerm term) {
    for (const auto& f : term.denom) check_factor(f);
    std::sort(term.denom.begin(), term.denom.end());
    MotivicExpression e;
    if (!term.numer.is_zero()) e.terms_.push_back(std::move(term));
    return e;
}

MotivicExpression MotivicExpression::from_laurent(LaurentLT p) {
    return from_term(MotivicTerm{std::move(p), {}});
}

MotivicExpression MotivicExpression::operator-() const {
    MotivicExpression r(*this);
    for (auto& t : r.terms_) t.numer = -t.numer;
    return r;
}

MotivicExpression MotivicExpression::operator+(const MotivicExpression& other) const {
    MotivicExpression r(*this);
    r.terms_.insert(r.terms_.end(), other.terms_.begin(), other.terms_.end());
    return r;
}

MotivicExpression MotivicExpression::operator-(const MotivicExpression& other) const { return *this + (-other); }

MotivicExpression MotivicExpression::operator*(const MotivicExpression& other) const {
    MotivicExpression r;
    for (const auto& a : terms_)
        for (const auto& b : other.terms_) {
            MotivicTerm t;
            t.numer = a.numer * b.numer;
            if (t.numer.is_zero()) continue;
            t.denom = a.denom;
            t.denom.insert(t.denom.end(), b.denom.begin(), b.denom.end());
            std::sort(t.denom.begin(), t.denom.end());
            r.terms_.push_back(std::move(t));
        }
    return r;
}

MotivicExpression MotivicExpression::scaled(const LaurentLT& factor) const {
    MotivicExpression r;
    for (const auto& t : terms_) {
        LaurentLT n = t.numer * factor;
        if (n.is_zero()) continue;
        r.terms_.push_back(MotivicTerm{std::move(n), t.denom});
    }
    return r;
}

MotivicExpression MotivicExpression::times_term(const LaurentLT& numer,
                                                const std::vector<DenomFactor>& extraFactors) const {
    for (const auto& f : extraFactors) check_factor(f);
    MotivicExpression r;
    for (const auto& t : terms_) {
        LaurentLT n = t.numer * numer;
        if (n.is_zero()) continue;
        MotivicTerm nt{std::move(n), t.denom};
        nt.denom.insert(nt.denom.end(), extraFactors.begin(), extraFactors.end());
        std::sort(nt.denom.begin(), nt.denom.end());
        r.terms_.push_back(std::move(nt));
    }
    return r;
}

// ---------------------------------------------------------------------------
// Equality by clearing denominators.

namespace {

struct Fraction {
    LaurentLT num;
    std::map<DenomFactor, int> den; // factor -> multiplicity
};

// Combine the terms of an expression over the multiset-max common denominator.
Fraction to_fraction(const MotivicExpression& x) {
    Fraction out;
    std::vector<std::map<DenomFactor, int>> termDens;
    termDens.reserve(x.terms().size());
    for (const auto& t : x.terms()) {
        std::map<DenomFactor, int> m;
        for (const auto& f : t.denom) ++m[f];
        termDens.push_back(std::move(m));
    }
    for (const auto& m : termDens)
        for (const auto& [f, mult] : m) out.den[f] = std::max(out.den[f], mult);
    for (std::size_t i = 0; i < x.terms().size(); ++i) {
        LaurentLT part = x.terms()[i].numer;
        for (const auto& [f, mult] : out.den) {
            auto it = termDens[i].find(f);
            const int have = it == termDens[i].end() ? 0 : it->second;
            for (int j = have; j < mult; ++j) part = part * factor_poly(f);
        }
        out.num += part;
    }
    return out;
}

} // namespace

bool motivic_equal(const MotivicExpression& x, const MotivicExpression& y) {
    Fraction fx = to_fraction(x);
    Fraction fy = to_fraction(y);
    // Cancel the shared part of the denominators before cross-multiplying.
    for (auto& [f, mult] : fx.den) {
        auto it = fy.den.find(f);
        if (it == fy.den.end()) continue;
        const int common = std::min(mult, it->second);
        mult -= common;
        it->second -= common;
    }
    LaurentLT lhs = fx.num;
    for (const auto& [f, mult] : fy.den)
        for (int j = 0; j < mult; ++j) lhs = lhs * factor_poly(f);
    LaurentLT rhs = fy.num;
    for (const auto& [f, mult] : fx.den)
        for (int j = 0; j < mult; ++j) rhs = rhs * factor_poly(f);
    return lhs == rhs;
}

// ---------------------------------------------------------------------------
// T-series expansion.

namespace {

// Geometric series of 1/(1 - L^(-a) T^b), b >= 1, up to T^tBound.
LaurentLT geometric_t(const DenomFactor& f, long long tBound) {
    LaurentLT s;
    for (long long j = 0; j * f.b <= tBound; ++j) s.add_monomial(1, -f.a * j, f.b * j);
    return s;
}

// Power series of 1/(1 - L^(-a)), a > 0, down to L-exponent lMin.
LaurentLT geometric_l(const DenomFactor& f, long long lMin) {
    LaurentLT s;
    for (long long j = 0; -f.a * j >= lMin; ++j) s.add_monomial(1, -f.a * j, 0);
    return s;
}

} // namespace

LaurentLT motivic_series(const MotivicExpression& x, long long tBound) {
    LaurentLT result;
    for (const auto& t : x.terms()) {
        LaurentLT acc = t.numer.truncate_t(tBound);
        for (const auto& f : t.denom) {
            if (f.b == 0) throw std::domain_error("not T-expandable: denominator factor constant in T");
            acc = acc.mul_truncated(geometric_t(f, tBound), tBound,
                                    std::numeric_limits<long long>::min());
        }
        result += acc;
    }
    return result;
}

LaurentLT motivic_series_truncated(const MotivicExpression& x, long long tBound, long long lBound) {
    LaurentLT result;
    for (const auto& t : x.terms()) {
        // Margin: positive L-exponents can only come from the numerator and
        // from factors with a < 0 (which contribute at most floor(tBound/b)
        // steps). Intermediate truncation below -(lBound + margin) is exact.
        long long margin = std::max<long long>(0, t.numer.max_l_exponent());
        for (const auto& f : t.denom) {
            if (f.b == 0 && f.a < 0)
                throw std::domain_error("not expandable: factor (1 - L^k), k > 0, constant in T");
            if (f.b > 0 && f.a < 0) margin += (-f.a) * (tBound / f.b);
        }
        const long long lMin = -(lBound + margin);
        LaurentLT acc = t.numer.truncate_t(tBound).truncate_l_below(lMin);
        for (const auto& f : t.denom) {
            const LaurentLT g = f.b == 0 ? geometric_l(f, lMin) : geometric_t(f, tBound);
            acc = acc.mul_truncated(g, tBound, lMin);
        }
        result += acc.truncate_l_below(-lBound);
    }
    return result.truncate_l_below(-lBound);
}

// ---------------------------------------------------------------------------
// Euler specialization via the expansion L = exp(h).

namespace {

// Truncated power series in h with coefficients in Q(s).
using HSeries = std::vector<RationalFunction>; // index = h-order, size = order+1

HSeries hseries_zero(std::size_t order) { return HSeries(order + 1); }

HSeries hseries_mul(const HSeries& a, const HSeries& b) {
    HSeries r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; i + j < r.size() && j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
    return r;
}

// Reciprocal of a series with invertible constant term.
HSeries hseries_inverse(const HSeries& a) {
    HSeries r(a.size());
    if (a[0].is_zero()) throw std::domain_error("series inverse with zero constant term");
    r[0] = a[0].reciprocal();
    for (std::size_t n = 1; n < a.size(); ++n) {
        RationalFunction acc;
        for (std::size_t k = 1; k <= n; ++k) acc = acc + a[k] * r[n - k];
        r[n] = -(acc * r[0]);
    }
    return r;
}

// exp(E*h) to the requested order, E a polynomial in s.
HSeries hseries_exp(const Poly& E, std::size_t order) {
    HSeries r(order + 1);
    r[0] = RationalFunction(Poly::constant(1));
    Poly power = Poly::constant(1);
    BigRational factorial = 1;
    for (std::size_t m = 1; m <= order; ++m) {
        power = power * E;
        factorial *= BigRational(static_cast<long long>(m));
        r[m] = RationalFunction(power * (BigRational(1) / factorial));
    }
    return r;
}

} // namespace

RationalFunction euler_specialize(const MotivicExpression& x) {
    RationalFunction total;
    for (const auto& t : x.terms()) {
        const std::size_t k = t.denom.size();
        // Numerator: each monomial c L^alpha T^beta becomes c exp((alpha - beta s) h).
        HSeries numer = hseries_zero(k);
        for (const auto& [key, c] : t.numer.coeffs()) {
            const Poly E = Poly::linear(BigRational(key.l), BigRational(-key.t));
            HSeries mono = hseries_exp(E, k);
            const RationalFunction cr = RationalFunction::from_rational(BigRational(c));
            for (std::size_t m = 0; m <= k; ++m) numer[m] = numer[m] + cr * mono[m];
        }
        // Each factor 1 - exp(-(a + b s) h) = (a + b s) h * B(h), B(0) = 1.
        RationalFunction linearPart = RationalFunction(Poly::constant(1));
        HSeries bracket(k + 1);
        bracket[0] = RationalFunction(Poly::constant(1));
        for (const auto& f : t.denom) {
            const Poly lin = Poly::linear(BigRational(f.a), BigRational(f.b));
            linearPart = linearPart * RationalFunction(lin);
            HSeries B(k + 1);
            Poly power = Poly::constant(1);
            BigRational factorial = 1; // (m+1)! accumulates below
            for (std::size_t m = 0; m <= k; ++m) {
                if (m > 0) power = power * lin;
                factorial *= BigRational(static_cast<long long>(m + 1));
                const BigRational sign = (m % 2 == 0) ? 1 : -1;
                B[m] = RationalFunction(power * (sign / factorial));
            }
            bracket = hseries_mul(bracket, B);
        }
        const HSeries series = hseries_mul(numer, hseries_inverse(bracket));
        // Term = h^(-k) * series / linearPart; orders below h^0 must vanish.
        for (std::size_t m = 0; m < k; ++m)
            if (!series[m].is_zero()) throw std::domain_error("divergent specialization");
        total = total + series[k] / linearPart;
    }
    return total;
}

} // namespace suspzeta
