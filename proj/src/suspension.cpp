#include "suspzeta/suspension.hpp"

#include "suspzeta/arith.hpp"

#include <stdexcept>

namespace suspzeta {

namespace {

void check_Q(long long Q) {
    if (Q < 1) throw std::invalid_argument("Q must be >= 1");
}

RationalFunction at_t(const ZetaBundle& bundle, long long twist, long long Q,
                      std::vector<std::string>* warnings) {
    return bundle.get(twist, warnings).substitute_affine(1, BigRational(1, Q));
}

} // namespace

RationalFunction suspend_G(const ZetaBundle& bundle, const SuspensionParams& params,
                           std::vector<std::string>* warnings) {
    check_Q(params.Q);
    if (params.p < 0 || params.nuz < 1) throw std::invalid_argument("suspend_G: p >= 0 and nu_z >= 1");
    const long long Q = params.Q, p = params.p, nuz = params.nuz;
    const BigRational alpha(Q + p, Q), beta(nuz, Q);

    const RationalFunction s = RationalFunction::variable();
    const RationalFunction r = RationalFunction::linear(beta, alpha);
    const RationalFunction sOverS1 = s / RationalFunction::linear(1, 1);
    const RationalFunction U =
        s / (r * RationalFunction::linear(BigRational(nuz), BigRational(p))) - sOverS1 * BigRational(1, Q);

    RationalFunction z = (BigRational(1, Q) * r.reciprocal()) +
                         U * bundle.get(1, warnings).substitute_affine(alpha, beta);
    for (long long e : divisors(Q)) {
        if (e == 1) continue;
        z = z - sOverS1 * BigRational(jordan_totient(2, e), Q) *
                    bundle.get(e, warnings).substitute_affine(alpha, beta);
    }
    return z;
}

RationalFunction suspend_F_untwisted(const ZetaBundle& bundle, long long Q,
                                     std::vector<std::string>* warnings) {
    check_Q(Q);
    const RationalFunction s = RationalFunction::variable();
    const RationalFunction t = RationalFunction::linear(BigRational(1, Q), 1);
    const RationalFunction sPlus1 = RationalFunction::linear(1, 1);

    RationalFunction rhs = sPlus1 / (BigRational(Q) * s * t) +
                           BigRational(Q - 1, Q) * ((t + RationalFunction::from_rational(1)) / t) *
                               at_t(bundle, 1, Q, warnings);
    for (long long e : divisors(Q)) {
        if (e == 1) continue;
        rhs = rhs - BigRational(jordan_totient(2, e), Q) * at_t(bundle, e, Q, warnings);
    }
    return (s / sPlus1) * rhs;
}

RationalFunction suspend_F_twisted(const ZetaBundle& bundle, long long Q, long long l,
                                   std::vector<std::string>* warnings) {
    check_Q(Q);
    if (l < 1) throw std::invalid_argument("twist order must be >= 1");
    if (l == 1) return suspend_F_untwisted(bundle, Q, warnings);

    const RationalFunction t = RationalFunction::linear(BigRational(1, Q), 1);
    if (Q % l == 0) {
        RationalFunction z = (BigRational(1, Q) * t.reciprocal()) + at_t(bundle, l, Q, warnings) -
                             ((t + RationalFunction::from_rational(1)) / (BigRational(Q) * t)) *
                                 at_t(bundle, 1, Q, warnings);
        for (long long e : divisors(Q)) {
            if (e == 1) continue;
            z = z - BigRational(jordan_totient(2, e), Q) * at_t(bundle, e, Q, warnings);
        }
        return z;
    }
    // l does not divide Q: the modulus is the generator g = l_1 m of D(Q, l_1).
    const long long g = twist_reduction(Q, l).generator;
    RationalFunction z = at_t(bundle, l, Q, warnings);
    for (long long e : divisors(Q))
        z = z - BigRational(jordan_totient(2, e), Q) * at_t(bundle, ll_lcm(e, g), Q, warnings);
    return z;
}

SuspensionMatrix suspension_matrix(long long Q) {
    check_Q(Q);
    SuspensionMatrix m;
    m.divisors = divisors(Q);
    const std::size_t n = m.divisors.size();
    m.B.assign(n, std::vector<long long>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            m.B[i][j] = -jordan_totient(2, m.divisors[j]);
            if (i == j) m.B[i][j] += Q;
        }
    return m;
}

MatrixIdentityCheck suspension_matrix_identity(const ZetaBundle& bundle, long long Q) {
    check_Q(Q);
    MatrixIdentityCheck out;
    out.matrix = suspension_matrix(Q);
    const auto& divs = out.matrix.divisors;
    const std::size_t n = divs.size();

    const RationalFunction s = RationalFunction::variable();
    const RationalFunction t = RationalFunction::linear(BigRational(1, Q), 1);
    const RationalFunction one = RationalFunction::from_rational(1);

    std::vector<RationalFunction> ZF(n), Zf(n), A(n);
    ZF[0] = ((s + one) / s) * suspend_F_untwisted(bundle, Q);
    Zf[0] = ((t + one) / t) * at_t(bundle, 1, Q, nullptr);
    A[0] = (s + one) / s;
    for (std::size_t i = 1; i < n; ++i) {
        ZF[i] = suspend_F_twisted(bundle, Q, divs[i]);
        Zf[i] = at_t(bundle, divs[i], Q, nullptr);
        A[i] = one;
    }

    out.lhs.resize(n);
    out.rhs.resize(n);
    out.equal = true;
    for (std::size_t i = 0; i < n; ++i) {
        out.lhs[i] = BigRational(Q) * ZF[i];
        RationalFunction acc = A[i] / t;
        for (std::size_t j = 0; j < n; ++j)
            acc = acc + BigRational(out.matrix.B[i][j]) * Zf[j];
        out.rhs[i] = acc;
        if (out.lhs[i] != out.rhs[i]) out.equal = false;
    }
    return out;
}

std::set<BigRational> pole_bound_G(const std::set<BigRational>& polesOfF, const SuspensionParams& params) {
    check_Q(params.Q);
    std::set<BigRational> out;
    out.insert(BigRational(-1));
    out.insert(BigRational(-(params.d + 1), params.Q + params.p));
    if (params.p > 0) out.insert(BigRational(-(params.d + 1), params.p));
    for (const auto& rho0 : polesOfF)
        out.insert((rho0 * params.Q - params.d - 1) / BigRational(params.Q + params.p));
    return out;
}

std::set<BigRational> pole_bound_F(const std::set<BigRational>& polesOfF, long long Q) {
    check_Q(Q);
    std::set<BigRational> out;
    out.insert(BigRational(-1));
    out.insert(BigRational(-1, Q));
    for (const auto& rho0 : polesOfF) out.insert(rho0 - BigRational(1, Q));
    return out;
}

RationalFunction legacy_formula(const ZetaBundle& bundle, long long Q,
                                std::vector<std::string>* warnings) {
    check_Q(Q);
    const RationalFunction s = RationalFunction::variable();
    const RationalFunction t = RationalFunction::linear(BigRational(1, Q), 1);
    const RationalFunction sOverS1 = s / RationalFunction::linear(1, 1);

    RationalFunction z = BigRational(Q - 1, Q) * sOverS1 *
                             ((t + RationalFunction::from_rational(1)) / t) * at_t(bundle, 1, Q, warnings) +
                         BigRational(1, Q) * t.reciprocal();
    for (long long e : divisors(Q)) {
        if (e == 1) continue;
        z = z - sOverS1 * BigRational((e + 1) * euler_phi(e), Q) * at_t(bundle, e, Q, warnings);
    }
    return z;
}

RationalFunction fermat_discrepancy(long long Q) {
    if (Q < 2) throw std::invalid_argument("fermat_discrepancy requires Q >= 2");
    long long sum = 0;
    for (long long e : divisors(Q))
        if (e != 1) sum += (e + 1) * euler_phi(e);
    const long long factor = (Q + 1) * (Q - 1) - sum;
    // (Q-2) s / (Q (s+1) (Qs+3)) * factor
    const RationalFunction s = RationalFunction::variable();
    return BigRational((Q - 2) * factor, Q) * s /
           (RationalFunction::linear(1, 1) * RationalFunction::linear(3, Q));
}

ResolutionData fermat_curve_resolution(long long Q) {
    check_Q(Q);
    ResolutionData res;
    res.divisors.push_back({"E1", Q, 2});
    res.strata.push_back({{"E1"}, 2 - Q, std::nullopt});
    for (long long j = 1; j <= Q; ++j) {
        const std::string id = "S" + std::to_string(j);
        res.divisors.push_back({id, 1, 1});
        res.strata.push_back({{"E1", id}, 1, std::nullopt});
    }
    return res;
}

} // namespace suspzeta
