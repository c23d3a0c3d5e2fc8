#include "suspzeta/zeta.hpp"

#include <algorithm>
#include <stdexcept>

namespace suspzeta {

StratumParts<MotivicExpression> stratum_naive_motivic(const StratumProfile& profile) {
    profile.validate();
    if (profile.size() == 0) throw std::invalid_argument("stratum contributions require nonempty I");
    const std::size_t k = profile.size();
    const long long eI = profile.eI();

    // x_k -> L^(-nu_k) T^(N_k), z -> L^(-nu_z) T^p
    MonomialSubst substN;
    for (std::size_t i = 0; i < k; ++i) substN.emplace_back(-profile.nu[i], profile.N[i]);
    substN.emplace_back(-profile.nuz, profile.p);
    // x_k -> L^(-nu_k), z -> L^(-nu_z) T^(Q+p): on sigma- the T-weight only
    // counts b_z.
    MonomialSubst substMinus;
    for (std::size_t i = 0; i < k; ++i) substMinus.emplace_back(-profile.nu[i], 0);
    substMinus.emplace_back(-profile.nuz, profile.Q + profile.p);

    const ConeSpec sigmaPlus = cone_sigma_plus(profile);
    const ConeSpec rho = cone_rho(profile);
    const ConeSpec orthant = cone_orthant(k + 1);

    const LaurentLT lm1 = LaurentLT::l_minus_one();
    const LaurentLT lm1_k1 = lm1.pow(static_cast<unsigned>(k + 1));
    const LaurentLT rhoScale = lm1.pow(static_cast<unsigned>(k)) *
                               (lm1 - LaurentLT::monomial(eI, 0, 0)); // (L-1)^|I| (L-1-e_I)

    StratumParts<MotivicExpression> w;
    w.sigma_plus = cone_generating_function(sigmaPlus, substN).scaled(lm1_k1);
    const MotivicExpression phiRhoN = cone_generating_function(rho, substN);
    w.rho = phiRhoN.scaled(rhoScale);
    // e_I (L-1)^(|I|+1) * L^(-1) T / (1 - L^(-1) T) * Phi_rho
    w.rho_star = phiRhoN.times_term(lm1_k1 * LaurentLT::monomial(eI, -1, 1), {DenomFactor{1, 1}});
    w.sigma_minus = (cone_generating_function(orthant, substMinus) -
                     cone_generating_function(sigmaPlus, substMinus) -
                     cone_generating_function(rho, substMinus))
                        .scaled(lm1_k1);
    return w;
}

StratumParts<LaurentLT> lattice_series_oracle(const StratumProfile& profile, long long tBound,
                                              long long lBound) {
    profile.validate();
    if (profile.size() == 0) throw std::invalid_argument("lattice oracle requires nonempty I");
    const std::size_t k = profile.size();
    const long long eI = profile.eI();
    // Multiplying the raw sums by (L-1)^(|I|+1) raises L-exponents by up to
    // |I|+1, so collect raw monomials down to -(lBound + |I| + 1).
    const long long wBound = lBound + static_cast<long long>(k) + 1;

    LaurentLT rawPlus, rawMinus, rawRho, rawRhoStar;
    std::vector<long long> b(k + 1, 1);
    while (true) {
        long long weight = 0; // <b, nu> over I_z
        for (std::size_t i = 0; i < k; ++i) weight += b[i] * profile.nu[i];
        weight += b[k] * profile.nuz;
        if (weight <= wBound) {
            long long bn = 0; // <b, N> over I_z with N_z = p
            for (std::size_t i = 0; i < k; ++i) bn += b[i] * profile.N[i];
            bn += b[k] * profile.p;
            const long long bz = (profile.Q + profile.p) * b[k];
            if (bn < bz) {
                if (bn <= tBound) rawPlus.add_monomial(1, -weight, bn);
            } else if (bn > bz) {
                if (bz <= tBound) rawMinus.add_monomial(1, -weight, bz);
            } else {
                if (bn <= tBound) rawRho.add_monomial(1, -weight, bn);
                for (long long i = 1; bn + i <= tBound && weight + i <= wBound; ++i)
                    rawRhoStar.add_monomial(1, -weight - i, bn + i);
            }
        }
        // Advance the box point; prune nothing here, the weight test above is
        // the effective bound (nu >= 1 so each coordinate is <= wBound).
        std::size_t j = 0;
        while (j <= k && b[j] == wBound) {
            b[j] = 1;
            ++j;
        }
        if (j > k) break;
        ++b[j];
    }

    const LaurentLT lm1 = LaurentLT::l_minus_one();
    const LaurentLT lm1_k1 = lm1.pow(static_cast<unsigned>(k + 1));
    const LaurentLT rhoScale = lm1.pow(static_cast<unsigned>(k)) *
                               (lm1 - LaurentLT::monomial(eI, 0, 0));

    StratumParts<LaurentLT> out;
    out.sigma_plus = (lm1_k1 * rawPlus).truncate_l_below(-lBound);
    out.sigma_minus = (lm1_k1 * rawMinus).truncate_l_below(-lBound);
    out.rho = (rhoScale * rawRho).truncate_l_below(-lBound);
    out.rho_star = (LaurentLT::monomial(eI, 0, 0) * lm1_k1 * rawRhoStar).truncate_l_below(-lBound);
    return out;
}

StratumParts<RationalFunction> stratum_topological(const StratumProfile& profile) {
    profile.validate();
    if (profile.size() == 0) throw std::invalid_argument("stratum contributions require nonempty I");
    const long long Q = profile.Q, p = profile.p, nuz = profile.nuz;
    const BigRational eI2 = BigRational(profile.eI()) * profile.eI();

    // r = ((Q+p) s + nu_z) / Q; all parts share prod_k 1/(N_k r + nu_k).
    const RationalFunction r = RationalFunction::linear(BigRational(nuz, Q), BigRational(Q + p, Q));
    RationalFunction prodInv = RationalFunction::from_rational(1);
    BigRational prodNuInv = 1;
    for (std::size_t i = 0; i < profile.size(); ++i) {
        const RationalFunction lin =
            RationalFunction::linear(BigRational(profile.N[i]) * BigRational(nuz, Q) + profile.nu[i],
                                     BigRational(profile.N[i]) * BigRational(Q + p, Q));
        prodInv = prodInv / lin;
        prodNuInv /= BigRational(profile.nu[i]);
    }

    StratumParts<RationalFunction> w;
    const RationalFunction sPlusOne = RationalFunction::linear(1, 1);
    w.sigma_plus = RationalFunction::linear(BigRational(nuz), BigRational(p)).reciprocal() * prodInv;
    w.sigma_minus = (BigRational(1, Q) * r.reciprocal()) *
                    (RationalFunction::from_rational(prodNuInv) - prodInv);
    w.rho = RationalFunction::from_rational(-eI2 / Q) * prodInv;
    w.rho_star = RationalFunction::from_rational(eI2 / Q) * prodInv / sPlusOne;
    return w;
}

StratumParts<RationalFunction> stratum_twisted_topological(const StratumProfile& profile, long long e) {
    if (profile.p != 0 || profile.nuz != 1)
        throw std::domain_error("corollary hypothesis violated: twisted gating requires p = 0 and nu_z = 1");
    if (e < 1) throw std::invalid_argument("twist order must be >= 1");
    const StratumParts<RationalFunction> base = stratum_topological(profile);
    const long long NI = profile.NI();
    StratumParts<RationalFunction> w;
    if (NI % e == 0) w.sigma_plus = base.sigma_plus;
    if (profile.Q % e == 0) w.sigma_minus = base.sigma_minus;
    if (ll_lcm(profile.Q, NI) % e == 0) w.rho = base.rho;
    // rho* never survives a twist.
    return w;
}

void ResolutionData::validate() const {
    std::set<std::string> ids;
    for (const auto& d : divisors) {
        if (d.id.empty()) throw std::invalid_argument("divisor with empty id");
        if (!ids.insert(d.id).second) throw std::invalid_argument("duplicate divisor id: " + d.id);
        if (d.N < 1) throw std::invalid_argument("divisor " + d.id + ": multiplicity must be >= 1");
        if (d.nu < 1) throw std::invalid_argument("divisor " + d.id + ": discrepancy must be >= 1");
    }
    for (const auto& s : strata) {
        if (s.divisor_ids.empty()) throw std::invalid_argument("stratum with empty divisor set");
        std::set<std::string> seen;
        for (const auto& id : s.divisor_ids) {
            if (!ids.count(id)) throw std::invalid_argument("stratum references unknown divisor id: " + id);
            if (!seen.insert(id).second)
                throw std::invalid_argument("stratum lists divisor twice: " + id);
        }
    }
}

const ResolutionDivisor& ResolutionData::divisor(const std::string& id) const {
    for (const auto& d : divisors)
        if (d.id == id) return d;
    throw std::invalid_argument("unknown divisor id: " + id);
}

RationalFunction resolution_topological(const ResolutionData& res, long long twist) {
    res.validate();
    if (twist < 1) throw std::invalid_argument("twist order must be >= 1");
    RationalFunction total;
    for (const auto& stratum : res.strata) {
        RationalFunction term = RationalFunction::from_rational(BigRational(stratum.euler));
        bool gated = true;
        for (const auto& id : stratum.divisor_ids) {
            const auto& d = res.divisor(id);
            if (twist > 1 && d.N % twist != 0) {
                gated = false;
                break;
            }
            term = term / RationalFunction::linear(BigRational(d.nu), BigRational(d.N));
        }
        if (gated) total = total + term;
    }
    return total;
}

MotivicExpression resolution_naive_motivic(const ResolutionData& res) {
    res.validate();
    MotivicExpression total;
    for (const auto& stratum : res.strata) {
        if (!stratum.class_in_L)
            throw std::domain_error("naive motivic zeta needs a class [E_I°] on every stratum");
        MotivicTerm term;
        term.numer = *stratum.class_in_L;
        for (const auto& id : stratum.divisor_ids) {
            const auto& d = res.divisor(id);
            // (L-1) T^N / (L^nu - T^N) = (L-1) L^(-nu) T^N / (1 - L^(-nu) T^N)
            term.numer = term.numer * (LaurentLT::l_minus_one() * LaurentLT::monomial(1, -d.nu, d.N));
            term.denom.push_back(DenomFactor{d.nu, d.N});
        }
        total = total + MotivicExpression::from_term(std::move(term));
    }
    return total;
}

BigRational resolution_at_zero(const ResolutionData& res) {
    res.validate();
    BigRational total = 0;
    for (const auto& stratum : res.strata) {
        BigRational term = stratum.euler;
        for (const auto& id : stratum.divisor_ids) term /= BigRational(res.divisor(id).nu);
        total += term;
    }
    return total;
}

bool check_z_at_zero(const ResolutionData& res) { return resolution_at_zero(res) == 1; }

void ZetaBundle::set(long long twist, RationalFunction z) {
    if (twist < 1) throw std::invalid_argument("twist order must be >= 1");
    entries_[twist] = std::move(z);
}

RationalFunction ZetaBundle::get(long long twist, std::vector<std::string>* warnings) const {
    auto it = entries_.find(twist);
    if (it != entries_.end()) return it->second;
    if (warnings) warnings->push_back("twist " + std::to_string(twist) + " absent from bundle, using 0");
    return RationalFunction();
}

ZetaBundle bundle_from_resolution(const ResolutionData& res, const std::set<long long>& twists) {
    if (!twists.count(1)) throw std::invalid_argument("bundle requires the untwisted entry (twist 1)");
    ZetaBundle bundle;
    for (long long e : twists) bundle.set(e, resolution_topological(res, e));
    return bundle;
}

} // namespace suspzeta
