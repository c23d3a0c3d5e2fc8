#pragma once

#include "suspzeta/cones.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>

namespace suspzeta {

/// The four summands W^{sigma+}, W^{sigma-}, W^{rho}, W^{rho*} of a stratum
/// zeta function.
template <typename T>
struct StratumParts {
    T sigma_plus{};
    T sigma_minus{};
    T rho{};
    T rho_star{};

    T total() const { return sigma_plus + sigma_minus + rho + rho_star; }
};

/// Naive motivic stratum contributions in factored form, assembled from the
/// cone generating functions (the sigma- part is the three-term
/// inclusion-exclusion expression).
StratumParts<MotivicExpression> stratum_naive_motivic(const StratumProfile& profile);

/// Direct lattice sums of the per-point classes: sigma+/-: (L-1)^(|I|+1)
/// L^(-<b,nu>) T^(n_b); rho: (L-1)^|I| (L-1-e_I) L^(-<b,nu>) T^(n_b); rho*:
/// e_I (L-1)^(|I|+1) sum_{i>=1} L^(-i-<b,nu>) T^(n_b+i). Truncated at
/// T^tBound and at L-exponent >= -lBound (kept monomials are exact); compare
/// against motivic_series_truncated with the same bounds.
StratumParts<LaurentLT> lattice_series_oracle(const StratumProfile& profile, long long tBound,
                                              long long lBound);

/// Closed-form topological stratum contributions in terms of
/// r = ((Q+p)s + nu_z)/Q, returned as rational functions of s.
StratumParts<RationalFunction> stratum_topological(const StratumProfile& profile);

/// Twist-e gating (requires p = 0 and nu_z = 1): sigma+ survives iff e | N_I,
/// sigma- iff e | Q, rho iff e | lcm(Q, N_I), rho* never.
StratumParts<RationalFunction> stratum_twisted_topological(const StratumProfile& profile, long long e);

/// Embedded-resolution numerical data: divisors with multiplicities and
/// discrepancies, strata with Euler characteristics and optional classes
/// [E_I°] as Laurent polynomials in L.
struct ResolutionDivisor {
    std::string id;
    long long N = 1;
    long long nu = 1;
};

struct ResolutionStratum {
    std::vector<std::string> divisor_ids;
    long long euler = 0;
    std::optional<LaurentLT> class_in_L;
};

struct ResolutionData {
    std::vector<ResolutionDivisor> divisors;
    std::vector<ResolutionStratum> strata;

    void validate() const;
    const ResolutionDivisor& divisor(const std::string& id) const;
};

/// Sum over strata of chi(E_I°) / prod (N_i s + nu_i); for twist e > 1 only
/// strata with e | N_i for every i contribute.
RationalFunction resolution_topological(const ResolutionData& res, long long twist);

/// Sum over strata of [E_I°] prod (L-1) T^(N_i) / (L^(nu_i) - T^(N_i));
/// requires a class on every stratum.
MotivicExpression resolution_naive_motivic(const ResolutionData& res);

/// Value of the resolution formula at s = 0, i.e. sum chi / prod nu_i.
BigRational resolution_at_zero(const ResolutionData& res);
/// True iff the value above equals 1.
bool check_z_at_zero(const ResolutionData& res);

/// Map twist order e >= 1 -> Z_top^(e); twists absent from the map are the
/// zero function.
class ZetaBundle {
public:
    void set(long long twist, RationalFunction z);
    bool has(long long twist) const { return entries_.count(twist) > 0; }
    /// Zero-defaulting lookup; records a warning when the entry is absent.
    RationalFunction get(long long twist, std::vector<std::string>* warnings = nullptr) const;
    const std::map<long long, RationalFunction>& entries() const { return entries_; }

private:
    std::map<long long, RationalFunction> entries_;
};

ZetaBundle bundle_from_resolution(const ResolutionData& res, const std::set<long long>& twists);

} // namespace suspzeta
