#pragma once

#include "suspzeta/motivic.hpp"

#include <vector>

namespace suspzeta {

/// Numerical data of one resolution stratum in the suspension setting:
/// g = z^p (z^Q - prod x_k^{N_k}), omega = x^nu z^{nuz} dx/x dz/z.
/// Coordinates are indexed by I (size |I|) followed by z.
struct StratumProfile {
    std::vector<long long> N;  // multiplicities N_k, k in I
    std::vector<long long> nu; // discrepancies nu_k, k in I
    long long Q = 1;
    long long p = 0;    // = N_z
    long long nuz = 1;  // = nu_z

    std::size_t size() const { return N.size(); }
    void validate() const;

    long long e(std::size_t k) const;  // gcd(Q, N_k)
    long long NI() const;              // gcd over k in I of N_k (0 when I empty)
    long long eI() const;              // gcd(Q, N_I)
};

/// Simplicial (or, for assembled differences, general) rational cone described
/// by primitive integer quasi-generators.
struct ConeSpec {
    std::size_t ambient_dim = 0;
    std::vector<std::vector<long long>> generators; // each of length ambient_dim
    bool simplicial = true;
};

/// Quasi-generators v_i = (Q e_i + N_i e_z)/e_i for i in I, plus e_z.
ConeSpec cone_sigma_plus(const StratumProfile& profile);
/// The |I| vectors v_i (codimension-one cone in R^{I_z}).
ConeSpec cone_rho(const StratumProfile& profile);
/// The full orthant with unit quasi-generators.
ConeSpec cone_orthant(std::size_t dim);

/// |det| of the generator matrix when square, gcd of the maximal minors
/// otherwise. Throws on non-simplicial input.
BigInt cone_multiplicity(const ConeSpec& cone);

/// Lattice points of { sum lambda_i a_i : lambda_i in (0, 1] }; their number
/// equals the cone multiplicity and the sum of generators always belongs.
std::vector<std::vector<long long>> fundamental_domain(const ConeSpec& cone);

/// Per-coordinate substitution x_j -> L^(lexp_j) T^(texp_j), texp_j >= 0.
using MonomialSubst = std::vector<std::pair<long long, long long>>;

/// Phi_C under the substitution: P_C(subst) * prod_i (1 - subst^(a_i))^(-1),
/// summing over the open cone.
MotivicExpression cone_generating_function(const ConeSpec& cone, const MonomialSubst& subst);

enum class ConeRegion { SigmaPlus, SigmaMinus, Rho };

/// Membership of a strictly positive lattice vector (length |I|+1, z last) in
/// the open region, by the defining inequality <b,N> vs (Q+p) b_z.
bool region_contains(const StratumProfile& profile, const std::vector<long long>& b, ConeRegion region);

/// Closed forms of Prop. "N(bullet)": gcd N over I_z for sigma+, Q+p for
/// sigma-, lcm(gcd N_I, Q) (Q+p)/Q for rho.
long long cone_gcd_invariant(const StratumProfile& profile, ConeRegion region);

/// gcd of min(<a,(Q+p)e_z>, <a,N>) over lattice points of the open region with
/// entries <= bound; 0 when the box holds no such point. Oracle counterpart of
/// cone_gcd_invariant.
long long cone_gcd_invariant_bruteforce(const StratumProfile& profile, ConeRegion region, long long bound);

} // namespace suspzeta
