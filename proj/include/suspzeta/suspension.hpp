#pragma once

#include "suspzeta/zeta.hpp"

namespace suspzeta {

/// Parameters of the suspension G = z^p (z^Q - f) with form
/// x^nu z^(nuz) dx/x dz/z; d is the ambient dimension of f's space (used by
/// the pole bounds only).
struct SuspensionParams {
    long long Q = 1;
    long long p = 0;
    long long nuz = 1;
    long long d = 1;
};

/// Z_top(G, omega_{d+1}, s) from the bundle {Z^(e)(f, omega_d, .)}:
/// 1/(Qr) + U(r,s) Z(f at r) - (s/(s+1)) sum_{1 != e | Q} (J_2(e)/Q) Z^(e)(f at r),
/// with r = ((Q+p)s + nu_z)/Q and U = s/(r(nu_z + p s)) - (s/(s+1))/Q.
RationalFunction suspend_G(const ZetaBundle& bundle, const SuspensionParams& params,
                           std::vector<std::string>* warnings = nullptr);

/// Z_top(F, s) for F = z^Q - f (p = 0, nu_z = 1), solved from
/// (s+1)/s Z(F) = (s+1)/(Qst) + ((Q-1)/Q)((t+1)/t) Z(f,t) - sum_{1 != e | Q} (J_2(e)/Q) Z^(e)(f,t),
/// with t = s + 1/Q.
RationalFunction suspend_F_untwisted(const ZetaBundle& bundle, long long Q,
                                     std::vector<std::string>* warnings = nullptr);

/// The l-twisted suspension zeta: case l = 1 delegates to the untwisted
/// formula; 1 != l | Q uses the divisor-case formula; l does not divide Q uses
/// the lcm(e, g) formula with g the generator of D(Q, l_1).
RationalFunction suspend_F_twisted(const ZetaBundle& bundle, long long Q, long long l,
                                   std::vector<std::string>* warnings = nullptr);

/// B = Q*Id - J over the divisors of Q (ascending, 1 first); every row of J is
/// the vector (J_2(l_1), ..., J_2(l_k)).
struct SuspensionMatrix {
    std::vector<long long> divisors;
    std::vector<std::vector<long long>> B;
};

SuspensionMatrix suspension_matrix(long long Q);

/// Componentwise check of Q * ZF(s) = (1/t) A + B * Zf(t) with
/// ZF = ((s+1)/s Z(F), Z^(l_2)(F), ...), Zf = ((t+1)/t Z(f,t), Z^(l_2)(f,t), ...),
/// A = ((s+1)/s, 1, ..., 1).
struct MatrixIdentityCheck {
    SuspensionMatrix matrix;
    std::vector<RationalFunction> lhs;
    std::vector<RationalFunction> rhs;
    bool equal = false;
};

MatrixIdentityCheck suspension_matrix_identity(const ZetaBundle& bundle, long long Q);

/// Candidate pole superset for Z(G, z^d dx dz):
/// {-1, -(d+1)/(Q+p)} [and -(d+1)/p when p > 0] plus {(rho0 Q - d - 1)/(Q+p)}.
std::set<BigRational> pole_bound_G(const std::set<BigRational>& polesOfF, const SuspensionParams& params);

/// Candidate pole superset for Z(F, dx dz): {-1, -1/Q} plus {rho0 - 1/Q}.
std::set<BigRational> pole_bound_F(const std::set<BigRational>& polesOfF, long long Q);

/// The historical (incorrect for composite Q) suspension formula:
/// ((Q-1)/Q)(s/(s+1))((t+1)/t) Z(f,t)
///   - (s/(s+1)) sum_{1 != e | Q} ((e+1)phi(e)/Q) Z^(e)(f,t) + 1/(Qt).
RationalFunction legacy_formula(const ZetaBundle& bundle, long long Q,
                                std::vector<std::string>* warnings = nullptr);

/// Closed-form difference, on the Fermat family, between the correct formula
/// and the historical one:
/// ((Q-2)s/(Q(s+1)(Qs+3))) ((Q+1)(Q-1) - sum_{1 != e | Q} (e+1)phi(e)).
/// Vanishes iff Q is prime.
RationalFunction fermat_discrepancy(long long Q);

/// Resolution of the plane curve y^Q + z^Q = 0 (one blow-up): E1 with data
/// (Q, 2) and chi(E1°) = 2 - Q, crossed by Q strict-transform lines (1, 1)
/// with chi = 1 each.
ResolutionData fermat_curve_resolution(long long Q);

} // namespace suspzeta
