#pragma once

#include "suspzeta/cones.hpp"
#include "suspzeta/format.hpp"

#include <random>

namespace suspzeta::testing {

inline RationalFunction rf(const std::string& text) { return parse_rational_expr(text, "s"); }

inline StratumProfile profile(std::vector<long long> N, std::vector<long long> nu, long long Q,
                              long long p = 0, long long nuz = 1) {
    StratumProfile out;
    out.N = std::move(N);
    out.nu = std::move(nu);
    out.Q = Q;
    out.p = p;
    out.nuz = nuz;
    return out;
}

/// Brute-force interior lattice sum of x^b under a monomial substitution:
/// the independent oracle for cone generating functions. Enumerates the box
/// [1, lBound]^dim (enough because every coordinate contributes at least
/// L^(-1)) and keeps monomials with T-degree <= tBound, L-exponent >= -lBound.
template <typename Predicate>
LaurentLT interior_sum(std::size_t dim, const MonomialSubst& subst, long long tBound, long long lBound,
                       Predicate&& insideOpenCone) {
    LaurentLT sum;
    std::vector<long long> b(dim, 1);
    while (true) {
        if (insideOpenCone(b)) {
            long long lexp = 0, texp = 0;
            for (std::size_t j = 0; j < dim; ++j) {
                lexp += b[j] * subst[j].first;
                texp += b[j] * subst[j].second;
            }
            if (texp <= tBound && lexp >= -lBound) sum.add_monomial(1, lexp, texp);
        }
        std::size_t j = 0;
        while (j < dim && b[j] == lBound) {
            b[j] = 1;
            ++j;
        }
        if (j == dim) break;
        ++b[j];
    }
    return sum;
}

inline StratumProfile random_profile(std::mt19937& rng, bool corollaryHypothesis = false) {
    std::uniform_int_distribution<int> sizeDist(1, 3), nDist(1, 10), nuDist(1, 4), qDist(1, 10),
        pDist(0, 3);
    StratumProfile out;
    const int k = sizeDist(rng);
    for (int i = 0; i < k; ++i) {
        out.N.push_back(nDist(rng));
        out.nu.push_back(nuDist(rng));
    }
    out.Q = qDist(rng);
    out.p = corollaryHypothesis ? 0 : pDist(rng);
    out.nuz = corollaryHypothesis ? 1 : nuDist(rng);
    return out;
}

} // namespace suspzeta::testing
