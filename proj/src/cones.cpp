#include "suspzeta/cones.hpp"

#include <numeric>
#include <stdexcept>

namespace suspzeta {

void StratumProfile::validate() const {
    if (N.size() != nu.size()) throw std::invalid_argument("profile: N and nu must have equal length");
    if (Q < 1) throw std::invalid_argument("profile: Q must be >= 1");
    if (p < 0) throw std::invalid_argument("profile: p must be >= 0");
    if (nuz < 1) throw std::invalid_argument("profile: nu_z must be >= 1");
    for (long long n : N)
        if (n < 1) throw std::invalid_argument("profile: multiplicities must be >= 1");
    for (long long v : nu)
        if (v < 1) throw std::invalid_argument("profile: discrepancies must be >= 1");
}

long long StratumProfile::e(std::size_t k) const { return ll_gcd(Q, N[k]); }

long long StratumProfile::NI() const {
    long long g = 0;
    for (long long n : N) g = ll_gcd(g, n);
    return g;
}

long long StratumProfile::eI() const { return ll_gcd(Q, NI()); }

namespace {

void require_nonempty(const StratumProfile& profile) {
    profile.validate();
    if (profile.size() == 0) throw std::invalid_argument("cone operations require a nonempty index set I");
}

} // namespace

ConeSpec cone_sigma_plus(const StratumProfile& profile) {
    ConeSpec cone = cone_rho(profile);
    std::vector<long long> ez(cone.ambient_dim, 0);
    ez.back() = 1;
    cone.generators.push_back(std::move(ez));
    return cone;
}

ConeSpec cone_rho(const StratumProfile& profile) {
    require_nonempty(profile);
    const std::size_t k = profile.size();
    ConeSpec cone;
    cone.ambient_dim = k + 1;
    cone.simplicial = true;
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<long long> v(k + 1, 0);
        const long long ei = profile.e(i);
        v[i] = profile.Q / ei;
        v[k] = profile.N[i] / ei;
        cone.generators.push_back(std::move(v));
    }
    return cone;
}

ConeSpec cone_orthant(std::size_t dim) {
    ConeSpec cone;
    cone.ambient_dim = dim;
    cone.simplicial = true;
    for (std::size_t i = 0; i < dim; ++i) {
        std::vector<long long> v(dim, 0);
        v[i] = 1;
        cone.generators.push_back(std::move(v));
    }
    return cone;
}

namespace {

BigInt determinant(std::vector<std::vector<BigRational>> m) {
    const std::size_t n = m.size();
    BigRational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        const BigRational inv = BigRational(1) / m[col][col];
        for (std::size_t row = col + 1; row < n; ++row) {
            if (m[row][col] == 0) continue;
            const BigRational f = m[row][col] * inv;
            for (std::size_t c = col; c < n; ++c) m[row][c] -= f * m[col][c];
        }
    }
    // Generators are integral, so the determinant is an integer.
    if (denominator_of(det) != 1) throw std::logic_error("non-integral determinant");
    return numerator_of(det);
}

BigInt square_minor(const ConeSpec& cone, const std::vector<std::size_t>& cols) {
    std::vector<std::vector<BigRational>> m(cone.generators.size(),
                                            std::vector<BigRational>(cols.size()));
    for (std::size_t i = 0; i < cone.generators.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) m[i][j] = cone.generators[i][cols[j]];
    return determinant(std::move(m));
}

} // namespace

BigInt cone_multiplicity(const ConeSpec& cone) {
    if (!cone.simplicial) throw std::invalid_argument("cone_multiplicity requires a simplicial cone");
    const std::size_t k = cone.generators.size();
    const std::size_t d = cone.ambient_dim;
    if (k == d) {
        std::vector<std::size_t> cols(d);
        std::iota(cols.begin(), cols.end(), 0);
        BigInt det = square_minor(cone, cols);
        if (det < 0) det = -det;
        if (det == 0) throw std::invalid_argument("degenerate cone: generators are dependent");
        return det;
    }
    if (k > d || k == 0) throw std::invalid_argument("cone must have 1..dim generators");
    // gcd of the k x k minors over all column choices.
    BigInt g = 0;
    std::vector<std::size_t> cols(k);
    std::iota(cols.begin(), cols.end(), 0);
    while (true) {
        BigInt minor = square_minor(cone, cols);
        if (minor < 0) minor = -minor;
        g = big_gcd(g, minor);
        bool advanced = false;
        for (std::size_t i = k; i-- > 0;) {
            if (cols[i] != i + d - k) {
                ++cols[i];
                for (std::size_t j = i + 1; j < k; ++j) cols[j] = cols[j - 1] + 1;
                advanced = true;
                break;
            }
        }
        if (!advanced) break;
    }
    if (g == 0) throw std::invalid_argument("degenerate cone: generators are dependent");
    return g;
}

namespace {

// Row echelon data for solving A * lambda = beta, columns of A = generators.
struct ConeSolver {
    std::size_t k = 0;                       // number of generators
    std::vector<std::size_t> pivotRows;      // k independent coordinate rows
    std::vector<std::vector<BigRational>> inv; // inverse of the pivot submatrix
    const ConeSpec* cone = nullptr;

    explicit ConeSolver(const ConeSpec& c) : k(c.generators.size()), cone(&c) {
        // Matrix rows indexed by ambient coordinate, columns by generator.
        const std::size_t d = c.ambient_dim;
        std::vector<std::vector<BigRational>> m(d, std::vector<BigRational>(k));
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t i = 0; i < d; ++i) m[i][j] = c.generators[j][i];
        // Greedy pivot row selection by elimination on a working copy.
        std::vector<std::vector<BigRational>> work = m;
        std::vector<bool> used(d, false);
        for (std::size_t col = 0; col < k; ++col) {
            std::size_t pick = d;
            for (std::size_t row = 0; row < d; ++row)
                if (!used[row] && work[row][col] != 0) {
                    pick = row;
                    break;
                }
            if (pick == d) throw std::invalid_argument("cone generators are linearly dependent");
            used[pick] = true;
            pivotRows.push_back(pick);
            const BigRational invp = BigRational(1) / work[pick][col];
            for (std::size_t row = 0; row < d; ++row) {
                if (used[row] || work[row][col] == 0) continue;
                const BigRational f = work[row][col] * invp;
                for (std::size_t cc = col; cc < k; ++cc) work[row][cc] -= f * work[pick][cc];
            }
        }
        // Invert the k x k pivot submatrix by Gauss-Jordan.
        std::vector<std::vector<BigRational>> a(k, std::vector<BigRational>(2 * k));
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < k; ++j) a[i][j] = m[pivotRows[i]][j];
            a[i][k + i] = 1;
        }
        for (std::size_t col = 0; col < k; ++col) {
            std::size_t pivot = col;
            while (pivot < k && a[pivot][col] == 0) ++pivot;
            if (pivot == k) throw std::logic_error("pivot submatrix is singular");
            std::swap(a[pivot], a[col]);
            const BigRational invp = BigRational(1) / a[col][col];
            for (std::size_t cc = 0; cc < 2 * k; ++cc) a[col][cc] *= invp;
            for (std::size_t row = 0; row < k; ++row) {
                if (row == col || a[row][col] == 0) continue;
                const BigRational f = a[row][col];
                for (std::size_t cc = 0; cc < 2 * k; ++cc) a[row][cc] -= f * a[col][cc];
            }
        }
        inv.assign(k, std::vector<BigRational>(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) inv[i][j] = a[i][k + j];
    }

    // lambda for the candidate point, or false when the overdetermined system
    // has no solution.
    bool solve(const std::vector<long long>& beta, std::vector<BigRational>& lambda) const {
        lambda.assign(k, BigRational(0));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                if (inv[i][j] != 0) lambda[i] += inv[i][j] * beta[pivotRows[j]];
        // Verify the non-pivot coordinates.
        for (std::size_t row = 0; row < cone->ambient_dim; ++row) {
            BigRational acc = 0;
            for (std::size_t j = 0; j < k; ++j)
                if (cone->generators[j][row] != 0) acc += BigRational(cone->generators[j][row]) * lambda[j];
            if (acc != beta[row]) return false;
        }
        return true;
    }
};

} // namespace

std::vector<std::vector<long long>> fundamental_domain(const ConeSpec& cone) {
    if (!cone.simplicial) throw std::invalid_argument("fundamental_domain requires a simplicial cone");
    const std::size_t d = cone.ambient_dim;
    const ConeSolver solver(cone);
    std::vector<long long> upper(d, 0);
    for (const auto& g : cone.generators)
        for (std::size_t j = 0; j < d; ++j) upper[j] += std::max<long long>(g[j], 0);
    unsigned long long boxSize = 1;
    for (long long u : upper) {
        boxSize *= static_cast<unsigned long long>(u + 1);
        if (boxSize > 50'000'000ull) throw std::invalid_argument("fundamental domain box too large");
    }
    std::vector<std::vector<long long>> points;
    std::vector<long long> beta(d, 0);
    std::vector<BigRational> lambda;
    while (true) {
        if (solver.solve(beta, lambda)) {
            bool inside = true;
            for (const auto& lv : lambda)
                if (!(lv > 0 && lv <= 1)) {
                    inside = false;
                    break;
                }
            if (inside) points.push_back(beta);
        }
        std::size_t j = 0;
        while (j < d && beta[j] == upper[j]) {
            beta[j] = 0;
            ++j;
        }
        if (j == d) break;
        ++beta[j];
    }
    std::sort(points.begin(), points.end());
    return points;
}

MotivicExpression cone_generating_function(const ConeSpec& cone, const MonomialSubst& subst) {
    if (subst.size() != cone.ambient_dim)
        throw std::invalid_argument("substitution arity does not match the ambient dimension");
    MotivicTerm term;
    for (const auto& beta : fundamental_domain(cone)) {
        long long lexp = 0, texp = 0;
        for (std::size_t j = 0; j < beta.size(); ++j) {
            lexp += beta[j] * subst[j].first;
            texp += beta[j] * subst[j].second;
        }
        term.numer.add_monomial(1, lexp, texp);
    }
    for (const auto& g : cone.generators) {
        long long lexp = 0, texp = 0;
        for (std::size_t j = 0; j < g.size(); ++j) {
            lexp += g[j] * subst[j].first;
            texp += g[j] * subst[j].second;
        }
        if (lexp == 0 && texp == 0)
            throw std::domain_error("substitution produces a vanishing denominator factor");
        term.denom.push_back(DenomFactor{-lexp, texp});
    }
    return MotivicExpression::from_term(std::move(term));
}

bool region_contains(const StratumProfile& profile, const std::vector<long long>& b, ConeRegion region) {
    const std::size_t k = profile.size();
    if (b.size() != k + 1) throw std::invalid_argument("point dimension mismatch");
    long long bn = 0; // <b, N> over I_z, with N_z = p
    for (std::size_t i = 0; i < k; ++i) bn += b[i] * profile.N[i];
    bn += b[k] * profile.p;
    const long long bz = (profile.Q + profile.p) * b[k];
    switch (region) {
        case ConeRegion::SigmaPlus: return bn < bz;
        case ConeRegion::SigmaMinus: return bn > bz;
        case ConeRegion::Rho: return bn == bz;
    }
    return false;
}

long long cone_gcd_invariant(const StratumProfile& profile, ConeRegion region) {
    require_nonempty(profile);
    switch (region) {
        case ConeRegion::SigmaPlus: return ll_gcd(profile.NI(), profile.p);
        case ConeRegion::SigmaMinus: return profile.Q + profile.p;
        case ConeRegion::Rho:
            return ll_lcm(profile.NI(), profile.Q) / profile.Q * (profile.Q + profile.p);
    }
    throw std::logic_error("unreachable");
}

long long cone_gcd_invariant_bruteforce(const StratumProfile& profile, ConeRegion region, long long bound) {
    require_nonempty(profile);
    const std::size_t k = profile.size();
    long long g = 0;
    std::vector<long long> b(k + 1, 1);
    while (true) {
        if (region_contains(profile, b, region)) {
            long long bn = 0;
            for (std::size_t i = 0; i < k; ++i) bn += b[i] * profile.N[i];
            bn += b[k] * profile.p;
            const long long bz = (profile.Q + profile.p) * b[k];
            g = ll_gcd(g, std::min(bn, bz));
        }
        std::size_t j = 0;
        while (j <= k && b[j] == bound) {
            b[j] = 1;
            ++j;
        }
        if (j > k) break;
        ++b[j];
    }
    return g;
}

} // namespace suspzeta
