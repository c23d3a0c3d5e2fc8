#include "suspzeta/arith.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace suspzeta {

namespace {

constexpr long long kSieveBound = 1'000'000;

const std::vector<int>& spf_sieve() {
    static const std::vector<int> sieve = [] {
        std::vector<int> spf(kSieveBound + 1, 0);
        for (long long i = 2; i <= kSieveBound; ++i) {
            if (spf[i] == 0) {
                for (long long j = i; j <= kSieveBound; j += i)
                    if (spf[j] == 0) spf[j] = static_cast<int>(i);
            }
        }
        return spf;
    }();
    return sieve;
}

} // namespace

std::vector<std::pair<long long, int>> factorize(long long n) {
    if (n < 1) throw std::invalid_argument("factorize requires n >= 1");
    std::vector<std::pair<long long, int>> out;
    if (n <= kSieveBound) {
        const auto& spf = spf_sieve();
        while (n > 1) {
            const long long p = spf[static_cast<std::size_t>(n)];
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            out.emplace_back(p, e);
        }
        return out;
    }
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

long long moebius(long long n) {
    long long result = 1;
    for (const auto& [p, e] : factorize(n)) {
        if (e > 1) return 0;
        result = -result;
    }
    return result;
}

long long euler_phi(long long n) { return jordan_totient(1, n); }

long long jordan_totient(int k, long long n) {
    if (k < 1) throw std::invalid_argument("jordan_totient requires k >= 1");
    long long result = 1;
    for (const auto& [p, e] : factorize(n)) {
        long long pk = 1;
        for (int i = 0; i < k; ++i) pk *= p;
        long long term = pk - 1; // p^k - 1
        for (int i = 1; i < e; ++i) term *= pk;
        result *= term;
    }
    return result;
}

std::vector<long long> divisors(long long n) {
    if (n < 1) throw std::invalid_argument("divisors requires n >= 1");
    std::vector<long long> out = {1};
    for (const auto& [p, e] : factorize(n)) {
        const std::size_t base = out.size();
        long long pe = 1;
        for (int i = 1; i <= e; ++i) {
            pe *= p;
            for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pe);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

ArithFnTable ArithFnTable::tabulate(long long n, const std::function<long long(long long)>& f) {
    ArithFnTable t;
    t.values.reserve(static_cast<std::size_t>(n));
    for (long long i = 1; i <= n; ++i) t.values.push_back(f(i));
    return t;
}

ArithFnTable dirichlet_convolve(const ArithFnTable& f, const ArithFnTable& g) {
    if (f.size() != g.size()) throw std::invalid_argument("dirichlet_convolve: table length mismatch");
    const long long n = f.size();
    ArithFnTable out;
    out.values.assign(static_cast<std::size_t>(n), 0);
    for (long long d = 1; d <= n; ++d)
        for (long long m = d; m <= n; m += d)
            out.values[static_cast<std::size_t>(m - 1)] += f.at(d) * g.at(m / d);
    return out;
}

TwistReduction twist_reduction(long long Q, long long l) {
    if (Q < 1 || l < 1) throw std::invalid_argument("twist_reduction requires Q, l >= 1");
    TwistReduction r;
    r.Q = Q;
    r.l = l;
    r.l1 = l / ll_gcd(l, Q);
    // gcd(Q, l1^(n+1)) = gcd(Q, gcd(Q, l1^n) * l1), and the sequence
    // stabilizes once n exceeds every p-adic valuation of Q; ceil(log2 Q)
    // iterations dominate them all.
    long long m = 1;
    const int steps = std::bit_width(static_cast<unsigned long long>(Q));
    for (int n = 0; n < steps; ++n) m = ll_gcd(Q, m * r.l1);
    r.m = m;
    r.generator = r.l1 * r.m;
    return r;
}

std::vector<long long> twist_divisibility_set_bruteforce(long long Q, long long l1, long long bound) {
    std::vector<long long> out;
    for (long long M = 1; M <= bound; ++M)
        if (M % (l1 * ll_gcd(Q, M)) == 0) out.push_back(M);
    return out;
}

} // namespace suspzeta
