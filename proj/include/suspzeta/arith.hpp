#pragma once

#include "suspzeta/numbers.hpp"

#include <functional>
#include <vector>

namespace suspzeta {

/// Prime factorization (prime, exponent), primes ascending. Trial division
/// backed by a memoized smallest-prime-factor sieve.
std::vector<std::pair<long long, int>> factorize(long long n);

/// Moebius function: 0 on non-squarefree n, else (-1)^(#prime factors).
long long moebius(long long n);

/// Euler totient.
long long euler_phi(long long n);

/// Jordan totient J_k(n) = n^k prod_{p|n} (1 - p^(-k)); J_1 = phi.
long long jordan_totient(int k, long long n);

/// Divisors of n in ascending order (1 first).
std::vector<long long> divisors(long long n);

/// Values f(1..n) of an arithmetic function, 1-indexed through at().
struct ArithFnTable {
    std::vector<long long> values;

    static ArithFnTable tabulate(long long n, const std::function<long long(long long)>& f);
    long long size() const { return static_cast<long long>(values.size()); }
    long long at(long long i) const { return values[static_cast<std::size_t>(i - 1)]; }
};

/// Dirichlet convolution (f * g)(n) = sum_{d|n} f(d) g(n/d); tables must have
/// equal length.
ArithFnTable dirichlet_convolve(const ArithFnTable& f, const ArithFnTable& g);

/// Reduction data of a twist order l against Q: l1 = l/gcd(l,Q),
/// m = min_n gcd(Q, l1^n), and D(Q, l1) = { k * l1 * m : k in N }.
struct TwistReduction {
    long long Q = 1;
    long long l = 1;
    long long l1 = 1;
    long long m = 1;
    long long generator = 1;

    bool contains(long long M) const { return M % generator == 0; }
};

TwistReduction twist_reduction(long long Q, long long l);

/// { M <= bound : l1 * gcd(Q, M) divides M }, by scan. Test oracle for
/// twist_reduction.
std::vector<long long> twist_divisibility_set_bruteforce(long long Q, long long l1, long long bound);

} // namespace suspzeta
