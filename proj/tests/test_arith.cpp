#include "suspzeta/arith.hpp"

#include <doctest.h>

#include <numeric>
#include <random>

using namespace suspzeta;

TEST_CASE("moebius values") {
    CHECK(moebius(1) == 1);
    CHECK(moebius(4) == 0);
    CHECK(moebius(6) == 1);
    CHECK(moebius(30) == -1);
}

TEST_CASE("euler phi against the coprime-residue count") {
    auto bruteforce = [](long long n) {
        long long count = 0;
        for (long long r = 1; r <= n; ++r)
            if (std::gcd(r, n) == 1) ++count;
        return count;
    };
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(12) == 4);
    for (long long n = 1; n <= 200; ++n) CHECK(euler_phi(n) == bruteforce(n));
}

TEST_CASE("Gauss identity at n = 30") {
    long long sum = 0;
    for (long long d : divisors(30)) sum += euler_phi(d);
    CHECK(sum == 30);
}

TEST_CASE("Jordan totient values used by the suspension matrices") {
    CHECK(jordan_totient(2, 1) == 1);
    CHECK(jordan_totient(2, 2) == 3);
    CHECK(jordan_totient(2, 3) == 8);
    CHECK(jordan_totient(2, 5) == 24);
    CHECK(jordan_totient(2, 6) == 24);
    CHECK(jordan_totient(2, 10) == 72);
    for (long long n = 1; n <= 100; ++n) CHECK(jordan_totient(1, n) == euler_phi(n));
}

TEST_CASE("Dirichlet convolution identities to n = 1000") {
    const long long n = 1000;
    const ArithFnTable ones = ArithFnTable::tabulate(n, [](long long) { return 1; });
    const ArithFnTable mu = ArithFnTable::tabulate(n, moebius);
    for (int k = 1; k <= 3; ++k) {
        const ArithFnTable jk = ArithFnTable::tabulate(n, [k](long long m) { return jordan_totient(k, m); });
        const ArithFnTable sigma = ArithFnTable::tabulate(n, [k](long long m) {
            long long v = 1;
            for (int i = 0; i < k; ++i) v *= m;
            return v;
        });
        CHECK(dirichlet_convolve(ones, jk).values == sigma.values);
        CHECK(dirichlet_convolve(mu, sigma).values == jk.values);
    }
}

TEST_CASE("the unit function is neutral for Dirichlet convolution") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<long long> dist(-20, 20);
    const long long n = 300;
    const ArithFnTable eps =
        ArithFnTable::tabulate(n, [](long long m) { return m == 1 ? 1 : 0; });
    ArithFnTable f = ArithFnTable::tabulate(n, [&](long long) { return dist(rng); });
    f.values[0] = 1; // ring convention: f(1) != 0
    CHECK(dirichlet_convolve(eps, f).values == f.values);
    CHECK(dirichlet_convolve(f, eps).values == f.values);
}

TEST_CASE("convolution rejects mismatched table lengths") {
    const ArithFnTable a = ArithFnTable::tabulate(5, [](long long) { return 1; });
    const ArithFnTable b = ArithFnTable::tabulate(6, [](long long) { return 1; });
    CHECK_THROWS_AS(dirichlet_convolve(a, b), std::invalid_argument);
}

TEST_CASE("twist reduction on the worked examples") {
    const TwistReduction lvp = twist_reduction(84, 27);
    CHECK(lvp.l1 == 9);
    CHECK(lvp.m == 3);
    CHECK(lvp.generator == 27);

    const TwistReduction ex = twist_reduction(10, 3);
    CHECK(ex.l1 == 3);
    CHECK(ex.m == 1);
    CHECK(ex.generator == 3);
    for (long long l : {3, 6, 15, 30}) CHECK(twist_reduction(10, l).l1 == 3);

    const TwistReduction divides = twist_reduction(12, 6);
    CHECK(divides.l1 == 1);
    CHECK(divides.m == 1);
    CHECK(divides.generator == 1);

    // Stabilization needs several steps when l1 shares a high power with Q.
    const TwistReduction deep = twist_reduction(8, 16);
    CHECK(deep.l1 == 2);
    CHECK(deep.m == 8);
    CHECK(deep.generator == 16);
}

TEST_CASE("D(Q, l1) is the set of multiples of the generator") {
    for (long long Q : {6, 8, 10, 12, 36, 84})
        for (long long l : {2, 3, 4, 9, 27}) {
            const TwistReduction tr = twist_reduction(Q, l);
            const auto brute = twist_divisibility_set_bruteforce(Q, tr.l1, 500);
            std::vector<long long> expect;
            for (long long M = tr.generator; M <= 500; M += tr.generator) expect.push_back(M);
            CHECK(brute == expect);
            CHECK(tr.contains(tr.generator * 7));
        }
}

TEST_CASE("D(Q, l1) closure properties on a small sweep") {
    for (long long Q = 1; Q <= 12; ++Q)
        for (long long l = 1; l <= 12; ++l) {
            const TwistReduction tr = twist_reduction(Q, l);
            const auto set = twist_divisibility_set_bruteforce(Q, tr.l1, 200);
            for (std::size_t i = 0; i < set.size(); ++i) {
                CHECK(set[i] % tr.l1 == 0); // (1)
                for (std::size_t j = i + 1; j < std::min(set.size(), i + 6); ++j)
                    CHECK(tr.contains(std::gcd(set[i], set[j]))); // (2)
                if (2 * set[i] <= 200) CHECK(tr.contains(2 * set[i])); // (3)
            }
        }
}
