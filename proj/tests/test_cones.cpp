#include "suspzeta/cones.hpp"

#include "test_helpers.hpp"

#include <doctest.h>

#include <random>

using namespace suspzeta;
using suspzeta::testing::interior_sum;
using suspzeta::testing::profile;
using suspzeta::testing::random_profile;

TEST_CASE("quasi-generators of sigma+ and rho") {
    const ConeSpec sp1 = cone_sigma_plus(profile({2}, {1}, 2));
    CHECK(sp1.generators == std::vector<std::vector<long long>>{{1, 1}, {0, 1}});
    const ConeSpec sp2 = cone_sigma_plus(profile({3}, {1}, 2));
    CHECK(sp2.generators == std::vector<std::vector<long long>>{{2, 3}, {0, 1}});
    const ConeSpec sp3 = cone_sigma_plus(profile({5, 6}, {1, 1}, 10));
    CHECK(sp3.generators ==
          std::vector<std::vector<long long>>{{2, 0, 1}, {0, 5, 3}, {0, 0, 1}});

    CHECK(cone_rho(profile({2}, {1}, 2)).generators == std::vector<std::vector<long long>>{{1, 1}});
    CHECK(cone_rho(profile({1}, {1}, 1)).generators == std::vector<std::vector<long long>>{{1, 1}});
    CHECK(cone_rho(profile({5, 6}, {1, 1}, 10)).generators ==
          std::vector<std::vector<long long>>{{2, 0, 1}, {0, 5, 3}});

    CHECK_THROWS_AS(cone_rho(profile({}, {}, 2)), std::invalid_argument);
}

TEST_CASE("cone multiplicities: determinants, minors and closed forms") {
    CHECK(cone_multiplicity(cone_sigma_plus(profile({2}, {1}, 2))) == 1);
    CHECK(cone_multiplicity(cone_rho(profile({5, 6}, {1, 1}, 10))) == 1);
    CHECK(cone_multiplicity(cone_sigma_plus(profile({1}, {1}, 1))) == 1);
    CHECK(cone_multiplicity(cone_rho(profile({2}, {1}, 4))) == 1);
    CHECK(cone_multiplicity(cone_rho(profile({4, 4}, {1, 1}, 8))) == 2);

    std::mt19937 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        const StratumProfile pr = random_profile(rng);
        BigInt eProd = 1, closedPlus = 1, closedRho = 1;
        for (std::size_t i = 0; i < pr.size(); ++i) eProd *= pr.e(i);
        for (std::size_t i = 0; i < pr.size(); ++i) closedPlus *= pr.Q;
        closedRho = closedPlus / pr.Q * pr.eI();
        CHECK(cone_multiplicity(cone_sigma_plus(pr)) * eProd == closedPlus);
        CHECK(cone_multiplicity(cone_rho(pr)) * eProd == closedRho);
    }
}

TEST_CASE("fundamental domains") {
    // Unimodular cone: D_C is the sum of the generators.
    CHECK(fundamental_domain(cone_sigma_plus(profile({1}, {1}, 1))) ==
          std::vector<std::vector<long long>>{{1, 2}});
    // Primitive single generator: only lambda = 1 gives a lattice point.
    CHECK(fundamental_domain(cone_rho(profile({2}, {1}, 4))) ==
          std::vector<std::vector<long long>>{{2, 1}});
    // Codimension-one cone with multiplicity 2.
    CHECK(fundamental_domain(cone_rho(profile({4, 4}, {1, 1}, 8))) ==
          std::vector<std::vector<long long>>{{1, 1, 1}, {2, 2, 2}});
}

TEST_CASE("|D_C| equals the multiplicity and contains the generator sum") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> nDist(1, 12), qDist(1, 12);
    for (int trial = 0; trial < 40; ++trial) {
        StratumProfile pr = random_profile(rng);
        for (auto& n : pr.N) n = nDist(rng);
        pr.Q = qDist(rng);
        for (const ConeSpec& cone : {cone_sigma_plus(pr), cone_rho(pr)}) {
            const auto domain = fundamental_domain(cone);
            CHECK(BigInt(domain.size()) == cone_multiplicity(cone));
            std::vector<long long> total(cone.ambient_dim, 0);
            for (const auto& g : cone.generators)
                for (std::size_t j = 0; j < g.size(); ++j) total[j] += g[j];
            CHECK(std::find(domain.begin(), domain.end(), total) != domain.end());
        }
    }
}

TEST_CASE("generating function of rho on the double-suspension profile") {
    // x -> L^-1 T^2, z -> L^-1: Phi_rho = L^-2 T^2 / (1 - L^-2 T^2).
    const StratumProfile pr = profile({2}, {1}, 2);
    const MotivicExpression got = cone_generating_function(cone_rho(pr), {{-1, 2}, {-1, 0}});
    const MotivicExpression want =
        MotivicExpression::from_term({LaurentLT::monomial(1, -2, 2), {DenomFactor{2, 2}}});
    CHECK(motivic_equal(got, want));
}

TEST_CASE("orthant generating function carries the interior monomial") {
    const MotivicExpression phi = cone_generating_function(cone_orthant(2), {{-1, 2}, {-1, 0}});
    const MotivicExpression want = MotivicExpression::from_term(
        {LaurentLT::monomial(1, -2, 2), {DenomFactor{1, 2}, DenomFactor{1, 0}}});
    CHECK(motivic_equal(phi, want));
    CHECK_THROWS_AS(motivic_series(phi, 4), std::domain_error); // b = 0 factor
}

TEST_CASE("degenerate substitutions are rejected") {
    CHECK_THROWS_AS(cone_generating_function(cone_orthant(1), {{0, 0}}), std::domain_error);
}

TEST_CASE("series of Phi_C counts interior lattice points (brute-force oracle)") {
    std::mt19937 rng(23);
    const long long tBound = 8, lBound = 16;
    for (int trial = 0; trial < 12; ++trial) {
        const StratumProfile pr = random_profile(rng);
        const std::size_t dim = pr.size() + 1;
        MonomialSubst substN;
        for (std::size_t i = 0; i < pr.size(); ++i) substN.emplace_back(-pr.nu[i], pr.N[i]);
        substN.emplace_back(-pr.nuz, pr.p);

        const LaurentLT viaSeries =
            motivic_series_truncated(cone_generating_function(cone_sigma_plus(pr), substN), tBound, lBound);
        const LaurentLT viaPoints = interior_sum(dim, substN, tBound, lBound, [&](const auto& b) {
            return region_contains(pr, b, ConeRegion::SigmaPlus);
        });
        CHECK(viaSeries == viaPoints);

        const LaurentLT rhoSeries =
            motivic_series_truncated(cone_generating_function(cone_rho(pr), substN), tBound, lBound);
        const LaurentLT rhoPoints = interior_sum(dim, substN, tBound, lBound, [&](const auto& b) {
            return region_contains(pr, b, ConeRegion::Rho);
        });
        CHECK(rhoSeries == rhoPoints);

        const LaurentLT orthSeries =
            motivic_series_truncated(cone_generating_function(cone_orthant(dim), substN), tBound, lBound);
        const LaurentLT orthPoints =
            interior_sum(dim, substN, tBound, lBound, [](const auto&) { return true; });
        CHECK(orthSeries == orthPoints);
    }
}

TEST_CASE("the sigma- assembly matches a frozen hand computation") {
    // Profile N=(1), nu=(1), nu_z=1, Q=1, p=0 under the sigma- substitution:
    // Phi_sigma- = L^-3 T / ((1 - L^-1)(1 - L^-2 T)).
    const StratumProfile pr = profile({1}, {1}, 1);
    const MonomialSubst substMinus = {{-1, 0}, {-1, 1}};
    const MotivicExpression assembled =
        cone_generating_function(cone_orthant(2), substMinus) -
        cone_generating_function(cone_sigma_plus(pr), substMinus) -
        cone_generating_function(cone_rho(pr), substMinus);
    const MotivicExpression byHand = MotivicExpression::from_term(
        {LaurentLT::monomial(1, -3, 1), {DenomFactor{1, 0}, DenomFactor{2, 1}}});
    CHECK(motivic_equal(assembled, byHand));
}

TEST_CASE("cone gcd invariants: closed forms vs brute force") {
    CHECK(cone_gcd_invariant(profile({2}, {1}, 2), ConeRegion::SigmaMinus) == 2);
    CHECK(cone_gcd_invariant(profile({2}, {1}, 2), ConeRegion::Rho) == 2);
    CHECK(cone_gcd_invariant(profile({2}, {1}, 2), ConeRegion::SigmaPlus) == 2);

    std::mt19937 rng(29);
    std::uniform_int_distribution<int> sizeDist(1, 2), nDist(1, 8), qDist(1, 8), pDist(0, 3);
    for (int trial = 0; trial < 30; ++trial) {
        StratumProfile pr;
        const int k = sizeDist(rng);
        for (int i = 0; i < k; ++i) {
            pr.N.push_back(nDist(rng));
            pr.nu.push_back(1);
        }
        pr.Q = qDist(rng);
        pr.p = pDist(rng);
        for (ConeRegion region : {ConeRegion::SigmaPlus, ConeRegion::SigmaMinus, ConeRegion::Rho}) {
            long long bound = 25, brute = cone_gcd_invariant_bruteforce(pr, region, bound);
            while (brute == 0 && bound <= 150) {
                bound += 25;
                brute = cone_gcd_invariant_bruteforce(pr, region, bound);
            }
            REQUIRE(brute != 0);
            CHECK(brute == cone_gcd_invariant(pr, region));
        }
    }
}
