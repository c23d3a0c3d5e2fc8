#include "suspzeta/motivic.hpp"

#include "test_helpers.hpp"

#include <doctest.h>

#include <random>

using namespace suspzeta;
using suspzeta::testing::rf;

namespace {

Poly random_poly(std::mt19937& rng, int maxDeg) {
    std::uniform_int_distribution<int> degDist(0, maxDeg), coeffDist(-9, 9), denDist(1, 5);
    std::vector<BigRational> cs;
    const int deg = degDist(rng);
    for (int i = 0; i <= deg; ++i) cs.emplace_back(coeffDist(rng), denDist(rng));
    return Poly(std::move(cs));
}

RationalFunction random_rf(std::mt19937& rng) {
    Poly den = random_poly(rng, 2);
    while (den.is_zero()) den = random_poly(rng, 2);
    return RationalFunction(random_poly(rng, 3), den);
}

} // namespace

TEST_CASE("rational function arithmetic collapses common denominators") {
    const RationalFunction one = rf("1/(s + 1)") + rf("s/(s + 1)");
    CHECK(one == RationalFunction::from_rational(1));
}

TEST_CASE("Z_top(f, 0) = 1 on the Example 5-6-10 untwisted zeta") {
    CHECK(rf("(10*s + 11)/((30*s + 11)*(s + 1))").evaluate(0) == BigRational(1));
}

TEST_CASE("rational function field axioms hold exactly on random inputs") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const RationalFunction a = random_rf(rng), b = random_rf(rng), c = random_rf(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - b) + b == a);
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}

TEST_CASE("division by the zero function is rejected") {
    CHECK_THROWS_AS(rf("1") / RationalFunction(), std::domain_error);
}

TEST_CASE("affine substitution: shift by 1/10") {
    const RationalFunction x = rf("1/(30*s + 11)");
    const RationalFunction shifted = x.substitute_affine(1, BigRational(1, 10));
    CHECK(shifted == rf("1/(30*s + 14)"));
    for (long long v : {0, 1, 2})
        CHECK(shifted.evaluate(v) == x.evaluate(BigRational(v) + BigRational(1, 10)));
}

TEST_CASE("affine substitution: identity and the LvP shift") {
    CHECK(RationalFunction::variable().substitute_affine(1, 0) == RationalFunction::variable());
    const RationalFunction x = rf("1/(2*(27*s + 11))");
    const RationalFunction shifted = x.substitute_affine(1, BigRational(1, 84));
    CHECK(shifted == rf("14/(756*s + 317)"));
    CHECK(BigRational(12, 21) * shifted == rf("8/(756*s + 317)"));
    CHECK_THROWS_AS(x.substitute_affine(0, 1), std::invalid_argument);
}

TEST_CASE("motivic equality clears denominators") {
    // (L-1)/(1 - L^-1 T) vs the same with numerator and denominator multiplied
    // by (1 - L^-2 T^2).
    MotivicTerm plain{LaurentLT::l_minus_one(), {DenomFactor{1, 1}}};
    MotivicTerm blown{LaurentLT::l_minus_one() * (LaurentLT::one() - LaurentLT::monomial(1, -2, 2)),
                      {DenomFactor{1, 1}, DenomFactor{2, 2}}};
    CHECK(motivic_equal(MotivicExpression::from_term(plain), MotivicExpression::from_term(blown)));
    CHECK_FALSE(motivic_equal(MotivicExpression::from_term(plain),
                              MotivicExpression::from_term({LaurentLT::l_minus_one(), {DenomFactor{2, 1}}})));
    // Zero-term expression vs a term with zero numerator.
    CHECK(motivic_equal(MotivicExpression::zero(),
                        MotivicExpression::from_term({LaurentLT::zero(), {DenomFactor{1, 1}}})));
}

TEST_CASE("motivic T-series of a geometric term") {
    // (L-1) T / (1 - L^-1 T) = sum_{j>=0} (L-1) L^-j T^(j+1)
    const MotivicExpression x = MotivicExpression::from_term(
        {LaurentLT::l_minus_one() * LaurentLT::monomial(1, 0, 1), {DenomFactor{1, 1}}});
    LaurentLT expected;
    for (long long j = 0; j <= 2; ++j) {
        expected += LaurentLT::l_minus_one() * LaurentLT::monomial(1, -j, j + 1);
    }
    CHECK(motivic_series(x, 3) == expected);
}

TEST_CASE("a T-constant denominator factor is not T-expandable") {
    const MotivicExpression x =
        MotivicExpression::from_term({LaurentLT::l_minus_one(), {DenomFactor{2, 0}}});
    CHECK_THROWS_AS(motivic_series(x, 4), std::domain_error);
    // The L-adically truncated expansion handles it.
    CHECK_FALSE(motivic_series_truncated(x, 4, 10).is_zero());
}

TEST_CASE("Euler specialization of a Denef-Loeser factor") {
    const MotivicExpression x =
        MotivicExpression::from_term({LaurentLT::l_minus_one(), {DenomFactor{2, 30}}});
    CHECK(euler_specialize(x) == rf("1/(30*s + 2)"));
}

TEST_CASE("Euler specialization of plain classes") {
    CHECK(euler_specialize(MotivicExpression::from_laurent(LaurentLT::monomial(1, 1, 0))) ==
          RationalFunction::from_rational(1)); // chi(L) = 1
    CHECK(euler_specialize(MotivicExpression::zero()) == RationalFunction());
    // chi of L^a is 1, so chi of a Laurent polynomial is its value at L = 1.
    LaurentLT p;
    p.add_monomial(3, -2, 0);
    p.add_monomial(-5, 4, 0);
    CHECK(euler_specialize(MotivicExpression::from_laurent(p)) == RationalFunction::from_rational(-2));
}

TEST_CASE("Euler specialization is additive") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<long long> aDist(1, 4), bDist(1, 5), cDist(-3, 3);
    for (int trial = 0; trial < 25; ++trial) {
        auto randomExpr = [&] {
            MotivicTerm t;
            t.numer = LaurentLT::l_minus_one() * LaurentLT::monomial(cDist(rng) * 2 + 7, cDist(rng), 1);
            t.denom = {DenomFactor{aDist(rng), bDist(rng)}};
            return MotivicExpression::from_term(t);
        };
        const MotivicExpression x = randomExpr(), y = randomExpr();
        CHECK(euler_specialize(x + y) == euler_specialize(x) + euler_specialize(y));
    }
}

TEST_CASE("numerators divisible by (L-1)^(k+1) specialize to zero") {
    std::mt19937 rng(13);
    std::uniform_int_distribution<long long> aDist(1, 4), bDist(1, 5);
    for (int k = 0; k <= 3; ++k) {
        MotivicTerm t;
        t.numer = LaurentLT::l_minus_one().pow(static_cast<unsigned>(k + 1)) *
                  LaurentLT::monomial(3, -2, 2);
        for (int j = 0; j < k; ++j) t.denom.push_back(DenomFactor{aDist(rng), bDist(rng)});
        CHECK(euler_specialize(MotivicExpression::from_term(t)) == RationalFunction());
    }
}

TEST_CASE("divergent specializations are reported") {
    // 1/(1 - L^-1 T) has no (L-1) to tame the pole at h = 0.
    const MotivicExpression x = MotivicExpression::from_term({LaurentLT::one(), {DenomFactor{1, 1}}});
    CHECK_THROWS_AS(euler_specialize(x), std::domain_error);
}

TEST_CASE("equal motivic expressions have equal series to any bound") {
    MotivicTerm a{LaurentLT::l_minus_one() * LaurentLT::monomial(1, -1, 2), {DenomFactor{2, 2}}};
    MotivicTerm b{a.numer * (LaurentLT::one() - LaurentLT::monomial(1, -3, 4)),
                  {DenomFactor{2, 2}, DenomFactor{3, 4}}};
    const auto ea = MotivicExpression::from_term(a);
    const auto eb = MotivicExpression::from_term(b);
    REQUIRE(motivic_equal(ea, eb));
    CHECK(motivic_series(ea, 12) == motivic_series(eb, 12));
}
