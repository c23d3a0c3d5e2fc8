#include "suspzeta/format.hpp"

#include "suspzeta/io.hpp"
#include "test_helpers.hpp"

#include <doctest.h>

#include <random>

using namespace suspzeta;
using suspzeta::testing::rf;

TEST_CASE("canonical rendering of the shipped shapes") {
    CHECK(format_rational_function(rf("(3*s + 7)/((15*s + 7)*(s + 1))")) ==
          "(3*s + 7)/((15*s + 7)*(s + 1))");
    CHECK(format_rational_function(rf("1/((s + 1)^2)")) == "1/((s + 1)^2)");
    CHECK(format_rational_function(rf("1/(2*(15*s + 7))")) == "1/(2*(15*s + 7))");
    CHECK(format_rational_function(rf("-5/(2*(15*s + 7))")) == "-5/(2*(15*s + 7))");
    CHECK(format_rational_function(rf("8/(756*s + 317)")) == "8/(756*s + 317)");
    CHECK(format_rational_function(rf("10*s + 11")) == "10*s + 11");
    CHECK(format_rational_function(RationalFunction()) == "0");
    CHECK(format_rational_function(rf("(2 - 3*s)/((5*s + 2)*(s + 1))")) ==
          "(2 - 3*s)/((5*s + 2)*(s + 1))");
    CHECK(format_rational_function(rf("(s + 1)/2")) == "(s + 1)/2");
    CHECK(format_rational_function(rf("s/(s + 1)")) == "s/(s + 1)");
}

TEST_CASE("LaTeX rendering") {
    CHECK(format_rational_function(rf("(3*s + 7)/((15*s + 7)*(s + 1))"), RenderMode::Latex) ==
          "\\frac{3 s + 7}{(15 s + 7)(s + 1)}");
    CHECK(format_rational_function(rf("1/((s + 1)^2)"), RenderMode::Latex) == "\\frac{1}{(s + 1)^{2}}");
}

TEST_CASE("motivic rendering") {
    const MotivicExpression phi = MotivicExpression::from_term(
        {LaurentLT::l_minus_one() * LaurentLT::monomial(1, -2, 2), {DenomFactor{2, 2}}});
    CHECK(format_motivic(phi) == "(L^-1*T^2 - L^-2*T^2)/(1 - L^-2*T^2)");
    CHECK(format_motivic(MotivicExpression::zero()) == "0");
}

TEST_CASE("parser handles the grammar") {
    CHECK(parse_rational_expr("  (s+1) * (s - 1) ") == rf("s^2 - 1"));
    CHECK(parse_rational_expr("2^3") == RationalFunction::from_rational(8));
    CHECK(parse_rational_expr("(s+1)^-1") == rf("1/(s+1)"));
    CHECK(parse_rational_expr("-s - -s") == RationalFunction());
    CHECK(parse_rational_expr("1/2/2") == RationalFunction::from_rational(BigRational(1, 4)));
    CHECK(parse_rational_expr("t^2", "t") == rf("s^2"));
    CHECK_THROWS_AS(parse_rational_expr("s +"), ExprParseError);
    CHECK_THROWS_AS(parse_rational_expr("(s"), ExprParseError);
    CHECK_THROWS_AS(parse_rational_expr("s s"), ExprParseError);
    CHECK_THROWS_AS(parse_rational_expr("1/(s - s)"), ExprParseError);
    CHECK_THROWS_AS(parse_rational_expr("x + 1"), ExprParseError);
}

TEST_CASE("canonical output round-trips through the parser") {
    std::mt19937 rng(71);
    std::uniform_int_distribution<int> coeffDist(-9, 9), degDist(0, 3);
    auto randomPoly = [&] {
        std::vector<BigRational> cs;
        const int deg = degDist(rng);
        for (int i = 0; i <= deg; ++i) cs.emplace_back(coeffDist(rng));
        return Poly(std::move(cs));
    };
    int produced = 0;
    while (produced < 200) {
        const Poly num = randomPoly();
        const Poly den = randomPoly();
        if (den.is_zero()) continue;
        ++produced;
        const RationalFunction x(num, den);
        CHECK(parse_rational_expr(format_rational_function(x)) == x);
    }
}

TEST_CASE("resolution JSON diagnostics carry field paths") {
    CHECK_THROWS_WITH_AS(
        (void)parse_resolution_json(R"({"divisors": [{"id": "E1", "N": 2, "nu": 0}], "strata": []})"),
        "divisors[0].nu: discrepancy must be >= 1", std::invalid_argument);
    CHECK_THROWS_WITH_AS(
        (void)parse_resolution_json(
            R"({"divisors": [{"id": "E1", "N": 2, "nu": 1}], "strata": [{"divisors": ["EX"], "euler": 1}]})"),
        "stratum references unknown divisor id: EX", std::invalid_argument);
    CHECK_THROWS_AS((void)parse_resolution_json("{"), std::invalid_argument);
}

TEST_CASE("bundle JSON requires the untwisted entry and parses its variable") {
    CHECK_THROWS_WITH_AS(
        (void)parse_bundle_json(R"({"entries": [{"twist": 2, "num": "1", "den": "s"}]})"),
        "bundle: entry at twist 1 is required", std::invalid_argument);
    const ZetaBundle bundle = parse_bundle_json(
        R"json({"variable": "t", "entries": [{"twist": 1, "num": "10*t + 11", "den": "(30*t + 11)*(t + 1)"}]})json");
    CHECK(bundle.get(1) == rf("(10*s + 11)/((30*s + 11)*(s + 1))"));
}

TEST_CASE("bundle serialization round-trips") {
    ZetaBundle bundle;
    bundle.set(1, rf("(10*s + 11)/((30*s + 11)*(s + 1))"));
    bundle.set(5, rf("5/(30*s + 11)"));
    const ZetaBundle back = parse_bundle_json(bundle_to_json(bundle));
    CHECK(back.get(1) == bundle.get(1));
    CHECK(back.get(5) == bundle.get(5));
}

TEST_CASE("resolution serialization round-trips with classes") {
    ResolutionData res;
    res.divisors.push_back({"E", 2, 2});
    LaurentLT cls = LaurentLT::l_minus_one();
    res.strata.push_back({{"E"}, 0, cls});
    const ResolutionData back = parse_resolution_json(resolution_to_json(res));
    REQUIRE(back.strata.size() == 1);
    REQUIRE(back.strata[0].class_in_L.has_value());
    CHECK(*back.strata[0].class_in_L == cls);
}
