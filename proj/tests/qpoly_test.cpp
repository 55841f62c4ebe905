#include "fiberprod/qpoly.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace fiberprod;
using oracle::poly;

TEST(Rational, ParsesLiterals)
{
    EXPECT_EQ(parse_rational("12"), Rational(12));
    EXPECT_EQ(parse_rational("-3/4"), Rational(-3) / 4);
    EXPECT_EQ(parse_rational("+6/4"), Rational(3) / 2);
    EXPECT_EQ(to_string(Rational(-3) / 4), "-3/4");
}

TEST(Rational, RejectsMalformedLiterals)
{
    for (const char* bad : {"", "1/", "/2", "1/0", "1.5", "1/-2", "x", "1 /2", "--1"}) {
        try {
            parse_rational(bad);
            ADD_FAILURE() << "accepted " << bad;
        }
        catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::MalformedInput) << bad;
        }
    }
}

TEST(RatPoly, ArithmeticAndTrimming)
{
    const RatPoly p = poly({-1, 0, 1});  // t^2 - 1
    const RatPoly q = poly({1, 1});      // t + 1
    EXPECT_EQ(p.degree(), 2);
    EXPECT_EQ(RatPoly().degree(), -1);
    EXPECT_TRUE((p - p).is_zero());
    EXPECT_EQ(p / q, poly({-1, 1}));
    EXPECT_TRUE((p % q).is_zero());
    EXPECT_EQ(poly({0, 0, 0}), RatPoly());
    EXPECT_EQ(p(Rational(3)), Rational(8));
    EXPECT_EQ(p.derivative(), poly({0, 2}));
    EXPECT_EQ(pow(q, 3), poly({1, 3, 3, 1}));
}

TEST(RatPoly, DivisionByZeroIsRejected)
{
    EXPECT_THROW(divmod(poly({1, 1}), RatPoly()), Error);
}

TEST(RatPoly, PrintsAndParses)
{
    const RatPoly p({Rational(3), Rational(-1) / 2, Rational(1)});
    EXPECT_EQ(to_string(p), "t^2-1/2*t+3");
    EXPECT_EQ(to_string(poly({0, 0, 0, 2})), "2*t^3");
    EXPECT_EQ(parse_polynomial("t^2-1/2*t+3"), p);
    EXPECT_EQ(parse_polynomial(to_string(p)), p);
}

TEST(Gcd, ExampleFromRoots)
{
    // (t-1)(t+1) and (t-1)(t-2)
    EXPECT_EQ(gcd(poly({-1, 0, 1}), poly({2, -3, 1})), poly({-1, 1}));
    EXPECT_EQ(gcd(poly({1, 1}), poly({2, 1})), poly({1}));
    EXPECT_EQ(gcd(RatPoly(), poly({4, 2})), poly({2, 1}));
    EXPECT_THROW(gcd(RatPoly(), RatPoly()), Error);
}

TEST(Gcd, HomogeneousFormsKeepTheFactorAtInfinity)
{
    // (t-1)^2 in degree 4 and (t-1)^2 (t-2) in degree 5: common s^2 (t-1)^2
    const auto a = homogenize(poly({1, -2, 1}), 4);
    const auto b = homogenize(poly({1, -2, 1}) * poly({-2, 1}), 5);
    const auto g = gcd(a, b);
    EXPECT_EQ(g.degree, 4);
    EXPECT_EQ(g.valuation_at_infinity(), 2);
    EXPECT_EQ(g.dehomogenize(), poly({1, -2, 1}));
}

TEST(Yun, ExampleDecomposition)
{
    // 3 (t-1)^3 (t+2)^2 t
    const RatPoly p = oracle::multiply_out(3, {{poly({-1, 1}), 3}, {poly({2, 1}), 2}, {poly({0, 1}), 1}});
    const auto d = yun_squarefree(p);
    EXPECT_EQ(d.unit, Rational(3));
    ASSERT_EQ(d.parts.size(), 3u);
    EXPECT_EQ(d.parts[0].component, poly({0, 1}));
    EXPECT_EQ(d.parts[0].multiplicity, 1);
    EXPECT_EQ(d.parts[1].component, poly({2, 1}));
    EXPECT_EQ(d.parts[1].multiplicity, 2);
    EXPECT_EQ(d.parts[2].component, poly({-1, 1}));
    EXPECT_EQ(d.parts[2].multiplicity, 3);
    EXPECT_EQ(d.expand(), p);
}

TEST(Yun, SquareFreeMonicIsItsOwnDecomposition)
{
    const RatPoly p = poly({-2, 0, 1});
    const auto d = yun_squarefree(p);
    ASSERT_EQ(d.parts.size(), 1u);
    EXPECT_EQ(d.parts[0].component, p);
    EXPECT_EQ(d.parts[0].multiplicity, 1);
}

TEST(Discriminant, WorkedExampleSurfaces)
{
    const RatPoly f = Rational(12) * poly({1, 0, -1, 0, 1});
    const RatPoly g = Rational(4) * poly({2, 0, -3, 0, -3, 0, 2});
    const RatPoly expected1 =
        Rational(11664) * oracle::multiply_out(1, {{poly({0, 1}), 4}, {poly({1, 1}), 2}, {poly({-1, 1}), 2}});
    EXPECT_EQ(discriminant(f, g), expected1);

    const RatPoly base = oracle::multiply_out(1, {{poly({-3, 1}), 2}, {poly({-1, 1}), 2}});
    const RatPoly f2 = Rational(3) * base;
    const RatPoly g2 = base * (pow(poly({-2, 1}), 2) + poly({1}));
    const RatPoly expected2 =
        Rational(-108) * oracle::multiply_out(1, {{poly({-3, 1}), 4}, {poly({-1, 1}), 4}, {poly({-2, 1}), 2}});
    EXPECT_EQ(discriminant(f2, g2), expected2);
}

TEST(Discriminant, ConstantCase)
{
    EXPECT_EQ(discriminant(RatPoly(), poly({1})), poly({-27}));
    EXPECT_EQ(discriminant(poly({3}), RatPoly()), poly({27}));
}

TEST(Homogenize, ValuationAtInfinity)
{
    const RatPoly delta = Rational(11664) * poly({0, 0, 0, 0, 1, 0, -2, 0, 1});
    EXPECT_EQ(valuation_at_infinity(delta, 12), 4);
    EXPECT_EQ(valuation_at_infinity(poly({1}), 0), 0);
    const RatPoly delta2 =
        Rational(-108) * oracle::multiply_out(1, {{poly({-3, 1}), 4}, {poly({-1, 1}), 4}, {poly({-2, 1}), 2}});
    EXPECT_EQ(valuation_at_infinity(delta2, 12), 2);
    EXPECT_EQ(homogenize(delta2, 12).degree, 12);
    EXPECT_THROW(homogenize(delta2, 9), Error);
}

TEST(Valuation, AtFinitePlaces)
{
    const RatPoly p = oracle::multiply_out(5, {{poly({-1, 1}), 3}, {poly({-2, 0, 1}), 2}});
    EXPECT_EQ(valuation(p, poly({-1, 1})), 3);
    EXPECT_EQ(valuation(p, poly({-2, 0, 1})), 2);
    EXPECT_EQ(valuation(p, poly({1, 1})), 0);
    EXPECT_TRUE(is_infinite(valuation(RatPoly(), poly({1, 1}))));
}

TEST(QpolyProperty, RandomYunAndGcd)
{
    std::mt19937_64 rng(20261018);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<std::pair<RatPoly, int>> factors;
        const int k = 1 + static_cast<int>(rng() % 3);
        for (int i = 0; i < k; ++i)
            factors.emplace_back(oracle::random_monic(rng, 1 + static_cast<int>(rng() % 2)),
                                 1 + static_cast<int>(rng() % 4));
        const Rational unit = oracle::random_rational(rng) + Rational(10);
        const RatPoly p = oracle::multiply_out(unit, factors);
        const auto d = yun_squarefree(p);
        EXPECT_EQ(d.expand(), p);
        for (std::size_t i = 0; i < d.parts.size(); ++i)
            for (std::size_t j = i + 1; j < d.parts.size(); ++j)
                EXPECT_EQ(gcd(d.parts[i].component, d.parts[j].component).degree(), 0);

        const RatPoly q = oracle::random_poly(rng, 3) * factors[0].first;
        const RatPoly g = gcd(p, q);
        EXPECT_TRUE(divides(g, p));
        EXPECT_TRUE(divides(g, q));
        EXPECT_TRUE(divides(factors[0].first, g));
    }
}

TEST(QpolyProperty, DiscriminantWeightedHomogeneity)
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const RatPoly f = oracle::random_poly(rng, 4), g = oracle::random_poly(rng, 6);
        Rational lambda = oracle::random_rational(rng);
        if (lambda == 0)
            lambda = 1;
        const Rational l2 = lambda * lambda, l4 = l2 * l2, l6 = l4 * l2, l12 = l6 * l6;
        EXPECT_EQ(discriminant(l4 * f, l6 * g), l12 * discriminant(f, g));
    }
}
