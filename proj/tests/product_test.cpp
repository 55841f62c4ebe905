#include "fiberprod/product.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace fiberprod;
using oracle::poly;

namespace {

std::optional<KodairaFiber> I(int n) { return KodairaFiber::multiplicative(n); }
const std::optional<KodairaFiber> II = KodairaFiber::cusp();
const std::optional<KodairaFiber> III = KodairaFiber::tangent();
const std::optional<KodairaFiber> IV = KodairaFiber::triple();

SurfaceModel worked_first()
{
    return analyze_surface(Rational(12) * poly({1, 0, -1, 0, 1}), Rational(4) * poly({2, 0, -3, 0, -3, 0, 2}));
}

SurfaceModel worked_second()
{
    const RatPoly base = poly({-3, 1}) * poly({-3, 1}) * poly({-1, 1}) * poly({-1, 1});
    return analyze_surface(Rational(3) * base, base * poly({5, -4, 1}));
}

WeightedSite site(std::optional<KodairaFiber> a, std::optional<KodairaFiber> b, int w = 1)
{
    WeightedSite s;
    s.pair.first = side(std::move(a));
    s.pair.second = side(std::move(b));
    s.weight = w;
    return s;
}

} // namespace

TEST(PairSingularity, Table)
{
    struct Row {
        std::optional<KodairaFiber> a, b;
        SingularityKind kind;
        int count;
        bool small;
        std::optional<int> chi_e;
    };
    const std::vector<Row> rows = {
        {I(2), I(3), SingularityKind::Node, 6, true, 2},
        {I(3), II, SingularityKind::A2, 3, false, std::nullopt},
        {I(2), III, SingularityKind::A3, 2, true, 2},
        {I(2), IV, SingularityKind::D4, 2, true, 3},
        {II, II, SingularityKind::D4Single, 1, true, 3},
        {II, III, SingularityKind::E6, 1, false, std::nullopt},
        {II, IV, SingularityKind::FactorialTriple, 1, false, std::nullopt},
        {III, III, SingularityKind::TangentPair, 1, true, 4},
        {III, IV, SingularityKind::FactorialAfterBlowup, 1, false, std::nullopt},
        {IV, IV, SingularityKind::SimpleTriple, 1, false, std::nullopt},
    };
    for (const auto& r : rows) {
        for (bool swap : {false, true}) {
            const auto c = swap ? pair_singularity(r.b, r.a) : pair_singularity(r.a, r.b);
            SCOPED_TRACE(c.canonical_name());
            EXPECT_EQ(c.singularity, r.kind);
            EXPECT_EQ(c.count, r.count);
            EXPECT_EQ(c.small_resolution, r.small);
            EXPECT_EQ(c.chi_exceptional, r.chi_e);
        }
    }
}

TEST(PairSingularity, CanonicalNameListsInFirst)
{
    EXPECT_EQ(pair_singularity(IV, I(2)).canonical_name(), "I2xIV");
    EXPECT_EQ(pair_singularity(I(4), I(2)).canonical_name(), "I4xI2");
}

TEST(PairSingularity, SmoothSideAndErrors)
{
    EXPECT_EQ(pair_singularity(I(3), std::nullopt).singularity, SingularityKind::None);
    EXPECT_THROW(pair_singularity(std::nullopt, std::nullopt), Error);
    EXPECT_THROW(pair_singularity(KodairaFiber::non_reduced("I0*"), I(1)), Error);
}

TEST(SmallResolution, Obstructions)
{
    AbstractConfig c;
    c.sites = {site(I(4), II), site(I(8), std::nullopt), site(std::nullopt, I(10))};
    const auto v = small_resolution_exists(c);
    EXPECT_FALSE(v.exists);
    ASSERT_EQ(v.obstructions.size(), 1u);
    EXPECT_THROW(is_projective(c), Error);
}

TEST(Projectivity, Examples)
{
    AbstractConfig generic = oracle::generic_config();
    EXPECT_TRUE(is_projective(generic));

    AbstractConfig i1_common;
    i1_common.sites = {site(I(1), I(3)), site(I(11), std::nullopt), site(std::nullopt, I(9))};
    EXPECT_FALSE(is_projective(i1_common));

    AbstractConfig ii_ii;
    ii_ii.sites = {site(II, II), site(I(10), std::nullopt), site(std::nullopt, I(10))};
    EXPECT_TRUE(small_resolution_exists(ii_ii).exists);
    EXPECT_FALSE(is_projective(ii_ii));
}

TEST(BuildProduct, WorkedExample)
{
    const auto pc = build_product(worked_first(), worked_second());
    EXPECT_EQ(pc.d, 0);
    ASSERT_EQ(pc.matched.common.size(), 2u);
    std::vector<std::string> common;
    for (const auto& pp : pc.pairs)
        if (pp.pair.first && pp.pair.second)
            common.push_back(pp.place.to_string() + ":" + pp.pair.canonical_name());
    EXPECT_EQ(common, (std::vector<std::string>{"t-1:I2xIV", "inf:I4xI2"}));
    EXPECT_TRUE(small_resolution_exists(pc).exists);
    EXPECT_TRUE(is_projective(pc));
    EXPECT_TRUE(pc.warnings.empty());
}

TEST(BuildProduct, IsogenyDetection)
{
    const RatPoly f = poly({1, 0, 0, 0, 1}), g = poly({3, 1, 0, 0, 0, 0, 1});
    const auto s1 = analyze_surface(f, g);
    const auto s2 = analyze_surface(Rational(4) * f, Rational(8) * g);
    EXPECT_TRUE(weierstrass_equivalent(f, g, Rational(4) * f, Rational(8) * g));
    EXPECT_FALSE(weierstrass_equivalent(f, g, Rational(4) * f, Rational(-3) * g));
    const auto pc = build_product(s1, s2);
    EXPECT_EQ(pc.d, 1);
    EXPECT_TRUE(pc.d_detected);

    ProductOptions no;
    no.isogenous = false;
    const auto forced = build_product(s1, s2, no);
    EXPECT_EQ(forced.d, 1);
    EXPECT_FALSE(forced.warnings.empty());

    ProductOptions yes;
    yes.isogenous = true;
    EXPECT_EQ(build_product(worked_first(), worked_second(), yes).d, 1);
}

TEST(BuildProduct, InvolutionOverrides)
{
    const auto pc = build_product(worked_first(), worked_second());
    InvolutionSpec inv;
    inv.kind = InvolutionSpec::Kind::Custom;
    inv.overrides.push_back({1, Place::infinity(), InvolutionSpec::Action::Odd});
    const auto c = pc.sites(inv);
    bool found = false;
    for (const auto& s : c.sites)
        if (s.label == "inf") {
            EXPECT_EQ(s.pair.first.involution, LocalInvolution::Alternate);
            found = true;
        }
    EXPECT_TRUE(found);

    InvolutionSpec bad = inv;
    bad.overrides[0].action = InvolutionSpec::Action::SwapComponents;
    EXPECT_THROW(pc.sites(bad), Error);

    InvolutionSpec unused;
    unused.kind = InvolutionSpec::Kind::Custom;
    unused.overrides.push_back({1, parse_place("t-7"), InvolutionSpec::Action::Odd});
    EXPECT_THROW(pc.sites(unused), Error);

    InvolutionSpec zero_with_override = inv;
    zero_with_override.kind = InvolutionSpec::Kind::ZeroSection;
    EXPECT_THROW(pc.sites(zero_with_override), Error);
}
