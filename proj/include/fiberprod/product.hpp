#ifndef FIBERPROD_PRODUCT_HPP
#define FIBERPROD_PRODUCT_HPP

// Singularities of the fiber product S1 x_P1 S2 and the existence and
// projectivity of small resolutions.

#include "fiberprod/config.hpp"
#include "fiberprod/error.hpp"
#include "fiberprod/kodaira.hpp"
#include "fiberprod/places.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fiberprod {

enum class SingularityKind {
    None,
    Node,             // I_n x I_m
    A2,               // I_n x II
    A3,               // I_n x III
    D4,               // I_n x IV
    D4Single,         // II x II
    E6,               // II x III
    FactorialTriple,  // II x IV
    TangentPair,      // III x III
    FactorialAfterBlowup, // III x IV
    SimpleTriple,     // IV x IV
};

inline std::string to_string(SingularityKind k)
{
    switch (k) {
    case SingularityKind::None: return "none";
    case SingularityKind::Node: return "node";
    case SingularityKind::A2: return "A2";
    case SingularityKind::A3: return "A3";
    case SingularityKind::D4: return "D4";
    case SingularityKind::D4Single: return "D4 (II x II)";
    case SingularityKind::E6: return "E6";
    case SingularityKind::FactorialTriple: return "factorial triple point";
    case SingularityKind::TangentPair: return "III x III point";
    case SingularityKind::FactorialAfterBlowup: return "III x IV point";
    case SingularityKind::SimpleTriple: return "simple triple point";
    }
    return "?";
}

/// Local data of the threefold over one point of the base.
struct FiberPairClass {
    std::optional<KodairaFiber> first;
    std::optional<KodairaFiber> second;
    SingularityKind singularity = SingularityKind::None;
    /// Singular points of X in the fiber over one geometric point.
    int count = 0;
    bool small_resolution = true;
    /// The pair prevents the small resolution from being projective.
    bool projective_obstruction = false;
    /// Euler number of the exceptional curve of one resolved point.
    std::optional<int> chi_exceptional;
    std::string local_equation;

    /// Pair name with I_n listed first when exactly one side is I_n.
    std::string canonical_name() const
    {
        const bool swap = second && second->kind() == FiberKind::I && (!first || first->kind() != FiberKind::I);
        return swap ? fiber_name(second) + "x" + fiber_name(first) : fiber_name(first) + "x" + fiber_name(second);
    }

    friend bool operator==(const FiberPairClass&, const FiberPairClass&) = default;
};

inline FiberPairClass pair_singularity(const std::optional<KodairaFiber>& first,
                                       const std::optional<KodairaFiber>& second)
{
    if (!first && !second)
        fail(ErrorKind::InvalidArgument, "pair_singularity needs at least one singular fiber");
    for (const auto* f : {&first, &second})
        if (*f && !(*f)->is_reduced())
            fail(ErrorKind::InvalidArgument, "non-reduced fiber " + (*f)->name() + " in a fiber pair");

    FiberPairClass c;
    c.first = first;
    c.second = second;
    if (!first || !second) {
        c.local_equation = "product with a smooth fiber";
        return c;
    }

    // a is the "smaller" kind so the table only needs one triangle
    KodairaFiber a = *first, b = *second;
    if (b.kind() < a.kind())
        std::swap(a, b);
    const bool one_is_i1 = (a.kind() == FiberKind::I && a.n() == 1) || (b.kind() == FiberKind::I && b.n() == 1);

    auto set = [&](SingularityKind k, int count, bool small, std::optional<int> chi, const char* eq) {
        c.singularity = k;
        c.count = count;
        c.small_resolution = small;
        c.chi_exceptional = small ? chi : std::nullopt;
        c.local_equation = eq;
    };

    switch (a.kind()) {
    case FiberKind::I:
        switch (b.kind()) {
        case FiberKind::I: set(SingularityKind::Node, a.n() * b.n(), true, 2, "xy=u^2+v^2"); break;
        case FiberKind::II: set(SingularityKind::A2, a.n(), false, {}, "xy=u^2-v^3"); break;
        case FiberKind::III: set(SingularityKind::A3, a.n(), true, 2, "xy=u(v^2-u)"); break;
        case FiberKind::IV: set(SingularityKind::D4, a.n(), true, 3, "xy=uv(u+v)"); break;
        case FiberKind::NonReduced: break;
        }
        break;
    case FiberKind::II:
        switch (b.kind()) {
        case FiberKind::II: set(SingularityKind::D4Single, 1, true, 3, "x^2-y^3=u^2-v^3"); break;
        case FiberKind::III: set(SingularityKind::E6, 1, false, {}, "x^2-y^3=u(v^2-u)"); break;
        case FiberKind::IV: set(SingularityKind::FactorialTriple, 1, false, {}, "x^2-y^3=uv(u+v)"); break;
        default: break;
        }
        break;
    case FiberKind::III:
        if (b.kind() == FiberKind::III)
            set(SingularityKind::TangentPair, 1, true, 4, "x(y^2-x)=u(v^2-u)");
        else
            set(SingularityKind::FactorialAfterBlowup, 1, false, {}, "x(y^2-x)=uv(u+v)");
        break;
    case FiberKind::IV:
        set(SingularityKind::SimpleTriple, 1, false, {}, "xy(x+y)=uv(u+v)");
        break;
    case FiberKind::NonReduced: break;
    }

    c.projective_obstruction = c.small_resolution &&
                               (c.singularity == SingularityKind::D4Single ||
                                c.singularity == SingularityKind::TangentPair || one_is_i1);
    return c;
}

inline FiberPairClass pair_singularity(const SitePair& p)
{
    return pair_singularity(p.first.fiber, p.second.fiber);
}

struct ResolutionVerdict {
    bool exists = true;
    /// Labels (or pair names) of the sites without a small resolution.
    std::vector<std::string> obstructions;
};

inline std::string site_label(const WeightedSite& s)
{
    return s.label.empty() ? s.pair.name() : s.label;
}

inline ResolutionVerdict small_resolution_exists(const AbstractConfig& config)
{
    ResolutionVerdict v;
    for (const auto& s : config.sites) {
        if (!s.pair.common())
            continue;
        if (!pair_singularity(s.pair).small_resolution) {
            v.exists = false;
            v.obstructions.push_back(site_label(s) + " (" + s.pair.name() + ")");
        }
    }
    return v;
}

inline bool is_projective(const AbstractConfig& config)
{
    if (!small_resolution_exists(config).exists)
        fail(ErrorKind::PreconditionViolation, "projectivity asked for a fiber product without small resolution");
    for (const auto& s : config.sites)
        if (s.pair.common() && pair_singularity(s.pair).projective_obstruction)
            return false;
    return true;
}

/// A fiberwise involution x -> a - x on X, described fiber by fiber.
struct InvolutionSpec {
    enum class Kind { ZeroSection, Custom };

    enum class Action { Even, Odd, SwapComponents, FixBoth };

    struct Override {
        int surface = 1;  // 1 or 2
        Place place = Place::infinity();
        Action action = Action::Even;
    };

    Kind kind = Kind::ZeroSection;
    std::vector<Override> overrides;
};

inline LocalInvolution resolve_action(const KodairaFiber& fiber, InvolutionSpec::Action action,
                                      const std::string& where)
{
    using A = InvolutionSpec::Action;
    const bool even_i = fiber.kind() == FiberKind::I && fiber.n() % 2 == 0;
    if (action == A::Even || action == A::Odd) {
        if (!even_i)
            fail(ErrorKind::InvalidArgument, "parity override at " + where + " needs an I_2k fiber, found " + fiber.name());
        return action == A::Odd ? LocalInvolution::Alternate : LocalInvolution::Standard;
    }
    if (fiber.kind() != FiberKind::III)
        fail(ErrorKind::InvalidArgument, "III override at " + where + " needs a III fiber, found " + fiber.name());
    return action == A::SwapComponents ? LocalInvolution::Alternate : LocalInvolution::Standard;
}

struct PlacedPair {
    Place place = Place::infinity();
    std::optional<ValuationProfile> first_profile;
    std::optional<ValuationProfile> second_profile;
    FiberPairClass pair;
};

struct ProductOptions {
    /// User assertion on isogeny of the generic fibers; nullopt = detect.
    std::optional<bool> isogenous;
    /// Extra polynomials along whose roots places are split.
    std::vector<RatPoly> refine_by;
};

/// True when the Weierstrass models with (f1, g1) and (f2, g2) are isomorphic
/// over C(t) by a constant rescaling: f1 = m^2 f2, g1 = m^3 g2.
inline bool weierstrass_equivalent(const RatPoly& f1, const RatPoly& g1, const RatPoly& f2, const RatPoly& g2)
{
    if (f1.is_zero() != f2.is_zero() || g1.is_zero() != g2.is_zero())
        return false;
    auto ratio = [](const RatPoly& a, const RatPoly& b) -> std::optional<Rational> {
        const Rational r = a.leading() / b.leading();
        if (a == b * r)
            return r;
        return std::nullopt;
    };
    std::optional<Rational> rf, rg;
    if (!f1.is_zero() && !(rf = ratio(f1, f2)))
        return false;
    if (!g1.is_zero() && !(rg = ratio(g1, g2)))
        return false;
    if (rf && rg) {
        // m = rg / rf must satisfy m^2 = rf
        const Rational m = *rg / *rf;
        return m * m == *rf;
    }
    return true;  // one of f, g vanishes: a complex m always exists
}

struct ProductConfig {
    SurfaceModel first;
    SurfaceModel second;
    MatchedPlaces matched;
    std::vector<PlacedPair> pairs;
    int d = 0;
    bool d_detected = false;
    std::vector<std::string> warnings;

    /// Fiber configuration with involution data resolved from `inv`.
    AbstractConfig sites(const InvolutionSpec& inv = {}) const
    {
        if (inv.kind == InvolutionSpec::Kind::ZeroSection && !inv.overrides.empty())
            fail(ErrorKind::InvalidArgument, "the zero-section involution does not take overrides");
        std::vector<bool> used(inv.overrides.size(), false);
        AbstractConfig out;
        out.d = d;
        for (const auto& pp : pairs) {
            WeightedSite s;
            s.pair.first = side(pp.pair.first);
            s.pair.second = side(pp.pair.second);
            s.weight = pp.place.degree();
            s.label = pp.place.to_string();
            for (std::size_t k = 0; k < inv.overrides.size(); ++k) {
                const auto& o = inv.overrides[k];
                if (o.place != pp.place)
                    continue;
                FiberSide& target = o.surface == 1 ? s.pair.first : s.pair.second;
                const std::string where = "surface " + std::to_string(o.surface) + " place " + pp.place.to_string();
                if (!target.fiber)
                    fail(ErrorKind::InvalidArgument, "override at " + where + ": fiber is smooth");
                target.involution = resolve_action(*target.fiber, o.action, where);
                used[k] = true;
            }
            out.sites.push_back(std::move(s));
        }
        for (std::size_t k = 0; k < used.size(); ++k)
            if (!used[k])
                fail(ErrorKind::InvalidArgument, "override place " + inv.overrides[k].place.to_string() +
                                                     " is not a singular place of surface " +
                                                     std::to_string(inv.overrides[k].surface));
        return out;
    }
};

inline ProductConfig build_product(SurfaceModel first, SurfaceModel second, const ProductOptions& options = {})
{
    ProductConfig config;
    if (!first.all_reduced() || !second.all_reduced())
        fail(ErrorKind::NonReducedFiber, "fiber products are only built from surfaces with reduced fibers");

    auto p1 = first.profiles();
    auto p2 = second.profiles();
    for (const auto& r : options.refine_by) {
        p1 = refine_profiles(p1, r);
        p2 = refine_profiles(p2, r);
    }
    config.matched = match_places(p1, p2);

    auto classify = [](const ValuationProfile& p) { return classify_fiber(p.v_f, p.v_g, p.v_delta); };
    for (const auto& c : config.matched.common)
        config.pairs.push_back({c.place, c.first, c.second, pair_singularity(classify(c.first), classify(c.second))});
    for (const auto& p : config.matched.only_first)
        config.pairs.push_back({p.place, p, std::nullopt, pair_singularity(classify(p), std::nullopt)});
    for (const auto& p : config.matched.only_second)
        config.pairs.push_back({p.place, std::nullopt, p, pair_singularity(std::nullopt, classify(p))});
    std::sort(config.pairs.begin(), config.pairs.end(),
              [](const PlacedPair& a, const PlacedPair& b) { return a.place < b.place; });

    const bool equivalent = weierstrass_equivalent(first.f, first.g, second.f, second.g);
    if (options.isogenous) {
        config.d = *options.isogenous ? 1 : 0;
        if (!*options.isogenous && equivalent) {
            config.d = 1;
            config.warnings.push_back("surfaces have isomorphic Weierstrass data; d(X) set to 1 despite isogenous=false");
        }
    }
    else {
        config.d = equivalent ? 1 : 0;
        config.d_detected = equivalent;
    }

    for (const auto& c : config.matched.common)
        if (c.place.degree() > 1)
            config.warnings.push_back("common place " + c.place.to_string() + " is not rational (degree " +
                                      std::to_string(c.place.degree()) + "); counts are degree-weighted");

    config.first = std::move(first);
    config.second = std::move(second);
    return config;
}

inline ResolutionVerdict small_resolution_exists(const ProductConfig& config)
{
    return small_resolution_exists(config.sites());
}

inline bool is_projective(const ProductConfig& config)
{
    return is_projective(config.sites());
}

} // namespace fiberprod

#endif
