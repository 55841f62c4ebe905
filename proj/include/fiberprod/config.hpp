#ifndef FIBERPROD_CONFIG_HPP
#define FIBERPROD_CONFIG_HPP

// Fiber configurations of a fiber product stripped of Weierstrass data:
// a multiset of fiber pairs over the points of the base line.

#include "fiberprod/error.hpp"
#include "fiberprod/kodaira.hpp"

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fiberprod {

/// How a fiberwise involution x -> b - x acts on one singular fiber.
/// Standard is the action of x -> -x: on I_2k it preserves two opposite
/// components, on III it preserves both components. Alternate is the other
/// possibility: on I_2k it fixes two opposite nodes (class of b odd), on III
/// it swaps the components. Other fiber types have a single possible action.
enum class LocalInvolution { Standard, Alternate };

/// One side of a fiber pair; an empty fiber means the fiber is smooth.
struct FiberSide {
    std::optional<KodairaFiber> fiber;
    LocalInvolution involution = LocalInvolution::Standard;

    bool singular() const { return fiber.has_value(); }
    int components() const { return fiber ? fiber->components() : 1; }
    int euler() const { return fiber ? fiber->euler() : 0; }
    std::string name() const { return fiber_name(fiber); }

    friend bool operator==(const FiberSide&, const FiberSide&) = default;
    friend auto operator<=>(const FiberSide&, const FiberSide&) = default;
};

inline FiberSide side(std::optional<KodairaFiber> f, LocalInvolution inv = LocalInvolution::Standard)
{
    return FiberSide{std::move(f), inv};
}

struct SitePair {
    FiberSide first;
    FiberSide second;

    bool common() const { return first.singular() && second.singular(); }

    /// "I2xIV"; smooth sides print as I0.
    std::string name() const { return first.name() + "x" + second.name(); }

    friend bool operator==(const SitePair&, const SitePair&) = default;
    friend auto operator<=>(const SitePair&, const SitePair&) = default;
};

/// A fiber pair carried by `weight` geometric points of the base.
struct WeightedSite {
    SitePair pair;
    int weight = 1;
    std::string label;

    friend bool operator==(const WeightedSite&, const WeightedSite&) = default;
};

inline bool involution_allowed(const FiberSide& s)
{
    if (s.involution == LocalInvolution::Standard)
        return true;
    if (!s.fiber)
        return false;
    if (s.fiber->kind() == FiberKind::I)
        return s.fiber->n() % 2 == 0;
    return s.fiber->kind() == FiberKind::III;
}

struct AbstractConfig {
    std::vector<WeightedSite> sites;
    int d = 0;

    /// Checks reducedness, involution data, d and sum chi(F) = 12 per surface.
    void validate() const
    {
        if (d != 0 && d != 1)
            fail(ErrorKind::InvalidArgument, "d must be 0 or 1");
        int chi1 = 0, chi2 = 0;
        for (const auto& s : sites) {
            if (s.weight < 1)
                fail(ErrorKind::InvalidArgument, "site weight must be positive");
            if (!s.pair.first.singular() && !s.pair.second.singular())
                fail(ErrorKind::InvalidArgument, "site " + s.pair.name() + " has no singular fiber");
            for (const FiberSide* fs : {&s.pair.first, &s.pair.second}) {
                if (fs->fiber && !fs->fiber->is_reduced())
                    fail(ErrorKind::NonReducedFiber, "non-reduced fiber " + fs->name());
                if (!involution_allowed(*fs))
                    fail(ErrorKind::InvalidArgument,
                         "alternate involution action only exists on I_2k and III fibers, not " + fs->name());
            }
            chi1 += s.weight * s.pair.first.euler();
            chi2 += s.weight * s.pair.second.euler();
        }
        if (chi1 != 12 || chi2 != 12)
            fail(ErrorKind::NotEllipticSurface, "fiber Euler numbers must sum to 12 on each surface (got " +
                                                    std::to_string(chi1) + " and " + std::to_string(chi2) + ")");
    }

    /// Canonical form: equal pairs merged, sorted, labels dropped.
    AbstractConfig normalized() const
    {
        std::map<SitePair, int> counts;
        for (const auto& s : sites)
            counts[s.pair] += s.weight;
        AbstractConfig out;
        out.d = d;
        for (const auto& [pair, w] : counts)
            if (w > 0)
                out.sites.push_back({pair, w, {}});
        return out;
    }

    /// Total number of geometric points over which both fibers are singular.
    int common_points() const
    {
        int n = 0;
        for (const auto& s : sites)
            if (s.pair.common())
                n += s.weight;
        return n;
    }

    bool semistable() const
    {
        for (const auto& s : sites)
            for (const FiberSide* fs : {&s.pair.first, &s.pair.second})
                if (fs->fiber && !fs->fiber->is_semistable())
                    return false;
        return true;
    }

    friend bool operator==(const AbstractConfig&, const AbstractConfig&) = default;
};

} // namespace fiberprod

#endif
