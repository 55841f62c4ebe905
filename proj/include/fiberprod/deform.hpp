#ifndef FIBERPROD_DEFORM_HPP
#define FIBERPROD_DEFORM_HPP

// Dimension of the deformation space by counting the conditions that the
// common singular fibers impose on Weierstrass data, and the generic
// splitting of fibers under deformation.

#include "fiberprod/config.hpp"
#include "fiberprod/error.hpp"
#include "fiberprod/hodge.hpp"

#include <string>
#include <vector>

namespace fiberprod {

struct DeformationReport {
    /// Coefficients of (f, g, f', g') of degrees (4, 6, 4, 6).
    int ambient_dim = 24;
    int conditions = 0;
    int dim_q = 0;
    /// Automorphisms of the base line.
    int mobius_dim = 3;
    /// One Weierstrass rescaling per surface.
    int scaling_dim = 2;
    int deformation_dim = 0;
};

inline DeformationReport deformation_dimension(const AbstractConfig& config)
{
    detail::require_small_resolution(config);
    DeformationReport r;
    for (const auto& s : config.sites) {
        if (!s.pair.common())
            continue;
        r.conditions += s.weight * (s.pair.first.components() + s.pair.second.components() - 1);
    }
    // isogenous pairs satisfy one condition fewer
    r.conditions -= config.d;
    r.dim_q = r.ambient_dim - r.conditions;
    r.deformation_dim = r.dim_q - r.mobius_dim - r.scaling_dim;

    const long expected = h12(config);
    if (r.deformation_dim != expected)
        fail(ErrorKind::InternalInconsistency, "deformation count " + std::to_string(r.deformation_dim) +
                                                   " differs from h12 = " + std::to_string(expected));
    return r;
}

namespace detail {

inline FiberSide i1_side() { return side(KodairaFiber::multiplicative(1)); }

} // namespace detail

/// Generic splitting under deformation:
///   F x I0   -> chi(F) copies of I1 x I0,
///   IV x In  -> I3 x In + I1 x I0,
///   III x In -> I2 x In + I1 x I0,
/// I_n x I_m, III x III and II x II keep their type. Result is normalized.
inline AbstractConfig generic_split(const AbstractConfig& config)
{
    config.validate();
    AbstractConfig out;
    out.d = config.d;
    for (const auto& s : config.sites) {
        const SitePair& p = s.pair;
        if (!p.common()) {
            const bool first_singular = p.first.singular();
            const FiberSide& f = first_singular ? p.first : p.second;
            SitePair split;
            (first_singular ? split.first : split.second) = detail::i1_side();
            out.sites.push_back({split, s.weight * f.euler(), {}});
            continue;
        }
        auto degenerate_side = [](const FiberSide& unstable, const FiberSide& multiplicative, bool unstable_first,
                                  int weight, AbstractConfig& acc) {
            const int n = unstable.fiber->kind() == FiberKind::IV ? 3 : 2;
            SitePair kept;
            (unstable_first ? kept.first : kept.second) = side(KodairaFiber::multiplicative(n));
            (unstable_first ? kept.second : kept.first) = multiplicative;
            acc.sites.push_back({kept, weight, {}});
            SitePair extra;
            (unstable_first ? extra.first : extra.second) = detail::i1_side();
            acc.sites.push_back({extra, weight, {}});
        };
        const FiberKind k1 = p.first.fiber->kind(), k2 = p.second.fiber->kind();
        const bool splits1 = (k1 == FiberKind::III || k1 == FiberKind::IV) && k2 == FiberKind::I;
        const bool splits2 = (k2 == FiberKind::III || k2 == FiberKind::IV) && k1 == FiberKind::I;
        if (splits1)
            degenerate_side(p.first, p.second, true, s.weight, out);
        else if (splits2)
            degenerate_side(p.second, p.first, false, s.weight, out);
        else
            out.sites.push_back({p, s.weight, {}});
    }
    return out.normalized();
}

} // namespace fiberprod

#endif
