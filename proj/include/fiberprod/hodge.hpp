#ifndef FIBERPROD_HODGE_HPP
#define FIBERPROD_HODGE_HPP

// Hodge numbers and Euler characteristics of small resolutions of fiber
// products, from the fiber types alone. Every sum is over geometric points,
// so each site counts with its weight.

#include "fiberprod/config.hpp"
#include "fiberprod/error.hpp"
#include "fiberprod/product.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fiberprod {

namespace detail {

inline void require_small_resolution(const AbstractConfig& config)
{
    config.validate();
    const auto verdict = small_resolution_exists(config);
    if (!verdict.exists) {
        std::string where;
        for (const auto& o : verdict.obstructions)
            where += (where.empty() ? "" : ", ") + o;
        fail(ErrorKind::NoSmallResolution, "fiber product has no small resolution: " + where);
    }
}

} // namespace detail

/// chi(X) = sum over common points of chi(F) chi(F').
inline long chi_singular(const AbstractConfig& config)
{
    config.validate();
    long chi = 0;
    for (const auto& s : config.sites)
        if (s.pair.common())
            chi += static_cast<long>(s.weight) * s.pair.first.euler() * s.pair.second.euler();
    return chi;
}

inline long h11(const AbstractConfig& config)
{
    detail::require_small_resolution(config);
    long h = 19 + config.d;
    for (const auto& s : config.sites) {
        const long b1 = s.pair.first.components(), b2 = s.pair.second.components();
        h += s.weight * ((b1 * b2 - 1) - (b1 - 1) - (b2 - 1));
    }
    return h;
}

inline long h12(const AbstractConfig& config)
{
    detail::require_small_resolution(config);
    long h = 19 + config.d;
    for (const auto& s : config.sites)
        if (s.pair.common())
            h -= s.weight * (s.pair.first.components() + s.pair.second.components() - 1L);
    return h;
}

struct ChiResolved {
    /// chi(X) + sum over singular points of (chi(E) - 1).
    long general = 0;
    /// 2 sum b b' over common points; only meaningful when projective.
    long simplified = 0;
    bool projective = true;

    long value() const { return general; }
};

inline ChiResolved chi_resolved(const AbstractConfig& config)
{
    detail::require_small_resolution(config);
    ChiResolved out;
    out.general = chi_singular(config);
    for (const auto& s : config.sites) {
        if (!s.pair.common())
            continue;
        const FiberPairClass c = pair_singularity(s.pair);
        if (!c.chi_exceptional)
            fail(ErrorKind::Unsupported, "no exceptional-curve Euler number for " + s.pair.name());
        out.general += static_cast<long>(s.weight) * c.count * (*c.chi_exceptional - 1);
        out.simplified += 2L * s.weight * s.pair.first.components() * s.pair.second.components();
        if (c.projective_obstruction)
            out.projective = false;
    }
    if (out.projective && out.general != out.simplified)
        fail(ErrorKind::InternalInconsistency, "Euler characteristic formulas disagree: " +
                                                   std::to_string(out.general) + " vs " +
                                                   std::to_string(out.simplified));
    return out;
}

struct HodgeLedgerEntry {
    std::string site;
    std::string pair;
    int weight = 0;
    long h11 = 0;
    long h12 = 0;
    long chi_singular = 0;
    long chi_resolved = 0;
};

struct HodgeReport {
    long h11 = 0;
    long h12 = 0;
    long chi_resolved = 0;
    long chi_singular = 0;
    int d = 0;
    bool projective = true;
    /// h11 - h12 == chi_resolved / 2.
    bool consistent = true;
    std::vector<HodgeLedgerEntry> ledger;
    std::vector<std::string> warnings;
};

inline HodgeReport hodge_report(const AbstractConfig& config)
{
    HodgeReport r;
    r.h11 = h11(config);
    r.h12 = h12(config);
    const ChiResolved chi = chi_resolved(config);
    r.chi_resolved = chi.general;
    r.chi_singular = chi_singular(config);
    r.d = config.d;
    r.projective = chi.projective;

    for (const auto& s : config.sites) {
        HodgeLedgerEntry e;
        e.site = site_label(s);
        e.pair = s.pair.name();
        e.weight = s.weight;
        const long b1 = s.pair.first.components(), b2 = s.pair.second.components();
        e.h11 = s.weight * ((b1 * b2 - 1) - (b1 - 1) - (b2 - 1));
        if (s.pair.common()) {
            const FiberPairClass c = pair_singularity(s.pair);
            e.h12 = -s.weight * (b1 + b2 - 1);
            e.chi_singular = static_cast<long>(s.weight) * s.pair.first.euler() * s.pair.second.euler();
            e.chi_resolved = e.chi_singular + static_cast<long>(s.weight) * c.count * (*c.chi_exceptional - 1);
        }
        r.ledger.push_back(std::move(e));
    }

    if (r.h12 < 0)
        fail(ErrorKind::InvalidArgument, "configuration imposes more conditions than there are parameters (h12=" +
                                             std::to_string(r.h12) + "); no such pair of surfaces exists");
    if (r.h11 < 1)
        fail(ErrorKind::InternalInconsistency,
             "Hodge numbers out of range: h11=" + std::to_string(r.h11) + " h12=" + std::to_string(r.h12));

    r.consistent = r.chi_resolved % 2 == 0 && r.h11 - r.h12 == r.chi_resolved / 2;
    if (!r.consistent) {
        if (r.projective)
            fail(ErrorKind::InternalInconsistency, "h11 - h12 != chi/2 on a projective configuration");
        r.warnings.push_back("non-projective II x II / III x III fibers: the fiber-component Hodge formulas give "
                             "h11 - h12 = " + std::to_string(r.h11 - r.h12) +
                             " but the exceptional-curve Euler characteristic is " +
                             std::to_string(r.chi_resolved) + " (simplified formula would give " +
                             std::to_string(chi.simplified) + "); divergence reported, not reconciled");
    }
    return r;
}

} // namespace fiberprod

#endif
