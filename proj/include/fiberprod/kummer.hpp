#ifndef FIBERPROD_KUMMER_HPP
#define FIBERPROD_KUMMER_HPP

// Invariants of the Kummer fibration: the resolved quotient of a fiber
// product by a fiberwise involution x -> a - x.

#include "fiberprod/config.hpp"
#include "fiberprod/error.hpp"
#include "fiberprod/hodge.hpp"
#include "fiberprod/product.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fiberprod {

/// Local behaviour of the involution at one of its fixed points on a fiber.
enum class FixedPointType {
    Smooth,            // smooth point of the fiber
    SwappedNode,       // node, local branches interchanged
    SwappedTangency,   // III singular point, components interchanged
    FixedTangency,     // III singular point, each component preserved
    TriplePoint,       // IV singular point, two components interchanged
    Cusp,              // II singular point
};

inline std::vector<FixedPointType> fixed_points(const FiberSide& s)
{
    using T = FixedPointType;
    if (!s.fiber)
        return {T::Smooth, T::Smooth, T::Smooth, T::Smooth};
    const KodairaFiber& f = *s.fiber;
    switch (f.kind()) {
    case FiberKind::I:
        if (f.n() % 2 == 1)
            return {T::Smooth, T::Smooth, T::SwappedNode};
        if (s.involution == LocalInvolution::Standard)
            return {T::Smooth, T::Smooth, T::Smooth, T::Smooth};
        return {T::SwappedNode, T::SwappedNode};
    case FiberKind::II: return {T::Cusp, T::Smooth};
    case FiberKind::III:
        if (s.involution == LocalInvolution::Alternate)
            return {T::SwappedTangency};
        return {T::FixedTangency, T::Smooth, T::Smooth};
    case FiberKind::IV: return {T::TriplePoint, T::Smooth};
    case FiberKind::NonReduced: break;
    }
    fail(ErrorKind::InvalidArgument, "involution data requested for non-reduced fiber " + f.name());
}

struct FixedPointCount {
    /// Fixed points of the involution on the fiber.
    int a = 0;
    /// How many of them are singular points of the fiber.
    int fixed_nodes = 0;

    friend bool operator==(const FixedPointCount&, const FixedPointCount&) = default;
};

inline FixedPointCount fixed_point_count(const FiberSide& s)
{
    if (!involution_allowed(s))
        fail(ErrorKind::InvalidArgument, "alternate involution action on " + s.name());
    FixedPointCount c;
    for (auto t : fixed_points(s)) {
        ++c.a;
        if (t != FixedPointType::Smooth)
            ++c.fixed_nodes;
    }
    return c;
}

/// chi(C) = 16 (2 - #(A1 u A2)) + sum a_t a'_t.
inline long chi_branch_curve(const AbstractConfig& config)
{
    detail::require_small_resolution(config);
    long points = 0, sum = 0;
    for (const auto& s : config.sites) {
        points += s.weight;
        sum += static_cast<long>(s.weight) * fixed_point_count(s.pair.first).a * fixed_point_count(s.pair.second).a;
    }
    return 16 * (2 - points) + sum;
}

namespace detail {

inline void require_semistable(const AbstractConfig& config)
{
    if (!config.semistable())
        fail(ErrorKind::Unsupported, "Kummer invariants are only computed for semi-stable fibers (I_n)");
}

} // namespace detail

struct SingularPartition {
    /// Singular points of X fixed by the involution.
    long o = 0;
    /// Half the number of the remaining (pairwise swapped) nodes.
    long b = 0;

    friend bool operator==(const SingularPartition&, const SingularPartition&) = default;
};

inline SingularPartition singular_point_partition(const AbstractConfig& config)
{
    detail::require_semistable(config);
    detail::require_small_resolution(config);
    long nodes = 0;
    SingularPartition p;
    for (const auto& s : config.sites) {
        if (!s.pair.common())
            continue;
        nodes += static_cast<long>(s.weight) * s.pair.first.fiber->n() * s.pair.second.fiber->n();
        p.o += static_cast<long>(s.weight) * fixed_point_count(s.pair.first).fixed_nodes *
               fixed_point_count(s.pair.second).fixed_nodes;
    }
    if ((nodes - p.o) % 2 != 0)
        fail(ErrorKind::InternalInconsistency, "odd number of non-fixed nodes");
    p.b = (nodes - p.o) / 2;
    return p;
}

struct QuotientSingularity {
    /// "(a)" ... "(k)", or "unlisted" for fixed points at cusps and at
    /// pairs without a small resolution.
    std::string label;
    std::string local_equation;
    std::string resolution_note;
    std::string site;
    long count = 0;

    friend bool operator==(const QuotientSingularity&, const QuotientSingularity&) = default;
};

namespace detail {

struct LocalForm {
    const char* label;
    const char* equation;
    const char* note;
};

inline std::string branch_form(FixedPointType t, char var)
{
    const std::string v(1, var);
    switch (t) {
    case FixedPointType::Smooth: return v;
    case FixedPointType::SwappedNode: return v + "^2-t";
    case FixedPointType::SwappedTangency: return v + "^4-t";
    case FixedPointType::FixedTangency: return v + "-t [fibration " + v + "t]";
    case FixedPointType::TriplePoint: return v + "^2-t [fibration " + v + "t]";
    case FixedPointType::Cusp: return v + "^3-t";
    }
    return v;
}

inline std::optional<LocalForm> listed_form(FixedPointType p, FixedPointType q)
{
    using T = FixedPointType;
    if (q < p)
        std::swap(p, q);
    const std::pair key{p, q};
    constexpr const char* transversal = "transversal A1 along the branch curve; resolved by blowing it up";
    if (key == std::pair{T::Smooth, T::Smooth})
        return LocalForm{"(a)", "u^2=xy", transversal};
    if (key == std::pair{T::Smooth, T::SwappedNode})
        return LocalForm{"(b)", "u^2=(x^2-t)y", transversal};
    if (key == std::pair{T::Smooth, T::SwappedTangency})
        return LocalForm{"(c)", "u^2=(x^4-t)y", transversal};
    if (key == std::pair{T::Smooth, T::FixedTangency} || key == std::pair{T::Smooth, T::TriplePoint})
        return LocalForm{"(d)", "u^2=(x-t)y", transversal};
    if (key == std::pair{T::SwappedNode, T::SwappedNode})
        return LocalForm{"(e)", "u^2=(x^2-t)(y^2-t)", "blow up the branch curve; two nodes remain"};
    if (key == std::pair{T::SwappedNode, T::SwappedTangency})
        return LocalForm{"(f)", "u^2=(x^4-t)(y^2-t)", "blow up the branch curve; two A3 singularities remain"};
    if (key == std::pair{T::SwappedNode, T::FixedTangency})
        return LocalForm{"(g)", "u^2=(x-t)(y^2-xt)", "blow up the branch curve; two D4 singularities remain"};
    if (key == std::pair{T::SwappedTangency, T::SwappedTangency})
        return LocalForm{"(h)", "u^2=(x^4-t)(y^4-t)",
                         "blow up the branch curve; two singularities x^4-y^4=u^2-t^2 remain"};
    if (key == std::pair{T::SwappedNode, T::TriplePoint})
        return LocalForm{"(i)", "u^2=(x^2-t)(y^2-xt)", "blow up the branch curve; an A5 singularity remains"};
    if (key == std::pair{T::SwappedTangency, T::FixedTangency})
        return LocalForm{"(j)", "u^2=(x-t)(y^4-xt)",
                         "blow up the branch curve; one singularity x^4-y^4=u^2-t^2 remains"};
    if (key == std::pair{T::FixedTangency, T::FixedTangency})
        return LocalForm{"(k)", "u^2=(x-t)(y-z), xt=yz", "blow up the singular curve, then the new singular curve"};
    return std::nullopt;
}

} // namespace detail

/// Classifies every fixed point of the involution lying over a singular
/// fiber of either surface, grouped per site and type.
inline std::vector<QuotientSingularity> quotient_singularity_census(const AbstractConfig& config)
{
    config.validate();
    std::vector<QuotientSingularity> out;
    for (const auto& s : config.sites) {
        std::map<std::string, QuotientSingularity> by_label;
        for (auto p : fixed_points(s.pair.first)) {
            for (auto q : fixed_points(s.pair.second)) {
                QuotientSingularity qs;
                if (auto form = detail::listed_form(p, q)) {
                    qs.label = form->label;
                    qs.local_equation = form->equation;
                    qs.resolution_note = form->note;
                }
                else {
                    qs.label = "unlisted";
                    qs.local_equation = "u^2=(" + detail::branch_form(p, 'x') + ")(" + detail::branch_form(q, 'y') + ")";
                    qs.resolution_note = pair_singularity(s.pair).small_resolution
                                             ? "fixed point at a cusp; not among the listed types"
                                             : "lies over a fiber pair without small resolution";
                }
                qs.site = site_label(s);
                auto key = qs.label + "|" + qs.local_equation;
                auto [it, inserted] = by_label.try_emplace(key, std::move(qs));
                it->second.count += s.weight;
            }
        }
        for (auto& [key, qs] : by_label)
            out.push_back(std::move(qs));
    }
    return out;
}

/// Semi-stable fibers and no common I_1 x I_n fiber.
inline bool kummer_projective(const AbstractConfig& config)
{
    detail::require_small_resolution(config);
    if (!config.semistable())
        return false;
    for (const auto& s : config.sites)
        if (s.pair.common() && (s.pair.first.fiber->n() == 1 || s.pair.second.fiber->n() == 1))
            return false;
    return true;
}

/// chi(Y^) = (chi(X) - chi(C)) / 2 + 2 chi(C) + 2 o + b.
inline long chi_kummer(const AbstractConfig& config)
{
    detail::require_semistable(config);
    detail::require_small_resolution(config);
    const long chi_x = chi_singular(config);
    const long chi_c = chi_branch_curve(config);
    const SingularPartition p = singular_point_partition(config);
    if ((chi_x - chi_c) % 2 != 0)
        fail(ErrorKind::InternalInconsistency, "chi(X) - chi(C) is odd");
    return (chi_x - chi_c) / 2 + 2 * chi_c + 2 * p.o + p.b;
}

/// The bitangent configuration with the I2 fiber under the even action: one
/// I2 and ten I1 fibers on the first surface, twelve I1 on the second, no
/// common singular fiber.
inline bool is_bitangent_even_config(const AbstractConfig& config)
{
    const AbstractConfig n = config.normalized();
    int i1_first = 0, i2_first = 0, i1_second = 0;
    for (const auto& s : n.sites) {
        if (s.pair.common())
            return false;
        const FiberSide& f = s.pair.first.singular() ? s.pair.first : s.pair.second;
        if (f.fiber->kind() != FiberKind::I)
            return false;
        if (s.pair.second.singular()) {
            if (f.fiber->n() != 1)
                return false;
            i1_second += s.weight;
        }
        else if (f.fiber->n() == 1)
            i1_first += s.weight;
        else if (f.fiber->n() == 2 && f.involution == LocalInvolution::Standard)
            i2_first += s.weight;
        else
            return false;
    }
    return i1_first == 10 && i2_first == 1 && i1_second == 12;
}

/// Warnings attached to any Kummer computation on `config`.
inline std::vector<std::string> kummer_warnings(const AbstractConfig& config)
{
    std::vector<std::string> w;
    if (is_bitangent_even_config(config)) {
        const long chi_c = chi_branch_curve(config);
        w.push_back("bitangent example, even involution: chi(Y^) = " + std::to_string(chi_kummer(config)) +
                    ", not the published -74. Here chi(X) = o = b = 0, so chi(Y^) = (3/2) chi(C) with chi(C) = " +
                    std::to_string(chi_c) + "; -74 fails this divisibility requirement (it would need chi(C) = -148/3), so it cannot arise");
    }
    return w;
}

struct KummerOptions {
    /// Irreducible components of the branch curve; defaults to 1.
    std::optional<int> branch_components;
    /// Components of the two quartic cones, when known.
    std::optional<std::pair<int, int>> cone_components;
    bool allow_nonprojective = false;
    /// The involution is the one defined by the zero section.
    bool zero_section = true;
};

struct KummerHodge {
    long chi = 0;
    long chi_branch = 0;
    /// Nodes of the branch curve (fixed node x fixed node points).
    long branch_nodes = 0;
    int components = 1;
    std::optional<int> components_lower_bound;
    long transversal = 0;
    /// Always a reconstruction: marked heuristic in every report.
    long equisingular = 0;
    long h12 = 0;
    long h11 = 0;
    bool heuristic = true;
    std::vector<std::string> warnings;
};

inline KummerHodge hodge_kummer(const AbstractConfig& config, const KummerOptions& options = {})
{
    detail::require_semistable(config);
    if (!kummer_projective(config) && !options.allow_nonprojective)
        fail(ErrorKind::PreconditionViolation,
             "Kummer Hodge numbers need a projective Kummer resolution (no I1 x In common fibers)");

    KummerHodge k;
    if (options.branch_components) {
        if (*options.branch_components < 1)
            fail(ErrorKind::InvalidArgument, "branch component count must be positive");
        k.components = *options.branch_components;
    }
    else {
        k.warnings.push_back("branch curve component count not given; assuming 1");
    }
    if (options.cone_components) {
        const auto [c1, c2] = *options.cone_components;
        if (c1 < 1 || c2 < 1)
            fail(ErrorKind::InvalidArgument, "cone component counts must be positive");
        k.components_lower_bound = c1 * c2;
        if (k.components < c1 * c2)
            k.warnings.push_back("branch component count " + std::to_string(k.components) +
                                 " is below the cone lower bound " + std::to_string(c1 * c2));
    }

    k.chi = chi_kummer(config);
    k.chi_branch = chi_branch_curve(config);
    for (const auto& s : config.sites) {
        if (!s.pair.common())
            continue;
        k.branch_nodes += static_cast<long>(s.weight) * fixed_point_count(s.pair.first).fixed_nodes *
                          fixed_point_count(s.pair.second).fixed_nodes;
    }
    const long chi_normalized = k.chi_branch + k.branch_nodes;
    if (chi_normalized % 2 != 0)
        fail(ErrorKind::InternalInconsistency, "normalized branch curve has odd Euler characteristic");
    // sum of genera of the components of the normalization
    k.transversal = k.components - chi_normalized / 2;

    k.equisingular = h12(config);
    bool generic = true;
    for (const auto& s : config.sites) {
        if (s.pair.common()) {
            generic = false;
            continue;
        }
        const long b = s.pair.first.singular() ? s.pair.first.components() : s.pair.second.components();
        k.equisingular -= s.weight * (b - 1);
        if (b > 1)
            generic = false;
    }
    k.h12 = k.transversal + k.equisingular;
    if (k.chi % 2 != 0)
        fail(ErrorKind::InternalInconsistency, "Kummer Euler characteristic is odd");
    k.h11 = k.h12 + k.chi / 2;

    if (!generic)
        k.warnings.push_back("h12(Y^) uses the heuristic equisingular count h12(X) - sum over non-common "
                             "fibers of (b - 1); not verified for this fiber configuration");
    if (options.zero_section) {
        bool irreducible = true;
        for (const auto& s : config.sites)
            if (s.pair.first.components() > 1 || s.pair.second.components() > 1)
                irreducible = false;
        if (irreducible)
            k.warnings.push_back("zero-section involution on surfaces with irreducible fibers: numbers are those "
                                 "of the covering-involution cone model, which has the same fixed-point data");
    }
    for (auto& w : kummer_warnings(config))
        k.warnings.push_back(std::move(w));
    const bool negative = k.h12 < 0 || k.h11 < 0;
    if (!kummer_projective(config)) {
        k.warnings.push_back("Kummer resolution is not projective; Hodge numbers reported on request");
        if (negative)
            k.warnings.push_back("Hodge formulas give negative values here (h11=" + std::to_string(k.h11) +
                                 ", h12=" + std::to_string(k.h12) + "); they do not apply to this configuration");
    }
    else if (negative) {
        fail(ErrorKind::InternalInconsistency, "negative Kummer Hodge number");
    }
    return k;
}

} // namespace fiberprod

#endif
