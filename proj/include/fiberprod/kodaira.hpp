#ifndef FIBERPROD_KODAIRA_HPP
#define FIBERPROD_KODAIRA_HPP

// Kodaira classification of singular fibers and validation of Weierstrass
// models of rational elliptic surfaces.

#include "fiberprod/error.hpp"
#include "fiberprod/places.hpp"
#include "fiberprod/qpoly.hpp"

#include <algorithm>
#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace fiberprod {

enum class FiberKind { I, II, III, IV, NonReduced };

/// A singular fiber. Smooth fibers are never represented by this type.
class KodairaFiber {
public:
    static KodairaFiber multiplicative(int n)
    {
        if (n < 1)
            fail(ErrorKind::InvalidArgument, "I_n needs n >= 1");
        return KodairaFiber(FiberKind::I, n, {});
    }
    static KodairaFiber cusp() { return KodairaFiber(FiberKind::II, 0, {}); }
    static KodairaFiber tangent() { return KodairaFiber(FiberKind::III, 0, {}); }
    static KodairaFiber triple() { return KodairaFiber(FiberKind::IV, 0, {}); }
    static KodairaFiber non_reduced(std::string label)
    {
        return KodairaFiber(FiberKind::NonReduced, 0, std::move(label));
    }

    FiberKind kind() const { return kind_; }
    bool is_reduced() const { return kind_ != FiberKind::NonReduced; }
    bool is_semistable() const { return kind_ == FiberKind::I; }

    /// n for I_n, 0 otherwise.
    int n() const { return n_; }

    /// Number of irreducible components b.
    int components() const
    {
        switch (kind_) {
        case FiberKind::I: return n_;
        case FiberKind::II: return 1;
        case FiberKind::III: return 2;
        case FiberKind::IV: return 3;
        case FiberKind::NonReduced: break;
        }
        fail(ErrorKind::NonReducedFiber, "component count requested for non-reduced fiber " + name());
    }

    /// Topological Euler number. chi(II) = 2 follows from sum chi = 12.
    int euler() const
    {
        switch (kind_) {
        case FiberKind::I: return n_;
        case FiberKind::II: return 2;
        case FiberKind::III: return 3;
        case FiberKind::IV: return 4;
        case FiberKind::NonReduced: break;
        }
        fail(ErrorKind::NonReducedFiber, "Euler number requested for non-reduced fiber " + name());
    }

    std::string name() const
    {
        switch (kind_) {
        case FiberKind::I: return "I" + std::to_string(n_);
        case FiberKind::II: return "II";
        case FiberKind::III: return "III";
        case FiberKind::IV: return "IV";
        case FiberKind::NonReduced: return label_;
        }
        return "?";
    }

    friend bool operator==(const KodairaFiber&, const KodairaFiber&) = default;
    friend auto operator<=>(const KodairaFiber&, const KodairaFiber&) = default;

private:
    KodairaFiber(FiberKind kind, int n, std::string label) : kind_(kind), n_(n), label_(std::move(label)) {}

    FiberKind kind_;
    int n_;
    std::string label_;
};

/// Parses "I<n>", "II", "III", "IV". "I0" yields nullopt (smooth fiber).
inline std::optional<KodairaFiber> parse_fiber(std::string_view text)
{
    if (!text.empty() && text.back() == '*') {
        const auto base = text.substr(0, text.size() - 1);
        if (base == "II" || base == "III" || base == "IV")
            return KodairaFiber::non_reduced(std::string(text));
        if (base.size() >= 2 && base[0] == 'I' &&
            std::all_of(base.begin() + 1, base.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            return KodairaFiber::non_reduced(std::string(text));
        fail(ErrorKind::MalformedInput, "unknown fiber type '" + std::string(text) + "'");
    }
    if (text == "II")
        return KodairaFiber::cusp();
    if (text == "III")
        return KodairaFiber::tangent();
    if (text == "IV")
        return KodairaFiber::triple();
    if (text.size() >= 2 && text[0] == 'I') {
        int n = 0;
        for (char ch : text.substr(1)) {
            if (!std::isdigit(static_cast<unsigned char>(ch)) || n > 1000)
                fail(ErrorKind::MalformedInput, "unknown fiber type '" + std::string(text) + "'");
            n = n * 10 + (ch - '0');
        }
        if (n == 0)
            return std::nullopt;
        return KodairaFiber::multiplicative(n);
    }
    fail(ErrorKind::MalformedInput, "unknown fiber type '" + std::string(text) + "'");
}

inline std::string fiber_name(const std::optional<KodairaFiber>& f)
{
    return f ? f->name() : "I0";
}

/// True when the profile can come from actual polynomials: the discriminant
/// valuation is min(3 v_f, 2 v_g) unless the two terms tie and cancel.
inline bool weierstrass_consistent(int v_f, int v_g, int v_delta)
{
    const long a = is_infinite(v_f) ? kInfiniteValuation : 3L * v_f;
    const long b = is_infinite(v_g) ? kInfiniteValuation : 2L * v_g;
    if (a == b)
        return v_delta >= a;
    return v_delta == std::min(a, b);
}

inline bool is_minimal(int v_f, int v_g) { return !(v_f >= 4 && v_g >= 6); }

/// Kodaira type from the valuations of f, g and the discriminant
/// (characteristic zero, so the type is read off the valuations directly).
inline KodairaFiber classify_fiber(int v_f, int v_g, int v_delta)
{
    if (v_f < 0 || v_g < 0 || v_delta < 1)
        fail(ErrorKind::InvalidArgument, "classify_fiber needs v_delta >= 1 and non-negative valuations");
    if (!is_minimal(v_f, v_g))
        fail(ErrorKind::RequiresMinimalModel,
             "non-minimal Weierstrass model (v_f >= 4 and v_g >= 6); minimalize first");
    if (!weierstrass_consistent(v_f, v_g, v_delta))
        fail(ErrorKind::InvalidArgument, "valuation profile (" + std::to_string(v_f) + "," +
                                             std::to_string(v_g) + "," + std::to_string(v_delta) +
                                             ") cannot occur for a Weierstrass model");
    if (v_f == 0)
        return KodairaFiber::multiplicative(v_delta);
    if (v_g == 1)
        return KodairaFiber::cusp();
    if (v_f == 1)
        return KodairaFiber::tangent();
    if (v_g == 2)
        return KodairaFiber::triple();
    // remaining additive cases are the starred (non-reduced) types
    if (v_delta == 6)
        return KodairaFiber::non_reduced("I0*");
    if (v_f == 2 && v_g == 3)
        return KodairaFiber::non_reduced("I" + std::to_string(v_delta - 6) + "*");
    if (v_g == 4)
        return KodairaFiber::non_reduced("IV*");
    if (v_f == 3)
        return KodairaFiber::non_reduced("III*");
    return KodairaFiber::non_reduced("II*");
}

struct FiberEntry {
    ValuationProfile profile;
    KodairaFiber fiber;
};

/// A validated Weierstrass model together with its classified fibers.
struct SurfaceModel {
    RatPoly f;
    RatPoly g;
    RatPoly delta;
    std::vector<FiberEntry> fibers;
    std::vector<std::string> warnings;

    std::vector<ValuationProfile> profiles() const
    {
        std::vector<ValuationProfile> out;
        for (const auto& e : fibers)
            out.push_back(e.profile);
        return out;
    }

    bool all_reduced() const
    {
        for (const auto& e : fibers)
            if (!e.fiber.is_reduced())
                return false;
        return true;
    }
};

struct SurfaceOptions {
    /// Divide out p^4, p^6 at finite places where the model is not minimal.
    bool minimalize = false;
    /// Keep non-reduced fibers in the table instead of rejecting the surface.
    bool report_nonreduced = false;
};

inline SurfaceModel analyze_surface(RatPoly f, RatPoly g, const SurfaceOptions& options = {})
{
    SurfaceModel model;
    std::vector<ValuationProfile> profiles = place_profiles(f, g);

    if (options.minimalize) {
        bool changed = false;
        for (const auto& prof : profiles) {
            if (prof.place.is_infinity() || is_minimal(prof.v_f, prof.v_g))
                continue;
            // k-fold non-minimality at this place
            int k = std::min(is_infinite(prof.v_f) ? kInfiniteValuation : prof.v_f / 4,
                             is_infinite(prof.v_g) ? kInfiniteValuation : prof.v_g / 6);
            const RatPoly& p = prof.place.polynomial();
            if (!f.is_zero())
                f = f / pow(p, static_cast<unsigned>(4 * k));
            if (!g.is_zero())
                g = g / pow(p, static_cast<unsigned>(6 * k));
            model.warnings.push_back("minimalized at " + prof.place.to_string() + " (divided f by (" +
                                     prof.place.to_string() + ")^" + std::to_string(4 * k) + ", g by (" +
                                     prof.place.to_string() + ")^" + std::to_string(6 * k) + ")");
            changed = true;
        }
        if (changed)
            profiles = place_profiles(f, g);
    }

    model.f = f;
    model.g = g;
    model.delta = discriminant(f, g);

    int total = 0;
    for (const auto& prof : profiles) {
        if (!is_minimal(prof.v_f, prof.v_g))
            fail(ErrorKind::RequiresMinimalModel, "Weierstrass model is not minimal at " + prof.place.to_string());
        KodairaFiber fiber = classify_fiber(prof.v_f, prof.v_g, prof.v_delta);
        if (!fiber.is_reduced() && !options.report_nonreduced)
            fail(ErrorKind::NonReducedFiber,
                 "non-reduced fiber " + fiber.name() + " at " + prof.place.to_string());
        total += prof.place.degree() * prof.v_delta;
        model.fibers.push_back({prof, std::move(fiber)});
    }
    if (total != 12)
        fail(ErrorKind::InternalInconsistency, "discriminant degree sum is " + std::to_string(total));
    if (model.all_reduced()) {
        int chi = 0;
        for (const auto& e : model.fibers)
            chi += e.profile.place.degree() * e.fiber.euler();
        if (chi != 12)
            fail(ErrorKind::InternalInconsistency, "fiber Euler numbers sum to " + std::to_string(chi));
    }
    return model;
}

} // namespace fiberprod

#endif
