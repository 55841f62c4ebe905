#ifndef FIBERPROD_TESTS_ORACLES_HPP
#define FIBERPROD_TESTS_ORACLES_HPP

// Independent reference data and generators shared by the test suites.
// Nothing here calls into the code under test except for value types.

#include "fiberprod/config.hpp"
#include "fiberprod/qpoly.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace oracle {

using fiberprod::Rational;
using fiberprod::RatPoly;

// ---- Kodaira's table for y^2 = 4x^3 - f x - g in characteristic 0 ----------

struct KodairaRow {
    const char* name;
    int f_min, f_max;  // v_f range, f_max < 0 means unbounded
    int g_min, g_max;
    int d_min, d_max;  // v_delta range, d_max < 0 means unbounded
};

// One row per type as printed in the standard references.
inline const std::vector<KodairaRow>& kodaira_rows()
{
    static const std::vector<KodairaRow> rows = {
        {"I_n", 0, 0, 0, 0, 1, -1},
        {"II", 1, -1, 1, 1, 2, 2},
        {"III", 1, 1, 2, -1, 3, 3},
        {"IV", 2, -1, 2, 2, 4, 4},
        {"I0*", 2, -1, 3, -1, 6, 6},
        {"I_n*", 2, 2, 3, 3, 7, -1},
        {"IV*", 3, -1, 4, 4, 8, 8},
        {"III*", 3, 3, 5, -1, 9, 9},
        {"II*", 4, -1, 5, 5, 10, 10},
    };
    return rows;
}

inline bool in_range(int v, int lo, int hi) { return v >= lo && (hi < 0 || v <= hi); }

enum class Verdict { Type, NonMinimal, NotRealized };

struct Expected {
    Verdict verdict = Verdict::NotRealized;
    std::string name;
};

/// Type name as printed by the library ("I5", "I2*", "IV*").
inline Expected expected_fiber(int vf, int vg, int vd)
{
    if (vd < 1)
        return {Verdict::NotRealized, {}};
    if (vf >= 4 && vg >= 6)
        return {Verdict::NonMinimal, {}};
    // v(f^3 - 27 g^2) is min(3 v_f, 2 v_g) unless the two leading terms can cancel
    const int floor = std::min(3 * vf, 2 * vg);
    if (vd < floor || (3 * vf != 2 * vg && vd != floor))
        return {Verdict::NotRealized, {}};
    for (const auto& r : kodaira_rows()) {
        if (!in_range(vf, r.f_min, r.f_max) || !in_range(vg, r.g_min, r.g_max) || !in_range(vd, r.d_min, r.d_max))
            continue;
        std::string name = r.name;
        if (name == "I_n")
            name = "I" + std::to_string(vd);
        else if (name == "I_n*")
            name = "I" + std::to_string(vd - 6) + "*";
        return {Verdict::Type, name};
    }
    return {Verdict::NotRealized, {}};
}

// ---- polynomials -----------------------------------------------------------

inline RatPoly poly(std::initializer_list<long> ascending)
{
    std::vector<Rational> c;
    for (long v : ascending)
        c.emplace_back(v);
    return RatPoly(std::move(c));
}

/// Multiply-out: unit * prod factor_i^m_i, by repeated multiplication.
inline RatPoly multiply_out(const Rational& unit, const std::vector<std::pair<RatPoly, int>>& factors)
{
    RatPoly out = RatPoly::constant(unit);
    for (const auto& [p, m] : factors)
        for (int k = 0; k < m; ++k)
            out = out * p;
    return out;
}

inline Rational random_rational(std::mt19937_64& rng, int bound = 9)
{
    std::uniform_int_distribution<int> num(-bound, bound), den(1, 4);
    return Rational(num(rng)) / Rational(den(rng));
}

inline RatPoly random_monic(std::mt19937_64& rng, int degree)
{
    std::vector<Rational> c;
    for (int k = 0; k < degree; ++k)
        c.push_back(random_rational(rng));
    c.emplace_back(1);
    return RatPoly(std::move(c));
}

inline RatPoly random_poly(std::mt19937_64& rng, int degree)
{
    std::vector<Rational> c;
    for (int k = 0; k <= degree; ++k)
        c.push_back(random_rational(rng));
    return RatPoly(std::move(c));
}

// ---- fiber configurations --------------------------------------------------

using fiberprod::AbstractConfig;
using fiberprod::FiberSide;
using fiberprod::KodairaFiber;
using fiberprod::LocalInvolution;

/// Random reduced fibers with Euler numbers summing to 12.
inline std::vector<FiberSide> random_surface(std::mt19937_64& rng, bool semistable)
{
    std::vector<FiberSide> out;
    int left = 12;
    while (left > 0) {
        std::uniform_int_distribution<int> kind(0, semistable ? 0 : 3);
        const int k = kind(rng);
        FiberSide s;
        if (k == 0 || left < 2) {
            std::uniform_int_distribution<int> n(1, std::min(left, 6));
            s.fiber = KodairaFiber::multiplicative(n(rng));
            if (s.fiber->n() % 2 == 0 && rng() % 2)
                s.involution = LocalInvolution::Alternate;
        }
        else if (k == 1) {
            s.fiber = KodairaFiber::cusp();
        }
        else if (k == 2 && left >= 3) {
            s.fiber = KodairaFiber::tangent();
            if (rng() % 2)
                s.involution = LocalInvolution::Alternate;
        }
        else if (k == 3 && left >= 4) {
            s.fiber = KodairaFiber::triple();
        }
        else {
            continue;
        }
        left -= s.euler();
        out.push_back(s);
    }
    return out;
}

/// Pairs a random subset of the fibers of two surfaces over common points;
/// the rest lie over distinct points. Equal pairs are merged into weights.
inline AbstractConfig random_config(std::mt19937_64& rng, bool semistable)
{
    auto first = random_surface(rng, semistable);
    auto second = random_surface(rng, semistable);
    std::shuffle(second.begin(), second.end(), rng);
    std::uniform_int_distribution<std::size_t> pick(0, std::min(first.size(), second.size()));
    const std::size_t common = pick(rng);
    AbstractConfig c;
    c.d = static_cast<int>(rng() % 2);
    for (std::size_t k = 0; k < first.size(); ++k) {
        fiberprod::WeightedSite s;
        s.pair.first = first[k];
        if (k < common)
            s.pair.second = second[k];
        c.sites.push_back(s);
    }
    for (std::size_t k = common; k < second.size(); ++k) {
        fiberprod::WeightedSite s;
        s.pair.second = second[k];
        c.sites.push_back(s);
    }
    return c.normalized();
}

/// Free parameters left after imposing the common fibers: 19 + d minus, per
/// common fiber pair, one condition for the shared point and b - 1, b' - 1
/// for the components. Negative means no such pair of surfaces exists.
inline long parameter_count(const AbstractConfig& c)
{
    long n = 19 + c.d;
    for (const auto& s : c.sites) {
        if (!s.pair.first.fiber || !s.pair.second.fiber)
            continue;
        n -= s.weight * (1 + (s.pair.first.fiber->components() - 1) + (s.pair.second.fiber->components() - 1));
    }
    return n;
}

/// Twelve I1 fibers on each surface over disjoint points.
inline AbstractConfig generic_config()
{
    AbstractConfig c;
    fiberprod::WeightedSite a, b;
    a.pair.first = fiberprod::side(KodairaFiber::multiplicative(1));
    a.weight = 12;
    b.pair.second = fiberprod::side(KodairaFiber::multiplicative(1));
    b.weight = 12;
    c.sites = {a, b};
    return c;
}

/// First surface: one I2 and ten I1; second: twelve I1; nothing common.
inline AbstractConfig bitangent_config(LocalInvolution on_i2)
{
    AbstractConfig c;
    fiberprod::WeightedSite i2, i1, j1;
    i2.pair.first = fiberprod::side(KodairaFiber::multiplicative(2), on_i2);
    i1.pair.first = fiberprod::side(KodairaFiber::multiplicative(1));
    i1.weight = 10;
    j1.pair.second = fiberprod::side(KodairaFiber::multiplicative(1));
    j1.weight = 12;
    c.sites = {i2, i1, j1};
    return c;
}

} // namespace oracle

#endif
