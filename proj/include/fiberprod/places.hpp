#ifndef FIBERPROD_PLACES_HPP
#define FIBERPROD_PLACES_HPP

// Places of the base line: square-free factor classes plus infinity, each
// with the valuations of f, g and the discriminant.

#include "fiberprod/error.hpp"
#include "fiberprod/qpoly.hpp"

#include <algorithm>
#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace fiberprod {

/// A Galois-stable set of geometric points: the roots of a monic
/// square-free polynomial, or the single point at infinity.
class Place {
public:
    static Place infinity() { return Place(); }

    static Place finite(RatPoly poly)
    {
        if (poly.degree() < 1)
            fail(ErrorKind::InvalidArgument, "a finite place needs a non-constant polynomial");
        Place p;
        p.poly_ = poly.monic();
        p.infinite_ = false;
        return p;
    }

    bool is_infinity() const { return infinite_; }
    const RatPoly& polynomial() const { return poly_; }

    /// Number of geometric points.
    int degree() const { return infinite_ ? 1 : poly_.degree(); }

    std::string to_string() const { return infinite_ ? "inf" : fiberprod::to_string(poly_); }

    friend bool operator==(const Place&, const Place&) = default;

    /// Finite places by degree then coefficients; infinity last.
    friend std::strong_ordering operator<=>(const Place& a, const Place& b)
    {
        if (a.infinite_ != b.infinite_)
            return a.infinite_ ? std::strong_ordering::greater : std::strong_ordering::less;
        return a.poly_ <=> b.poly_;
    }

private:
    Place() = default;

    RatPoly poly_;
    bool infinite_ = true;
};

inline Place parse_place(std::string_view text)
{
    std::string trimmed;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            trimmed += ch;
    if (trimmed == "inf" || trimmed == "infinity")
        return Place::infinity();
    RatPoly p = parse_polynomial(trimmed);
    if (p.degree() < 1)
        fail(ErrorKind::MalformedInput, "place '" + std::string(text) + "' is constant");
    if (gcd(p, p.derivative()).degree() > 0)
        fail(ErrorKind::MalformedInput, "place '" + std::string(text) + "' is not square-free");
    return Place::finite(p);
}

struct ValuationProfile {
    Place place = Place::infinity();
    int v_f = 0;
    int v_g = 0;
    int v_delta = 0;

    friend bool operator==(const ValuationProfile&, const ValuationProfile&) = default;
};

namespace detail {

struct Piece {
    RatPoly poly;
    int v_f = 0;
    int v_g = 0;
};

// Splits every piece against pairwise-coprime components; the part of a
// piece inside component k receives valuation m_k, the rest keeps `fallback`.
template <typename Setter>
std::vector<Piece> refine(std::vector<Piece> pieces, const SquareFreeDecomposition& by, Setter set)
{
    for (const auto& part : by.parts) {
        std::vector<Piece> next;
        for (auto& piece : pieces) {
            RatPoly common = gcd(piece.poly, part.component);
            if (common.degree() < 1) {
                next.push_back(std::move(piece));
                continue;
            }
            Piece inside = piece;
            inside.poly = common;
            set(inside, part.multiplicity);
            next.push_back(std::move(inside));
            RatPoly rest = piece.poly / common;
            if (rest.degree() >= 1) {
                piece.poly = rest;
                next.push_back(std::move(piece));
            }
        }
        pieces = std::move(next);
    }
    return pieces;
}

} // namespace detail

/// Valuation profiles of every singular fiber of y^2 = 4x^3 - f x - g,
/// including the point at infinity for the homogeneous degrees (4, 6, 12).
/// Every profile has uniform valuations on all of its geometric points.
inline std::vector<ValuationProfile> place_profiles(const RatPoly& f, const RatPoly& g)
{
    if (f.degree() > 4 || g.degree() > 6)
        fail(ErrorKind::NotEllipticSurface, "deg f must be <= 4 and deg g <= 6");
    const RatPoly delta = discriminant(f, g);
    if (delta.is_zero())
        fail(ErrorKind::NotEllipticSurface, "the discriminant vanishes identically");

    std::vector<ValuationProfile> out;
    for (const auto& part : yun_squarefree(delta).parts) {
        std::vector<detail::Piece> pieces{{part.component, 0, 0}};
        if (f.is_zero())
            pieces.front().v_f = kInfiniteValuation;
        else
            pieces = detail::refine(std::move(pieces), yun_squarefree(f),
                                    [](detail::Piece& p, int m) { p.v_f = m; });
        if (g.is_zero())
            for (auto& p : pieces)
                p.v_g = kInfiniteValuation;
        else
            pieces = detail::refine(std::move(pieces), yun_squarefree(g),
                                    [](detail::Piece& p, int m) { p.v_g = m; });
        for (auto& p : pieces)
            out.push_back({Place::finite(p.poly), p.v_f, p.v_g, part.multiplicity});
    }

    const int v_inf = valuation_at_infinity(delta, 12);
    if (v_inf > 0)
        out.push_back({Place::infinity(), valuation_at_infinity(f, 4), valuation_at_infinity(g, 6), v_inf});

    std::sort(out.begin(), out.end(),
              [](const ValuationProfile& a, const ValuationProfile& b) { return a.place < b.place; });
    return out;
}

/// Splits finite places along the roots of `by` (used to isolate points
/// addressed individually, e.g. by involution overrides).
inline std::vector<ValuationProfile> refine_profiles(const std::vector<ValuationProfile>& profiles,
                                                     const RatPoly& by)
{
    std::vector<ValuationProfile> out;
    for (const auto& prof : profiles) {
        if (prof.place.is_infinity() || by.degree() < 1) {
            out.push_back(prof);
            continue;
        }
        RatPoly common = gcd(prof.place.polynomial(), by);
        if (common.degree() < 1 || common.degree() == prof.place.degree()) {
            out.push_back(prof);
            continue;
        }
        ValuationProfile inside = prof;
        inside.place = Place::finite(common);
        ValuationProfile rest = prof;
        rest.place = Place::finite(prof.place.polynomial() / common);
        out.push_back(std::move(inside));
        out.push_back(std::move(rest));
    }
    std::sort(out.begin(), out.end(),
              [](const ValuationProfile& a, const ValuationProfile& b) { return a.place < b.place; });
    return out;
}

struct CommonPlace {
    Place place = Place::infinity();
    ValuationProfile first;
    ValuationProfile second;
};

/// Places singular on both surfaces (`common`) or on exactly one.
struct MatchedPlaces {
    std::vector<CommonPlace> common;
    std::vector<ValuationProfile> only_first;
    std::vector<ValuationProfile> only_second;
};

inline MatchedPlaces match_places(const std::vector<ValuationProfile>& first,
                                  const std::vector<ValuationProfile>& second)
{
    MatchedPlaces out;
    std::vector<ValuationProfile> rest_second = second;
    for (ValuationProfile a : first) {
        for (auto& b : rest_second) {
            if (b.v_delta == 0)
                continue;
            if (a.place.is_infinity() || b.place.is_infinity()) {
                if (a.place.is_infinity() && b.place.is_infinity()) {
                    out.common.push_back({a.place, a, b});
                    a.v_delta = 0;
                    b.v_delta = 0;
                    break;
                }
                continue;
            }
            RatPoly common = gcd(a.place.polynomial(), b.place.polynomial());
            if (common.degree() < 1)
                continue;
            const Place shared = Place::finite(common);
            ValuationProfile pa = a, pb = b;
            pa.place = shared;
            pb.place = shared;
            out.common.push_back({shared, pa, pb});

            const RatPoly ra = a.place.polynomial() / common;
            const RatPoly rb = b.place.polynomial() / common;
            if (rb.degree() >= 1)
                b.place = Place::finite(rb);
            else
                b.v_delta = 0;
            if (ra.degree() >= 1) {
                a.place = Place::finite(ra);
            }
            else {
                a.v_delta = 0;
                break;
            }
        }
        if (a.v_delta > 0)
            out.only_first.push_back(a);
    }
    for (const auto& b : rest_second)
        if (b.v_delta > 0)
            out.only_second.push_back(b);

    auto by_place = [](const auto& x, const auto& y) { return x.place < y.place; };
    std::sort(out.common.begin(), out.common.end(), by_place);
    std::sort(out.only_first.begin(), out.only_first.end(), by_place);
    std::sort(out.only_second.begin(), out.only_second.end(), by_place);
    return out;
}

} // namespace fiberprod

#endif
