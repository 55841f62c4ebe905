#ifndef FIBERPROD_QPOLY_HPP
#define FIBERPROD_QPOLY_HPP

// Exact univariate polynomial arithmetic over the rationals.

#include "fiberprod/error.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fiberprod {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Valuation of the zero polynomial. Larger than any valuation that can
/// occur for a nonzero polynomial of bounded degree.
inline constexpr int kInfiniteValuation = 1 << 20;

inline bool is_infinite(int valuation) { return valuation >= kInfiniteValuation; }

inline std::string to_string(const Rational& q)
{
    return q.str();
}

/// Parses `[+-]digits[/digits]`. The denominator must be positive.
inline Rational parse_rational(std::string_view text)
{
    auto bad = [&]() -> Rational {
        fail(ErrorKind::MalformedInput, "malformed rational literal '" + std::string(text) + "'");
    };
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        negative = text[pos] == '-';
        ++pos;
    }
    auto read_digits = [&](std::size_t& p) {
        std::size_t start = p;
        while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p])))
            ++p;
        return text.substr(start, p - start);
    };
    auto num = read_digits(pos);
    if (num.empty())
        return bad();
    Integer numerator{std::string(num)};
    Integer denominator = 1;
    if (pos < text.size()) {
        if (text[pos] != '/')
            return bad();
        ++pos;
        auto den = read_digits(pos);
        if (den.empty() || pos != text.size())
            return bad();
        denominator = Integer(std::string(den));
        if (denominator == 0)
            return bad();
    }
    Rational q(numerator, denominator);
    return negative ? Rational(-q) : q;
}

/// Dense univariate polynomial with rational coefficients, stored in
/// ascending degree. The leading coefficient is nonzero unless the
/// polynomial is zero (empty coefficient vector).
class RatPoly {
public:
    RatPoly() = default;

    RatPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    RatPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

    static RatPoly constant(const Rational& c) { return RatPoly(std::vector<Rational>{c}); }

    /// The polynomial t.
    static RatPoly variable() { return RatPoly({Rational(0), Rational(1)}); }

    /// The monic linear polynomial t - root.
    static RatPoly linear(const Rational& root) { return RatPoly({Rational(-root), Rational(1)}); }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_constant() const { return coeffs_.size() <= 1; }

    const std::vector<Rational>& coefficients() const { return coeffs_; }

    Rational coefficient(int i) const
    {
        if (i < 0 || i >= static_cast<int>(coeffs_.size()))
            return Rational(0);
        return coeffs_[static_cast<std::size_t>(i)];
    }

    Rational leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

    bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }

    RatPoly monic() const
    {
        if (is_zero() || is_monic())
            return *this;
        return *this * Rational(1 / leading());
    }

    Rational operator()(const Rational& x) const
    {
        Rational acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * x + *it;
        return acc;
    }

    RatPoly derivative() const
    {
        if (coeffs_.size() <= 1)
            return {};
        std::vector<Rational> d(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            d[i - 1] = coeffs_[i] * static_cast<long>(i);
        return RatPoly(std::move(d));
    }

    RatPoly& operator+=(const RatPoly& o)
    {
        if (o.coeffs_.size() > coeffs_.size())
            coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
            coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }

    RatPoly& operator-=(const RatPoly& o)
    {
        if (o.coeffs_.size() > coeffs_.size())
            coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
            coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }

    RatPoly& operator*=(const Rational& c)
    {
        if (c == 0) {
            coeffs_.clear();
            return *this;
        }
        for (auto& x : coeffs_)
            x *= c;
        return *this;
    }

    friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
    friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
    friend RatPoly operator*(RatPoly a, const Rational& c) { return a *= c; }
    friend RatPoly operator*(const Rational& c, RatPoly a) { return a *= c; }
    friend RatPoly operator-(RatPoly a) { return a *= Rational(-1); }

    friend RatPoly operator*(const RatPoly& a, const RatPoly& b)
    {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0)
                continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return RatPoly(std::move(out));
    }

    RatPoly& operator*=(const RatPoly& o) { return *this = *this * o; }

    friend bool operator==(const RatPoly&, const RatPoly&) = default;

    /// Canonical total order: by degree, then coefficients from the
    /// constant term upwards.
    friend std::strong_ordering operator<=>(const RatPoly& a, const RatPoly& b)
    {
        if (auto c = a.degree() <=> b.degree(); c != 0)
            return c;
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] < b.coeffs_[i])
                return std::strong_ordering::less;
            if (b.coeffs_[i] < a.coeffs_[i])
                return std::strong_ordering::greater;
        }
        return std::strong_ordering::equal;
    }

private:
    void trim()
    {
        while (!coeffs_.empty() && coeffs_.back() == 0)
            coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

inline RatPoly pow(RatPoly base, unsigned exponent)
{
    RatPoly result = RatPoly::constant(1);
    while (exponent) {
        if (exponent & 1u)
            result *= base;
        exponent >>= 1u;
        if (exponent)
            base *= base;
    }
    return result;
}

struct DivisionResult {
    RatPoly quotient;
    RatPoly remainder;
};

inline DivisionResult divmod(const RatPoly& numerator, const RatPoly& divisor)
{
    if (divisor.is_zero())
        fail(ErrorKind::InvalidArgument, "polynomial division by zero");
    std::vector<Rational> rem = numerator.coefficients();
    const int dd = divisor.degree();
    const Rational inv_lead = 1 / divisor.leading();
    std::vector<Rational> quot;
    if (numerator.degree() >= dd)
        quot.resize(static_cast<std::size_t>(numerator.degree() - dd + 1));
    for (int k = numerator.degree(); k >= dd; --k) {
        const Rational c = rem[static_cast<std::size_t>(k)] * inv_lead;
        if (c == 0)
            continue;
        quot[static_cast<std::size_t>(k - dd)] = c;
        for (int j = 0; j <= dd; ++j)
            rem[static_cast<std::size_t>(k - dd + j)] -= c * divisor.coefficient(j);
    }
    if (dd >= 0 && rem.size() > static_cast<std::size_t>(dd))
        rem.resize(static_cast<std::size_t>(dd));
    return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

inline RatPoly operator/(const RatPoly& a, const RatPoly& b) { return divmod(a, b).quotient; }
inline RatPoly operator%(const RatPoly& a, const RatPoly& b) { return divmod(a, b).remainder; }

inline bool divides(const RatPoly& d, const RatPoly& p)
{
    return (p % d).is_zero();
}

/// Monic greatest common divisor. gcd(p, 0) = monic(p).
inline RatPoly gcd(RatPoly a, RatPoly b)
{
    if (a.is_zero() && b.is_zero())
        fail(ErrorKind::InvalidArgument, "gcd of two zero polynomials");
    while (!b.is_zero()) {
        RatPoly r = a % b;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

/// Largest k with place^k | p; kInfiniteValuation for p = 0.
inline int valuation(const RatPoly& p, const RatPoly& place)
{
    if (place.is_constant())
        fail(ErrorKind::InvalidArgument, "valuation at a constant polynomial");
    if (p.is_zero())
        return kInfiniteValuation;
    int k = 0;
    RatPoly rest = p;
    while (true) {
        auto [q, r] = divmod(rest, place);
        if (!r.is_zero())
            return k;
        rest = std::move(q);
        ++k;
    }
}

struct SquareFreePart {
    RatPoly component;
    int multiplicity = 0;

    friend bool operator==(const SquareFreePart&, const SquareFreePart&) = default;
};

/// p = unit * prod component^multiplicity with monic, square-free, pairwise
/// coprime components and distinct multiplicities.
struct SquareFreeDecomposition {
    Rational unit;
    std::vector<SquareFreePart> parts;

    RatPoly expand() const
    {
        RatPoly acc = RatPoly::constant(unit);
        for (const auto& part : parts)
            acc *= pow(part.component, static_cast<unsigned>(part.multiplicity));
        return acc;
    }
};

/// Yun's algorithm (characteristic zero).
inline SquareFreeDecomposition yun_squarefree(const RatPoly& p)
{
    if (p.is_zero())
        fail(ErrorKind::InvalidArgument, "square-free decomposition of the zero polynomial");
    SquareFreeDecomposition out;
    out.unit = p.leading();
    const RatPoly monic = p.monic();
    if (monic.degree() == 0)
        return out;

    const RatPoly dp = monic.derivative();
    const RatPoly a0 = gcd(monic, dp);
    RatPoly b = monic / a0;
    RatPoly c = dp / a0;
    RatPoly d = c - b.derivative();
    for (int i = 1; b.degree() > 0; ++i) {
        RatPoly a = gcd(b, d);
        if (a.degree() > 0)
            out.parts.push_back({a, i});
        b = b / a;
        c = d / a;
        d = c - b.derivative();
    }
    return out;
}

/// Discriminant f^3 - 27 g^2 of the Weierstrass cubic y^2 = 4x^3 - f x - g.
inline RatPoly discriminant(const RatPoly& f, const RatPoly& g)
{
    return f * f * f - Rational(27) * (g * g);
}

/// Binary form of exact degree `degree`: coefficient i multiplies t^i s^(degree-i).
struct HomogeneousForm {
    std::vector<Rational> coeffs;
    int degree = 0;

    /// Order of vanishing at s = 0, i.e. at the point at infinity.
    int valuation_at_infinity() const
    {
        for (int i = degree; i >= 0; --i)
            if (coeffs[static_cast<std::size_t>(i)] != 0)
                return degree - i;
        return kInfiniteValuation;
    }

    RatPoly dehomogenize() const { return RatPoly(coeffs); }

    friend bool operator==(const HomogeneousForm&, const HomogeneousForm&) = default;
};

inline HomogeneousForm homogenize(const RatPoly& p, int target_degree)
{
    if (target_degree < p.degree() || target_degree < 0)
        fail(ErrorKind::InvalidArgument, "homogenization degree below polynomial degree");
    HomogeneousForm form;
    form.degree = target_degree;
    form.coeffs.assign(static_cast<std::size_t>(target_degree + 1), Rational(0));
    for (int i = 0; i <= p.degree(); ++i)
        form.coeffs[static_cast<std::size_t>(i)] = p.coefficient(i);
    return form;
}

inline int valuation_at_infinity(const RatPoly& p, int target_degree)
{
    if (target_degree < p.degree())
        fail(ErrorKind::InvalidArgument, "homogenization degree below polynomial degree");
    if (p.is_zero())
        return kInfiniteValuation;
    return target_degree - p.degree();
}

/// Monic gcd of binary forms: gcd of the affine parts times s^min(v_inf).
inline HomogeneousForm gcd(const HomogeneousForm& a, const HomogeneousForm& b)
{
    const RatPoly finite = gcd(a.dehomogenize(), b.dehomogenize());
    const int at_infinity = std::min(a.valuation_at_infinity(), b.valuation_at_infinity());
    return homogenize(finite, finite.degree() + std::min(at_infinity, kInfiniteValuation - 1));
}

/// Formats with variable `var`, highest degree first, e.g. "t^2-1/2*t+3".
inline std::string to_string(const RatPoly& p, std::string_view var = "t")
{
    if (p.is_zero())
        return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        Rational c = p.coefficient(i);
        if (c == 0)
            continue;
        const bool negative = c < 0;
        if (negative)
            c = -c;
        if (!out.empty())
            out += negative ? "-" : "+";
        else if (negative)
            out += "-";
        if (i == 0) {
            out += to_string(c);
            continue;
        }
        if (c != 1)
            out += to_string(c) + "*";
        out += var;
        if (i > 1)
            out += "^" + std::to_string(i);
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const RatPoly& p)
{
    return os << to_string(p);
}

/// Parses sums of terms `[coef][*]t[^k]` or constants, e.g. "t^2 - 2",
/// "3/4*t^3+t-1/2". Whitespace is ignored.
inline RatPoly parse_polynomial(std::string_view input, char var = 't')
{
    std::string text;
    for (char ch : input)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            text += ch;
    auto bad = [&](const char* why) -> RatPoly {
        fail(ErrorKind::MalformedInput,
             "malformed polynomial '" + std::string(input) + "': " + why);
    };
    if (text.empty())
        return bad("empty");

    RatPoly acc;
    std::size_t pos = 0;
    bool first = true;
    while (pos < text.size()) {
        int sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
        }
        else if (!first) {
            return bad("expected '+' or '-'");
        }
        first = false;

        std::size_t start = pos;
        while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/'))
            ++pos;
        Rational coef = 1;
        bool has_coef = pos > start;
        if (has_coef)
            coef = parse_rational(std::string_view(text).substr(start, pos - start));

        int exponent = 0;
        if (pos < text.size() && text[pos] == '*') {
            if (!has_coef)
                return bad("dangling '*'");
            ++pos;
            if (pos >= text.size() || text[pos] != var)
                return bad("expected variable after '*'");
        }
        if (pos < text.size() && text[pos] == var) {
            ++pos;
            exponent = 1;
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                std::size_t es = pos;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                    ++pos;
                if (es == pos)
                    return bad("missing exponent");
                exponent = std::stoi(text.substr(es, pos - es));
            }
        }
        else if (!has_coef) {
            return bad("empty term");
        }
        std::vector<Rational> term(static_cast<std::size_t>(exponent + 1));
        term.back() = coef * sign;
        acc += RatPoly(std::move(term));
    }
    return acc;
}

} // namespace fiberprod

#endif
