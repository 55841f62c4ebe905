#ifndef FIBERPROD_REPORT_HPP
#define FIBERPROD_REPORT_HPP

// Aggregated invariants of one job, with a JSON encoding and a plain-text
// table rendering carrying the same content.

#include "fiberprod/config.hpp"
#include "fiberprod/error.hpp"
#include "fiberprod/kodaira.hpp"
#include "fiberprod/kummer.hpp"

#include "json.hpp"

#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace fiberprod {

using nlohmann::json;

struct SurfaceRow {
    std::string place;
    int degree = 1;
    /// Absent for abstract configurations, or when the coefficient vanishes.
    std::optional<int> v_f;
    std::optional<int> v_g;
    std::optional<int> v_delta;
    std::string type;
    std::optional<int> components;
    std::optional<int> euler;
    /// Involution fixed points and fixed singular points, reduced fibers only.
    std::optional<int> a;
    std::optional<int> fixed_nodes;

    friend bool operator==(const SurfaceRow&, const SurfaceRow&) = default;
};

struct ProductRow {
    std::string place;
    int weight = 1;
    std::string pair;
    std::string singularity;
    int count = 0;
    bool small_resolution = true;
    std::optional<int> chi_exceptional;
    std::string local_equation;

    friend bool operator==(const ProductRow&, const ProductRow&) = default;
};

struct Verdicts {
    std::optional<bool> small_resolution;
    std::optional<bool> projective;
    std::optional<bool> kummer_projective;

    friend bool operator==(const Verdicts&, const Verdicts&) = default;
};

struct NumberEntry {
    std::string name;
    long value = 0;
    /// Identifier of the formula that produced the value.
    std::string formula;
    bool heuristic = false;

    friend bool operator==(const NumberEntry&, const NumberEntry&) = default;
};

struct InvariantReport {
    std::string command;
    std::vector<SurfaceRow> surface1;
    std::vector<SurfaceRow> surface2;
    std::vector<ProductRow> product;
    Verdicts verdicts;
    std::vector<NumberEntry> numbers;
    std::vector<QuotientSingularity> census;
    std::optional<AbstractConfig> split_config;
    std::vector<std::string> warnings;

    const NumberEntry* number(const std::string& name) const
    {
        for (const auto& n : numbers)
            if (n.name == name)
                return &n;
        return nullptr;
    }

    friend bool operator==(const InvariantReport&, const InvariantReport&) = default;
};

// ---- JSON -----------------------------------------------------------------

namespace detail {

template <class T>
void put_optional(json& j, const char* key, const std::optional<T>& v)
{
    j[key] = v ? json(*v) : json(nullptr);
}

template <class T>
void get_optional(const json& j, const char* key, std::optional<T>& v)
{
    if (!j.contains(key) || j.at(key).is_null())
        v.reset();
    else
        v = j.at(key).get<T>();
}

} // namespace detail

inline std::string to_string(LocalInvolution inv)
{
    return inv == LocalInvolution::Standard ? "standard" : "alternate";
}

inline LocalInvolution parse_local_involution(const std::string& s)
{
    if (s == "standard")
        return LocalInvolution::Standard;
    if (s == "alternate")
        return LocalInvolution::Alternate;
    fail(ErrorKind::MalformedInput, "involution action must be \"standard\" or \"alternate\", got \"" + s + "\"");
}

inline void to_json(json& j, const AbstractConfig& c)
{
    json sites = json::array();
    for (const auto& s : c.sites) {
        sites.push_back({{"first", s.pair.first.name()},
                         {"second", s.pair.second.name()},
                         {"first_involution", to_string(s.pair.first.involution)},
                         {"second_involution", to_string(s.pair.second.involution)},
                         {"count", s.weight},
                         {"label", s.label}});
    }
    j = json{{"d", c.d}, {"sites", sites}};
}

namespace detail {

inline void reject_unknown(const json& j, std::initializer_list<const char*> allowed, const std::string& where)
{
    if (!j.is_object())
        fail(ErrorKind::MalformedInput, where + " must be an object");
    for (const auto& [key, value] : j.items()) {
        bool known = false;
        for (const char* a : allowed)
            known = known || key == a;
        if (!known)
            fail(ErrorKind::MalformedInput, "unknown field \"" + key + "\" in " + where);
    }
}

template <class T>
T field(const json& j, const char* key, const std::string& where)
{
    if (!j.contains(key))
        fail(ErrorKind::MalformedInput, "missing field \"" + std::string(key) + "\" in " + where);
    try {
        return j.at(key).get<T>();
    }
    catch (const json::exception&) {
        fail(ErrorKind::MalformedInput, "field \"" + std::string(key) + "\" in " + where + " has the wrong type");
    }
}

template <class T>
T field_or(const json& j, const char* key, T fallback, const std::string& where)
{
    return j.contains(key) ? field<T>(j, key, where) : fallback;
}

inline FiberSide parse_side(const json& site, const char* type_key, const char* inv_key, const std::string& where)
{
    const auto type = field<std::string>(site, type_key, where);
    std::optional<KodairaFiber> fiber;
    try {
        fiber = parse_fiber(type);
    }
    catch (const Error& e) {
        fail(ErrorKind::MalformedInput, where + ": " + e.what());
    }
    return side(fiber, parse_local_involution(field_or<std::string>(site, inv_key, "standard", where)));
}

} // namespace detail

inline void from_json(const json& j, AbstractConfig& c)
{
    detail::reject_unknown(j, {"d", "sites"}, "config");
    c.d = detail::field_or<int>(j, "d", 0, "config");
    const json& sites = j.contains("sites") ? j.at("sites") : json::array();
    if (!sites.is_array())
        fail(ErrorKind::MalformedInput, "config.sites must be an array");
    c.sites.clear();
    for (std::size_t k = 0; k < sites.size(); ++k) {
        const json& s = sites[k];
        const std::string where = "config.sites[" + std::to_string(k) + "]";
        detail::reject_unknown(s, {"first", "second", "first_involution", "second_involution", "count", "label"}, where);
        WeightedSite w;
        w.pair.first = detail::parse_side(s, "first", "first_involution", where);
        w.pair.second = detail::parse_side(s, "second", "second_involution", where);
        w.weight = detail::field_or<int>(s, "count", 1, where);
        w.label = detail::field_or<std::string>(s, "label", "", where);
        c.sites.push_back(std::move(w));
    }
}

inline void to_json(json& j, const SurfaceRow& r)
{
    j = json{{"place", r.place}, {"degree", r.degree}, {"type", r.type}};
    detail::put_optional(j, "v_f", r.v_f);
    detail::put_optional(j, "v_g", r.v_g);
    detail::put_optional(j, "v_delta", r.v_delta);
    detail::put_optional(j, "components", r.components);
    detail::put_optional(j, "euler", r.euler);
    detail::put_optional(j, "a", r.a);
    detail::put_optional(j, "fixed_nodes", r.fixed_nodes);
}

inline void from_json(const json& j, SurfaceRow& r)
{
    j.at("place").get_to(r.place);
    j.at("degree").get_to(r.degree);
    j.at("type").get_to(r.type);
    detail::get_optional(j, "v_f", r.v_f);
    detail::get_optional(j, "v_g", r.v_g);
    detail::get_optional(j, "v_delta", r.v_delta);
    detail::get_optional(j, "components", r.components);
    detail::get_optional(j, "euler", r.euler);
    detail::get_optional(j, "a", r.a);
    detail::get_optional(j, "fixed_nodes", r.fixed_nodes);
}

inline void to_json(json& j, const ProductRow& r)
{
    j = json{{"place", r.place},
             {"weight", r.weight},
             {"pair", r.pair},
             {"singularity", r.singularity},
             {"count", r.count},
             {"small_resolution", r.small_resolution},
             {"local_equation", r.local_equation}};
    detail::put_optional(j, "chi_exceptional", r.chi_exceptional);
}

inline void from_json(const json& j, ProductRow& r)
{
    j.at("place").get_to(r.place);
    j.at("weight").get_to(r.weight);
    j.at("pair").get_to(r.pair);
    j.at("singularity").get_to(r.singularity);
    j.at("count").get_to(r.count);
    j.at("small_resolution").get_to(r.small_resolution);
    j.at("local_equation").get_to(r.local_equation);
    detail::get_optional(j, "chi_exceptional", r.chi_exceptional);
}

inline void to_json(json& j, const Verdicts& v)
{
    j = json::object();
    detail::put_optional(j, "small_resolution", v.small_resolution);
    detail::put_optional(j, "projective", v.projective);
    detail::put_optional(j, "kummer_projective", v.kummer_projective);
}

inline void from_json(const json& j, Verdicts& v)
{
    detail::get_optional(j, "small_resolution", v.small_resolution);
    detail::get_optional(j, "projective", v.projective);
    detail::get_optional(j, "kummer_projective", v.kummer_projective);
}

inline void to_json(json& j, const NumberEntry& n)
{
    j = json{{"name", n.name}, {"value", n.value}, {"formula", n.formula}, {"heuristic", n.heuristic}};
}

inline void from_json(const json& j, NumberEntry& n)
{
    j.at("name").get_to(n.name);
    j.at("value").get_to(n.value);
    j.at("formula").get_to(n.formula);
    j.at("heuristic").get_to(n.heuristic);
}

inline void to_json(json& j, const QuotientSingularity& q)
{
    j = json{{"label", q.label},
             {"local_equation", q.local_equation},
             {"resolution", q.resolution_note},
             {"site", q.site},
             {"count", q.count}};
}

inline void from_json(const json& j, QuotientSingularity& q)
{
    j.at("label").get_to(q.label);
    j.at("local_equation").get_to(q.local_equation);
    j.at("resolution").get_to(q.resolution_note);
    j.at("site").get_to(q.site);
    j.at("count").get_to(q.count);
}

inline void to_json(json& j, const InvariantReport& r)
{
    j = json{{"command", r.command},
             {"surface1", r.surface1},
             {"surface2", r.surface2},
             {"product", r.product},
             {"verdicts", r.verdicts},
             {"numbers", r.numbers},
             {"census", r.census},
             {"warnings", r.warnings}};
    j["split_config"] = r.split_config ? json(*r.split_config) : json(nullptr);
}

inline void from_json(const json& j, InvariantReport& r)
{
    j.at("command").get_to(r.command);
    j.at("surface1").get_to(r.surface1);
    j.at("surface2").get_to(r.surface2);
    j.at("product").get_to(r.product);
    j.at("verdicts").get_to(r.verdicts);
    j.at("numbers").get_to(r.numbers);
    j.at("census").get_to(r.census);
    j.at("warnings").get_to(r.warnings);
    if (j.contains("split_config") && !j.at("split_config").is_null())
        r.split_config = j.at("split_config").get<AbstractConfig>();
    else
        r.split_config.reset();
}

// ---- text rendering -------------------------------------------------------

namespace detail {

inline std::string cell(const std::optional<int>& v) { return v ? std::to_string(*v) : "-"; }

inline std::string cell(const std::optional<bool>& v) { return v ? (*v ? "yes" : "no") : "-"; }

/// Left-aligned columns sized to their widest cell.
inline void print_table(std::ostream& os, const std::vector<std::string>& header,
                        const std::vector<std::vector<std::string>>& rows)
{
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) {
        width[c] = header[c].size();
        for (const auto& r : rows)
            width[c] = std::max(width[c], r[c].size());
    }
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
            os << "  ";
            if (c + 1 == cells.size())
                os << cells[c];
            else
                os << std::left << std::setw(static_cast<int>(width[c])) << cells[c];
        }
        os << '\n';
    };
    line(header);
    for (const auto& r : rows)
        line(r);
}

inline void print_surface(std::ostream& os, const char* title, const std::vector<SurfaceRow>& rows)
{
    if (rows.empty())
        return;
    os << title << '\n';
    std::vector<std::vector<std::string>> cells;
    for (const auto& r : rows)
        cells.push_back({r.place, std::to_string(r.degree), cell(r.v_f), cell(r.v_g), cell(r.v_delta), r.type,
                         cell(r.components), cell(r.euler), cell(r.a), cell(r.fixed_nodes)});
    print_table(os, {"place", "deg", "v_f", "v_g", "v_delta", "type", "b", "chi", "a", "fn"}, cells);
    os << '\n';
}

} // namespace detail

inline void render_text(std::ostream& os, const InvariantReport& r)
{
    os << "command: " << r.command << "\n\n";
    detail::print_surface(os, "surface 1", r.surface1);
    detail::print_surface(os, "surface 2", r.surface2);
    if (!r.product.empty()) {
        os << "fiber product\n";
        std::vector<std::vector<std::string>> cells;
        for (const auto& p : r.product)
            cells.push_back({p.place, std::to_string(p.weight), p.pair, p.singularity, std::to_string(p.count),
                             p.small_resolution ? "yes" : "no", detail::cell(p.chi_exceptional), p.local_equation});
        detail::print_table(os, {"place", "deg", "pair", "singularity", "count", "small", "chi_E", "local equation"},
                            cells);
        os << '\n';
    }
    if (r.verdicts.small_resolution || r.verdicts.projective || r.verdicts.kummer_projective) {
        os << "verdicts\n";
        detail::print_table(os, {"small resolution", "projective", "kummer projective"},
                            {{detail::cell(r.verdicts.small_resolution), detail::cell(r.verdicts.projective),
                              detail::cell(r.verdicts.kummer_projective)}});
        os << '\n';
    }
    if (!r.numbers.empty()) {
        os << "invariants\n";
        std::vector<std::vector<std::string>> cells;
        for (const auto& n : r.numbers)
            cells.push_back({n.name, std::to_string(n.value), n.formula, n.heuristic ? "heuristic" : ""});
        detail::print_table(os, {"name", "value", "formula", "note"}, cells);
        os << '\n';
    }
    if (!r.census.empty()) {
        os << "quotient singularities\n";
        std::vector<std::vector<std::string>> cells;
        for (const auto& q : r.census)
            cells.push_back({q.site, q.label, std::to_string(q.count), q.local_equation, q.resolution_note});
        detail::print_table(os, {"site", "label", "count", "local equation", "resolution"}, cells);
        os << '\n';
    }
    if (r.split_config) {
        os << "generic splitting (d = " << r.split_config->d << ")\n";
        std::vector<std::vector<std::string>> cells;
        for (const auto& s : r.split_config->sites)
            cells.push_back({s.pair.name(), std::to_string(s.weight)});
        detail::print_table(os, {"pair", "count"}, cells);
        os << '\n';
    }
    if (!r.warnings.empty()) {
        os << "warnings\n";
        for (const auto& w : r.warnings)
            os << "  - " << w << '\n';
    }
}

inline std::string render_text(const InvariantReport& r)
{
    std::ostringstream os;
    render_text(os, r);
    return os.str();
}

} // namespace fiberprod

#endif
