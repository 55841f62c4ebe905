#ifndef FIBERPROD_PIPELINE_HPP
#define FIBERPROD_PIPELINE_HPP

// Job files and the four commands: surface, product, deform, kummer.

#include "fiberprod/config.hpp"
#include "fiberprod/deform.hpp"
#include "fiberprod/error.hpp"
#include "fiberprod/hodge.hpp"
#include "fiberprod/kodaira.hpp"
#include "fiberprod/kummer.hpp"
#include "fiberprod/places.hpp"
#include "fiberprod/product.hpp"
#include "fiberprod/qpoly.hpp"
#include "fiberprod/report.hpp"

#include "json.hpp"

#include <future>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fiberprod {

struct SurfaceInput {
    RatPoly f;
    RatPoly g;
};

struct JobOptions {
    bool allow_nonprojective = false;
    bool minimalize = false;
    bool report_nonreduced = false;
};

struct JobInput {
    std::optional<SurfaceInput> surface1;
    std::optional<SurfaceInput> surface2;
    /// Fiber configuration given directly instead of Weierstrass data.
    std::optional<AbstractConfig> config;
    std::optional<bool> isogenous;
    std::optional<InvolutionSpec> involution;
    std::optional<int> branch_components;
    std::optional<std::pair<int, int>> cone_components;
    JobOptions options;
};

enum class Command { Surface, Product, Deform, Kummer };

inline std::string to_string(Command c)
{
    switch (c) {
    case Command::Surface: return "surface";
    case Command::Product: return "product";
    case Command::Deform: return "deform";
    case Command::Kummer: return "kummer";
    }
    return "?";
}

inline Command parse_command(const std::string& s)
{
    if (s == "surface")
        return Command::Surface;
    if (s == "product")
        return Command::Product;
    if (s == "deform")
        return Command::Deform;
    if (s == "kummer")
        return Command::Kummer;
    fail(ErrorKind::InvalidArgument, "unknown command \"" + s + "\"");
}

// ---- parsing --------------------------------------------------------------

namespace detail {

inline Rational parse_coefficient(const json& c, const std::string& where)
{
    if (c.is_string())
        return parse_rational(c.get<std::string>());
    if (c.is_number_integer())
        return Rational(c.get<long long>());
    fail(ErrorKind::MalformedInput, where + ": coefficients must be integers or rational strings such as \"-3/4\"");
}

inline RatPoly parse_coefficients(const json& j, std::size_t max_length, const std::string& where)
{
    if (!j.is_array())
        fail(ErrorKind::MalformedInput, where + " must be an array of coefficients in ascending degree");
    if (j.size() > max_length)
        fail(ErrorKind::MalformedInput, where + " has " + std::to_string(j.size()) + " coefficients; at most " +
                                            std::to_string(max_length) + " allowed (degree " +
                                            std::to_string(max_length - 1) + ")");
    std::vector<Rational> coeffs;
    for (const auto& c : j)
        coeffs.push_back(parse_coefficient(c, where));
    return RatPoly(std::move(coeffs));
}

inline SurfaceInput parse_surface_input(const json& j, const std::string& where)
{
    reject_unknown(j, {"f", "g"}, where);
    if (!j.contains("f") || !j.contains("g"))
        fail(ErrorKind::MalformedInput, where + " needs both \"f\" and \"g\"");
    return {parse_coefficients(j.at("f"), 5, where + ".f"), parse_coefficients(j.at("g"), 7, where + ".g")};
}

inline InvolutionSpec::Action parse_action(const std::string& s)
{
    using A = InvolutionSpec::Action;
    if (s == "even")
        return A::Even;
    if (s == "odd")
        return A::Odd;
    if (s == "swap")
        return A::SwapComponents;
    if (s == "fix-both")
        return A::FixBoth;
    fail(ErrorKind::MalformedInput, "override action must be even, odd, swap or fix-both, got \"" + s + "\"");
}

inline InvolutionSpec parse_involution(const json& j)
{
    reject_unknown(j, {"kind", "overrides"}, "involution");
    InvolutionSpec spec;
    const auto kind = field_or<std::string>(j, "kind", "zero-section", "involution");
    if (kind == "zero-section")
        spec.kind = InvolutionSpec::Kind::ZeroSection;
    else if (kind == "custom")
        spec.kind = InvolutionSpec::Kind::Custom;
    else
        fail(ErrorKind::MalformedInput, "involution.kind must be zero-section or custom");
    if (j.contains("overrides")) {
        const json& list = j.at("overrides");
        if (!list.is_array())
            fail(ErrorKind::MalformedInput, "involution.overrides must be an array");
        for (std::size_t k = 0; k < list.size(); ++k) {
            const std::string where = "involution.overrides[" + std::to_string(k) + "]";
            reject_unknown(list[k], {"surface", "place", "action"}, where);
            InvolutionSpec::Override o;
            o.surface = field<int>(list[k], "surface", where);
            if (o.surface != 1 && o.surface != 2)
                fail(ErrorKind::MalformedInput, where + ".surface must be 1 or 2");
            try {
                o.place = parse_place(field<std::string>(list[k], "place", where));
            }
            catch (const Error& e) {
                fail(ErrorKind::MalformedInput, where + ".place: " + e.what());
            }
            o.action = parse_action(field<std::string>(list[k], "action", where));
            spec.overrides.push_back(std::move(o));
        }
    }
    return spec;
}

} // namespace detail

inline JobInput parse_job(const json& j)
{
    detail::reject_unknown(j,
                           {"surface1", "surface2", "config", "isogenous", "involution", "branch_components",
                            "cone_components", "options"},
                           "job");
    JobInput in;
    if (j.contains("surface1"))
        in.surface1 = detail::parse_surface_input(j.at("surface1"), "surface1");
    if (j.contains("surface2"))
        in.surface2 = detail::parse_surface_input(j.at("surface2"), "surface2");
    if (j.contains("config"))
        in.config = j.at("config").get<AbstractConfig>();
    if (in.config && (in.surface1 || in.surface2))
        fail(ErrorKind::MalformedInput, "give either surface1/surface2 or config, not both");
    if (j.contains("isogenous"))
        in.isogenous = detail::field<bool>(j, "isogenous", "job");
    if (j.contains("involution"))
        in.involution = detail::parse_involution(j.at("involution"));
    if (j.contains("branch_components")) {
        in.branch_components = detail::field<int>(j, "branch_components", "job");
        if (*in.branch_components < 1)
            fail(ErrorKind::MalformedInput, "branch_components must be a positive integer");
    }
    if (j.contains("cone_components")) {
        const auto cc = detail::field<std::vector<int>>(j, "cone_components", "job");
        if (cc.size() != 2 || cc[0] < 1 || cc[1] < 1)
            fail(ErrorKind::MalformedInput, "cone_components must be two positive integers");
        in.cone_components = std::pair{cc[0], cc[1]};
    }
    if (j.contains("options")) {
        const json& o = j.at("options");
        detail::reject_unknown(o, {"allow_nonprojective", "minimalize", "report_nonreduced"}, "options");
        in.options.allow_nonprojective = detail::field_or<bool>(o, "allow_nonprojective", false, "options");
        in.options.minimalize = detail::field_or<bool>(o, "minimalize", false, "options");
        in.options.report_nonreduced = detail::field_or<bool>(o, "report_nonreduced", false, "options");
    }
    return in;
}

inline json parse_json_text(const std::string& text)
{
    try {
        return json::parse(text);
    }
    catch (const json::parse_error& e) {
        fail(ErrorKind::MalformedInput, std::string("input is not valid JSON: ") + e.what());
    }
}

// ---- commands -------------------------------------------------------------

namespace detail {

inline std::optional<int> finite(int v)
{
    if (is_infinite(v))
        return std::nullopt;
    return v;
}

inline SurfaceRow surface_row(const std::string& place, int degree, const std::optional<ValuationProfile>& profile,
                              const FiberSide& s)
{
    SurfaceRow r;
    r.place = place;
    r.degree = degree;
    if (profile) {
        r.v_f = finite(profile->v_f);
        r.v_g = finite(profile->v_g);
        r.v_delta = finite(profile->v_delta);
    }
    r.type = s.name();
    if (!s.fiber || s.fiber->is_reduced()) {
        r.components = s.components();
        r.euler = s.euler();
        const FixedPointCount c = fixed_point_count(s);
        r.a = c.a;
        r.fixed_nodes = c.fixed_nodes;
    }
    return r;
}

inline void append(std::vector<std::string>& to, const std::vector<std::string>& from)
{
    to.insert(to.end(), from.begin(), from.end());
}

/// Fiber configuration of a job plus the per-surface tables.
struct Prepared {
    AbstractConfig config;
    std::vector<SurfaceRow> rows1;
    std::vector<SurfaceRow> rows2;
    bool zero_section = true;
    std::vector<std::string> warnings;
};

inline Prepared prepare(const JobInput& in)
{
    Prepared p;
    if (in.config) {
        if (in.isogenous)
            fail(ErrorKind::MalformedInput, "isogenous applies to Weierstrass input; set config.d instead");
        p.config = *in.config;
        bool alternate = false;
        for (const auto& s : p.config.sites)
            alternate = alternate || s.pair.first.involution == LocalInvolution::Alternate ||
                        s.pair.second.involution == LocalInvolution::Alternate;
        if (in.involution) {
            if (!in.involution->overrides.empty())
                fail(ErrorKind::MalformedInput, "overrides apply to Weierstrass input; set per-site involutions in config");
            if (in.involution->kind == InvolutionSpec::Kind::ZeroSection && alternate)
                fail(ErrorKind::InvalidArgument, "zero-section involution acts by the standard action on every fiber");
        }
        p.zero_section = in.involution ? in.involution->kind == InvolutionSpec::Kind::ZeroSection : !alternate;
        p.config.validate();
        for (const auto& s : p.config.sites) {
            const std::string place = site_label(s);
            if (s.pair.first.singular())
                p.rows1.push_back(surface_row(place, s.weight, std::nullopt, s.pair.first));
            if (s.pair.second.singular())
                p.rows2.push_back(surface_row(place, s.weight, std::nullopt, s.pair.second));
        }
        return p;
    }

    if (!in.surface1 || !in.surface2)
        fail(ErrorKind::MalformedInput, "this command needs surface1 and surface2, or config");
    SurfaceOptions so;
    so.minimalize = in.options.minimalize;
    SurfaceModel s1 = analyze_surface(in.surface1->f, in.surface1->g, so);
    SurfaceModel s2 = analyze_surface(in.surface2->f, in.surface2->g, so);
    append(p.warnings, s1.warnings);
    append(p.warnings, s2.warnings);
    ProductOptions po;
    po.isogenous = in.isogenous;
    if (in.involution)
        for (const auto& o : in.involution->overrides)
            if (!o.place.is_infinity())
                po.refine_by.push_back(o.place.polynomial());
    const ProductConfig pc = build_product(std::move(s1), std::move(s2), po);
    append(p.warnings, pc.warnings);
    const InvolutionSpec inv = in.involution.value_or(InvolutionSpec{});
    p.zero_section = inv.kind == InvolutionSpec::Kind::ZeroSection;
    p.config = pc.sites(inv);
    p.config.validate();
    for (std::size_t k = 0; k < pc.pairs.size(); ++k) {
        const PlacedPair& pp = pc.pairs[k];
        const WeightedSite& s = p.config.sites[k];
        if (pp.first_profile)
            p.rows1.push_back(surface_row(pp.place.to_string(), pp.place.degree(), pp.first_profile, s.pair.first));
        if (pp.second_profile)
            p.rows2.push_back(surface_row(pp.place.to_string(), pp.place.degree(), pp.second_profile, s.pair.second));
    }
    return p;
}

inline void add(InvariantReport& r, std::string name, long value, std::string formula, bool heuristic = false)
{
    r.numbers.push_back({std::move(name), value, std::move(formula), heuristic});
}

inline std::vector<ProductRow> product_rows(const AbstractConfig& config)
{
    std::vector<ProductRow> rows;
    for (const auto& s : config.sites) {
        if (!s.pair.common())
            continue;
        const FiberPairClass c = pair_singularity(s.pair);
        rows.push_back({site_label(s), s.weight, c.canonical_name(), to_string(c.singularity), c.count,
                        c.small_resolution, c.chi_exceptional, c.local_equation});
    }
    return rows;
}

/// Product tables, verdicts and Hodge numbers shared by product, deform
/// and kummer.
inline InvariantReport product_report(const JobInput& in, Command command, Prepared& p)
{
    InvariantReport r;
    r.command = to_string(command);
    r.surface1 = std::move(p.rows1);
    r.surface2 = std::move(p.rows2);
    r.warnings = std::move(p.warnings);
    const AbstractConfig& config = p.config;
    r.product = product_rows(config);

    const ResolutionVerdict verdict = small_resolution_exists(config);
    r.verdicts.small_resolution = verdict.exists;
    if (!verdict.exists)
        detail::require_small_resolution(config);
    const bool projective = is_projective(config);
    r.verdicts.projective = projective;
    if (!projective && !in.options.allow_nonprojective)
        fail(ErrorKind::NoSmallResolution,
             "the small resolution is not projective (II x II, III x III or I1 x singular fiber present); "
             "rerun with --allow-nonprojective to report it anyway");

    const HodgeReport h = hodge_report(config);
    add(r, "d", h.d, "product.isogeny");
    add(r, "h11", h.h11, "hodge.h11: 19 + d + sum_t (b b' - 1) - sum_t (b - 1) - sum_t (b' - 1)");
    add(r, "h12", h.h12, "hodge.h12: 19 + d - sum_common (b + b' - 1)");
    add(r, "chi_X", h.chi_singular, "hodge.chi_singular: sum_common chi(F) chi(F')");
    add(r, "chi_X_hat", h.chi_resolved, "hodge.chi_resolved: chi(X) + sum_points (chi(E) - 1)");
    if (projective)
        add(r, "chi_X_hat_simplified", chi_resolved(config).simplified,
            "hodge.chi_resolved_simplified: 2 sum_common b b'");
    append(r.warnings, h.warnings);
    return r;
}

inline InvariantReport cmd_surface(const JobInput& in)
{
    if (in.config)
        fail(ErrorKind::MalformedInput, "the surface command needs Weierstrass data (surface1), not a config");
    if (!in.surface1)
        fail(ErrorKind::MalformedInput, "the surface command needs surface1");
    InvariantReport r;
    r.command = to_string(Command::Surface);
    SurfaceOptions so;
    so.minimalize = in.options.minimalize;
    so.report_nonreduced = in.options.report_nonreduced;
    auto table = [&](const SurfaceInput& s, std::vector<SurfaceRow>& rows, const char* name) {
        const SurfaceModel m = analyze_surface(s.f, s.g, so);
        long euler = 0;
        for (const auto& e : m.fibers) {
            rows.push_back(surface_row(e.profile.place.to_string(), e.profile.place.degree(), e.profile,
                                       side(e.fiber)));
            if (!e.fiber.is_reduced())
                r.warnings.push_back(std::string(name) + ": non-reduced fiber " + e.fiber.name() + " at " +
                                     e.profile.place.to_string() + "; fiber products need reduced fibers");
            else
                euler += static_cast<long>(e.profile.place.degree()) * e.fiber.euler();
        }
        for (const auto& w : m.warnings)
            r.warnings.push_back(std::string(name) + ": " + w);
        if (m.all_reduced())
            add(r, std::string(name) + ".sum_chi_F", euler, "kodaira.euler_sum: sum_t deg(t) chi(F_t)");
    };
    table(*in.surface1, r.surface1, "surface1");
    if (in.surface2)
        table(*in.surface2, r.surface2, "surface2");
    return r;
}

inline InvariantReport cmd_product(const JobInput& in)
{
    Prepared p = prepare(in);
    return product_report(in, Command::Product, p);
}

inline InvariantReport cmd_deform(const JobInput& in)
{
    Prepared p = prepare(in);
    InvariantReport r = product_report(in, Command::Deform, p);
    const DeformationReport d = deformation_dimension(p.config);
    add(r, "conditions", d.conditions, "deform.conditions: sum_common (b + b' - 1) - d");
    add(r, "dim_Q", d.dim_q, "deform.dim_q: 24 - conditions");
    add(r, "deformation_dim", d.deformation_dim, "deform.dimension: dim_Q - 3 - 2");
    r.split_config = generic_split(p.config);
    return r;
}

inline InvariantReport cmd_kummer(const JobInput& in)
{
    Prepared p = prepare(in);
    if (!p.config.semistable())
        fail(ErrorKind::Unsupported, "Kummer invariants need semi-stable fibers (I_n only)");
    const AbstractConfig config = p.config;
    InvariantReport r = product_report(in, Command::Kummer, p);

    const bool kp = kummer_projective(config);
    r.verdicts.kummer_projective = kp;
    if (!kp && !in.options.allow_nonprojective)
        fail(ErrorKind::NoSmallResolution, "the Kummer resolution is not projective (I1 x I_n common fiber); "
                                           "rerun with --allow-nonprojective to report it anyway");

    KummerOptions ko;
    ko.branch_components = in.branch_components;
    ko.cone_components = in.cone_components;
    ko.allow_nonprojective = in.options.allow_nonprojective;
    ko.zero_section = p.zero_section;
    const KummerHodge k = hodge_kummer(config, ko);
    const SingularPartition part = singular_point_partition(config);

    add(r, "chi_C", k.chi_branch, "kummer.chi_branch: 16 (2 - #sites) + sum_t a_t a'_t");
    add(r, "o", part.o, "kummer.o: sum_common fn fn'");
    add(r, "b", part.b, "kummer.b: (sum_common n m - o) / 2");
    add(r, "chi_Y_hat", k.chi, "kummer.chi: (chi(X) - chi(C)) / 2 + 2 chi(C) + 2 o + b");
    add(r, "branch_components", k.components, "kummer.components: user input, default 1");
    if (k.components_lower_bound)
        add(r, "branch_components_lower_bound", *k.components_lower_bound, "kummer.components_bound: k1 k2");
    add(r, "transversal", k.transversal, "kummer.transversal: k - (chi(C) + nodes(C)) / 2");
    add(r, "equisingular", k.equisingular, "kummer.equisingular: h12(X) - sum_only (b - 1)", true);
    add(r, "h12_Y_hat", k.h12, "kummer.h12: transversal + equisingular", true);
    add(r, "h11_Y_hat", k.h11, "kummer.h11: h12(Y^) + chi(Y^) / 2", true);
    r.census = quotient_singularity_census(config);
    append(r.warnings, k.warnings);
    return r;
}

} // namespace detail

inline InvariantReport run_job(Command command, const JobInput& in)
{
    switch (command) {
    case Command::Surface: return detail::cmd_surface(in);
    case Command::Product: return detail::cmd_product(in);
    case Command::Deform: return detail::cmd_deform(in);
    case Command::Kummer: return detail::cmd_kummer(in);
    }
    fail(ErrorKind::InvalidArgument, "unknown command");
}

inline InvariantReport cmd_surface(const JobInput& in) { return run_job(Command::Surface, in); }
inline InvariantReport cmd_product(const JobInput& in) { return run_job(Command::Product, in); }
inline InvariantReport cmd_deform(const JobInput& in) { return run_job(Command::Deform, in); }
inline InvariantReport cmd_kummer(const JobInput& in) { return run_job(Command::Kummer, in); }

/// Outcome of one job: a report, or the error that stopped it.
struct JobResult {
    std::optional<InvariantReport> report;
    std::optional<ErrorKind> error;
    std::string message;

    int exit_code() const { return error ? fiberprod::exit_code(*error) : 0; }
};

inline json result_to_json(const JobResult& r)
{
    if (r.report)
        return json{{"ok", true}, {"report", *r.report}};
    return json{{"ok", false},
                {"error",
                 {{"kind", std::string(to_string(*r.error))},
                  {"message", r.message},
                  {"exit_code", r.exit_code()}}}};
}

/// Flags given on the command line; they take precedence over job options.
struct CommandLineOverrides {
    bool minimalize = false;
    bool allow_nonprojective = false;
    std::optional<int> branch_components;
};

inline void apply(JobInput& in, const CommandLineOverrides& o)
{
    in.options.minimalize = in.options.minimalize || o.minimalize;
    in.options.allow_nonprojective = in.options.allow_nonprojective || o.allow_nonprojective;
    if (o.branch_components)
        in.branch_components = o.branch_components;
}

inline JobResult run_job_document(Command command, const json& doc, const CommandLineOverrides& overrides = {})
{
    JobResult result;
    try {
        JobInput in = parse_job(doc);
        apply(in, overrides);
        result.report = run_job(command, in);
    }
    catch (const Error& e) {
        result.error = e.kind();
        result.message = e.what();
    }
    catch (const json::exception& e) {
        result.error = ErrorKind::MalformedInput;
        result.message = e.what();
    }
    return result;
}

/// Runs every job of a list concurrently; results follow input order.
inline std::vector<JobResult> run_batch(Command command, const json& jobs, const CommandLineOverrides& overrides = {})
{
    if (!jobs.is_array())
        fail(ErrorKind::MalformedInput, "batch input must be a JSON array of jobs");
    std::vector<std::future<JobResult>> pending;
    pending.reserve(jobs.size());
    for (const auto& job : jobs)
        pending.push_back(std::async(std::launch::async, [command, &job, &overrides] {
            return run_job_document(command, job, overrides);
        }));
    std::vector<JobResult> results;
    results.reserve(pending.size());
    for (auto& f : pending)
        results.push_back(f.get());
    return results;
}

} // namespace fiberprod

#endif
