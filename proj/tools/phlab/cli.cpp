#include "cli.hpp"

#include "phlab/bochner.hpp"
#include "phlab/classify.hpp"
#include "phlab/contact_metric.hpp"
#include "phlab/errors.hpp"
#include "phlab/symmetry.hpp"
#include "phlab/tanaka_webster.hpp"
#include "phlab/tolerances.hpp"
#include "phlab/tsb.hpp"
#include "phlab/verify.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <sstream>

namespace phlab::cli {

using nlohmann::ordered_json;

namespace {

ordered_json optional_number(const std::optional<double>& v)
{
    return v ? ordered_json(*v) : ordered_json(nullptr);
}

ordered_json checks_json(const CheckReport& report)
{
    ordered_json arr = ordered_json::array();
    for (const Check& c : report.checks()) {
        arr.push_back({{"name", c.name},
                       {"value", c.value},
                       {"threshold", c.threshold},
                       {"sense", c.sense == Check::Sense::AtMost ? "at_most" : "at_least"},
                       {"passed", c.passed}});
    }
    return arr;
}

void print_checks(std::ostream& out, const CheckReport& report, const std::string& indent = "  ")
{
    std::size_t width = 0;
    for (const Check& c : report.checks()) width = std::max(width, c.name.size());
    for (const Check& c : report.checks()) {
        out << indent << (c.passed ? "ok    " : "FAIL  ") << std::left << std::setw(static_cast<int>(width)) << c.name
            << "  " << std::scientific << std::setprecision(3) << c.value
            << (c.sense == Check::Sense::AtMost ? " <= " : " >= ") << c.threshold << std::defaultfloat << '\n';
    }
}

std::string text_number(const std::optional<double>& v)
{
    if (!v) return "undefined";
    std::ostringstream os;
    os << std::setprecision(12) << *v;
    return os.str();
}

std::string csv_number(const std::optional<double>& v)
{
    if (!v) return "";
    std::ostringstream os;
    os << std::setprecision(17) << *v;
    return os.str();
}

// The single JSON shape shared by kmu and tsb.
struct ModelReport {
    std::string command;
    ordered_json inputs = ordered_json::object();
    ordered_json invariants = ordered_json::object();
    CheckReport checks;
    std::string label;
};

int emit(const ModelReport& r, Format format, std::ostream& out)
{
    if (format == Format::Json) {
        ordered_json j;
        j["command"] = r.command;
        j["inputs"] = r.inputs;
        j["invariants"] = r.invariants;
        j["checks"] = checks_json(r.checks);
        j["label"] = r.label;
        out << j.dump(2) << '\n';
    } else if (format == Format::Csv) {
        out << "quantity,value\n";
        for (const auto& [key, value] : r.invariants.items()) {
            out << key << ',';
            if (value.is_number())
                out << csv_number(value.get<double>());
            else if (!value.is_null())
                out << value.dump();
            out << '\n';
        }
        out << "label," << r.label << '\n';
    } else {
        out << r.command << '\n';
        for (const auto& [key, value] : r.inputs.items()) out << "  " << key << " = " << value.dump() << '\n';
        out << "invariants\n";
        for (const auto& [key, value] : r.invariants.items()) {
            out << "  " << key << " = ";
            if (value.is_number_float())
                out << text_number(value.get<double>());
            else if (value.is_null())
                out << "undefined";
            else
                out << value.dump();
            out << '\n';
        }
        out << "label: " << r.label << '\n';
        out << "checks (" << r.checks.size() << ")\n";
        print_checks(out, r.checks);
        out << (r.checks.all_passed() ? "all checks passed\n" : "CHECK FAILURES\n");
    }
    return r.checks.all_passed() ? kExitOk : kExitCheckFailed;
}

double tol_or(const RunConfig& c, double fallback)
{
    return c.tolerance.value_or(fallback);
}

}  // namespace

int cmd_kmu(const RunConfig& c, std::ostream& out)
{
    const KmuParams params = KmuParams::make(c.n, c.k, c.mu);
    if (!(params.k < 1.0)) throw InvalidInput("kmu needs k < 1; Sasakian structures are not (k,mu)-models here");

    ModelReport r;
    r.command = "kmu";
    r.inputs = {{"n", c.n}, {"k", c.k}, {"mu", c.mu}};

    const ContactMetricPoint p = build_adapted_point(params.n, params.h_eigenvalue());
    const Tensor4 curv = kmu_curvature(p, params);
    r.checks.append(validate_point(p, tol_or(c, tol::kLinearAlgebra)), "point: ");
    const double ts = tol_or(c, tol::kSymmetry);
    r.checks.at_most("(k,mu)-nullity R(X,Y)xi", kmu_nullity_residual(curv, p, params), ts);
    r.checks.at_most("R(X,Y,Z,W) = -R(Y,X,Z,W)", antisymmetry_residual_12(curv), ts);
    r.checks.at_most("R(X,Y,Z,W) = -R(X,Y,W,Z)", antisymmetry_residual_34(curv), ts);
    r.checks.at_most("R(X,Y,Z,W) = R(Z,W,X,Y)", pair_symmetry_residual(curv), ts);
    r.checks.at_most("first Bianchi identity", first_bianchi_residual(curv), ts);
    r.checks.append(check_L_preserves(symmetry_linearization(p), curv, build_T(p, params.mu), p.g, ts), "symmetry: ");

    const CanonicalCurvature ct = canonical_curvature_D(curv, p);
    r.checks.append(validate_canonical(ct, p, ts), "canonical: ");
    const BochnerPipeline bp = run_bochner_pipeline(ct, p);
    const double td = tol_or(c, tol::kDerived);
    const double rho_closed = 2.0 * params.n * params.n * (2.0 - params.mu);
    const RiemannianScalars rs = riemannian_scalars(curv, p);
    const double rho_riem = webster_scalar_via_riemannian(rs.tau, rs.ric_xi_xi, rs.tr_F2, params.n);
    r.checks.at_most("rho trace = 2n^2(2-mu)", std::abs(bp.rho - rho_closed), td);
    r.checks.at_most("rho trace = tau - 2Ric(xi,xi) - tr F^2 + 6n", std::abs(bp.rho - rho_riem), td);
    r.checks.at_most("closed-form B = B0 + B1", (bochner_kmu_closed(p, params) - bp.B).max_abs(), td);

    const double b_norm = tensor_norm(bp.B);
    const bool spherical = is_spherical(bp.B, tol_or(c, tol::kSpherical));
    const Vec e1 = Vec::basis(p.dim(), 1);
    const double ktilde = pseudoholomorphic_K(ct, e1, p);
    const ClassificationReport cls = classify_kmu(params.n, params.k, params.mu);
    r.checks.require("spherical <=> mu = 2", spherical == (cls.label == ModelLabel::T1H));

    r.invariants = {{"n", params.n},
                    {"k", params.k},
                    {"mu", params.mu},
                    {"a", params.h_eigenvalue()},
                    {"I", params.boeckx_invariant()},
                    {"rho", bp.rho},
                    {"B_norm", b_norm},
                    {"K_tilde", ktilde},
                    {"spherical", spherical}};
    r.label = cls.label_string();
    return emit(r, c.format.value_or(Format::Text), out);
}

int cmd_tsb(const RunConfig& c, std::ostream& out)
{
    const TsbParams params = TsbParams::make(c.m, c.K, c.r, c.lambda_b);
    ModelReport r;
    r.command = "tsb";
    r.inputs = {{"m", c.m}, {"K", c.K}, {"r", c.r}, {"lambda_b", c.lambda_b}};

    const TsbDerived dv = tsb_derived(params);
    const TsbPredicates pr = tsb_predicates(params);
    const TsbConstruction tc = tsb_construct(params);
    const double tl = tol_or(c, tol::kLinearAlgebra);
    r.checks.append(validate_point(tc.lift_basis, tl), "lift basis: ");
    r.checks.append(validate_point(tc.adapted, tl), "adapted: ");
    r.checks.at_most("Levi form horizontal block", tc.levi.horizontal_residual, tol_or(c, tol::kPredicate));
    r.checks.at_most("Levi form vertical block", tc.levi.vertical_residual, tol_or(c, tol::kPredicate));
    r.checks.at_most("Levi form cross block", tc.levi.cross_residual, tol_or(c, tol::kPredicate));

    const double td = tol_or(c, tol::kDerived);
    const RhoRoutes routes = tsb_webster_scalar_3routes(params, std::numeric_limits<double>::infinity());
    r.checks.at_most("rho closed = rho O'Neill", std::abs(routes.closed - routes.oneill), td);
    if (routes.pipeline) r.checks.at_most("rho closed = rho pipeline", std::abs(routes.closed - *routes.pipeline), td);

    std::optional<double> b_norm;
    std::optional<double> ktilde;
    if (!dv.sasakian) {
        const ContactMetricPoint& p = tc.adapted;
        const KmuParams kp = KmuParams::make(dv.n, dv.k, *dv.mu);
        const CanonicalCurvature ct = canonical_curvature_D(kmu_curvature(p, kp), p);
        const BochnerPipeline bp = run_bochner_pipeline(ct, p);
        b_norm = tensor_norm(bp.B);
        ktilde = pseudoholomorphic_K(ct, Vec::basis(p.dim(), 1), p);
        r.checks.require("spherical <=> B = 0", pr.spherical == is_spherical(bp.B, tol_or(c, tol::kSpherical)));
        r.checks.at_most("I = (1-mu/2)/sqrt(1-k)", std::abs(kp.boeckx_invariant() - *dv.I), tol_or(c, tol::kPredicate));
    }
    r.checks.require("sasakian <=> h = 0", pr.sasakian == (tc.adapted.h.max_abs() <= tol::kPredicate));

    const ClassificationReport cls = classify_tsb(params);
    r.checks.append(cls.checks, "classify: ");
    r.invariants = {{"n", dv.n},
                    {"a", dv.a},
                    {"h_vertical", dv.signed_eigenvalue},
                    {"k", dv.k},
                    {"mu", optional_number(dv.mu)},
                    {"I", optional_number(dv.I)},
                    {"rho", routes.closed},
                    {"rho_oneill", routes.oneill},
                    {"rho_pipeline", optional_number(routes.pipeline)},
                    {"tau", dv.tau},
                    {"normA2", dv.normA2},
                    {"B_norm", optional_number(b_norm)},
                    {"K_tilde", optional_number(ktilde)},
                    {"spherical", pr.spherical},
                    {"sasakian", pr.sasakian}};
    r.label = cls.label_string();
    return emit(r, c.format.value_or(Format::Text), out);
}

int cmd_sweep(const RunConfig& c, std::ostream& out)
{
    if (!std::isfinite(c.K)) throw InvalidInput("K must be finite");
    if (!std::isfinite(c.lambda_b) || !(c.lambda_b > 0.0)) throw InvalidInput("lambda must be positive");
    const std::vector<double> radii = radius_grid(c.r_min, c.r_max, c.steps);
    const SweepReport s = corollary_sweep(c.K, radii, c.lambda_b);

    CheckReport checks;
    checks.at_most("at most one flagged radius", s.flagged_rows > 1 ? double(s.flagged_rows) : 0.0, 0.0);
    if (c.K == 0.0) checks.require("I = 1 at every radius", s.constant_unit_I);

    const Format format = c.format.value_or(Format::Csv);
    const char* special = s.special == SweepReport::Special::Spherical  ? "spherical"
                          : s.special == SweepReport::Special::Sasakian ? "sasakian"
                                                                        : "none";
    if (format == Format::Csv) {
        out << "r,lambda_b,k,mu,I,rho,spherical,sasakian\n";
        for (const SweepRow& row : s.rows)
            out << csv_number(row.r) << ',' << csv_number(row.lambda_b) << ',' << csv_number(row.k) << ','
                << csv_number(row.mu) << ',' << csv_number(row.I) << ',' << csv_number(row.rho) << ','
                << (row.spherical ? "true" : "false") << ',' << (row.sasakian ? "true" : "false") << '\n';
    } else if (format == Format::Json) {
        ordered_json j;
        j["command"] = "sweep";
        j["inputs"] = {{"K", c.K}, {"r_min", c.r_min}, {"r_max", c.r_max}, {"steps", c.steps}, {"lambda_b", c.lambda_b}};
        ordered_json rows = ordered_json::array();
        for (const SweepRow& row : s.rows)
            rows.push_back({{"r", row.r},
                            {"lambda_b", row.lambda_b},
                            {"k", row.k},
                            {"mu", optional_number(row.mu)},
                            {"I", optional_number(row.I)},
                            {"rho", row.rho},
                            {"spherical", row.spherical},
                            {"sasakian", row.sasakian}});
        j["invariants"] = {{"special", special},
                           {"special_radius", optional_number(s.special_radius)},
                           {"flagged_rows", s.flagged_rows},
                           {"constant_unit_I", s.constant_unit_I},
                           {"rows", rows}};
        j["checks"] = checks_json(checks);
        j["label"] = special;
        out << j.dump(2) << '\n';
    } else {
        out << "sweep K = " << c.K << ", lambda_b = " << c.lambda_b << '\n';
        out << std::setw(10) << "r" << std::setw(14) << "k" << std::setw(14) << "mu" << std::setw(14) << "I"
            << std::setw(14) << "rho" << "  flags\n";
        for (const SweepRow& row : s.rows) {
            out << std::setw(10) << text_number(row.r) << std::setw(14) << text_number(row.k) << std::setw(14)
                << text_number(row.mu) << std::setw(14) << text_number(row.I) << std::setw(14)
                << text_number(row.rho) << "  " << (row.spherical ? "spherical" : "")
                << (row.sasakian ? "sasakian" : "") << '\n';
        }
        if (s.special_radius)
            out << special << " radius r_o = " << text_number(s.special_radius) << " (" << s.flagged_rows
                << " grid hit" << (s.flagged_rows == 1 ? "" : "s") << ")\n";
        if (c.K == 0.0) out << "I constant = 1: " << (s.constant_unit_I ? "yes" : "no") << '\n';
        print_checks(out, checks);
    }
    return checks.all_passed() ? kExitOk : kExitCheckFailed;
}

int cmd_verify(const RunConfig& c, std::ostream& out)
{
    SuiteOptions options;
    options.seed = c.seed;
    options.tolerance = c.tolerance;
    const std::vector<CriterionResult> results = run_acceptance_suite(options);
    const bool ok = all_passed(results);

    if (c.format.value_or(Format::Text) == Format::Json) {
        ordered_json j;
        j["command"] = "verify";
        j["inputs"] = {{"seed", c.seed}, {"tolerance", optional_number(c.tolerance)}};
        ordered_json criteria = ordered_json::array();
        CheckReport all;
        for (const CriterionResult& r : results) {
            criteria.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed()}, {"checks", r.report.size()}});
            all.append(r.report, "[" + std::to_string(r.id) + "] ");
        }
        j["invariants"] = {{"criteria", criteria}, {"total_checks", total_checks(results)}};
        j["checks"] = checks_json(all);
        j["label"] = ok ? "pass" : "fail";
        out << j.dump(2) << '\n';
    } else {
        for (const CriterionResult& r : results) {
            out << (r.passed() ? "PASS" : "FAIL") << "  criterion " << r.id << ": " << r.title << '\n';
            print_checks(out, r.report, "    ");
        }
        out << total_checks(results) << " checks, " << (ok ? "all passed" : "FAILURES") << '\n';
    }
    return ok ? kExitOk : kExitCheckFailed;
}

int cmd_spaces(const RunConfig& c, std::ostream& out)
{
    const std::vector<TheoremSpace> spaces = main_theorem_spaces(c.n);
    if (c.format.value_or(Format::Text) == Format::Json) {
        ordered_json arr = ordered_json::array();
        for (const TheoremSpace& s : spaces)
            arr.push_back({{"label", label_name(s.label)}, {"name", s.name}, {"description", s.description}});
        ordered_json j;
        j["command"] = "spaces";
        j["inputs"] = {{"n", c.n}};
        j["invariants"] = {{"spaces", arr}};
        j["checks"] = ordered_json::array();
        j["label"] = "";
        out << j.dump(2) << '\n';
    } else {
        for (const TheoremSpace& s : spaces) out << std::left << std::setw(12) << s.name << s.description << '\n';
    }
    return kExitOk;
}

namespace {

std::optional<Format> parse_format(const std::string& s)
{
    if (s == "text") return Format::Text;
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    return std::nullopt;
}

void apply_environment(RunConfig& c, bool tol_flag, bool seed_flag)
{
    if (!tol_flag) {
        if (const char* env = std::getenv("PHLAB_TOL"); env && *env) {
            char* end = nullptr;
            const double v = std::strtod(env, &end);
            if (*end != '\0') throw InvalidInput(std::string("PHLAB_TOL is not a number: ") + env);
            c.tolerance = v;
        }
    }
    if (!seed_flag) {
        if (const char* env = std::getenv("PHLAB_SEED"); env && *env) {
            char* end = nullptr;
            const unsigned long long v = std::strtoull(env, &end, 10);
            if (*end != '\0' || *env == '-') throw InvalidInput(std::string("PHLAB_SEED is not an unsigned integer: ") + env);
            c.seed = v;
        }
    }
    if (c.tolerance && !(*c.tolerance > 0.0 && std::isfinite(*c.tolerance)))
        throw InvalidInput("tolerance must be positive and finite");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    RunConfig c;
    std::string format;
    std::optional<double> tol_flag;
    std::optional<std::uint64_t> seed_flag;

    CLI::App app{"phlab: pseudohermitian model verification"};
    app.require_subcommand(1);

    auto shared = [&](CLI::App* sub) {
        sub->add_option("--tol", tol_flag, "residual tolerance override (env PHLAB_TOL)");
        sub->add_option("--seed", seed_flag, "seed for randomized frames (env PHLAB_SEED)");
        sub->add_option("--format", format, "text, json or csv");
        sub->add_option("--out", c.out_path, "write the report to this path");
    };

    CLI::App* kmu = app.add_subcommand("kmu", "non-Sasakian (k,mu)-space at a point");
    kmu->add_option("--n", c.n, "CR dimension")->required();
    kmu->add_option("--k", c.k, "k < 1")->required();
    kmu->add_option("--mu", c.mu, "mu")->required();
    shared(kmu);

    CLI::App* tsb = app.add_subcommand("tsb", "tangent sphere bundle T_rM over a space form");
    tsb->add_option("--m", c.m, "base dimension")->required();
    tsb->add_option("--K", c.K, "base curvature")->required();
    tsb->add_option("--r", c.r, "radius")->required();
    tsb->add_option("--lambda", c.lambda_b, "structure parameter")->default_val(1.0);
    shared(tsb);

    CLI::App* sweep = app.add_subcommand("sweep", "radius sweep of tangent sphere bundles");
    sweep->add_option("--K", c.K, "base curvature")->required();
    sweep->add_option("--r-min", c.r_min, "smallest radius")->default_val(0.5);
    sweep->add_option("--r-max", c.r_max, "largest radius")->default_val(2.0);
    sweep->add_option("--steps", c.steps, "number of radii")->default_val(31);
    sweep->add_option("--lambda", c.lambda_b, "structure parameter")->default_val(1.0);
    shared(sweep);

    CLI::App* verify = app.add_subcommand("verify", "run the acceptance suite");
    shared(verify);

    CLI::App* spaces = app.add_subcommand("spaces", "list the model spaces of the classification");
    spaces->add_option("--n", c.n, "CR dimension")->default_val(2);
    shared(spaces);

    std::vector<std::string> reversed(args.begin() + (args.empty() ? 0 : 1), args.end());
    std::reverse(reversed.begin(), reversed.end());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    }

    try {
        if (!format.empty()) {
            c.format = parse_format(format);
            if (!c.format) throw InvalidInput("unknown format '" + format + "' (text, json, csv)");
        }
        c.tolerance = tol_flag;
        if (seed_flag) c.seed = *seed_flag;
        apply_environment(c, tol_flag.has_value(), seed_flag.has_value());

        std::ofstream file;
        std::ostream* sink = &out;
        if (!c.out_path.empty()) {
            file.open(c.out_path);
            if (!file) throw InvalidInput("cannot open output file " + c.out_path);
            sink = &file;
        }

        CLI::App* chosen = app.get_subcommands().front();
        c.command = chosen->get_name();
        if (chosen == kmu) return cmd_kmu(c, *sink);
        if (chosen == tsb) return cmd_tsb(c, *sink);
        if (chosen == sweep) return cmd_sweep(c, *sink);
        if (chosen == verify) return cmd_verify(c, *sink);
        return cmd_spaces(c, *sink);
    } catch (const InvalidInput& e) {
        err << "invalid input: " << e.what() << '\n';
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitCheckFailed;
    }
}

}  // namespace phlab::cli
