#include "phlab/verify.hpp"

#include "phlab/bochner.hpp"
#include "phlab/classify.hpp"
#include "phlab/contact_metric.hpp"
#include "phlab/kaehler.hpp"
#include "phlab/symmetry.hpp"
#include "phlab/tanaka_webster.hpp"
#include "phlab/tolerances.hpp"
#include "phlab/tsb.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

namespace phlab {

namespace {

// Collapses per-point reports into one worst-case check per name, in first-seen order.
class WorstCase {
public:
    void record(const std::string& name, double value, double threshold, Check::Sense sense)
    {
        auto it = std::find_if(entries_.begin(), entries_.end(), [&](const Check& c) { return c.name == name; });
        if (it == entries_.end()) {
            entries_.push_back(Check{name, value, threshold, sense, false});
            return;
        }
        if (std::isnan(it->value)) return;
        if (std::isnan(value)) {
            it->value = value;
            return;
        }
        it->value = sense == Check::Sense::AtMost ? std::max(it->value, value) : std::min(it->value, value);
    }
    void at_most(const std::string& name, double value, double threshold)
    {
        record(name, value, threshold, Check::Sense::AtMost);
    }
    void at_least(const std::string& name, double value, double threshold)
    {
        record(name, value, threshold, Check::Sense::AtLeast);
    }
    void require(const std::string& name, bool ok) { at_most(name, ok ? 0.0 : 1.0, 0.0); }
    void add(const CheckReport& r, const std::string& prefix = {})
    {
        for (const Check& c : r.checks()) record(prefix + c.name, c.value, c.threshold, c.sense);
    }
    CheckReport report() const
    {
        CheckReport out;
        for (const Check& c : entries_) {
            if (c.sense == Check::Sense::AtMost)
                out.at_most(c.name, c.value, c.threshold);
            else
                out.at_least(c.name, c.value, c.threshold);
        }
        return out;
    }

private:
    std::vector<Check> entries_;
};

double tol_or(const SuiteOptions& o, double fallback)
{
    return o.tolerance.value_or(fallback);
}

std::mt19937_64 stream(const SuiteOptions& o, int criterion)
{
    std::seed_seq seq{static_cast<std::uint32_t>(o.seed & 0xffffffffu), static_cast<std::uint32_t>(o.seed >> 32),
                      static_cast<std::uint32_t>(criterion)};
    return std::mt19937_64(seq);
}

struct KmuCase {
    KmuParams params;
    std::vector<int> partition;
};

// n in {2,3,4,5}, k in {-3,-1,0,0.5,0.9}, mu in {-1,0,1.5,2,2.5,4}: 120 points.
// Every third point uses a non-default eigenspace partition.
std::vector<KmuCase> kmu_grid()
{
    std::vector<KmuCase> grid;
    int index = 0;
    for (int n : {2, 3, 4, 5})
        for (double k : {-3.0, -1.0, 0.0, 0.5, 0.9})
            for (double mu : {-1.0, 0.0, 1.5, 2.0, 2.5, 4.0}) {
                KmuCase c{KmuParams::make(n, k, mu), {}};
                if (index % 3 == 1) {
                    c.partition.assign(static_cast<std::size_t>(n), 1);
                    for (int i = 0; i < n; i += 2) c.partition[static_cast<std::size_t>(i)] = -1;
                }
                grid.push_back(std::move(c));
                ++index;
            }
    return grid;
}

ContactMetricPoint point_for(const KmuCase& c)
{
    return build_adapted_point(c.params.n, c.params.h_eigenvalue(), c.partition);
}

Vec random_unit_in_D(const ContactMetricPoint& p, std::mt19937_64& rng)
{
    std::normal_distribution<double> normal(0.0, 1.0);
    Vec x(p.dim());
    for (std::size_t i = 0; i < x.dim(); ++i) x[i] = normal(rng);
    x = p.horizontal_projector() * x;
    return (1.0 / p.metric().norm(x)) * x;
}

}  // namespace

CriterionResult criterion_kmu_nullity(const SuiteOptions& o)
{
    const double t = tol_or(o, tol::kSymmetry);
    WorstCase w;
    std::size_t points = 0;
    for (const KmuCase& c : kmu_grid()) {
        const ContactMetricPoint p = point_for(c);
        const Tensor4 r = kmu_curvature(p, c.params);
        w.at_most("(k,mu)-nullity R(X,Y)xi", kmu_nullity_residual(r, p, c.params), t);
        w.at_most("R(X,Y,Z,W) = -R(Y,X,Z,W)", antisymmetry_residual_12(r), t);
        w.at_most("R(X,Y,Z,W) = -R(X,Y,W,Z)", antisymmetry_residual_34(r), t);
        w.at_most("R(X,Y,Z,W) = R(Z,W,X,Y)", pair_symmetry_residual(r), t);
        w.at_most("first Bianchi identity", first_bianchi_residual(r), t);
        w.at_most("h^2 = (1-k)(Id - eta(x)xi)",
                  (p.h * p.h - (1.0 - c.params.k) * p.horizontal_projector()).max_abs(),
                  tol_or(o, tol::kLinearAlgebra));
        w.add(validate_point(p, tol_or(o, tol::kLinearAlgebra)), "point: ");
        ++points;
    }
    w.at_least("grid points", static_cast<double>(points), 100.0);

    // Ric(X,X) = (2(n-1) - n mu) + (2(n-1) + mu) a on unit X in D(+a), n=2, k=-3, mu=2
    {
        const KmuParams kp = KmuParams::make(2, -3.0, 2.0);
        const ContactMetricPoint p = build_adapted_point(2, kp.h_eigenvalue());
        const Bilinear ric = trace_first_slot(kmu_curvature(p, kp), p.g);
        w.at_most("Ric on D(+a) = 6 at (2,-3,2)", std::abs(ric(1, 1) - 6.0), tol_or(o, tol::kDerived));
    }
    return {1, "(k,mu)-nullity reproduction", w.report()};
}

CriterionResult criterion_webster_routes(const SuiteOptions& o)
{
    const double t = tol_or(o, tol::kDerived);
    WorstCase w;
    for (const KmuCase& c : kmu_grid()) {
        const ContactMetricPoint p = point_for(c);
        const Tensor4 r = kmu_curvature(p, c.params);
        const CanonicalCurvature ct = canonical_curvature_D(r, p);
        const double rho_trace = webster_scalar(ricci_s(ct, p.g), p.g);
        const int n = c.params.n;
        const double rho_closed = 2.0 * n * n * (2.0 - c.params.mu);
        const RiemannianScalars rs = riemannian_scalars(r, p);
        const double rho_riem = webster_scalar_via_riemannian(rs.tau, rs.ric_xi_xi, rs.tr_F2, n);
        w.at_most("rho trace = 2n^2(2-mu)", std::abs(rho_trace - rho_closed), t);
        w.at_most("rho trace = tau - 2Ric(xi,xi) - tr F^2 + 6n", std::abs(rho_trace - rho_riem), t);
        w.at_most("Ric(xi,xi) = 2nk", std::abs(rs.ric_xi_xi - 2.0 * n * c.params.k), t);
    }
    return {2, "Webster scalar triple agreement", w.report()};
}

CriterionResult criterion_bochner_kmu(const SuiteOptions& o)
{
    const double t = tol_or(o, tol::kSpherical);
    auto rng = stream(o, 3);
    WorstCase w;
    for (const KmuCase& c : kmu_grid()) {
        const ContactMetricPoint p = point_for(c);
        const CanonicalCurvature ct = canonical_curvature_D(kmu_curvature(p, c.params), p);
        const BochnerPipeline bp = run_bochner_pipeline(ct, p);
        const Tensor4 closed = bochner_kmu_closed(p, c.params);
        const double norm_b = tensor_norm(bp.B);
        w.at_most("closed-form B = B0 + B1", (closed - bp.B).max_abs(), t);
        w.add(validate_canonical(ct, p, tol_or(o, tol::kSymmetry)));

        const double mu = c.params.mu;
        if (mu == 2.0) {
            w.at_most("|B| = 0 when mu = 2", norm_b, t);
            w.at_least("|R~| nonzero when mu = 2", tensor_norm(ct.Rt), tol::kNonzeroFloor);
            double kt = 0.0;
            for (int s = 0; s < 4; ++s) kt = std::max(kt, std::abs(pseudoholomorphic_K(ct, random_unit_in_D(p, rng), p)));
            for (std::size_t i = 1; i < p.dim(); ++i)
                kt = std::max(kt, std::abs(pseudoholomorphic_K(ct, Vec::basis(p.dim(), i), p)));
            w.at_most("K~ = 0 when mu = 2", kt, t);
        } else if (std::abs(mu - 2.0) >= 0.1) {
            w.at_least("|B| nonzero when |mu - 2| >= 0.1", norm_b, tol::kNonzeroFloor);
        }

        // K~(X) = 2(2-mu) - ((2-mu)/(1-k))(g(hX,X)^2 + g(h phi X,X)^2)
        const Vec x = random_unit_in_D(p, rng);
        const double hxx = p.g.eval(p.h * x, x);
        const double hpxx = p.g.eval(p.h * (p.phi * x), x);
        const double expected = 2.0 * (2.0 - mu) - (2.0 - mu) / (1.0 - c.params.k) * (hxx * hxx + hpxx * hpxx);
        w.at_most("K~ closed form", std::abs(pseudoholomorphic_K(ct, x, p) - expected), tol_or(o, tol::kDerived));
    }
    return {3, "B = 0 exactly when mu = 2", w.report()};
}

CriterionResult criterion_space_forms(const SuiteOptions& o)
{
    const double t = tol_or(o, tol::kSpherical);
    auto rng = stream(o, 4);
    WorstCase w;
    for (double c : {-2.0, 0.0, 1.0, 4.0})
        for (int n : {2, 3})
            for (int sample = 0; sample < 3; ++sample) {
                const std::size_t d = static_cast<std::size_t>(2 * n + 1);
                const LinOp h = sample == 0 ? LinOp(d) : random_admissible_h(n, rng, 0.5);
                const ContactMetricPoint p = adapted_point_with_h(n, h);
                w.add(validate_point(p, tol_or(o, tol::kLinearAlgebra)), "point: ");
                const CanonicalCurvature ct = space_form_canonical(p, c);
                w.add(validate_canonical(ct, p, tol_or(o, tol::kSymmetry)));
                const BochnerPipeline bp = run_bochner_pipeline(ct, p);
                w.at_most("|B| = 0 on space forms", tensor_norm(bp.B), t);
                w.at_most("rho = cn(n+1)", std::abs(bp.rho - c * n * (n + 1.0)), tol_or(o, tol::kDerived));
                w.at_most("K~ = c", std::abs(pseudoholomorphic_K(ct, random_unit_in_D(p, rng), p) - c),
                          tol_or(o, tol::kDerived));
            }
    return {4, "pseudohermitian space forms are spherical", w.report()};
}

CriterionResult criterion_symmetry(const SuiteOptions& o)
{
    const double t = tol_or(o, tol::kSymmetry);
    WorstCase w;
    for (const KmuCase& c : kmu_grid()) {
        const ContactMetricPoint p = point_for(c);
        const Tensor4 r = kmu_curvature(p, c.params);
        const HomogeneousStructure ts = build_T(p, c.params.mu);
        w.add(check_L_preserves(symmetry_linearization(p), r, ts, p.g, t));
    }
    return {5, "symmetry L = -Id + 2 eta(x)xi preserves R and T", w.report()};
}

CriterionResult criterion_tangent_sphere_bundles(const SuiteOptions& o)
{
    const double t_exact = tol_or(o, tol::kPredicate);
    const double t_derived = tol_or(o, tol::kDerived);
    auto rng = stream(o, 6);
    WorstCase w;
    int index = 0;
    for (int m : {3, 4, 5})
        for (double K : {-2.0, -1.0, 0.0, 0.25, 1.0})
            for (double r : {0.5, 1.0, 2.0})
                for (double lam : {0.5, 1.0, 2.0}) {
                    const TsbParams params = TsbParams::make(m, K, r, lam);
                    const TsbDerived dv = tsb_derived(params);
                    const TsbPredicates pr = tsb_predicates(params);
                    const double lam2 = lam * lam, kr2 = K * r * r;

                    std::optional<LinOp> rotation;
                    if (index++ % 5 == 0) rotation = random_rotation(static_cast<std::size_t>(m), rng);
                    const TsbConstruction tc = tsb_construct(params, rotation);
                    const ContactMetricPoint& p = tc.adapted;
                    w.add(validate_point(tc.lift_basis, tol_or(o, tol::kLinearAlgebra)), "lift basis: ");
                    w.add(validate_point(p, tol_or(o, tol::kLinearAlgebra)), "adapted: ");
                    w.at_most("Levi form horizontal block", tc.levi.horizontal_residual, t_exact);
                    w.at_most("Levi form vertical block", tc.levi.vertical_residual, t_exact);
                    w.at_most("Levi form cross block", tc.levi.cross_residual, t_exact);

                    // h spectrum: -s on horizontal lifts, 0 on xi, +s on vertical lifts
                    const EigenDecomposition eig = sym_eigen(p.h, p.g);
                    double spec = 0.0;
                    const std::size_t n = static_cast<std::size_t>(dv.n);
                    for (std::size_t i = 0; i < eig.values.size(); ++i) {
                        const double want = i < n ? dv.a : (i == n ? 0.0 : -dv.a);
                        spec = std::max(spec, std::abs(eig.values[i] - want));
                    }
                    w.at_most("h spectrum {a, 0, -a}", spec, t_exact);

                    const bool h_zero = p.h.max_abs() <= tol::kPredicate;
                    w.require("sasakian <=> |lambda^2 - K r^2| <= 1e-12",
                              pr.sasakian == (std::abs(lam2 - kr2) / lam2 <= tol::kPredicate));
                    w.require("sasakian <=> h = 0 on the constructed point", pr.sasakian == h_zero);
                    w.require("spherical <=> |lambda^2 + K r^2| <= 1e-12",
                              pr.spherical == (std::abs(lam2 + kr2) / lam2 <= tol::kPredicate));

                    const RhoRoutes routes = tsb_webster_scalar_3routes(params, std::numeric_limits<double>::infinity());
                    w.at_most("rho three-route agreement", routes.max_disagreement(), t_derived);

                    if (!dv.sasakian) {
                        const KmuParams kp = KmuParams::make(dv.n, dv.k, *dv.mu);
                        w.at_most("I = (1-mu/2)/sqrt(1-k) = (lambda^2+Kr^2)/|lambda^2-Kr^2|",
                                  std::abs(kp.boeckx_invariant() - *dv.I), t_exact);
                        const BochnerPipeline bp =
                            run_bochner_pipeline(canonical_curvature_D(kmu_curvature(p, kp), p), p);
                        const bool flat = is_spherical(bp.B, tol_or(o, tol::kSpherical));
                        w.require("spherical <=> |B| = 0 on the constructed point", flat == pr.spherical);
                        if (!pr.spherical) w.at_least("|B| on non-spherical bundles", tensor_norm(bp.B), tol::kNonzeroFloor);
                        w.at_most("pipeline rho on lift basis = closed rho",
                                  std::abs(webster_scalar(ricci_s(canonical_curvature_D(
                                                                      kmu_curvature(tc.lift_basis, kp), tc.lift_basis),
                                                                  tc.lift_basis.g),
                                                          tc.lift_basis.g) -
                                           routes.closed),
                                  t_derived);
                    }
                    if (r == 1.0 && lam == 1.0)
                        w.at_most("unit bundle k = K(2-K), mu = -2K",
                                  std::max(std::abs(dv.k - K * (2.0 - K)), dv.mu ? std::abs(*dv.mu + 2.0 * K) : 0.0),
                                  t_exact);
                }

    const TsbParams anchor = TsbParams::make(4, -1.0, 1.0, 1.0);
    const TsbDerived dv = tsb_derived(anchor);
    w.at_most("anchor (m=4,K=-1,r=1,lambda=1): k = -3", std::abs(dv.k + 3.0), t_exact);
    w.at_most("anchor: mu = 2", dv.mu ? std::abs(*dv.mu - 2.0) : 1.0, t_exact);
    w.at_most("anchor: I = 0", dv.I ? std::abs(*dv.I) : 1.0, t_exact);
    const ClassificationReport cr = classify_tsb(anchor);
    w.require("anchor: label T1H^{n+1} with n = 3", cr.label == ModelLabel::T1H && cr.n == 3);
    return {6, "tangent sphere bundles: spherical, Sasakian, I and rho", w.report()};
}

CriterionResult criterion_radius_sweeps(const SuiteOptions& o)
{
    const double t = tol_or(o, tol::kPredicate);
    WorstCase w;
    const std::vector<double> radii = radius_grid(0.5, 2.0, 31);

    auto flagged_radius = [](const SweepReport& s, bool spherical) {
        for (const SweepRow& row : s.rows)
            if (spherical ? row.spherical : row.sasakian) return row.r;
        return std::nan("");
    };

    const SweepReport neg = corollary_sweep(-1.0, radii);
    w.at_most("K = -1: exactly one spherical radius", std::abs(double(neg.flagged_rows) - 1.0), 0.0);
    w.at_most("K = -1: spherical radius r_o = 1", std::abs(flagged_radius(neg, true) - 1.0), t);
    w.at_most("K = -1: K = -1/r_o^2", std::abs(-1.0 + 1.0 / (*neg.special_radius * *neg.special_radius)), t);

    const SweepReport pos = corollary_sweep(1.0, radii);
    w.at_most("K = 1: exactly one Sasakian radius", std::abs(double(pos.flagged_rows) - 1.0), 0.0);
    w.at_most("K = 1: Sasakian radius r_o = 1", std::abs(flagged_radius(pos, false) - 1.0), t);

    const SweepReport flat = corollary_sweep(0.0, radii);
    w.require("K = 0: I = 1 at every radius", flat.constant_unit_I);
    std::size_t flags = 0;
    for (const SweepRow& row : flat.rows) flags += row.spherical || row.sasakian;
    w.at_most("K = 0: no flagged radius", double(flags), 0.0);

    const SweepReport k4 = corollary_sweep(-4.0, radius_grid(0.25, 1.0, 16));
    w.at_most("K = -4: spherical radius 0.5", std::abs(flagged_radius(k4, true) - 0.5), t);
    const SweepReport kq = corollary_sweep(0.25, radius_grid(1.0, 3.0, 21));
    w.at_most("K = 0.25: Sasakian radius 2", std::abs(flagged_radius(kq, false) - 2.0), t);
    return {7, "unique special radius", w.report()};
}

CriterionResult criterion_kaehler_base(const SuiteOptions& o)
{
    const double t = tol_or(o, tol::kSpherical);
    const double ts = tol_or(o, tol::kSymmetry);
    WorstCase w;
    for (double c : {0.5, 1.0, 2.0})
        for (int p : {1, 2}) {
            const KaehlerPoint flat = product_space_form_curvature(p, 1, c, -c);
            const Tensor4 bf = kaehler_bochner(flat);
            w.at_most("|B_N| = 0 on CP^p(c) x CH^1(-c)", tensor_norm(bf), t);
            w.add(validate_kaehler(flat, ts));
            w.add(validate_kaehler_bochner(bf, flat, ts));

            const KaehlerPoint same = product_space_form_curvature(p, 1, c, c);
            const Tensor4 bs = kaehler_bochner(same);
            w.at_least("|B_N| nonzero on same-sign products", tensor_norm(bs), tol::kNonzeroFloor);
            w.add(validate_kaehler_bochner(bs, same, ts));

            const std::size_t d = flat.dim();
            const std::size_t d1 = static_cast<std::size_t>(2 * p);
            w.at_most("holomorphic curvature c1 on factor 1",
                      std::abs(holomorphic_sectional_curvature(flat, Vec::basis(d, 0)) - c), ts);
            w.at_most("holomorphic curvature c2 on factor 2",
                      std::abs(holomorphic_sectional_curvature(flat, Vec::basis(d, d1)) + c), ts);
            w.at_most("mixed sectional curvature 0",
                      std::abs(sectional_curvature(flat, Vec::basis(d, 0), Vec::basis(d, d1))), ts);
        }
    const KaehlerPoint single = product_space_form_curvature(2, 0, 3.0, 0.0);
    w.at_most("|B_N| = 0 on a single space form", tensor_norm(kaehler_bochner(single)), t);
    return {8, "Kaehler base CP^k(c) x CH^(n-k)(-c) is Bochner-flat", w.report()};
}

CriterionResult criterion_classifier(const SuiteOptions& o)
{
    WorstCase w;
    const double t = tol_or(o, tol::kDerived);

    bool all_t1h = true;
    for (int n : {2, 3, 4, 5})
        for (double k : {-3.0, -1.0, 0.0, 0.5, 0.9}) all_t1h = all_t1h && classify_kmu(n, k, 2.0).label == ModelLabel::T1H;
    w.require("classify_kmu(mu = 2) = T1H^{n+1}", all_t1h);

    // equal I: mu' = 2 - 2 I sqrt(1 - k')
    bool shared = true, separated = true;
    for (double I : {-2.0, -0.6, 0.5, 1.0, 3.0}) {
        const ClassificationReport base = classify_kmu(3, 0.0, 2.0 - 2.0 * I);
        for (double k2 : {-3.0, -1.0, 0.5, 0.9}) {
            const ClassificationReport other = classify_kmu(3, k2, 2.0 - 2.0 * I * std::sqrt(1.0 - k2));
            shared = shared && base.same_class(other, t);
            const ClassificationReport off = classify_kmu(3, k2, 2.0 - 2.0 * (I + 0.25) * std::sqrt(1.0 - k2));
            separated = separated && !base.same_class(off, t);
        }
    }
    w.require("equal I share a class label", shared);
    w.require("different I get different classes", separated);
    w.require("classify_kmu(2, 1, mu) = SasakianUndetermined",
              classify_kmu(2, 1.0, 0.3).label == ModelLabel::SasakianUndetermined);
    {
        const ClassificationReport r = classify_kmu(2, 0.0, 0.0);
        w.require("classify_kmu(2, 0, 0) = NonSasakianKmuClass(I=1)",
                  r.label == ModelLabel::NonSasakianKmuClass && r.I && std::abs(*r.I - 1.0) <= t);
    }
    w.require("K~ = 4 -> sphere", classify_sasakian_by_Ktilde(2, 4.0).label == ModelLabel::Sphere);
    w.require("K~ = 0 -> Heisenberg", classify_sasakian_by_Ktilde(2, 0.0).label == ModelLabel::Heisenberg);
    w.require("phi-sectional -4 -> B^n x R",
              classify_sasakian_by_Ktilde(2, ktilde_from_phi_sectional(-4.0)).label == ModelLabel::BnxR);

    // T1H label <=> spherical B on constructed bundles
    bool agree = true;
    for (int m : {3, 4})
        for (double K : {-2.0, -1.0, 0.0, 0.25})
            for (double r : {0.5, 1.0, 2.0}) {
                const TsbParams params = TsbParams::make(m, K, r, 1.0);
                const ClassificationReport cr = classify_tsb(params);
                const TsbDerived dv = tsb_derived(params);
                if (dv.sasakian) continue;
                const ContactMetricPoint p = tsb_contact_point(params);
                const KmuParams kp = KmuParams::make(dv.n, dv.k, *dv.mu);
                const BochnerPipeline bp = run_bochner_pipeline(canonical_curvature_D(kmu_curvature(p, kp), p), p);
                agree = agree && ((cr.label == ModelLabel::T1H) == is_spherical(bp.B));
            }
    w.require("label T1H <=> B = 0 on bundles", agree);
    w.require("classify_tsb(3, 0, 2, 1) = NonSasakianKmuClass(I=1)", [] {
        const ClassificationReport r = classify_tsb(TsbParams::make(3, 0.0, 2.0, 1.0));
        return r.label == ModelLabel::NonSasakianKmuClass && r.I && std::abs(*r.I - 1.0) <= tol::kPredicate;
    }());
    w.require("classify_tsb(3, 1, 1, 1) = SasakianUndetermined",
              classify_tsb(TsbParams::make(3, 1.0, 1.0, 1.0)).label == ModelLabel::SasakianUndetermined);

    const std::vector<TheoremSpace> spaces = main_theorem_spaces(4);
    const auto pnk = std::count_if(spaces.begin(), spaces.end(),
                                   [](const TheoremSpace& s) { return s.label == ModelLabel::Pnk; });
    w.at_most("P^n_k listed for k = 1..n-1", std::abs(double(pnk) - 3.0), 0.0);
    return {9, "classifier soundness", w.report()};
}

std::vector<CriterionResult> run_acceptance_suite(const SuiteOptions& options)
{
    std::vector<CriterionResult> out;
    out.push_back(criterion_kmu_nullity(options));
    out.push_back(criterion_webster_routes(options));
    out.push_back(criterion_bochner_kmu(options));
    out.push_back(criterion_space_forms(options));
    out.push_back(criterion_symmetry(options));
    out.push_back(criterion_tangent_sphere_bundles(options));
    out.push_back(criterion_radius_sweeps(options));
    out.push_back(criterion_kaehler_base(options));
    CriterionResult nine = criterion_classifier(options);
    nine.report.require("verify: criteria 1-8 pass", all_passed(out));
    out.push_back(std::move(nine));
    return out;
}

std::size_t total_checks(const std::vector<CriterionResult>& results)
{
    std::size_t n = 0;
    for (const CriterionResult& r : results) n += r.report.size();
    return n;
}

bool all_passed(const std::vector<CriterionResult>& results)
{
    return std::all_of(results.begin(), results.end(), [](const CriterionResult& r) { return r.passed(); });
}

}  // namespace phlab
