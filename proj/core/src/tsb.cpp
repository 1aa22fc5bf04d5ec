#include "phlab/tsb.hpp"

#include "phlab/errors.hpp"
#include "phlab/tanaka_webster.hpp"
#include "phlab/tolerances.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace phlab {

TsbParams TsbParams::make(int m, double K, double r, double lambda_b)
{
    if (m < 3) throw InvalidInput("tangent sphere bundle needs base dimension m >= 3, got " + std::to_string(m));
    if (!std::isfinite(K) || !std::isfinite(r) || !std::isfinite(lambda_b))
        throw InvalidInput("tangent sphere bundle parameters must be finite");
    if (!(r > 0.0)) throw InvalidInput("radius must be positive");
    if (!(lambda_b > 0.0)) throw InvalidInput("lambda must be positive");
    return TsbParams{m, K, r, lambda_b};
}

namespace {

// Tangent vectors of TM at t = (x, u) are pairs (X, Y) in R^m x R^m,
// stored as one vector of length 2m: horizontal part first.
struct Ambient {
    std::size_t m;
    double r, lambda, s;
    Vec u;

    Vec hor(std::span<const double> x) const
    {
        Vec v(2 * m);
        for (std::size_t i = 0; i < m; ++i) v[i] = x[i];
        return v;
    }
    Vec ver(std::span<const double> y) const
    {
        Vec v(2 * m);
        for (std::size_t i = 0; i < m; ++i) v[m + i] = y[i];
        return v;
    }
    Vec x_part(const Vec& v) const
    {
        Vec x(m);
        for (std::size_t i = 0; i < m; ++i) x[i] = v[i];
        return x;
    }
    Vec y_part(const Vec& v) const
    {
        Vec y(m);
        for (std::size_t i = 0; i < m; ++i) y[i] = v[m + i];
        return y;
    }
    Vec perp(const Vec& x) const { return x - (x.dot(u) / (r * r)) * u; }

    // G = (1/4r^2) g^S + ((lambda^2 - 1)/4r^2) g^v
    double G(const Vec& a, const Vec& b) const
    {
        const Vec xa = x_part(a), xb = x_part(b);
        const double gs = a.dot(b);
        const double gv = xa.dot(xb);
        return gs / (4.0 * r * r) + (lambda * lambda - 1.0) / (4.0 * r * r) * gv;
    }
    // phi(X^H + Y^V) = J(X_perp^H + Y^V) = -(1/lambda) Y^H + lambda X_perp^V
    Vec phi(const Vec& v) const
    {
        const Vec x = perp(x_part(v)), y = y_part(v);
        return hor((-1.0 / lambda * y).components()) + ver((lambda * x).components());
    }
    Vec h(const Vec& v) const
    {
        const Vec x = perp(x_part(v)), y = y_part(v);
        return hor((-s * x).components()) + ver((s * y).components());
    }
};

}  // namespace

TsbConstruction tsb_construct(const TsbParams& params, const std::optional<LinOp>& base_frame)
{
    const TsbParams& q = params;
    TsbParams::make(q.m, q.K, q.r, q.lambda_b);
    const std::size_t m = static_cast<std::size_t>(q.m);
    const int n = q.m - 1;
    const std::size_t d = 2 * m - 1;

    LinOp frame = base_frame ? *base_frame : LinOp::identity(m);
    if (frame.dim() != m) throw InvalidInput("base frame must be m x m");
    if ((frame.transposed() * frame - LinOp::identity(m)).max_abs() > tol::kSymmetry)
        throw InvalidInput("base frame must be orthogonal");
    auto column = [&](std::size_t j) {
        Vec c(m);
        for (std::size_t i = 0; i < m; ++i) c[i] = frame(i, j);
        return c;
    };

    const double lam = q.lambda_b;
    const double s = (lam * lam - q.K * q.r * q.r) / (lam * lam);
    Ambient amb{m, q.r, lam, s, q.r * column(0)};

    // raw lift basis, mutually orthogonal in R^{2m} and G-orthogonal
    std::vector<Vec> basis;
    basis.push_back((2.0 / lam) * amb.hor(amb.u.components()));
    for (std::size_t i = 1; i < m; ++i) basis.push_back(amb.hor(column(i).components()));
    for (std::size_t i = 1; i < m; ++i) basis.push_back(amb.ver(column(i).components()));

    auto coords = [&](const Vec& v) {
        Vec c(d);
        for (std::size_t j = 0; j < d; ++j) c[j] = basis[j].dot(v) / basis[j].dot(basis[j]);
        return c;
    };
    auto matrix_of = [&](auto&& op) {
        LinOp a(d);
        for (std::size_t j = 0; j < d; ++j) {
            const Vec c = coords(op(basis[j]));
            for (std::size_t i = 0; i < d; ++i) a(i, j) = c[i];
        }
        return a;
    };

    ContactMetricPoint raw;
    raw.n = n;
    raw.g = Bilinear(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) raw.g(i, j) = amb.G(basis[i], basis[j]);
    raw.xi = Vec::basis(d, 0);
    raw.eta = Vec::basis(d, 0);  // eta(xi) = 1, eta vanishes on lifts orthogonal to u
    raw.phi = matrix_of([&](const Vec& v) { return amb.phi(v); });
    raw.h = matrix_of([&](const Vec& v) { return amb.h(v); });

    // Levi form dEta(Z, W) = g(Z, phi W) evaluated as dEta(phi X, Y)
    LeviFormBlocks levi;
    levi.horizontal = lam * lam / (4.0 * q.r * q.r);
    levi.vertical = 1.0 / (4.0 * q.r * q.r);
    const std::size_t nn = static_cast<std::size_t>(n);
    auto deta = [&](std::size_t i, std::size_t j) {
        const Vec jx = raw.phi * Vec::basis(d, i);
        return raw.g.eval(jx, raw.phi * Vec::basis(d, j));
    };
    for (std::size_t i = 1; i <= nn; ++i)
        for (std::size_t j = 1; j <= nn; ++j) {
            const double delta = i == j ? 1.0 : 0.0;
            levi.horizontal_residual =
                std::max(levi.horizontal_residual, std::abs(deta(i, j) - levi.horizontal * delta));
            levi.vertical_residual =
                std::max(levi.vertical_residual, std::abs(deta(nn + i, nn + j) - levi.vertical * delta));
            levi.cross_residual = std::max(levi.cross_residual, std::abs(deta(i, nn + j)));
            levi.cross_residual = std::max(levi.cross_residual, std::abs(deta(nn + i, j)));
        }

    const Metric g(raw.g);
    const std::vector<Vec> onb = g.orthonormal_frame();
    LinOp change(d);
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t i = 0; i < d; ++i) change(i, j) = onb[j][i];
    // P^{-1} = P^T G for a g-orthonormal P
    LinOp inverse(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            double acc = 0.0;
            for (std::size_t k = 0; k < d; ++k) acc += change(k, i) * raw.g(k, j);
            inverse(i, j) = acc;
        }

    ContactMetricPoint adapted;
    adapted.n = n;
    adapted.g = Bilinear(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) adapted.g(i, j) = raw.g.eval(onb[i], onb[j]);
    adapted.xi = inverse * raw.xi;
    adapted.eta = Vec(d);
    for (std::size_t j = 0; j < d; ++j) adapted.eta[j] = raw.eta.dot(onb[j]);
    adapted.phi = inverse * raw.phi * change;
    adapted.h = inverse * raw.h * change;

    return TsbConstruction{std::move(raw), std::move(adapted), std::move(change), levi};
}

ContactMetricPoint tsb_contact_point(const TsbParams& params)
{
    return tsb_construct(params).adapted;
}

TsbDerived tsb_derived(const TsbParams& params)
{
    TsbParams::make(params.m, params.K, params.r, params.lambda_b);
    const double lam2 = params.lambda_b * params.lambda_b;
    const double kr2 = params.K * params.r * params.r;
    const double q = kr2 / lam2;
    const double n = params.m - 1;

    TsbDerived out;
    out.n = params.m - 1;
    out.signed_eigenvalue = (lam2 - kr2) / lam2;
    out.a = std::abs(out.signed_eigenvalue);
    out.sasakian = out.a <= tol::kPredicate;
    out.k = out.sasakian ? 1.0 : 1.0 - out.a * out.a;
    if (!out.sasakian) {
        out.mu = -2.0 * q;
        out.I = (lam2 + kr2) / std::abs(lam2 - kr2);
    }
    out.rho = 4.0 * n * n * (1.0 + q);
    out.tau_base = 4.0 * n * (n + 1.0) * q;
    out.tau_fiber = 4.0 * n * (n - 1.0);
    out.normA2 = 2.0 * n * q * q;
    out.tau = out.tau_base + out.tau_fiber - out.normA2;
    return out;
}

double RhoRoutes::max_disagreement() const
{
    double m = std::abs(closed - oneill);
    if (pipeline) {
        m = std::max(m, std::abs(closed - *pipeline));
        m = std::max(m, std::abs(oneill - *pipeline));
    }
    return m;
}

RhoRoutes tsb_webster_scalar_3routes(const TsbParams& params, double tolerance)
{
    const TsbDerived dv = tsb_derived(params);
    const TsbConstruction c = tsb_construct(params);
    const ContactMetricPoint& p = c.adapted;

    RhoRoutes routes;
    routes.closed = dv.rho;

    const LinOp f = p.torsion_F();
    const double tr_f2 = (f * f).trace();
    const double ric_xi_xi = 2.0 * dv.n * dv.k;
    routes.oneill = webster_scalar_via_riemannian(dv.tau, ric_xi_xi, tr_f2, dv.n);

    if (!dv.sasakian) {
        const KmuParams kp = KmuParams::make(dv.n, dv.k, *dv.mu);
        const CanonicalCurvature ct = canonical_curvature_D(kmu_curvature(p, kp), p);
        routes.pipeline = webster_scalar(ricci_s(ct, p.g), p.g);
    }

    const double gap = routes.max_disagreement();
    if (!(gap <= tolerance))
        throw RouteMismatch("Webster scalar routes disagree by " + std::to_string(gap));
    return routes;
}

TsbPredicates tsb_predicates(const TsbParams& params, double tolerance)
{
    TsbParams::make(params.m, params.K, params.r, params.lambda_b);
    const double lam2 = params.lambda_b * params.lambda_b;
    const double kr2 = params.K * params.r * params.r;
    return TsbPredicates{std::abs(lam2 + kr2) / lam2 <= tolerance, std::abs(lam2 - kr2) / lam2 <= tolerance};
}

SweepReport corollary_sweep(double K, std::span<const double> radii, double lambda_b)
{
    SweepReport report;
    report.K = K;
    report.lambda_b = lambda_b;
    if (K < 0.0) {
        report.special = SweepReport::Special::Spherical;
        report.special_radius = lambda_b / std::sqrt(-K);
    } else if (K > 0.0) {
        report.special = SweepReport::Special::Sasakian;
        report.special_radius = lambda_b / std::sqrt(K);
    }

    bool unit_I = true;
    for (double r : radii) {
        const TsbParams params = TsbParams::make(3, K, r, lambda_b);
        const TsbDerived dv = tsb_derived(params);
        const TsbPredicates pr = tsb_predicates(params);
        SweepRow row{r, lambda_b, dv.k, dv.mu, dv.I, dv.rho, pr.spherical, pr.sasakian};
        if ((K < 0.0 && row.spherical) || (K > 0.0 && row.sasakian)) ++report.flagged_rows;
        if (!row.I || std::abs(*row.I - 1.0) > tol::kPredicate) unit_I = false;
        report.rows.push_back(std::move(row));
    }
    report.constant_unit_I = K == 0.0 && !report.rows.empty() && unit_I;
    return report;
}

std::vector<double> radius_grid(double r_min, double r_max, int steps)
{
    if (!std::isfinite(r_min) || !std::isfinite(r_max) || !(r_min > 0.0))
        throw InvalidInput("radius range must be finite and positive");
    if (r_max < r_min || steps < 1) throw InvalidInput("empty radius range");
    if (steps == 1) {
        if (r_max != r_min) throw InvalidInput("a single step needs r_min = r_max");
        return {r_min};
    }
    std::vector<double> radii(static_cast<std::size_t>(steps));
    const double step = (r_max - r_min) / (steps - 1);
    for (int i = 0; i < steps; ++i) radii[static_cast<std::size_t>(i)] = r_min + step * i;
    radii.back() = r_max;
    return radii;
}

LinOp random_rotation(std::size_t m, std::mt19937_64& rng)
{
    std::normal_distribution<double> normal(0.0, 1.0);
    Bilinear sample(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) sample(i, j) = normal(rng);

    std::vector<Vec> cols;
    for (std::size_t j = 0; j < m; ++j) {
        Vec v(m);
        for (std::size_t i = 0; i < m; ++i) v[i] = sample(i, j);
        for (const Vec& c : cols) v -= v.dot(c) * c;
        v *= 1.0 / std::sqrt(v.dot(v));
        cols.push_back(std::move(v));
    }
    LinOp q(m);
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t i = 0; i < m; ++i) q(i, j) = cols[j][i];
    return q;
}

}  // namespace phlab
