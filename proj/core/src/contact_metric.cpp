#include "phlab/contact_metric.hpp"

#include "phlab/errors.hpp"
#include "phlab/tolerances.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace phlab {

KmuParams KmuParams::make(int n, double k, double mu)
{
    if (n < 2) throw InvalidInput("CR dimension n must be >= 2, got " + std::to_string(n));
    if (!std::isfinite(k) || !std::isfinite(mu)) throw InvalidInput("k and mu must be finite");
    if (k > 1.0) throw InvalidInput("k must satisfy k <= 1 (h^2 = (k-1) phi^2)");
    return KmuParams{n, k, mu};
}

double KmuParams::h_eigenvalue() const
{
    return std::sqrt(std::max(0.0, 1.0 - k));
}

double KmuParams::boeckx_invariant() const
{
    if (!(k < 1.0)) throw InvalidInput("Boeckx invariant is undefined for Sasakian k = 1");
    return (1.0 - mu / 2.0) / std::sqrt(1.0 - k);
}

namespace {

LinOp canonical_phi(int n)
{
    const std::size_t d = static_cast<std::size_t>(2 * n + 1);
    LinOp phi(d);
    for (int i = 0; i < n; ++i) {
        const std::size_t e = 1 + i;
        const std::size_t fe = 1 + n + i;
        phi(fe, e) = 1.0;   // phi e_i = phi e_i
        phi(e, fe) = -1.0;  // phi (phi e_i) = -e_i
    }
    return phi;
}

}  // namespace

ContactMetricPoint adapted_point_with_h(int n, const LinOp& h)
{
    if (n < 2) throw InvalidInput("CR dimension n must be >= 2, got " + std::to_string(n));
    const std::size_t d = static_cast<std::size_t>(2 * n + 1);
    if (h.dim() != d) throw InvalidInput("h has the wrong dimension");
    ContactMetricPoint p;
    p.n = n;
    p.g = Bilinear::identity(d);
    p.xi = Vec::basis(d, 0);
    p.eta = Vec::basis(d, 0);
    p.phi = canonical_phi(n);
    p.h = h;
    return p;
}

ContactMetricPoint build_adapted_point(int n, double a, std::span<const int> partition)
{
    if (n < 2) throw InvalidInput("CR dimension n must be >= 2, got " + std::to_string(n));
    if (!(a >= 0.0)) throw InvalidInput("h-eigenvalue a must be >= 0");
    if (!partition.empty() && partition.size() != static_cast<std::size_t>(n))
        throw InvalidInput("partition must have one flag per holomorphic pair");
    const std::size_t d = static_cast<std::size_t>(2 * n + 1);
    LinOp h(d);
    for (int i = 0; i < n; ++i) {
        double sign = 1.0;
        if (!partition.empty()) {
            if (partition[i] != 1 && partition[i] != -1)
                throw InvalidInput("partition flags must be +1 or -1");
            sign = partition[i];
        }
        h(1 + i, 1 + i) = sign * a;
        h(1 + n + i, 1 + n + i) = -sign * a;
    }
    return adapted_point_with_h(n, h);
}

LinOp random_admissible_h(int n, std::mt19937_64& rng, double scale)
{
    // In the basis {xi, e, phi e}, h = [[0,0,0],[0,A,B],[0,B,-A]] with A, B
    // symmetric anticommutes with phi = [[0,0,0],[0,0,-I],[0,I,0]].
    std::normal_distribution<double> normal(0.0, scale);
    const std::size_t d = static_cast<std::size_t>(2 * n + 1);
    LinOp h(d);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            const double a = normal(rng);
            const double b = normal(rng);
            h(1 + i, 1 + j) = h(1 + j, 1 + i) = a;
            h(1 + n + i, 1 + n + j) = h(1 + n + j, 1 + n + i) = -a;
            h(1 + i, 1 + n + j) = h(1 + n + j, 1 + i) = b;
            h(1 + j, 1 + n + i) = h(1 + n + i, 1 + j) = b;
        }
    return h;
}

Tensor4 kmu_curvature(const ContactMetricPoint& p, const KmuParams& params)
{
    if (!(params.k < 1.0))
        throw InvalidInput("the explicit (k,mu) curvature needs k < 1; Sasakian models use the space-form route");
    if (params.n != p.n) throw InvalidInput("KmuParams.n does not match the point");

    const double one_minus_k = 1.0 - params.k;
    {
        const LinOp h2 = p.h * p.h;
        const LinOp expected = one_minus_k * p.horizontal_projector();
        const double residual = (h2 - expected).max_abs();
        if (residual > tol::kSymmetry)
            throw PreconditionError("h-eigenvalue does not match sqrt(1-k); residual " +
                                    std::to_string(residual));
    }

    const Metric g = p.metric();
    const LinOp& phi = p.phi;
    const LinOp& h = p.h;
    const LinOp phih = phi * h;
    const double mu = params.mu;
    const double k = params.k;
    const double c1 = 1.0 - mu / 2.0;
    const double c_hh = c1 / one_minus_k;
    const double c_phph = (k - mu / 2.0) / one_minus_k;
    const double q = k - 1.0 + mu / 2.0;
    const Vec& xi = p.xi;
    auto eta = [&](const Vec& v) { return p.eta.dot(v); };

    return assemble_tensor(g, [&](const Vec& x, const Vec& y, const Vec& z) {
        const Vec hx = h * x, hy = h * y;
        const Vec px = phi * x, py = phi * y, pz = phi * z;
        const Vec phx = phih * x, phy = phih * y;
        const double gyz = g.inner(y, z), gxz = g.inner(x, z);
        const double ghyz = g.inner(hy, z), ghxz = g.inner(hx, z);

        Vec r = c1 * (gyz * x - gxz * y);
        r += gyz * hx - gxz * hy + ghyz * x - ghxz * y;
        r += c_hh * (ghyz * hx - ghxz * hy);
        r += (-mu / 2.0) * (g.inner(py, z) * px - g.inner(px, z) * py);
        r += (mu * g.inner(px, y)) * pz;
        r += c_phph * (g.inner(phy, z) * phx - g.inner(phx, z) * phy);
        r += (eta(x) * (q * gyz + (mu - 1.0) * ghyz)) * xi;
        r -= (eta(y) * (q * gxz + (mu - 1.0) * ghxz)) * xi;
        r -= (eta(x) * eta(z)) * (q * y + (mu - 1.0) * hy);
        r += (eta(y) * eta(z)) * (q * x + (mu - 1.0) * hx);
        return r;
    });
}

double kmu_nullity_residual(const Tensor4& r, const ContactMetricPoint& p, const KmuParams& params)
{
    const std::size_t d = p.dim();
    const Metric g = p.metric();
    double m = 0.0;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const Vec x = Vec::basis(d, i), y = Vec::basis(d, j);
            const double ex = p.eta.dot(x), ey = p.eta.dot(y);
            Vec expected = params.k * (ey * x - ex * y);
            expected += params.mu * (ey * (p.h * x) - ex * (p.h * y));
            m = std::max(m, (r.vector_value(x, y, p.xi, g) - expected).max_abs());
        }
    return m;
}

Tensor4 space_form_canonical_curvature(const ContactMetricPoint& p, double c)
{
    const Metric g = p.metric();
    const LinOp& phi = p.phi;
    const LinOp& h = p.h;
    const LinOp phih = phi * h;
    const LinOp proj = p.horizontal_projector();

    return assemble_tensor(g, [&](const Vec& x0, const Vec& y0, const Vec& z0) {
        const Vec x = proj * x0, y = proj * y0, z = proj * z0;
        const Vec px = phi * x, py = phi * y, pz = phi * z;
        const Vec hx = h * x, hy = h * y;
        const Vec phx = phih * x, phy = phih * y;
        const double gyz = g.inner(y, z), gxz = g.inner(x, z);
        const double gpyz = g.inner(py, z), gpxz = g.inner(px, z);

        Vec r = (c / 4.0) * (gyz * x - gxz * y + gpyz * px - gpxz * py + (2.0 * g.inner(x, py)) * pz);
        r += g.inner(hy, z) * x - g.inner(hx, z) * y + g.inner(phy, z) * px - g.inner(phx, z) * py;
        r += gyz * hx - gxz * hy + gpyz * phx - gpxz * phy;
        return proj * r;
    });
}

CheckReport validate_point(const ContactMetricPoint& p, double tolerance)
{
    CheckReport report;
    const std::size_t d = p.dim();
    if (p.g.dim() != d || p.phi.dim() != d || p.h.dim() != d || p.eta.dim() != d || p.xi.dim() != d) {
        report.require("dimensions", false);
        return report;
    }

    bool positive = true;
    try {
        (void)Metric(p.g);
    } catch (const InvalidInput&) {
        positive = false;
    }
    report.require("g positive definite", positive);
    if (!positive) return report;
    const Metric g(p.g);

    const LinOp id = LinOp::identity(d);
    const LinOp exi = p.eta_xi();

    report.at_most("eta(xi) = 1", std::abs(p.eta.dot(p.xi) - 1.0), tolerance);
    report.at_most("g(xi,xi) = 1", std::abs(g.inner(p.xi, p.xi) - 1.0), tolerance);
    report.at_most("eta = g(xi,.)", (g.lower(p.xi) - p.eta).max_abs(), tolerance);
    report.at_most("phi^2 = -Id + eta(x)xi", (p.phi * p.phi - (exi - id)).max_abs(), tolerance);
    report.at_most("phi xi = 0", (p.phi * p.xi).max_abs(), tolerance);

    // eta o phi as a covector: (eta o phi)_j = sum_i eta_i phi(i, j)
    Vec eta_phi(d);
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t i = 0; i < d; ++i) eta_phi[j] += p.eta[i] * p.phi(i, j);
    report.at_most("eta o phi = 0", eta_phi.max_abs(), tolerance);

    // g(phi X, phi Y) = g(X, Y) - eta(X) eta(Y)
    Bilinear compat = p.g.composed(p.phi);  // g(phi X, Y)
    Bilinear gpp(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const Vec pi = p.phi * Vec::basis(d, i);
            const Vec pj = p.phi * Vec::basis(d, j);
            gpp(i, j) = g.inner(pi, pj) - p.g(i, j) + p.eta[i] * p.eta[j];
        }
    report.at_most("g(phi X, phi Y) = g(X,Y) - eta(X)eta(Y)", gpp.max_abs(), tolerance);
    double skew = 0.0;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) skew = std::max(skew, std::abs(compat(i, j) + compat(j, i)));
    report.at_most("g(phi X, Y) antisymmetric", skew, tolerance);

    report.at_most("h g-symmetric", p.g.composed(p.h).asymmetry(), tolerance);
    report.at_most("h xi = 0", (p.h * p.xi).max_abs(), tolerance);
    report.at_most("h phi + phi h = 0", (p.h * p.phi + p.phi * p.h).max_abs(), tolerance);
    report.at_most("tr h = 0", std::abs(p.h.trace()), tolerance);
    report.at_most("tr h phi = 0", std::abs((p.h * p.phi).trace()), tolerance);
    return report;
}

}  // namespace phlab
