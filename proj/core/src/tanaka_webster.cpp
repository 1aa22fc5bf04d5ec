#include "phlab/tanaka_webster.hpp"

#include "phlab/errors.hpp"
#include "phlab/tolerances.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace phlab {

Tensor3 difference_tensor(const ContactMetricPoint& p)
{
    const std::size_t d = p.dim();
    const Metric g = p.metric();
    const LinOp f = p.torsion_F();
    Tensor3 out(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const Vec x = Vec::basis(d, i);
            const Vec y = Vec::basis(d, j);
            const Vec py = p.phi * y;
            const Vec fx = f * x;
            const double ex = p.eta.dot(x);
            const double ey = p.eta.dot(y);
            Vec v = (g.inner(x, py) + g.inner(fx, y)) * p.xi;
            v += ex * py + ey * (p.phi * x) - ey * fx;
            out(i, j) = std::move(v);
        }
    return out;
}

CanonicalCurvature canonical_curvature_D(const Tensor4& r, const ContactMetricPoint& p)
{
    const std::size_t d = p.dim();
    if (r.dim() != d) throw InvalidInput("curvature dimension does not match the point");
    const Metric g = p.metric();
    const LinOp proj = p.horizontal_projector();

    std::vector<Vec> dbasis;
    for (std::size_t i = 0; i < d; ++i) dbasis.push_back(proj * Vec::basis(d, i));
    double leak = 0.0;
    for (const Vec& x : dbasis)
        for (const Vec& y : dbasis)
            for (const Vec& z : dbasis)
                leak = std::max(leak, std::abs(p.eta.dot(r.vector_value(x, y, z, g))));
    if (leak > tol::kSymmetry)
        throw PreconditionError("curvature leaves D: xi-component " + std::to_string(leak));

    const LinOp& phi = p.phi;
    const LinOp a = phi * p.h + phi;  // phi h + phi = phi - F
    Tensor4 rt = assemble_tensor(g, [&](const Vec& x0, const Vec& y0, const Vec& z0) {
        const Vec x = proj * x0, y = proj * y0, z = proj * z0;
        const Vec ax = a * x, ay = a * y;
        Vec v = r.vector_value(x, y, z, g);
        v += g.inner(ay, z) * ax - g.inner(ax, z) * ay;
        v -= (2.0 * g.inner(phi * x, y)) * (phi * z);
        return proj * v;
    });
    return CanonicalCurvature{std::move(rt), p.n};
}

CanonicalCurvature space_form_canonical(const ContactMetricPoint& p, double c)
{
    return CanonicalCurvature{space_form_canonical_curvature(p, c), p.n};
}

Bilinear ricci_s(const CanonicalCurvature& ct, const Bilinear& g)
{
    return trace_first_slot(ct.Rt, g);
}

Bilinear restrict_to_D(const Bilinear& b, const ContactMetricPoint& p)
{
    const LinOp proj = p.horizontal_projector();
    // b(P e_i, P e_j) = (P^T b P)(i, j)
    const std::size_t d = p.dim();
    Bilinear out(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            out(i, j) = b.eval(proj * Vec::basis(d, i), proj * Vec::basis(d, j));
    return out;
}

Bilinear ricci_k_from_s(const Bilinear& s, const ContactMetricPoint& p)
{
    const LinOp fj = p.torsion_F() * p.phi;
    Bilinear k = s;
    k += (2.0 * (p.n - 1)) * p.g.composed(fj);
    return restrict_to_D(k, p);
}

Bilinear ricci_k(const CanonicalCurvature& ct, const ContactMetricPoint& p, double tolerance)
{
    const Bilinear via_trace = restrict_to_D(phi_trace(ct.Rt, p.phi, p.g), p);
    const Bilinear via_s = ricci_k_from_s(ricci_s(ct, p.g), p);
    const double residual = (via_trace - via_s).max_abs();
    if (!(residual <= tolerance))
        throw RouteMismatch("k-Ricci routes disagree by " + std::to_string(residual));
    return via_trace;
}

double webster_scalar(const Bilinear& s, const Bilinear& g)
{
    return Metric(g).trace(s);
}

double webster_scalar_via_riemannian(double tau, double ric_xi_xi, double tr_F2, int n)
{
    return tau - 2.0 * ric_xi_xi - tr_F2 + 6.0 * n;
}

RiemannianScalars riemannian_scalars(const Tensor4& r, const ContactMetricPoint& p)
{
    const Metric g = p.metric();
    RiemannianScalars out;
    out.ricci = trace_first_slot(r, g);
    out.tau = g.trace(out.ricci);
    out.ric_xi_xi = out.ricci.eval(p.xi, p.xi);
    const LinOp f = p.torsion_F();
    out.tr_F2 = (f * f).trace();
    return out;
}

double pseudoholomorphic_K(const CanonicalCurvature& ct, const Vec& x, const ContactMetricPoint& p)
{
    const Metric g = p.metric();
    if (std::abs(g.inner(x, x) - 1.0) > tol::kSymmetry)
        throw PreconditionError("pseudoholomorphic_K needs a unit vector");
    if (std::abs(p.eta.dot(x)) > tol::kSymmetry)
        throw PreconditionError("pseudoholomorphic_K needs a vector in D");
    const Vec jx = p.phi * x;
    return ct.Rt.eval(x, jx, jx, x);
}

double phi_commutation_residual(const CanonicalCurvature& ct, const ContactMetricPoint& p)
{
    const std::size_t d = p.dim();
    const Metric g = p.metric();
    double m = 0.0;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const LinOp e = ct.Rt.endomorphism(Vec::basis(d, i), Vec::basis(d, j), g);
            m = std::max(m, (e * p.phi - p.phi * e).max_abs());
        }
    return m;
}

CheckReport validate_canonical(const CanonicalCurvature& ct, const ContactMetricPoint& p, double tolerance)
{
    CheckReport report;
    const std::size_t d = p.dim();
    const Metric g = p.metric();
    double xi_res = 0.0;
    double d_res = 0.0;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const Vec x = Vec::basis(d, i), y = Vec::basis(d, j);
            xi_res = std::max(xi_res, ct.Rt.vector_value(x, y, p.xi, g).max_abs());
            for (std::size_t k = 0; k < d; ++k)
                d_res = std::max(d_res, std::abs(p.eta.dot(ct.Rt.vector_value(i, j, k, g))));
        }
    report.at_most("R~(X,Y)xi = 0", xi_res, tolerance);
    report.at_most("R~(X,Y)D in D", d_res, tolerance);
    report.at_most("R~(X,Y) phi = phi R~(X,Y)", phi_commutation_residual(ct, p), tolerance);
    report.at_most("R~ antisymmetric in X,Y", antisymmetry_residual_12(ct.Rt), tolerance);
    report.at_most("R~ g-skew", antisymmetry_residual_34(ct.Rt), tolerance);
    return report;
}

}  // namespace phlab
