#include "phlab/kaehler.hpp"

#include "phlab/errors.hpp"

#include <algorithm>
#include <cmath>

namespace phlab {

namespace {

LinOp block_complex_structure(std::size_t complex_dim)
{
    LinOp j(2 * complex_dim);
    for (std::size_t i = 0; i < complex_dim; ++i) {
        j(2 * i + 1, 2 * i) = 1.0;
        j(2 * i, 2 * i + 1) = -1.0;
    }
    return j;
}

// R(X,Y)Z = c/4 (g(Y,Z)X - g(X,Z)Y + g(JY,Z)JX - g(JX,Z)JY + 2g(X,JY)JZ)
Tensor4 complex_space_form(std::size_t complex_dim, double c)
{
    const LinOp j = block_complex_structure(complex_dim);
    const Metric g(Bilinear::identity(2 * complex_dim));
    return assemble_tensor(g, [&](const Vec& x, const Vec& y, const Vec& z) {
        const Vec jx = j * x, jy = j * y, jz = j * z;
        Vec v = g.inner(y, z) * x - g.inner(x, z) * y + g.inner(jy, z) * jx - g.inner(jx, z) * jy;
        v += (2.0 * g.inner(x, jy)) * jz;
        return (c / 4.0) * v;
    });
}

double j_invariance_residual(const Tensor4& t, const LinOp& j)
{
    const std::size_t d = t.dim();
    double m = 0.0;
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
            for (std::size_t c = 0; c < d; ++c)
                for (std::size_t e = 0; e < d; ++e) {
                    const double rot = t.eval(Vec::basis(d, a), Vec::basis(d, b), j * Vec::basis(d, c),
                                              j * Vec::basis(d, e));
                    m = std::max(m, std::abs(rot - t(a, b, c, e)));
                }
    return m;
}

}  // namespace

KaehlerPoint product_space_form_curvature(int p, int q, double c1, double c2)
{
    if (p < 1 || q < 0) throw InvalidInput("product of complex space forms needs p >= 1 and q >= 0");
    if (!std::isfinite(c1) || !std::isfinite(c2)) throw InvalidInput("holomorphic curvatures must be finite");

    KaehlerPoint kp;
    kp.p = p;
    kp.q = q;
    kp.c1 = c1;
    kp.c2 = c2;
    const std::size_t d1 = static_cast<std::size_t>(2 * p);
    const std::size_t d = kp.dim();
    kp.J = block_complex_structure(static_cast<std::size_t>(p + q));
    kp.g = Bilinear::identity(d);
    kp.curvature = Tensor4(d);

    const Tensor4 first = complex_space_form(static_cast<std::size_t>(p), c1);
    for (std::size_t a = 0; a < d1; ++a)
        for (std::size_t b = 0; b < d1; ++b)
            for (std::size_t c = 0; c < d1; ++c)
                for (std::size_t e = 0; e < d1; ++e) kp.curvature(a, b, c, e) = first(a, b, c, e);
    if (q > 0) {
        const Tensor4 second = complex_space_form(static_cast<std::size_t>(q), c2);
        const std::size_t d2 = second.dim();
        for (std::size_t a = 0; a < d2; ++a)
            for (std::size_t b = 0; b < d2; ++b)
                for (std::size_t c = 0; c < d2; ++c)
                    for (std::size_t e = 0; e < d2; ++e)
                        kp.curvature(d1 + a, d1 + b, d1 + c, d1 + e) = second(a, b, c, e);
    }
    return kp;
}

Tensor4 kaehler_bochner(const KaehlerPoint& kp)
{
    const std::size_t d = kp.dim();
    const double n = static_cast<double>(kp.p + kp.q);
    const Metric metric(kp.g);
    const Bilinear ric = trace_first_slot(kp.curvature, metric);
    const double tau = metric.trace(ric);
    const Bilinear rj = ric.composed(kp.J);     // Ric(JX, Y)
    const Bilinear gj = kp.g.composed(kp.J);    // g(JX, Y)
    const Bilinear& g = kp.g;

    const double c_ric = 1.0 / (2.0 * n + 4.0);
    const double c_tau = tau / ((2.0 * n + 2.0) * (2.0 * n + 4.0));

    Tensor4 b = kp.curvature;
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t y = 0; y < d; ++y)
            for (std::size_t z = 0; z < d; ++z)
                for (std::size_t w = 0; w < d; ++w) {
                    const double ricci_part = ric(x, w) * g(y, z) - ric(x, z) * g(y, w) + ric(y, z) * g(x, w) -
                                              ric(y, w) * g(x, z) + rj(x, w) * gj(y, z) - rj(x, z) * gj(y, w) +
                                              rj(y, z) * gj(x, w) - rj(y, w) * gj(x, z) -
                                              2.0 * rj(x, y) * gj(z, w) - 2.0 * rj(z, w) * gj(x, y);
                    const double metric_part = g(x, w) * g(y, z) - g(x, z) * g(y, w) + gj(x, w) * gj(y, z) -
                                               gj(x, z) * gj(y, w) - 2.0 * gj(x, y) * gj(z, w);
                    b(x, y, z, w) += -c_ric * ricci_part + c_tau * metric_part;
                }
    return b;
}

double holomorphic_sectional_curvature(const KaehlerPoint& kp, const Vec& x)
{
    const Vec jx = kp.J * x;
    const double nx = kp.g.eval(x, x);
    if (!(nx > 0.0)) throw InvalidInput("holomorphic sectional curvature needs a nonzero vector");
    return kp.curvature.eval(x, jx, jx, x) / (nx * nx);
}

double sectional_curvature(const KaehlerPoint& kp, const Vec& x, const Vec& y)
{
    const double area = kp.g.eval(x, x) * kp.g.eval(y, y) - kp.g.eval(x, y) * kp.g.eval(x, y);
    if (!(area > 0.0)) throw InvalidInput("sectional curvature needs independent vectors");
    return kp.curvature.eval(x, y, y, x) / area;
}

CheckReport validate_kaehler(const KaehlerPoint& kp, double tolerance)
{
    CheckReport report;
    const std::size_t d = kp.dim();
    const LinOp& j = kp.J;
    report.at_most("J^2 = -Id", (j * j + LinOp::identity(d)).max_abs(), tolerance);
    double iso = 0.0;
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
            iso = std::max(iso, std::abs(kp.g.eval(j * Vec::basis(d, a), j * Vec::basis(d, b)) - kp.g(a, b)));
    report.at_most("g(JX,JY) = g(X,Y)", iso, tolerance);
    report.at_most("R antisymmetric in X,Y", antisymmetry_residual_12(kp.curvature), tolerance);
    report.at_most("R antisymmetric in Z,W", antisymmetry_residual_34(kp.curvature), tolerance);
    report.at_most("R pair symmetric", pair_symmetry_residual(kp.curvature), tolerance);
    report.at_most("R first Bianchi", first_bianchi_residual(kp.curvature), tolerance);
    report.at_most("R J-invariant", j_invariance_residual(kp.curvature, j), tolerance);
    return report;
}

CheckReport validate_kaehler_bochner(const Tensor4& b, const KaehlerPoint& kp, double tolerance)
{
    CheckReport report;
    report.at_most("B antisymmetric in X,Y", antisymmetry_residual_12(b), tolerance);
    report.at_most("B antisymmetric in Z,W", antisymmetry_residual_34(b), tolerance);
    report.at_most("B pair symmetric", pair_symmetry_residual(b), tolerance);
    report.at_most("B first Bianchi", first_bianchi_residual(b), tolerance);
    report.at_most("B J-invariant", j_invariance_residual(b, kp.J), tolerance);
    report.at_most("B Ricci trace-free", trace_first_slot(b, kp.g).max_abs(), tolerance);
    return report;
}

}  // namespace phlab
