#include "phlab/symmetry.hpp"

#include <algorithm>

namespace phlab {

LinOp symmetry_linearization(const ContactMetricPoint& p)
{
    return 2.0 * p.eta_xi() - LinOp::identity(p.dim());
}

HomogeneousStructure build_T(const ContactMetricPoint& p, double mu)
{
    const std::size_t d = p.dim();
    const Metric g = p.metric();
    const LinOp phih = p.phi * p.h;
    HomogeneousStructure t{Tensor3(d)};
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const Vec x = Vec::basis(d, i);
            const Vec y = Vec::basis(d, j);
            const Vec px = p.phi * x;
            const Vec phx = phih * x;
            Vec v = (g.inner(px, y) + g.inner(phx, y)) * p.xi;
            v -= p.eta.dot(y) * (px + phx);
            v -= (mu / 2.0) * p.eta.dot(x) * (p.phi * y);
            t.values(i, j) = std::move(v);
        }
    return t;
}

CheckReport check_L_preserves(const LinOp& l, const Tensor4& r, const HomogeneousStructure& t,
                              const Bilinear& g, double tolerance)
{
    CheckReport report;
    const std::size_t d = r.dim();

    report.at_most("L preserves R", (pullback(r, l) - r).max_abs(), tolerance);

    double t_residual = 0.0;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const Vec lx = l * Vec::basis(d, i);
            const Vec ly = l * Vec::basis(d, j);
            const Vec diff = l * t.values(i, j) - t.apply(lx, ly);
            t_residual = std::max(t_residual, diff.max_abs());
        }
    report.at_most("L preserves T", t_residual, tolerance);

    Bilinear lgl(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            lgl(i, j) = g.eval(l * Vec::basis(d, i), l * Vec::basis(d, j)) - g(i, j);
    report.at_most("L is a g-isometry", lgl.max_abs(), tolerance);
    report.at_most("L^2 = Id", (l * l - LinOp::identity(d)).max_abs(), tolerance);
    return report;
}

}  // namespace phlab
