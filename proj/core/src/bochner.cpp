#include "phlab/bochner.hpp"

#include "phlab/errors.hpp"

#include <cmath>
#include <string>

namespace phlab {

BochnerAux bochner_aux(const Bilinear& k_ricci, double rho, const ContactMetricPoint& p)
{
    if (p.n < 2) throw InvalidInput("Bochner tensor needs n >= 2");
    const double n = p.n;
    const Metric g = p.metric();

    Bilinear l = (-1.0 / (2.0 * (n + 2.0))) * k_ricci;
    l += (rho / (8.0 * (n + 1.0) * (n + 2.0))) * p.g;
    l = restrict_to_D(l, p);

    BochnerAux aux;
    aux.m = l.composed(p.phi);
    aux.L = g.raise(l);
    aux.M = g.raise(aux.m);
    aux.l = std::move(l);
    return aux;
}

Tensor4 bochner_B0(const CanonicalCurvature& ct, const BochnerAux& aux, const ContactMetricPoint& p)
{
    const Metric g = p.metric();
    const LinOp proj = p.horizontal_projector();
    const LinOp& j = p.phi;
    const Bilinear& l = aux.l;
    const Bilinear& m = aux.m;
    const LinOp& lop = aux.L;
    const LinOp& mop = aux.M;

    return assemble_tensor(g, [&](const Vec& x0, const Vec& y0, const Vec& z0) {
        const Vec x = proj * x0, y = proj * y0, z = proj * z0;
        const Vec jx = j * x, jy = j * y, jz = j * z;
        Vec v = ct.Rt.vector_value(x, y, z, g);
        v -= 2.0 * (m.eval(x, y) * jz + g.inner(jx, y) * (mop * z));
        v += l.eval(y, z) * x - l.eval(x, z) * y + m.eval(y, z) * jx - m.eval(x, z) * jy;
        v += g.inner(y, z) * (lop * x) - g.inner(x, z) * (lop * y);
        v += g.inner(jy, z) * (mop * x) - g.inner(jx, z) * (mop * y);
        return proj * v;
    });
}

Tensor4 bochner_B1(const CanonicalCurvature& ct, const ContactMetricPoint& p)
{
    const Metric g = p.metric();
    const LinOp proj = p.horizontal_projector();
    const LinOp& j = p.phi;
    return assemble_tensor(g, [&](const Vec& x0, const Vec& y0, const Vec& z0) {
        const Vec x = proj * x0, y = proj * y0, z = proj * z0;
        Vec v = ct.Rt.vector_value(j * x, j * y, z, g) - ct.Rt.vector_value(x, y, z, g);
        return proj * (0.5 * v);
    });
}

Tensor4 bochner(const CanonicalCurvature& ct, const BochnerAux& aux, const ContactMetricPoint& p)
{
    return bochner_B0(ct, aux, p) + bochner_B1(ct, p);
}

Tensor4 bochner_kmu_closed(const ContactMetricPoint& p, const KmuParams& params)
{
    if (!(params.k < 1.0)) throw InvalidInput("closed-form (k,mu) Bochner tensor needs k < 1");
    const double n = p.n;
    const LinOp h2 = p.h * p.h;
    const double tr_h2 = h2.trace();
    const double expected = 2.0 * n * (1.0 - params.k);
    if (std::abs(tr_h2 - expected) > 1e-10 * std::max(1.0, expected))
        throw PreconditionError("tr(h^2) = " + std::to_string(tr_h2) + " but 2n(1-k) = " +
                                std::to_string(expected));

    const double rho = 2.0 * n * n * (2.0 - params.mu);
    const double c_g = rho / (4.0 * n * n * (n + 1.0));
    const double c_h = rho / (2.0 * n * tr_h2);

    const Metric g = p.metric();
    const LinOp proj = p.horizontal_projector();
    const LinOp& phi = p.phi;
    const LinOp& h = p.h;
    const LinOp phih = phi * h;
    return assemble_tensor(g, [&](const Vec& x0, const Vec& y0, const Vec& z0) {
        const Vec x = proj * x0, y = proj * y0, z = proj * z0;
        const Vec px = phi * x, py = phi * y, pz = phi * z;
        const Vec hx = h * x, hy = h * y;
        const Vec phx = phih * x, phy = phih * y;
        Vec v = c_g * (g.inner(y, z) * x - g.inner(x, z) * y + g.inner(py, z) * px - g.inner(px, z) * py -
                       (2.0 * g.inner(px, y)) * pz);
        v += c_h * (g.inner(hy, z) * hx - g.inner(hx, z) * hy + g.inner(phy, z) * phx - g.inner(phx, z) * phy);
        return proj * v;
    });
}

bool is_spherical(const Tensor4& b, double tolerance)
{
    return tensor_norm(b) <= tolerance;
}

BochnerPipeline run_bochner_pipeline(CanonicalCurvature ct, const ContactMetricPoint& p)
{
    BochnerPipeline out;
    out.s = ricci_s(ct, p.g);
    out.k = ricci_k(ct, p);
    out.rho = webster_scalar(out.s, p.g);
    out.aux = bochner_aux(out.k, out.rho, p);
    out.B0 = bochner_B0(ct, out.aux, p);
    out.B1 = bochner_B1(ct, p);
    out.B = out.B0 + out.B1;
    out.canonical = std::move(ct);
    return out;
}

}  // namespace phlab
