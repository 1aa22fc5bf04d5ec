#pragma once

// Chern-Moser-Tanaka (Bochner) tensor B = B0 + B1 of a pseudohermitian
// structure, built from the canonical curvature, the k-Ricci tensor and the
// Webster scalar curvature. B vanishes exactly on spherical CR manifolds.

#include "phlab/contact_metric.hpp"
#include "phlab/tanaka_webster.hpp"
#include "phlab/tensor.hpp"
#include "phlab/tolerances.hpp"

namespace phlab {

// l(X,Y) = -k(X,Y)/(2(n+2)) + rho g(X,Y)/(8(n+1)(n+2)), m(X,Y) = l(JX,Y),
// g(LX,Y) = l(X,Y), g(MX,Y) = m(X,Y). All four vanish on xi.
struct BochnerAux {
    Bilinear l;
    Bilinear m;
    LinOp L;
    LinOp M;
};

BochnerAux bochner_aux(const Bilinear& k_ricci, double rho, const ContactMetricPoint& p);

Tensor4 bochner_B0(const CanonicalCurvature& ct, const BochnerAux& aux, const ContactMetricPoint& p);

// B1(X,Y)Z = 1/2 (R~(JX,JY)Z - R~(X,Y)Z)
Tensor4 bochner_B1(const CanonicalCurvature& ct, const ContactMetricPoint& p);

Tensor4 bochner(const CanonicalCurvature& ct, const BochnerAux& aux, const ContactMetricPoint& p);

// Closed form for non-Sasakian (k, mu)-spaces:
//   rho/(4n^2(n+1)) (g(Y,Z)X - g(X,Z)Y + g(phiY,Z)phiX - g(phiX,Z)phiY - 2g(phiX,Y)phiZ)
// + rho/(2n tr h^2) (g(hY,Z)hX - g(hX,Z)hY + g(phihY,Z)phihX - g(phihX,Z)phihY)
// with rho = 2n^2(2 - mu). Throws InvalidInput for k >= 1 and PreconditionError
// if tr(h^2) != 2n(1-k).
Tensor4 bochner_kmu_closed(const ContactMetricPoint& p, const KmuParams& params);

bool is_spherical(const Tensor4& b, double tolerance = tol::kSpherical);

// Everything the Bochner pipeline computes along the way.
struct BochnerPipeline {
    CanonicalCurvature canonical;
    Bilinear s;
    Bilinear k;
    double rho = 0.0;
    BochnerAux aux;
    Tensor4 B0;
    Tensor4 B1;
    Tensor4 B;
};

// canonical curvature -> s, k (two routes) -> rho -> l, m, L, M -> B0 + B1
BochnerPipeline run_bochner_pipeline(CanonicalCurvature ct, const ContactMetricPoint& p);

}  // namespace phlab
