#pragma once

// Products of two complex space forms N^p(c1) x N^q(c2) at a point and the
// Kaehler analogue of the Bochner tensor. Real dimension 2(p+q); J acts by
// 2x2 blocks, J e_{2i} = e_{2i+1}.

#include "phlab/report.hpp"
#include "phlab/tensor.hpp"

namespace phlab {

struct KaehlerPoint {
    int p = 1;
    int q = 0;
    double c1 = 0.0;
    double c2 = 0.0;
    Tensor4 curvature;
    LinOp J;
    Bilinear g;

    std::size_t dim() const { return static_cast<std::size_t>(2 * (p + q)); }
};

// Block-assembled curvature of N^p(c1) x N^q(c2). q = 0 gives a single space form.
// Throws InvalidInput for p < 1, q < 0 or non-finite curvatures.
KaehlerPoint product_space_form_curvature(int p, int q, double c1, double c2);

// B = R - (1/(2N+4)) (Ricci and Ricci o J terms) + tau/((2N+2)(2N+4)) (metric terms),
// N = p + q the complex dimension.
Tensor4 kaehler_bochner(const KaehlerPoint& kp);

// g(R(X,JX)JX, X) / g(X,X)^2
double holomorphic_sectional_curvature(const KaehlerPoint& kp, const Vec& x);

// g(R(X,Y)Y, X) / (g(X,X)g(Y,Y) - g(X,Y)^2)
double sectional_curvature(const KaehlerPoint& kp, const Vec& x, const Vec& y);

// J^2 = -Id, J-isometry, Riemann symmetries, J-invariance of R.
CheckReport validate_kaehler(const KaehlerPoint& kp, double tolerance = 1e-10);

// Riemann symmetries, J-invariance and Ricci trace-freeness of a Kaehler-Bochner tensor.
CheckReport validate_kaehler_bochner(const Tensor4& b, const KaehlerPoint& kp, double tolerance = 1e-10);

}  // namespace phlab
