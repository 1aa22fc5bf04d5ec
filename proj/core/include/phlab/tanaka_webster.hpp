#pragma once

// Tanaka-Webster (canonical) connection data at a point: the difference
// tensor H = canonical - Levi-Civita, the canonical curvature restricted to
// the holomorphic distribution D, its two Ricci tensors s and k, the Webster
// scalar curvature and the pseudoholomorphic sectional curvature.

#include "phlab/contact_metric.hpp"
#include "phlab/report.hpp"
#include "phlab/tensor.hpp"

namespace phlab {

// Canonical curvature with every xi-slot zero. The xi-component involving the
// covariant derivative of F is not representable pointwise and is dropped.
struct CanonicalCurvature {
    Tensor4 Rt;
    int n = 0;
};

// H(X,Y) = g(X,phi Y) xi + eta(X) phi Y + eta(Y) phi X + g(FX,Y) xi - eta(Y) FX, F = -phi h
Tensor3 difference_tensor(const ContactMetricPoint& p);

// R~ on D from the Riemannian curvature, valid when R(X,Y)Z stays in D for
// X,Y,Z in D. Throws PreconditionError when the xi-component of R(X,Y)Z
// exceeds 1e-10.
CanonicalCurvature canonical_curvature_D(const Tensor4& r, const ContactMetricPoint& p);

// Wraps the closed-form space-form canonical curvature.
CanonicalCurvature space_form_canonical(const ContactMetricPoint& p, double c);

// s(X,Y) = tr(V -> R~(V,X)Y)
Bilinear ricci_s(const CanonicalCurvature& ct, const Bilinear& g);

// k(X,Y) = s(X,Y) + 2(n-1) g(F J X, Y) on D; zero on xi.
Bilinear ricci_k_from_s(const Bilinear& s, const ContactMetricPoint& p);

// k(X,Y) = 1/2 tr(phi R~(X, phi Y)) on D, checked against ricci_k_from_s.
// Throws RouteMismatch when the two routes differ by more than tolerance.
Bilinear ricci_k(const CanonicalCurvature& ct, const ContactMetricPoint& p, double tolerance = 1e-9);

// b(PX, PY) with P the projector onto D.
Bilinear restrict_to_D(const Bilinear& b, const ContactMetricPoint& p);

// rho = tr_g(s)
double webster_scalar(const Bilinear& s, const Bilinear& g);

// rho = tau - 2 Ric(xi,xi) - tr(F^2) + 6n
double webster_scalar_via_riemannian(double tau, double ric_xi_xi, double tr_F2, int n);

// Riemannian inputs of webster_scalar_via_riemannian computed from a curvature tensor.
struct RiemannianScalars {
    Bilinear ricci;
    double tau = 0.0;
    double ric_xi_xi = 0.0;
    double tr_F2 = 0.0;
};
RiemannianScalars riemannian_scalars(const Tensor4& r, const ContactMetricPoint& p);

// K~(sigma) = g(R~(X, phi X) phi X, X) for a g-unit X in D.
// Throws PreconditionError when X is not unit or not in D (tolerance 1e-10).
double pseudoholomorphic_K(const CanonicalCurvature& ct, const Vec& x, const ContactMetricPoint& p);

// max over frame pairs of |R~(X,Y) phi - phi R~(X,Y)|
double phi_commutation_residual(const CanonicalCurvature& ct, const ContactMetricPoint& p);

// R~(X,Y) xi = 0, phi-commutation, D-invariance.
CheckReport validate_canonical(const CanonicalCurvature& ct, const ContactMetricPoint& p,
                               double tolerance = 1e-10);

}  // namespace phlab
