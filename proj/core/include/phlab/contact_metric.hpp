#pragma once

// Contact metric structures (phi, xi, eta, g, h) at a single point, the
// explicit curvature of non-Sasakian (k, mu)-spaces, and the canonical
// curvature of a pseudohermitian space form.

#include "phlab/report.hpp"
#include "phlab/tensor.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <span>

namespace phlab {

// One point of a contact metric manifold, expressed in some basis of T_xM.
// The adapted frames built here are g-orthonormal with basis order
// {xi, e_1..e_n, phi e_1..phi e_n}; other bases (e.g. the raw lift basis of a
// tangent sphere bundle) carry a non-identity g.
struct ContactMetricPoint {
    int n = 0;            // CR dimension
    Bilinear g;
    Vec eta;              // covector components
    Vec xi;
    LinOp phi;
    LinOp h;

    std::size_t dim() const { return static_cast<std::size_t>(2 * n + 1); }
    Metric metric() const { return Metric(g); }
    // F = -phi h, the torsion operator of the canonical connection
    LinOp torsion_F() const { return -(phi * h); }
    // X -> eta(X) xi
    LinOp eta_xi() const { return LinOp::outer(eta, xi); }
    // Projector onto D = ker eta along xi.
    LinOp horizontal_projector() const { return LinOp::identity(dim()) - eta_xi(); }
};

struct KmuParams {
    int n = 2;
    double k = 0.0;
    double mu = 0.0;

    // Throws InvalidInput for n < 2, k > 1, or non-finite values.
    static KmuParams make(int n, double k, double mu);

    bool sasakian() const { return k == 1.0; }
    // a = sqrt(1 - k), the positive h-eigenvalue
    double h_eigenvalue() const;
    // I = (1 - mu/2) / sqrt(1 - k); throws InvalidInput when k >= 1.
    double boeckx_invariant() const;
};

struct SpaceFormParams {
    int n = 2;
    double c = 0.0;
};

// Adapted orthonormal frame with h = a on e_i and -a on phi e_i. A partition
// entry of -1 flips the sign for that holomorphic pair. Throws InvalidInput for
// n < 2, a < 0, or a partition of the wrong length.
ContactMetricPoint build_adapted_point(int n, double a, std::span<const int> partition = {});

// Same frame as build_adapted_point but with an arbitrary h (caller ensures admissibility).
ContactMetricPoint adapted_point_with_h(int n, const LinOp& h);

// A random g-symmetric h on an adapted frame with h xi = 0 and h phi = -phi h.
LinOp random_admissible_h(int n, std::mt19937_64& rng, double scale = 1.0);

// Curvature of a non-Sasakian (k, mu)-space, assembled term by term from the
// explicit formula. Throws InvalidInput when k >= 1 and PreconditionError when
// h^2 != (1 - k)(Id - eta (x) xi) beyond 1e-10.
Tensor4 kmu_curvature(const ContactMetricPoint& p, const KmuParams& params);

// max over frame pairs of |R(X,Y)xi - k(eta(Y)X - eta(X)Y) - mu(eta(Y)hX - eta(X)hY)|
double kmu_nullity_residual(const Tensor4& r, const ContactMetricPoint& p, const KmuParams& params);

// Canonical (Tanaka-Webster) curvature of a pseudohermitian space form with
// pseudoholomorphic sectional curvature c and the point's h. Populates D-slots
// only; every xi-slot is zero.
Tensor4 space_form_canonical_curvature(const ContactMetricPoint& p, double c);

// Structure equations of a contact metric point, one check per invariant.
CheckReport validate_point(const ContactMetricPoint& p, double tolerance = 1e-12);

}  // namespace phlab
