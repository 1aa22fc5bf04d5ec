#pragma once

// Tangent sphere bundle T_rM of radius r over an m-dimensional Riemannian
// space form of curvature K, with the CR structure induced by
// J(X^H) = lambda X^V, J(X^V) = -X^H / lambda and Reeb field xi = (2/lambda) u^H.
//
// Index convention: m is the base dimension and n = m - 1 the CR dimension,
// so T_rM has dimension 2n + 1.

#include "phlab/contact_metric.hpp"
#include "phlab/report.hpp"
#include "phlab/tensor.hpp"

#include <optional>
#include <random>
#include <span>
#include <vector>

namespace phlab {

struct TsbParams {
    int m = 3;
    double K = 0.0;
    double r = 1.0;
    double lambda_b = 1.0;

    // Throws InvalidInput unless m >= 3, r > 0, lambda_b > 0 and all finite.
    static TsbParams make(int m, double K, double r, double lambda_b);

    int cr_dimension() const { return m - 1; }
    // p = lambda / (2r); the bundle projection is a Riemannian submersion onto (M, p^2 g).
    double base_scale() const { return lambda_b / (2.0 * r); }
    // Kr^2 / lambda^2
    double curvature_ratio() const { return K * r * r / (lambda_b * lambda_b); }
};

struct TsbDerived {
    int n = 0;
    double signed_eigenvalue = 0.0;  // (lambda^2 - K r^2) / lambda^2, h on vertical lifts
    double a = 0.0;                  // |signed_eigenvalue|
    double k = 1.0;                  // 1 - a^2
    bool sasakian = false;
    std::optional<double> mu;        // -2 K r^2 / lambda^2, absent when Sasakian
    std::optional<double> I;         // (lambda^2 + K r^2) / |lambda^2 - K r^2|, absent when Sasakian
    double rho = 0.0;                // 4 n^2 (1 + K r^2 / lambda^2)
    double tau = 0.0;                // scalar curvature of the Webster metric
    double tau_base = 0.0;           // scalar curvature of (M, p^2 g)
    double tau_fiber = 0.0;          // fibers have constant curvature 4
    double normA2 = 0.0;             // |A|^2 of the O'Neill tensor
};

// Levi-form values dEta(JX, Y) on horizontal and vertical lifts of unit base
// vectors orthogonal to u, and residuals against lambda^2/4r^2, 1/4r^2 and 0.
struct LeviFormBlocks {
    double horizontal = 0.0;
    double vertical = 0.0;
    double horizontal_residual = 0.0;
    double vertical_residual = 0.0;
    double cross_residual = 0.0;
};

struct TsbConstruction {
    // Point in the raw lift basis {xi, X_1^H..X_n^H, X_1^V..X_n^V}; g is not the identity.
    ContactMetricPoint lift_basis;
    // The same structure in the g-orthonormal frame obtained by Gram-Schmidt.
    ContactMetricPoint adapted;
    // Columns are the adapted frame vectors in lift-basis coordinates.
    LinOp frame_change;
    LeviFormBlocks levi;
};

// base_frame, when given, is an m x m orthogonal matrix whose first column
// fixes the direction of u; the identity is used otherwise.
TsbConstruction tsb_construct(const TsbParams& params, const std::optional<LinOp>& base_frame = std::nullopt);

ContactMetricPoint tsb_contact_point(const TsbParams& params);

TsbDerived tsb_derived(const TsbParams& params);

struct RhoRoutes {
    double closed = 0.0;                 // 4 n^2 (1 + K r^2 / lambda^2)
    double oneill = 0.0;                 // tau from the submersion, then rho = tau - 2Ric(xi,xi) - tr F^2 + 6n
    std::optional<double> pipeline;      // (k,mu) curvature -> canonical curvature -> trace; absent when Sasakian
    double max_disagreement() const;
};

// Throws RouteMismatch when any two routes differ by more than tolerance.
RhoRoutes tsb_webster_scalar_3routes(const TsbParams& params, double tolerance = 1e-9);

struct TsbPredicates {
    bool spherical = false;
    bool sasakian = false;
};

TsbPredicates tsb_predicates(const TsbParams& params, double tolerance = 1e-12);

struct SweepRow {
    double r = 0.0;
    double lambda_b = 0.0;
    double k = 0.0;
    std::optional<double> mu;
    std::optional<double> I;
    double rho = 0.0;
    bool spherical = false;
    bool sasakian = false;
};

struct SweepReport {
    enum class Special { None, Spherical, Sasakian };

    double K = 0.0;
    double lambda_b = 1.0;
    std::vector<SweepRow> rows;
    Special special = Special::None;
    // lambda_b / sqrt(|K|) when K != 0
    std::optional<double> special_radius;
    // rows flagged spherical (K < 0) or Sasakian (K > 0)
    std::size_t flagged_rows = 0;
    // K = 0: every row has I = 1
    bool constant_unit_I = false;
};

SweepReport corollary_sweep(double K, std::span<const double> radii, double lambda_b = 1.0);

// Evenly spaced radii; throws InvalidInput for an empty or non-positive range.
std::vector<double> radius_grid(double r_min, double r_max, int steps);

// Uniformly random m x m rotation (Gram-Schmidt on a Gaussian matrix).
LinOp random_rotation(std::size_t m, std::mt19937_64& rng);

}  // namespace phlab
