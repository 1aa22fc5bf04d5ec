#pragma once

// Pointwise content of CR-symmetry for (k, mu)-spaces: the linearized
// symmetry L = -Id + 2 eta (x) xi and the homogeneous structure tensor T it
// must preserve together with the curvature.

#include "phlab/contact_metric.hpp"
#include "phlab/report.hpp"
#include "phlab/tensor.hpp"

namespace phlab {

// T_X Y = (g(phi X, Y) + g(phi h X, Y)) xi - eta(Y)(phi X + phi h X) - (mu/2) eta(X) phi Y
struct HomogeneousStructure {
    Tensor3 values;  // values(i, j) = T_{e_i} e_j

    Vec apply(const Vec& x, const Vec& y) const { return values.apply(x, y); }
};

LinOp symmetry_linearization(const ContactMetricPoint& p);

HomogeneousStructure build_T(const ContactMetricPoint& p, double mu);

// Residuals of R(LX,LY,LZ,LW) - R(X,Y,Z,W) and L(T_X Y) - T_{LX} LY over the
// frame, plus the isometry and involution properties of L.
CheckReport check_L_preserves(const LinOp& l, const Tensor4& r, const HomogeneousStructure& t,
                              const Bilinear& g, double tolerance = 1e-10);

}  // namespace phlab
