#pragma once

namespace phlab::tol {

// Pure linear algebra on O(1) adapted-frame entries.
inline constexpr double kLinearAlgebra = 1e-12;
// Riemann symmetries, symmetry preservation, canonical-curvature structure.
inline constexpr double kSymmetry = 1e-10;
// Quantities derived through several contractions (Ricci, rho, Bochner).
inline constexpr double kDerived = 1e-9;
// Frobenius-norm threshold below which B counts as zero.
inline constexpr double kSpherical = 1e-9;
// Algebraic predicates on normalized bundle quantities.
inline constexpr double kPredicate = 1e-12;
// Lower bound a tensor must exceed to count as genuinely nonzero.
inline constexpr double kNonzeroFloor = 1e-3;
// Entry magnitude at or below which a tensor is treated as exactly zero.
inline constexpr double kZeroEntry = 1e-15;

}  // namespace phlab::tol
