#pragma once

// Decision table for CR-symmetric model spaces. Non-Sasakian (k,mu)-spaces are
// sorted by their Boeckx invariant I (local homothety class), mu = 2 being the
// spherical class of T1H^{n+1}; Sasakian space forms by the sign of their
// pseudoholomorphic sectional curvature.

#include "phlab/report.hpp"
#include "phlab/tolerances.hpp"
#include "phlab/tsb.hpp"

#include <optional>
#include <string>
#include <vector>

namespace phlab {

enum class ModelLabel {
    Sphere,                 // S^{2n+1}
    Heisenberg,             // H^{2n+1}
    BnxR,                   // B^n x R
    T1H,                    // T1H^{n+1}
    Pnk,                    // P^n_k, enumeration only
    NonSasakianKmuClass,    // homothety class labelled by I
    SasakianUndetermined,
};

std::string label_name(ModelLabel label);

struct ClassificationReport {
    ModelLabel label = ModelLabel::SasakianUndetermined;
    int n = 0;
    std::optional<double> k;
    std::optional<double> mu;
    std::optional<double> I;
    std::optional<double> rho;
    std::vector<double> ktilde_samples;
    CheckReport checks;

    // e.g. "T1H^{n+1}", "NonSasakianKmuClass(I=0.5)"
    std::string label_string() const;
    // Same label and n; NonSasakianKmuClass additionally needs |I1 - I2| <= tolerance.
    bool same_class(const ClassificationReport& other, double tolerance = tol::kDerived) const;
};

// Throws InvalidInput for n < 2 or k > 1. mu_tolerance decides |mu - 2| ~ 0.
ClassificationReport classify_kmu(int n, double k, double mu, double mu_tolerance = tol::kDerived);

// K~ > 0 sphere, K~ = 0 Heisenberg, K~ < 0 B^n x R.
ClassificationReport classify_sasakian_by_Ktilde(int n, double ktilde, double zero_tolerance = tol::kDerived);

// Pseudoholomorphic sectional curvature of a Sasakian space form with
// Riemannian phi-sectional curvature c.
inline double ktilde_from_phi_sectional(double c) { return c + 3.0; }

// Sasakian bundles come back SasakianUndetermined.
ClassificationReport classify_tsb(const TsbParams& params);

struct TheoremSpace {
    ModelLabel label;
    int index = 0;  // k of P^n_k, 0 otherwise
    std::string name;
    std::string description;
};

// Model spaces of the classification in CR dimension n, including P^n_k for k = 1..n-1.
std::vector<TheoremSpace> main_theorem_spaces(int n);

}  // namespace phlab
