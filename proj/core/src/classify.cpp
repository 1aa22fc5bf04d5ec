#include "phlab/classify.hpp"

#include "phlab/contact_metric.hpp"
#include "phlab/errors.hpp"

#include <cmath>
#include <sstream>

namespace phlab {

std::string label_name(ModelLabel label)
{
    switch (label) {
    case ModelLabel::Sphere: return "S^{2n+1}";
    case ModelLabel::Heisenberg: return "H^{2n+1}";
    case ModelLabel::BnxR: return "B^n x R";
    case ModelLabel::T1H: return "T1H^{n+1}";
    case ModelLabel::Pnk: return "P^n_k";
    case ModelLabel::NonSasakianKmuClass: return "NonSasakianKmuClass";
    case ModelLabel::SasakianUndetermined: return "SasakianUndetermined";
    }
    return "unknown";
}

std::string ClassificationReport::label_string() const
{
    if (label != ModelLabel::NonSasakianKmuClass || !I) return label_name(label);
    std::ostringstream os;
    os.precision(12);
    os << label_name(label) << "(I=" << *I << ")";
    return os.str();
}

bool ClassificationReport::same_class(const ClassificationReport& other, double tolerance) const
{
    if (label != other.label || n != other.n) return false;
    if (label == ModelLabel::NonSasakianKmuClass) {
        if (!I || !other.I) return false;
        return std::abs(*I - *other.I) <= tolerance;
    }
    if (label == ModelLabel::SasakianUndetermined) return false;
    return true;
}

ClassificationReport classify_kmu(int n, double k, double mu, double mu_tolerance)
{
    const KmuParams params = KmuParams::make(n, k, mu);
    ClassificationReport out;
    out.n = n;
    out.k = k;
    out.mu = mu;
    if (params.sasakian()) {
        out.label = ModelLabel::SasakianUndetermined;
        return out;
    }
    out.I = params.boeckx_invariant();
    out.rho = 2.0 * n * n * (2.0 - mu);
    out.label = std::abs(mu - 2.0) <= mu_tolerance ? ModelLabel::T1H : ModelLabel::NonSasakianKmuClass;
    out.checks.require("k < 1", k < 1.0);
    out.checks.require("I finite", std::isfinite(*out.I));
    return out;
}

ClassificationReport classify_sasakian_by_Ktilde(int n, double ktilde, double zero_tolerance)
{
    if (n < 2) throw InvalidInput("classification needs CR dimension n >= 2");
    if (!std::isfinite(ktilde)) throw InvalidInput("K~ must be finite");
    ClassificationReport out;
    out.n = n;
    out.k = 1.0;
    out.ktilde_samples.push_back(ktilde);
    out.rho = ktilde * n * (n + 1.0);
    if (std::abs(ktilde) <= zero_tolerance)
        out.label = ModelLabel::Heisenberg;
    else
        out.label = ktilde > 0.0 ? ModelLabel::Sphere : ModelLabel::BnxR;
    return out;
}

ClassificationReport classify_tsb(const TsbParams& params)
{
    const TsbDerived dv = tsb_derived(params);
    if (dv.sasakian) {
        ClassificationReport out;
        out.label = ModelLabel::SasakianUndetermined;
        out.n = dv.n;
        out.k = 1.0;
        out.rho = dv.rho;
        return out;
    }
    ClassificationReport out = classify_kmu(dv.n, dv.k, *dv.mu);
    // the bundle's own I, (lambda^2 + K r^2)/|lambda^2 - K r^2|, is the reference value
    out.checks.at_most("I from (k,mu) = I from bundle", std::abs(*out.I - *dv.I), tol::kPredicate);
    return out;
}

std::vector<TheoremSpace> main_theorem_spaces(int n)
{
    if (n < 2) throw InvalidInput("classification needs CR dimension n >= 2");
    std::vector<TheoremSpace> out;
    out.push_back({ModelLabel::Sphere, 0, "S^" + std::to_string(2 * n + 1), "standard Sasakian sphere, K~ > 0"});
    out.push_back({ModelLabel::Heisenberg, 0, "H^" + std::to_string(2 * n + 1), "Heisenberg group, Webster flat"});
    out.push_back({ModelLabel::BnxR, 0, "B^" + std::to_string(n) + " x R",
                   "Sasakian space form with phi-sectional curvature < -3"});
    out.push_back({ModelLabel::T1H, 0, "T1H^" + std::to_string(n + 1),
                   "unit tangent bundle of hyperbolic space, non-Sasakian (k,mu) with mu = 2"});
    for (int j = 1; j < n; ++j)
        out.push_back({ModelLabel::Pnk, j, "P^" + std::to_string(n) + "_" + std::to_string(j),
                       "Sasakian circle bundle over CP^" + std::to_string(j) + "(c) x CH^" +
                           std::to_string(n - j) + "(-c)"});
    return out;
}

}  // namespace phlab
