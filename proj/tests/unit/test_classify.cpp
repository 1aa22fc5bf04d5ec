#include "phlab/bochner.hpp"
#include "phlab/classify.hpp"
#include "phlab/contact_metric.hpp"
#include "phlab/errors.hpp"
#include "phlab/tanaka_webster.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

using namespace phlab;

TEST(ClassifyKmu, Examples)
{
    const ClassificationReport a = classify_kmu(3, -3.0, 2.0);
    EXPECT_EQ(a.label, ModelLabel::T1H);
    EXPECT_EQ(a.label_string(), "T1H^{n+1}");
    EXPECT_EQ(a.n, 3);

    const ClassificationReport b = classify_kmu(2, 0.0, 0.0);
    EXPECT_EQ(b.label, ModelLabel::NonSasakianKmuClass);
    ASSERT_TRUE(b.I.has_value());
    EXPECT_DOUBLE_EQ(*b.I, 1.0);
    EXPECT_EQ(b.label_string().rfind("NonSasakianKmuClass(I=1", 0), 0u);
    EXPECT_NEAR(*b.rho, 16.0, 1e-12);

    for (double mu : {-5.0, 0.0, 2.0}) EXPECT_EQ(classify_kmu(2, 1.0, mu).label, ModelLabel::SasakianUndetermined);
}

TEST(ClassifyKmu, Errors)
{
    EXPECT_THROW(classify_kmu(1, 0.0, 0.0), InvalidInput);
    EXPECT_THROW(classify_kmu(2, 1.1, 0.0), InvalidInput);
}

TEST(ClassifyKmu, MuTwoIsAlwaysT1H)
{
    for (int n : {2, 3, 5})
        for (double k : {-10.0, -1.0, 0.0, 0.99}) EXPECT_EQ(classify_kmu(n, k, 2.0).label, ModelLabel::T1H);
}

TEST(ClassifyKmu, HomothetySoundness)
{
    // (k, mu) pairs sharing I = (1 - mu/2)/sqrt(1 - k)
    const double target = 0.5;
    std::vector<ClassificationReport> same;
    for (double k : {-3.0, 0.0, 0.75, 0.96}) {
        const double mu = 2.0 * (1.0 - target * std::sqrt(1.0 - k));
        same.push_back(classify_kmu(3, k, mu));
    }
    for (const auto& a : same)
        for (const auto& b : same) EXPECT_TRUE(a.same_class(b));

    const ClassificationReport other = classify_kmu(3, 0.0, 2.0 * (1.0 - target - 1e-6));
    EXPECT_FALSE(same[0].same_class(other));
    // different n never share a class
    EXPECT_FALSE(classify_kmu(2, 0.0, 0.0).same_class(classify_kmu(3, 0.0, 0.0)));
    // Sasakian reports carry no class
    EXPECT_FALSE(classify_kmu(2, 1.0, 0.0).same_class(classify_kmu(2, 1.0, 0.0)));
}

TEST(ClassifyKmu, LabelAgreesWithBochnerFlatness)
{
    for (int n : {2, 3})
        for (double k : {-3.0, 0.0, 0.5})
            for (double mu : {0.0, 1.0, 2.0, 3.0}) {
                const KmuParams kp = KmuParams::make(n, k, mu);
                const ContactMetricPoint p = build_adapted_point(n, kp.h_eigenvalue());
                const BochnerPipeline pipe = run_bochner_pipeline(canonical_curvature_D(kmu_curvature(p, kp), p), p);
                EXPECT_EQ(classify_kmu(n, k, mu).label == ModelLabel::T1H, is_spherical(pipe.B));
            }
}

TEST(ClassifySasakian, ByPseudoholomorphicCurvature)
{
    EXPECT_EQ(classify_sasakian_by_Ktilde(2, 4.0).label, ModelLabel::Sphere);
    EXPECT_EQ(classify_sasakian_by_Ktilde(2, 0.0).label, ModelLabel::Heisenberg);
    EXPECT_EQ(classify_sasakian_by_Ktilde(2, ktilde_from_phi_sectional(-4.0)).label, ModelLabel::BnxR);
    EXPECT_DOUBLE_EQ(ktilde_from_phi_sectional(-4.0), -1.0);
    EXPECT_EQ(classify_sasakian_by_Ktilde(3, 0.0).label_string(), "H^{2n+1}");
    EXPECT_EQ(classify_sasakian_by_Ktilde(3, 1.0).label_string(), "S^{2n+1}");
}

TEST(ClassifyTsb, Examples)
{
    const ClassificationReport a = classify_tsb(TsbParams::make(4, -1.0, 1.0, 1.0));
    EXPECT_EQ(a.label, ModelLabel::T1H);
    EXPECT_EQ(a.n, 3);
    EXPECT_TRUE(a.checks.all_passed());

    const ClassificationReport b = classify_tsb(TsbParams::make(3, 0.0, 2.0, 1.0));
    EXPECT_EQ(b.label, ModelLabel::NonSasakianKmuClass);
    EXPECT_NEAR(*b.I, 1.0, 1e-15);

    EXPECT_EQ(classify_tsb(TsbParams::make(3, 1.0, 1.0, 1.0)).label, ModelLabel::SasakianUndetermined);
}

TEST(ClassifyTsb, UniqueSphericalRadius)
{
    const std::vector<double> radii = radius_grid(0.5, 2.0, 31);
    int spherical = 0;
    for (double r : radii)
        if (classify_tsb(TsbParams::make(3, -1.0, r, 1.0)).label == ModelLabel::T1H) ++spherical;
    EXPECT_EQ(spherical, 1);
}

TEST(TheoremSpaces, Enumeration)
{
    const std::vector<TheoremSpace> s2 = main_theorem_spaces(2);
    const std::vector<TheoremSpace> s4 = main_theorem_spaces(4);
    auto count = [](const std::vector<TheoremSpace>& v, ModelLabel l) {
        int c = 0;
        for (const auto& s : v) c += s.label == l;
        return c;
    };
    EXPECT_EQ(count(s2, ModelLabel::Pnk), 1);
    EXPECT_EQ(count(s4, ModelLabel::Pnk), 3);
    for (ModelLabel l : {ModelLabel::Sphere, ModelLabel::Heisenberg, ModelLabel::BnxR, ModelLabel::T1H})
        EXPECT_EQ(count(s4, l), 1);
    EXPECT_EQ(label_name(ModelLabel::BnxR), "B^n x R");
    EXPECT_EQ(label_name(ModelLabel::Pnk), "P^n_k");
    EXPECT_THROW(main_theorem_spaces(1), InvalidInput);
}
