#include "oracles.hpp"

#include "phlab/contact_metric.hpp"
#include "phlab/symmetry.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace phlab;

namespace {

ContactMetricPoint kmu_point(int n, double k)
{
    return build_adapted_point(n, KmuParams::make(n, k, 0.0).h_eigenvalue());
}

}  // namespace

TEST(Linearization, FixesXiAndNegatesD)
{
    const ContactMetricPoint p = kmu_point(3, 0.0);
    const LinOp l = symmetry_linearization(p);
    EXPECT_LE((l * p.xi - p.xi).max_abs(), 1e-15);
    for (std::size_t i = 1; i < p.dim(); ++i) {
        const Vec e = Vec::basis(p.dim(), i);
        EXPECT_LE((l * e + e).max_abs(), 1e-15);
    }
    EXPECT_LE((l * l - LinOp::identity(p.dim())).max_abs(), 1e-15);
    const Bilinear lgl = p.g.composed(l).transposed().composed(l);
    EXPECT_LE((lgl - p.g).max_abs(), 1e-12);
}

TEST(BuildT, HorizontalPairsAreVertical)
{
    const double mu = 1.7;
    const ContactMetricPoint p = kmu_point(2, -0.44);
    const HomogeneousStructure t = build_T(p, mu);
    for (std::size_t i = 1; i < p.dim(); ++i)
        for (std::size_t j = 1; j < p.dim(); ++j) {
            const Vec x = Vec::basis(p.dim(), i), y = Vec::basis(p.dim(), j);
            const Vec v = t.apply(x, y);
            const double coeff = (p.phi * x).dot(y) + (p.phi * (p.h * x)).dot(y);
            EXPECT_NEAR(v[0], coeff, 1e-15);
            for (std::size_t c = 1; c < p.dim(); ++c) EXPECT_EQ(v[c], 0.0);
        }
}

TEST(BuildT, XiSlot)
{
    const double mu = -3.0;
    const ContactMetricPoint p = kmu_point(3, 0.2);
    const HomogeneousStructure t = build_T(p, mu);
    for (std::size_t j = 1; j < p.dim(); ++j) {
        const Vec y = Vec::basis(p.dim(), j);
        EXPECT_LE((t.apply(p.xi, y) + (mu / 2.0) * (p.phi * y)).max_abs(), 1e-15);
    }
}

TEST(BuildT, SasakianMuZero)
{
    const ContactMetricPoint p = build_adapted_point(2, 0.0);
    const HomogeneousStructure t = build_T(p, 0.0);
    std::mt19937_64 rng(4);
    std::normal_distribution<double> normal;
    for (int trial = 0; trial < 10; ++trial) {
        Vec x(p.dim()), y(p.dim());
        for (std::size_t i = 0; i < p.dim(); ++i) {
            x[i] = normal(rng);
            y[i] = normal(rng);
        }
        const Vec want = (p.phi * x).dot(y) * p.xi - p.eta.dot(y) * (p.phi * x);
        EXPECT_LE((t.apply(x, y) - want).max_abs(), 1e-13);
    }
}

TEST(BuildT, MatchesFullFormula)
{
    const double mu = 0.6;
    const ContactMetricPoint p = kmu_point(3, -1.25);
    const HomogeneousStructure t = build_T(p, mu);
    for (std::size_t i = 0; i < p.dim(); ++i)
        for (std::size_t j = 0; j < p.dim(); ++j) {
            const Vec x = Vec::basis(p.dim(), i), y = Vec::basis(p.dim(), j);
            const Vec px = p.phi * x, phx = p.phi * (p.h * x);
            const Vec want = (px.dot(y) + phx.dot(y)) * p.xi - p.eta.dot(y) * (px + phx) -
                             (mu / 2.0) * p.eta.dot(x) * (p.phi * y);
            EXPECT_LE((t.apply(x, y) - want).max_abs(), 1e-15);
        }
}

TEST(Preservation, KmuModelsOnGrid)
{
    for (int n : {2, 3})
        for (double k : {-3.0, 0.0, 0.64})
            for (double mu : {-1.0, 0.5, 2.0}) {
                const KmuParams kp = KmuParams::make(n, k, mu);
                const ContactMetricPoint p = build_adapted_point(n, kp.h_eigenvalue());
                const CheckReport rep = check_L_preserves(symmetry_linearization(p), kmu_curvature(p, kp),
                                                          build_T(p, mu), p.g);
                EXPECT_TRUE(rep.all_passed());
                for (const Check& c : rep.checks()) EXPECT_LE(c.value, 1e-10) << c.name;
            }
}

TEST(Preservation, GenericXiEntryBreaksIt)
{
    const KmuParams kp = KmuParams::make(2, 0.0, 0.0);
    const ContactMetricPoint p = build_adapted_point(2, kp.h_eigenvalue());
    Tensor4 r = kmu_curvature(p, kp);
    // R(e1, e2, e3, xi) has odd parity under L
    r(1, 2, 3, 0) += 0.5;
    const CheckReport rep = check_L_preserves(symmetry_linearization(p), r, build_T(p, 0.0), p.g);
    const Check* c = rep.find("L preserves R");
    ASSERT_NE(c, nullptr);
    EXPECT_FALSE(c->passed);
    EXPECT_GT(c->value, 1e-3);

    std::mt19937_64 rng(42);
    const Tensor4 random = oracle::random_tensor(p.dim(), rng);
    const CheckReport rep2 = check_L_preserves(symmetry_linearization(p), random, build_T(p, 0.0), p.g);
    EXPECT_GT(rep2.find("L preserves R")->value, 1e-3);
}

TEST(Preservation, IdentityIsTrivial)
{
    std::mt19937_64 rng(42);
    const ContactMetricPoint p = build_adapted_point(2, 1.0);
    const Tensor4 random = oracle::random_tensor(p.dim(), rng);
    const CheckReport rep = check_L_preserves(LinOp::identity(p.dim()), random, build_T(p, 0.3), p.g);
    EXPECT_EQ(rep.find("L preserves R")->value, 0.0);
    EXPECT_EQ(rep.find("L preserves T")->value, 0.0);
}
