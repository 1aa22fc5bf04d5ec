#include "oracles.hpp"

#include "phlab/contact_metric.hpp"
#include "phlab/errors.hpp"
#include "phlab/tensor.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace phlab;

TEST(Vec, ArithmeticAndDot)
{
    Vec a{1.0, 2.0, 3.0};
    Vec b{4.0, -1.0, 0.5};
    EXPECT_DOUBLE_EQ(a.dot(b), 4.0 - 2.0 + 1.5);
    const Vec c = 2.0 * a - b;
    EXPECT_DOUBLE_EQ(c[0], -2.0);
    EXPECT_DOUBLE_EQ(c[1], 5.0);
    EXPECT_DOUBLE_EQ(c[2], 5.5);
    EXPECT_DOUBLE_EQ(c.max_abs(), 5.5);
    EXPECT_TRUE(c.is_finite());
    Vec bad{1.0, std::nan("")};
    EXPECT_FALSE(bad.is_finite());
}

TEST(LinOp, CompositionAndOuter)
{
    LinOp a(2), b(2);
    a(0, 1) = 1.0;
    a(1, 0) = -1.0;  // rotation by 90 degrees
    b(0, 0) = 2.0;
    b(1, 1) = 3.0;
    const LinOp ab = a * b;
    EXPECT_DOUBLE_EQ(ab(0, 1), 3.0);
    EXPECT_DOUBLE_EQ(ab(1, 0), -2.0);
    EXPECT_DOUBLE_EQ((a * a + LinOp::identity(2)).max_abs(), 0.0);

    // outer(eta, xi) X = eta(X) xi
    const LinOp o = LinOp::outer(Vec{1.0, 2.0}, Vec{3.0, 5.0});
    const Vec v = o * Vec{1.0, 1.0};
    EXPECT_DOUBLE_EQ(v[0], 9.0);
    EXPECT_DOUBLE_EQ(v[1], 15.0);
}

TEST(Bilinear, ComposedEvaluatesFirstSlot)
{
    std::mt19937_64 rng(7);
    const Bilinear g = oracle::random_spd(4, rng);
    LinOp a(4);
    std::normal_distribution<double> normal;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) a(i, j) = normal(rng);
    const Bilinear ga = g.composed(a);
    const Vec x{1.0, -2.0, 0.5, 3.0}, y{0.0, 1.0, 1.0, -1.0};
    EXPECT_NEAR(ga.eval(x, y), g.eval(a * x, y), 1e-12);
}

TEST(Metric, RejectsNonPositiveDefinite)
{
    Bilinear g = Bilinear::identity(3);
    g(2, 2) = -1.0;
    EXPECT_THROW(Metric{g}, InvalidInput);
    Bilinear asym = Bilinear::identity(3);
    asym(0, 1) = 0.5;
    EXPECT_THROW(Metric{asym}, InvalidInput);
}

TEST(Metric, RaiseLowerAndInverse)
{
    std::mt19937_64 rng(11);
    const Metric g(oracle::random_spd(6, rng));
    const Vec x{1.0, 2.0, -1.0, 0.0, 0.5, 3.0};
    const Vec back = g.raise(g.lower(x));
    EXPECT_LT((back - x).max_abs(), 1e-12);
    Bilinear prod(6);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j)
            for (std::size_t k = 0; k < 6; ++k) prod(i, j) += g.form()(i, k) * g.inverse()(k, j);
    EXPECT_LT((prod - Bilinear::identity(6)).max_abs(), 1e-12);
    const auto frame = g.orthonormal_frame();
    for (std::size_t a = 0; a < frame.size(); ++a)
        for (std::size_t b = 0; b < frame.size(); ++b)
            EXPECT_NEAR(g.inner(frame[a], frame[b]), a == b ? 1.0 : 0.0, 1e-12);
}

TEST(TraceFirstSlot, ZeroTensorGivesZero)
{
    EXPECT_EQ(trace_first_slot(Tensor4(5), Bilinear::identity(5)).max_abs(), 0.0);
    EXPECT_EQ(phi_trace(Tensor4(5), LinOp::identity(5), Bilinear::identity(5)).max_abs(), 0.0);
}

TEST(TraceFirstSlot, RejectsIndefiniteMetric)
{
    Bilinear g = Bilinear::identity(3);
    g(0, 0) = 0.0;
    EXPECT_THROW(trace_first_slot(Tensor4(3), g), InvalidInput);
}

class RandomContraction : public ::testing::TestWithParam<std::size_t> {};

TEST_P(RandomContraction, TraceFirstSlotMatchesFrameOracle)
{
    const std::size_t d = GetParam();
    std::mt19937_64 rng(1000 + d);
    const Tensor4 t = oracle::random_tensor(d, rng);
    const Bilinear g = oracle::random_spd(d, rng);
    const Bilinear s = trace_first_slot(t, g);
    const auto ref = oracle::trace_first_slot(t, oracle::to_mat(g));
    double scale = 0.0, err = 0.0;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            scale = std::max(scale, std::abs(ref[i][j]));
            err = std::max(err, std::abs(s(i, j) - ref[i][j]));
        }
    EXPECT_LE(err, 1e-12 * std::max(1.0, scale));
}

TEST_P(RandomContraction, PhiTraceMatchesFrameOracle)
{
    const std::size_t d = GetParam();
    std::mt19937_64 rng(2000 + d);
    const Tensor4 t = oracle::random_tensor(d, rng);
    const Bilinear g = oracle::random_spd(d, rng);
    LinOp phi(d);
    std::normal_distribution<double> normal;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) phi(i, j) = normal(rng);
    const Bilinear k = phi_trace(t, phi, g);
    const auto ref = oracle::phi_trace(t, oracle::to_mat(phi), oracle::to_mat(g));
    double scale = 0.0, err = 0.0;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            scale = std::max(scale, std::abs(ref[i][j]));
            err = std::max(err, std::abs(k(i, j) - ref[i][j]));
        }
    EXPECT_LE(err, 1e-12 * std::max(1.0, scale));
}

INSTANTIATE_TEST_SUITE_P(Dimensions, RandomContraction, ::testing::Values(3, 5, 7, 11));

TEST(TensorNorm, ZeroIffEntriesBelowFloor)
{
    Tensor4 t(3);
    EXPECT_EQ(tensor_norm(t), 0.0);
    EXPECT_TRUE(is_zero(t));
    t(0, 1, 2, 0) = 1e-16;
    EXPECT_TRUE(is_zero(t));
    t(0, 1, 2, 0) = 1e-14;
    EXPECT_FALSE(is_zero(t));
    t(0, 1, 2, 0) = 3.0;
    t(2, 2, 1, 0) = 4.0;
    EXPECT_DOUBLE_EQ(tensor_norm(t), 5.0);
}

TEST(Pullback, IdentityAndScaling)
{
    std::mt19937_64 rng(3);
    const Tensor4 t = oracle::random_tensor(4, rng);
    EXPECT_EQ(oracle::max_diff(pullback(t, LinOp::identity(4)), t), 0.0);
    const Tensor4 twice = pullback(t, 2.0 * LinOp::identity(4));
    EXPECT_LT(oracle::max_diff(twice, 16.0 * t), 1e-12);
    // pullback(T, L)(i,j,k,l) = T(Le_i, Le_j, Le_k, Le_l)
    LinOp l(4);
    std::normal_distribution<double> normal;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) l(i, j) = normal(rng);
    const Tensor4 pb = pullback(t, l);
    auto col = [&](std::size_t i) {
        std::vector<double> c(4);
        for (std::size_t k = 0; k < 4; ++k) c[k] = l(k, i);
        return c;
    };
    EXPECT_NEAR(pb(1, 3, 0, 2), oracle::eval4(t, col(1), col(3), col(0), col(2)), 1e-11);
}

TEST(SymmetryResiduals, DetectViolations)
{
    std::mt19937_64 rng(5);
    const Tensor4 t = oracle::random_tensor(4, rng);
    EXPECT_GT(antisymmetry_residual_12(t), 1e-3);
    EXPECT_GT(antisymmetry_residual_34(t), 1e-3);
    EXPECT_GT(pair_symmetry_residual(t), 1e-3);
    EXPECT_GT(first_bianchi_residual(t), 1e-3);

    const KmuParams kp = KmuParams::make(3, 0.5, 1.3);
    const ContactMetricPoint p = build_adapted_point(3, kp.h_eigenvalue());
    const Tensor4 r = kmu_curvature(p, kp);
    EXPECT_LE(antisymmetry_residual_12(r), 1e-12);
    EXPECT_LE(first_bianchi_residual(r), 1e-12);
}

TEST(SymEigen, IdentityHasUnitSpectrum)
{
    const EigenDecomposition e = sym_eigen(LinOp::identity(5), Bilinear::identity(5));
    for (double v : e.values) EXPECT_NEAR(v, 1.0, 1e-12);
}

TEST(SymEigen, KmuSpectrum)
{
    for (double k : {-3.0, 0.0, 0.75}) {
        const KmuParams kp = KmuParams::make(3, k, 0.0);
        const int partition[] = {1, -1, 1};
        const ContactMetricPoint p = build_adapted_point(3, kp.h_eigenvalue(), partition);
        const EigenDecomposition e = sym_eigen(p.h, p.g);
        const double a = std::sqrt(1.0 - k);
        ASSERT_EQ(e.values.size(), 7u);
        for (int i = 0; i < 3; ++i) EXPECT_NEAR(e.values[i], a, 1e-12);
        EXPECT_NEAR(e.values[3], 0.0, 1e-12);
        for (int i = 4; i < 7; ++i) EXPECT_NEAR(e.values[i], -a, 1e-12);
    }
}

TEST(SymEigen, ReconstructsUnderGeneralMetric)
{
    std::mt19937_64 rng(9);
    const std::size_t d = 6;
    const Bilinear g = oracle::random_spd(d, rng);
    // A = G^{-1} S is g-symmetric for symmetric S
    const Bilinear s = oracle::random_spd(d, rng) - 3.0 * Bilinear::identity(d);
    const Metric m(g);
    const LinOp a = m.raise(s);
    const EigenDecomposition e = sym_eigen(a, g);
    for (std::size_t i = 1; i < d; ++i) EXPECT_GE(e.values[i - 1], e.values[i]);
    LinOp rebuilt(d);
    for (std::size_t i = 0; i < d; ++i)
        rebuilt += e.values[i] * LinOp::outer(m.lower(e.vectors[i]), e.vectors[i]);
    EXPECT_LT((rebuilt - a).max_abs(), 1e-10);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            EXPECT_NEAR(m.inner(e.vectors[i], e.vectors[j]), i == j ? 1.0 : 0.0, 1e-10);
}

TEST(SymEigen, RejectsAsymmetricInput)
{
    LinOp a = LinOp::identity(3);
    a(0, 1) = 1e-6;
    EXPECT_THROW(sym_eigen(a, Bilinear::identity(3)), InvalidInput);
}

TEST(Cholesky, FactorsSpdMatrix)
{
    std::mt19937_64 rng(13);
    const Bilinear g = oracle::random_spd(5, rng);
    const LinOp l = cholesky(g);
    const LinOp llt = l * l.transposed();
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j) {
            EXPECT_NEAR(llt(i, j), g(i, j), 1e-11);
            if (j > i) EXPECT_EQ(l(i, j), 0.0);
        }
}
