#pragma once

// Independent reference computations for the unit tests: plain nested loops
// over std::vector, no use of the library's contraction routines.

#include "phlab/tensor.hpp"

#include <cmath>
#include <functional>
#include <random>
#include <vector>

namespace oracle {

using Mat = std::vector<std::vector<double>>;

template <class M>
Mat to_mat(const M& b)
{
    Mat m(b.dim(), std::vector<double>(b.dim()));
    for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j) m[i][j] = b(i, j);
    return m;
}

inline double inner(const Mat& g, const std::vector<double>& x, const std::vector<double>& y)
{
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j) s += x[i] * g[i][j] * y[j];
    return s;
}

// Modified Gram-Schmidt on the coordinate basis.
inline std::vector<std::vector<double>> orthonormal_frame(const Mat& g)
{
    const std::size_t d = g.size();
    std::vector<std::vector<double>> frame;
    for (std::size_t i = 0; i < d; ++i) {
        std::vector<double> v(d, 0.0);
        v[i] = 1.0;
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& e : frame) {
                const double c = inner(g, v, e);
                for (std::size_t k = 0; k < d; ++k) v[k] -= c * e[k];
            }
        const double nv = std::sqrt(inner(g, v, v));
        for (double& x : v) x /= nv;
        frame.push_back(v);
    }
    return frame;
}

inline double eval4(const phlab::Tensor4& t, const std::vector<double>& x, const std::vector<double>& y,
                    const std::vector<double>& z, const std::vector<double>& w)
{
    const std::size_t d = t.dim();
    double s = 0.0;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k)
                for (std::size_t l = 0; l < d; ++l) s += x[i] * y[j] * z[k] * w[l] * t(i, j, k, l);
    return s;
}

inline std::vector<double> unit(std::size_t d, std::size_t i)
{
    std::vector<double> v(d, 0.0);
    v[i] = 1.0;
    return v;
}

// s(X,Y) = sum_a T(E_a, X, Y, E_a) over a g-orthonormal frame
inline Mat trace_first_slot(const phlab::Tensor4& t, const Mat& g)
{
    const std::size_t d = t.dim();
    const auto frame = orthonormal_frame(g);
    Mat s(d, std::vector<double>(d, 0.0));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (const auto& e : frame) s[i][j] += eval4(t, e, unit(d, i), unit(d, j), e);
    return s;
}

// k(X,Y) = 1/2 tr(V -> phi R(X, phi Y) V) over a g-orthonormal frame, with
// R(X,Y)E_a = sum_b T(X, Y, E_a, E_b) E_b.
inline Mat phi_trace(const phlab::Tensor4& t, const Mat& phi, const Mat& g)
{
    const std::size_t d = t.dim();
    const auto frame = orthonormal_frame(g);
    auto apply = [&](const std::vector<double>& v) {
        std::vector<double> out(d, 0.0);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) out[i] += phi[i][j] * v[j];
        return out;
    };
    Mat k(d, std::vector<double>(d, 0.0));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const auto x = unit(d, i);
            const auto py = apply(unit(d, j));
            for (const auto& ea : frame)
                for (const auto& eb : frame)
                    k[i][j] += 0.5 * eval4(t, x, py, ea, eb) * inner(g, apply(eb), ea);
        }
    return k;
}

inline phlab::Tensor4 random_tensor(std::size_t d, std::mt19937_64& rng)
{
    std::normal_distribution<double> normal(0.0, 1.0);
    phlab::Tensor4 t(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k)
                for (std::size_t l = 0; l < d; ++l) t(i, j, k, l) = normal(rng);
    return t;
}

// Random symmetric positive definite matrix A^T A + d I.
inline phlab::Bilinear random_spd(std::size_t d, std::mt19937_64& rng)
{
    std::normal_distribution<double> normal(0.0, 1.0);
    Mat a(d, std::vector<double>(d));
    for (auto& row : a)
        for (double& x : row) x = normal(rng);
    phlab::Bilinear g(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            double s = i == j ? static_cast<double>(d) : 0.0;
            for (std::size_t k = 0; k < d; ++k) s += a[k][i] * a[k][j];
            g(i, j) = s;
        }
    return g;
}

// Tensor with T(i,j,k,l) = <fn(e_i,e_j,e_k), e_l> in an orthonormal frame (g = I).
inline phlab::Tensor4 frame_tensor(std::size_t d, const std::function<phlab::Vec(const phlab::Vec&, const phlab::Vec&,
                                                                                 const phlab::Vec&)>& fn)
{
    phlab::Tensor4 t(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                const phlab::Vec v = fn(phlab::Vec::basis(d, i), phlab::Vec::basis(d, j), phlab::Vec::basis(d, k));
                for (std::size_t l = 0; l < d; ++l) t(i, j, k, l) = v[l];
            }
    return t;
}

inline double max_diff(const phlab::Tensor4& a, const phlab::Tensor4& b)
{
    double m = 0.0;
    for (std::size_t i = 0; i < a.entries().size(); ++i) m = std::max(m, std::abs(a.entries()[i] - b.entries()[i]));
    return m;
}

}  // namespace oracle
