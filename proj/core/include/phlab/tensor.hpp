#pragma once

// Dense multilinear algebra over a single tangent space of dimension d.
//
// Everything here is sized at runtime (d = 2n+1 <= 11 in practice) and stored
// densely. Values are immutable once built by the model code; all operations
// are pure.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace phlab {

class Vec {
public:
    Vec() = default;
    explicit Vec(std::size_t dim) : c_(dim, 0.0) {}
    Vec(std::initializer_list<double> values) : c_(values) {}

    static Vec basis(std::size_t dim, std::size_t i)
    {
        Vec v(dim);
        v.c_[i] = 1.0;
        return v;
    }

    std::size_t dim() const { return c_.size(); }
    double& operator[](std::size_t i) { return c_[i]; }
    double operator[](std::size_t i) const { return c_[i]; }
    std::span<const double> components() const { return c_; }

    Vec& operator+=(const Vec& o);
    Vec& operator-=(const Vec& o);
    Vec& operator*=(double s);

    friend Vec operator+(Vec a, const Vec& b) { return a += b; }
    friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
    friend Vec operator*(Vec a, double s) { return a *= s; }
    friend Vec operator*(double s, Vec a) { return a *= s; }
    friend Vec operator-(Vec a) { return a *= -1.0; }

    // Euclidean coordinate dot product; use Bilinear::eval for g(X, Y).
    double dot(const Vec& o) const;
    double max_abs() const;
    bool is_finite() const;

private:
    std::vector<double> c_;
};

// Square d x d array with value semantics. LinOp and Bilinear derive from it
// through CRTP so that arithmetic keeps the strong type.
template <class Derived>
class DenseSquare {
public:
    DenseSquare() = default;
    explicit DenseSquare(std::size_t dim) : dim_(dim), a_(dim * dim, 0.0) {}

    static Derived zero(std::size_t dim) { return Derived(dim); }
    static Derived identity(std::size_t dim)
    {
        Derived m(dim);
        for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t dim() const { return dim_; }
    double& operator()(std::size_t i, std::size_t j) { return a_[i * dim_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return a_[i * dim_ + j]; }
    std::span<const double> entries() const { return a_; }

    Derived transposed() const
    {
        Derived t(dim_);
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    double trace() const
    {
        double t = 0.0;
        for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
        return t;
    }

    double max_abs() const
    {
        double m = 0.0;
        for (double x : a_) m = std::max(m, std::abs(x));
        return m;
    }

    double frobenius_norm() const
    {
        double s = 0.0;
        for (double x : a_) s += x * x;
        return std::sqrt(s);
    }

    bool is_finite() const
    {
        for (double x : a_)
            if (!std::isfinite(x)) return false;
        return true;
    }

    // max |A - A^T|
    double asymmetry() const
    {
        double m = 0.0;
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = i + 1; j < dim_; ++j)
                m = std::max(m, std::abs((*this)(i, j) - (*this)(j, i)));
        return m;
    }

    Derived& operator+=(const Derived& o)
    {
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
        return self();
    }
    Derived& operator-=(const Derived& o)
    {
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
        return self();
    }
    Derived& operator*=(double s)
    {
        for (double& x : a_) x *= s;
        return self();
    }

    friend Derived operator+(Derived a, const Derived& b) { return a += b; }
    friend Derived operator-(Derived a, const Derived& b) { return a -= b; }
    friend Derived operator*(Derived a, double s) { return a *= s; }
    friend Derived operator*(double s, Derived a) { return a *= s; }
    friend Derived operator-(Derived a) { return a *= -1.0; }

protected:
    Derived& self() { return static_cast<Derived&>(*this); }

    std::size_t dim_ = 0;
    std::vector<double> a_;
};

// Endomorphism of the tangent space. Column j holds the image of basis vector j.
class LinOp : public DenseSquare<LinOp> {
public:
    using DenseSquare<LinOp>::DenseSquare;

    Vec apply(const Vec& x) const;
    friend Vec operator*(const LinOp& a, const Vec& x) { return a.apply(x); }
    friend LinOp operator*(const LinOp& a, const LinOp& b);

    // X -> u(X) w, i.e. the tensor u (x) w with u a covector.
    static LinOp outer(const Vec& covector, const Vec& vector);
};

// Bilinear form; entry (i, j) is b(e_i, e_j).
class Bilinear : public DenseSquare<Bilinear> {
public:
    using DenseSquare<Bilinear>::DenseSquare;

    double eval(const Vec& x, const Vec& y) const;
    // Covector b(x, .)
    Vec lower(const Vec& x) const;
    // (X, Y) -> b(A X, Y)
    Bilinear composed(const LinOp& a) const;
};

// g together with its inverse, so vectors can be raised and lowered.
// Construction fails with InvalidInput unless g is symmetric positive definite.
class Metric {
public:
    explicit Metric(Bilinear g);

    std::size_t dim() const { return g_.dim(); }
    const Bilinear& form() const { return g_; }
    double inner(const Vec& x, const Vec& y) const { return g_.eval(x, y); }
    double norm(const Vec& x) const { return std::sqrt(inner(x, x)); }
    Vec lower(const Vec& x) const { return g_.lower(x); }
    Vec raise(const Vec& covector) const;
    // Inverse metric g^{ij}
    const Bilinear& inverse() const { return inv_; }
    // Operator A with g(A X, Y) = b(X, Y).
    LinOp raise(const Bilinear& b) const;
    // Trace of a bilinear form with respect to g.
    double trace(const Bilinear& b) const;
    // g-orthonormal basis obtained by Gram-Schmidt on the coordinate basis.
    std::vector<Vec> orthonormal_frame() const;

private:
    Bilinear g_;
    Bilinear inv_;
};

// Vector-valued bilinear map; (i, j) holds the vector T(e_i, e_j).
class Tensor3 {
public:
    Tensor3() = default;
    explicit Tensor3(std::size_t dim) : dim_(dim), v_(dim * dim, Vec(dim)) {}

    std::size_t dim() const { return dim_; }
    Vec& operator()(std::size_t i, std::size_t j) { return v_[i * dim_ + j]; }
    const Vec& operator()(std::size_t i, std::size_t j) const { return v_[i * dim_ + j]; }
    Vec apply(const Vec& x, const Vec& y) const;
    double max_abs() const;

private:
    std::size_t dim_ = 0;
    std::vector<Vec> v_;
};

// Rank-4 array with T(i, j, k, l) = g(T(e_i, e_j) e_k, e_l).
// No symmetry is assumed; see the residual functions below.
class Tensor4 {
public:
    Tensor4() = default;
    explicit Tensor4(std::size_t dim) : dim_(dim), a_(dim * dim * dim * dim, 0.0) {}

    std::size_t dim() const { return dim_; }
    double& operator()(std::size_t i, std::size_t j, std::size_t k, std::size_t l)
    {
        return a_[index(i, j, k, l)];
    }
    double operator()(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const
    {
        return a_[index(i, j, k, l)];
    }
    std::span<const double> entries() const { return a_; }

    // Multilinear evaluation T(X, Y, Z, W).
    double eval(const Vec& x, const Vec& y, const Vec& z, const Vec& w) const;
    // The vector T(e_i, e_j) e_k, raised with the metric.
    Vec vector_value(std::size_t i, std::size_t j, std::size_t k, const Metric& g) const;
    // The vector T(X, Y) Z.
    Vec vector_value(const Vec& x, const Vec& y, const Vec& z, const Metric& g) const;
    // The endomorphism V -> T(X, Y) V.
    LinOp endomorphism(const Vec& x, const Vec& y, const Metric& g) const;

    double max_abs() const;
    bool is_finite() const;

    Tensor4& operator+=(const Tensor4& o);
    Tensor4& operator-=(const Tensor4& o);
    Tensor4& operator*=(double s);
    friend Tensor4 operator+(Tensor4 a, const Tensor4& b) { return a += b; }
    friend Tensor4 operator-(Tensor4 a, const Tensor4& b) { return a -= b; }
    friend Tensor4 operator*(Tensor4 a, double s) { return a *= s; }
    friend Tensor4 operator*(double s, Tensor4 a) { return a *= s; }

private:
    std::size_t index(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const
    {
        return ((i * dim_ + j) * dim_ + k) * dim_ + l;
    }

    std::size_t dim_ = 0;
    std::vector<double> a_;
};

// Fill a Tensor4 from a vector-valued trilinear expression (X, Y, Z) -> T(X, Y) Z,
// evaluated on the coordinate basis and lowered with g.
template <class Fn>
Tensor4 assemble_tensor(const Metric& g, Fn&& fn)
{
    const std::size_t d = g.dim();
    Tensor4 t(d);
    std::vector<Vec> basis;
    basis.reserve(d);
    for (std::size_t i = 0; i < d; ++i) basis.push_back(Vec::basis(d, i));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                const Vec low = g.lower(fn(basis[i], basis[j], basis[k]));
                for (std::size_t l = 0; l < d; ++l) t(i, j, k, l) = low[l];
            }
    return t;
}

// T(L., L., L., L.)
Tensor4 pullback(const Tensor4& t, const LinOp& l);

// (X, Y) -> sum_a T(E_a, X, Y, E_a) over a g-orthonormal frame.
// Throws InvalidInput when g is not positive definite.
Bilinear trace_first_slot(const Tensor4& t, const Bilinear& g);
Bilinear trace_first_slot(const Tensor4& t, const Metric& g);

// (X, Y) -> 1/2 tr(V -> phi T(X, phi Y) V)
Bilinear phi_trace(const Tensor4& t, const LinOp& phi, const Bilinear& g);
Bilinear phi_trace(const Tensor4& t, const LinOp& phi, const Metric& g);

// Frobenius norm of the entry array.
double tensor_norm(const Tensor4& t);
// tensor_norm(t) == 0 up to entry magnitude tol::kZeroEntry
bool is_zero(const Tensor4& t);

// Residuals (max |.| over the frame) of the Riemann-type symmetries.
double antisymmetry_residual_12(const Tensor4& t);
double antisymmetry_residual_34(const Tensor4& t);
double pair_symmetry_residual(const Tensor4& t);
double first_bianchi_residual(const Tensor4& t);

struct EigenDecomposition {
    std::vector<double> values;   // descending
    std::vector<Vec> vectors;     // g-orthonormal, vectors[i] pairs with values[i]
};

// Full eigendecomposition of a g-symmetric operator by cyclic Jacobi rotations.
// Throws InvalidInput when g A is asymmetric beyond 1e-10 or g is not positive definite.
EigenDecomposition sym_eigen(const LinOp& a, const Bilinear& g);

// Cholesky factor L (lower triangular, g = L L^T). Throws InvalidInput if g is
// not symmetric positive definite.
LinOp cholesky(const Bilinear& g);

// Eigenvalues of a symmetric matrix (Jacobi), descending, with eigenvectors as columns.
std::pair<std::vector<double>, LinOp> jacobi_eigen(const Bilinear& symmetric, double tolerance = 1e-12);

}  // namespace phlab
