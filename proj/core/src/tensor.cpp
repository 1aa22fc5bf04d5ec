#include "phlab/tensor.hpp"

#include "phlab/errors.hpp"
#include "phlab/tolerances.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace phlab {

namespace {

void require_same_dim(std::size_t a, std::size_t b, const char* what)
{
    if (a != b) throw InvalidInput(std::string(what) + ": dimension mismatch");
}

}  // namespace

// --- Vec -------------------------------------------------------------------

Vec& Vec::operator+=(const Vec& o)
{
    require_same_dim(dim(), o.dim(), "Vec +=");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

Vec& Vec::operator-=(const Vec& o)
{
    require_same_dim(dim(), o.dim(), "Vec -=");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

Vec& Vec::operator*=(double s)
{
    for (double& x : c_) x *= s;
    return *this;
}

double Vec::dot(const Vec& o) const
{
    require_same_dim(dim(), o.dim(), "Vec::dot");
    return std::inner_product(c_.begin(), c_.end(), o.c_.begin(), 0.0);
}

double Vec::max_abs() const
{
    double m = 0.0;
    for (double x : c_) m = std::max(m, std::abs(x));
    return m;
}

bool Vec::is_finite() const
{
    return std::all_of(c_.begin(), c_.end(), [](double x) { return std::isfinite(x); });
}

// --- LinOp / Bilinear --------------------------------------------------------

Vec LinOp::apply(const Vec& x) const
{
    require_same_dim(dim(), x.dim(), "LinOp::apply");
    Vec y(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < dim_; ++j) s += (*this)(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

LinOp operator*(const LinOp& a, const LinOp& b)
{
    require_same_dim(a.dim(), b.dim(), "LinOp *");
    const std::size_t d = a.dim();
    LinOp c(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < d; ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

LinOp LinOp::outer(const Vec& covector, const Vec& vector)
{
    require_same_dim(covector.dim(), vector.dim(), "LinOp::outer");
    const std::size_t d = vector.dim();
    LinOp m(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) m(i, j) = vector[i] * covector[j];
    return m;
}

double Bilinear::eval(const Vec& x, const Vec& y) const
{
    require_same_dim(dim(), x.dim(), "Bilinear::eval");
    require_same_dim(dim(), y.dim(), "Bilinear::eval");
    double s = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i] == 0.0) continue;
        double row = 0.0;
        for (std::size_t j = 0; j < dim_; ++j) row += (*this)(i, j) * y[j];
        s += x[i] * row;
    }
    return s;
}

Vec Bilinear::lower(const Vec& x) const
{
    require_same_dim(dim(), x.dim(), "Bilinear::lower");
    Vec c(dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < dim_; ++i) s += x[i] * (*this)(i, j);
        c[j] = s;
    }
    return c;
}

Bilinear Bilinear::composed(const LinOp& a) const
{
    // b(A e_i, e_j) = sum_k A(k, i) b(k, j)
    require_same_dim(dim(), a.dim(), "Bilinear::composed");
    Bilinear c(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < dim_; ++k) s += a(k, i) * (*this)(k, j);
            c(i, j) = s;
        }
    return c;
}

// --- Cholesky / Metric -------------------------------------------------------

LinOp cholesky(const Bilinear& g)
{
    const std::size_t d = g.dim();
    if (!g.is_finite()) throw InvalidInput("metric has non-finite entries");
    const double scale = std::max(1.0, g.max_abs());
    if (g.asymmetry() > tol::kSymmetry * scale) throw InvalidInput("metric is not symmetric");
    LinOp l(d);
    for (std::size_t j = 0; j < d; ++j) {
        double diag = g(j, j);
        for (std::size_t k = 0; k < j; ++k) diag -= l(j, k) * l(j, k);
        if (!(diag > 0.0)) throw InvalidInput("metric is not positive definite");
        const double ljj = std::sqrt(diag);
        l(j, j) = ljj;
        for (std::size_t i = j + 1; i < d; ++i) {
            double s = g(i, j);
            for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
            l(i, j) = s / ljj;
        }
    }
    return l;
}

namespace {

// Inverse of a lower-triangular matrix by forward substitution.
LinOp lower_inverse(const LinOp& l)
{
    const std::size_t d = l.dim();
    LinOp inv(d);
    for (std::size_t col = 0; col < d; ++col) {
        for (std::size_t i = col; i < d; ++i) {
            double s = (i == col) ? 1.0 : 0.0;
            for (std::size_t k = col; k < i; ++k) s -= l(i, k) * inv(k, col);
            inv(i, col) = s / l(i, i);
        }
    }
    return inv;
}

}  // namespace

Metric::Metric(Bilinear g) : g_(std::move(g))
{
    const LinOp l = cholesky(g_);
    const LinOp linv = lower_inverse(l);
    // g^{-1} = L^{-T} L^{-1}
    const std::size_t d = g_.dim();
    inv_ = Bilinear(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            double s = 0.0;
            for (std::size_t k = std::max(i, j); k < d; ++k) s += linv(k, i) * linv(k, j);
            inv_(i, j) = s;
        }
}

Vec Metric::raise(const Vec& covector) const
{
    return inv_.lower(covector);
}

LinOp Metric::raise(const Bilinear& b) const
{
    // g(A e_i, e_j) = b(i, j)  =>  A(m, i) = sum_j g^{mj} b(i, j)
    const std::size_t d = dim();
    LinOp a(d);
    for (std::size_t m = 0; m < d; ++m)
        for (std::size_t i = 0; i < d; ++i) {
            double s = 0.0;
            for (std::size_t j = 0; j < d; ++j) s += inv_(m, j) * b(i, j);
            a(m, i) = s;
        }
    return a;
}

double Metric::trace(const Bilinear& b) const
{
    double s = 0.0;
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < dim(); ++j) s += inv_(i, j) * b(i, j);
    return s;
}

std::vector<Vec> Metric::orthonormal_frame() const
{
    const std::size_t d = dim();
    std::vector<Vec> frame;
    frame.reserve(d);
    for (std::size_t i = 0; i < d; ++i) {
        Vec v = Vec::basis(d, i);
        for (const Vec& e : frame) v -= inner(v, e) * e;
        // second pass keeps the frame orthonormal to working precision
        for (const Vec& e : frame) v -= inner(v, e) * e;
        v *= 1.0 / norm(v);
        frame.push_back(std::move(v));
    }
    return frame;
}

// --- Tensor3 -----------------------------------------------------------------

Vec Tensor3::apply(const Vec& x, const Vec& y) const
{
    Vec out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i] == 0.0) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            const double w = x[i] * y[j];
            if (w != 0.0) out += w * (*this)(i, j);
        }
    }
    return out;
}

double Tensor3::max_abs() const
{
    double m = 0.0;
    for (const Vec& v : v_) m = std::max(m, v.max_abs());
    return m;
}

// --- Tensor4 -----------------------------------------------------------------

double Tensor4::eval(const Vec& x, const Vec& y, const Vec& z, const Vec& w) const
{
    double s = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i] == 0.0) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            const double xy = x[i] * y[j];
            if (xy == 0.0) continue;
            for (std::size_t k = 0; k < dim_; ++k) {
                const double xyz = xy * z[k];
                if (xyz == 0.0) continue;
                for (std::size_t l = 0; l < dim_; ++l) s += xyz * w[l] * (*this)(i, j, k, l);
            }
        }
    }
    return s;
}

Vec Tensor4::vector_value(std::size_t i, std::size_t j, std::size_t k, const Metric& g) const
{
    Vec low(dim_);
    for (std::size_t l = 0; l < dim_; ++l) low[l] = (*this)(i, j, k, l);
    return g.raise(low);
}

Vec Tensor4::vector_value(const Vec& x, const Vec& y, const Vec& z, const Metric& g) const
{
    Vec low(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i] == 0.0) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            const double xy = x[i] * y[j];
            if (xy == 0.0) continue;
            for (std::size_t k = 0; k < dim_; ++k) {
                const double xyz = xy * z[k];
                if (xyz == 0.0) continue;
                for (std::size_t l = 0; l < dim_; ++l) low[l] += xyz * (*this)(i, j, k, l);
            }
        }
    }
    return g.raise(low);
}

LinOp Tensor4::endomorphism(const Vec& x, const Vec& y, const Metric& g) const
{
    LinOp e(dim_);
    for (std::size_t a = 0; a < dim_; ++a) {
        const Vec col = vector_value(x, y, Vec::basis(dim_, a), g);
        for (std::size_t l = 0; l < dim_; ++l) e(l, a) = col[l];
    }
    return e;
}

double Tensor4::max_abs() const
{
    double m = 0.0;
    for (double x : a_) m = std::max(m, std::abs(x));
    return m;
}

bool Tensor4::is_finite() const
{
    return std::all_of(a_.begin(), a_.end(), [](double x) { return std::isfinite(x); });
}

Tensor4& Tensor4::operator+=(const Tensor4& o)
{
    require_same_dim(dim_, o.dim_, "Tensor4 +=");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

Tensor4& Tensor4::operator-=(const Tensor4& o)
{
    require_same_dim(dim_, o.dim_, "Tensor4 -=");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

Tensor4& Tensor4::operator*=(double s)
{
    for (double& x : a_) x *= s;
    return *this;
}

Tensor4 pullback(const Tensor4& t, const LinOp& l)
{
    // Contract one slot at a time: d^5 per pass instead of d^8.
    const std::size_t d = t.dim();
    require_same_dim(d, l.dim(), "pullback");
    Tensor4 cur = t;
    for (int slot = 0; slot < 4; ++slot) {
        Tensor4 next(d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                for (std::size_t k = 0; k < d; ++k)
                    for (std::size_t m = 0; m < d; ++m) {
                        double s = 0.0;
                        for (std::size_t a = 0; a < d; ++a) {
                            switch (slot) {
                            case 0: s += l(a, i) * cur(a, j, k, m); break;
                            case 1: s += l(a, j) * cur(i, a, k, m); break;
                            case 2: s += l(a, k) * cur(i, j, a, m); break;
                            default: s += l(a, m) * cur(i, j, k, a); break;
                            }
                        }
                        next(i, j, k, m) = s;
                    }
        cur = std::move(next);
    }
    return cur;
}

Bilinear trace_first_slot(const Tensor4& t, const Bilinear& g)
{
    return trace_first_slot(t, Metric(g));
}

Bilinear trace_first_slot(const Tensor4& t, const Metric& g)
{
    // s(x, y) = sum_{a,l} g^{la} T(a, x, y, l)
    const std::size_t d = t.dim();
    require_same_dim(d, g.dim(), "trace_first_slot");
    const Bilinear& inv = g.inverse();
    Bilinear s(d);
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t y = 0; y < d; ++y) {
            double acc = 0.0;
            for (std::size_t a = 0; a < d; ++a)
                for (std::size_t l = 0; l < d; ++l) acc += inv(l, a) * t(a, x, y, l);
            s(x, y) = acc;
        }
    return s;
}

Bilinear phi_trace(const Tensor4& t, const LinOp& phi, const Bilinear& g)
{
    return phi_trace(t, phi, Metric(g));
}

Bilinear phi_trace(const Tensor4& t, const LinOp& phi, const Metric& g)
{
    // k(x, y) = 1/2 sum_j phi(j, y) sum_{a,l,m} phi(a, l) g^{lm} T(x, j, a, m)
    const std::size_t d = t.dim();
    require_same_dim(d, g.dim(), "phi_trace");
    require_same_dim(d, phi.dim(), "phi_trace");
    const Bilinear& inv = g.inverse();
    // w(a, m) = sum_l phi(a, l) g^{lm}
    Bilinear w(d);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t m = 0; m < d; ++m) {
            double s = 0.0;
            for (std::size_t l = 0; l < d; ++l) s += phi(a, l) * inv(l, m);
            w(a, m) = s;
        }
    // c(x, j) = sum_{a,m} w(a, m) T(x, j, a, m)
    Bilinear c(d);
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t j = 0; j < d; ++j) {
            double s = 0.0;
            for (std::size_t a = 0; a < d; ++a)
                for (std::size_t m = 0; m < d; ++m) s += w(a, m) * t(x, j, a, m);
            c(x, j) = s;
        }
    Bilinear k(d);
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t y = 0; y < d; ++y) {
            double s = 0.0;
            for (std::size_t j = 0; j < d; ++j) s += phi(j, y) * c(x, j);
            k(x, y) = 0.5 * s;
        }
    return k;
}

double tensor_norm(const Tensor4& t)
{
    double s = 0.0;
    for (double x : t.entries()) s += x * x;
    return std::sqrt(s);
}

bool is_zero(const Tensor4& t)
{
    return t.max_abs() <= tol::kZeroEntry;
}

double antisymmetry_residual_12(const Tensor4& t)
{
    const std::size_t d = t.dim();
    double m = 0.0;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k)
                for (std::size_t l = 0; l < d; ++l)
                    m = std::max(m, std::abs(t(i, j, k, l) + t(j, i, k, l)));
    return m;
}

double antisymmetry_residual_34(const Tensor4& t)
{
    const std::size_t d = t.dim();
    double m = 0.0;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k)
                for (std::size_t l = 0; l < d; ++l)
                    m = std::max(m, std::abs(t(i, j, k, l) + t(i, j, l, k)));
    return m;
}

double pair_symmetry_residual(const Tensor4& t)
{
    const std::size_t d = t.dim();
    double m = 0.0;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k)
                for (std::size_t l = 0; l < d; ++l)
                    m = std::max(m, std::abs(t(i, j, k, l) - t(k, l, i, j)));
    return m;
}

double first_bianchi_residual(const Tensor4& t)
{
    const std::size_t d = t.dim();
    double m = 0.0;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k)
                for (std::size_t l = 0; l < d; ++l)
                    m = std::max(m, std::abs(t(i, j, k, l) + t(j, k, i, l) + t(k, i, j, l)));
    return m;
}

// --- eigensolver -------------------------------------------------------------

std::pair<std::vector<double>, LinOp> jacobi_eigen(const Bilinear& symmetric, double tolerance)
{
    const std::size_t d = symmetric.dim();
    Bilinear a = symmetric;
    LinOp v = LinOp::identity(d);

    auto off_norm = [&] {
        double s = 0.0;
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = i + 1; j < d; ++j) s += a(i, j) * a(i, j);
        return std::sqrt(2.0 * s);
    };
    const double scale = std::max(1.0, a.frobenius_norm());

    constexpr int kMaxSweeps = 100;
    for (int sweep = 0; sweep < kMaxSweeps && off_norm() > tolerance * scale; ++sweep) {
        for (std::size_t p = 0; p + 1 < d; ++p)
            for (std::size_t q = p + 1; q < d; ++q) {
                const double apq = a(p, q);
                if (std::abs(apq) < 1e-300) continue;
                // Rotation angle zeroing a(p, q) (Rutishauser's stable form).
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < d; ++k) {
                    const double akp = a(k, p);
                    const double akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < d; ++k) {
                    const double apk = a(p, k);
                    const double aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                for (std::size_t k = 0; k < d; ++k) {
                    const double vkp = v(k, p);
                    const double vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
    }

    std::vector<std::size_t> order(d);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a(i, i) > a(j, j); });
    std::vector<double> values(d);
    LinOp vectors(d);
    for (std::size_t c = 0; c < d; ++c) {
        values[c] = a(order[c], order[c]);
        for (std::size_t r = 0; r < d; ++r) vectors(r, c) = v(r, order[c]);
    }
    return {std::move(values), std::move(vectors)};
}

EigenDecomposition sym_eigen(const LinOp& a, const Bilinear& g)
{
    const std::size_t d = a.dim();
    require_same_dim(d, g.dim(), "sym_eigen");
    if (!a.is_finite()) throw InvalidInput("sym_eigen: non-finite operator");

    // g-symmetry of A means the form g(A., .) is symmetric.
    const Bilinear ga = g.composed(a);
    if (ga.asymmetry() > 1e-10) throw InvalidInput("sym_eigen: operator is not g-symmetric");

    // With g = L L^T, C = L^T A L^{-T} is symmetric and shares A's spectrum.
    const LinOp l = cholesky(g);
    const LinOp linv = lower_inverse(l);
    const LinOp c = l.transposed() * a * linv.transposed();
    Bilinear sym(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) sym(i, j) = 0.5 * (c(i, j) + c(j, i));

    auto [values, w] = jacobi_eigen(sym, 1e-12);
    const LinOp v = linv.transposed() * w;

    EigenDecomposition out;
    out.values = std::move(values);
    out.vectors.reserve(d);
    for (std::size_t col = 0; col < d; ++col) {
        Vec e(d);
        for (std::size_t r = 0; r < d; ++r) e[r] = v(r, col);
        out.vectors.push_back(std::move(e));
    }
    return out;
}

}  // namespace phlab
