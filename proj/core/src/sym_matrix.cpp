#include "mvf/sym_matrix.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "mvf/errors.hpp"

namespace mvf {

SymMatrix::SymMatrix(int n) : n_(n) {
    if (n < 1 || n > kMaxDim) throw InvalidInput("SymMatrix: dim out of range");
    a_.fill(0.0);
}

int SymMatrix::pack(int i, int j) const {
    assert(i >= 0 && i < n_ && j >= 0 && j < n_);
    if (j > i) std::swap(i, j);
    return i * (i + 1) / 2 + j;
}

SymMatrix SymMatrix::identity(int n) {
    SymMatrix m(n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1.0);
    return m;
}

SymMatrix SymMatrix::diag(const Vec& d) {
    SymMatrix m(d.dim());
    for (int i = 0; i < d.dim(); ++i) m.set(i, i, d[i]);
    return m;
}

SymMatrix SymMatrix::outer(const Vec& v) {
    SymMatrix m(v.dim());
    for (int i = 0; i < v.dim(); ++i)
        for (int j = 0; j <= i; ++j) m.set(i, j, v[i] * v[j]);
    return m;
}

SymMatrix SymMatrix::from_frame(const Mat& q, const Vec& d) {
    assert(q.rows() == d.dim() && q.cols() == d.dim());
    const int n = d.dim();
    SymMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) {
            double s = 0.0;
            for (int k = 0; k < n; ++k) s += q(i, k) * d[k] * q(j, k);
            m.set(i, j, s);
        }
    return m;
}

Vec SymMatrix::apply(const Vec& x) const {
    assert(x.dim() == n_);
    Vec y(n_);
    for (int i = 0; i < n_; ++i) {
        double s = 0.0;
        for (int j = 0; j < n_; ++j) s += (*this)(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

double SymMatrix::quad_form(const Vec& y) const { return apply(y).dot(y); }

double SymMatrix::trace() const {
    double s = 0.0;
    for (int i = 0; i < n_; ++i) s += (*this)(i, i);
    return s;
}

double SymMatrix::max_abs() const {
    double m = 0.0;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j <= i; ++j) m = std::max(m, std::abs((*this)(i, j)));
    return m;
}

bool SymMatrix::finite() const {
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j <= i; ++j)
            if (!std::isfinite((*this)(i, j))) return false;
    return true;
}

SymMatrix SymMatrix::scaled(double c) const {
    SymMatrix m(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j <= i; ++j) m.set(i, j, c * (*this)(i, j));
    return m;
}

SymMatrix SymMatrix::plus_identity(double eta) const {
    SymMatrix m = *this;
    for (int i = 0; i < n_; ++i) m.add(i, i, eta);
    return m;
}

double conjugate_trace(const SymMatrix& a, const SymMatrix& m) {
    assert(a.dim() == m.dim());
    const int n = a.dim();
    // trace(A^t M A) = sum_{i,j} (M A)_{ij} A_{ij} for symmetric A.
    double s = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double ma = 0.0;
            for (int k = 0; k < n; ++k) ma += m(i, k) * a(k, j);
            s += ma * a(i, j);
        }
    return s;
}

EigenSystem eigendecompose(const SymMatrix& m) {
    if (!m.finite()) throw InvalidInput("eigendecompose: non-finite entries");
    const int n = m.dim();
    Eigen::MatrixXd d(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) d(i, j) = m(i, j);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(d);
    if (es.info() != Eigen::Success)
        throw InvalidInput("eigendecompose: solver failed");
    EigenSystem sys;
    sys.values = Vec(n);
    sys.vectors = Mat(n, n);
    for (int i = 0; i < n; ++i) {
        sys.values[i] = es.eigenvalues()(i);  // Eigen returns ascending order
        for (int r = 0; r < n; ++r) sys.vectors(r, i) = es.eigenvectors()(r, i);
    }
    return sys;
}

double psd_tolerance(const SymMatrix& m) { return 1e-10 * (1.0 + m.max_abs()); }

SymMatrix BlockTimeMatrix::dense() const {
    const int n = space.dim();
    SymMatrix m(n + 1);
    m.set(0, 0, b);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) m.set(i + 1, j + 1, space(i, j));
    return m;
}

}  // namespace mvf
