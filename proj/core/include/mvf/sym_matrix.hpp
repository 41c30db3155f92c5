#ifndef MVF_SYM_MATRIX_HPP
#define MVF_SYM_MATRIX_HPP

#include <initializer_list>

#include "mvf/geometry.hpp"

namespace mvf {

/// Dense symmetric n x n matrix, n <= 8, with a single stored entry per
/// unordered index pair (packed lower triangle), so symmetry is structural.
class SymMatrix {
  public:
    SymMatrix() = default;
    explicit SymMatrix(int n);

    static SymMatrix identity(int n);
    static SymMatrix diag(const Vec& d);
    static SymMatrix diag(std::initializer_list<double> d) { return diag(Vec(d)); }
    /// Rank-one projector v v^t.
    static SymMatrix outer(const Vec& v);
    /// Q diag(d) Q^t for an orthonormal frame Q (columns).
    static SymMatrix from_frame(const Mat& q, const Vec& d);

    int dim() const { return n_; }
    double operator()(int i, int j) const { return a_[pack(i, j)]; }
    void set(int i, int j, double v) { a_[pack(i, j)] = v; }
    void add(int i, int j, double v) { a_[pack(i, j)] += v; }

    Vec apply(const Vec& x) const;          // M x
    double quad_form(const Vec& y) const;   // <M y, y>
    double trace() const;
    double max_abs() const;                 // entrywise sup norm
    bool finite() const;

    SymMatrix scaled(double c) const;
    SymMatrix plus_identity(double eta) const;  // M + eta I

  private:
    int pack(int i, int j) const;
    int n_ = 0;
    // Lower triangle, row-major: (i,j) with j <= i at i(i+1)/2 + j.
    std::array<double, kMaxDim*(kMaxDim + 1) / 2> a_{};
};

/// trace(A^t M A) for symmetric A, M.
double conjugate_trace(const SymMatrix& a, const SymMatrix& m);

struct EigenSystem {
    Vec values;   // ascending
    Mat vectors;  // orthonormal columns, vectors.col(i) pairs with values[i]
};

/// Full eigendecomposition of a symmetric matrix. Throws InvalidInput on
/// non-finite entries.
EigenSystem eigendecompose(const SymMatrix& m);

/// Scale-relative threshold separating the positive-definite / semidefinite /
/// indefinite branches: 1e-10 * (1 + ||M||_inf).
double psd_tolerance(const SymMatrix& m);

/// The time-extended block-diagonal matrix diag(b, A) of dimension n+1; its
/// determinant is b * det(A).
struct BlockTimeMatrix {
    double b = 1.0;  // time stretch, positive
    SymMatrix space;

    int dim() const { return space.dim() + 1; }
    SymMatrix dense() const;  // materialize the (n+1) x (n+1) matrix
};

}  // namespace mvf

#endif
