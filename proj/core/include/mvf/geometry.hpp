#ifndef MVF_GEOMETRY_HPP
#define MVF_GEOMETRY_HPP

#include <algorithm>
#include <array>
#include <cassert>
#include <cmath>
#include <cstddef>
#include <initializer_list>

namespace mvf {

// Dense symmetric matrices go up to 8x8 (space dim 3 plus the time-extended
// block matrices), so fixed-capacity stack storage is enough everywhere.
inline constexpr int kMaxDim = 8;

// Small fixed-capacity vector. Value type for spatial points, eigenvalue
// lists and stretch vectors.
class Vec {
  public:
    Vec() = default;
    explicit Vec(int n) : n_(n) {
        assert(n >= 0 && n <= kMaxDim);
        a_.fill(0.0);
    }
    Vec(std::initializer_list<double> xs) : n_(static_cast<int>(xs.size())) {
        assert(n_ <= kMaxDim);
        a_.fill(0.0);
        int i = 0;
        for (double x : xs) a_[i++] = x;
    }

    int dim() const { return n_; }
    double operator[](int i) const {
        assert(i >= 0 && i < n_);
        return a_[i];
    }
    double& operator[](int i) {
        assert(i >= 0 && i < n_);
        return a_[i];
    }

    const double* begin() const { return a_.data(); }
    const double* end() const { return a_.data() + n_; }
    double* begin() { return a_.data(); }
    double* end() { return a_.data() + n_; }

    Vec& operator+=(const Vec& o) {
        assert(o.n_ == n_);
        for (int i = 0; i < n_; ++i) a_[i] += o.a_[i];
        return *this;
    }
    Vec& operator-=(const Vec& o) {
        assert(o.n_ == n_);
        for (int i = 0; i < n_; ++i) a_[i] -= o.a_[i];
        return *this;
    }
    Vec& operator*=(double c) {
        for (int i = 0; i < n_; ++i) a_[i] *= c;
        return *this;
    }

    friend Vec operator+(Vec a, const Vec& b) { return a += b; }
    friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
    friend Vec operator*(double c, Vec a) { return a *= c; }

    double dot(const Vec& o) const {
        assert(o.n_ == n_);
        double s = 0.0;
        for (int i = 0; i < n_; ++i) s += a_[i] * o.a_[i];
        return s;
    }
    double norm2() const { return dot(*this); }
    double norm() const { return std::sqrt(norm2()); }
    double max_abs() const {
        double m = 0.0;
        for (int i = 0; i < n_; ++i) m = std::max(m, std::abs(a_[i]));
        return m;
    }
    bool finite() const {
        for (int i = 0; i < n_; ++i)
            if (!std::isfinite(a_[i])) return false;
        return true;
    }

  private:
    int n_ = 0;
    std::array<double, kMaxDim> a_{};
};

// Small dense matrix, column-major. Used for eigenvector frames and
// rotations; not a general linear-algebra type.
class Mat {
  public:
    Mat() = default;
    Mat(int rows, int cols) : r_(rows), c_(cols) {
        assert(rows >= 0 && rows <= kMaxDim && cols >= 0 && cols <= kMaxDim);
        a_.fill(0.0);
    }
    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    int rows() const { return r_; }
    int cols() const { return c_; }
    double operator()(int i, int j) const {
        assert(i >= 0 && i < r_ && j >= 0 && j < c_);
        return a_[static_cast<std::size_t>(j) * kMaxDim + i];
    }
    double& operator()(int i, int j) {
        assert(i >= 0 && i < r_ && j >= 0 && j < c_);
        return a_[static_cast<std::size_t>(j) * kMaxDim + i];
    }

    Vec col(int j) const {
        Vec v(r_);
        for (int i = 0; i < r_; ++i) v[i] = (*this)(i, j);
        return v;
    }
    void set_col(int j, const Vec& v) {
        assert(v.dim() == r_);
        for (int i = 0; i < r_; ++i) (*this)(i, j) = v[i];
    }

    Vec apply(const Vec& x) const {  // M x
        assert(x.dim() == c_);
        Vec y(r_);
        for (int j = 0; j < c_; ++j)
            for (int i = 0; i < r_; ++i) y[i] += (*this)(i, j) * x[j];
        return y;
    }
    Vec apply_transposed(const Vec& x) const {  // M^t x
        assert(x.dim() == r_);
        Vec y(c_);
        for (int j = 0; j < c_; ++j) {
            double s = 0.0;
            for (int i = 0; i < r_; ++i) s += (*this)(i, j) * x[i];
            y[j] = s;
        }
        return y;
    }
    Mat times(const Mat& o) const {
        assert(c_ == o.r_);
        Mat m(r_, o.c_);
        for (int j = 0; j < o.c_; ++j)
            for (int k = 0; k < c_; ++k) {
                const double okj = o(k, j);
                for (int i = 0; i < r_; ++i) m(i, j) += (*this)(i, k) * okj;
            }
        return m;
    }

  private:
    int r_ = 0, c_ = 0;
    std::array<double, kMaxDim * kMaxDim> a_{};
};

struct SpacetimePoint {
    Vec x;
    double t = 0.0;
};

}  // namespace mvf

#endif
