#include "mvf/grid.hpp"

#include <cmath>
#include <sstream>

#include "mvf/errors.hpp"

namespace mvf {

GridFunction::GridFunction(int n, double h, const Vec& box_lo, const Vec& box_hi,
                           double collar_width, double t_base, double dt, int num_levels)
    : n_(n), h_(h), lo_(box_lo), hi_(box_hi), t_base_(t_base), dt_(dt) {
    if (n < 1 || n > 3) throw InvalidInput("GridFunction: n must be in {1,2,3}");
    if (!(h > 0.0)) throw InvalidInput("GridFunction: h must be positive");
    if (!(dt > 0.0)) throw InvalidInput("GridFunction: dt must be positive");
    if (num_levels < 1) throw InvalidInput("GridFunction: need at least one level");
    collar_ = static_cast<int>(std::ceil(collar_width / h - 1e-9));
    if (collar_ < 0) collar_ = 0;

    origin_ = Vec(n);
    node_count_ = 1;
    for (int i = 0; i < n; ++i) {
        const double span = box_hi[i] - box_lo[i];
        const int cells = static_cast<int>(std::lround(span / h));
        if (cells < 2 || std::abs(cells * h - span) > 1e-9 * (1.0 + std::abs(span)))
            throw InvalidInput("GridFunction: box must span an integral number (>= 2) of cells");
        shape_[i] = cells + 1 + 2 * collar_;
        origin_[i] = box_lo[i] - collar_ * h;
        node_count_ *= shape_[i];
    }
    values_.assign(num_levels, std::vector<double>(node_count_, 0.0));
}

long GridFunction::flatten(const std::array<int, 3>& idx) const {
    long f = 0;
    for (int i = 0; i < n_; ++i) f = f * shape_[i] + idx[i];
    return f;
}

std::array<int, 3> GridFunction::unflatten(long flat) const {
    std::array<int, 3> idx{0, 0, 0};
    for (int i = n_ - 1; i >= 0; --i) {
        idx[i] = static_cast<int>(flat % shape_[i]);
        flat /= shape_[i];
    }
    return idx;
}

Vec GridFunction::coord(const std::array<int, 3>& idx) const {
    Vec x(n_);
    for (int i = 0; i < n_; ++i) x[i] = origin_[i] + idx[i] * h_;
    return x;
}

bool GridFunction::interior(const std::array<int, 3>& idx) const {
    for (int i = 0; i < n_; ++i) {
        const double xi = origin_[i] + idx[i] * h_;
        if (xi <= lo_[i] + 1e-12 || xi >= hi_[i] - 1e-12) return false;
    }
    return true;
}

void GridFunction::fill_level(int level, const SpaceTimeFn& fn) {
    const double t = time_of(level);
    for (long f = 0; f < node_count_; ++f) values_[level][f] = fn(coord(f), t);
}

double GridFunction::interp_space(const Vec& x, int level) const {
    std::array<int, 3> base{0, 0, 0};
    std::array<double, 3> frac{0.0, 0.0, 0.0};
    for (int i = 0; i < n_; ++i) {
        const double xi = (x[i] - origin_[i]) / h_;
        if (xi < -1e-9 || xi > shape_[i] - 1 + 1e-9) {
            std::ostringstream os;
            os << "interp_space: point escapes the collar on axis " << i << " (x[" << i
               << "] = " << x[i] << ")";
            throw OutOfDomain(os.str());
        }
        int k = static_cast<int>(std::floor(xi));
        if (k < 0) k = 0;
        if (k > shape_[i] - 2) k = shape_[i] - 2;
        base[i] = k;
        frac[i] = std::min(1.0, std::max(0.0, xi - k));
    }
    const std::vector<double>& lvl = values_[level];
    double s = 0.0;
    const int corners = 1 << n_;
    for (int c = 0; c < corners; ++c) {
        double w = 1.0;
        std::array<int, 3> idx = base;
        for (int i = 0; i < n_; ++i) {
            if (c & (1 << i)) {
                idx[i] += 1;
                w *= frac[i];
            } else {
                w *= 1.0 - frac[i];
            }
        }
        s += w * lvl[flatten(idx)];
    }
    return s;
}

double GridFunction::interp(const Vec& x, double t, int max_level) const {
    const int last = max_level >= 0 ? max_level : levels() - 1;
    const double j = (t - t_base_) / dt_;
    if (j < -1e-6) throw InvalidWindow("interp: time below the stored initial collar");
    if (j > last + 1e-6)
        throw InvalidWindow("interp: time beyond the last available level");
    if (last == 0) return interp_space(x, 0);
    int j0 = static_cast<int>(std::floor(j));
    if (j0 < 0) j0 = 0;
    if (j0 > last - 1) j0 = last - 1;
    const double frac = std::min(1.0, std::max(0.0, j - j0));
    const double a = interp_space(x, j0);
    if (frac == 0.0) return a;
    const double b = interp_space(x, j0 + 1);
    return (1.0 - frac) * a + frac * b;
}

std::array<int, 3> GridFunction::nearest_node(const Vec& x) const {
    std::array<int, 3> idx{0, 0, 0};
    for (int i = 0; i < n_; ++i) {
        int k = static_cast<int>(std::lround((x[i] - origin_[i]) / h_));
        idx[i] = std::min(shape_[i] - 1, std::max(0, k));
    }
    return idx;
}

void GridFunction::lattice_points_in_ball(const Vec& center, double radius,
                                          std::vector<Vec>* out) const {
    std::array<int, 3> lo{0, 0, 0}, hi{0, 0, 0};
    for (int i = 0; i < n_; ++i) {
        lo[i] = std::max(0, static_cast<int>(std::ceil((center[i] - radius - origin_[i]) / h_)));
        hi[i] = std::min(shape_[i] - 1,
                         static_cast<int>(std::floor((center[i] + radius - origin_[i]) / h_)));
        if (lo[i] > hi[i]) return;
    }
    const double r2 = radius * radius;
    std::array<int, 3> idx = lo;
    while (true) {
        Vec x = coord(idx);
        if ((x - center).norm2() <= r2 * (1.0 + 1e-12)) out->push_back(x);
        int axis = n_ - 1;
        while (axis >= 0) {
            if (++idx[axis] <= hi[axis]) break;
            idx[axis] = lo[axis];
            --axis;
        }
        if (axis < 0) break;
    }
}

}  // namespace mvf
