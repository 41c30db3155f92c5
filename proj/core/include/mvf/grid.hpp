#ifndef MVF_GRID_HPP
#define MVF_GRID_HPP

#include <array>
#include <functional>
#include <vector>

#include "mvf/fields.hpp"
#include "mvf/geometry.hpp"

namespace mvf {

/// Real values on a uniform spatial lattice times uniform time levels over a
/// space-time cylinder. The lattice extends a collar of extra nodes beyond
/// the box on every side (so every ellipsoid stencil of every control stays
/// evaluable) and the first `initial_levels + 1` time levels sit at or below
/// the initial time (the initial collar, pinned to data).
class GridFunction {
  public:
    GridFunction() = default;
    GridFunction(int n, double h, const Vec& box_lo, const Vec& box_hi,
                 double collar_width, double t_base, double dt, int num_levels);

    int dim() const { return n_; }
    double spacing() const { return h_; }
    double dt() const { return dt_; }
    int collar_nodes() const { return collar_; }
    int levels() const { return static_cast<int>(values_.size()); }
    double time_of(int level) const { return t_base_ + level * dt_; }
    double t_base() const { return t_base_; }
    const Vec& box_lo() const { return lo_; }
    const Vec& box_hi() const { return hi_; }
    int shape(int axis) const { return shape_[axis]; }
    long node_count() const { return node_count_; }

    long flatten(const std::array<int, 3>& idx) const;
    std::array<int, 3> unflatten(long flat) const;
    Vec coord(const std::array<int, 3>& idx) const;
    Vec coord(long flat) const { return coord(unflatten(flat)); }

    /// Strictly inside the open box (collar and box-boundary nodes are not
    /// interior; they carry boundary data).
    bool interior(const std::array<int, 3>& idx) const;
    bool interior(long flat) const { return interior(unflatten(flat)); }

    double value(int level, long flat) const { return values_[level][flat]; }
    double& at(int level, long flat) { return values_[level][flat]; }

    void fill_level(int level, const SpaceTimeFn& fn);

    /// Multilinear interpolation in space at a fixed stored level.
    /// Throws OutOfDomain if x escapes the extended lattice.
    double interp_space(const Vec& x, int level) const;

    /// Space interpolation plus linear interpolation between time levels.
    /// Throws InvalidWindow for times below the first stored level or above
    /// the last (respecting max_level when nonnegative).
    double interp(const Vec& x, double t, int max_level = -1) const;

    /// Nearest lattice node index, clamped to the lattice.
    std::array<int, 3> nearest_node(const Vec& x) const;

    /// Lattice points within `radius` of `center` (used by max/min searches).
    void lattice_points_in_ball(const Vec& center, double radius, std::vector<Vec>* out) const;

  private:
    int n_ = 0;
    double h_ = 0.0;
    Vec lo_, hi_;
    int collar_ = 0;
    Vec origin_;  // coordinate of lattice index 0 on each axis
    std::array<int, 3> shape_{1, 1, 1};
    long node_count_ = 0;
    double t_base_ = 0.0, dt_ = 0.0;
    std::vector<std::vector<double>> values_;
};

/// SpaceTimeField view of a grid function; lookups beyond max_level (when
/// set) raise InvalidWindow, which is how marching enforces that a level
/// depends only on earlier ones.
class GridField final : public SpaceTimeField {
  public:
    explicit GridField(const GridFunction& g, int max_level = -1)
        : g_(g), max_level_(max_level) {}
    double eval(const Vec& x, double t) const override { return g_.interp(x, t, max_level_); }
    void append_lattice_points_in_ball(const Vec& center, double radius,
                                       std::vector<Vec>* out) const override {
        g_.lattice_points_in_ball(center, radius, out);
    }

  private:
    const GridFunction& g_;
    int max_level_;
};

}  // namespace mvf

#endif
