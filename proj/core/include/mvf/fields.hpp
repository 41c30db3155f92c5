#ifndef MVF_FIELDS_HPP
#define MVF_FIELDS_HPP

#include <functional>
#include <utility>
#include <vector>

#include "mvf/geometry.hpp"

namespace mvf {

using SpaceTimeFn = std::function<double(const Vec&, double)>;
using SpaceFn = std::function<double(const Vec&)>;

// A scalar function of (x, t): either an analytic callable or a view into a
// grid function. Averaging, operators, and the consistency checker are all
// written against this interface.
class SpaceTimeField {
  public:
    virtual ~SpaceTimeField() = default;
    virtual double eval(const Vec& x, double t) const = 0;

    // Grid-backed fields contribute their lattice points inside a ball as
    // extra candidates for max/min searches; analytic fields contribute none.
    virtual void append_lattice_points_in_ball(const Vec& /*center*/, double /*radius*/,
                                               std::vector<Vec>* /*out*/) const {}
};

class CallableField final : public SpaceTimeField {
  public:
    explicit CallableField(SpaceTimeFn f) : f_(std::move(f)) {}
    double eval(const Vec& x, double t) const override { return f_(x, t); }

  private:
    SpaceTimeFn f_;
};

}  // namespace mvf

#endif
