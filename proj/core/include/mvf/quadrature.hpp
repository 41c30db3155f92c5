#ifndef MVF_QUADRATURE_HPP
#define MVF_QUADRATURE_HPP

#include <vector>

#include "mvf/fields.hpp"
#include "mvf/sym_matrix.hpp"

namespace mvf {

// Averaging rules over the unit ball / unit sphere, exact on all monomials
// of total degree <= 3. Degree-3 exactness is exactly what makes the
// discrete trace identities
//     sum_i w_i <M y_i, y_i> = trace(M)/(n+2)   (ball)
//     sum_i w_i <M y_i, y_i> = trace(M)/n       (sphere)
// hold without error, so they are structural invariants, not tolerances.
// Node sets are closed under y -> -y with equal weights, and weights are
// positive and sum to one.

struct BallRule {
    int dim = 0;
    int level = 1;
    std::vector<Vec> nodes;  // inside the closed unit ball
    std::vector<double> weights;
};

struct SphereRule {
    int dim = 0;
    int level = 1;
    std::vector<Vec> nodes;  // on the unit sphere
    std::vector<double> weights;
};

// Averaging rule on [0, 1], mapped onto a trailing time window (t - w, t) via
// s = t - w * node. Weights sum to one and the mean node is exactly 1/2, so
// the average of (s - t) is -w/2.
struct TimeRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Product rule: radial Gauss nodes (exact against the weight r^{n-1} up to
/// degree >= 3) tensored with a symmetric angular set. n = 1 degenerates to a
/// symmetric Gauss rule on [-1, 1]; level 1 gives nodes +-1/sqrt(3) with
/// weights 1/2. Supported dims: 1, 2, 3.
BallRule make_ball_rule(int n, int level);

/// Symmetric sphere rule of matching degree. n = 1 is {-1, +1} with weights
/// 1/2; n = 2 equally spaced angles; n = 3 a Gauss-in-z times uniform-angle
/// product set.
SphereRule make_sphere_rule(int n, int level);

/// Three-node Gauss rule on (t - w, t), the default for time averages.
TimeRule make_time_rule_gauss3();

/// Single node at the window midpoint: the point-evaluation variants, which
/// read u at t - w/2 instead of averaging over (t - w, t).
TimeRule make_time_rule_point();

/// Average of u(x + eps * A * y, t_level) over the rule's nodes.
/// Throws OutOfDomain if a mapped node escapes a grid-backed field's collar.
double ellipsoid_average(const SpaceTimeField& u, const Vec& x, double t_level,
                         const SymMatrix& a, double eps, const BallRule& rule);
double ellipsoid_average(const SpaceTimeField& u, const Vec& x, double t_level,
                         const SymMatrix& a, double eps, const SphereRule& rule);

/// Tensor average of u(x + eps A y, s) over s in (t - window, t) and the
/// spatial rule. window must be positive.
double spacetime_average(const SpaceTimeField& u, const Vec& x, double t,
                         const SymMatrix& a, double eps, double window,
                         const BallRule& space, const TimeRule& time);
double spacetime_average(const SpaceTimeField& u, const Vec& x, double t,
                         const SymMatrix& a, double eps, double window,
                         const SphereRule& space, const TimeRule& time);

}  // namespace mvf

#endif
