#include "mvf/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "mvf/errors.hpp"
#include "mvf/trace_inf.hpp"

namespace mvf {

namespace {

// Gauss rule with q nodes for a measure on [0,1] (or [-1,1]) given by its
// moments: Chebyshev moment-to-recurrence algorithm, then the Jacobi-matrix
// eigenproblem. Stable here because q <= 6 and the measures are benign.
struct Gauss1d {
    std::vector<double> nodes, weights;
};

Gauss1d gauss_from_moments(const std::vector<long double>& m, int q) {
    const int need = 2 * q;
    assert(static_cast<int>(m.size()) >= need);
    std::vector<long double> alpha(q, 0.0L), beta(q, 0.0L);
    // sigma rows of the Chebyshev algorithm.
    std::vector<long double> prev(need, 0.0L), cur(need, 0.0L), next(need, 0.0L);
    for (int l = 0; l < need; ++l) cur[l] = m[l];
    alpha[0] = m[1] / m[0];
    beta[0] = m[0];
    for (int k = 1; k < q; ++k) {
        for (int l = k; l < need - k; ++l)
            next[l] = cur[l + 1] - alpha[k - 1] * cur[l] - beta[k - 1] * prev[l];
        alpha[k] = next[k + 1] / next[k] - cur[k] / cur[k - 1];
        beta[k] = next[k] / cur[k - 1];
        prev = cur;
        cur = next;
        std::fill(next.begin(), next.end(), 0.0L);
    }

    SymMatrix jacobi(q);
    for (int i = 0; i < q; ++i) jacobi.set(i, i, static_cast<double>(alpha[i]));
    for (int i = 1; i < q; ++i)
        jacobi.set(i, i - 1, std::sqrt(static_cast<double>(beta[i])));
    const EigenSystem es = eigendecompose(jacobi);

    Gauss1d g;
    g.nodes.resize(q);
    g.weights.resize(q);
    for (int i = 0; i < q; ++i) {
        g.nodes[i] = es.values[i];
        const double v0 = es.vectors(0, i);
        g.weights[i] = static_cast<double>(m[0]) * v0 * v0;
    }
    return g;
}

// Radial factor of the ball average: measure n r^{n-1} dr on [0,1], total
// mass 1. Moments: n / (n + k).
Gauss1d radial_rule(int n, int q) {
    std::vector<long double> m(2 * q);
    for (int k = 0; k < 2 * q; ++k) m[k] = static_cast<long double>(n) / (n + k);
    return gauss_from_moments(m, q);
}

// Symmetric Gauss rule for the average over [-1,1] (weight 1/2); even node
// count keeps the set antipodal.
Gauss1d segment_rule(int q) {
    std::vector<long double> m(2 * q);
    for (int k = 0; k < 2 * q; ++k) m[k] = (k % 2 == 0) ? 1.0L / (k + 1) : 0.0L;
    return gauss_from_moments(m, q);
}

std::vector<double> uniform_angles(int count) {
    std::vector<double> a(count);
    for (int j = 0; j < count; ++j) a[j] = 2.0 * std::numbers::pi * j / count;
    return a;
}

void check_supported(int n, int level) {
    if (n < 1 || n > 3) throw Unsupported("quadrature rules support n in {1,2,3}");
    if (level < 1) throw InvalidInput("quadrature level must be >= 1");
}

template <typename Rule>
double average_impl(const SpaceTimeField& u, const Vec& x, double t,
                    const SymMatrix& a, double eps, const Rule& rule) {
    if (a.dim() != x.dim() || rule.dim != x.dim())
        throw InvalidInput("ellipsoid_average: dimension mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const Vec shift = a.apply(rule.nodes[i]);
        s += rule.weights[i] * u.eval(x + eps * shift, t);
    }
    return s;
}

template <typename Rule>
double spacetime_impl(const SpaceTimeField& u, const Vec& x, double t,
                      const SymMatrix& a, double eps, double window,
                      const Rule& space, const TimeRule& time) {
    if (!(window > 0.0)) throw InvalidInput("spacetime_average: window must be positive");
    double s = 0.0;
    for (std::size_t k = 0; k < time.nodes.size(); ++k)
        s += time.weights[k] * average_impl(u, x, t - window * time.nodes[k], a, eps, space);
    return s;
}

}  // namespace

BallRule make_ball_rule(int n, int level) {
    check_supported(n, level);
    BallRule rule;
    rule.dim = n;
    rule.level = level;

    if (n == 1) {
        const Gauss1d g = segment_rule(2 * level);
        for (int i = 0; i < 2 * level; ++i) {
            Vec y(1);
            y[0] = g.nodes[i];
            rule.nodes.push_back(y);
            rule.weights.push_back(g.weights[i]);
        }
        return rule;
    }

    const Gauss1d rad = radial_rule(n, level + 1);
    const SphereRule sph = make_sphere_rule(n, level);
    for (std::size_t r = 0; r < rad.nodes.size(); ++r)
        for (std::size_t s = 0; s < sph.nodes.size(); ++s) {
            rule.nodes.push_back(rad.nodes[r] * sph.nodes[s]);
            rule.weights.push_back(rad.weights[r] * sph.weights[s]);
        }
    return rule;
}

SphereRule make_sphere_rule(int n, int level) {
    check_supported(n, level);
    SphereRule rule;
    rule.dim = n;
    rule.level = level;

    if (n == 1) {
        rule.nodes = {Vec{-1.0}, Vec{1.0}};
        rule.weights = {0.5, 0.5};
        return rule;
    }
    if (n == 2) {
        const int m = 4 * level;
        for (double th : uniform_angles(m)) {
            rule.nodes.push_back(Vec{std::cos(th), std::sin(th)});
            rule.weights.push_back(1.0 / m);
        }
        return rule;
    }
    // n == 3: Gauss in z, uniform in the azimuth. Exact to degree
    // min(2*2*level - 1, 4*level - 1) >= 3.
    const Gauss1d gz = segment_rule(2 * level);
    const int m = 4 * level;
    const auto angles = uniform_angles(m);
    for (std::size_t iz = 0; iz < gz.nodes.size(); ++iz) {
        const double z = gz.nodes[iz];
        const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        for (double th : angles) {
            rule.nodes.push_back(Vec{r * std::cos(th), r * std::sin(th), z});
            rule.weights.push_back(gz.weights[iz] / m);
        }
    }
    return rule;
}

TimeRule make_time_rule_gauss3() {
    // 3-node Gauss on [0,1].
    const double d = std::sqrt(3.0 / 5.0) / 2.0;
    return TimeRule{{0.5 - d, 0.5, 0.5 + d}, {5.0 / 18.0, 8.0 / 18.0, 5.0 / 18.0}};
}

TimeRule make_time_rule_point() { return TimeRule{{0.5}, {1.0}}; }

double ellipsoid_average(const SpaceTimeField& u, const Vec& x, double t,
                         const SymMatrix& a, double eps, const BallRule& rule) {
    return average_impl(u, x, t, a, eps, rule);
}

double ellipsoid_average(const SpaceTimeField& u, const Vec& x, double t,
                         const SymMatrix& a, double eps, const SphereRule& rule) {
    return average_impl(u, x, t, a, eps, rule);
}

double spacetime_average(const SpaceTimeField& u, const Vec& x, double t,
                         const SymMatrix& a, double eps, double window,
                         const BallRule& space, const TimeRule& time) {
    return spacetime_impl(u, x, t, a, eps, window, space, time);
}

double spacetime_average(const SpaceTimeField& u, const Vec& x, double t,
                         const SymMatrix& a, double eps, double window,
                         const SphereRule& space, const TimeRule& time) {
    return spacetime_impl(u, x, t, a, eps, window, space, time);
}

}  // namespace mvf
