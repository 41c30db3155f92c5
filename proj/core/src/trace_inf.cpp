#include "mvf/trace_inf.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mvf/errors.hpp"

namespace mvf {

namespace {

double det_root_from_eigs(const Vec& lambda, double tol) {
    double s = 0.0;
    for (int i = 0; i < lambda.dim(); ++i) s += std::log(std::max(lambda[i], tol));
    return std::exp(s / lambda.dim());
}

// 1-D exact minimizer of g(x) = a e^{2x} + k e^{-2x} on [lo, hi].
double min_two_exp(double a, double k, double lo, double hi) {
    if (a > 0.0 && k > 0.0) return std::clamp(0.25 * std::log(k / a), lo, hi);
    if (a < 0.0 && k < 0.0) {
        const double glo = a * std::exp(2.0 * lo) + k * std::exp(-2.0 * lo);
        const double ghi = a * std::exp(2.0 * hi) + k * std::exp(-2.0 * hi);
        return glo <= ghi ? lo : hi;
    }
    if (a == 0.0 && k == 0.0) return std::clamp(0.0, lo, hi);
    // Remaining sign patterns make g monotone: increasing when a >= 0 >= k,
    // decreasing when a <= 0 <= k.
    return (a >= 0.0 && k <= 0.0) ? lo : hi;
}

double objective(const Vec& c, const Vec& x) {
    double s = 0.0;
    for (int i = 0; i < c.dim(); ++i) s += c[i] * std::exp(2.0 * x[i]);
    return s;
}

}  // namespace

namespace detail {

double capped_product_search(const Vec& coeffs, double theta, Vec* stretches) {
    const int n = coeffs.dim();
    const double cap = std::log(theta);
    if (n == 1) {
        if (stretches) {
            *stretches = Vec(1);
            (*stretches)[0] = 1.0;
        }
        return coeffs[0];
    }

    // Free variables x_0..x_{n-2}; x_{n-1} = -sum. Feasibility: every
    // coordinate (including the dependent one) stays <= cap.
    const int nfree = n - 1;
    auto dependent = [&](const Vec& x) {
        double s = 0.0;
        for (int i = 0; i < nfree; ++i) s += x[i];
        return -s;
    };

    auto sweep_to_convergence = [&](Vec& x) {
        double best = std::numeric_limits<double>::infinity();
        for (int iter = 0; iter < 400; ++iter) {
            for (int i = 0; i < nfree; ++i) {
                double others = 0.0;
                for (int j = 0; j < nfree; ++j)
                    if (j != i) others += x[j];
                const double lo = -cap - others;  // keeps dependent var <= cap
                const double hi = cap;
                if (lo > hi + 1e-14) continue;  // start infeasible; other coords fix it
                const double k = coeffs[nfree] * std::exp(-2.0 * others);
                x[i] = min_two_exp(coeffs[i], k, std::min(lo, hi), hi);
            }
            Vec full(n);
            for (int i = 0; i < nfree; ++i) full[i] = x[i];
            full[nfree] = dependent(x);
            const double val = objective(coeffs, full);
            if (val >= best - 1e-15 * (1.0 + std::abs(best))) return best = std::min(best, val);
            best = val;
        }
        return best;
    };

    // Deterministic multistart lattice over the free-variable box, plus the
    // identity point. 64 starts total for any n <= 4.
    const int per_axis = nfree == 1 ? 64 : (nfree == 2 ? 8 : 4);
    std::vector<Vec> starts;
    starts.push_back(Vec(nfree));  // all zeros -> A = I scaled to feasibility
    const int total = static_cast<int>(std::pow(per_axis, nfree));
    for (int s = 0; s < total; ++s) {
        Vec x(nfree);
        int idx = s;
        for (int i = 0; i < nfree; ++i) {
            const int q = idx % per_axis;
            idx /= per_axis;
            x[i] = -cap + 2.0 * cap * (q + 0.5) / per_axis;
        }
        starts.push_back(x);
    }

    double best = std::numeric_limits<double>::infinity();
    Vec best_x(nfree);
    for (Vec x : starts) {
        // Project the start into the feasible slab: dependent coord <= cap.
        double dep = dependent(x);
        if (dep > cap) {
            const double shift = (dep - cap) / nfree;
            for (int i = 0; i < nfree; ++i) x[i] = std::min(cap, x[i] + shift);
        }
        const double val = sweep_to_convergence(x);
        if (val < best) {
            best = val;
            best_x = x;
        }
    }

    if (stretches) {
        *stretches = Vec(n);
        for (int i = 0; i < nfree; ++i) (*stretches)[i] = std::exp(best_x[i]);
        (*stretches)[nfree] = std::exp(dependent(best_x));
    }
    return best;
}

}  // namespace detail

double det_root(const SymMatrix& m) {
    const EigenSystem es = eigendecompose(m);
    return det_root_from_eigs(es.values, psd_tolerance(m));
}

InfimumResult inf_trace_det1(const SymMatrix& m) {
    const EigenSystem es = eigendecompose(m);
    const double tol = psd_tolerance(m);
    const int n = m.dim();

    InfimumResult res;
    if (es.values[0] < -tol) {
        res.neg_infinity = true;
        res.value = -std::numeric_limits<double>::infinity();
        return res;
    }
    const double root = det_root_from_eigs(es.values, tol);
    res.value = n * root;
    if (es.values[0] > tol) {
        // A* = det(M)^{1/(2n)} M^{-1/2}, expressed in the eigenframe.
        Vec d(n);
        const double c = std::sqrt(root);
        for (int i = 0; i < n; ++i) d[i] = c / std::sqrt(es.values[i]);
        res.optimizer = SymMatrix::from_frame(es.vectors, d);
    }
    return res;
}

double theta0(const SymMatrix& m) {
    const EigenSystem es = eigendecompose(m);
    const double tol = psd_tolerance(m);
    if (es.values[0] <= tol)
        throw NotPositiveDefinite("theta0: matrix is not positive definite");
    return std::sqrt(det_root_from_eigs(es.values, tol) / es.values[0]);
}

InfimumResult inf_trace_det1_capped(const SymMatrix& m, double theta) {
    if (!(theta > 0.0)) throw InvalidInput("inf_trace_det1_capped: theta must be positive");
    if (theta < 1.0)
        throw InvalidInput("inf_trace_det1_capped: no det-1 matrix satisfies A <= theta I with theta < 1");
    const EigenSystem es = eigendecompose(m);
    const double tol = psd_tolerance(m);
    const int n = m.dim();

    if (es.values[0] > tol) {
        const double root = det_root_from_eigs(es.values, tol);
        const double t0 = std::sqrt(root / es.values[0]);
        if (theta * (1.0 + 1e-12) >= t0) {
            // Cap inactive: the uncapped optimizer fits under it.
            InfimumResult res = inf_trace_det1(m);
            res.truncated = false;
            return res;
        }
    }

    Vec stretches;
    InfimumResult res;
    res.value = detail::capped_product_search(es.values, theta, &stretches);
    res.truncated = true;
    res.optimizer = SymMatrix::from_frame(es.vectors, stretches);
    return res;
}

double det_root_perturbed(const SymMatrix& m, double eta) {
    const SymMatrix shifted = m.plus_identity(eta);
    const EigenSystem es = eigendecompose(shifted);
    const double tol = psd_tolerance(shifted);
    if (es.values[0] < -tol)
        throw InvalidInput("det_root_perturbed: shifted matrix has a negative eigenvalue");
    return det_root_from_eigs(es.values, tol);
}

InfimumResult inf_trace_block(double m_time, const SymMatrix& m_space, double theta) {
    if (!(theta > 0.0)) throw InvalidInput("inf_trace_block: theta must be positive");
    if (theta < 1.0)
        throw InvalidInput("inf_trace_block: empty feasible set for theta < 1");
    const EigenSystem es = eigendecompose(m_space);
    const int n = m_space.dim();
    const double tol = std::max(psd_tolerance(m_space), 1e-10 * (1.0 + std::abs(m_time)));

    Vec coeffs(n + 1);
    coeffs[0] = m_time;
    for (int i = 0; i < n; ++i) coeffs[i + 1] = es.values[i];

    InfimumResult res;
    const double lam_min = std::min(m_time, es.values[0]);
    if (lam_min > tol) {
        double logdet = std::log(m_time);
        for (int i = 0; i < n; ++i) logdet += std::log(es.values[i]);
        const double root = std::exp(logdet / (n + 1));
        const double t0 = std::sqrt(root / lam_min);
        if (theta * (1.0 + 1e-12) >= t0) {
            res.value = (n + 1) * root;
            Vec d(n + 1);
            const double c = std::sqrt(root);
            d[0] = c / std::sqrt(m_time);
            for (int i = 0; i < n; ++i) d[i + 1] = c / std::sqrt(es.values[i]);
            Mat frame = Mat::identity(n + 1);
            for (int i = 0; i < n; ++i)
                for (int r = 0; r < n; ++r) frame(r + 1, i + 1) = es.vectors(r, i);
            res.optimizer = SymMatrix::from_frame(frame, d);
            res.truncated = false;
            return res;
        }
    }

    Vec stretches;
    res.value = detail::capped_product_search(coeffs, theta, &stretches);
    res.truncated = true;
    Vec d(n + 1);
    for (int i = 0; i < n + 1; ++i) d[i] = stretches[i];
    Mat frame = Mat::identity(n + 1);
    for (int i = 0; i < n; ++i)
        for (int r = 0; r < n; ++r) frame(r + 1, i + 1) = es.vectors(r, i);
    res.optimizer = SymMatrix::from_frame(frame, d);
    return res;
}

double pucci_minimal_value(double theta, double Theta, const SymMatrix& m) {
    if (!(0.0 < theta && theta < Theta))
        throw InvalidInput("pucci_minimal_value: need 0 < theta < Theta");
    const EigenSystem es = eigendecompose(m);
    double s = 0.0;
    for (int i = 0; i < m.dim(); ++i)
        s += es.values[i] > 0.0 ? theta * es.values[i] : Theta * es.values[i];
    return s;
}

}  // namespace mvf
