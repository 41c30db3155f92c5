#ifndef MVF_TRACE_INF_HPP
#define MVF_TRACE_INF_HPP

#include <optional>

#include "mvf/sym_matrix.hpp"

namespace mvf {

/// Result of a constrained trace minimization. The -infinity branch of the
/// uncapped problem is an explicit tagged state, never a float infinity fed
/// into arithmetic.
struct InfimumResult {
    double value = 0.0;  // meaningful only when !neg_infinity
    bool neg_infinity = false;
    std::optional<SymMatrix> optimizer;
    bool truncated = false;  // whether a stretch cap was active
};

/// det(M)^{1/n} computed from the sum of log-eigenvalues, each clamped below
/// at the scale-relative PSD tolerance. Robust for near-singular matrices.
double det_root(const SymMatrix& m);

/// inf { trace(A^t M A) : A symmetric > 0, det A = 1 }.
///
/// For M >= 0 the value is n * det(M)^{1/n}; for M > 0 the optimizer
/// A* = det(M)^{1/(2n)} M^{-1/2} is attached. If M has an eigenvalue below
/// -psd_tolerance(M), the infimum is -infinity (tagged).
InfimumResult inf_trace_det1(const SymMatrix& m);

/// Smallest cap at which the capped problem below agrees with the uncapped
/// one: theta0 = sqrt(det(M)^{1/n} / lambda_min(M)). Requires M > 0.
double theta0(const SymMatrix& m);

/// inf { trace(A^t M A) : A symmetric, det A = 1, 0 < A <= theta * I }.
///
/// When M > 0 and theta >= theta0(M) this equals inf_trace_det1(M).value
/// exactly (the uncapped optimizer is feasible). Otherwise the cap is
/// active: the search restricts A to the eigenframe of M, which reduces to
/// minimizing sum_i lambda_i a_i^2 over capped stretches with product one,
/// solved by exact per-coordinate descent in log-stretch coordinates from 64
/// deterministic multistarts. theta <= 0 is invalid; theta < 1 leaves no
/// det-1 matrix under the cap and is also rejected.
InfimumResult inf_trace_det1_capped(const SymMatrix& m, double theta);

/// det(M + eta I)^{1/n}. Rejects shifts that leave a negative eigenvalue.
double det_root_perturbed(const SymMatrix& m, double eta);

/// inf { b^2 m_time + trace(A^t M_space A) : b det A = 1, A <= theta I,
/// 0 < b <= theta }. Equals the capped det-1 infimum of the (n+1)-dim
/// block-diagonal matrix diag(m_time, M_space), but is computed by a direct
/// search over (b, stretches of M_space) so the two routes stay independent.
/// For m_time > 0, M_space > 0 and theta large enough the value is
/// (n+1) (m_time det(M_space))^{1/(n+1)}. The optimizer, when attached, is
/// the dense (n+1)-dim block matrix.
InfimumResult inf_trace_block(double m_time, const SymMatrix& m_space, double theta);

/// Extremal eigenvalue-sum form theta * sum(lambda_i^+) + Theta * sum(lambda_i^-),
/// the closed-form minimum of trace(A^t M A) over sqrt(theta) <= lambda(A) <=
/// sqrt(Theta). Used as an oracle for the bounded-infimum control family.
double pucci_minimal_value(double theta, double Theta, const SymMatrix& m);

namespace detail {
/// Minimize sum_i c_i exp(2 x_i) subject to sum_i x_i = 0 and x_i <= log(theta).
/// Returns the minimal value and fills stretches[i] = exp(x_i). Exposed for
/// tests.
double capped_product_search(const Vec& coeffs, double theta, Vec* stretches);
}  // namespace detail

}  // namespace mvf

#endif
