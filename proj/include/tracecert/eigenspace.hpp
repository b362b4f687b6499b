#pragma once

#include "tracecert/checks.hpp"
#include "tracecert/matrix.hpp"

#include <vector>

namespace tracecert {

/// A posteriori certificate for P as an approximation of the dominant
/// k-dimensional eigenspace of a Hermitian H:
///
///   residual_f / spread  <=  ||sin Theta(R(P), R(P_*))||_F  <=  sqrt(eta / gap).
struct EigCertificate {
    Index k            = 0;
    double eta         = 0.0; /// sum of the k largest eigenvalues minus tr(P^H H P)
    double gap         = 0.0; /// lambda_k - lambda_{k+1}
    double spread      = 0.0; /// lambda_1 - lambda_n
    double epsilon     = 0.0; /// sqrt(eta / gap)
    double residual_f  = 0.0; /// ||H P - P (P^H H P)||_F
    double sin_theta_f = 0.0;
    double lower_bound = 0.0; /// residual_f / spread, 0 when spread = 0
    double slack_lower = 0.0; /// sin_theta_f - lower_bound
    double slack_upper = 0.0; /// epsilon - sin_theta_f
    bool upper_applicable = true; /// false when P_* is not the dominant subspace
    bool vacuous          = false; /// epsilon^2 > k, so the upper bound says nothing
    bool chain_verified   = false;
    std::vector<BoundCheck> checks;
};

/// ||H P - P (P^H H P)||_F. Throws DimensionMismatch / NotHermitian.
double residual_eig(const DenseMatrix& h, const StiefelFrame& p, const Tolerances& tol = {});

/// sum_{i<=k} lambda_i(H) - Re tr(P^H H P), tiny negatives clamped to 0.
/// Throws FanViolation below -1e-8 * max(1, k ||H||_2).
double eta_eig(const DenseMatrix& h, const StiefelFrame& p, const Tolerances& tol = {});

/// Throws ZeroGap when lambda_k - lambda_{k+1} <= gap_tol * max(1, ||H||_2).
EigCertificate certify_eigenspace(const DenseMatrix& h, const StiefelFrame& p, const Tolerances& tol = {});

/// Lower bound only, against any k-dimensional invariant subspace R(p_star).
/// The upper bound is checked as well when p_star spans the dominant
/// eigenspace. Throws NotInvariant when
/// ||H P_* - P_* (P_*^H H P_*)||_F > inv_tol * ||H||_F.
EigCertificate certify_eigenspace_against(const DenseMatrix& h, const StiefelFrame& p, const StiefelFrame& p_star,
                                          const Tolerances& tol = {});

} // namespace tracecert
