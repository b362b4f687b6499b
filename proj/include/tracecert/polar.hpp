#pragma once

#include "tracecert/checks.hpp"
#include "tracecert/matrix.hpp"

#include <optional>
#include <vector>

namespace tracecert {

struct VonNeumannResult {
    double lhs = 0.0; /// |tr(B^H C)|
    double rhs = 0.0; /// sum_i sigma_i(B) sigma_i(C)
};

/// Throws DimensionMismatch unless b and c have the same shape.
VonNeumannResult von_neumann_check(const DenseMatrix& b, const DenseMatrix& c);

/// Re tr(P^H B).
double trace_objective(const DenseMatrix& b, const StiefelFrame& p);

/// Outcome of testing whether P maximizes Re tr(P^H B) over the Stiefel
/// manifold, together with the B = P (P^H B), P^H B >= 0 characterization
/// measured on M = P^H B.
struct MaximizerCheck {
    bool maximizer      = false;
    double objective    = 0.0;
    double trace_norm   = 0.0;
    double margin       = 0.0; /// (||B||_tr - Re tr(P^H B)) / max(1, ||B||_tr)
    double hermitian_defect      = 0.0; /// ||M - M^H||_F / max(1, ||M||_F)
    double min_eigenvalue        = 0.0; /// of (M + M^H)/2, divided by max(1, ||M||_2)
    double reconstruction_defect = 0.0; /// ||B - P M||_F / max(1, ||B||_F)
    bool characterization_holds  = false;
};

MaximizerCheck check_polar_maximizer(const DenseMatrix& b, const StiefelFrame& p, const Tolerances& tol = {});

/// True iff Re tr(P^H B) = ||B||_tr within eq_tol. A detected maximizer that
/// fails the B = P Lambda characterization throws Error(LemmaViolation).
bool is_polar_maximizer(const DenseMatrix& b, const StiefelFrame& p, const Tolerances& tol = {});

/// ||B - P (P^H B)||_F.
double residual_polar(const DenseMatrix& b, const StiefelFrame& p);

/// Orthonormal polar factor Q of P^H B (k x k); P Q maximizes
/// Re tr([P Q]^H B) over unitary Q. Throws RankDeficient unless
/// rank(P^H B) = k within rank_tol.
StiefelFrame align_factor(const DenseMatrix& b, const StiefelFrame& p, const Tolerances& tol = {});

/// Certificate for P as an approximation of the orthonormal polar factor P_*
/// of a full-column-rank B.
struct PolarCertificate {
    double eta             = 0.0; /// ||B||_tr - Re tr(P^H B)
    double eta_variant     = 0.0; /// ||B||_tr - ||P^H B||_tr
    double trace_norm_b    = 0.0;
    double sigma_min       = 0.0; /// sigma_k(B)
    double norm2_b         = 0.0;
    double sigma_min_phb   = 0.0; /// sigma_k(P^H B)
    double epsilon         = 0.0; /// sqrt(2 eta / sigma_min)
    double epsilon_variant = 0.0; /// sqrt(2 eta_variant / sigma_min)
    double residual_f      = 0.0; /// ||B - P (P^H B)||_F
    double sin_theta_f     = 0.0;
    double half_angle_f    = 0.0; /// ||sin(Theta/2)||_F
    double frob_dist       = 0.0; /// ||P - P_*||_F
    bool case_b_applicable = false; /// P^H B Hermitian positive definite
    std::optional<double> case_b_bound;
    bool case_c_applicable = false; /// distF <= range_tol
    std::optional<double> aligned_frob_dist; /// ||P Q - P_*||_F
    std::optional<double> aligned_bound;
    bool chain_verified = false;
    std::vector<BoundCheck> checks;
};

/// Throws RankDeficient when sigma_k(B) <= rank_tol * sigma_1(B).
PolarCertificate certify_polar(const DenseMatrix& b, const StiefelFrame& p, const Tolerances& tol = {});

} // namespace tracecert
