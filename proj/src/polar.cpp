#include "tracecert/polar.hpp"

#include "tracecert/error.hpp"
#include "tracecert/subspace.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace tracecert {

namespace {

void require_same_shape(const DenseMatrix& a, Index rows, Index cols, const char* what) {
    if (a.rows() != rows || a.cols() != cols) {
        throw Error(Errc::DimensionMismatch, std::string(what) + ": shapes " + std::to_string(a.rows()) + "x" +
                                                 std::to_string(a.cols()) + " and " + std::to_string(rows) + "x" +
                                                 std::to_string(cols) + " differ");
    }
}

bool full_rank(const RVector& sigma, double rank_tol) {
    const Index k = sigma.size();
    return k == 0 || (sigma(0) > 0.0 && sigma(k - 1) > rank_tol * sigma(0));
}

double min_hermitian_part_eig(const CMatrix& m) {
    const CMatrix hm = (m + m.adjoint()) * 0.5;
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(hm, Eigen::EigenvaluesOnly);
    return solver.eigenvalues()(0);
}

} // namespace

VonNeumannResult von_neumann_check(const DenseMatrix& b, const DenseMatrix& c) {
    require_same_shape(c, b.rows(), b.cols(), "von Neumann check");
    const RVector sb = singular_values(b.mat());
    const RVector sc = singular_values(c.mat());
    return {std::abs((b.mat().adjoint() * c.mat()).trace()), sb.dot(sc)};
}

double trace_objective(const DenseMatrix& b, const StiefelFrame& p) {
    require_same_shape(b, p.n(), p.k(), "trace objective");
    return (p.mat().adjoint() * b.mat()).trace().real();
}

MaximizerCheck check_polar_maximizer(const DenseMatrix& b, const StiefelFrame& p, const Tolerances& tol) {
    require_same_shape(b, p.n(), p.k(), "maximizer check");
    MaximizerCheck out;
    out.objective  = trace_objective(b, p);
    out.trace_norm = trace_norm(b);
    const double scale = std::max(1.0, out.trace_norm);
    out.margin    = (out.trace_norm - out.objective) / scale;
    out.maximizer = std::abs(out.trace_norm - out.objective) <= tol.eq_tol * scale;

    const CMatrix m = p.mat().adjoint() * b.mat();
    out.hermitian_defect      = (m - m.adjoint()).norm() / std::max(1.0, m.norm());
    out.min_eigenvalue        = min_hermitian_part_eig(m) / std::max(1.0, norm_2(m));
    out.reconstruction_defect = (b.mat() - p.mat() * m).norm() / std::max(1.0, b.mat().norm());
    out.characterization_holds = out.hermitian_defect <= tol.char_tol && out.min_eigenvalue >= -tol.char_tol &&
                                 out.reconstruction_defect <= tol.char_tol;
    return out;
}

bool is_polar_maximizer(const DenseMatrix& b, const StiefelFrame& p, const Tolerances& tol) {
    const MaximizerCheck c = check_polar_maximizer(b, p, tol);
    if (c.maximizer && !c.characterization_holds) {
        throw Error(Errc::LemmaViolation,
                    "P attains ||B||_tr but B != P (P^H B) with P^H B >= 0 (hermitian defect " +
                        std::to_string(c.hermitian_defect) + ", min eigenvalue " + std::to_string(c.min_eigenvalue) +
                        ", reconstruction defect " + std::to_string(c.reconstruction_defect) + ")");
    }
    return c.maximizer;
}

double residual_polar(const DenseMatrix& b, const StiefelFrame& p) {
    require_same_shape(b, p.n(), p.k(), "polar residual");
    return (b.mat() - p.mat() * (p.mat().adjoint() * b.mat())).norm();
}

StiefelFrame align_factor(const DenseMatrix& b, const StiefelFrame& p, const Tolerances& tol) {
    require_same_shape(b, p.n(), p.k(), "align factor");
    const PolarDecomposition pd = polar_decompose(DenseMatrix(CMatrix(p.mat().adjoint() * b.mat())), tol);
    if (!pd.unique) throw Error(Errc::RankDeficient, "P^H B is rank deficient; its polar factor is not unique");
    return pd.p;
}

namespace {

// ||B||_tr - Re tr(X^H B) for orthonormal X, written as
//   1/2 sum_i sigma_i ||X v_i - u_i||^2.
// Each term is nonnegative and is formed from differences of size theta, so
// the value keeps its relative accuracy when X is close to U V^H.
double trace_gap(const ThinSVD& svd, const CMatrix& x) {
    const CMatrix d = x * svd.v.mat() - svd.u.mat();
    double eta      = 0.0;
    for (Index i = 0; i < d.cols(); ++i) eta += 0.5 * svd.sigma(i) * d.col(i).squaredNorm();
    return eta;
}

} // namespace

PolarCertificate certify_polar(const DenseMatrix& b, const StiefelFrame& p, const Tolerances& tol) {
    require_same_shape(b, p.n(), p.k(), "polar certificate");
    const Index k     = p.k();
    const ThinSVD svd = thin_svd(b, tol);
    if (!full_rank(svd.sigma, tol.rank_tol)) {
        throw Error(Errc::RankDeficient, "sigma_min(B) = " + std::to_string(svd.sigma(k - 1)) +
                                             " relative to sigma_max(B) = " + std::to_string(svd.sigma(0)) +
                                             "; the orthonormal polar factor is not unique");
    }
    const CMatrix& bm    = b.mat();
    const CMatrix p_star = svd.u.mat() * svd.v.mat().adjoint();

    PolarCertificate cert;
    cert.trace_norm_b = svd.sigma.sum();
    cert.sigma_min    = svd.sigma(k - 1);
    cert.norm2_b      = svd.sigma(0);

    cert.eta     = trace_gap(svd, p.mat());
    cert.epsilon = std::sqrt(2.0 * cert.eta / cert.sigma_min);

    const CMatrix m   = p.mat().adjoint() * bm;
    cert.residual_f   = (bm - p.mat() * m).norm();
    const StiefelFrame star(p_star, tol.frame_tol);
    const CanonicalAngleSet angles = canonical_angles(p, star, tol);
    cert.sin_theta_f  = angles.distF;
    cert.half_angle_f = angles.half_angle_distF;
    cert.frob_dist    = (p.mat() - p_star).norm();

    const RVector sm   = singular_values(m);
    cert.sigma_min_phb = sm(k - 1);
    const double case_factor = 1.0 + 2.0 * cert.norm2_b / (cert.sigma_min + cert.sigma_min_phb);

    const double m_norm    = m.norm();
    cert.case_b_applicable = (m - m.adjoint()).norm() <= tol.char_tol * m_norm &&
                             min_hermitian_part_eig(m) > tol.char_tol * sm(0);
    cert.case_c_applicable = angles.distF <= tol.range_tol;

    const PolarDecomposition align = polar_decompose(DenseMatrix(m), tol);
    const CMatrix pq       = p.mat() * align.p.mat();
    cert.eta_variant       = trace_gap(svd, pq);
    cert.epsilon_variant   = std::sqrt(2.0 * cert.eta_variant / cert.sigma_min);
    if (full_rank(sm, tol.rank_tol)) {
        cert.aligned_frob_dist = (pq - p_star).norm();
        cert.aligned_bound     = case_factor * cert.epsilon_variant;
    }

    // sigma_i(B) pairs with the i-th smallest angle.
    double half_sum = 0.0;
    double sin_sum  = 0.0;
    for (Index i = 0; i < k; ++i) {
        const auto j     = static_cast<std::size_t>(k - 1 - i);
        const double h   = std::sin(angles.thetas[j] / 2.0);
        const double s   = angles.sines[j];
        half_sum += svd.sigma(i) * 2.0 * h * h;
        sin_sum += svd.sigma(i) * 0.5 * s * s;
    }
    const double min_term = 0.5 * cert.sigma_min * cert.sin_theta_f * cert.sin_theta_f;

    const double st = tol.slack_tol;
    auto& c         = cert.checks;
    c.push_back(make_check("lemma.upper", trace_objective(b, p), cert.trace_norm_b, st));
    c.push_back(make_check("polar.lower", cert.residual_f / cert.norm2_b, cert.sin_theta_f, st));
    c.push_back(make_check("polar.upper", cert.sin_theta_f, cert.epsilon, st));
    c.push_back(make_check("polar.half_angle", 2.0 * cert.half_angle_f, cert.epsilon, st));
    c.push_back(make_check("polar.chain_half", half_sum, cert.eta, st));
    c.push_back(make_check("polar.chain_sin", sin_sum, half_sum, st));
    c.push_back(make_check("polar.chain_min", min_term, sin_sum, st));
    if (cert.case_b_applicable) {
        cert.case_b_bound = case_factor * cert.epsilon;
        c.push_back(make_check("polar.case_b", cert.frob_dist, *cert.case_b_bound, st));
    }
    if (cert.case_c_applicable) c.push_back(make_check("polar.case_c", cert.frob_dist, cert.epsilon, st));
    c.push_back(make_check("corollary.dominance", cert.eta_variant, cert.eta, st));
    c.push_back(make_check("corollary.epsilon", cert.epsilon_variant, cert.epsilon, st));
    c.push_back(make_check("corollary.upper", cert.sin_theta_f, cert.epsilon_variant, st));
    if (cert.aligned_frob_dist) {
        c.push_back(make_check("corollary.aligned", *cert.aligned_frob_dist, *cert.aligned_bound, st));
    }
    cert.chain_verified = all_hold(c);
    return cert;
}

} // namespace tracecert
