#include "tracecert/eigenspace.hpp"

#include "tracecert/error.hpp"
#include "tracecert/subspace.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace tracecert {

namespace {

void require_compatible(const DenseMatrix& h, const StiefelFrame& p) {
    if (h.rows() != h.cols() || p.n() != h.rows()) {
        throw Error(Errc::DimensionMismatch, "H is " + std::to_string(h.rows()) + "x" + std::to_string(h.cols()) +
                                                 " but P has " + std::to_string(p.n()) + " rows");
    }
}

double residual_of(const CMatrix& hs, const CMatrix& p) {
    const CMatrix hp = hs * p;
    return (hp - p * (p.adjoint() * hp)).norm();
}

double spectral_norm(const RVector& lambda) {
    return std::max(std::abs(lambda(0)), std::abs(lambda(lambda.size() - 1)));
}

// Sum of the k largest eigenvalues minus Re tr(P^H H P), unclamped.
double direct_trace_gap(const CMatrix& hs, const RVector& lambda, const CMatrix& p) {
    const Index k = p.cols();
    return lambda.head(k).sum() - (p.adjoint() * hs * p).trace().real();
}

double checked_trace_gap(const CMatrix& hs, const RVector& lambda, const CMatrix& p) {
    const double raw   = direct_trace_gap(hs, lambda, p);
    const auto k       = static_cast<double>(p.cols());
    const double floor = -1e-8 * std::max(1.0, k * spectral_norm(lambda));
    if (raw < floor) {
        throw Error(Errc::FanViolation, "trace gap " + std::to_string(raw) +
                                            " is negative beyond rounding; eigensolver output is inconsistent");
    }
    return std::max(raw, 0.0);
}

// The same trace gap written through the off-diagonal blocks
//   T = P_*^H P_perp,  S = P_{*perp}^H P,
// as sum (lambda_i - c)|T_i|^2 + sum (c - lambda_j)|S_j|^2 with c inside the
// gap. Both sums are nonnegative and no large terms cancel, so the value keeps
// full relative accuracy when P is close to P_*.
double split_trace_gap(const HermitianEig& eig, const StiefelFrame& p, const Tolerances& tol) {
    const Index n = p.n();
    const Index k = p.k();
    if (k == n) return 0.0;
    const RVector& lambda  = eig.eigenvalues;
    const CMatrix& e       = eig.frame.mat();
    const double c         = 0.5 * (lambda(k - 1) + lambda(k));
    const StiefelFrame pp  = orthonormal_complement(p, tol);
    const CMatrix t        = e.leftCols(k).adjoint() * pp.mat();
    const CMatrix s        = e.rightCols(n - k).adjoint() * p.mat();
    double eta             = 0.0;
    for (Index i = 0; i < k; ++i) eta += (lambda(i) - c) * t.row(i).squaredNorm();
    for (Index j = 0; j < n - k; ++j) eta += (c - lambda(k + j)) * s.row(j).squaredNorm();
    return eta;
}

void finish(EigCertificate& cert, const Tolerances& tol) {
    cert.slack_lower = cert.sin_theta_f - cert.lower_bound;
    cert.slack_upper = cert.epsilon - cert.sin_theta_f;
    cert.checks.clear();
    cert.checks.push_back(make_check(cert.upper_applicable ? "eig.lower" : "eig.footnote_lower", cert.lower_bound,
                                     cert.sin_theta_f, tol.slack_tol));
    if (cert.upper_applicable) {
        cert.checks.push_back(make_check("eig.upper", cert.sin_theta_f, cert.epsilon, tol.slack_tol));
    }
    cert.chain_verified = all_hold(cert.checks);
}

} // namespace

double residual_eig(const DenseMatrix& h, const StiefelFrame& p, const Tolerances& tol) {
    require_compatible(h, p);
    return residual_of(symmetrized(h, tol), p.mat());
}

double eta_eig(const DenseMatrix& h, const StiefelFrame& p, const Tolerances& tol) {
    require_compatible(h, p);
    const HermitianEig eig = hermitian_eig(h, tol);
    return checked_trace_gap(symmetrized(h, tol), eig.eigenvalues, p.mat());
}

EigCertificate certify_eigenspace(const DenseMatrix& h, const StiefelFrame& p, const Tolerances& tol) {
    require_compatible(h, p);
    const CMatrix hs       = symmetrized(h, tol);
    const HermitianEig eig = hermitian_eig(h, tol);
    const RVector& lambda  = eig.eigenvalues;
    const Index n          = p.n();
    const Index k          = p.k();

    EigCertificate cert;
    cert.k      = k;
    cert.spread = lambda(0) - lambda(n - 1);
    if (k < n) {
        cert.gap = lambda(k - 1) - lambda(k);
        if (!(cert.gap > tol.gap_tol * std::max(1.0, spectral_norm(lambda)))) {
            throw Error(Errc::ZeroGap, "lambda_k - lambda_{k+1} = " + std::to_string(cert.gap) +
                                           " is not positive at k = " + std::to_string(k));
        }
    }

    checked_trace_gap(hs, lambda, p.mat());
    cert.eta = std::max(split_trace_gap(eig, p, tol), 0.0);
    cert.residual_f = residual_of(hs, p.mat());
    cert.lower_bound = cert.spread > 0.0 ? cert.residual_f / cert.spread : 0.0;
    if (k < n) {
        const StiefelFrame top(CMatrix(eig.frame.mat().leftCols(k)), tol.frame_tol);
        cert.sin_theta_f = distF(p, top, tol);
        cert.epsilon     = std::sqrt(cert.eta / cert.gap);
    }
    cert.vacuous = cert.epsilon * cert.epsilon > static_cast<double>(k);
    finish(cert, tol);
    return cert;
}

EigCertificate certify_eigenspace_against(const DenseMatrix& h, const StiefelFrame& p, const StiefelFrame& p_star,
                                          const Tolerances& tol) {
    require_compatible(h, p);
    require_compatible(h, p_star);
    if (p.k() != p_star.k()) {
        throw Error(Errc::DimensionMismatch, "P and P_* must have the same number of columns");
    }
    const CMatrix hs = symmetrized(h, tol);
    const double invariance = residual_of(hs, p_star.mat());
    if (invariance > tol.inv_tol * std::max(hs.norm(), 1e-300)) {
        throw Error(Errc::NotInvariant, "||H P_* - P_* (P_*^H H P_*)||_F = " + std::to_string(invariance));
    }

    const HermitianEig eig = hermitian_eig(h, tol);
    const RVector& lambda  = eig.eigenvalues;
    const Index n          = p.n();
    const Index k          = p.k();

    bool dominant = k == n;
    if (k < n) {
        const double gap = lambda(k - 1) - lambda(k);
        if (gap > tol.gap_tol * std::max(1.0, spectral_norm(lambda))) {
            const StiefelFrame top(CMatrix(eig.frame.mat().leftCols(k)), tol.frame_tol);
            dominant = distF(p_star, top, tol) <= tol.range_tol;
        }
    }

    EigCertificate cert;
    if (dominant) {
        cert = certify_eigenspace(h, p, tol);
    } else {
        cert.k      = k;
        cert.spread = lambda(0) - lambda(n - 1);
        cert.gap    = lambda(k - 1) - lambda(k);
        cert.eta    = std::max(direct_trace_gap(hs, lambda, p.mat()), 0.0);
        if (cert.gap > 0.0) cert.epsilon = std::sqrt(cert.eta / cert.gap);
        cert.residual_f  = residual_of(hs, p.mat());
        cert.lower_bound = cert.spread > 0.0 ? cert.residual_f / cert.spread : 0.0;
        cert.upper_applicable = false;
    }
    cert.sin_theta_f = distF(p, p_star, tol);
    cert.vacuous     = cert.epsilon * cert.epsilon > static_cast<double>(k);
    finish(cert, tol);
    return cert;
}

} // namespace tracecert
