#include "tracecert/matrix.hpp"

#include "tracecert/error.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <string>
#include <vector>

namespace tracecert {

namespace {

bool all_finite(const CMatrix& m) {
    for (Index j = 0; j < m.cols(); ++j) {
        for (Index i = 0; i < m.rows(); ++i) {
            if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) return false;
        }
    }
    return true;
}

std::string shape(Index r, Index c) { return std::to_string(r) + "x" + std::to_string(c); }

using Svd = Eigen::JacobiSVD<CMatrix, Eigen::ColPivHouseholderQRPreconditioner>;

} // namespace

DenseMatrix::DenseMatrix(CMatrix values) : m_(std::move(values)) {
    if (!all_finite(m_)) throw Error(Errc::NonFinite, "matrix has NaN or infinite entries");
}

DenseMatrix DenseMatrix::zeros(Index rows, Index cols) { return DenseMatrix(CMatrix::Zero(rows, cols)); }

DenseMatrix DenseMatrix::identity(Index rows, Index cols) {
    return DenseMatrix(CMatrix::Identity(rows, cols));
}

DenseMatrix DenseMatrix::from_row_major(Index rows, Index cols, std::span<const Complex> entries) {
    if (rows < 0 || cols < 0 || static_cast<Index>(entries.size()) != rows * cols) {
        throw Error(Errc::ShapeError, "expected " + std::to_string(rows * cols) + " entries for " +
                                          shape(rows, cols) + ", got " + std::to_string(entries.size()));
    }
    CMatrix m(rows, cols);
    for (Index i = 0; i < rows; ++i)
        for (Index j = 0; j < cols; ++j) m(i, j) = entries[static_cast<std::size_t>(i * cols + j)];
    return DenseMatrix(std::move(m));
}

DenseMatrix DenseMatrix::from_real_row_major(Index rows, Index cols, std::span<const double> entries) {
    std::vector<Complex> z(entries.begin(), entries.end());
    return from_row_major(rows, cols, z);
}

StiefelFrame::StiefelFrame(DenseMatrix m, double frame_tol) : m_(std::move(m)) {
    if (m_.cols() > m_.rows()) {
        throw Error(Errc::ShapeError, "frame must have k <= n, got " + shape(m_.rows(), m_.cols()));
    }
    const CMatrix gram = m_.mat().adjoint() * m_.mat();
    defect_            = (gram - CMatrix::Identity(m_.cols(), m_.cols())).norm();
    if (!(defect_ <= frame_tol)) {
        throw Error(Errc::NotOrthonormal,
                    "||P^H P - I||_F = " + std::to_string(defect_) + " exceeds " + std::to_string(frame_tol));
    }
}

StiefelFrame StiefelFrame::times(const CMatrix& unitary) const {
    return StiefelFrame(CMatrix(mat() * unitary), 1e-6);
}

double norm_fro(const CMatrix& a) { return a.norm(); }
double norm_fro(const DenseMatrix& a) { return a.mat().norm(); }

RVector singular_values(const CMatrix& a) {
    if (a.size() == 0) return RVector();
    // Values only: divide and conquer reduces to a real bidiagonal first and
    // is far cheaper than complex Jacobi sweeps at the same absolute accuracy.
    if (a.rows() >= a.cols()) return Eigen::BDCSVD<CMatrix>(a).singularValues();
    return Eigen::BDCSVD<CMatrix>(CMatrix(a.adjoint())).singularValues();
}

double norm_2(const CMatrix& a) {
    const RVector s = singular_values(a);
    return s.size() == 0 ? 0.0 : s(0);
}
double norm_2(const DenseMatrix& a) { return norm_2(a.mat()); }

double trace_norm(const CMatrix& a) { return singular_values(a).sum(); }
double trace_norm(const DenseMatrix& a) { return trace_norm(a.mat()); }

CMatrix symmetrized(const DenseMatrix& h, const Tolerances& tol) {
    if (h.rows() != h.cols()) throw Error(Errc::ShapeError, "Hermitian input must be square, got " + shape(h.rows(), h.cols()));
    const double skew = (h.mat() - h.mat().adjoint()).norm();
    const double size = h.mat().norm();
    if (skew > tol.hermitian_tol * size) {
        throw Error(Errc::NotHermitian, "||H - H^H||_F = " + std::to_string(skew) + " relative to ||H||_F = " +
                                            std::to_string(size));
    }
    return (h.mat() + h.mat().adjoint()) * 0.5;
}

HermitianEig hermitian_eig(const DenseMatrix& h, const Tolerances& tol) {
    const CMatrix hs = symmetrized(h, tol);
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(hs);
    if (solver.info() != Eigen::Success) throw Error(Errc::NonFinite, "Hermitian eigensolver did not converge");
    RVector values   = solver.eigenvalues().reverse();
    CMatrix vectors  = solver.eigenvectors().rowwise().reverse();
    return HermitianEig{std::move(values), StiefelFrame(std::move(vectors), tol.frame_tol)};
}

ThinSVD thin_svd(const DenseMatrix& b, const Tolerances& tol) {
    if (b.rows() < b.cols()) {
        throw Error(Errc::ShapeError, "thin SVD needs rows >= cols, got " + shape(b.rows(), b.cols()));
    }
    Svd svd(b.mat(), Eigen::ComputeThinU | Eigen::ComputeThinV);
    return ThinSVD{StiefelFrame(CMatrix(svd.matrixU()), tol.frame_tol), svd.singularValues(),
                   StiefelFrame(CMatrix(svd.matrixV()), tol.frame_tol)};
}

PolarDecomposition polar_decompose(const DenseMatrix& b, const Tolerances& tol) {
    const ThinSVD svd  = thin_svd(b, tol);
    const CMatrix& v   = svd.v.mat();
    CMatrix p          = svd.u.mat() * v.adjoint();
    CMatrix lambda     = v * svd.sigma.cast<Complex>().asDiagonal() * v.adjoint();
    lambda             = (lambda + lambda.adjoint()) * 0.5;
    const Index k      = svd.sigma.size();
    const bool unique  = k == 0 || svd.sigma(k - 1) > tol.rank_tol * svd.sigma(0);
    return PolarDecomposition{StiefelFrame(std::move(p), tol.frame_tol), DenseMatrix(std::move(lambda)), unique};
}

StiefelFrame orthonormal_complement(const StiefelFrame& p, const Tolerances& tol) {
    const Index n = p.n();
    const Index k = p.k();
    if (k == n) return StiefelFrame(CMatrix(n, 0), tol.frame_tol);
    Eigen::HouseholderQR<CMatrix> qr(p.mat());
    const CMatrix q = qr.householderQ() * CMatrix::Identity(n, n);
    return StiefelFrame(CMatrix(q.rightCols(n - k)), tol.frame_tol);
}

} // namespace tracecert
