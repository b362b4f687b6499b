#pragma once

#include "tracecert/tolerances.hpp"

#include <Eigen/Dense>

#include <complex>
#include <span>

namespace tracecert {

using Complex = std::complex<double>;
using Index   = Eigen::Index;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;

/// Dense complex matrix with finite entries. Real inputs are embedded with
/// zero imaginary parts. A zero column count is allowed only so that the
/// complement of a square unitary frame can be represented.
class DenseMatrix {
public:
    DenseMatrix() = default;

    /// Throws Error(NonFinite) if any entry is NaN or infinite.
    explicit DenseMatrix(CMatrix values);

    static DenseMatrix zeros(Index rows, Index cols);
    static DenseMatrix identity(Index rows, Index cols);
    static DenseMatrix identity(Index n) { return identity(n, n); }

    /// Row-major entries; `entries.size()` must equal rows*cols.
    static DenseMatrix from_row_major(Index rows, Index cols, std::span<const Complex> entries);
    static DenseMatrix from_real_row_major(Index rows, Index cols, std::span<const double> entries);

    [[nodiscard]] Index rows() const noexcept { return m_.rows(); }
    [[nodiscard]] Index cols() const noexcept { return m_.cols(); }
    [[nodiscard]] Complex operator()(Index i, Index j) const { return m_(i, j); }
    [[nodiscard]] const CMatrix& mat() const noexcept { return m_; }

    [[nodiscard]] DenseMatrix adjoint() const { return DenseMatrix(CMatrix(m_.adjoint())); }

private:
    CMatrix m_;
};

/// An n x k matrix with orthonormal columns (a point on the Stiefel manifold).
class StiefelFrame {
public:
    StiefelFrame() = default;

    /// Validates k <= n and ||P^H P - I||_F <= frame_tol; throws
    /// Error(ShapeError) or Error(NotOrthonormal) otherwise.
    explicit StiefelFrame(DenseMatrix m, double frame_tol = Tolerances{}.frame_tol);
    explicit StiefelFrame(CMatrix m, double frame_tol = Tolerances{}.frame_tol)
        : StiefelFrame(DenseMatrix(std::move(m)), frame_tol) {}

    [[nodiscard]] Index n() const noexcept { return m_.rows(); }
    [[nodiscard]] Index k() const noexcept { return m_.cols(); }
    [[nodiscard]] const DenseMatrix& matrix() const noexcept { return m_; }
    [[nodiscard]] const CMatrix& mat() const noexcept { return m_.mat(); }
    [[nodiscard]] double orthonormality_defect() const noexcept { return defect_; }

    /// Frame spanning the same subspace with a right unitary factor applied.
    [[nodiscard]] StiefelFrame times(const CMatrix& unitary) const;

private:
    DenseMatrix m_;
    double defect_ = 0.0;
};

struct HermitianEig {
    RVector eigenvalues; /// descending
    StiefelFrame frame;  /// column j pairs with eigenvalues[j]
};

struct ThinSVD {
    StiefelFrame u; /// n x k
    RVector sigma;  /// descending, nonnegative
    StiefelFrame v; /// k x k
};

struct PolarDecomposition {
    StiefelFrame p;     /// orthonormal polar factor, n x k
    DenseMatrix lambda; /// Hermitian PSD factor, k x k
    bool unique = false; /// sigma_k > rank_tol * sigma_1
};

double norm_fro(const DenseMatrix& a);
double norm_fro(const CMatrix& a);

/// Largest singular value.
double norm_2(const DenseMatrix& a);
double norm_2(const CMatrix& a);

/// Sum of singular values (nuclear norm).
double trace_norm(const DenseMatrix& a);
double trace_norm(const CMatrix& a);

/// Singular values of any shape, descending, min(rows, cols) of them.
RVector singular_values(const CMatrix& a);

/// Throws NotHermitian when ||h - h^H||_F > hermitian_tol * ||h||_F, else
/// returns (h + h^H)/2. Throws ShapeError for non-square input.
CMatrix symmetrized(const DenseMatrix& h, const Tolerances& tol = {});

HermitianEig hermitian_eig(const DenseMatrix& h, const Tolerances& tol = {});

/// Requires rows >= cols (ShapeError otherwise).
ThinSVD thin_svd(const DenseMatrix& b, const Tolerances& tol = {});

/// P = U V^H, Lambda = V Sigma V^H from the thin SVD.
PolarDecomposition polar_decompose(const DenseMatrix& b, const Tolerances& tol = {});

/// P_perp such that [P, P_perp] is unitary, from a Householder QR of P.
StiefelFrame orthonormal_complement(const StiefelFrame& p, const Tolerances& tol = {});

} // namespace tracecert
