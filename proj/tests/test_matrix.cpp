#include "support.hpp"

#include "tracecert/generators.hpp"
#include "tracecert/random.hpp"

#include <limits>

using namespace tracecert;
using namespace tracecert::testing;

TEST(DenseMatrix, RejectsNonFiniteEntries) {
    CMatrix m = CMatrix::Zero(2, 2);
    m(1, 0)   = std::numeric_limits<double>::quiet_NaN();
    EXPECT_EQ(error_code_of([&] { DenseMatrix d(m); }), Errc::NonFinite);
    m(1, 0) = std::numeric_limits<double>::infinity();
    EXPECT_EQ(error_code_of([&] { DenseMatrix d(m); }), Errc::NonFinite);
}

TEST(DenseMatrix, RowMajorEntryCountMustMatch) {
    const std::vector<double> v{1, 2, 3};
    EXPECT_EQ(error_code_of([&] { DenseMatrix::from_real_row_major(2, 2, v); }), Errc::ShapeError);
    const DenseMatrix m = DenseMatrix::from_real_row_major(3, 1, v);
    EXPECT_EQ(m(2, 0), Complex(3.0, 0.0));
}

TEST(StiefelFrame, AcceptsIdentityColumns) {
    const StiefelFrame p(DenseMatrix::identity(4, 2));
    EXPECT_EQ(p.n(), 4);
    EXPECT_EQ(p.k(), 2);
    EXPECT_EQ(p.orthonormality_defect(), 0.0);
}

TEST(StiefelFrame, RejectsNonOrthonormalColumns) {
    EXPECT_EQ(error_code_of([] { StiefelFrame p(real_matrix(2, 2, {1, 1, 0, 1})); }), Errc::NotOrthonormal);
    EXPECT_EQ(error_code_of([] { StiefelFrame p(real_matrix(2, 1, {1.001, 0})); }), Errc::NotOrthonormal);
}

TEST(StiefelFrame, RejectsWideMatrices) {
    EXPECT_EQ(error_code_of([] { StiefelFrame p(DenseMatrix::identity(2, 3)); }), Errc::ShapeError);
}

TEST(StiefelFrame, FrameToleranceIsRespected) {
    const DenseMatrix m = real_matrix(2, 1, {1.0 + 1e-6, 0});
    EXPECT_NO_THROW(StiefelFrame(m, 1e-5));
    EXPECT_THROW(StiefelFrame(m, 1e-7), Error);
}

TEST(Norms, DiagonalValues) {
    const DenseMatrix d = real_matrix(3, 3, {2, 0, 0, 0, -1, 0, 0, 0, 0.5});
    EXPECT_NEAR(trace_norm(d), 3.5, 1e-14);
    EXPECT_NEAR(norm_2(d), 2.0, 1e-14);
    EXPECT_NEAR(norm_fro(d), std::sqrt(5.25), 1e-14);
}

TEST(Norms, TraceNormOfRankOne) {
    // u v^T with |u| = 5, |v| = sqrt 2
    const DenseMatrix m = real_matrix(2, 2, {3, 3, 4, 4});
    EXPECT_NEAR(trace_norm(m), 5.0 * std::sqrt(2.0), 1e-13);
    EXPECT_NEAR(norm_2(m), 5.0 * std::sqrt(2.0), 1e-13);
}

TEST(Norms, TraceNormIsUnitarilyInvariant) {
    SplitMix64 rng(11);
    const CMatrix a = gaussian_matrix(6, 3, rng);
    const CMatrix u = haar_unitary(6, rng);
    const CMatrix v = haar_unitary(3, rng);
    EXPECT_NEAR(trace_norm(a), trace_norm(CMatrix(u * a * v)), 1e-12 * trace_norm(a));
}

TEST(HermitianEig, RecoversPlantedSpectrumDescending) {
    const std::vector<double> spectrum{-1, 2, 5, 2};
    const DenseMatrix h    = gen_hermitian(4, spectrum, 3);
    const HermitianEig eig = hermitian_eig(h);
    const std::vector<double> expected{5, 2, 2, -1};
    for (int i = 0; i < 4; ++i) EXPECT_NEAR(eig.eigenvalues(i), expected[static_cast<std::size_t>(i)], 1e-12);
    const CMatrix& v = eig.frame.mat();
    const CMatrix recon = v * eig.eigenvalues.cast<Complex>().asDiagonal() * v.adjoint();
    EXPECT_LT((recon - h.mat()).norm(), 1e-12);
}

TEST(HermitianEig, RejectsNonHermitian) {
    EXPECT_EQ(error_code_of([] { hermitian_eig(real_matrix(2, 2, {1, 1, 0, 1})); }), Errc::NotHermitian);
    EXPECT_EQ(error_code_of([] { hermitian_eig(DenseMatrix::identity(3, 2)); }), Errc::ShapeError);
}

TEST(HermitianEig, SymmetrizesWithinTolerance) {
    const DenseMatrix h = real_matrix(2, 2, {1, 1e-13, 0, 1});
    const CMatrix s     = symmetrized(h);
    EXPECT_EQ(s, CMatrix(s.adjoint()));
}

TEST(ThinSvd, RecoversSingularValues) {
    const std::vector<double> sigma{2, 1, 0.5};
    const DenseMatrix b = gen_with_singular_values(6, 3, sigma, 7);
    const ThinSVD svd   = thin_svd(b);
    for (int i = 0; i < 3; ++i) EXPECT_NEAR(svd.sigma(i), sigma[static_cast<std::size_t>(i)], 1e-12);
    const CMatrix recon = svd.u.mat() * svd.sigma.cast<Complex>().asDiagonal() * svd.v.mat().adjoint();
    EXPECT_LT((recon - b.mat()).norm(), 1e-12);
    EXPECT_EQ(error_code_of([&] { thin_svd(b.adjoint()); }), Errc::ShapeError);
}

TEST(Polar, FactorsReconstructAndLambdaIsPsd) {
    SplitMix64 rng(5);
    const DenseMatrix b(gaussian_matrix(7, 3, rng));
    const PolarDecomposition pd = polar_decompose(b);
    EXPECT_TRUE(pd.unique);
    EXPECT_LT((pd.p.mat() * pd.lambda.mat() - b.mat()).norm(), 1e-12 * norm_fro(b));
    EXPECT_LT((pd.lambda.mat() - pd.lambda.mat().adjoint()).norm(), 1e-13);
    Eigen::SelfAdjointEigenSolver<CMatrix> es(pd.lambda.mat());
    EXPECT_GT(es.eigenvalues().minCoeff(), 0.0);
}

TEST(Polar, RankDeficientIsNotUnique) {
    const std::vector<double> sigma{1, 0};
    const PolarDecomposition pd = polar_decompose(gen_with_singular_values(4, 2, sigma, 1));
    EXPECT_FALSE(pd.unique);
    EXPECT_LT(pd.p.orthonormality_defect(), 1e-12);
}

TEST(Complement, CompletesToUnitary) {
    const StiefelFrame p  = gen_stiefel(6, 2, 9);
    const StiefelFrame pc = orthonormal_complement(p);
    ASSERT_EQ(pc.k(), 4);
    CMatrix full(6, 6);
    full << p.mat(), pc.mat();
    EXPECT_LT((full.adjoint() * full - CMatrix::Identity(6, 6)).norm(), 1e-13);
}

TEST(Complement, SquareFrameHasEmptyComplement) {
    const StiefelFrame p = gen_stiefel(3, 3, 2);
    const StiefelFrame pc = orthonormal_complement(p);
    EXPECT_EQ(pc.n(), 3);
    EXPECT_EQ(pc.k(), 0);
}

TEST(StiefelFrame, TimesUnitaryKeepsOrthonormality) {
    SplitMix64 rng(4);
    const StiefelFrame p = haar_frame(8, 3, rng);
    const StiefelFrame q = p.times(haar_unitary(3, rng));
    EXPECT_LT(q.orthonormality_defect(), 1e-13);
    EXPECT_THROW((void)p.times(CMatrix::Constant(3, 3, Complex(1.0, 0.0))), Error);
}
