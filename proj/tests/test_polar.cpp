#include "support.hpp"

#include "tracecert/generators.hpp"
#include "tracecert/polar.hpp"
#include "tracecert/random.hpp"
#include "tracecert/subspace.hpp"

#include <numbers>

using namespace tracecert;
using namespace tracecert::testing;

namespace {

const DenseMatrix kTwoE1 = real_matrix(2, 1, {2, 0});

} // namespace

TEST(VonNeumann, ClosedForms) {
    const DenseMatrix b = diag2(2, 1);
    const VonNeumannResult same = von_neumann_check(b, b);
    EXPECT_NEAR(same.lhs, 5.0, 1e-14);
    EXPECT_NEAR(same.rhs, 5.0, 1e-14);
    const VonNeumannResult anti = von_neumann_check(b, real_matrix(2, 2, {0, 1, 1, 0}));
    EXPECT_NEAR(anti.lhs, 0.0, 1e-14);
    EXPECT_NEAR(anti.rhs, 3.0, 1e-14);
}

TEST(VonNeumann, RandomPairsSatisfyInequality) {
    SplitMix64 rng(40);
    for (int rep = 0; rep < 1000; ++rep) {
        const DenseMatrix b(gaussian_matrix(6, 3, rng));
        const DenseMatrix c(gaussian_matrix(6, 3, rng));
        const VonNeumannResult r = von_neumann_check(b, c);
        EXPECT_LE(r.lhs, r.rhs * (1 + 1e-12));
    }
    EXPECT_EQ(error_code_of([] { von_neumann_check(diag2(1, 1), kTwoE1); }), Errc::DimensionMismatch);
}

TEST(TraceObjective, ClosedForms) {
    for (double t : {0.0, 0.4, 1.3}) EXPECT_NEAR(trace_objective(kTwoE1, unit_column(t)), 2 * std::cos(t), 1e-15);
    SplitMix64 rng(41);
    const DenseMatrix b(gaussian_matrix(5, 2, rng));
    EXPECT_NEAR(trace_objective(b, polar_decompose(b).p), trace_norm(b), 1e-12);
}

TEST(TraceObjective, PerturbedFactorIsStrictlyWorse) {
    SplitMix64 rng(42);
    for (int rep = 0; rep < 100; ++rep) {
        const DenseMatrix b(gaussian_matrix(6, 2, rng));
        const DenseMatrix b2(CMatrix(b.mat() + 0.3 * gaussian_matrix(6, 2, rng)));
        const StiefelFrame q = polar_decompose(b2).p;
        if (distF(q, polar_decompose(b).p) > 1e-6) EXPECT_LT(trace_objective(b, q), trace_norm(b));
    }
}

TEST(PolarMaximizer, FactorAndAntipode) {
    SplitMix64 rng(43);
    const DenseMatrix b(gaussian_matrix(5, 3, rng));
    const StiefelFrame p = polar_decompose(b).p;
    const MaximizerCheck m = check_polar_maximizer(b, p);
    EXPECT_TRUE(m.maximizer);
    EXPECT_TRUE(m.characterization_holds);
    EXPECT_TRUE(is_polar_maximizer(b, p));
    const DenseMatrix b1 = gen_with_singular_values(4, 1, std::vector<double>{3.0}, 1);
    const StiefelFrame q  = polar_decompose(b1).p;
    EXPECT_FALSE(is_polar_maximizer(b1, StiefelFrame(CMatrix(-q.mat()))));
    EXPECT_NEAR(trace_objective(b1, StiefelFrame(CMatrix(-q.mat()))), -3.0, 1e-12);
}

TEST(PolarMaximizer, RankDeficientCompletion) {
    // B = u v^H with n = 4, k = 2; any P = u v^H + w v2^H with w orthogonal
    // to u and v2 orthogonal to v maximizes Re tr(P^H B).
    SplitMix64 rng(44);
    const StiefelFrame uw = haar_frame(4, 3, rng);
    const CMatrix v       = haar_unitary(2, rng);
    const CMatrix b       = uw.mat().col(0) * v.col(0).adjoint();
    for (int j = 1; j < 3; ++j) {
        const CMatrix p = uw.mat().col(0) * v.col(0).adjoint() + uw.mat().col(j) * v.col(1).adjoint();
        EXPECT_TRUE(is_polar_maximizer(DenseMatrix(b), StiefelFrame(p)));
    }
}

TEST(ResidualPolar, ClosedFormAndInvariance) {
    const double t = std::numbers::pi / 3;
    EXPECT_NEAR(residual_polar(kTwoE1, unit_column(t)), 2 * std::sin(t), 1e-15);
    SplitMix64 rng(45);
    const DenseMatrix b(gaussian_matrix(7, 3, rng));
    const StiefelFrame p = haar_frame(7, 3, rng);
    EXPECT_NEAR(residual_polar(b, p), residual_polar(b, p.times(haar_unitary(3, rng))), 1e-12);
    EXPECT_LT(residual_polar(b, polar_decompose(b).p), 1e-12 * norm_fro(b));
}

TEST(AlignFactor, SignFlip) {
    const DenseMatrix b  = real_matrix(3, 2, {-1, 0, 0, 2, 0, 0});
    const StiefelFrame p(DenseMatrix::identity(3, 2));
    const StiefelFrame q = align_factor(b, p);
    EXPECT_LT((q.mat() - real_matrix(2, 2, {-1, 0, 0, 1}).mat()).norm(), 1e-14);
}

TEST(AlignFactor, IdentityAtOptimumAndNeverWorse) {
    SplitMix64 rng(46);
    const DenseMatrix b(gaussian_matrix(8, 3, rng));
    const StiefelFrame p_star = polar_decompose(b).p;
    EXPECT_LT((align_factor(b, p_star).mat() - CMatrix::Identity(3, 3)).norm(), 1e-10);
    for (int rep = 0; rep < 50; ++rep) {
        const StiefelFrame p  = haar_frame(8, 3, rng);
        const StiefelFrame pq = p.times(align_factor(b, p).mat());
        EXPECT_GE(trace_objective(b, pq), trace_objective(b, p) - 1e-12);
    }
}

TEST(CertifyPolar, RotationInstance) {
    const double t = std::numbers::pi / 3;
    const PolarCertificate c = certify_polar(kTwoE1, unit_column(t));
    EXPECT_NEAR(c.eta, 1.0, 1e-14);
    EXPECT_NEAR(c.sigma_min, 2.0, 1e-14);
    EXPECT_NEAR(c.epsilon, 1.0, 1e-14);
    EXPECT_NEAR(c.sin_theta_f, std::sin(t), 1e-14);
    EXPECT_NEAR(c.residual_f / c.norm2_b, std::sin(t), 1e-14);
    EXPECT_NEAR(2 * c.half_angle_f, c.epsilon, 1e-14);
    EXPECT_TRUE(c.chain_verified);
    EXPECT_TRUE(c.case_b_applicable);
    EXPECT_FALSE(c.case_c_applicable);
}

TEST(CertifyPolar, Antipodal) {
    const PolarCertificate c = certify_polar(kTwoE1, StiefelFrame(real_matrix(2, 1, {-1, 0})));
    EXPECT_NEAR(c.eta, 4.0, 1e-14);
    EXPECT_NEAR(c.epsilon, 2.0, 1e-14);
    EXPECT_NEAR(c.frob_dist, 2.0, 1e-14);
    EXPECT_TRUE(c.case_c_applicable);
    EXPECT_FALSE(c.case_b_applicable);
    EXPECT_TRUE(c.chain_verified);
}

TEST(CertifyPolar, ExactFactorGivesZeros) {
    const std::vector<double> sigma{3, 1, 0.2};
    const PlantedSvd s  = gen_svd_planted(9, sigma, 3);
    const StiefelFrame p_star(CMatrix(s.u.mat() * s.v.mat().adjoint()));
    const PolarCertificate c = certify_polar(s.b, p_star);
    EXPECT_LT(c.eta, 1e-12);
    EXPECT_LT(c.epsilon, 1e-10);
    EXPECT_LT(c.residual_f, 1e-12);
    EXPECT_LT(c.sin_theta_f, 1e-12);
    EXPECT_LT(c.frob_dist, 1e-12);
    EXPECT_TRUE(c.chain_verified);
}

TEST(CertifyPolar, RankDeficientIsRejected) {
    const std::vector<double> sigma{1, 0};
    EXPECT_EQ(error_code_of([&] { certify_polar(gen_with_singular_values(4, 2, sigma, 1), gen_stiefel(4, 2, 2)); }),
              Errc::RankDeficient);
}

TEST(CertifyPolar, VariantNeverExceedsPrimary) {
    SplitMix64 rng(47);
    for (int rep = 0; rep < 200; ++rep) {
        const DenseMatrix b(gaussian_matrix(10, 4, rng));
        const PolarCertificate c = certify_polar(b, haar_frame(10, 4, rng));
        EXPECT_LE(c.eta_variant, c.eta + 1e-10 * std::max(1.0, c.eta));
        EXPECT_LE(c.epsilon_variant, c.epsilon + 1e-10);
        EXPECT_TRUE(c.chain_verified);
    }
}

TEST(PolarProperties, ScalingCovariance) {
    SplitMix64 rng(48);
    for (int rep = 0; rep < 50; ++rep) {
        const DenseMatrix b(gaussian_matrix(6, 3, rng));
        const StiefelFrame p = haar_frame(6, 3, rng);
        const double a       = std::exp(rng.uniform(-3, 3));
        const PolarCertificate c1 = certify_polar(b, p);
        const PolarCertificate ca = certify_polar(DenseMatrix(CMatrix(a * b.mat())), p);
        EXPECT_NEAR(ca.eta / a, c1.eta, 1e-11 * std::max(1.0, c1.eta));
        EXPECT_NEAR(ca.epsilon, c1.epsilon, 1e-11);
        EXPECT_NEAR(ca.sin_theta_f, c1.sin_theta_f, 1e-11);
    }
}
