#include "tracecert/generators.hpp"

#include "tracecert/error.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <string>

namespace tracecert {

CMatrix gaussian_matrix(Index rows, Index cols, SplitMix64& rng) {
    CMatrix g(rows, cols);
    for (Index j = 0; j < cols; ++j)
        for (Index i = 0; i < rows; ++i) g(i, j) = rng.complex_normal() * std::numbers::sqrt2 * 0.5;
    return g;
}

namespace {

CMatrix phase_fixed_q(Index n, Index k, SplitMix64& rng) {
    const CMatrix g = gaussian_matrix(n, k, rng);
    Eigen::HouseholderQR<CMatrix> qr(g);
    CMatrix q         = qr.householderQ() * CMatrix::Identity(n, k);
    const CMatrix& rr = qr.matrixQR();
    for (Index j = 0; j < k; ++j) {
        const Complex d = rr(j, j);
        const double a  = std::abs(d);
        if (a > 0.0) q.col(j) *= d / a;
    }
    return q;
}

} // namespace

StiefelFrame haar_frame(Index n, Index k, SplitMix64& rng) {
    if (k > n || k < 0) throw Error(Errc::InvalidConfig, "haar frame needs 0 <= k <= n");
    return StiefelFrame(phase_fixed_q(n, k, rng));
}

CMatrix haar_unitary(Index n, SplitMix64& rng) { return phase_fixed_q(n, n, rng); }

StiefelFrame gen_stiefel(Index n, Index k, std::uint64_t seed) {
    SplitMix64 rng(seed);
    return haar_frame(n, k, rng);
}

PlantedEig gen_hermitian_planted(std::span<const double> spectrum, std::uint64_t seed) {
    const auto n = static_cast<Index>(spectrum.size());
    if (n == 0) throw Error(Errc::InvalidConfig, "spectrum must be nonempty");
    for (double x : spectrum)
        if (!std::isfinite(x)) throw Error(Errc::InvalidConfig, "spectrum entries must be finite");
    SplitMix64 rng(seed);
    CMatrix u = haar_unitary(n, rng);
    RVector lambda(n);
    for (Index i = 0; i < n; ++i) lambda(i) = spectrum[static_cast<std::size_t>(i)];
    CMatrix h = u * lambda.cast<Complex>().asDiagonal() * u.adjoint();
    h         = (h + h.adjoint()) * 0.5;
    return PlantedEig{DenseMatrix(std::move(h)), StiefelFrame(std::move(u))};
}

DenseMatrix gen_hermitian(Index n, std::span<const double> spectrum, std::uint64_t seed) {
    if (static_cast<Index>(spectrum.size()) != n) {
        throw Error(Errc::InvalidConfig, "spectrum has " + std::to_string(spectrum.size()) + " entries, expected " +
                                             std::to_string(n));
    }
    return gen_hermitian_planted(spectrum, seed).h;
}

StiefelFrame rotate_frame(const StiefelFrame& p_star, std::span<const double> thetas, std::uint64_t seed) {
    const Index n = p_star.n();
    const Index k = p_star.k();
    if (static_cast<Index>(thetas.size()) != k) {
        throw Error(Errc::InvalidConfig, "need one angle per column of P_*");
    }
    Index nonzero = 0;
    for (double t : thetas) {
        if (!(t >= 0.0 && t <= std::numbers::pi / 2.0)) {
            throw Error(Errc::InvalidConfig, "angles must lie in [0, pi/2], got " + std::to_string(t));
        }
        if (t != 0.0) ++nonzero;
    }
    if (nonzero > n - k) {
        throw Error(Errc::AngleBudget, std::to_string(nonzero) + " nonzero angles requested but only n - k = " +
                                           std::to_string(n - k) + " complement directions exist");
    }
    CMatrix p = p_star.mat();
    if (nonzero == 0) return StiefelFrame(std::move(p));

    SplitMix64 rng(seed);
    const StiefelFrame comp = orthonormal_complement(p_star);
    const CMatrix c         = comp.mat() * haar_frame(n - k, nonzero, rng).mat();
    Index used              = 0;
    for (Index i = 0; i < k; ++i) {
        const double t = thetas[static_cast<std::size_t>(i)];
        if (t == 0.0) continue;
        p.col(i) = p_star.mat().col(i) * std::cos(t) + c.col(used++) * std::sin(t);
    }
    return StiefelFrame(std::move(p));
}

PlantedSvd gen_svd_planted(Index n, std::span<const double> sigma, std::uint64_t seed) {
    const auto k = static_cast<Index>(sigma.size());
    if (k == 0 || k > n) throw Error(Errc::InvalidConfig, "need 1 <= k <= n singular values");
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        if (!(sigma[i] >= 0.0) || !std::isfinite(sigma[i]) || (i > 0 && sigma[i] > sigma[i - 1])) {
            throw Error(Errc::InvalidConfig, "singular values must be finite, nonnegative and descending");
        }
    }
    SplitMix64 rng(seed);
    StiefelFrame u  = haar_frame(n, k, rng);
    StiefelFrame v(haar_unitary(k, rng));
    RVector s(k);
    for (Index i = 0; i < k; ++i) s(i) = sigma[static_cast<std::size_t>(i)];
    CMatrix b = u.mat() * s.cast<Complex>().asDiagonal() * v.mat().adjoint();
    return PlantedSvd{DenseMatrix(std::move(b)), std::move(u), std::move(v)};
}

DenseMatrix gen_with_singular_values(Index n, Index k, std::span<const double> sigma, std::uint64_t seed) {
    if (static_cast<Index>(sigma.size()) != k) {
        throw Error(Errc::InvalidConfig, "sigma has " + std::to_string(sigma.size()) + " entries, expected " +
                                             std::to_string(k));
    }
    return gen_svd_planted(n, sigma, seed).b;
}

std::uint64_t matrix_hash(const CMatrix& m, std::uint64_t h) noexcept {
    auto mix = [&h](std::uint64_t word) {
        for (int byte = 0; byte < 8; ++byte) {
            h ^= (word >> (8 * byte)) & 0xffU;
            h *= 0x100000001b3ULL;
        }
    };
    mix(static_cast<std::uint64_t>(m.rows()));
    mix(static_cast<std::uint64_t>(m.cols()));
    for (Index j = 0; j < m.cols(); ++j)
        for (Index i = 0; i < m.rows(); ++i) {
            mix(std::bit_cast<std::uint64_t>(m(i, j).real()));
            mix(std::bit_cast<std::uint64_t>(m(i, j).imag()));
        }
    return h;
}

} // namespace tracecert
