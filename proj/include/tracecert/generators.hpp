#pragma once

#include "tracecert/matrix.hpp"
#include "tracecert/random.hpp"

#include <cstdint>
#include <span>

namespace tracecert {

// Seeded instance generators with known ground truth. Every generator is a
// pure function of its parameters and seed.

CMatrix gaussian_matrix(Index rows, Index cols, SplitMix64& rng);

/// Haar-distributed n x k frame: thin QR of a complex Gaussian matrix with
/// the phases of diag(R) moved into Q, which makes the factor unique.
StiefelFrame haar_frame(Index n, Index k, SplitMix64& rng);
CMatrix haar_unitary(Index n, SplitMix64& rng);

StiefelFrame gen_stiefel(Index n, Index k, std::uint64_t seed);

struct PlantedEig {
    DenseMatrix h;
    StiefelFrame basis; /// column j is an eigenvector for spectrum[j]
};

/// H = U diag(spectrum) U^H with Haar U; spectrum need not be sorted.
PlantedEig gen_hermitian_planted(std::span<const double> spectrum, std::uint64_t seed);
/// Throws InvalidConfig unless spectrum.size() == n.
DenseMatrix gen_hermitian(Index n, std::span<const double> spectrum, std::uint64_t seed);

/// P = P_* diag(cos theta) + C diag(sin theta) with C a seeded orthonormal
/// frame inside the complement of R(P_*), so that the canonical angles
/// between R(P) and R(P_*) are exactly `thetas`. Throws AngleBudget if more
/// than n - k angles are nonzero, InvalidConfig for angles outside [0, pi/2].
StiefelFrame rotate_frame(const StiefelFrame& p_star, std::span<const double> thetas, std::uint64_t seed);

struct PlantedSvd {
    DenseMatrix b;
    StiefelFrame u; /// n x k
    StiefelFrame v; /// k x k
};

/// B = U diag(sigma) V^H with seeded Haar frames. sigma must have k entries,
/// descending and nonnegative (InvalidConfig otherwise).
PlantedSvd gen_svd_planted(Index n, std::span<const double> sigma, std::uint64_t seed);
DenseMatrix gen_with_singular_values(Index n, Index k, std::span<const double> sigma, std::uint64_t seed);

/// Fingerprint of a matrix's exact bit pattern (FNV-1a, 16 hex digits).
std::uint64_t matrix_hash(const CMatrix& m, std::uint64_t h = 0xcbf29ce484222325ULL) noexcept;

} // namespace tracecert
