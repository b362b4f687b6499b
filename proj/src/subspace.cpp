#include "tracecert/subspace.hpp"

#include "tracecert/error.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

namespace tracecert {

namespace {

double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

} // namespace

CanonicalAngleSet canonical_angles(const StiefelFrame& x, const StiefelFrame& y, const Tolerances& tol) {
    if (x.n() != y.n() || x.k() != y.k()) {
        throw Error(Errc::DimensionMismatch, "canonical angles need equal shapes, got " + std::to_string(x.n()) +
                                                 "x" + std::to_string(x.k()) + " and " + std::to_string(y.n()) +
                                                 "x" + std::to_string(y.k()));
    }
    const Index n  = x.n();
    const Index k  = x.k();
    const auto ku  = static_cast<std::size_t>(k);

    // Ascending cosines, descending sines: entry i is the i-th largest angle.
    std::vector<double> cos_asc(ku);
    const RVector c = singular_values(CMatrix(x.mat().adjoint() * y.mat()));
    for (std::size_t i = 0; i < ku; ++i) cos_asc[i] = clamp01(c(k - 1 - static_cast<Index>(i)));

    std::vector<double> sin_desc(ku, 0.0);
    if (k < n) {
        const StiefelFrame xp = orthonormal_complement(x, tol);
        const RVector s       = singular_values(CMatrix(xp.mat().adjoint() * y.mat()));
        for (Index i = 0; i < s.size() && i < k; ++i) sin_desc[static_cast<std::size_t>(i)] = clamp01(s(i));
        std::sort(sin_desc.begin(), sin_desc.end(), std::greater<>());
    }

    CanonicalAngleSet out;
    out.thetas.resize(ku);
    out.sines.resize(ku);
    out.cosines.resize(ku);
    double sum_sq      = 0.0;
    double half_sum_sq = 0.0;
    for (std::size_t i = 0; i < ku; ++i) {
        const double theta = k == n ? 0.0 : std::atan2(sin_desc[i], cos_asc[i]);
        out.thetas[i]      = theta;
        out.sines[i]       = k == n ? 0.0 : sin_desc[i];
        out.cosines[i]     = cos_asc[i];
        sum_sq += out.sines[i] * out.sines[i];
        const double h = std::sin(theta / 2.0);
        half_sum_sq += h * h;
    }
    // atan2 of paired values can break ties in the wrong order by one ulp.
    std::sort(out.thetas.begin(), out.thetas.end(), std::greater<>());
    out.dist2            = ku == 0 ? 0.0 : out.sines[0];
    out.distF            = std::sqrt(sum_sq);
    out.half_angle_distF = std::sqrt(half_sum_sq);
    return out;
}

double dist2(const StiefelFrame& x, const StiefelFrame& y, const Tolerances& tol) {
    return canonical_angles(x, y, tol).dist2;
}

double distF(const StiefelFrame& x, const StiefelFrame& y, const Tolerances& tol) {
    return canonical_angles(x, y, tol).distF;
}

} // namespace tracecert
