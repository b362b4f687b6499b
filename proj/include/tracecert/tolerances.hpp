#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tracecert {

/// Numerical thresholds shared by every module. Defaults target n <= 200.
struct Tolerances {
    double frame_tol     = 1e-8;  /// ||P^H P - I||_F accepted for a Stiefel frame
    double decomp_tol    = 1e-10; /// relative reconstruction error of decompositions
    double hermitian_tol = 1e-10; /// relative ||H - H^H||_F accepted as Hermitian
    double rank_tol      = 1e-12; /// sigma_k <= rank_tol * sigma_1 counts as rank deficient
    double gap_tol       = 1e-10; /// relative eigengap treated as zero
    double slack_tol     = 1e-9;  /// relative slack allowed on every verified inequality
    double char_tol      = 1e-8;  /// Hermitian / definiteness tests on P^H B
    double range_tol     = 1e-8;  /// distF below which R(P) = R(P_*) is assumed
    double eq_tol        = 1e-9;  /// relative equality test for trace-norm maximizers
    double inv_tol       = 1e-8;  /// relative residual accepted for an invariant subspace

    /// Sets a tolerance by name. Throws Error(InvalidConfig) on an unknown name
    /// or a non-finite value.
    void set(std::string_view name, double value);

    [[nodiscard]] std::vector<std::pair<std::string, double>> items() const;
};

} // namespace tracecert
