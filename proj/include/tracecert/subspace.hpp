#pragma once

#include "tracecert/matrix.hpp"

#include <vector>

namespace tracecert {

/// Canonical angles between R(X) and R(Y), both k-dimensional.
/// Vectors are aligned entry by entry: thetas[i] is descending and
/// sines[i] = sin(thetas[i]), cosines[i] = cos(thetas[i]).
struct CanonicalAngleSet {
    std::vector<double> thetas;
    std::vector<double> sines;
    std::vector<double> cosines;
    double dist2            = 0.0; /// ||sin Theta||_2
    double distF            = 0.0; /// ||sin Theta||_F
    double half_angle_distF = 0.0; /// ||sin(Theta/2)||_F
};

/// Cosines come from the singular values of X^H Y and sines from those of
/// X_perp^H Y (zero padded to k); each angle is atan2(sine, cosine) with the
/// largest sine paired to the smallest cosine. The distances use the sines.
/// Throws Error(DimensionMismatch) unless x and y have the same n and k.
CanonicalAngleSet canonical_angles(const StiefelFrame& x, const StiefelFrame& y, const Tolerances& tol = {});

double dist2(const StiefelFrame& x, const StiefelFrame& y, const Tolerances& tol = {});
double distF(const StiefelFrame& x, const StiefelFrame& y, const Tolerances& tol = {});

} // namespace tracecert
