#pragma once

#include "tracecert/error.hpp"
#include "tracecert/matrix.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <initializer_list>
#include <vector>

namespace tracecert::testing {

inline DenseMatrix real_matrix(Index rows, Index cols, std::initializer_list<double> row_major) {
    const std::vector<double> v(row_major);
    return DenseMatrix::from_real_row_major(rows, cols, v);
}

inline StiefelFrame unit_column(double theta) {
    return StiefelFrame(real_matrix(2, 1, {std::cos(theta), std::sin(theta)}));
}

inline DenseMatrix diag2(double a, double b) { return real_matrix(2, 2, {a, 0.0, 0.0, b}); }

template <class F>
Errc error_code_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "expected tracecert::Error";
    return Errc::ParseError;
}

} // namespace tracecert::testing
