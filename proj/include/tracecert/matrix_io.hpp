#pragma once

#include "tracecert/matrix.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace tracecert {

// Text matrix format:
//   line 1:  <rows> <cols> <real|complex>
//   then rows*cols scalars in row-major order, complex ones as "re im" pairs.
// Lines whose first non-blank character is '#' are comments.

enum class Field { Real, Complex };

/// Throws Error(ParseError) on malformed text, Error(NonFinite) on NaN/Inf.
DenseMatrix parse_matrix(std::string_view text);
DenseMatrix read_matrix_file(const std::filesystem::path& path);

/// Writes `real` when every imaginary part is zero, otherwise `complex`.
/// Scalars are printed with 17 significant digits.
std::string format_matrix(const DenseMatrix& m, std::string_view comment = {});
void write_matrix_file(const std::filesystem::path& path, const DenseMatrix& m, std::string_view comment = {});

std::string read_text_file(const std::filesystem::path& path);

/// "fnv1a64:<16 hex digits>" content hash used for input digests.
std::string content_digest(std::string_view bytes);

} // namespace tracecert
