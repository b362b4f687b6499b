#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tracecert {

enum class Errc {
    NonFinite,
    ShapeError,
    DimensionMismatch,
    NotOrthonormal,
    NotHermitian,
    ZeroGap,
    FanViolation,
    NotInvariant,
    RankDeficient,
    AngleBudget,
    LemmaViolation,
    InvalidConfig,
    ParseError,
};

std::string_view to_string(Errc code) noexcept;

/// All library failures are reported through this exception type; `code()`
/// lets callers (the CLI in particular) map them to exit statuses.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    [[nodiscard]] Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace tracecert
