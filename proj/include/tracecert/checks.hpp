#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tracecert {

/// One verified inequality `lhs <= rhs`, accepted with slack
/// slack_tol * max(1, |rhs|).
struct BoundCheck {
    std::string id;
    double lhs      = 0.0;
    double rhs      = 0.0;
    bool holds      = true;

    [[nodiscard]] double slack() const noexcept { return rhs - lhs; }
};

BoundCheck make_check(std::string id, double lhs, double rhs, double slack_tol);

[[nodiscard]] bool all_hold(std::span<const BoundCheck> checks) noexcept;

/// Every check id any certificate or fuzz family can emit.
std::span<const std::string_view> all_check_ids() noexcept;

} // namespace tracecert
