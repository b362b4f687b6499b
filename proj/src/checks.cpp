#include "tracecert/checks.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace tracecert {

namespace {

constexpr std::array<std::string_view, 24> kCheckIds{
    "angles.triangle",     "angles.half_lower",  "angles.half_upper",      "eig.fan",
    "eig.lower",           "eig.upper",          "eig.footnote_lower",     "polar.lower",
    "polar.upper",         "polar.half_angle",   "polar.chain_half",       "polar.chain_sin",
    "polar.chain_min",     "polar.case_b",       "polar.case_c",           "corollary.dominance",
    "corollary.epsilon",   "corollary.upper",    "corollary.aligned",      "lemma.upper",
    "lemma.maximizer",     "lemma.characterization", "von_neumann.ineq",   "von_neumann.equality",
};

} // namespace

BoundCheck make_check(std::string id, double lhs, double rhs, double slack_tol) {
    const double allowance = slack_tol * std::max(1.0, std::abs(rhs));
    return BoundCheck{std::move(id), lhs, rhs, lhs <= rhs + allowance};
}

bool all_hold(std::span<const BoundCheck> checks) noexcept {
    return std::all_of(checks.begin(), checks.end(), [](const BoundCheck& c) { return c.holds; });
}

std::span<const std::string_view> all_check_ids() noexcept { return kCheckIds; }

} // namespace tracecert
