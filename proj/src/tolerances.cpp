#include "tracecert/tolerances.hpp"

#include "tracecert/error.hpp"

#include <cmath>

namespace tracecert {

std::string_view to_string(Errc code) noexcept {
    switch (code) {
    case Errc::NonFinite: return "NonFinite";
    case Errc::ShapeError: return "ShapeError";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NotOrthonormal: return "NotOrthonormal";
    case Errc::NotHermitian: return "NotHermitian";
    case Errc::ZeroGap: return "ZeroGap";
    case Errc::FanViolation: return "FanViolation";
    case Errc::NotInvariant: return "NotInvariant";
    case Errc::RankDeficient: return "RankDeficient";
    case Errc::AngleBudget: return "AngleBudget";
    case Errc::LemmaViolation: return "LemmaViolation";
    case Errc::InvalidConfig: return "InvalidConfig";
    case Errc::ParseError: return "ParseError";
    }
    return "Unknown";
}

namespace {

template <typename Fn>
void for_each_field(Tolerances& t, Fn&& fn) {
    fn("frame_tol", t.frame_tol);
    fn("decomp_tol", t.decomp_tol);
    fn("hermitian_tol", t.hermitian_tol);
    fn("rank_tol", t.rank_tol);
    fn("gap_tol", t.gap_tol);
    fn("slack_tol", t.slack_tol);
    fn("char_tol", t.char_tol);
    fn("range_tol", t.range_tol);
    fn("eq_tol", t.eq_tol);
    fn("inv_tol", t.inv_tol);
}

} // namespace

void Tolerances::set(std::string_view name, double value) {
    if (!std::isfinite(value)) {
        throw Error(Errc::InvalidConfig, "tolerance " + std::string(name) + " must be finite");
    }
    bool found = false;
    for_each_field(*this, [&](std::string_view field, double& slot) {
        if (field == name) {
            slot  = value;
            found = true;
        }
    });
    if (!found) {
        throw Error(Errc::InvalidConfig, "unknown tolerance '" + std::string(name) + "'");
    }
}

std::vector<std::pair<std::string, double>> Tolerances::items() const {
    std::vector<std::pair<std::string, double>> out;
    auto copy = *this;
    for_each_field(copy, [&](std::string_view field, double& slot) { out.emplace_back(field, slot); });
    return out;
}

} // namespace tracecert
