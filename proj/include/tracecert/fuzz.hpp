#pragma once

#include "tracecert/checks.hpp"
#include "tracecert/matrix.hpp"
#include "tracecert/tolerances.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tracecert {

enum class SpectrumStyle { Uniform, Clustered, Geometric, PrescribedGap, Mixed };
enum class AngleStyle { Tiny, Moderate, NearOrthogonal, Antipodal, Mixed };
enum class Family { Eig, Polar, Corollary, Lemma, VonNeumann, Angles };
enum class Preset { None, RotationSweep };

std::string_view to_string(SpectrumStyle s) noexcept;
std::string_view to_string(AngleStyle s) noexcept;
std::string_view to_string(Family f) noexcept;
std::string_view to_string(Preset p) noexcept;

struct FuzzConfig {
    std::uint64_t seed = 0;
    std::size_t trials = 100;
    std::vector<std::pair<Index, Index>> dims{{10, 3}};
    SpectrumStyle spectrum_style = SpectrumStyle::Mixed;
    double prescribed_gap        = 1.0;
    AngleStyle angle_style       = AngleStyle::Mixed;
    std::set<Family> which{Family::Eig,   Family::Polar,      Family::Corollary,
                           Family::Lemma, Family::VonNeumann, Family::Angles};
    Preset preset        = Preset::None;
    unsigned workers     = 1;
    Tolerances tol;

    /// Throws Error(InvalidConfig) for trials = 0, empty dims, k outside
    /// [1, n], an empty family set, zero workers or a nonpositive gap.
    void validate() const;
};

/// Flat `key=value` lines; `#` comments and blank lines ignored. Keys:
/// seed, trials, dims (e.g. 20x5,10x2), spectrum_style, gap, angle_style,
/// which (comma list), preset, workers, and tol.<name>.
FuzzConfig parse_fuzz_config(std::string_view text);
std::string format_fuzz_config(const FuzzConfig& config);

SpectrumStyle parse_spectrum_style(std::string_view s);
AngleStyle parse_angle_style(std::string_view s);
Family parse_family(std::string_view s);
Preset parse_preset(std::string_view s);
std::vector<std::pair<Index, Index>> parse_dims(std::string_view s);

struct Violation {
    std::string check_id;
    std::uint64_t seed = 0; /// per-trial seed; regenerates the instance
    std::string instance_digest;
    double lhs   = 0.0;
    double rhs   = 0.0;
    double slack = 0.0;
};

struct Tightness {
    double max_ratio = 0.0; /// max lhs/rhs over instances with rhs >= ratio floor
    double mean_ratio = 0.0;
    std::string argmax_digest;
    std::size_t evaluated = 0; /// number of times the check ran
    std::size_t ratios    = 0; /// number of ratios that entered max/mean
};

struct FuzzReport {
    std::size_t total = 0; /// trials run
    std::size_t checks_evaluated = 0;
    std::vector<Violation> violations;
    std::map<std::string, Tightness> tightness;
    double elapsed_seconds = 0.0;

    [[nodiscard]] bool passed() const noexcept { return violations.empty(); }
};

/// Ratios lhs/rhs are only recorded when rhs is at least this large, so that
/// rounding noise on near-zero instances does not masquerade as tightness.
inline constexpr double kRatioFloor = 1e-6;

/// Deterministic given the config: trial i uses derive_seed(seed, i) and the
/// merge runs in trial order whatever the worker count.
FuzzReport run_fuzz(const FuzzConfig& config);

} // namespace tracecert
