#include "support.hpp"

#include "tracecert/checks.hpp"
#include "tracecert/fuzz.hpp"
#include "tracecert/report.hpp"

#include <set>

using namespace tracecert;
using namespace tracecert::testing;

namespace {

FuzzConfig small_config(std::uint64_t seed) {
    FuzzConfig cfg;
    cfg.seed   = seed;
    cfg.trials = 60;
    cfg.dims   = {{3, 1}, {8, 2}, {12, 6}};
    return cfg;
}

Json without_elapsed(const FuzzReport& r) {
    Json j = to_json(r);
    j.erase("elapsed_seconds");
    return j;
}

} // namespace

TEST(Checks, SlackRule) {
    EXPECT_TRUE(make_check("x", 1.0, 1.0, 0.0).holds);
    EXPECT_TRUE(make_check("x", 1.0 + 5e-10, 1.0, 1e-9).holds);
    EXPECT_FALSE(make_check("x", 1.0 + 2e-9, 1.0, 1e-9).holds);
    EXPECT_TRUE(make_check("x", 1e3 + 5e-7, 1e3, 1e-9).holds);
    EXPECT_FALSE(make_check("x", 0.5, 1.0, -0.6).holds);
    EXPECT_DOUBLE_EQ(make_check("x", 0.25, 1.0, 0.0).slack(), 0.75);
}

TEST(Checks, IdTableIsUniqueAndComplete) {
    const auto ids = all_check_ids();
    std::set<std::string_view> unique(ids.begin(), ids.end());
    EXPECT_EQ(unique.size(), ids.size());
    for (const char* id : {"angles.triangle", "angles.half_lower", "angles.half_upper", "eig.fan", "eig.lower",
                           "eig.upper", "eig.footnote_lower", "polar.lower", "polar.upper", "polar.half_angle",
                           "polar.chain_half", "polar.chain_sin", "polar.chain_min", "polar.case_b", "polar.case_c",
                           "corollary.dominance", "corollary.epsilon", "corollary.upper", "corollary.aligned",
                           "lemma.upper", "lemma.maximizer", "lemma.characterization", "von_neumann.ineq",
                           "von_neumann.equality"}) {
        EXPECT_TRUE(unique.count(id)) << id;
    }
}

TEST(Checks, CampaignEmitsEveryId) {
    FuzzConfig cfg = small_config(5);
    cfg.trials     = 400;
    const FuzzReport r = run_fuzz(cfg);
    for (std::string_view id : all_check_ids()) EXPECT_TRUE(r.tightness.count(std::string(id))) << id;
    for (const auto& [id, t] : r.tightness) {
        const auto ids = all_check_ids();
        EXPECT_NE(std::find(ids.begin(), ids.end(), id), ids.end()) << "unlisted id " << id;
    }
    EXPECT_TRUE(r.passed());
}

TEST(FuzzConfig, Validation) {
    FuzzConfig cfg;
    EXPECT_NO_THROW(cfg.validate());
    cfg.trials = 0;
    EXPECT_EQ(error_code_of([&] { cfg.validate(); }), Errc::InvalidConfig);
    cfg        = {};
    cfg.dims   = {{3, 4}};
    EXPECT_EQ(error_code_of([&] { cfg.validate(); }), Errc::InvalidConfig);
    cfg        = {};
    cfg.dims   = {};
    EXPECT_EQ(error_code_of([&] { cfg.validate(); }), Errc::InvalidConfig);
    cfg        = {};
    cfg.which  = {};
    EXPECT_EQ(error_code_of([&] { cfg.validate(); }), Errc::InvalidConfig);
    cfg         = {};
    cfg.workers = 0;
    EXPECT_EQ(error_code_of([&] { cfg.validate(); }), Errc::InvalidConfig);
    cfg                = {};
    cfg.prescribed_gap = 0.0;
    EXPECT_EQ(error_code_of([&] { cfg.validate(); }), Errc::InvalidConfig);
    cfg = {};
    cfg.trials = 0;
    EXPECT_THROW(run_fuzz(cfg), Error);
}

TEST(FuzzConfig, TextRoundTrip) {
    FuzzConfig cfg;
    cfg.seed           = 123456789012345ULL;
    cfg.trials         = 17;
    cfg.dims           = {{20, 5}, {4, 1}};
    cfg.spectrum_style = SpectrumStyle::PrescribedGap;
    cfg.prescribed_gap = 0.1;
    cfg.angle_style    = AngleStyle::NearOrthogonal;
    cfg.which          = {Family::Polar, Family::VonNeumann};
    cfg.preset         = Preset::RotationSweep;
    cfg.workers        = 3;
    cfg.tol.slack_tol  = 3e-10;
    const FuzzConfig back = parse_fuzz_config(format_fuzz_config(cfg));
    EXPECT_EQ(back.seed, cfg.seed);
    EXPECT_EQ(back.trials, cfg.trials);
    EXPECT_EQ(back.dims, cfg.dims);
    EXPECT_EQ(back.spectrum_style, cfg.spectrum_style);
    EXPECT_EQ(back.prescribed_gap, cfg.prescribed_gap);
    EXPECT_EQ(back.angle_style, cfg.angle_style);
    EXPECT_EQ(back.which, cfg.which);
    EXPECT_EQ(back.preset, cfg.preset);
    EXPECT_EQ(back.workers, cfg.workers);
    EXPECT_EQ(back.tol.items(), cfg.tol.items());
    EXPECT_EQ(format_fuzz_config(back), format_fuzz_config(cfg));
}

TEST(FuzzConfig, ParseErrors) {
    EXPECT_EQ(error_code_of([] { parse_fuzz_config("trials"); }), Errc::InvalidConfig);
    EXPECT_EQ(error_code_of([] { parse_fuzz_config("bogus=1"); }), Errc::InvalidConfig);
    EXPECT_EQ(error_code_of([] { parse_fuzz_config("trials=abc"); }), Errc::InvalidConfig);
    EXPECT_EQ(error_code_of([] { parse_fuzz_config("dims=20by5"); }), Errc::InvalidConfig);
    EXPECT_EQ(error_code_of([] { parse_fuzz_config("which=eig,bogus"); }), Errc::InvalidConfig);
    EXPECT_EQ(error_code_of([] { parse_fuzz_config("tol.nope=1"); }), Errc::InvalidConfig);
    const FuzzConfig c = parse_fuzz_config("# comment\n\n seed = 9 \nwhich=eig\n");
    EXPECT_EQ(c.seed, 9u);
    EXPECT_EQ(c.which, std::set<Family>{Family::Eig});
}

TEST(FuzzConfig, EnumNamesRoundTrip) {
    for (auto s : {SpectrumStyle::Uniform, SpectrumStyle::Clustered, SpectrumStyle::Geometric,
                   SpectrumStyle::PrescribedGap, SpectrumStyle::Mixed})
        EXPECT_EQ(parse_spectrum_style(to_string(s)), s);
    for (auto a : {AngleStyle::Tiny, AngleStyle::Moderate, AngleStyle::NearOrthogonal, AngleStyle::Antipodal,
                   AngleStyle::Mixed})
        EXPECT_EQ(parse_angle_style(to_string(a)), a);
    for (auto f : {Family::Eig, Family::Polar, Family::Corollary, Family::Lemma, Family::VonNeumann, Family::Angles})
        EXPECT_EQ(parse_family(to_string(f)), f);
    EXPECT_EQ(parse_preset("rotation-sweep"), Preset::RotationSweep);
}

TEST(RunFuzz, DeterministicAcrossWorkerCounts) {
    FuzzConfig cfg       = small_config(42);
    const Json one       = without_elapsed(run_fuzz(cfg));
    const Json again     = without_elapsed(run_fuzz(cfg));
    cfg.workers          = 4;
    const Json four      = without_elapsed(run_fuzz(cfg));
    EXPECT_EQ(one.dump(), again.dump());
    EXPECT_EQ(one.dump(), four.dump());
    cfg.seed = 43;
    EXPECT_NE(one.dump(), without_elapsed(run_fuzz(cfg)).dump());
}

TEST(RunFuzz, ModerateAnglePolarHasNoViolations) {
    FuzzConfig cfg;
    cfg.seed        = 7;
    cfg.trials      = 1000;
    cfg.dims        = {{20, 5}};
    cfg.angle_style = AngleStyle::Moderate;
    cfg.which       = {Family::Polar};
    const FuzzReport r = run_fuzz(cfg);
    EXPECT_EQ(r.total, 1000u);
    EXPECT_TRUE(r.passed());
}

TEST(RunFuzz, RotationSweepIsTight) {
    FuzzConfig cfg;
    cfg.preset = Preset::RotationSweep;
    cfg.trials = 100;
    const FuzzReport r = run_fuzz(cfg);
    EXPECT_TRUE(r.passed());
    EXPECT_NEAR(r.tightness.at("eig.upper").max_ratio, 1.0, 1e-12);
    EXPECT_NEAR(r.tightness.at("polar.lower").max_ratio, 1.0, 1e-12);
    EXPECT_NEAR(r.tightness.at("polar.half_angle").max_ratio, 1.0, 1e-12);
}

TEST(RunFuzz, NegativeSlackReportsViolations) {
    FuzzConfig cfg = small_config(1);
    cfg.which      = {Family::VonNeumann};
    cfg.tol.slack_tol = -0.5;
    const FuzzReport r = run_fuzz(cfg);
    EXPECT_FALSE(r.passed());
    EXPECT_TRUE(r.violations.front().check_id.starts_with("von_neumann."));
    EXPECT_NE(r.violations.front().seed, 0u);
}
