#include "tracecert/fuzz.hpp"

#include "tracecert/eigenspace.hpp"
#include "tracecert/error.hpp"
#include "tracecert/generators.hpp"
#include "tracecert/polar.hpp"
#include "tracecert/random.hpp"
#include "tracecert/subspace.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <numeric>
#include <sstream>
#include <thread>

namespace tracecert {

std::string_view to_string(SpectrumStyle s) noexcept {
    switch (s) {
    case SpectrumStyle::Uniform: return "uniform";
    case SpectrumStyle::Clustered: return "clustered";
    case SpectrumStyle::Geometric: return "geometric";
    case SpectrumStyle::PrescribedGap: return "prescribed-gap";
    case SpectrumStyle::Mixed: return "mixed";
    }
    return "?";
}

std::string_view to_string(AngleStyle s) noexcept {
    switch (s) {
    case AngleStyle::Tiny: return "tiny";
    case AngleStyle::Moderate: return "moderate";
    case AngleStyle::NearOrthogonal: return "near-orthogonal";
    case AngleStyle::Antipodal: return "antipodal";
    case AngleStyle::Mixed: return "mixed";
    }
    return "?";
}

std::string_view to_string(Family f) noexcept {
    switch (f) {
    case Family::Eig: return "eig";
    case Family::Polar: return "polar";
    case Family::Corollary: return "corollary";
    case Family::Lemma: return "lemma";
    case Family::VonNeumann: return "von-neumann";
    case Family::Angles: return "angles";
    }
    return "?";
}

std::string_view to_string(Preset p) noexcept {
    switch (p) {
    case Preset::None: return "none";
    case Preset::RotationSweep: return "rotation-sweep";
    }
    return "?";
}

namespace {

template <typename E, std::size_t N>
E parse_enum(std::string_view s, const E (&values)[N], const char* what) {
    for (E v : values)
        if (to_string(v) == s) return v;
    throw Error(Errc::InvalidConfig, std::string("unknown ") + what + " '" + std::string(s) + "'");
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (true) {
        const auto end = s.find(sep, pos);
        out.push_back(s.substr(pos, end == std::string_view::npos ? s.size() - pos : end - pos));
        if (end == std::string_view::npos) break;
        pos = end + 1;
    }
    return out;
}

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::uint64_t parse_u64(std::string_view s, const char* what) {
    std::uint64_t v = 0;
    std::size_t used = 0;
    try {
        v = std::stoull(std::string(s), &used, 0);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != s.size() || s.front() == '-') {
        throw Error(Errc::InvalidConfig, std::string("bad ") + what + " '" + std::string(s) + "'");
    }
    return v;
}

double parse_double(std::string_view s, const char* what) {
    std::size_t used = 0;
    double v         = 0.0;
    try {
        v = std::stod(std::string(s), &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != s.size()) {
        throw Error(Errc::InvalidConfig, std::string("bad ") + what + " '" + std::string(s) + "'");
    }
    return v;
}

std::string hex_digest(std::uint64_t h) {
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

// ---------------------------------------------------------------------------
// Instance sampling

struct Record {
    std::string id;
    double lhs = 0.0;
    double rhs = 0.0;
    bool holds = true;
    std::string digest;
};

struct TrialOutcome {
    std::uint64_t seed = 0;
    std::vector<Record> records;
};

class Trial {
public:
    Trial(const FuzzConfig& cfg, std::uint64_t seed) : cfg_(cfg), rng_(seed) { out_.seed = seed; }

    TrialOutcome run(std::size_t index) {
        if (cfg_.preset == Preset::RotationSweep) {
            rotation_sweep(index);
            return std::move(out_);
        }
        if (cfg_.which.contains(Family::Eig)) eig();
        if (cfg_.which.contains(Family::Polar) || cfg_.which.contains(Family::Corollary)) polar();
        if (cfg_.which.contains(Family::Lemma)) lemma();
        if (cfg_.which.contains(Family::VonNeumann)) von_neumann();
        if (cfg_.which.contains(Family::Angles)) angles();
        return std::move(out_);
    }

private:
    void record(const BoundCheck& c, const std::string& digest) {
        out_.records.push_back(Record{c.id, c.lhs, c.rhs, c.holds, digest});
    }

    void record_all(const std::vector<BoundCheck>& checks, const std::string& digest) {
        const bool polar     = cfg_.which.contains(Family::Polar) || cfg_.preset == Preset::RotationSweep;
        const bool corollary = cfg_.which.contains(Family::Corollary) || cfg_.preset == Preset::RotationSweep;
        for (const auto& c : checks) {
            const bool is_corollary = c.id.starts_with("corollary.");
            if ((is_corollary && corollary) || (!is_corollary && polar) || c.id.starts_with("eig.")) record(c, digest);
        }
    }

    void error(std::string_view what, const std::string& digest) {
        out_.records.push_back(Record{"instance.error:" + std::string(what), 0.0, 0.0, false, digest});
    }

    std::uint64_t sub_seed() { return rng_.next(); }

    std::pair<Index, Index> dims() { return cfg_.dims[rng_.below(cfg_.dims.size())]; }

    SpectrumStyle spectrum_style() {
        if (cfg_.spectrum_style != SpectrumStyle::Mixed) return cfg_.spectrum_style;
        return static_cast<SpectrumStyle>(rng_.below(4));
    }

    AngleStyle angle_style() {
        if (cfg_.angle_style != AngleStyle::Mixed) return cfg_.angle_style;
        return static_cast<AngleStyle>(rng_.below(4));
    }

    double log_uniform(double lo, double hi) { return lo * std::pow(hi / lo, rng_.uniform()); }

    // At most n - k angles can be nonzero.
    std::vector<double> thetas(Index n, Index k, AngleStyle style) {
        std::vector<double> t(static_cast<std::size_t>(k), 0.0);
        const Index m = std::min(k, n - k);
        for (Index i = 0; i < m; ++i) {
            double v = 0.0;
            switch (style) {
            case AngleStyle::Tiny: v = 1e-6 * (1.0 - rng_.uniform()); break;
            case AngleStyle::Moderate: v = rng_.uniform(0.05, 1.2); break;
            case AngleStyle::NearOrthogonal: v = std::numbers::pi / 2 - 1e-3 * rng_.uniform(); break;
            case AngleStyle::Antipodal:
            case AngleStyle::Mixed: v = 0.0; break;
            }
            t[static_cast<std::size_t>(i)] = v;
        }
        return t;
    }

    std::vector<double> spectrum(Index n, Index k, SpectrumStyle style) {
        std::vector<double> lam(static_cast<std::size_t>(n));
        switch (style) {
        case SpectrumStyle::Uniform:
            for (auto& x : lam) x = rng_.uniform(-1.0, 1.0);
            break;
        case SpectrumStyle::Clustered: {
            const double gap = log_uniform(1e-6, 1.0);
            for (Index i = 0; i < n; ++i)
                lam[static_cast<std::size_t>(i)] = i < k ? 1.0 + 1e-3 * rng_.uniform() : 1.0 - gap - 1e-3 * rng_.uniform();
            break;
        }
        case SpectrumStyle::Geometric: {
            const double rho = rng_.uniform(0.5, 0.95);
            for (Index i = 0; i < n; ++i) lam[static_cast<std::size_t>(i)] = std::pow(rho, static_cast<double>(i));
            break;
        }
        case SpectrumStyle::PrescribedGap:
        case SpectrumStyle::Mixed: {
            const double g = cfg_.prescribed_gap;
            for (Index i = 0; i < n; ++i)
                lam[static_cast<std::size_t>(i)] = i < k ? g + rng_.uniform() : -rng_.uniform();
            break;
        }
        }
        std::sort(lam.begin(), lam.end(), std::greater<>());
        if (k < n) {
            double norm = 0.0;
            for (double x : lam) norm = std::max(norm, std::abs(x));
            const double need = 1e-6 * norm;
            const auto ku     = static_cast<std::size_t>(k);
            if (lam[ku - 1] - lam[ku] < need) {
                const double lift = 2.0 * need - (lam[ku - 1] - lam[ku]);
                for (std::size_t i = 0; i < ku; ++i) lam[i] += lift;
            }
        }
        const double scale = log_uniform(1e-2, 1e2);
        for (auto& x : lam) x *= scale;
        return lam;
    }

    std::vector<double> singular_spectrum(Index k, SpectrumStyle style) {
        std::vector<double> s(static_cast<std::size_t>(k));
        const double floor = log_uniform(1e-4, 1.0);
        switch (style) {
        case SpectrumStyle::Uniform:
            for (auto& x : s) x = rng_.uniform(floor, 1.0);
            s.front() = 1.0;
            s.back()  = floor;
            break;
        case SpectrumStyle::Clustered:
            for (auto& x : s) x = 1.0 + 1e-3 * rng_.uniform();
            break;
        case SpectrumStyle::Geometric:
            for (Index i = 0; i < k; ++i)
                s[static_cast<std::size_t>(i)] = k == 1 ? 1.0 : std::pow(floor, static_cast<double>(i) / static_cast<double>(k - 1));
            break;
        case SpectrumStyle::PrescribedGap:
        case SpectrumStyle::Mixed: {
            const double lo = std::clamp(cfg_.prescribed_gap, 1e-4, 1.0);
            for (auto& x : s) x = rng_.uniform(lo, 1.0);
            break;
        }
        }
        std::sort(s.begin(), s.end(), std::greater<>());
        const double scale = log_uniform(1e-2, 1e2);
        for (auto& x : s) x *= scale;
        return s;
    }

    void eig() {
        const auto [n, k]  = dims();
        const auto sstyle  = spectrum_style();
        const auto astyle  = angle_style();
        const auto lam     = spectrum(n, k, sstyle);
        const PlantedEig planted = gen_hermitian_planted(lam, sub_seed());
        const StiefelFrame top(CMatrix(planted.basis.mat().leftCols(k)));
        const StiefelFrame p = rotate_frame(top, thetas(n, k, astyle), sub_seed()).times(haar_unitary(k, rng_));
        const std::string digest = hex_digest(matrix_hash(p.mat(), matrix_hash(planted.h.mat())));
        try {
            const EigCertificate cert = certify_eigenspace(planted.h, p, cfg_.tol);
            record_all(cert.checks, digest);
            // The planted spectrum is exact, so the top-k sum needs no eigensolve.
            const double top_sum = std::accumulate(lam.begin(), lam.begin() + k, 0.0);
            const double raw = top_sum - trace_objective(DenseMatrix(CMatrix(planted.h.mat() * p.mat())), p);
            record(make_check("eig.fan", 0.0, raw, cfg_.tol.slack_tol), digest);
        } catch (const Error& err) {
            error(to_string(err.code()), digest);
        }
        if (k == n) return;

        // Non-dominant variant: a k-subset of eigenvectors other than the top k.
        std::vector<Index> idx(static_cast<std::size_t>(n));
        std::iota(idx.begin(), idx.end(), Index{0});
        for (std::size_t i = idx.size() - 1; i > 0; --i) std::swap(idx[i], idx[rng_.below(i + 1)]);
        std::vector<Index> chosen(idx.begin(), idx.begin() + k);
        std::sort(chosen.begin(), chosen.end());
        if (chosen.back() == k - 1) {
            chosen[rng_.below(static_cast<std::uint64_t>(k))] = k + static_cast<Index>(rng_.below(static_cast<std::uint64_t>(n - k)));
        }
        CMatrix inner(n, k);
        for (Index j = 0; j < k; ++j) inner.col(j) = planted.basis.mat().col(chosen[static_cast<std::size_t>(j)]);
        const StiefelFrame p_star(std::move(inner));
        const StiefelFrame q = rotate_frame(p_star, thetas(n, k, angle_style()), sub_seed()).times(haar_unitary(k, rng_));
        const std::string digest2 = hex_digest(matrix_hash(q.mat(), matrix_hash(p_star.mat(), matrix_hash(planted.h.mat()))));
        try {
            const EigCertificate cert = certify_eigenspace_against(planted.h, q, p_star, cfg_.tol);
            for (const auto& c : cert.checks)
                if (c.id == "eig.footnote_lower") record(c, digest2);
        } catch (const Error& err) {
            error(to_string(err.code()), digest2);
        }
    }

    void polar() {
        const auto [n, k] = dims();
        const auto sigma  = singular_spectrum(k, spectrum_style());
        const auto astyle = angle_style();
        const PlantedSvd planted = gen_svd_planted(n, sigma, sub_seed());
        const StiefelFrame p_star(CMatrix(planted.u.mat() * planted.v.mat().adjoint()));
        CMatrix p;
        if (astyle == AngleStyle::Antipodal) {
            p = rng_.below(2) == 0 ? CMatrix(-p_star.mat()) : CMatrix(p_star.mat() * haar_unitary(k, rng_));
        } else {
            const StiefelFrame rotated = rotate_frame(p_star, thetas(n, k, astyle), sub_seed());
            switch (rng_.below(3)) {
            case 0: p = rotated.mat(); break;
            case 1: p = rotated.mat() * haar_unitary(k, rng_); break;
            default: {
                const CMatrix m = rotated.mat().adjoint() * planted.b.mat();
                p = rotated.mat() * polar_decompose(DenseMatrix(m)).p.mat();
                break;
            }
            }
        }
        const StiefelFrame frame(std::move(p), 1e-6);
        const std::string digest = hex_digest(matrix_hash(frame.mat(), matrix_hash(planted.b.mat())));
        try {
            record_all(certify_polar(planted.b, frame, cfg_.tol).checks, digest);
        } catch (const Error& err) {
            error(to_string(err.code()), digest);
        }
    }

    void lemma() {
        const auto [n, k] = dims();
        std::vector<double> sigma = singular_spectrum(k, spectrum_style());
        const Index rank = (k > 1 && rng_.below(2) == 0) ? 1 + static_cast<Index>(rng_.below(static_cast<std::uint64_t>(k - 1))) : k;
        for (Index i = rank; i < k; ++i) sigma[static_cast<std::size_t>(i)] = 0.0;
        const PlantedSvd planted = gen_svd_planted(n, sigma, sub_seed());

        // Maximizer by the completion recipe P = U_1 V_1^H + P2 V_2^H.
        CMatrix p = planted.u.mat().leftCols(rank) * planted.v.mat().leftCols(rank).adjoint();
        if (rank < k) {
            const StiefelFrame u1(CMatrix(planted.u.mat().leftCols(rank)));
            const CMatrix comp = orthonormal_complement(u1).mat() * haar_frame(n - rank, k - rank, rng_).mat();
            p += comp * planted.v.mat().rightCols(k - rank).adjoint();
        }
        const StiefelFrame maximizer(std::move(p));
        const std::string digest = hex_digest(matrix_hash(maximizer.mat(), matrix_hash(planted.b.mat())));
        const MaximizerCheck mc  = check_polar_maximizer(planted.b, maximizer, cfg_.tol);
        record(make_check("lemma.maximizer", mc.trace_norm, mc.objective, cfg_.tol.eq_tol), digest);
        const double defect = std::max({mc.hermitian_defect, -mc.min_eigenvalue, mc.reconstruction_defect});
        record(BoundCheck{"lemma.characterization", defect, cfg_.tol.char_tol,
                          !mc.maximizer || mc.characterization_holds},
               digest);

        const StiefelFrame other = haar_frame(n, k, rng_);
        const std::string digest2 = hex_digest(matrix_hash(other.mat(), matrix_hash(planted.b.mat())));
        record(make_check("lemma.upper", trace_objective(planted.b, other), trace_norm(planted.b), cfg_.tol.slack_tol),
               digest2);
    }

    void von_neumann() {
        const auto [n, k] = dims();
        const DenseMatrix b(gaussian_matrix(n, k, rng_));
        const DenseMatrix c(gaussian_matrix(n, k, rng_));
        const std::string digest = hex_digest(matrix_hash(c.mat(), matrix_hash(b.mat())));
        const VonNeumannResult r = von_neumann_check(b, c);
        record(make_check("von_neumann.ineq", r.lhs, r.rhs, cfg_.tol.slack_tol), digest);

        // Equality: C shares B's singular vectors with order-preserving values.
        const ThinSVD svd = thin_svd(b, cfg_.tol);
        const RVector s2  = svd.sigma.array() * (svd.sigma.array() + 1.0);
        const DenseMatrix twin(CMatrix(svd.u.mat() * s2.cast<Complex>().asDiagonal() * svd.v.mat().adjoint()));
        const VonNeumannResult e = von_neumann_check(b, twin);
        record(make_check("von_neumann.equality", e.rhs, e.lhs, cfg_.tol.slack_tol), digest);
    }

    void angles() {
        const auto [n, k] = dims();
        const StiefelFrame x = haar_frame(n, k, rng_);
        const StiefelFrame y = rotate_frame(x, thetas(n, k, angle_style()), sub_seed()).times(haar_unitary(k, rng_));
        const StiefelFrame z = rng_.below(2) == 0 ? haar_frame(n, k, rng_)
                                                  : rotate_frame(y, thetas(n, k, angle_style()), sub_seed());
        const std::string digest =
            hex_digest(matrix_hash(z.mat(), matrix_hash(y.mat(), matrix_hash(x.mat()))));
        const CanonicalAngleSet xy = canonical_angles(x, y, cfg_.tol);
        const double xz = distF(x, z, cfg_.tol);
        const double yz = distF(y, z, cfg_.tol);
        record(make_check("angles.triangle", xz, xy.distF + yz, cfg_.tol.slack_tol), digest);
        record(make_check("angles.half_lower", xy.half_angle_distF, xy.distF, cfg_.tol.slack_tol), digest);
        record(make_check("angles.half_upper", xy.distF, 2.0 * xy.half_angle_distF, cfg_.tol.slack_tol), digest);
    }

    void rotation_sweep(std::size_t index) {
        const double theta = static_cast<double>(index + 1) / static_cast<double>(cfg_.trials + 1) * std::numbers::pi / 2;
        const double c     = std::cos(theta);
        const double s     = std::sin(theta);
        const StiefelFrame p(DenseMatrix::from_real_row_major(2, 1, std::vector<double>{c, s}));
        if (cfg_.which.contains(Family::Eig)) {
            static constexpr double kGaps[] = {0.1, 1.0, 10.0};
            const double low = rng_.uniform(-1.0, 1.0);
            const double gap = kGaps[index % 3];
            const auto h     = DenseMatrix::from_real_row_major(2, 2, std::vector<double>{low + gap, 0.0, 0.0, low});
            const std::string digest = hex_digest(matrix_hash(p.mat(), matrix_hash(h.mat())));
            try {
                record_all(certify_eigenspace(h, p, cfg_.tol).checks, digest);
            } catch (const Error& err) {
                error(to_string(err.code()), digest);
            }
        }
        if (cfg_.which.contains(Family::Polar) || cfg_.which.contains(Family::Corollary)) {
            const double sigma = rng_.uniform(0.5, 2.0);
            const auto b       = DenseMatrix::from_real_row_major(2, 1, std::vector<double>{sigma, 0.0});
            const std::string digest = hex_digest(matrix_hash(p.mat(), matrix_hash(b.mat())));
            try {
                record_all(certify_polar(b, p, cfg_.tol).checks, digest);
            } catch (const Error& err) {
                error(to_string(err.code()), digest);
            }
        }
    }

    const FuzzConfig& cfg_;
    SplitMix64 rng_;
    TrialOutcome out_;
};

} // namespace

void FuzzConfig::validate() const {
    if (trials == 0) throw Error(Errc::InvalidConfig, "trials must be at least 1");
    if (dims.empty()) throw Error(Errc::InvalidConfig, "dims must not be empty");
    for (const auto& [n, k] : dims) {
        if (k < 1 || k > n) {
            throw Error(Errc::InvalidConfig, "dims " + std::to_string(n) + "x" + std::to_string(k) + " need 1 <= k <= n");
        }
    }
    if (which.empty()) throw Error(Errc::InvalidConfig, "at least one check family is required");
    if (workers == 0) throw Error(Errc::InvalidConfig, "workers must be at least 1");
    if (!(prescribed_gap > 0.0) || !std::isfinite(prescribed_gap)) {
        throw Error(Errc::InvalidConfig, "gap must be positive");
    }
}

SpectrumStyle parse_spectrum_style(std::string_view s) {
    static constexpr SpectrumStyle all[] = {SpectrumStyle::Uniform, SpectrumStyle::Clustered, SpectrumStyle::Geometric,
                                            SpectrumStyle::PrescribedGap, SpectrumStyle::Mixed};
    return parse_enum(s, all, "spectrum style");
}

AngleStyle parse_angle_style(std::string_view s) {
    static constexpr AngleStyle all[] = {AngleStyle::Tiny, AngleStyle::Moderate, AngleStyle::NearOrthogonal,
                                         AngleStyle::Antipodal, AngleStyle::Mixed};
    return parse_enum(s, all, "angle style");
}

Family parse_family(std::string_view s) {
    static constexpr Family all[] = {Family::Eig,   Family::Polar,      Family::Corollary,
                                     Family::Lemma, Family::VonNeumann, Family::Angles};
    return parse_enum(s, all, "check family");
}

Preset parse_preset(std::string_view s) {
    static constexpr Preset all[] = {Preset::None, Preset::RotationSweep};
    return parse_enum(s, all, "preset");
}

std::vector<std::pair<Index, Index>> parse_dims(std::string_view s) {
    std::vector<std::pair<Index, Index>> out;
    for (auto item : split(s, ',')) {
        item = trim(item);
        const auto x = item.find('x');
        if (x == std::string_view::npos) throw Error(Errc::InvalidConfig, "dims entry '" + std::string(item) + "' is not NxK");
        out.emplace_back(static_cast<Index>(parse_u64(item.substr(0, x), "dims")),
                         static_cast<Index>(parse_u64(item.substr(x + 1), "dims")));
    }
    return out;
}

FuzzConfig parse_fuzz_config(std::string_view text) {
    FuzzConfig cfg;
    for (auto line : split(text, '\n')) {
        line = trim(line);
        if (line.empty() || line.front() == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw Error(Errc::InvalidConfig, "expected key=value, got '" + std::string(line) + "'");
        const auto key   = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));
        if (key == "seed") cfg.seed = parse_u64(value, "seed");
        else if (key == "trials") cfg.trials = parse_u64(value, "trials");
        else if (key == "dims") cfg.dims = parse_dims(value);
        else if (key == "spectrum_style") cfg.spectrum_style = parse_spectrum_style(value);
        else if (key == "gap") cfg.prescribed_gap = parse_double(value, "gap");
        else if (key == "angle_style") cfg.angle_style = parse_angle_style(value);
        else if (key == "which") {
            cfg.which.clear();
            for (auto f : split(value, ',')) cfg.which.insert(parse_family(trim(f)));
        } else if (key == "preset") cfg.preset = parse_preset(value);
        else if (key == "workers") cfg.workers = static_cast<unsigned>(parse_u64(value, "workers"));
        else if (key.starts_with("tol.")) cfg.tol.set(key.substr(4), parse_double(value, "tolerance"));
        else throw Error(Errc::InvalidConfig, "unknown key '" + std::string(key) + "'");
    }
    return cfg;
}

std::string format_fuzz_config(const FuzzConfig& cfg) {
    std::ostringstream out;
    out.precision(17);
    out << "seed=" << cfg.seed << '\n' << "trials=" << cfg.trials << '\n' << "dims=";
    for (std::size_t i = 0; i < cfg.dims.size(); ++i) out << (i ? "," : "") << cfg.dims[i].first << 'x' << cfg.dims[i].second;
    out << '\n' << "spectrum_style=" << to_string(cfg.spectrum_style) << '\n';
    out << "gap=" << cfg.prescribed_gap << '\n';
    out << "angle_style=" << to_string(cfg.angle_style) << '\n' << "which=";
    bool first = true;
    for (Family f : cfg.which) {
        out << (first ? "" : ",") << to_string(f);
        first = false;
    }
    out << '\n' << "preset=" << to_string(cfg.preset) << '\n' << "workers=" << cfg.workers << '\n';
    for (const auto& [name, value] : cfg.tol.items()) out << "tol." << name << '=' << value << '\n';
    return out.str();
}

FuzzReport run_fuzz(const FuzzConfig& config) {
    config.validate();
    const auto start = std::chrono::steady_clock::now();

    std::vector<TrialOutcome> outcomes(config.trials);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < config.trials; i = next++) {
            outcomes[i] = Trial(config, derive_seed(config.seed, i)).run(i);
        }
    };
    const unsigned workers = std::min<unsigned>(config.workers, static_cast<unsigned>(config.trials));
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    }

    FuzzReport report;
    report.total = config.trials;
    std::map<std::string, double> ratio_sums;
    for (const auto& outcome : outcomes) {
        for (const auto& r : outcome.records) {
            ++report.checks_evaluated;
            auto& t = report.tightness[r.id];
            ++t.evaluated;
            if (!r.holds) {
                report.violations.push_back(Violation{r.id, outcome.seed, r.digest, r.lhs, r.rhs, r.rhs - r.lhs});
            }
            if (r.rhs >= kRatioFloor && std::isfinite(r.lhs)) {
                const double ratio = r.lhs / r.rhs;
                ratio_sums[r.id] += ratio;
                if (t.ratios == 0 || ratio > t.max_ratio) {
                    t.max_ratio     = ratio;
                    t.argmax_digest = r.digest;
                }
                ++t.ratios;
            }
        }
    }
    for (auto& [id, t] : report.tightness) {
        if (t.ratios > 0) t.mean_ratio = ratio_sums[id] / static_cast<double>(t.ratios);
    }
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

} // namespace tracecert
