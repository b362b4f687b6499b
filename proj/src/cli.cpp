#include "tracecert/cli.hpp"

#include "tracecert/error.hpp"
#include "tracecert/generators.hpp"
#include "tracecert/matrix_io.hpp"
#include "tracecert/report.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

namespace tracecert {

namespace {

constexpr double kUnset = std::numeric_limits<double>::quiet_NaN();

struct GlobalOptions {
    std::string json_path;
    std::vector<std::string> tol_pairs;
    std::uint64_t seed = 0;
    double frame_tol   = kUnset;
    double gap_tol     = kUnset;
    double rank_tol    = kUnset;
    double slack_tol   = kUnset;
};

struct LoadedMatrix {
    DenseMatrix matrix;
    InputRef ref;
};

LoadedMatrix load(const std::string& path) {
    const std::string text = read_text_file(path);
    try {
        return {parse_matrix(text), InputRef{path, content_digest(text)}};
    } catch (const Error& e) {
        throw Error(e.code(), path + ": " + e.what());
    }
}

StiefelFrame as_frame(const LoadedMatrix& m, const Tolerances& tol) {
    try {
        return StiefelFrame(m.matrix, tol.frame_tol);
    } catch (const Error& e) {
        throw Error(e.code(), m.ref.path + ": " + e.what());
    }
}

Tolerances resolve_tolerances(const GlobalOptions& g, Tolerances tol = {}) {
    for (const auto& pair : g.tol_pairs) {
        const auto eq = pair.find('=');
        if (eq == std::string::npos) throw Error(Errc::InvalidConfig, "--tol expects name=value, got '" + pair + "'");
        double value = 0.0;
        try {
            std::size_t used = 0;
            value            = std::stod(pair.substr(eq + 1), &used);
            if (used != pair.size() - eq - 1) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw Error(Errc::InvalidConfig, "--tol value in '" + pair + "' is not a number");
        }
        tol.set(pair.substr(0, eq), value);
    }
    if (!std::isnan(g.frame_tol)) tol.frame_tol = g.frame_tol;
    if (!std::isnan(g.gap_tol)) tol.gap_tol = g.gap_tol;
    if (!std::isnan(g.rank_tol)) tol.rank_tol = g.rank_tol;
    if (!std::isnan(g.slack_tol)) tol.slack_tol = g.slack_tol;
    return tol;
}

int emit(const Json& envelope, const GlobalOptions& g, std::ostream& out, bool verified) {
    const std::string text = envelope.dump(2) + "\n";
    out << text;
    if (!g.json_path.empty()) {
        std::ofstream file(g.json_path, std::ios::binary);
        if (!file) throw Error(Errc::ParseError, "cannot write " + g.json_path);
        file << text;
    }
    return verified ? kExitVerified : kExitViolated;
}

bool angles_consistent(const CanonicalAngleSet& a, double slack_tol) {
    if (!make_check("", a.half_angle_distF, a.distF, slack_tol).holds) return false;
    if (!make_check("", a.distF, 2.0 * a.half_angle_distF, slack_tol).holds) return false;
    for (double t : a.thetas)
        if (t < 0.0 || t > std::acos(-1.0) / 2 + 1e-15) return false;
    return true;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Certified a posteriori error bounds for dominant eigenspaces and orthonormal polar factors"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions g;
    app.add_option("--json", g.json_path, "Also write the JSON envelope to this path");
    app.add_option("--tol", g.tol_pairs, "Override a tolerance, name=value (repeatable)");
    auto* seed_opt = app.add_option("--seed", g.seed, "Master seed for fuzz and gen");
    app.add_option("--frame-tol", g.frame_tol, "Orthonormality tolerance for input frames");
    app.add_option("--gap-tol", g.gap_tol, "Relative eigengap treated as zero");
    app.add_option("--rank-tol", g.rank_tol, "Relative singular value treated as zero");
    app.add_option("--slack-tol", g.slack_tol, "Relative slack allowed on verified inequalities");

    std::string x_path, y_path;
    auto* angles = app.add_subcommand("angles", "Canonical angles between R(X) and R(Y)");
    angles->add_option("X", x_path, "n x k frame file")->required();
    angles->add_option("Y", y_path, "n x k frame file")->required();

    std::string h_path, p_path, against_path;
    auto* eig = app.add_subcommand("eig-cert", "Certify P against the dominant eigenspace of H");
    eig->add_option("H", h_path, "Hermitian n x n matrix file")->required();
    eig->add_option("P", p_path, "n x k frame file")->required();
    eig->add_option("--against", against_path, "Compare with this invariant subspace instead (lower bound only)");

    std::string b_path, q_path;
    auto* polar = app.add_subcommand("polar-cert", "Certify P against the orthonormal polar factor of B");
    polar->add_option("B", b_path, "n x k matrix file")->required();
    polar->add_option("P", q_path, "n x k frame file")->required();

    std::string config_path, dims, which, spectrum, angle_style, preset;
    std::size_t trials = 0;
    unsigned workers   = 1;
    double gap         = 1.0;
    auto* fuzz         = app.add_subcommand("fuzz", "Seeded campaign over every inequality");
    fuzz->add_option("--config", config_path, "key=value config file; flags override it");
    auto* trials_opt  = fuzz->add_option("--trials", trials, "Number of trials");
    auto* dims_opt    = fuzz->add_option("--dims", dims, "Comma list of NxK shapes, e.g. 20x5,10x2");
    auto* which_opt   = fuzz->add_option("--which", which, "Comma list of eig,polar,corollary,lemma,von-neumann,angles");
    auto* spec_opt    = fuzz->add_option("--spectrum", spectrum, "uniform|clustered|geometric|prescribed-gap|mixed");
    auto* gap_opt     = fuzz->add_option("--gap", gap, "Gap for the prescribed-gap spectrum style");
    auto* angle_opt   = fuzz->add_option("--angles", angle_style, "tiny|moderate|near-orthogonal|antipodal|mixed");
    auto* preset_opt  = fuzz->add_option("--preset", preset, "none|rotation-sweep");
    auto* workers_opt = fuzz->add_option("--workers", workers, "Worker threads (results do not depend on it)");

    std::string out_path;
    auto* gen = app.add_subcommand("gen", "Write a generated matrix file");
    gen->require_subcommand(1);
    gen->add_option("--out", out_path, "Output matrix file")->required();
    std::vector<double> spectrum_values, sigma_values, theta_values;
    Index gen_n = 0, gen_k = 0;
    std::string frame_path;
    auto* gen_herm = gen->add_subcommand("hermitian", "U diag(spectrum) U^H");
    gen_herm->add_option("--spectrum", spectrum_values, "Comma list of eigenvalues")->required()->delimiter(',');
    auto* gen_stiefel_cmd = gen->add_subcommand("stiefel", "Haar random n x k frame");
    gen_stiefel_cmd->add_option("--n", gen_n)->required();
    gen_stiefel_cmd->add_option("--k", gen_k)->required();
    auto* gen_svals = gen->add_subcommand("svals", "U diag(sigma) V^H");
    gen_svals->add_option("--n", gen_n)->required();
    gen_svals->add_option("--k", gen_k)->required();
    gen_svals->add_option("--sigma", sigma_values, "Comma list of singular values")->required()->delimiter(',');
    auto* gen_rotate = gen->add_subcommand("rotate", "Frame at prescribed canonical angles from another frame");
    gen_rotate->add_option("--frame", frame_path, "n x k frame file")->required();
    gen_rotate->add_option("--thetas", theta_values, "Comma list of k angles")->required()->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitVerified;
    } catch (const CLI::ParseError& e) {
        err << "tracecert: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        const Tolerances tol = resolve_tolerances(g);

        if (angles->parsed()) {
            const auto x = load(x_path);
            const auto y = load(y_path);
            const CanonicalAngleSet a = canonical_angles(as_frame(x, tol), as_frame(y, tol), tol);
            const bool ok = angles_consistent(a, tol.slack_tol);
            return emit(make_envelope("angles", {x.ref, y.ref}, tol, to_json(a), ok), g, out, ok);
        }
        if (eig->parsed()) {
            const auto h = load(h_path);
            const auto p = load(p_path);
            if (against_path.empty()) {
                const EigCertificate c = certify_eigenspace(h.matrix, as_frame(p, tol), tol);
                return emit(make_envelope("eig-cert", {h.ref, p.ref}, tol, to_json(c), c.chain_verified), g, out,
                            c.chain_verified);
            }
            const auto s = load(against_path);
            const EigCertificate c = certify_eigenspace_against(h.matrix, as_frame(p, tol), as_frame(s, tol), tol);
            return emit(make_envelope("eig-cert", {h.ref, p.ref, s.ref}, tol, to_json(c), c.chain_verified), g, out,
                        c.chain_verified);
        }
        if (polar->parsed()) {
            const auto b = load(b_path);
            const auto p = load(q_path);
            const PolarCertificate c = certify_polar(b.matrix, as_frame(p, tol), tol);
            return emit(make_envelope("polar-cert", {b.ref, p.ref}, tol, to_json(c), c.chain_verified), g, out,
                        c.chain_verified);
        }
        if (fuzz->parsed()) {
            FuzzConfig cfg;
            std::vector<InputRef> inputs;
            if (!config_path.empty()) {
                const std::string text = read_text_file(config_path);
                cfg = parse_fuzz_config(text);
                inputs.push_back(InputRef{config_path, content_digest(text)});
            }
            cfg.tol = resolve_tolerances(g, cfg.tol);
            if (seed_opt->count() > 0) cfg.seed = g.seed;
            if (trials_opt->count() > 0) cfg.trials = trials;
            if (dims_opt->count() > 0) cfg.dims = parse_dims(dims);
            if (which_opt->count() > 0) {
                cfg.which.clear();
                std::stringstream ss(which);
                for (std::string item; std::getline(ss, item, ',');) cfg.which.insert(parse_family(item));
            }
            if (spec_opt->count() > 0) cfg.spectrum_style = parse_spectrum_style(spectrum);
            if (gap_opt->count() > 0) cfg.prescribed_gap = gap;
            if (angle_opt->count() > 0) cfg.angle_style = parse_angle_style(angle_style);
            if (preset_opt->count() > 0) cfg.preset = parse_preset(preset);
            if (workers_opt->count() > 0) cfg.workers = workers;
            cfg.validate();
            const FuzzReport report = run_fuzz(cfg);
            return emit(make_envelope("fuzz", inputs, cfg.tol, to_json(report), report.passed()), g, out,
                        report.passed());
        }
        if (gen->parsed()) {
            DenseMatrix m;
            std::string kind;
            std::vector<InputRef> inputs;
            if (gen_herm->parsed()) {
                kind = "hermitian";
                m    = gen_hermitian(static_cast<Index>(spectrum_values.size()), spectrum_values, g.seed);
            } else if (gen_stiefel_cmd->parsed()) {
                kind = "stiefel";
                if (gen_k < 1 || gen_k > gen_n) throw Error(Errc::InvalidConfig, "need 1 <= k <= n");
                m = gen_stiefel(gen_n, gen_k, g.seed).matrix();
            } else if (gen_svals->parsed()) {
                kind = "svals";
                if (gen_k < 1 || gen_k > gen_n) throw Error(Errc::InvalidConfig, "need 1 <= k <= n");
                m = gen_with_singular_values(gen_n, gen_k, sigma_values, g.seed);
            } else {
                kind          = "rotate";
                const auto fr = load(frame_path);
                inputs.push_back(fr.ref);
                m = rotate_frame(as_frame(fr, tol), theta_values, g.seed).matrix();
            }
            const std::string text = format_matrix(m, "tracecert gen " + kind + " seed=" + std::to_string(g.seed));
            {
                std::ofstream file(out_path, std::ios::binary);
                if (!file) throw Error(Errc::ParseError, "cannot write " + out_path);
                file << text;
            }
            Json result{{"kind", kind},       {"seed", g.seed},   {"out", out_path},
                        {"rows", m.rows()},   {"cols", m.cols()}, {"digest", content_digest(text)}};
            return emit(make_envelope("gen", inputs, tol, std::move(result), true), g, out, true);
        }
    } catch (const Error& e) {
        err << "tracecert: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "tracecert: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace tracecert
