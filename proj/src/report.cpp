#include "tracecert/report.hpp"

namespace tracecert {

namespace {

Json optional_number(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

Json check_list(const std::vector<BoundCheck>& checks) {
    Json out = Json::array();
    for (const auto& c : checks) out.push_back(to_json(c));
    return out;
}

} // namespace

Json to_json(const BoundCheck& c) {
    return Json{{"id", c.id}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"slack", c.slack()}, {"holds", c.holds}};
}

Json to_json(const CanonicalAngleSet& a) {
    return Json{{"thetas", a.thetas},
                {"sines", a.sines},
                {"cosines", a.cosines},
                {"dist2", a.dist2},
                {"distF", a.distF},
                {"half_angle_distF", a.half_angle_distF}};
}

Json to_json(const EigCertificate& c) {
    return Json{{"k", c.k},
                {"eta", c.eta},
                {"gap", c.gap},
                {"spread", c.spread},
                {"epsilon", c.epsilon},
                {"residual_f", c.residual_f},
                {"sin_theta_f", c.sin_theta_f},
                {"lower_bound", c.lower_bound},
                {"slack_lower", c.slack_lower},
                {"slack_upper", c.slack_upper},
                {"upper_applicable", c.upper_applicable},
                {"vacuous", c.vacuous},
                {"chain_verified", c.chain_verified},
                {"checks", check_list(c.checks)}};
}

Json to_json(const PolarCertificate& c) {
    return Json{{"eta", c.eta},
                {"eta_variant", c.eta_variant},
                {"trace_norm_b", c.trace_norm_b},
                {"sigma_min", c.sigma_min},
                {"norm2_b", c.norm2_b},
                {"sigma_min_phb", c.sigma_min_phb},
                {"epsilon", c.epsilon},
                {"epsilon_variant", c.epsilon_variant},
                {"residual_f", c.residual_f},
                {"sin_theta_f", c.sin_theta_f},
                {"half_angle_f", c.half_angle_f},
                {"frob_dist", c.frob_dist},
                {"case_b_applicable", c.case_b_applicable},
                {"case_b_bound", optional_number(c.case_b_bound)},
                {"case_c_applicable", c.case_c_applicable},
                {"aligned_frob_dist", optional_number(c.aligned_frob_dist)},
                {"aligned_bound", optional_number(c.aligned_bound)},
                {"chain_verified", c.chain_verified},
                {"checks", check_list(c.checks)}};
}

Json to_json(const FuzzReport& r) {
    Json violations = Json::array();
    for (const auto& v : r.violations) {
        violations.push_back(Json{{"check_id", v.check_id},
                                  {"seed", v.seed},
                                  {"instance_digest", v.instance_digest},
                                  {"lhs", v.lhs},
                                  {"rhs", v.rhs},
                                  {"slack", v.slack}});
    }
    Json tightness = Json::object();
    for (const auto& [id, t] : r.tightness) {
        tightness[id] = Json{{"max_ratio", t.max_ratio},
                             {"mean_ratio", t.mean_ratio},
                             {"argmax_digest", t.argmax_digest},
                             {"evaluated", t.evaluated},
                             {"ratios", t.ratios}};
    }
    return Json{{"total", r.total},
                {"checks_evaluated", r.checks_evaluated},
                {"violations", violations},
                {"tightness", tightness},
                {"elapsed_seconds", r.elapsed_seconds}};
}

Json to_json(const Tolerances& tol) {
    Json out = Json::object();
    for (const auto& [name, value] : tol.items()) out[name] = value;
    return out;
}

Json make_envelope(const std::string& command, const std::vector<InputRef>& inputs, const Tolerances& tol,
                   Json result, bool verified) {
    Json in = Json::array();
    for (const auto& i : inputs) in.push_back(Json{{"path", i.path}, {"digest", i.digest}});
    return Json{{"version", kSchemaVersion},
                {"command", command},
                {"inputs", in},
                {"tolerances", to_json(tol)},
                {"result", std::move(result)},
                {"verified", verified}};
}

} // namespace tracecert
