#include "locones/report.hpp"

#include <cmath>
#include <ostream>

namespace locones {

std::string tool_version() { return LOCONES_VERSION; }

namespace {

double degrees(double rad) { return rad * 180.0 / M_PI; }

}  // namespace

ordered_json report_json(const CriterionReport& r)
{
    const FamilyParams& p = r.params;
    ordered_json j;
    j["family"] = to_string(p.family);
    j["n"] = p.n;
    j["dims"] = {{"source", p.source_dim}, {"target", p.target_dim}, {"cone", p.cone_dim()}};
    j["constants"] = {{"a", p.a}, {"b", p.b}, {"c_alpha", p.c_alpha}, {"d", p.d}};
    j["s_squared"] = {{"closed_form", r.s2_closed_form}, {"eigen", r.s2_eigen}};
    j["sff_max_diff"] = r.sff_max_diff;

    ordered_json v;
    v["outcome"] = r.vanishing.vanishes() ? "vanishes" : "stalls";
    if (r.vanishing.vanishes()) {
        v["theta0_rad"] = r.vanishing.theta;
        v["theta0_deg"] = degrees(r.vanishing.theta);
    } else {
        v["theta0_rad"] = nullptr;
        v["theta0_deg"] = nullptr;
    }
    v["profile"] = r.profile;
    j["vanishing"] = v;

    ordered_json grid = ordered_json::array();
    for (std::size_t k = 0; k < r.probe.s_grid.size(); ++k)
        grid.push_back({{"s", r.probe.s_grid[k]}, {"gap", r.probe.gaps[k]}});
    j["normal_radius"] = {{"min_gap", r.probe.min_gap}, {"grid", grid}, {"passes", r.probe.passes()}};
    j["verdict"] = to_string(r.verdict);

    const CriterionConfig& c = r.config;
    j["config_echo"] = {{"seed", c.seed},
                        {"fd_step", c.fd_step},
                        {"ode_tol", c.ode_tol},
                        {"gap_tol", c.gap_tol},
                        {"restarts", c.restarts > 0 ? c.restarts : default_restarts(p.normal_dim())},
                        {"s_grid", c.s_grid},
                        {"normals", c.normals},
                        {"ascent_restarts", c.ascent_restarts}};
    j["tool_version"] = tool_version();
    return j;
}

void write_report_text(std::ostream& os, const CriterionReport& r)
{
    const FamilyParams& p = r.params;
    os.precision(17);
    os << "family " << to_string(p.family) << "  n " << p.n << "  link dim " << p.source_dim << "  target S^"
       << p.target_dim << "  cone dim " << p.cone_dim() << '\n';
    os << "a " << p.a << "  b " << p.b << "  d " << p.d << '\n';
    os << "S^2 closed form " << r.s2_closed_form << "  eigenvalue " << r.s2_eigen << '\n';
    os << "sff max |numeric - closed form| " << r.sff_max_diff << "  max |trace| " << r.max_trace << '\n';
    os << "profile " << r.profile << ": ";
    if (r.vanishing.vanishes())
        os << "theta0 = " << degrees(r.vanishing.theta) << " deg (" << r.vanishing.theta << " rad)";
    else
        os << "stalls at theta = " << r.vanishing.theta << " rad";
    os << "  steps " << r.vanishing.steps << "  final log r " << r.vanishing.final_log_r << '\n';
    if (!r.vanishing.note.empty())
        os << "  " << r.vanishing.note << '\n';
    os << "normal radius probe: " << r.probe.samples << " normals, min gap " << r.probe.min_gap
       << (r.probe.passes() ? "  PASS" : "  FAIL") << '\n';
    for (std::size_t k = 0; k < r.probe.s_grid.size(); ++k)
        os << "  s " << r.probe.s_grid[k] << "  gap " << r.probe.gaps[k] << '\n';
    os << "verdict " << to_string(r.verdict) << '\n';
    os << "  " << r.note << '\n';
}

std::string to_string(const ScaledValue& v)
{
    if (v.is_zero())
        return "0";
    if (v.radicand == 1)
        return v.coeff.str();
    return v.coeff.str() + "*sqrt(" + v.radicand.str() + ")";
}

ordered_json gram_json(Family family, int n, const GramMatrix& g)
{
    ordered_json rows = ordered_json::array();
    for (const auto& row : g) {
        ordered_json r = ordered_json::array();
        for (const auto& v : row)
            r.push_back(to_string(v));
        rows.push_back(r);
    }
    ordered_json names = ordered_json::array();
    for (const auto& f : eigen_basis(family, n))
        names.push_back(f.label);
    return {{"family", to_string(family)},
            {"n", n},
            {"basis", names},
            {"gram", rows},
            {"identity", is_exact_identity(g)}};
}

ordered_json sff_json(const SffTensor& numeric, const SffTensor& closed)
{
    ordered_json rows = ordered_json::array();
    for (int tau = 0; tau < numeric.q(); ++tau)
        for (int A = 0; A < numeric.d(); ++A)
            for (int B = A; B < numeric.d(); ++B) {
                const double x = numeric[tau](A, B), y = closed[tau](A, B);
                if (x == 0.0 && y == 0.0)
                    continue;
                rows.push_back({{"tau_label", numeric.frame.labels[tau]},
                                {"A", A + 1},
                                {"B", B + 1},
                                {"value", x},
                                {"closed_form", y},
                                {"abs_diff", std::abs(x - y)}});
            }
    ordered_json traces = ordered_json::object();
    for (int tau = 0; tau < numeric.q(); ++tau)
        traces[numeric.frame.labels[tau]] = closed[tau].trace();
    return {{"family", to_string(numeric.params.family)},
            {"n", numeric.params.n},
            {"labels", numeric.frame.labels},
            {"entries", rows},
            {"traces", traces},
            {"max_abs_diff", max_abs_diff(numeric, closed)}};
}

}  // namespace locones
