#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "locones/errors.hpp"
#include "locones/lawlor_criterion.hpp"
#include "locones/report.hpp"
#include "locones/sphere_moments.hpp"

using namespace locones;

namespace {

constexpr int exit_usage = 64;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// "lo:hi:step" or a comma-separated list
std::vector<double> parse_grid(const std::string& text)
{
    std::vector<double> out;
    if (text.find(':') != std::string::npos) {
        double lo, hi, step;
        char c1, c2;
        std::istringstream is(text);
        if (!(is >> lo >> c1 >> hi >> c2 >> step) || c1 != ':' || c2 != ':' || !(step > 0) || hi < lo)
            throw UsageError("bad --s-grid '" + text + "', expected lo:hi:step");
        const int count = static_cast<int>(std::floor((hi - lo) / step + 1e-9)) + 1;
        for (int i = 0; i < count; ++i)
            out.push_back(lo + i * step);
    } else {
        std::istringstream is(text);
        std::string tok;
        while (std::getline(is, tok, ','))
            out.push_back(std::stod(tok));
    }
    if (out.empty())
        throw UsageError("empty --s-grid");
    for (double s : out)
        if (!(s > 0 && s < M_PI / 2))
            throw UsageError("--s-grid values must lie in (0, pi/2)");
    return out;
}

class Output {
public:
    explicit Output(const std::string& path)
    {
        if (!path.empty()) {
            file_.open(path);
            if (!file_)
                throw UsageError("cannot open output file " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

struct Common {
    std::string family = "I";
    int n = 1;
    std::string format;
    std::string out;
};

void add_family(CLI::App* cmd, Common& c)
{
    cmd->add_option("--family", c.family, "I, II or III")->check(CLI::IsMember({"I", "II", "III"}));
    cmd->add_option("--n", c.n, "family parameter")->check(CLI::PositiveNumber);
}

FamilyParams checked_params(const Common& c)
{
    try {
        return constants(parse_family(c.family), c.n);
    } catch (const std::domain_error& e) {
        throw UsageError(e.what());
    }
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Lawlor curvature criterion for Lawson-Osserman cones"};
    app.require_subcommand(1);
    app.set_version_flag("--version", tool_version());

    Common verify_opts;
    verify_opts.format = "json";
    CriterionConfig cfg;
    std::string grid_spec = "0.1:1.5:0.1";
    auto* verify = app.add_subcommand("verify", "run the full criterion and write a report");
    add_family(verify, verify_opts);
    verify->add_option("--seed", cfg.seed, "base seed");
    verify->add_option("--fd-step", cfg.fd_step, "finite-difference step")->check(CLI::Range(1e-4, 1e-2));
    verify->add_option("--ode-tol", cfg.ode_tol, "vanishing-angle tolerance (rad)")->check(CLI::PositiveNumber);
    verify->add_option("--gap-tol", cfg.gap_tol, "normal-radius gap tolerance")->check(CLI::PositiveNumber);
    verify->add_option("--restarts", cfg.restarts, "min_det restarts (0: 8 + 2q)")->check(CLI::NonNegativeNumber);
    verify->add_option("--s-grid", grid_spec, "probe grid, lo:hi:step or a,b,c");
    verify->add_option("--normals", cfg.normals, "probe normal directions")->check(CLI::PositiveNumber);
    verify->add_option("--ascent-restarts", cfg.ascent_restarts, "probe ascent restarts")
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--format", verify_opts.format)->check(CLI::IsMember({"json", "text"}));
    verify->add_option("--out", verify_opts.out, "output path (default stdout)");

    Common sff_opts;
    sff_opts.format = "csv";
    double sff_step = 1e-3;
    auto* sff = app.add_subcommand("sff", "dump second fundamental form tables");
    add_family(sff, sff_opts);
    sff->add_option("--fd-step", sff_step)->check(CLI::Range(1e-4, 1e-2));
    sff->add_option("--format", sff_opts.format)->check(CLI::IsMember({"csv", "json"}));
    sff->add_option("--out", sff_opts.out);

    int dim = 12;
    double S = 1.0, van_tol = 1e-6;
    std::string van_format = "text", van_out;
    auto* van = app.add_subcommand("vanishing", "vanishing angle V(m, S) of the bound profile");
    van->add_option("--dim", dim, "cone dimension m (>= 12)")->required();
    van->add_option("--s", S, "curvature bound S")->required()->check(CLI::PositiveNumber);
    van->add_option("--ode-tol", van_tol)->check(CLI::PositiveNumber);
    van->add_option("--format", van_format)->check(CLI::IsMember({"text", "json"}));
    van->add_option("--out", van_out);

    Common mom_opts;
    mom_opts.format = "text";
    auto* mom = app.add_subcommand("moments", "exact Gram matrix of the eigenfunction basis");
    mom->add_option("--family", mom_opts.family, "I or II")->check(CLI::IsMember({"I", "II"}));
    mom->add_option("--n", mom_opts.n)->check(CLI::PositiveNumber);
    mom->add_option("--format", mom_opts.format)->check(CLI::IsMember({"text", "json"}));
    mom->add_option("--out", mom_opts.out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*verify) {
            const FamilyParams p = checked_params(verify_opts);
            cfg.s_grid = parse_grid(grid_spec);
            const CriterionReport rep = verdict(p.family, p.n, cfg);
            Output out(verify_opts.out);
            if (verify_opts.format == "json")
                out.stream() << report_json(rep).dump(2) << '\n';
            else
                write_report_text(out.stream(), rep);
            return rep.verdict == Verdict::inconclusive ? 2 : 0;
        }
        if (*sff) {
            const FamilyParams p = checked_params(sff_opts);
            const SffTensor numeric = sff_numeric(p, sff_step);
            const SffTensor closed = sff_closed_form(p);
            const double diff = max_abs_diff(numeric, closed);
            Output out(sff_opts.out);
            if (sff_opts.format == "csv")
                write_sff_csv(out.stream(), numeric, &closed);
            else
                out.stream() << sff_json(numeric, closed).dump(2) << '\n';
            std::cerr << "normals " << numeric.q() << "  max abs diff " << diff << '\n';
            return diff <= 1e-7 ? 0 : 1;
        }
        if (*van) {
            if (dim < 12)
                throw UsageError("vanishing: cone dimension must be >= 12; below 12 the bound (1 - S t) e^{S t} is "
                                 "too weak and the sharper control is not specified here, use 'verify' (exact "
                                 "determinant profile) instead");
            const std::optional<double> theta = V(dim, S);
            Output out(van_out);
            if (van_format == "json") {
                ordered_json j = {{"dim", dim}, {"S", S}};
                if (theta)
                    j["theta0_rad"] = *theta, j["theta0_deg"] = *theta * 180.0 / M_PI;
                else
                    j["outcome"] = "NO_VANISHING";
                out.stream() << j.dump(2) << '\n';
            } else {
                out.stream().precision(12);
                if (theta)
                    out.stream() << "theta0 = " << *theta * 180.0 / M_PI << " deg = " << *theta << " rad\n";
                else
                    out.stream() << "NO_VANISHING\n";
            }
            return 0;
        }
        if (*mom) {
            const Family f = parse_family(mom_opts.family);
            if (mom_opts.n < 1)
                throw UsageError("--n must be >= 1");
            const GramMatrix g = gram_matrix(f, mom_opts.n);
            Output out(mom_opts.out);
            const bool ok = is_exact_identity(g);
            if (mom_opts.format == "json") {
                out.stream() << gram_json(f, mom_opts.n, g).dump(2) << '\n';
            } else {
                const auto basis = eigen_basis(f, mom_opts.n);
                for (std::size_t i = 0; i < g.size(); ++i) {
                    out.stream() << basis[i].label << ':';
                    for (const auto& v : g[i])
                        out.stream() << ' ' << to_string(v);
                    out.stream() << '\n';
                }
                out.stream() << "identity " << (ok ? "yes" : "no") << '\n';
            }
            return ok ? 0 : 1;
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const InternalConsistencyError& e) {
        std::cerr << "internal consistency failure: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return exit_usage;
}
