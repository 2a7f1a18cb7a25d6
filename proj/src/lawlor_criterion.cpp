#include "locones/lawlor_criterion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include "locones/errors.hpp"
#include "locones/ode.hpp"

namespace locones {

namespace {

constexpr double nan_v = std::numeric_limits<double>::quiet_NaN();

struct SparseEntry {
    int a, b;
    double v;
};

// h^tau as entry lists; both triangles are stored
std::vector<std::vector<SparseEntry>> sparse(const SffTensor& s)
{
    std::vector<std::vector<SparseEntry>> out(s.q());
    for (int tau = 0; tau < s.q(); ++tau)
        for (int a = 0; a < s.d(); ++a)
            for (int b = 0; b < s.d(); ++b)
                if (s[tau](a, b) != 0.0)
                    out[tau].push_back({a, b, s[tau](a, b)});
    return out;
}

class DetObjective {
public:
    DetObjective(const std::vector<std::vector<SparseEntry>>& h, int d, double t) : h_(h), d_(d), t_(t) {}

    Eigen::MatrixXd assemble(const Eigen::VectorXd& lam) const
    {
        Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d_, d_);
        for (std::size_t tau = 0; tau < h_.size(); ++tau) {
            const double l = lam[static_cast<Eigen::Index>(tau)];
            for (const auto& e : h_[tau])
                m(e.a, e.b) += l * e.v;
        }
        return m;
    }

    double operator()(const Eigen::VectorXd& lam, Eigen::VectorXd& grad) const
    {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(assemble(lam));
        const Eigen::VectorXd& mu = es.eigenvalues();
        std::vector<double> f(d_), pre(d_ + 1, 1.0), suf(d_ + 1, 1.0);
        for (int i = 0; i < d_; ++i)
            f[i] = 1.0 - t_ * mu[i];
        for (int i = 0; i < d_; ++i)
            pre[i + 1] = pre[i] * f[i];
        for (int i = d_ - 1; i >= 0; --i)
            suf[i] = suf[i + 1] * f[i];
        Eigen::VectorXd w(d_);
        for (int i = 0; i < d_; ++i)
            w[i] = pre[i] * suf[i + 1];
        // d det / d lambda_tau = -t <adj(I - tH), h^tau>
        const Eigen::MatrixXd& V = es.eigenvectors();
        const Eigen::MatrixXd W = V * w.asDiagonal() * V.transpose();
        grad.resize(static_cast<Eigen::Index>(h_.size()));
        for (std::size_t tau = 0; tau < h_.size(); ++tau) {
            double g = 0.0;
            for (const auto& e : h_[tau])
                g += W(e.a, e.b) * e.v;
            grad[static_cast<Eigen::Index>(tau)] = -t_ * g;
        }
        return pre[d_];
    }

private:
    const std::vector<std::vector<SparseEntry>>& h_;
    int d_;
    double t_;
};

// log(1 - x) + x, accurate for small x
double log1m_plus(double x)
{
    if (std::abs(x) < 1e-2) {
        double term = x, sum = 0.0;
        for (int k = 2; k <= 14; ++k) {
            term *= x;
            sum -= term / k;
        }
        return sum;
    }
    if (x >= 1.0)
        return nan_v;
    return std::log1p(-x) + x;
}

}  // namespace

double lawlor_lower_bound(double S, double t)
{
    if (t < 0)
        throw std::domain_error("lawlor_lower_bound needs t >= 0");
    return (1.0 - S * t) * std::exp(S * t);
}

int default_restarts(int q) { return 8 + 2 * q; }

MinDetResult min_det(const SffTensor& s, double theta, int restarts, std::uint64_t seed, Execution exec)
{
    if (!(theta >= 0.0 && theta < M_PI / 2))
        throw std::domain_error("min_det needs theta in [0, pi/2)");
    if (restarts < 1)
        throw std::domain_error("min_det needs restarts >= 1");
    const int q = s.q();
    MinDetResult out;
    if (theta == 0.0) {
        out.direction = Eigen::VectorXd::Unit(q, 0);
        out.restart = 0;
        return out;
    }
    const auto h = sparse(s);
    const DetObjective obj(h, s.d(), std::tan(theta));
    const int axes = 2 * q;
    const int total = axes + std::max(8, restarts - axes);
    const Candidate best = best_of(
        total,
        [&](int i) {
            Eigen::VectorXd x0;
            if (i < axes) {
                x0 = Eigen::VectorXd::Unit(q, i / 2) * (i % 2 == 0 ? 1.0 : -1.0);
            } else {
                std::mt19937_64 rng(seed + static_cast<std::uint64_t>(i));
                x0 = random_unit(q, rng);
            }
            const auto r = minimize_on_sphere(obj, x0);
            return Candidate{r.value, r.x, i};
        },
        exec);
    out.value = best.value;
    out.direction = best.x;
    out.restart = best.index;
    return out;
}

DetProfile DetProfile::bound(double S)
{
    if (!(S > 0))
        throw std::domain_error("bound profile needs S > 0");
    DetProfile p;
    p.s2_ = S * S;
    return p;
}

DetProfile DetProfile::exact(const SffTensor& s, int restarts, std::uint64_t seed, Execution exec)
{
    DetProfile p;
    p.sff_ = std::make_shared<const SffTensor>(s);
    p.s2_ = s_max(s).s_squared;
    p.restarts_ = restarts > 0 ? restarts : default_restarts(s.q());
    p.seed_ = seed;
    p.exec_ = exec;
    return p;
}

DetProfile DetProfile::from_log(double s2, std::function<double(double)> log_c)
{
    DetProfile p;
    p.s2_ = s2;
    p.custom_ = std::move(log_c);
    return p;
}

double DetProfile::value(double theta) const
{
    if (custom_)
        return std::exp(custom_(theta));
    if (!sff_)
        return lawlor_lower_bound(std::sqrt(s2_), std::tan(theta));
    return min_det(*sff_, theta, restarts_, seed_, exec_).value;
}

double DetProfile::log_value(double theta) const
{
    if (custom_)
        return custom_(theta);
    const double t = std::tan(theta);
    if (!sff_)
        return log1m_plus(std::sqrt(s2_) * t);
    if (theta == 0.0)
        return 0.0;
    const MinDetResult r = min_det(*sff_, theta, restarts_, seed_, exec_);
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(direction_matrix(*sff_, r.direction));
    double sum = 0.0;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
        const double x = t * es.eigenvalues()[i];
        if (x >= 1.0)
            return nan_v;
        sum += std::log1p(-x);
    }
    return sum;
}

VanishingAngleResult vanishing_angle(int d, const DetProfile& profile, double s_max, double tol)
{
    if (d < 2)
        throw std::domain_error("vanishing_angle needs d >= 2");
    if (s_max <= 0.0)
        s_max = 60.0 / (d + 1);
    VanishingAngleResult res;
    const double A = 2.0 * d + 2.0, C = d + profile.curvature_squared();
    const double disc = A * A - 16.0 * C;
    if (disc < 0.0) {
        res.outcome = VanishingAngleResult::Outcome::stalls;
        res.theta = 0.0;
        res.note = "no projection curve leaves the vertex: (d-1)^2/4 < S^2";
        return res;
    }
    // theta ~ kappa sqrt(s) near the start; the smaller root is the fastest-growing curve
    const double kappa = std::sqrt((A - std::sqrt(disc)) / (2.0 * C));

    auto radicand = [&](double sigma, double theta) {
        const double c = std::cos(theta);
        if (!(c > 0.0))
            return nan_v;
        const double L = A * sigma * sigma + 2.0 * d * std::log(c) + 2.0 * profile.log_value(theta);
        return std::expm1(L);
    };
    auto rhs = [&](double sigma, double theta) {
        const double R = radicand(sigma, theta);
        return R > 0.0 ? 2.0 * sigma / std::sqrt(R) : nan_v;
    };

    const double sigma0 = 1e-4;
    const double theta_start = kappa * sigma0;
    if (!(radicand(sigma0, theta_start) > 0.0))
        throw IntegrationError("radicand is not positive at the start; malformed determinant profile");

    bool stalled = false;
    auto stop = [&](double sigma, double, double slope) {
        // slope = 2 sigma / sqrt(R)
        const double R = 4.0 * sigma * sigma / (slope * slope);
        if (!(R > 1e-12)) {
            stalled = true;
            return true;
        }
        return false;
    };
    OdeOptions opt;
    const double mid = std::sqrt(s_max / 2.0), end = std::sqrt(s_max);
    OdeOutcome first = integrate_dopri5(rhs, sigma0, theta_start, mid, opt, stop);
    res.steps = first.steps;
    auto finish_stall = [&](const OdeOutcome& o) {
        res.outcome = VanishingAngleResult::Outcome::stalls;
        res.theta = o.y;
        res.final_log_r = o.t * o.t;
        res.note = "radicand reached zero at finite r";
        return res;
    };
    if (first.status == OdeOutcome::Status::too_many_steps)
        throw IntegrationError("vanishing-angle integration exceeded the step budget");
    if (stalled || first.status != OdeOutcome::Status::reached)
        return finish_stall(first);
    OdeOutcome second = integrate_dopri5(rhs, first.t, first.y, end, opt, stop);
    res.steps += second.steps;
    if (second.status == OdeOutcome::Status::too_many_steps)
        throw IntegrationError("vanishing-angle integration exceeded the step budget");
    if (stalled || second.status != OdeOutcome::Status::reached)
        return finish_stall(second);
    res.tail = std::abs(second.y - first.y);
    res.final_log_r = second.t * second.t;
    if (res.tail >= tol || !(second.y < M_PI / 2)) {
        res.outcome = VanishingAngleResult::Outcome::stalls;
        res.theta = second.y;
        res.note = "theta did not converge within s_max";
        return res;
    }
    res.outcome = VanishingAngleResult::Outcome::vanishes;
    res.theta = second.y;
    return res;
}

std::optional<double> V(int m, double S)
{
    if (m < 12)
        throw std::domain_error("V(m, S) is only defined here for cone dimension m >= 12");
    const auto r = vanishing_angle(m - 1, DetProfile::bound(S));
    if (!r.vanishes())
        return std::nullopt;
    return r.theta;
}

std::vector<double> default_s_grid()
{
    std::vector<double> g;
    for (int i = 1; i <= 15; ++i)
        g.push_back(0.1 * i);
    return g;
}

namespace {

class ProbeGeometry {
public:
    explicit ProbeGeometry(const FamilyParams& p)
        : p_(p), forms_(second_block_forms(p)), base_(base_point(p)), D_(p.source_ambient())
    {
    }

    // 1 - max over unit x of <gamma, F(x)>, plus the maximizer for warm starts
    double gap(const Eigen::VectorXd& gamma, int restarts, std::uint64_t seed, Eigen::VectorXd& warm) const
    {
        const Eigen::VectorXd g1 = p_.a * gamma.head(D_);
        Eigen::MatrixXd G = Eigen::MatrixXd::Zero(D_, D_);
        for (std::size_t j = 0; j < forms_.size(); ++j) {
            const double w = gamma[D_ + static_cast<Eigen::Index>(j)];
            if (w != 0.0)
                G += (p_.b * w) * forms_[j];
        }
        auto fg = [&](const Eigen::VectorXd& x, Eigen::VectorXd& grad) {
            const Eigen::VectorXd Gx = G * x;
            grad = -(g1 + 2.0 * Gx);
            return -(g1.dot(x) + x.dot(Gx));
        };
        SphereSearchOptions opt;
        opt.grad_tol = 1e-10;
        double best = -std::numeric_limits<double>::infinity();
        Eigen::VectorXd arg;
        auto consider = [&](const Eigen::VectorXd& x0) {
            const auto r = minimize_on_sphere(fg, x0, opt);
            if (-r.value > best) {
                best = -r.value;
                arg = r.x;
            }
        };
        consider(Eigen::VectorXd::Unit(D_, 0));
        if (warm.size() == D_)
            consider(warm);
        std::mt19937_64 rng(seed);
        for (int i = 0; i < restarts; ++i)
            consider(random_unit(D_, rng));
        warm = arg;
        return 1.0 - best;
    }

    const Eigen::VectorXd& base() const { return base_; }

private:
    FamilyParams p_;
    std::vector<Eigen::MatrixXd> forms_;
    Eigen::VectorXd base_;
    int D_;
};

}  // namespace

double normal_gap(const FamilyParams& p, const Eigen::VectorXd& nu_ambient, double s, int restarts,
                  std::uint64_t seed)
{
    const ProbeGeometry geo(p);
    Eigen::VectorXd warm;
    return geo.gap(std::cos(s) * geo.base() + std::sin(s) * nu_ambient, restarts, seed, warm);
}

NormalRadiusProbe normal_radius_probe(const SffTensor& s, const std::vector<double>& s_grid, int normals,
                                      int restarts, std::uint64_t seed, double gap_tol, Execution exec)
{
    if (normals < 1)
        throw std::domain_error("normal_radius_probe needs at least one normal");
    for (double v : s_grid)
        if (!(v > 0.0 && v < M_PI / 2))
            throw std::domain_error("s grid must lie in (0, pi/2)");
    const ProbeGeometry geo(s.params);
    const int q = s.q();
    std::vector<Eigen::VectorXd> dirs;
    for (int tau = 0; tau < q && static_cast<int>(dirs.size()) < normals; ++tau) {
        dirs.push_back(s.frame.normal.row(tau).transpose());
        if (static_cast<int>(dirs.size()) < normals)
            dirs.push_back(-s.frame.normal.row(tau).transpose());
    }
    for (int i = static_cast<int>(dirs.size()); i < normals; ++i) {
        std::mt19937_64 rng(mix_seed(seed, 1, static_cast<std::uint64_t>(i)));
        dirs.push_back(s.frame.normal.transpose() * random_unit(q, rng));
    }

    const int ns = static_cast<int>(s_grid.size());
    std::vector<std::vector<double>> table(dirs.size(), std::vector<double>(ns));
    for_each_index(
        static_cast<int>(dirs.size()),
        [&](int i) {
            Eigen::VectorXd warm;
            for (int k = 0; k < ns; ++k) {
                const Eigen::VectorXd gamma = std::cos(s_grid[k]) * geo.base() + std::sin(s_grid[k]) * dirs[i];
                table[i][k] = geo.gap(gamma, restarts,
                                      mix_seed(seed, 2 + static_cast<std::uint64_t>(i), static_cast<std::uint64_t>(k)),
                                      warm);
            }
        },
        exec);

    NormalRadiusProbe probe;
    probe.s_grid = s_grid;
    probe.samples = static_cast<int>(dirs.size());
    probe.gap_tol = gap_tol;
    probe.gaps.assign(ns, std::numeric_limits<double>::infinity());
    for (const auto& row : table)
        for (int k = 0; k < ns; ++k)
            probe.gaps[k] = std::min(probe.gaps[k], row[k]);
    probe.min_gap = ns ? *std::min_element(probe.gaps.begin(), probe.gaps.end()) : 0.0;
    return probe;
}

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::satisfied: return "SATISFIED";
    case Verdict::inconclusive_calibrated: return "INCONCLUSIVE_CALIBRATED";
    case Verdict::inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

CriterionReport verdict(Family family, int n, const CriterionConfig& config)
{
    CriterionReport rep;
    rep.params = constants(family, n);
    rep.config = config;
    const FamilyParams& p = rep.params;

    const SffTensor numeric = sff_numeric(p, config.fd_step);
    const SffTensor closed = sff_closed_form(p);
    rep.sff_max_diff = max_abs_diff(numeric, closed);
    if (rep.sff_max_diff > 1e-7)
        throw InternalConsistencyError("closed-form second fundamental form disagrees with finite differences by "
                                       + std::to_string(rep.sff_max_diff));
    for (int tau = 0; tau < closed.q(); ++tau)
        rep.max_trace = std::max(rep.max_trace, std::abs(closed[tau].trace()));
    if (rep.max_trace > 1e-10)
        throw InternalConsistencyError("second fundamental form is not traceless");

    rep.s2_closed_form = s_squared_closed_form(family, n);
    rep.s2_eigen = s_max(closed).s_squared;

    const int d = p.source_dim;
    const bool use_bound = p.cone_dim() >= 12;
    const DetProfile profile = use_bound
                                   ? DetProfile::bound(std::sqrt(rep.s2_eigen))
                                   : DetProfile::exact(closed, config.restarts, config.seed, config.exec);
    rep.profile = profile.name();
    rep.vanishing = vanishing_angle(d, profile, 0.0, config.ode_tol);
    rep.probe = normal_radius_probe(closed, config.s_grid, config.normals, config.ascent_restarts, config.seed,
                                    config.gap_tol, config.exec);

    const bool angle_ok = rep.vanishing.vanishes() && rep.vanishing.theta < M_PI / 4;
    if (angle_ok && rep.probe.passes()) {
        rep.verdict = Verdict::satisfied;
        rep.note = "numerical evidence: min_det and the normal-radius probe are multistart searches";
    } else if (family == Family::I && n == 1 && !rep.vanishing.vanishes()) {
        rep.verdict = Verdict::inconclusive_calibrated;
        rep.note = "no vanishing angle for the exact profile; the cone is calibrated (Harvey-Lawson coassociative "
                   "calibration) and hence area-minimizing";
    } else {
        rep.verdict = Verdict::inconclusive;
        rep.note = angle_ok ? "normal-radius probe did not pass" : "no vanishing angle below pi/4";
    }
    return rep;
}

}  // namespace locones
