#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "locones/multistart.hpp"
#include "locones/second_fundamental.hpp"

namespace locones {

double lawlor_lower_bound(double S, double t);

struct MinDetResult {
    double value = 1.0;
    Eigen::VectorXd direction;
    int restart = -1;
};

int default_restarts(int q);

// inf over unit lambda of det(I - tan(theta) h^lambda), multistart from the
// +-e_tau axes and max(8, restarts - 2q) seeded random points.
MinDetResult min_det(const SffTensor& s, double theta, int restarts, std::uint64_t seed,
                     Execution exec = Execution::parallel);

class DetProfile {
public:
    static DetProfile bound(double S);
    static DetProfile exact(const SffTensor& s, int restarts, std::uint64_t seed,
                            Execution exec = Execution::parallel);
    // arbitrary profile given by log c(theta); s2 enters the start slope
    static DetProfile from_log(double s2, std::function<double(double)> log_c);

    double value(double theta) const;
    // log c(theta); NaN once c <= 0
    double log_value(double theta) const;
    double curvature_squared() const { return s2_; }
    bool is_exact() const { return static_cast<bool>(sff_); }
    std::string name() const { return custom_ ? "custom" : (is_exact() ? "exact" : "bound"); }

private:
    DetProfile() = default;
    double s2_ = 0.0;
    std::shared_ptr<const SffTensor> sff_;
    std::function<double(double)> custom_;
    int restarts_ = 0;
    std::uint64_t seed_ = 0;
    Execution exec_ = Execution::parallel;
};

struct VanishingAngleResult {
    enum class Outcome { vanishes, stalls };
    Outcome outcome = Outcome::stalls;
    double theta = 0.0;  // theta0 when vanishing, stall angle otherwise
    int steps = 0;
    double final_log_r = 0.0;
    double tail = 0.0;   // change of theta over the second half of [0, s_max]
    std::string note;

    bool vanishes() const { return outcome == Outcome::vanishes; }
};

// d = dim of the link; s_max <= 0 selects 60/(d+1).
VanishingAngleResult vanishing_angle(int d, const DetProfile& profile, double s_max = 0.0, double tol = 1e-6);

// Vanishing angle of the bound profile for cone dimension m >= 12, radians.
std::optional<double> V(int m, double S);

struct NormalRadiusProbe {
    std::vector<double> s_grid;
    std::vector<double> gaps;  // per s, minimum over the sampled normals
    double min_gap = 0.0;
    int samples = 0;
    double gap_tol = 1e-4;
    bool passes() const { return min_gap > gap_tol; }
};

std::vector<double> default_s_grid();

NormalRadiusProbe normal_radius_probe(const SffTensor& s, const std::vector<double>& s_grid, int normals,
                                      int restarts, std::uint64_t seed, double gap_tol = 1e-4,
                                      Execution exec = Execution::parallel);

// gap for one normal direction (ambient unit vector) and one s
double normal_gap(const FamilyParams& p, const Eigen::VectorXd& nu_ambient, double s, int restarts,
                  std::uint64_t seed);

enum class Verdict { satisfied, inconclusive_calibrated, inconclusive };
std::string to_string(Verdict v);

struct CriterionConfig {
    std::uint64_t seed = 42;
    double fd_step = 1e-3;
    double ode_tol = 1e-6;
    double gap_tol = 1e-4;
    int restarts = 0;  // 0 selects 8 + 2q
    std::vector<double> s_grid = default_s_grid();
    int normals = 64;
    int ascent_restarts = 32;
    Execution exec = Execution::parallel;
};

struct CriterionReport {
    FamilyParams params;
    CriterionConfig config;
    double s2_closed_form = 0.0;
    double s2_eigen = 0.0;
    double sff_max_diff = 0.0;
    double max_trace = 0.0;
    std::string profile;
    VanishingAngleResult vanishing;
    NormalRadiusProbe probe;
    Verdict verdict = Verdict::inconclusive;
    std::string note;
};

CriterionReport verdict(Family family, int n, const CriterionConfig& config = {});

}  // namespace locones
