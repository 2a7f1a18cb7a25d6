#pragma once

#include <Eigen/Dense>

#include <iosfwd>
#include <string>
#include <vector>

#include "locones/lo_spheres.hpp"

namespace locones {

struct Frame {
    Eigen::MatrixXd tangent;  // d x T, row A is e_A
    Eigen::MatrixXd normal;   // q x T, row tau is e_tau
    std::vector<std::string> labels;
    std::vector<bool> diagonal_class;  // normals whose h is purely diagonal
    std::vector<double> tangent_scale; // |F_*(eps_A)|
    Eigen::VectorXd base;

    int d() const { return static_cast<int>(tangent.rows()); }
    int q() const { return static_cast<int>(normal.rows()); }
    int index_of(const std::string& label) const;
};

// Label of the distinguished normal (e_{2n+2}, e_{4n+4}, e_16); always row 0.
std::string distinguished_label(const FamilyParams& p);

Frame frames(const FamilyParams& p);

// Largest |<F_*(eps_A)>/scale - e_A| over the tangent frame, by central differences.
double tangent_fd_error(const FamilyParams& p, const Frame& f);
// Largest entry of |N N^T - (I - U U^T)| with U from Gram-Schmidt on the
// differentiated chart directions and the base point.
double normal_projector_error(const FamilyParams& p, const Frame& f);

struct SffTensor {
    FamilyParams params;
    Frame frame;
    std::vector<Eigen::MatrixXd> h;

    int d() const { return frame.d(); }
    int q() const { return frame.q(); }
    const Eigen::MatrixXd& operator[](int tau) const { return h[static_cast<std::size_t>(tau)]; }
};

SffTensor sff_numeric(const FamilyParams& p, double step = 1e-3);
SffTensor sff_closed_form(const FamilyParams& p);
double max_abs_diff(const SffTensor& x, const SffTensor& y);

struct NormalDirection {
    Eigen::VectorXd lambda;

    explicit NormalDirection(Eigen::VectorXd l);
    static NormalDirection axis(int q, int tau, double sign = 1.0);
};

Eigen::MatrixXd direction_matrix(const SffTensor& s, const NormalDirection& nu);
Eigen::MatrixXd direction_matrix(const SffTensor& s, const Eigen::VectorXd& lambda);
Eigen::MatrixXd gram_Q(const SffTensor& s);

struct CurvatureBound {
    double s_squared = 0.0;
    double s = 0.0;
    Eigen::VectorXd direction;
};

CurvatureBound s_max(const SffTensor& s);
double s_squared_closed_form(Family family, int n);

// rows: tau_label,A,B,value[,closed_form,abs_diff]; A, B are 1-based
void write_sff_csv(std::ostream& os, const SffTensor& numeric, const SffTensor* closed = nullptr);

}  // namespace locones
