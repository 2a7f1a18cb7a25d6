#pragma once

#include <Eigen/Dense>

#include <complex>
#include <span>
#include <vector>

#include "locones/family.hpp"

namespace locones {

struct FamilyParams {
    Family family = Family::I;
    int n = 1;
    double a = 0.0;
    double b = 0.0;
    std::vector<double> c_alpha;  // c_{n,alpha}, alpha = 1..n (empty for III)
    double d = 0.0;               // pair-function scale; 2 for III (coefficient of the f-slot)
    int source_dim = 0;           // dimension of the source sphere
    int target_dim = 0;           // dimension of the target sphere

    int m() const { return source_dim / 2; }          // source is S^{2m+1} in C^{m+1}
    int complex_dim() const { return m() + 1; }
    int source_ambient() const { return source_dim + 1; }
    int target_ambient() const { return target_dim + 1; }
    int normal_dim() const { return target_dim - source_dim; }
    int cone_dim() const { return source_dim + 1; }
    double normalizer() const { return a * a + b * b * d * d; }
};

FamilyParams constants(Family family, int n);

struct ChartPoint {
    int m = 0;
    Eigen::VectorXd t;
    Eigen::VectorXcd value;
};

// p(t) = p e^{t_1 X_1} ... e^{t_{2m+1} X_{2m+1}} with p = (1, 0, ..., 0);
// X_1 a phase rotation, X_k real rotations, X_{m+k} i-twisted rotations.
ChartPoint chart_point(int m, std::span<const double> t);
Eigen::VectorXcd chart_value(int m, std::span<const double> t);

Eigen::VectorXd immersion_eval(const FamilyParams& p, const Eigen::VectorXcd& z);
Eigen::VectorXd base_point(const FamilyParams& p);

Eigen::VectorXcd to_complex(const Eigen::VectorXd& x);
Eigen::VectorXd to_real(const Eigen::VectorXcd& z);

// Second block as quadratic forms on real coordinates: for unit x,
// F(x) = (a x, b x^T M_j x).
std::vector<Eigen::MatrixXd> second_block_forms(const FamilyParams& p);

}  // namespace locones
