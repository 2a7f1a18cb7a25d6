#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <span>
#include <string>
#include <vector>

#include "locones/family.hpp"

namespace locones {

using Rational = boost::multiprecision::cpp_rational;

// E[prod x_i^e_i] for the uniform probability measure on S^{D-1}.
Rational monomial_moment(int D, std::span<const int> exponents);

// f(x) = sqrt(scale_sq) * x^T M x with M symmetric and rational.
struct QuadraticForm {
    int dim = 0;
    std::vector<Rational> m;  // row-major dim x dim
    Rational scale_sq = 1;
    std::string label;

    explicit QuadraticForm(int d = 0, std::string name = {});
    const Rational& at(int i, int j) const { return m[static_cast<std::size_t>(i * dim + j)]; }
    // adds coef * x_i x_j, keeping M symmetric
    void add_monomial(int i, int j, const Rational& coef);
    Rational trace() const;
    double eval(std::span<const double> x) const;
};

// coeff * sqrt(radicand)
struct ScaledValue {
    Rational coeff = 0;
    Rational radicand = 1;

    bool is_zero() const { return coeff == 0; }
    bool is_one() const { return coeff > 0 && coeff * coeff * radicand == 1; }
    double value() const;
};

ScaledValue l2_inner(const QuadraticForm& f, const QuadraticForm& g, int normalization);

// Eigenfunction basis of the first eigenspace in real coordinates
// (x_k = Re z_k, x_{K+k} = Im z_k), in the same order as the immersion's
// second block: phi_alpha, then the pair functions blockwise.
std::vector<QuadraticForm> eigen_basis(Family family, int n);
int basis_count(Family family, int n);

using GramMatrix = std::vector<std::vector<ScaledValue>>;
GramMatrix gram_matrix(Family family, int n);
bool is_exact_identity(const GramMatrix& g);

}  // namespace locones
