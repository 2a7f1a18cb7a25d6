#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <functional>
#include <random>

namespace locones {

enum class Execution { serial, parallel };

// CONE_VERIFY_THREADS if set and positive, otherwise the OpenMP default.
int worker_count();

std::uint64_t mix_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0);
Eigen::VectorXd random_unit(int dim, std::mt19937_64& rng);

struct Candidate {
    double value = 0.0;
    Eigen::VectorXd x;
    int index = -1;
};

void for_each_index(int count, const std::function<void(int)>& body, Execution exec);

// Runs task(0..count-1) and returns the smallest value; ties go to the
// lowest index, so the result does not depend on the worker count.
Candidate best_of(int count, const std::function<Candidate(int)>& task, Execution exec);

// fg returns f(x) and writes the Euclidean gradient.
using ObjectiveWithGradient = std::function<double(const Eigen::VectorXd&, Eigen::VectorXd&)>;

struct SphereSearchOptions {
    int max_iters = 1000;
    double grad_tol = 1e-12;
    double f_tol = 1e-15;
};

struct SphereSearchResult {
    Eigen::VectorXd x;
    double value = 0.0;
    int iterations = 0;
};

// Projected gradient descent on the unit sphere with Barzilai-Borwein
// steps and Armijo backtracking.
SphereSearchResult minimize_on_sphere(const ObjectiveWithGradient& fg, Eigen::VectorXd x0,
                                      const SphereSearchOptions& opt = {});

}  // namespace locones
