#include "locones/multistart.hpp"

#include <omp.h>

#include <cmath>
#include <cstdlib>
#include <string>
#include <vector>

namespace locones {

int worker_count()
{
    if (const char* env = std::getenv("CONE_VERIFY_THREADS")) {
        try {
            const int v = std::stoi(env);
            if (v > 0)
                return v;
        } catch (const std::exception&) {
        }
    }
    return omp_get_max_threads();
}

std::uint64_t mix_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b)
{
    // splitmix64 finalizer over the combined words
    auto mix = [](std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    return mix(mix(mix(base) ^ a) ^ b);
}

Eigen::VectorXd random_unit(int dim, std::mt19937_64& rng)
{
    // Box-Muller on raw 53-bit uniforms keeps the stream identical across
    // standard library implementations
    auto uniform = [&] { return (double(rng() >> 11) + 0.5) * 0x1.0p-53; };
    Eigen::VectorXd v(dim);
    for (int i = 0; i < dim; i += 2) {
        const double r = std::sqrt(-2.0 * std::log(uniform()));
        const double phi = 2.0 * M_PI * uniform();
        v[i] = r * std::cos(phi);
        if (i + 1 < dim)
            v[i + 1] = r * std::sin(phi);
    }
    return v / v.norm();
}

void for_each_index(int count, const std::function<void(int)>& body, Execution exec)
{
    if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic) num_threads(worker_count())
        for (int i = 0; i < count; ++i)
            body(i);
    } else {
        for (int i = 0; i < count; ++i)
            body(i);
    }
}

Candidate best_of(int count, const std::function<Candidate(int)>& task, Execution exec)
{
    std::vector<Candidate> results(static_cast<std::size_t>(count));
    for_each_index(count, [&](int i) { results[static_cast<std::size_t>(i)] = task(i); }, exec);
    Candidate best;
    for (int i = 0; i < count; ++i) {
        const Candidate& c = results[static_cast<std::size_t>(i)];
        if (best.index < 0 || c.value < best.value)
            best = c;
    }
    return best;
}

SphereSearchResult minimize_on_sphere(const ObjectiveWithGradient& fg, Eigen::VectorXd x0,
                                      const SphereSearchOptions& opt)
{
    Eigen::VectorXd x = x0 / x0.norm();
    Eigen::VectorXd g(x.size()), gn(x.size());
    double f = fg(x, g);
    Eigen::VectorXd gp = g - g.dot(x) * x;
    double alpha = 1.0 / std::max(1.0, gp.norm());
    int it = 0, flat = 0;
    for (; it < opt.max_iters; ++it) {
        const double gnorm2 = gp.squaredNorm();
        if (std::sqrt(gnorm2) < opt.grad_tol)
            break;
        bool accepted = false;
        Eigen::VectorXd xn;
        double fn = 0.0;
        for (int bt = 0; bt < 60; ++bt) {
            xn = x - alpha * gp;
            xn /= xn.norm();
            fn = fg(xn, gn);
            if (std::isfinite(fn) && fn <= f - 1e-4 * alpha * gnorm2) {
                accepted = true;
                break;
            }
            alpha *= 0.5;
        }
        if (!accepted)
            break;
        const Eigen::VectorXd gpn = gn - gn.dot(xn) * xn;
        const Eigen::VectorXd s = xn - x, y = gpn - gp;
        const double sy = s.dot(y);
        alpha = sy > 0 ? s.squaredNorm() / sy : 2.0 * alpha;
        alpha = std::min(alpha, 1e3);
        // two consecutive decreases at roundoff level end the search
        flat = f - fn <= opt.f_tol * std::max(1.0, std::abs(f)) ? flat + 1 : 0;
        x = xn;
        f = fn;
        gp = gpn;
        if (flat >= 2)
            break;
    }
    return {x, f, it};
}

}  // namespace locones
