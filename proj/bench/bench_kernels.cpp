// Serial reference vs OpenMP multistart kernels. Results must match bit for bit.
#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "locones/lawlor_criterion.hpp"

using namespace locones;

namespace {

template <class F>
double seconds(F&& f)
{
    const auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv)
{
    const int reps = argc > 1 ? std::atoi(argv[1]) : 3;
    std::printf("workers %d\n", worker_count());
    std::printf("%-28s %10s %10s %8s %s\n", "kernel", "serial s", "omp s", "speedup", "match");
    bool all_match = true;

    struct Case {
        Family f;
        int n;
    };
    for (Case c : {Case{Family::I, 3}, Case{Family::I, 5}, Case{Family::II, 2}}) {
        const SffTensor s = sff_closed_form(constants(c.f, c.n));
        const int restarts = default_restarts(s.q());
        double vs = 0, vp = 0;
        const double ts = seconds([&] {
            for (int r = 0; r < reps; ++r)
                for (double th = 0.02; th < 0.4; th += 0.02)
                    vs += min_det(s, th, restarts, 42, Execution::serial).value;
        });
        const double tp = seconds([&] {
            for (int r = 0; r < reps; ++r)
                for (double th = 0.02; th < 0.4; th += 0.02)
                    vp += min_det(s, th, restarts, 42, Execution::parallel).value;
        });
        const bool match = vs == vp;
        all_match = all_match && match;
        char name[64];
        std::snprintf(name, sizeof name, "min_det %s n=%d", to_string(c.f).c_str(), c.n);
        std::printf("%-28s %10.4f %10.4f %8.2f %s\n", name, ts, tp, ts / tp, match ? "yes" : "NO");
    }

    for (Case c : {Case{Family::I, 2}, Case{Family::III, 1}}) {
        const SffTensor s = sff_closed_form(constants(c.f, c.n));
        NormalRadiusProbe ps, pp;
        const double ts = seconds([&] { ps = normal_radius_probe(s, default_s_grid(), 64, 32, 42, 1e-4, Execution::serial); });
        const double tp = seconds([&] { pp = normal_radius_probe(s, default_s_grid(), 64, 32, 42, 1e-4, Execution::parallel); });
        const bool match = ps.gaps == pp.gaps;
        all_match = all_match && match;
        char name[64];
        std::snprintf(name, sizeof name, "normal probe %s n=%d", to_string(c.f).c_str(), c.n);
        std::printf("%-28s %10.4f %10.4f %8.2f %s\n", name, ts, tp, ts / tp, match ? "yes" : "NO");
    }
    return all_match ? 0 : 1;
}
