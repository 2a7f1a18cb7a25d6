#pragma once

#include <functional>

namespace locones {

struct OdeOptions {
    double atol = 1e-10;
    double rtol = 1e-9;
    double h0 = 0.0;         // 0 picks (t1 - t0) * 1e-3
    double hmin_rel = 1e-13;  // collapse threshold relative to |t|
    int max_steps = 200000;
};

struct OdeOutcome {
    enum class Status { reached, stopped, step_collapse, too_many_steps };
    Status status = Status::reached;
    double t = 0.0;
    double y = 0.0;
    int steps = 0;
    int rejected = 0;
};

// Dormand-Prince 5(4) for a scalar equation y' = f(t, y). A non-finite
// stage value rejects the step. stop(t, y) is checked after each accepted
// step.
OdeOutcome integrate_dopri5(const std::function<double(double, double)>& f, double t0, double y0, double t1,
                            const OdeOptions& opt = {},
                            const std::function<bool(double, double, double)>& stop = {});

}  // namespace locones
