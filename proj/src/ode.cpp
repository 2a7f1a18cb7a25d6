#include "locones/ode.hpp"

#include <algorithm>
#include <cmath>

namespace locones {

OdeOutcome integrate_dopri5(const std::function<double(double, double)>& f, double t0, double y0, double t1,
                            const OdeOptions& opt, const std::function<bool(double, double, double)>& stop)
{
    constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    constexpr double a21 = 1.0 / 5;
    constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
    constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                     a65 = -5103.0 / 18656;
    constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                     e6 = 22.0 / 525, e7 = -1.0 / 40;

    OdeOutcome out;
    double t = t0, y = y0;
    double h = opt.h0 > 0 ? opt.h0 : (t1 - t0) * 1e-3;
    double k1 = f(t, y);
    while (t < t1) {
        if (out.steps >= opt.max_steps) {
            out.status = OdeOutcome::Status::too_many_steps;
            break;
        }
        h = std::min(h, t1 - t);
        if (h < opt.hmin_rel * std::max(1.0, std::abs(t))) {
            out.status = OdeOutcome::Status::step_collapse;
            break;
        }
        const double k2 = f(t + c2 * h, y + h * a21 * k1);
        const double k3 = f(t + c3 * h, y + h * (a31 * k1 + a32 * k2));
        const double k4 = f(t + c4 * h, y + h * (a41 * k1 + a42 * k2 + a43 * k3));
        const double k5 = f(t + c5 * h, y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
        const double k6 = f(t + h, y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
        const double yn = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
        const double k7 = std::isfinite(yn) ? f(t + h, yn) : yn;
        const double err = h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);
        if (!std::isfinite(k7) || !std::isfinite(err)) {
            ++out.rejected;
            h *= 0.25;
            continue;
        }
        const double sc = opt.atol + opt.rtol * std::max(std::abs(y), std::abs(yn));
        const double ratio = std::abs(err) / sc;
        if (ratio <= 1.0) {
            t += h;
            y = yn;
            k1 = k7;
            ++out.steps;
            if (stop && stop(t, y, k1)) {
                out.status = OdeOutcome::Status::stopped;
                break;
            }
        } else {
            ++out.rejected;
        }
        const double fac = ratio == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(ratio, -0.2), 0.2, 5.0);
        h *= ratio <= 1.0 ? fac : std::min(fac, 1.0);
    }
    out.t = t;
    out.y = y;
    return out;
}

}  // namespace locones
