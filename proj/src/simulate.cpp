#include "invasion1d/simulate.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace invasion1d {

const char* to_string(EmpiricalClass c) {
    switch (c) {
        case EmpiricalClass::Invades: return "Invades";
        case EmpiricalClass::Decays: return "Decays";
        default: return "Undetermined";
    }
}

Trajectory coupled_run(const ReactionModel& m, const DomainMotion& d, const Grid& g,
                       const SteadyStateResult& u1star, const CoupledRunOptions& opts) {
    Trajectory traj;
    traj.period = g.T;
    traj.K2 = m.K2();
    traj.seed_amplitude = opts.seed_amplitude > 0.0 ? opts.seed_amplitude : 1e-4 * traj.K2;

    const Profile& u1_ref = u1star.field.at_step(0);
    Profile u1 = u1_ref;
    Profile u2(static_cast<std::size_t>(g.M));
    for (int i = 0; i < g.M; ++i)
        u2[static_cast<std::size_t>(i)] =
            traj.seed_amplitude * std::sin(std::numbers::pi * g.xi[static_cast<std::size_t>(i)] / g.L0);

    CoupledStepper stepper(m, d, g);
    traj.u2_norm.push_back(sup_norm(u2));
    traj.u1_dev.push_back(sup_diff(u1, u1_ref));
    for (int n = 0; n < opts.horizon; ++n) {
        for (int j = 0; j < g.Nt; ++j) stepper.step(u1, u2, j);
        traj.u2_norm.push_back(sup_norm(u2));
        traj.u1_dev.push_back(sup_diff(u1, u1_ref));
        if (traj.u2_norm.back() > opts.stop_fraction * traj.K2) break;
    }
    return traj;
}

ClassifyResult classify_invasion(const Trajectory& traj, double growth_margin) {
    const int n = static_cast<int>(traj.u2_norm.size());
    if (n < 10)
        throw std::invalid_argument("classify_invasion: needs at least 10 recorded periods");
    const double lo = 10.0 * std::numeric_limits<double>::epsilon();
    const double hi = 0.01 * traj.K2;

    std::vector<int> window;
    for (int k = 0; k < n; ++k) {
        const double v = traj.u2_norm[static_cast<std::size_t>(k)];
        if (v >= lo && v <= hi) window.push_back(k);
    }
    if (window.size() < 2)
        throw std::runtime_error(
            "classify_invasion: linear-regime window never entered (seed too large or too small)");

    ClassifyResult r;
    r.window_points = static_cast<int>(window.size());
    const int take = std::min<int>(10, r.window_points);
    const std::size_t first = window.size() - static_cast<std::size_t>(take);

    // least-squares slope of log ||u2|| against the period index
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int k = 0; k < take; ++k) {
        const double x = window[first + static_cast<std::size_t>(k)];
        const double y = std::log(traj.u2_norm[static_cast<std::size_t>(window[first + static_cast<std::size_t>(k)])]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    r.fit_points = take;
    r.slope_per_period = (take * sxy - sx * sy) / (take * sxx - sx * sx);

    const double margin = (growth_margin > 0.0 ? growth_margin : 0.02 / traj.period) * traj.period;
    if (r.slope_per_period > margin)
        r.cls = EmpiricalClass::Invades;
    else if (r.slope_per_period < -margin)
        r.cls = EmpiricalClass::Decays;
    else
        r.cls = EmpiricalClass::Undetermined;
    return r;
}

}  // namespace invasion1d
