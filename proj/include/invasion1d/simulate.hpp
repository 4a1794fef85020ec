#pragma once

#include "invasion1d/steady.hpp"

namespace invasion1d {

/// Per-period records of a coupled two-species run: sup norm of the invader
/// and sup-norm deviation of the resident from u1*(.,0), at t = nT.
struct Trajectory {
    std::vector<double> u2_norm;
    std::vector<double> u1_dev;
    double period = 0.0;
    double K2 = 0.0;
    double seed_amplitude = 0.0;
};

struct CoupledRunOptions {
    double seed_amplitude = 0.0;  // 0 => default 1e-4 * K2
    int horizon = 200;            // periods
    double stop_fraction = 0.5;   // stop once ||u2|| exceeds this fraction of K2
};

/// Nonlinear two-species run from (u1*, seed*sin(pi*xi/L0)).
Trajectory coupled_run(const ReactionModel& m, const DomainMotion& d, const Grid& g,
                       const SteadyStateResult& u1star, const CoupledRunOptions& opts = {});

enum class EmpiricalClass { Invades, Decays, Undetermined };

const char* to_string(EmpiricalClass c);

struct ClassifyResult {
    EmpiricalClass cls = EmpiricalClass::Undetermined;
    double slope_per_period = 0.0;  // least-squares slope of log ||u2|| per period
    int window_points = 0;          // periods inside the linear-regime window
    int fit_points = 0;             // last <= 10 of them used for the fit
};

/// Fit the per-period log growth of ||u2|| over the last (up to) 10 recorded
/// periods whose norm lies in [10*eps_machine, 0.01*K2], and classify by the
/// sign of the slope against growth_margin (a rate; 0 => default 0.02/T).
ClassifyResult classify_invasion(const Trajectory& traj, double growth_margin = 0.0);

}  // namespace invasion1d
