#pragma once

#include "invasion1d/floquet.hpp"

#include <optional>

namespace invasion1d {

struct SteadyStateOptions {
    double tol = 1e-9;          // period-to-period sup-norm tolerance
    int max_periods = 2000;
    double init_amplitude = 0.5;  // initial state amplitude as a fraction of K
    std::optional<double> mu_hint;  // skip the eigenvalue solve when known
};

/// Positive periodic steady state of the single-species problem, reached by
/// integrating from init_amplitude*K*sin(pi*xi/L0) until the period map is
/// stationary.  When r <= mu the only periodic state is zero and the result
/// carries the extinction flag instead.
struct SteadyStateResult {
    SpaceTimeField field;
    bool extinct = false;
    double mu = 0.0;             // principal eigenvalue of the species' linear part
    int periods = 0;
    std::vector<double> deltas;  // per-period sup-norm changes

    /// Potential built from this field through a pointwise map, for use in
    /// Floquet solves (interpolates snapshots in time, then applies fn).
    PotentialFn potential(std::function<double(double)> fn) const;
};

SteadyStateResult periodic_steady_state(int species, const ReactionModel& m,
                                        const DomainMotion& d, const Grid& g,
                                        const SteadyStateOptions& opts = {});

}  // namespace invasion1d
