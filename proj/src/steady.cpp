#include "invasion1d/steady.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace invasion1d {

PotentialFn SteadyStateResult::potential(std::function<double(double)> fn) const {
    const SpaceTimeField* f = &field;
    return [f, fn = std::move(fn)](int i, double /*xi*/, double t) { return fn(f->value(i, t)); };
}

SteadyStateResult periodic_steady_state(int species, const ReactionModel& m,
                                        const DomainMotion& d, const Grid& g,
                                        const SteadyStateOptions& opts) {
    if (species != 1 && species != 2)
        throw std::invalid_argument("periodic_steady_state: species must be 1 or 2");
    const double D = species == 1 ? m.D1 : m.D2;
    const double r = species == 1 ? m.r1 : m.r2;
    const double K = species == 1 ? m.K1() : m.K2();

    SteadyStateResult out;
    out.mu = opts.mu_hint ? *opts.mu_hint : principal_eigenpair(D, d, g).mu;
    if (r <= out.mu) {
        out.extinct = true;
        out.field = SpaceTimeField::zero(g);
        return out;
    }

    SingleSpeciesStepper stepper(species, m, d, g);
    Profile u(static_cast<std::size_t>(g.M));
    for (int i = 0; i < g.M; ++i)
        u[static_cast<std::size_t>(i)] =
            opts.init_amplitude * K * std::sin(std::numbers::pi * g.xi[static_cast<std::size_t>(i)] / g.L0);

    SpaceTimeField period;
    period.dt = g.dt;
    period.period = g.T;
    period.snapshots.assign(static_cast<std::size_t>(g.Nt) + 1, Profile());

    for (int n = 0; n < opts.max_periods; ++n) {
        period.snapshots[0] = u;
        for (int j = 0; j < g.Nt; ++j) {
            stepper.step(u, j);
            period.snapshots[static_cast<std::size_t>(j) + 1] = u;
        }
        out.deltas.push_back(sup_diff(u, period.snapshots[0]));
        if (out.deltas.back() < opts.tol) {
            out.periods = n + 1;
            period.periodic = true;
            out.field = std::move(period);
            return out;
        }
    }
    std::ostringstream os;
    os << "periodic_steady_state: species " << species << " did not reach the periodic "
       << "attractor within " << opts.max_periods << " periods (last delta "
       << out.deltas.back() << ")";
    throw std::runtime_error(os.str());
}

}  // namespace invasion1d
