#include "invasion1d/floquet.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace invasion1d {

namespace {

double dot(const Profile& a, const Profile& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm2(const Profile& a) { return std::sqrt(dot(a, a)); }

}  // namespace

Profile monodromy_apply(const Profile& v, double D, const DomainMotion& d, const Grid& g,
                        const PotentialFn& q) {
    LinearPropagator prop(D, d, g, q);
    return prop.apply_period(v);
}

EigenResult principal_eigenpair(double D, const DomainMotion& d, const Grid& g,
                                const PotentialFn& q, const PowerIterationOptions& opts) {
    LinearPropagator prop(D, d, g, q);

    Profile v(static_cast<std::size_t>(g.M));
    for (int i = 0; i < g.M; ++i)
        v[static_cast<std::size_t>(i)] = std::sin(std::numbers::pi * g.xi[static_cast<std::size_t>(i)] / g.L0);
    double nv = norm2(v);
    for (double& x : v) x /= nv;

    double rho = 0.0, rho_prev = 0.0, residual = 0.0;
    int it = 0;
    bool converged = false;
    while (it < opts.max_iterations) {
        ++it;
        Profile w = prop.apply_period(v);
        rho = dot(w, v);  // v has unit 2-norm
        if (!(rho > 0.0)) {
            std::ostringstream os;
            os << "principal_eigenpair: non-positive Rayleigh estimate " << rho
               << " (positivity lost; refine dt)";
            throw std::runtime_error(os.str());
        }
        residual = 0.0;
        for (std::size_t i = 0; i < w.size(); ++i)
            residual = std::max(residual, std::abs(w[i] - rho * v[i]));
        const double nw = norm2(w);
        for (std::size_t i = 0; i < w.size(); ++i) v[i] = w[i] / nw;
        if (it > 1 && std::abs(rho - rho_prev) < opts.tol * std::abs(rho)) {
            converged = true;
            break;
        }
        rho_prev = rho;
    }
    if (!converged) {
        std::ostringstream os;
        os << "principal_eigenpair: no convergence after " << opts.max_iterations
           << " iterations (last rho=" << rho << ")";
        throw std::runtime_error(os.str());
    }

    EigenResult r;
    r.mu = -std::log(rho) / g.T;
    r.iterations = it;
    r.residual = residual;

    // Reconstruct the periodic eigenfunction: one more period with snapshots,
    // rescaled by exp(mu*t_j) and normalized to sup-norm 1 at t = 0.
    const double sup0 = sup_norm(v);
    for (double& x : v) x /= sup0;
    r.phi = prop.integrate_period(v);
    for (int j = 0; j <= g.Nt; ++j) {
        const double scale = std::exp(r.mu * g.dt * j);
        for (double& x : r.phi.snapshots[static_cast<std::size_t>(j)]) x *= scale;
    }
    const double sup_start = sup_norm(r.phi.snapshots.front());
    for (auto& snap : r.phi.snapshots)
        for (double& x : snap) x /= sup_start;
    r.phi.periodic = true;
    r.period_defect = r.phi.period_defect();
    for (const auto& snap : r.phi.snapshots)
        for (double x : snap)
            if (!(x > 0.0))
                throw std::runtime_error(
                    "principal_eigenpair: eigenfunction not strictly positive (refine dt)");
    return r;
}

}  // namespace invasion1d
