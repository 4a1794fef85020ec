#pragma once

#include "invasion1d/domain_motion.hpp"
#include "invasion1d/grid.hpp"
#include "invasion1d/reaction.hpp"

#include <functional>
#include <vector>

namespace invasion1d {

/// Interior rows of a tridiagonal operator; lower[0] and upper[M-1] are the
/// eliminated Dirichlet couplings and are kept zero.
struct Tridiag {
    std::vector<double> lower, diag, upper;

    explicit Tridiag(int m = 0) : lower(m, 0.0), diag(m, 0.0), upper(m, 0.0) {}
    int size() const { return static_cast<int>(diag.size()); }
};

/// Thomas three-term recurrence; the assembled matrices here are strictly
/// diagonally dominant under the Peclet guard, so no pivoting is needed.
/// Throws on a vanishing pivot.
void thomas_solve(const Tridiag& A, const std::vector<double>& rhs, std::vector<double>& x,
                  std::vector<double>& work);

/// y = (I + s*A) u
void apply_shifted(const Tridiag& A, double s, const Profile& u, Profile& y);

/// Potential q evaluated at interior node i (xi = grid.xi[i]) and time t.
/// An empty function means q == 0.
using PotentialFn = std::function<double(int i, double xi, double t)>;

/// Transport rows D*alpha(t)*d2/dxi2 + b(xi,t)*d/dxi by second-order central
/// differences, Dirichlet rows eliminated.  Enforces the grid Peclet guard
/// |b|*dx/(D*alpha) < 2 and names the worst node on violation.
Tridiag assemble_transport(double D, const DomainMotion& d, const Grid& g, double t);

/// Full operator rows for D*alpha*d2 + b*d1 - q at time t.
Tridiag assemble_operator(double D, const DomainMotion& d, const Grid& g, const PotentialFn& q,
                          double t);

/// Per-step transport rows frozen at the half-step times t_j + dt/2,
/// shared by the linear and nonlinear steppers.
class TransportTable {
public:
    TransportTable(double D, const DomainMotion& d, const Grid& g);
    const Tridiag& at_step(int j) const { return rows_[static_cast<std::size_t>(j)]; }

private:
    std::vector<Tridiag> rows_;
};

/// Time marching for  du/dt = D*alpha*u'' + b*u' - q*u  on [0, L0] with
/// Dirichlet ends: Crank-Nicolson on the transport part with coefficients
/// frozen at t + dt/2, and the zero-order term applied as exact exponential
/// half-step factors on both sides (Strang splitting).  Second order in dt;
/// a spatially constant shift of q rescales the whole period map by exactly
/// exp(-shift*T), so principal-eigenvalue shifts are exact to rounding.
class LinearPropagator {
public:
    LinearPropagator(double D, const DomainMotion& d, const Grid& g, PotentialFn q = {});

    const Grid& grid() const { return grid_; }

    /// One step t_j -> t_{j+1}, in place.
    void step(Profile& u, int j) const;

    /// Period map P: march v over [t0, t0+T].
    Profile apply_period(const Profile& v) const;

    /// March over one period keeping the Nt+1 snapshots.
    SpaceTimeField integrate_period(const Profile& v0) const;

private:
    Grid grid_;
    TransportTable transport_;
    std::vector<std::vector<double>> qfactor_;  // exp(-q*dt/2) per step, empty when q == 0
    mutable std::vector<double> work_, rhs_;
};

/// IMEX stepper for the single-species problem du/dt = transport + F(u):
/// Crank-Nicolson transport, reaction explicit at a midpoint state obtained
/// from a half Crank-Nicolson predictor (keeps second order without an
/// explicit diffusion stage).  Clamps reaction undershoot in [-1e-12, 0] to
/// zero, rejects anything below, and aborts on blow-up.
class SingleSpeciesStepper {
public:
    SingleSpeciesStepper(int species, const ReactionModel& m, const DomainMotion& d,
                         const Grid& g);

    void step(Profile& u, int j);

private:
    const ReactionModel model_;
    int species_;
    double blowup_limit_;
    Grid grid_;
    TransportTable transport_;
    Profile mid_, rhs_, work_;

    double reaction(double u) const;
};

/// Same scheme for the coupled two-species system; the reaction pair
/// f1, f2 is evaluated on the jointly predicted midpoint states.
class CoupledStepper {
public:
    CoupledStepper(const ReactionModel& m, const DomainMotion& d, const Grid& g);

    void step(Profile& u1, Profile& u2, int j);

private:
    const ReactionModel model_;
    double blowup_limit_;
    Grid grid_;
    TransportTable transport1_, transport2_;
    Profile mid1_, mid2_, rhs_, work_;
};

/// Clamp tiny negative undershoot to zero; throw if any value is below
/// -1e-12 or the sup norm exceeds the blow-up limit.
void enforce_bounds(Profile& u, double blowup_limit, const char* who);

/// One period of the nonlinear single-species dynamics with snapshots.
SpaceTimeField integrate_period(SingleSpeciesStepper& stepper, const Grid& g, Profile v0);

}  // namespace invasion1d
