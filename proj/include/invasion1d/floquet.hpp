#pragma once

#include "invasion1d/stepper.hpp"

namespace invasion1d {

/// Principal periodic eigenvalue mu and positive T-periodic eigenfunction of
///   d phi/dt - (D*alpha*phi'' + b*phi') + q*phi = mu*phi
/// recovered from the period (monodromy) map P: the periodic eigenfunction
/// satisfies P*phi(.,0) = exp(-mu*T)*phi(.,0), so mu = -ln(rho)/T with rho
/// the spectral radius of P.
struct EigenResult {
    double mu = 0.0;
    SpaceTimeField phi;  // sup-norm 1 at t = 0
    int iterations = 0;
    double residual = 0.0;       // ||P v - rho v||_inf at convergence
    double period_defect = 0.0;  // ||phi(.,T) - phi(.,0)||_inf
};

struct PowerIterationOptions {
    double tol = 1e-11;
    int max_iterations = 500;
};

/// March v through one period of the linear problem (P*v).
Profile monodromy_apply(const Profile& v, double D, const DomainMotion& d, const Grid& g,
                        const PotentialFn& q = {});

/// Power iteration on the period map from the strictly positive start
/// sin(pi*xi/L0), with a Rayleigh-quotient estimate of rho per sweep.
EigenResult principal_eigenpair(double D, const DomainMotion& d, const Grid& g,
                                const PotentialFn& q = {},
                                const PowerIterationOptions& opts = {});

}  // namespace invasion1d
