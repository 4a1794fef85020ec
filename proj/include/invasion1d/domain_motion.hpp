#pragma once

#include "invasion1d/periodic_fn.hpp"

#include <utility>

namespace invasion1d {

/// Moving interval  A(t) + c*t < x < A(t) + c*t + L(t)  with T-periodic L, A,
/// mapped onto the fixed reference interval [0, L0] by
/// xi = (x - A(t) - c*t) * L0 / L(t).  On [0, L0] the heat operator for a
/// species with diffusivity D becomes
///
///   D * alpha(t) * d2/dxi2 + b(xi,t) * d/dxi,
///   alpha(t) = L0^2 / L(t)^2,
///   b(xi,t)  = ((c + A'(t)) * L0 + xi * L'(t)) / L(t).
///
/// Also carries the auxiliary quantities used by the analytic eigenvalue
/// bounds and the invasion conditions: the Liouville exponent E(xi,t), its
/// total spread delta_E, and the quadratic extrema Qbar(t), Qunder(t).
/// The constant drift c enters those through the effective offset velocity
/// c + A'(t), which reduces to the A'-only form when c = 0 and to the exact
/// translating-interval expressions when L and A are constant.
class DomainMotion {
public:
    DomainMotion(double c, PeriodicFunction L, PeriodicFunction A,
                 double ref_length = 0.0 /* 0 => default L(0) */);

    double c() const { return c_; }
    double period() const { return length_.period; }
    double ref_length() const { return ref_length_; }
    const PeriodicFunction& length() const { return length_; }
    const PeriodicFunction& offset() const { return offset_; }
    const PeriodicFunction& length_dot() const { return length_dot_; }
    const PeriodicFunction& length_ddot() const { return length_ddot_; }
    const PeriodicFunction& offset_dot() const { return offset_dot_; }
    const PeriodicFunction& offset_ddot() const { return offset_ddot_; }

    bool is_constant() const { return length_.is_constant() && offset_.is_constant(); }

    /// c + A'(t): the effective drift of the transformed frame.
    double drift(double t) const { return c_ + offset_dot_(t); }

    /// Diffusion scaling L0^2/L(t)^2 (multiplies D).
    double alpha(double t) const;

    /// Advection coefficient b(xi,t).
    double advection(double xi, double t) const;

    /// (alpha, b) with a range check on xi in [0, L0].
    std::pair<double, double> coefficients_at(double xi, double t) const;

    /// Liouville exponent E(xi,t) = L'L xi^2/(4 L0^2) + (c+A') L xi/(2 L0).
    double E(double xi, double t) const;

    /// max E - min E over [0,L0] x [0,T]: exact extremum in xi per time
    /// sample (quadratic), dense time grid plus golden-section refinement.
    double delta_E(int time_samples = 256) const;

    /// (Qbar(t), Qunder(t)): max / -min over eta in [0,1] of
    /// eta^2 L''L/2 + eta A''L, evaluated exactly from the quadratic.
    std::pair<double, double> Q_bounds(double t) const;

    /// min_t(A+L) - max_t A over a dense time grid with local refinement;
    /// negative when the interval family shares no common window.
    double overlap_width(int time_samples = 4096) const;

private:
    double c_ = 0.0;
    PeriodicFunction length_, offset_;
    PeriodicFunction length_dot_, length_ddot_, offset_dot_, offset_ddot_;
    double ref_length_ = 0.0;

    // extremum of E over xi in [0,L0] at fixed t (sign = +1 max, -1 min)
    double extremal_E_at(double t, int sign) const;
};

}  // namespace invasion1d
