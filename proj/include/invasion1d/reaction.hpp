#pragma once

namespace invasion1d {

/// Power-law competition family
///
///   F1(u)      = u * (r1 - (h1_hat*u)^n)
///   F2(u)      = u * (r2 - (h2_hat*u)^n)
///   f1(u1,u2)  = u1 * (r1 - (h1_hat*u1)^n - (g1_hat*u2)^n)
///   f2(u1,u2)  = u2 * (r2 - (g2_hat*u1)^n - (h2_hat*u2)^n)
///
/// with carrying capacities K_i = r_i^(1/n)/h_i_hat.  At n = 1 these are the
/// Lotka-Volterra forms.  g1_hat may be zero (no back-coupling onto the
/// resident species); every other coefficient must be positive.
struct ReactionModel {
    double r1 = 1.0, r2 = 1.0;
    double n = 1.0;
    double h1_hat = 1.0, h2_hat = 1.0;
    double g2_hat = 1.0;
    double g1_hat = 0.0;
    double D1 = 1.0, D2 = 1.0;

    /// Validates positivity constraints; throws std::invalid_argument.
    void validate() const;

    double K1() const;
    double K2() const;

    double F1(double u) const;
    double F2(double u) const;
    double f1(double u1, double u2) const;
    double f2(double u1, double u2) const;

    double g2_of(double u) const { return power_n(g2_hat * u); }
    double h1_of(double u) const { return power_n(h1_hat * u); }
    double h2_of(double u) const { return power_n(h2_hat * u); }

    /// sup over [0, K1] of g2 = (g2_hat * K1)^n.
    double beta_hat() const { return g2_of(K1()); }

    /// x^n with fast paths for the common exponents.
    double power_n(double x) const;
};

}  // namespace invasion1d
