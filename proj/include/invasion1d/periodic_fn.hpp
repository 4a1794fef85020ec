#pragma once

#include <functional>
#include <vector>

namespace invasion1d {

/// T-periodic scalar function of time represented as a finite Fourier series
///
///   f(t) = mean + sum_k cos_coeffs[k-1]*cos(2*pi*k*t/T)
///               + sum_k sin_coeffs[k-1]*sin(2*pi*k*t/T)
///
/// Periodicity is exact by construction and derivatives of any order are
/// again finite series with the same period, so quantities built from the
/// first and second derivatives carry no differencing noise.
struct PeriodicFunction {
    double period = 1.0;
    double mean = 0.0;
    std::vector<double> cos_coeffs;
    std::vector<double> sin_coeffs;

    PeriodicFunction() = default;
    PeriodicFunction(double mean_, std::vector<double> cos_, std::vector<double> sin_,
                     double period_);

    static PeriodicFunction constant(double value, double period = 1.0);

    double operator()(double t) const;

    /// Term-wise analytic derivative; order must be 1 or 2.
    PeriodicFunction derivative(int order = 1) const;

    /// True when every harmonic coefficient is exactly zero.
    bool is_constant() const;

    int harmonics() const { return static_cast<int>(std::max(cos_coeffs.size(), sin_coeffs.size())); }
};

/// Mean over one period; exact (the constant term) for a pure series.
double period_mean(const PeriodicFunction& f);

/// Mean of an arbitrary T-periodic integrand by composite trapezoid rule,
/// which for periodic integrands reduces to an equal-weight sample average.
double period_mean(const std::function<double(double)>& f, double period, int samples = 1024);

}  // namespace invasion1d
