#include "invasion1d/domain_motion.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace invasion1d {

namespace {

// Deterministic golden-section refinement of a smooth 1-D function around a
// sampled extremum. `lo`/`hi` bracket one sample on each side of the best.
double golden_refine(const std::function<double(double)>& f, double lo, double hi, int sign,
                     int iters = 80) {
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
    double f1 = sign * f(x1), f2 = sign * f(x2);
    for (int k = 0; k < iters; ++k) {
        if (f1 >= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - phi * (b - a);
            f1 = sign * f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + phi * (b - a);
            f2 = sign * f(x2);
        }
    }
    return sign * std::max(f1, f2);
}

// Dense scan of a T-periodic function plus refinement of the best bracket.
double periodic_extremum(const std::function<double(double)>& f, double T, int samples,
                         int sign) {
    int best = 0;
    double best_val = sign * f(0.0);
    for (int j = 1; j < samples; ++j) {
        const double v = sign * f(T * j / samples);
        if (v > best_val) {
            best_val = v;
            best = j;
        }
    }
    const double dt = T / samples;
    return golden_refine(f, (best - 1) * dt, (best + 1) * dt, sign);
}

}  // namespace

DomainMotion::DomainMotion(double c, PeriodicFunction L, PeriodicFunction A, double ref_length)
    : c_(c), length_(std::move(L)), offset_(std::move(A)) {
    if (length_.period != offset_.period)
        throw std::invalid_argument("DomainMotion: L and A must share the same period");
    length_dot_ = length_.derivative(1);
    length_ddot_ = length_.derivative(2);
    offset_dot_ = offset_.derivative(1);
    offset_ddot_ = offset_.derivative(2);

    // L(t) > 0 checked by dense sampling over one period.
    const int n = 4096;
    double min_val = length_(0.0), min_t = 0.0;
    for (int j = 1; j < n; ++j) {
        const double t = period() * j / n;
        const double v = length_(t);
        if (v < min_val) {
            min_val = v;
            min_t = t;
        }
    }
    if (min_val <= 0.0) {
        std::ostringstream os;
        os << "L must stay positive: min sampled value " << min_val << " at t=" << min_t;
        throw std::invalid_argument(os.str());
    }
    ref_length_ = ref_length > 0.0 ? ref_length : length_(0.0);
    if (!(ref_length_ > 0.0)) throw std::invalid_argument("DomainMotion: L0 must be > 0");
}

double DomainMotion::alpha(double t) const {
    const double L = length_(t);
    return ref_length_ * ref_length_ / (L * L);
}

double DomainMotion::advection(double xi, double t) const {
    return (drift(t) * ref_length_ + xi * length_dot_(t)) / length_(t);
}

std::pair<double, double> DomainMotion::coefficients_at(double xi, double t) const {
    if (xi < 0.0 || xi > ref_length_) {
        std::ostringstream os;
        os << "coefficients_at: xi=" << xi << " outside [0, " << ref_length_ << "]";
        throw std::invalid_argument(os.str());
    }
    return {alpha(t), advection(xi, t)};
}

double DomainMotion::E(double xi, double t) const {
    const double L = length_(t);
    return length_dot_(t) * L * xi * xi / (4.0 * ref_length_ * ref_length_) +
           drift(t) * L * xi / (2.0 * ref_length_);
}

double DomainMotion::extremal_E_at(double t, int sign) const {
    // E(.,t) is a quadratic a*xi^2 + b*xi: candidates are the endpoints and
    // the vertex when it lies inside.
    const double L = length_(t);
    const double a = length_dot_(t) * L / (4.0 * ref_length_ * ref_length_);
    const double b = drift(t) * L / (2.0 * ref_length_);
    double best = 0.0;  // xi = 0
    const double at_end = a * ref_length_ * ref_length_ + b * ref_length_;
    best = sign > 0 ? std::max(best, at_end) : std::min(best, at_end);
    if (a != 0.0) {
        const double v = -b / (2.0 * a);
        if (v > 0.0 && v < ref_length_) {
            const double at_v = a * v * v + b * v;
            best = sign > 0 ? std::max(best, at_v) : std::min(best, at_v);
        }
    }
    return best;
}

double DomainMotion::delta_E(int time_samples) const {
    const double T = period();
    auto emax = [this](double t) { return extremal_E_at(t, +1); };
    auto emin = [this](double t) { return extremal_E_at(t, -1); };
    const double hi = periodic_extremum(emax, T, time_samples, +1);
    const double lo = periodic_extremum(emin, T, time_samples, -1);
    return hi - lo;
}

std::pair<double, double> DomainMotion::Q_bounds(double t) const {
    const double p = length_ddot_(t) * length_(t) / 2.0;
    const double q = offset_ddot_(t) * length_(t);
    double hi = std::max(0.0, p + q);
    double lo = std::min(0.0, p + q);
    if (p != 0.0) {
        const double v = -q / (2.0 * p);
        if (v > 0.0 && v < 1.0) {
            const double at_v = p * v * v + q * v;
            hi = std::max(hi, at_v);
            lo = std::min(lo, at_v);
        }
    }
    return {hi, -lo};
}

double DomainMotion::overlap_width(int time_samples) const {
    const double T = period();
    auto right = [this](double t) { return offset_(t) + length_(t); };
    auto left = [this](double t) { return offset_(t); };
    const double min_right = periodic_extremum(right, T, time_samples, -1);
    const double max_left = periodic_extremum(left, T, time_samples, +1);
    return min_right - max_left;
}

}  // namespace invasion1d
