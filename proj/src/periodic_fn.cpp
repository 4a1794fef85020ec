#include "invasion1d/periodic_fn.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace invasion1d {

PeriodicFunction::PeriodicFunction(double mean_, std::vector<double> cos_,
                                   std::vector<double> sin_, double period_)
    : period(period_), mean(mean_), cos_coeffs(std::move(cos_)), sin_coeffs(std::move(sin_)) {
    if (!(period > 0.0)) throw std::invalid_argument("PeriodicFunction: period must be > 0");
}

PeriodicFunction PeriodicFunction::constant(double value, double period) {
    return PeriodicFunction(value, {}, {}, period);
}

double PeriodicFunction::operator()(double t) const {
    const double w = 2.0 * std::numbers::pi / period;
    double v = mean;
    for (std::size_t k = 0; k < cos_coeffs.size(); ++k)
        v += cos_coeffs[k] * std::cos(w * static_cast<double>(k + 1) * t);
    for (std::size_t k = 0; k < sin_coeffs.size(); ++k)
        v += sin_coeffs[k] * std::sin(w * static_cast<double>(k + 1) * t);
    return v;
}

PeriodicFunction PeriodicFunction::derivative(int order) const {
    if (order != 1 && order != 2) throw std::invalid_argument("derivative: order must be 1 or 2");
    const double w = 2.0 * std::numbers::pi / period;
    const std::size_t K = std::max(cos_coeffs.size(), sin_coeffs.size());
    std::vector<double> dc(K, 0.0), ds(K, 0.0);
    for (std::size_t k = 0; k < K; ++k) {
        const double wk = w * static_cast<double>(k + 1);
        const double a = k < cos_coeffs.size() ? cos_coeffs[k] : 0.0;
        const double b = k < sin_coeffs.size() ? sin_coeffs[k] : 0.0;
        dc[k] = b * wk;   // d/dt sin -> +wk cos
        ds[k] = -a * wk;  // d/dt cos -> -wk sin
    }
    PeriodicFunction d(0.0, std::move(dc), std::move(ds), period);
    return order == 1 ? d : d.derivative(1);
}

bool PeriodicFunction::is_constant() const {
    for (double a : cos_coeffs)
        if (a != 0.0) return false;
    for (double b : sin_coeffs)
        if (b != 0.0) return false;
    return true;
}

double period_mean(const PeriodicFunction& f) { return f.mean; }

double period_mean(const std::function<double(double)>& f, double period, int samples) {
    if (samples < 2) throw std::invalid_argument("period_mean: need at least 2 samples");
    double acc = 0.0;
    for (int j = 0; j < samples; ++j) acc += f(period * static_cast<double>(j) / samples);
    return acc / samples;
}

}  // namespace invasion1d
