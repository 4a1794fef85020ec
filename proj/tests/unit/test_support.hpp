#pragma once

#include "invasion1d/domain_motion.hpp"
#include "invasion1d/reaction.hpp"

#include <random>

namespace invasion1d::testing {

inline PeriodicFunction breathing(double mean = 1.0, double amp = 0.1, double T = 1.0) {
    return PeriodicFunction(mean, {}, {amp}, T);
}

/// Random finite Fourier series with a fixed seed, for property tests.
inline PeriodicFunction random_series(std::mt19937& rng, double T, int max_harmonics = 4,
                                      double mean_scale = 1.0, double amp_scale = 0.2) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::uniform_int_distribution<int> kd(1, max_harmonics);
    const int K = kd(rng);
    std::vector<double> cs(static_cast<std::size_t>(K)), sn(static_cast<std::size_t>(K));
    for (int k = 0; k < K; ++k) {
        cs[static_cast<std::size_t>(k)] = amp_scale * u(rng) / (k + 1);
        sn[static_cast<std::size_t>(k)] = amp_scale * u(rng) / (k + 1);
    }
    return PeriodicFunction(mean_scale * (1.5 + 0.5 * u(rng)), std::move(cs), std::move(sn), T);
}

/// Lotka-Volterra desk model used across the invasion tests:
/// constant interval [0,2], D1=D2=1, r1=r2=6, n=1, h1=h2=1, g2=0.5.
inline ReactionModel desk_model() {
    ReactionModel m;
    m.r1 = 6.0;
    m.r2 = 6.0;
    m.n = 1.0;
    m.h1_hat = 1.0;
    m.h2_hat = 1.0;
    m.g2_hat = 0.5;
    m.g1_hat = 0.0;
    m.D1 = 1.0;
    m.D2 = 1.0;
    return m;
}

inline DomainMotion desk_domain() {
    return DomainMotion(0.0, PeriodicFunction::constant(2.0), PeriodicFunction::constant(0.0));
}

}  // namespace invasion1d::testing
