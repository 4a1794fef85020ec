#pragma once

// Test-only oracles kept independent of the implementation paths they check.

#include "invasion1d/floquet.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <complex>
#include <stdexcept>

namespace invasion1d::testing {

/// Assemble the period map column by column from unit basis vectors.
inline Eigen::MatrixXd dense_monodromy(double D, const DomainMotion& d, const Grid& g,
                                       const PotentialFn& q = {}) {
    LinearPropagator prop(D, d, g, q);
    Eigen::MatrixXd P(g.M, g.M);
    for (int k = 0; k < g.M; ++k) {
        Profile e(static_cast<std::size_t>(g.M), 0.0);
        e[static_cast<std::size_t>(k)] = 1.0;
        Profile col = prop.apply_period(e);
        for (int i = 0; i < g.M; ++i) P(i, k) = col[static_cast<std::size_t>(i)];
    }
    return P;
}

/// Dominant eigenvalue of the dense period map via the QR eigensolver.
inline double dense_dominant_rho(const Eigen::MatrixXd& P) {
    Eigen::EigenSolver<Eigen::MatrixXd> es(P);
    if (es.info() != Eigen::Success) throw std::runtime_error("dense eigensolve failed");
    double best = 0.0;
    std::complex<double> dom;
    for (int i = 0; i < P.rows(); ++i) {
        if (std::abs(es.eigenvalues()(i)) > best) {
            best = std::abs(es.eigenvalues()(i));
            dom = es.eigenvalues()(i);
        }
    }
    if (std::abs(dom.imag()) > 1e-10 * std::abs(dom))
        throw std::runtime_error("dominant eigenvalue unexpectedly complex");
    return dom.real();
}

inline double dense_mu(double D, const DomainMotion& d, const Grid& g, const PotentialFn& q = {}) {
    return -std::log(dense_dominant_rho(dense_monodromy(D, d, g, q))) / g.T;
}

/// Principal eigenvalue of the stationary operator D u'' + c u' - q u on the
/// constant interval, from the symmetric form via the self-adjoint dense
/// eigensolver (c handled by the exact exponential similarity transform).
inline double stationary_mu(double D, double c, double L0, int M,
                            const std::function<double(double)>& q) {
    const double dx = L0 / (M + 1);
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(M, M);
    for (int i = 0; i < M; ++i) {
        const double xi = dx * (i + 1);
        A(i, i) = 2.0 * D / (dx * dx) + c * c / (4.0 * D) + (q ? q(xi) : 0.0);
        if (i > 0) A(i, i - 1) = -D / (dx * dx);
        if (i + 1 < M) A(i, i + 1) = -D / (dx * dx);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A);
    if (es.info() != Eigen::Success) throw std::runtime_error("symmetric eigensolve failed");
    return es.eigenvalues()(0);
}

}  // namespace invasion1d::testing
