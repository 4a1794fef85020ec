#include "invasion1d/stepper.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace invasion1d {

void thomas_solve(const Tridiag& A, const std::vector<double>& rhs, std::vector<double>& x,
                  std::vector<double>& work) {
    const int n = A.size();
    x.resize(static_cast<std::size_t>(n));
    work.resize(static_cast<std::size_t>(n));
    double piv = A.diag[0];
    if (piv == 0.0) throw std::runtime_error("thomas_solve: zero pivot at row 0");
    work[0] = A.upper[0] / piv;
    x[0] = rhs[0] / piv;
    for (int i = 1; i < n; ++i) {
        piv = A.diag[i] - A.lower[i] * work[i - 1];
        if (piv == 0.0) {
            std::ostringstream os;
            os << "thomas_solve: zero pivot at row " << i;
            throw std::runtime_error(os.str());
        }
        work[i] = A.upper[i] / piv;
        x[i] = (rhs[i] - A.lower[i] * x[i - 1]) / piv;
    }
    for (int i = n - 2; i >= 0; --i) x[i] -= work[i] * x[i + 1];
}

void apply_shifted(const Tridiag& A, double s, const Profile& u, Profile& y) {
    const int n = A.size();
    y.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        double v = (1.0 + s * A.diag[i]) * u[i];
        if (i > 0) v += s * A.lower[i] * u[i - 1];
        if (i + 1 < n) v += s * A.upper[i] * u[i + 1];
        y[i] = v;
    }
}

Tridiag assemble_transport(double D, const DomainMotion& d, const Grid& g, double t) {
    Tridiag A(g.M);
    const double al = d.alpha(t);
    const double dx = g.dx;
    const double diff = D * al / (dx * dx);
    double worst_pe = 0.0;
    int worst_node = 0;
    for (int i = 0; i < g.M; ++i) {
        const double b = d.advection(g.xi[static_cast<std::size_t>(i)], t);
        const double pe = std::abs(b) * dx / (D * al);
        if (pe > worst_pe) {
            worst_pe = pe;
            worst_node = i;
        }
        A.diag[i] = -2.0 * diff;
        if (i > 0) A.lower[i] = diff - b / (2.0 * dx);
        if (i + 1 < g.M) A.upper[i] = diff + b / (2.0 * dx);
    }
    if (worst_pe >= 2.0) {
        std::ostringstream os;
        os << "grid Peclet " << worst_pe << " >= 2 at node " << worst_node + 1
           << " (xi=" << g.xi[static_cast<std::size_t>(worst_node)] << ", t=" << t
           << "); refine the spatial grid";
        throw std::runtime_error(os.str());
    }
    return A;
}

Tridiag assemble_operator(double D, const DomainMotion& d, const Grid& g, const PotentialFn& q,
                          double t) {
    Tridiag A = assemble_transport(D, d, g, t);
    if (q) {
        for (int i = 0; i < g.M; ++i) A.diag[i] -= q(i, g.xi[static_cast<std::size_t>(i)], t);
    }
    return A;
}

TransportTable::TransportTable(double D, const DomainMotion& d, const Grid& g) {
    rows_.reserve(static_cast<std::size_t>(g.Nt));
    for (int j = 0; j < g.Nt; ++j) {
        const double th = (j + 0.5) * g.dt;
        rows_.push_back(assemble_transport(D, d, g, th));
    }
}

LinearPropagator::LinearPropagator(double D, const DomainMotion& d, const Grid& g, PotentialFn q)
    : grid_(g), transport_(D, d, g) {
    if (q) {
        qfactor_.resize(static_cast<std::size_t>(g.Nt));
        for (int j = 0; j < g.Nt; ++j) {
            const double th = (j + 0.5) * g.dt;
            auto& f = qfactor_[static_cast<std::size_t>(j)];
            f.resize(static_cast<std::size_t>(g.M));
            for (int i = 0; i < g.M; ++i)
                f[static_cast<std::size_t>(i)] =
                    std::exp(-q(i, g.xi[static_cast<std::size_t>(i)], th) * g.dt / 2.0);
        }
    }
}

void LinearPropagator::step(Profile& u, int j) const {
    const Tridiag& A = transport_.at_step(j);
    const double s = grid_.dt / 2.0;
    const std::vector<double>* qf =
        qfactor_.empty() ? nullptr : &qfactor_[static_cast<std::size_t>(j)];
    if (qf)
        for (int i = 0; i < grid_.M; ++i) u[i] *= (*qf)[static_cast<std::size_t>(i)];
    apply_shifted(A, s, u, rhs_);
    Tridiag lhs(grid_.M);
    for (int i = 0; i < grid_.M; ++i) {
        lhs.diag[i] = 1.0 - s * A.diag[i];
        lhs.lower[i] = -s * A.lower[i];
        lhs.upper[i] = -s * A.upper[i];
    }
    thomas_solve(lhs, rhs_, u, work_);
    if (qf)
        for (int i = 0; i < grid_.M; ++i) u[i] *= (*qf)[static_cast<std::size_t>(i)];
}

Profile LinearPropagator::apply_period(const Profile& v) const {
    Profile u = v;
    for (int j = 0; j < grid_.Nt; ++j) step(u, j);
    return u;
}

SpaceTimeField LinearPropagator::integrate_period(const Profile& v0) const {
    SpaceTimeField f;
    f.dt = grid_.dt;
    f.period = grid_.T;
    f.snapshots.reserve(static_cast<std::size_t>(grid_.Nt) + 1);
    Profile u = v0;
    f.snapshots.push_back(u);
    for (int j = 0; j < grid_.Nt; ++j) {
        step(u, j);
        f.snapshots.push_back(u);
    }
    return f;
}

void enforce_bounds(Profile& u, double blowup_limit, const char* who) {
    double worst = 0.0;
    double peak = 0.0;
    for (double& v : u) {
        if (v < 0.0) {
            worst = std::min(worst, v);
            v = 0.0;
        }
        peak = std::max(peak, v);
    }
    if (worst < -1e-12) {
        std::ostringstream os;
        os << who << ": negative undershoot " << worst << " below tolerance -1e-12";
        throw std::runtime_error(os.str());
    }
    if (!(peak == peak) || peak > blowup_limit) {
        std::ostringstream os;
        os << who << ": blow-up detected, sup norm " << peak << " exceeds " << blowup_limit;
        throw std::runtime_error(os.str());
    }
}

SingleSpeciesStepper::SingleSpeciesStepper(int species, const ReactionModel& m,
                                           const DomainMotion& d, const Grid& g)
    : model_(m),
      species_(species),
      grid_(g),
      transport_(species == 1 ? m.D1 : m.D2, d, g) {
    if (species != 1 && species != 2)
        throw std::invalid_argument("SingleSpeciesStepper: species must be 1 or 2");
    blowup_limit_ = 10.0 * (species == 1 ? m.K1() : m.K2());
}

double SingleSpeciesStepper::reaction(double u) const {
    return species_ == 1 ? model_.F1(u) : model_.F2(u);
}

void SingleSpeciesStepper::step(Profile& u, int j) {
    const Tridiag& A = transport_.at_step(j);
    const double dt = grid_.dt;
    const double s = dt / 2.0;

    // predictor: half CN transport step plus half Euler reaction
    apply_shifted(A, s / 2.0, u, rhs_);
    for (int i = 0; i < grid_.M; ++i) rhs_[i] += (dt / 2.0) * reaction(u[i]);
    Tridiag lhs(grid_.M);
    for (int i = 0; i < grid_.M; ++i) {
        lhs.diag[i] = 1.0 - (s / 2.0) * A.diag[i];
        lhs.lower[i] = -(s / 2.0) * A.lower[i];
        lhs.upper[i] = -(s / 2.0) * A.upper[i];
    }
    thomas_solve(lhs, rhs_, mid_, work_);
    for (double& v : mid_) v = std::max(v, 0.0);

    // corrector: full CN transport with midpoint reaction source
    apply_shifted(A, s, u, rhs_);
    for (int i = 0; i < grid_.M; ++i) rhs_[i] += dt * reaction(mid_[i]);
    for (int i = 0; i < grid_.M; ++i) {
        lhs.diag[i] = 1.0 - s * A.diag[i];
        lhs.lower[i] = -s * A.lower[i];
        lhs.upper[i] = -s * A.upper[i];
    }
    thomas_solve(lhs, rhs_, u, work_);
    enforce_bounds(u, blowup_limit_, "SingleSpeciesStepper");
}

CoupledStepper::CoupledStepper(const ReactionModel& m, const DomainMotion& d, const Grid& g)
    : model_(m),
      blowup_limit_(10.0 * std::max(m.K1(), m.K2())),
      grid_(g),
      transport1_(m.D1, d, g),
      transport2_(m.D2, d, g) {}

void CoupledStepper::step(Profile& u1, Profile& u2, int j) {
    const Tridiag& A1 = transport1_.at_step(j);
    const Tridiag& A2 = transport2_.at_step(j);
    const double dt = grid_.dt;
    const double s = dt / 2.0;
    Tridiag lhs(grid_.M);

    auto solve_with = [&](const Tridiag& A, double scale, const Profile& rhs, Profile& out) {
        for (int i = 0; i < grid_.M; ++i) {
            lhs.diag[i] = 1.0 - scale * A.diag[i];
            lhs.lower[i] = -scale * A.lower[i];
            lhs.upper[i] = -scale * A.upper[i];
        }
        thomas_solve(lhs, rhs, out, work_);
    };

    // joint midpoint predictor
    apply_shifted(A1, s / 2.0, u1, rhs_);
    for (int i = 0; i < grid_.M; ++i) rhs_[i] += (dt / 2.0) * model_.f1(u1[i], u2[i]);
    solve_with(A1, s / 2.0, rhs_, mid1_);
    apply_shifted(A2, s / 2.0, u2, rhs_);
    for (int i = 0; i < grid_.M; ++i) rhs_[i] += (dt / 2.0) * model_.f2(u1[i], u2[i]);
    solve_with(A2, s / 2.0, rhs_, mid2_);
    for (double& v : mid1_) v = std::max(v, 0.0);
    for (double& v : mid2_) v = std::max(v, 0.0);

    // correctors with the midpoint reaction pair
    apply_shifted(A1, s, u1, rhs_);
    for (int i = 0; i < grid_.M; ++i) rhs_[i] += dt * model_.f1(mid1_[i], mid2_[i]);
    solve_with(A1, s, rhs_, u1);
    apply_shifted(A2, s, u2, rhs_);
    for (int i = 0; i < grid_.M; ++i) rhs_[i] += dt * model_.f2(mid1_[i], mid2_[i]);
    solve_with(A2, s, rhs_, u2);
    enforce_bounds(u1, blowup_limit_, "CoupledStepper(u1)");
    enforce_bounds(u2, blowup_limit_, "CoupledStepper(u2)");
}

}  // namespace invasion1d
