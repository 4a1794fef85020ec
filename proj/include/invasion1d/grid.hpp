#pragma once

#include <vector>

namespace invasion1d {

/// Interior-node values of a grid function; the Dirichlet boundary values at
/// xi = 0 and xi = L0 are identically zero and are not stored.
using Profile = std::vector<double>;

double sup_norm(const Profile& u);
double sup_diff(const Profile& a, const Profile& b);

/// Uniform grid on [0, L0] with M interior nodes xi_i = i*L0/(M+1),
/// i = 1..M, and Nt time steps per period (dt = T/Nt exactly).
struct Grid {
    int M = 0;
    int Nt = 0;
    double L0 = 0.0;
    double T = 0.0;
    double dx = 0.0;
    double dt = 0.0;
    std::vector<double> xi;

    Grid() = default;
    Grid(int M_, int Nt_, double L0_, double T_);
};

/// One period of a function of (xi, t) stored as Nt+1 interior-node
/// snapshots at t_j = j*dt, with linear interpolation in t and periodic
/// wrap-around.
struct SpaceTimeField {
    double dt = 0.0;
    double period = 0.0;
    bool periodic = false;
    std::vector<Profile> snapshots;

    int steps() const { return static_cast<int>(snapshots.size()) - 1; }
    int nodes() const { return snapshots.empty() ? 0 : static_cast<int>(snapshots.front().size()); }

    const Profile& at_step(int j) const { return snapshots[static_cast<std::size_t>(j)]; }

    /// Interpolated value at interior node i and arbitrary time t.
    double value(int i, double t) const;

    double max_value() const;
    double min_value() const;

    /// sup-norm gap between the final and initial snapshots.
    double period_defect() const;

    static SpaceTimeField zero(const Grid& g);
};

}  // namespace invasion1d
