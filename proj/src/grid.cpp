#include "invasion1d/grid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace invasion1d {

double sup_norm(const Profile& u) {
    double m = 0.0;
    for (double v : u) m = std::max(m, std::abs(v));
    return m;
}

double sup_diff(const Profile& a, const Profile& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

Grid::Grid(int M_, int Nt_, double L0_, double T_) : M(M_), Nt(Nt_), L0(L0_), T(T_) {
    if (M < 2) throw std::invalid_argument("Grid: M must be >= 2");
    if (Nt < 1) throw std::invalid_argument("Grid: Nt must be >= 1");
    if (!(L0 > 0.0) || !(T > 0.0)) throw std::invalid_argument("Grid: L0 and T must be > 0");
    dx = L0 / (M + 1);
    dt = T / Nt;
    xi.resize(static_cast<std::size_t>(M));
    for (int i = 0; i < M; ++i) xi[static_cast<std::size_t>(i)] = dx * (i + 1);
}

double SpaceTimeField::value(int i, double t) const {
    const int n = steps();
    double s = t / dt;
    double jf = std::floor(s);
    double frac = s - jf;
    long j = static_cast<long>(jf) % n;
    if (j < 0) j += n;
    const double a = snapshots[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    const double b = snapshots[static_cast<std::size_t>(j + 1)][static_cast<std::size_t>(i)];
    return (1.0 - frac) * a + frac * b;
}

double SpaceTimeField::max_value() const {
    double m = -std::numeric_limits<double>::infinity();
    for (const auto& s : snapshots)
        for (double v : s) m = std::max(m, v);
    return m;
}

double SpaceTimeField::min_value() const {
    double m = std::numeric_limits<double>::infinity();
    for (const auto& s : snapshots)
        for (double v : s) m = std::min(m, v);
    return m;
}

double SpaceTimeField::period_defect() const {
    return sup_diff(snapshots.front(), snapshots.back());
}

SpaceTimeField SpaceTimeField::zero(const Grid& g) {
    SpaceTimeField f;
    f.dt = g.dt;
    f.period = g.T;
    f.periodic = true;
    f.snapshots.assign(static_cast<std::size_t>(g.Nt) + 1,
                       Profile(static_cast<std::size_t>(g.M), 0.0));
    return f;
}

}  // namespace invasion1d
