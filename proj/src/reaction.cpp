#include "invasion1d/reaction.hpp"

#include <cmath>
#include <stdexcept>

namespace invasion1d {

namespace {
void require_nonnegative(double u, const char* what) {
    if (u < 0.0) throw std::domain_error(std::string(what) + ": negative density rejected");
}
}  // namespace

void ReactionModel::validate() const {
    auto positive = [](double v, const char* k) {
        if (!(v > 0.0)) throw std::invalid_argument(std::string(k) + " must be > 0");
    };
    positive(r1, "r1");
    positive(r2, "r2");
    positive(n, "n");
    positive(h1_hat, "h1_hat");
    positive(h2_hat, "h2_hat");
    positive(g2_hat, "g2_hat");
    positive(D1, "D1");
    positive(D2, "D2");
    if (g1_hat < 0.0) throw std::invalid_argument("g1_hat must be >= 0");
}

double ReactionModel::power_n(double x) const {
    if (n == 1.0) return x;
    if (n == 2.0) return x * x;
    return std::pow(x, n);
}

double ReactionModel::K1() const { return std::pow(r1, 1.0 / n) / h1_hat; }
double ReactionModel::K2() const { return std::pow(r2, 1.0 / n) / h2_hat; }

double ReactionModel::F1(double u) const {
    require_nonnegative(u, "F1");
    return u * (r1 - power_n(h1_hat * u));
}

double ReactionModel::F2(double u) const {
    require_nonnegative(u, "F2");
    return u * (r2 - power_n(h2_hat * u));
}

double ReactionModel::f1(double u1, double u2) const {
    require_nonnegative(u1, "f1");
    require_nonnegative(u2, "f1");
    return u1 * (r1 - power_n(h1_hat * u1) - power_n(g1_hat * u2));
}

double ReactionModel::f2(double u1, double u2) const {
    require_nonnegative(u1, "f2");
    require_nonnegative(u2, "f2");
    return u2 * (r2 - power_n(g2_hat * u1) - power_n(h2_hat * u2));
}

}  // namespace invasion1d
