#include "invasion1d/invasion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace invasion1d {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Invades: return "Invades";
        case Verdict::CannotInvade: return "CannotInvade";
        default: return "Inconclusive";
    }
}

EigenResult mu_hat(const ReactionModel& m, const DomainMotion& d, const SteadyStateResult& u1star,
                   const Grid& g) {
    return principal_eigenpair(m.D2, d, g,
                               u1star.potential([&m](double u) { return m.g2_of(u); }));
}

double beta_of(const ReactionModel& m, const SpaceTimeField& u1star) {
    // g2 is non-decreasing, so the sup over the period is g2 at the peak.
    return m.g2_of(std::max(0.0, u1star.max_value()));
}

InvasionVerdict prop1_check(const ReactionModel& m, double mu2, double beta) {
    if (!(beta > 0.0)) throw std::invalid_argument("prop1_check: requires beta > 0");
    InvasionVerdict v;
    v.condition = "Prop1";
    v.witness("r2", m.r2).witness("mu2", mu2).witness("beta", beta)
        .witness("beta_hat", m.beta_hat());
    if (m.r2 >= mu2 + beta) {
        v.verdict = Verdict::Invades;
        if (m.r2 == mu2 + beta) {
            v.witness("boundary_case", 1.0);
            v.note = "r2 equals mu2 + beta exactly; invasion by the stated inclusive inequality";
        }
    } else if (m.r2 <= mu2) {
        v.verdict = Verdict::CannotInvade;
    } else {
        v.verdict = Verdict::Inconclusive;
        v.note = "mu2 < r2 < mu2 + beta";
    }
    return v;
}

InvasionVerdict prop2_check(const ReactionModel& m, const SpaceTimeField& u1star,
                            const SpaceTimeField& u2star, double tau) {
    InvasionVerdict v;
    v.condition = "Prop2";
    bool leq_everywhere = true, geq_everywhere = true;
    double max_a_minus_b = -std::numeric_limits<double>::infinity();
    double max_b_minus_a = -std::numeric_limits<double>::infinity();
    for (int j = 0; j <= u1star.steps(); ++j) {
        const Profile& s1 = u1star.at_step(j);
        const Profile& s2 = u2star.at_step(j);
        for (std::size_t i = 0; i < s1.size(); ++i) {
            const double a = m.g2_of(s1[i]);   // g2(u1*)
            const double b = m.h2_of(s2[i]);   // h2(u2*)
            max_a_minus_b = std::max(max_a_minus_b, a - b);
            max_b_minus_a = std::max(max_b_minus_a, b - a);
            if (a - b > tau) leq_everywhere = false;
            if (b - a > tau) geq_everywhere = false;
        }
    }
    const bool strict_below = max_b_minus_a > tau;  // somewhere g2(u1*) < h2(u2*)
    const bool strict_above = max_a_minus_b > tau;
    v.witness("max_g2u1_minus_h2u2", max_a_minus_b)
        .witness("max_h2u2_minus_g2u1", max_b_minus_a)
        .witness("tau", tau);
    if (leq_everywhere && strict_below)
        v.verdict = Verdict::Invades;
    else if (geq_everywhere && strict_above)
        v.verdict = Verdict::CannotInvade;
    else {
        v.verdict = Verdict::Inconclusive;
        v.note = "no one-sided pointwise order between g2(u1*) and h2(u2*)";
    }
    return v;
}

InvasionVerdict cor1_check(const ReactionModel& m, double c, double L0) {
    InvasionVerdict v;
    const double pi2 = std::numbers::pi * std::numbers::pi;
    const double mu1 = m.D1 * pi2 / (L0 * L0) + c * c / (4.0 * m.D1);
    const double mu2 = m.D2 * pi2 / (L0 * L0) + c * c / (4.0 * m.D2);
    v.witness("mu1_exact", mu1).witness("mu2_exact", mu2);
    if (!(m.r1 > mu1) || !(m.r2 > mu2)) {
        v.condition = "Cor1";
        v.verdict = Verdict::Inconclusive;
        v.note = "hypotheses r1 > mu1 and r2 > mu2 not satisfied; corollary not applicable";
        return v;
    }
    const double ratio_pow = std::pow(m.r2 / m.r1, 1.0 / m.n);  // (r2/r1)^(1/n)
    if (m.D1 == m.D2 || c == 0.0) {
        v.condition = c == 0.0 ? "Cor1.case1" : "Cor1.case2";
        const double lhs = m.r2 / m.r1;
        const double rhs = m.D1 == m.D2 ? 1.0 : m.D2 / m.D1;
        const double coeff = ratio_pow * m.h1_hat;
        v.witness("r2_over_r1", lhs).witness("D2_over_D1", rhs)
            .witness("ratio_pow_h1", coeff).witness("g2_hat", m.g2_hat);
        const bool ge1 = lhs >= rhs, ge2 = coeff >= m.g2_hat;
        const bool le1 = lhs <= rhs, le2 = coeff <= m.g2_hat;
        const bool strict = lhs != rhs || coeff != m.g2_hat;
        if (ge1 && ge2 && strict)
            v.verdict = Verdict::Invades;
        else if (le1 && le2 && strict)
            v.verdict = Verdict::CannotInvade;
        else {
            v.verdict = Verdict::Inconclusive;
            v.note = strict ? "inequalities not one-sided" : "no strict inequality";
        }
        return v;
    }
    // c != 0 and D1 != D2
    v.condition = "Cor1.case3";
    const double rate_lhs = m.r2 - c * c / (4.0 * m.D2);
    const double rate_rhs = (m.D2 / m.D1) * (m.r1 - c * c / (4.0 * m.D1));
    const double decay = (L0 / 2.0) * std::abs(c * (1.0 / m.D2 - 1.0 / m.D1));
    const double base = std::pow(m.D2 / m.D1, 1.0 / m.n);
    const double invade_thr = base * std::exp(-decay);
    const double noninvade_thr = base * std::exp(decay);
    const double coeff = m.g2_hat / m.h1_hat;
    v.witness("rate_lhs", rate_lhs).witness("rate_rhs", rate_rhs)
        .witness("g2_over_h1", coeff).witness("invade_threshold", invade_thr)
        .witness("noninvade_threshold", noninvade_thr);
    if (rate_lhs >= rate_rhs && coeff <= invade_thr)
        v.verdict = Verdict::Invades;
    else if (rate_lhs <= rate_rhs && coeff >= noninvade_thr)
        v.verdict = Verdict::CannotInvade;
    else {
        v.verdict = Verdict::Inconclusive;
        v.note = "neither case-3 inequality pair holds";
    }
    return v;
}

namespace {

// xi- and t-dependent part of the corollary-2 rate condition:
// P(xi,t) = -Adot_eff^2/4 + Lddot*L*xi^2/(4 L0^2) + Addot*L*xi/(2 L0)
double rate_potential(const DomainMotion& d, double xi, double t) {
    const double L = d.length()(t);
    const double ad = d.drift(t);
    return -ad * ad / 4.0 + d.length_ddot()(t) * L * xi * xi / (4.0 * d.ref_length() * d.ref_length()) +
           d.offset_ddot()(t) * L * xi / (2.0 * d.ref_length());
}

}  // namespace

InvasionVerdict cor2_check(const ReactionModel& m, const DomainMotion& d,
                           const SteadyStateResult& u1star, const Grid& g) {
    InvasionVerdict v;
    if (u1star.extinct) {
        v.condition = "Cor2";
        v.verdict = Verdict::Inconclusive;
        v.note = "u1* does not exist (r1 <= mu1); corollary not applicable";
        return v;
    }
    if (m.D1 == m.D2) {
        // Same closed-form parameter conditions as corollary 1 case 2.
        v.condition = "Cor2.case1";
        const double coeff = std::pow(m.r2 / m.r1, 1.0 / m.n) * m.h1_hat;
        v.witness("r2", m.r2).witness("r1", m.r1).witness("ratio_pow_h1", coeff)
            .witness("g2_hat", m.g2_hat);
        const bool strict = m.r2 != m.r1 || coeff != m.g2_hat;
        if (m.r2 >= m.r1 && coeff >= m.g2_hat && strict)
            v.verdict = Verdict::Invades;
        else if (m.r2 <= m.r1 && coeff <= m.g2_hat && strict)
            v.verdict = Verdict::CannotInvade;
        else {
            v.verdict = Verdict::Inconclusive;
            v.note = strict ? "inequalities not one-sided" : "no strict inequality";
        }
        return v;
    }

    v.condition = "Cor2.case2";
    const SpaceTimeField& f = u1star.field;
    const int Nt = f.steps();

    // v1 = u1* exp(E/D1); time derivative by centered differences with
    // periodic wrap, evaluated on the boundary-trimmed node range.
    const int i_lo = 1, i_hi = g.M - 2;  // xi in [2 dx, L0 - 2 dx]
    double worst_invade = -std::numeric_limits<double>::infinity();
    double worst_noninvade = -std::numeric_limits<double>::infinity();
    const double dfac = 1.0 - m.D2 / m.D1;
    const double pfac = 1.0 / m.D2 - m.D2 / (m.D1 * m.D1);
    for (int j = 0; j <= Nt; ++j) {
        const double t = j * g.dt;
        const int jp = (j + 1) % Nt;
        const int jm = (j - 1 + Nt) % Nt;
        const double Ldot_term = dfac * d.length_dot()(t) / (2.0 * d.length()(t));
        for (int i = i_lo; i <= i_hi; ++i) {
            const double xi = g.xi[static_cast<std::size_t>(i)];
            const double e1 = d.E(xi, t) / m.D1;
            const double v1 = f.at_step(j)[static_cast<std::size_t>(i)] * std::exp(e1);
            const double v1p = f.at_step(jp)[static_cast<std::size_t>(i)] *
                               std::exp(d.E(xi, (j + 1) * g.dt) / m.D1);
            const double v1m = f.at_step(jm)[static_cast<std::size_t>(i)] *
                               std::exp(d.E(xi, (j - 1) * g.dt) / m.D1);
            const double lhs = dfac * (v1p - v1m) / (2.0 * g.dt) / v1;
            const double rhs = m.r2 - (m.D2 / m.D1) * m.r1 - Ldot_term +
                               pfac * rate_potential(d, xi, t);
            worst_invade = std::max(worst_invade, lhs - rhs);
            worst_noninvade = std::max(worst_noninvade, rhs - lhs);
        }
    }
    const double dE = d.delta_E();
    const double base = std::pow(m.D2 / m.D1, 1.0 / m.n);
    const double gap = std::abs(1.0 / m.D2 - 1.0 / m.D1) * dE;
    const double invade_thr = base * std::exp(-gap);
    const double noninvade_thr = base * std::exp(gap);
    const double coeff = m.g2_hat / m.h1_hat;
    v.witness("rate_margin_invade", -worst_invade)
        .witness("rate_margin_noninvade", -worst_noninvade)
        .witness("delta_E", dE)
        .witness("g2_over_h1", coeff)
        .witness("invade_threshold", invade_thr)
        .witness("noninvade_threshold", noninvade_thr);
    if (worst_invade <= 0.0 && coeff <= invade_thr)
        v.verdict = Verdict::Invades;
    else if (worst_noninvade <= 0.0 && coeff >= noninvade_thr)
        v.verdict = Verdict::CannotInvade;
    else {
        v.verdict = Verdict::Inconclusive;
        v.note = "neither rate/coefficient inequality pair holds";
    }
    return v;
}

Example3Bounds example3_bounds(double D, const DomainMotion& d, int quad_samples) {
    const double pi2 = std::numbers::pi * std::numbers::pi;
    const double T = d.period();
    double base = 0.0, low_adv = 0.0, up_adv = 0.0;
    for (int j = 0; j < quad_samples; ++j) {
        const double t = T * j / quad_samples;
        const double L = d.length()(t);
        const double ad = d.drift(t);
        const auto [qbar, qunder] = d.Q_bounds(t);
        const double heat = D * pi2 / (L * L);
        base += heat;
        low_adv += heat + ad * ad / (4.0 * D) - qbar / (2.0 * D);
        up_adv += heat + ad * ad / (4.0 * D) + qunder / (2.0 * D);
    }
    Example3Bounds b;
    b.lower = std::max(base, low_adv) / quad_samples;
    b.upper_integral = up_adv / quad_samples;
    const double w = d.overlap_width();
    if (w > 0.0) b.upper_overlap = D * pi2 / (w * w) + d.c() * d.c() / (4.0 * D);
    return b;
}

ScenarioAnalysis analyze(const ReactionModel& m, const DomainMotion& d, const Grid& g) {
    ScenarioAnalysis a;
    a.mu1 = principal_eigenpair(m.D1, d, g).mu;
    a.mu2 = principal_eigenpair(m.D2, d, g).mu;
    a.u1star = periodic_steady_state(1, m, d, g, {.mu_hint = a.mu1});
    a.u2star = periodic_steady_state(2, m, d, g, {.mu_hint = a.mu2});
    a.beta = beta_of(m, a.u1star.field);
    a.beta_hat = m.beta_hat();
    a.muhat = mu_hat(m, d, a.u1star, g);
    a.bounds_d1 = example3_bounds(m.D1, d);
    a.bounds_d2 = example3_bounds(m.D2, d);

    const double tie_tol = 1e-9;
    if (m.r2 > a.muhat.mu + tie_tol)
        a.linearized = Verdict::Invades;
    else if (m.r2 < a.muhat.mu - tie_tol)
        a.linearized = Verdict::CannotInvade;
    else
        a.linearized = Verdict::Inconclusive;

    if (a.beta > 0.0) {
        a.verdicts.push_back(prop1_check(m, a.mu2, a.beta));
    } else {
        InvasionVerdict v;
        v.condition = "Prop1";
        v.verdict = Verdict::Inconclusive;
        v.note = "beta = 0 (u1* vanishes); proposition hypothesis fails";
        v.witness("beta", a.beta);
        a.verdicts.push_back(std::move(v));
    }

    if (!a.u2star.extinct) {
        a.verdicts.push_back(prop2_check(m, a.u1star.field, a.u2star.field));
    } else {
        InvasionVerdict v;
        v.condition = "Prop2";
        v.verdict = Verdict::Inconclusive;
        v.note = "u2* does not exist (r2 <= mu2); proposition not applicable";
        v.witness("mu2", a.mu2).witness("r2", m.r2);
        a.verdicts.push_back(std::move(v));
    }

    if (d.is_constant()) a.verdicts.push_back(cor1_check(m, d.c(), d.ref_length()));
    a.verdicts.push_back(cor2_check(m, d, a.u1star, g));

    // Bound-based version of proposition 1 with beta_hat, always applicable.
    {
        InvasionVerdict v;
        v.condition = "Example3";
        const double up = a.bounds_d2.min_upper();
        v.witness("r2", m.r2).witness("lower", a.bounds_d2.lower)
            .witness("upper_integral", a.bounds_d2.upper_integral);
        if (a.bounds_d2.upper_overlap) v.witness("upper_overlap", *a.bounds_d2.upper_overlap);
        v.witness("beta_hat", a.beta_hat);
        if (m.r2 <= a.bounds_d2.lower)
            v.verdict = Verdict::CannotInvade;
        else if (m.r2 >= a.beta_hat + up)
            v.verdict = Verdict::Invades;
        else {
            v.verdict = Verdict::Inconclusive;
            v.note = "r2 between the lower bound and beta_hat + upper bound";
        }
        a.verdicts.push_back(std::move(v));
    }
    return a;
}

}  // namespace invasion1d
