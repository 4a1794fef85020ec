#pragma once

#include "invasion1d/steady.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace invasion1d {

enum class Verdict { Invades, CannotInvade, Inconclusive };

const char* to_string(Verdict v);

/// Outcome of one analytic criterion, with the named scalars that entered
/// the decision so every verdict can be re-derived from the report.
struct InvasionVerdict {
    std::string condition;  // e.g. "Prop1", "Cor1.case3", "Cor2.case2"
    Verdict verdict = Verdict::Inconclusive;
    std::vector<std::pair<std::string, double>> witnesses;
    std::string note;

    InvasionVerdict& witness(std::string key, double value) {
        witnesses.emplace_back(std::move(key), value);
        return *this;
    }
};

/// Principal eigenvalue of the invader's linearization about (u1*, 0):
/// potential q = g2(u1*(xi,t)) interpolated from the steady-state snapshots.
EigenResult mu_hat(const ReactionModel& m, const DomainMotion& d, const SteadyStateResult& u1star,
                   const Grid& g);

/// beta = sup over the stored period of g2(u1*); bounded by beta_hat.
double beta_of(const ReactionModel& m, const SpaceTimeField& u1star);

/// Invades when r2 >= mu2 + beta, cannot invade when r2 <= mu2; requires
/// beta > 0.  The inclusive boundary r2 == mu2 + beta is flagged in the
/// witnesses.
InvasionVerdict prop1_check(const ReactionModel& m, double mu2, double beta);

/// Pointwise comparison of g2(u1*) against h2(u2*) over all snapshots with
/// tolerance tau: <= everywhere and < somewhere by more than tau means the
/// invader grows; the reversed order means it cannot.
InvasionVerdict prop2_check(const ReactionModel& m, const SpaceTimeField& u1star,
                            const SpaceTimeField& u2star, double tau = 1e-9);

/// Closed-form conditions for the constant interval translating at speed c.
/// Hypotheses r_i > D_i pi^2/L0^2 + c^2/(4 D_i) are checked first.
InvasionVerdict cor1_check(const ReactionModel& m, double c, double L0);

/// Periodic-interval conditions: the D1 == D2 case is closed-form; otherwise
/// the rate inequality is evaluated on v1 = u1* exp(E/D1) with a centered
/// time derivative, on a grid trimmed two cells from each boundary, together
/// with the Delta-E coefficient inequality.
InvasionVerdict cor2_check(const ReactionModel& m, const DomainMotion& d,
                           const SteadyStateResult& u1star, const Grid& g);

/// Eigenvalue bounds for the periodic interval (effective drift c + A'):
///   lower        = max( <D pi^2/L^2>, <D pi^2/L^2 + Adot^2/4D - Qbar/2D> )
///   upper_integral = <D pi^2/L^2 + Adot^2/4D + Qunder/2D>
///   upper_overlap  = D pi^2/w^2 + c^2/4D when the overlap width w > 0.
struct Example3Bounds {
    double lower = 0.0;
    double upper_integral = 0.0;
    std::optional<double> upper_overlap;

    double min_upper() const {
        return upper_overlap ? std::min(upper_integral, *upper_overlap) : upper_integral;
    }
};

Example3Bounds example3_bounds(double D, const DomainMotion& d, int quad_samples = 1024);

/// Everything the `check` report needs: eigenvalues, steady states, every
/// applicable analytic verdict, and the definitive linearization criterion
/// sign(r2 - mu_hat).
struct ScenarioAnalysis {
    double mu1 = 0.0, mu2 = 0.0;
    SteadyStateResult u1star, u2star;
    double beta = 0.0, beta_hat = 0.0;
    EigenResult muhat;
    Example3Bounds bounds_d1, bounds_d2;
    std::vector<InvasionVerdict> verdicts;
    Verdict linearized = Verdict::Inconclusive;

    bool agrees(const InvasionVerdict& v) const {
        return v.verdict == Verdict::Inconclusive || v.verdict == linearized;
    }
};

ScenarioAnalysis analyze(const ReactionModel& m, const DomainMotion& d, const Grid& g);

}  // namespace invasion1d
