#include "invasion1d/invasion.hpp"
#include "invasion1d/report.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <numbers>

using namespace invasion1d;
using invasion1d::testing::desk_domain;
using invasion1d::testing::desk_model;
using std::numbers::pi;

TEST_SUITE_BEGIN("invasion");

TEST_CASE("mu_hat reduces to mu2 when the resident is extinct") {
    ReactionModel m = desk_model();
    m.r1 = 1.0;  // extinct on the unit interval
    DomainMotion d(0.0, PeriodicFunction::constant(1.0), PeriodicFunction::constant(0.0));
    Grid g(60, 300, 1.0, 1.0);
    SteadyStateResult u1s = periodic_steady_state(1, m, d, g);
    REQUIRE(u1s.extinct);
    const double mu2 = principal_eigenpair(m.D2, d, g).mu;
    EigenResult mh = mu_hat(m, d, u1s, g);
    CHECK(std::abs(mh.mu - mu2) <= 1e-12);
}

TEST_CASE("shifting g2 by a constant shifts mu_hat by the same constant") {
    ReactionModel m = desk_model();
    DomainMotion d = desk_domain();
    Grid g(80, 400, d.ref_length(), d.period());
    SteadyStateResult u1s = periodic_steady_state(1, m, d, g);
    REQUIRE(!u1s.extinct);
    const double base = mu_hat(m, d, u1s, g).mu;
    const double beta0 = 0.7;
    PotentialFn shifted = u1s.potential([&](double u) { return m.g2_of(u) + beta0; });
    const double lifted = principal_eigenpair(m.D2, d, g, shifted).mu;
    CHECK(std::abs(lifted - base - beta0) <= 1e-9);
}

TEST_CASE("desk scenario satisfies the strict eigenvalue chain") {
    ReactionModel m = desk_model();
    DomainMotion d = desk_domain();
    Grid g(100, 600, d.ref_length(), d.period());
    SteadyStateResult u1s = periodic_steady_state(1, m, d, g);
    const double mu2 = principal_eigenpair(m.D2, d, g).mu;
    const double beta = beta_of(m, u1s.field);
    const double mh = mu_hat(m, d, u1s, g).mu;
    CHECK(mu2 < mh);
    CHECK(mh < mu2 + beta);
    CHECK(beta <= m.beta_hat() + 1e-12);
}

TEST_CASE("proposition 1 verdicts") {
    ReactionModel m = desk_model();
    m.r2 = 3.0;
    InvasionVerdict inv = prop1_check(m, 2.0, 1.0);
    CHECK(inv.verdict == Verdict::Invades);  // r2 == mu2 + beta, inclusive
    bool flagged = false;
    for (auto& [k, v] : inv.witnesses) flagged |= (k == "boundary_case" && v == 1.0);
    CHECK(flagged);

    m.r2 = 2.0;
    CHECK(prop1_check(m, 2.0, 1.0).verdict == Verdict::CannotInvade);
    m.r2 = 2.5;
    CHECK(prop1_check(m, 2.0, 1.0).verdict == Verdict::Inconclusive);
    CHECK_THROWS_AS(prop1_check(m, 2.0, 0.0), std::invalid_argument);
}

TEST_CASE("proposition 2 verdicts") {
    ReactionModel m = desk_model();
    DomainMotion d = desk_domain();
    Grid g(60, 300, d.ref_length(), d.period());
    SteadyStateResult u2s = periodic_steady_state(2, m, d, g);
    REQUIRE(!u2s.extinct);

    // zero resident: 0 below h2(u2*) everywhere, strictly inside
    SpaceTimeField zero = SpaceTimeField::zero(g);
    CHECK(prop2_check(m, zero, u2s.field).verdict == Verdict::Invades);

    // identical composed fields: no strict inequality anywhere
    ReactionModel same = m;
    same.g2_hat = same.h2_hat;
    CHECK(prop2_check(same, u2s.field, u2s.field).verdict == Verdict::Inconclusive);

    // small g2_hat against h2 on the same state: strict pointwise order
    ReactionModel weak = m;
    weak.g2_hat = 0.1;
    SteadyStateResult u1s = periodic_steady_state(1, weak, d, g);
    InvasionVerdict v = prop2_check(weak, u1s.field, u2s.field);
    CHECK(v.verdict == Verdict::Invades);
    const double mh = mu_hat(weak, d, u1s, g).mu;
    CHECK(mh < weak.r2);  // cross-check with the linearization
}

TEST_CASE("proposition 2 self-consistency: (r2, u2*) is the eigenpair for h2(u2*)") {
    ReactionModel m = desk_model();
    for (bool periodic_domain : {false, true}) {
        DomainMotion d = periodic_domain
                             ? DomainMotion(0.0, PeriodicFunction(1.6, {}, {0.1}, 1.0),
                                            PeriodicFunction::constant(0.0))
                             : desk_domain();
        Grid g(200, 2000, d.ref_length(), d.period());
        SteadyStateResult u2s = periodic_steady_state(2, m, d, g);
        REQUIRE(!u2s.extinct);
        EigenResult er = principal_eigenpair(
            m.D2, d, g, u2s.potential([&](double u) { return m.h2_of(u); }));
        CHECK(std::abs(er.mu - m.r2) <= 1e-4);
        const Profile& u0 = u2s.field.at_step(0);
        const double scale = sup_norm(u0);
        double worst = 0.0;
        for (int i = 0; i < g.M; ++i)
            worst = std::max(worst, std::abs(u0[i] / scale - er.phi.at_step(0)[i]));
        CHECK(worst <= 1e-4);
    }
}

TEST_CASE("corollary 1 verdicts") {
    // boundary of case 1: all equalities -> inconclusive
    ReactionModel m = desk_model();
    m.g2_hat = 1.0;
    CHECK(cor1_check(m, 0.0, 2.0).verdict == Verdict::Inconclusive);

    // case 1 invade: r2/r1 = 2 >= 1, (r2/r1) h1 = 2 > 1 = g2
    ReactionModel m2 = desk_model();
    m2.r2 = 12.0;
    m2.g2_hat = 1.0;
    InvasionVerdict v2 = cor1_check(m2, 0.0, 2.0);
    CHECK(v2.condition == "Cor1.case1");
    CHECK(v2.verdict == Verdict::Invades);

    // case 3 hand-evaluated thresholds: c=1, D1=1, D2=2, L0=1, n=1
    ReactionModel m3 = desk_model();
    m3.D1 = 1.0;
    m3.D2 = 2.0;
    m3.r1 = 11.0;
    m3.r2 = 22.0;
    m3.g2_hat = 1.0;
    InvasionVerdict v3 = cor1_check(m3, 1.0, 1.0);
    CHECK(v3.condition == "Cor1.case3");
    double thr = 0.0;
    for (auto& [k, val] : v3.witnesses)
        if (k == "invade_threshold") thr = val;
    CHECK(thr == doctest::Approx(2.0 * std::exp(-0.25)).epsilon(1e-12));
    CHECK(v3.verdict == Verdict::Invades);

    // hypotheses violated -> inconclusive with a diagnostic
    ReactionModel weak = desk_model();
    weak.r1 = 1.0;
    InvasionVerdict vw = cor1_check(weak, 0.0, 1.0);
    CHECK(vw.verdict == Verdict::Inconclusive);
    CHECK(vw.note.find("hypotheses") != std::string::npos);
}

TEST_CASE("corollary 2 reduces to corollary 1 on constant domains") {
    // On a constant translating interval the numeric corollary-2 path
    // reproduces the case-3 closed forms exactly.
    auto check_agreement = [](ReactionModel m, double c) {
        DomainMotion d(c, PeriodicFunction::constant(2.0), PeriodicFunction::constant(0.0));
        Grid g(80, 400, d.ref_length(), d.period());
        SteadyStateResult u1s = periodic_steady_state(1, m, d, g);
        REQUIRE(!u1s.extinct);
        InvasionVerdict v_cor2 = cor2_check(m, d, u1s, g);
        InvasionVerdict v_cor1 = cor1_check(m, c, d.ref_length());
        CHECK(v_cor2.verdict == v_cor1.verdict);
        return v_cor2.verdict;
    };

    ReactionModel mi = desk_model();  // D1 = D2: closed-form case on both sides
    mi.r2 = 9.0;
    mi.g2_hat = 0.3;
    CHECK(check_agreement(mi, 0.0) == Verdict::Invades);

    ReactionModel mn = desk_model();
    mn.r2 = 4.0;  // r2 < r1, g2 > (r2/r1) h1
    mn.g2_hat = 0.9;
    CHECK(check_agreement(mn, 0.0) == Verdict::CannotInvade);

    ReactionModel m3 = desk_model();  // D1 != D2, c != 0: case 3 on both sides
    m3.D2 = 1.3;
    m3.r1 = 6.0;
    m3.r2 = 9.0;
    m3.g2_hat = 0.3;
    CHECK(check_agreement(m3, 0.5) == Verdict::Invades);

    ReactionModel m4 = m3;
    m4.r2 = 6.5;  // rate reversed: 6.5 - c^2/4D2 < 1.3*(6 - c^2/4)
    m4.g2_hat = 2.0;  // g2/h1 = 2 > 1.3 * exp(+|...| dE)
    CHECK(check_agreement(m4, 0.5) == Verdict::CannotInvade);
}

TEST_CASE("corollary 2 numeric case on a breathing interval") {
    ReactionModel m = desk_model();
    m.r1 = 5.0;
    m.r2 = 9.0;
    m.g2_hat = 0.1;
    m.D2 = 1.5;
    DomainMotion d(0.0, PeriodicFunction(2.0, {}, {0.05}, 1.0), PeriodicFunction::constant(0.0));
    Grid g(100, 800, d.ref_length(), d.period());
    SteadyStateResult u1s = periodic_steady_state(1, m, d, g);
    REQUIRE(!u1s.extinct);
    InvasionVerdict v = cor2_check(m, d, u1s, g);
    CHECK(v.condition == "Cor2.case2");
    CHECK(v.verdict == Verdict::Invades);
    const double mh = mu_hat(m, d, u1s, g).mu;
    CHECK(m.r2 > mh);  // verdict consistent with the linearization sign
}

TEST_CASE("example 3 bounds collapse to the exact value on constant domains") {
    DomainMotion still(0.0, PeriodicFunction::constant(1.0), PeriodicFunction::constant(0.0));
    Example3Bounds b = example3_bounds(1.0, still);
    CHECK(b.lower == doctest::Approx(pi * pi).epsilon(1e-12));
    CHECK(b.upper_integral == doctest::Approx(pi * pi).epsilon(1e-12));
    REQUIRE(b.upper_overlap.has_value());
    CHECK(*b.upper_overlap == doctest::Approx(pi * pi).epsilon(1e-9));

    DomainMotion moving(2.0, PeriodicFunction::constant(1.0), PeriodicFunction::constant(0.0));
    Example3Bounds bm = example3_bounds(1.0, moving);
    CHECK(bm.lower == doctest::Approx(pi * pi + 1.0).epsilon(1e-12));
    CHECK(bm.upper_integral == doctest::Approx(pi * pi + 1.0).epsilon(1e-12));
    CHECK(*bm.upper_overlap == doctest::Approx(pi * pi + 1.0).epsilon(1e-9));
}

TEST_CASE("eigenvalue sandwich on breathing and drifting intervals") {
    struct Case {
        PeriodicFunction L, A;
        double c;
    };
    std::vector<Case> cases;
    cases.push_back({PeriodicFunction(1.0, {}, {0.1}, 1.0), PeriodicFunction::constant(0.0), 0.0});
    cases.push_back({PeriodicFunction(1.0, {}, {0.1}, 1.0),
                     PeriodicFunction(0.0, {}, {0.05}, 1.0), 0.0});
    cases.push_back({PeriodicFunction(1.0, {}, {0.08}, 1.0),
                     PeriodicFunction(0.0, {}, {0.04}, 1.0), 0.5});  // drift included
    for (const auto& cse : cases) {
        DomainMotion d(cse.c, cse.L, cse.A);
        Grid g(150, 1200, d.ref_length(), d.period());
        const double mu = principal_eigenpair(1.0, d, g).mu;
        Example3Bounds b = example3_bounds(1.0, d);
        CHECK(b.lower <= mu + 1e-6);
        CHECK(mu <= b.min_upper() + 1e-6);
    }
}

TEST_CASE("slow-modulation limit of the invasion bound") {
    // L(t) = l(w t / 2 pi) with l 1-periodic: as w -> 0 the integral upper
    // bound decreases monotonically to beta_hat-free limit <D pi^2 / l^2>,
    // with excess proportional to w^2.
    const double D = 1.0;
    const double limit = D * pi * pi * std::pow(1.0 - 0.01, -1.5);
    double prev_excess = -1.0;
    std::vector<double> excesses;
    for (double w : {1.0, 0.5, 0.25}) {
        const double T = 2.0 * pi / w;
        DomainMotion d(0.0, PeriodicFunction(1.0, {}, {0.1}, T), PeriodicFunction::constant(0.0, T));
        Example3Bounds b = example3_bounds(D, d, 4096);
        const double excess = b.upper_integral - limit;
        CHECK(excess > 0.0);
        if (prev_excess > 0.0) CHECK(excess < prev_excess);
        excesses.push_back(excess);
        prev_excess = excess;
    }
    CHECK(excesses[0] / excesses[1] == doctest::Approx(4.0).epsilon(1e-3));
    CHECK(excesses[1] / excesses[2] == doctest::Approx(4.0).epsilon(1e-3));
}

TEST_CASE("full analysis on the desk scenario is sound and deterministic") {
    ReactionModel m = desk_model();
    DomainMotion d = desk_domain();
    Grid g(100, 600, d.ref_length(), d.period());
    ScenarioAnalysis a = analyze(m, d, g);
    CHECK(a.linearized == Verdict::Invades);
    CHECK(a.mu2 < a.muhat.mu);
    CHECK(a.muhat.mu < a.mu2 + a.beta);
    bool saw_cor1 = false;
    for (const auto& v : a.verdicts) {
        CHECK(a.agrees(v));  // soundness against the linearization
        saw_cor1 |= v.condition.rfind("Cor1", 0) == 0;
    }
    CHECK(saw_cor1);

    Scenario s{d, m, GridSpec{g.M, g.Nt}, RunParams{}, {}};
    const std::string once = analysis_to_json(s, a).dump();
    ScenarioAnalysis a2 = analyze(m, d, g);
    const std::string twice = analysis_to_json(s, a2).dump();
    CHECK(once == twice);
}

TEST_SUITE_END();
