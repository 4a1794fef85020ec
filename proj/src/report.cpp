#include "invasion1d/report.hpp"

#include <fstream>
#include <stdexcept>

namespace invasion1d {

JsonValue verdict_to_json(const InvasionVerdict& v, const ScenarioAnalysis& a) {
    JsonValue j = JsonValue::object();
    j.set("condition", v.condition);
    j.set("verdict", to_string(v.verdict));
    JsonValue w = JsonValue::object();
    for (const auto& [k, x] : v.witnesses) w.set(k, x);
    j.set("witnesses", std::move(w));
    if (!v.note.empty()) j.set("note", v.note);
    if (v.verdict == Verdict::Inconclusive)
        j.set("agrees_with_linearization", JsonValue());
    else
        j.set("agrees_with_linearization", a.agrees(v));
    return j;
}

JsonValue bounds_to_json(const Example3Bounds& b) {
    JsonValue j = JsonValue::object();
    j.set("lower", b.lower);
    j.set("upper_integral", b.upper_integral);
    j.set("upper_overlap", b.upper_overlap ? JsonValue(*b.upper_overlap) : JsonValue());
    return j;
}

JsonValue eigen_to_json(const EigenResult& e) {
    JsonValue j = JsonValue::object();
    j.set("mu", e.mu);
    j.set("iterations", e.iterations);
    j.set("residual", e.residual);
    j.set("period_defect", e.period_defect);
    return j;
}

JsonValue analysis_to_json(const Scenario& s, const ScenarioAnalysis& a) {
    JsonValue j = JsonValue::object();
    j.set("config", scenario_to_json(s));
    j.set("mu1", a.mu1);
    j.set("mu2", a.mu2);
    j.set("mu_hat", a.muhat.mu);
    j.set("beta", a.beta);
    j.set("beta_hat", a.beta_hat);
    j.set("r2", s.reaction.r2);
    j.set("u1star_extinct", a.u1star.extinct);
    j.set("u2star_extinct", a.u2star.extinct);
    j.set("bounds_D1", bounds_to_json(a.bounds_d1));
    j.set("bounds_D2", bounds_to_json(a.bounds_d2));
    j.set("linearized", to_string(a.linearized));
    JsonValue vs = JsonValue::array();
    for (const auto& v : a.verdicts) vs.push(verdict_to_json(v, a));
    j.set("verdicts", std::move(vs));
    return j;
}

void write_field_csv(const std::string& path, const SpaceTimeField& f, const Grid& g) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << "t,xi,value\n";
    for (int j = 0; j <= f.steps(); ++j) {
        const double t = j * f.dt;
        out << JsonValue::format_double(t) << ",0,0\n";
        for (int i = 0; i < g.M; ++i) {
            out << JsonValue::format_double(t) << ','
                << JsonValue::format_double(g.xi[static_cast<std::size_t>(i)]) << ','
                << JsonValue::format_double(f.at_step(j)[static_cast<std::size_t>(i)]) << '\n';
        }
        out << JsonValue::format_double(t) << ',' << JsonValue::format_double(g.L0) << ",0\n";
    }
}

void write_trajectory_csv(const std::string& path, const Trajectory& t) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << "period,u2_norm,u1_dev\n";
    for (std::size_t n = 0; n < t.u2_norm.size(); ++n) {
        out << n << ',' << JsonValue::format_double(t.u2_norm[n]) << ','
            << JsonValue::format_double(t.u1_dev[n]) << '\n';
    }
}

}  // namespace invasion1d
