#include "invasion1d/scenario.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace invasion1d {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& msg) { throw ConfigError(msg); }

void reject_unknown_keys(const json& obj, const std::string& section,
                         const std::set<std::string>& known) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (!known.count(it.key()))
            fail(section + ": unknown key '" + it.key() + "'");
    }
}

double require_number(const json& obj, const std::string& section, const std::string& key) {
    if (!obj.contains(key)) fail(section + "." + key + " is required");
    const json& v = obj.at(key);
    if (!v.is_number()) fail(section + "." + key + " must be a number");
    return v.get<double>();
}

double number_or(const json& obj, const std::string& section, const std::string& key,
                 double fallback) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_number()) fail(section + "." + key + " must be a number");
    return v.get<double>();
}

int integer_or(const json& obj, const std::string& section, const std::string& key, int fallback) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_number_integer()) fail(section + "." + key + " must be an integer");
    return v.get<int>();
}

std::vector<double> number_list(const json& v, const std::string& where) {
    if (!v.is_array()) fail(where + " must be an array of numbers");
    std::vector<double> out;
    for (const auto& x : v) {
        if (!x.is_number()) fail(where + " must be an array of numbers");
        out.push_back(x.get<double>());
    }
    return out;
}

// {mean, cos: [...], sin: [...], period} or a bare number for a constant.
PeriodicFunction parse_periodic(const json& v, const std::string& where, double T) {
    if (v.is_number()) return PeriodicFunction::constant(v.get<double>(), T);
    if (!v.is_object()) fail(where + " must be a number or {mean, cos, sin, period}");
    reject_unknown_keys(v, where, {"mean", "cos", "sin", "period"});
    const double mean = number_or(v, where, "mean", 0.0);
    std::vector<double> cs, sn;
    if (v.contains("cos")) cs = number_list(v.at("cos"), where + ".cos");
    if (v.contains("sin")) sn = number_list(v.at("sin"), where + ".sin");
    if (v.contains("period")) {
        const double p = v.at("period").get<double>();
        if (p != T) {
            std::ostringstream os;
            os << where << ".period (" << p << ") must equal domain.T (" << T << ")";
            fail(os.str());
        }
    }
    return PeriodicFunction(mean, std::move(cs), std::move(sn), T);
}

}  // namespace

double Scenario::seed_amplitude() const {
    return run.seed_amplitude ? *run.seed_amplitude : 1e-4 * reaction.K2();
}

double Scenario::growth_margin() const {
    return run.growth_margin ? *run.growth_margin : 0.02 / domain.period();
}

Scenario parse_config(const std::string& json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        fail(std::string("config is not valid JSON: ") + e.what());
    }
    if (!root.is_object()) fail("config root must be an object");
    reject_unknown_keys(root, "config", {"domain", "reaction", "grid", "run", "sweep"});

    if (!root.contains("domain")) fail("config: section 'domain' is required");
    if (!root.contains("reaction")) fail("config: section 'reaction' is required");

    // -- domain --
    const json& dj = root.at("domain");
    if (!dj.is_object()) fail("domain must be an object");
    reject_unknown_keys(dj, "domain", {"c", "T", "L", "A", "L0"});
    const double T = require_number(dj, "domain", "T");
    if (!(T > 0.0)) fail("domain.T must be > 0");
    const double c = number_or(dj, "domain", "c", 0.0);
    if (!dj.contains("L")) fail("domain.L is required");
    PeriodicFunction L = parse_periodic(dj.at("L"), "domain.L", T);
    PeriodicFunction A = dj.contains("A") ? parse_periodic(dj.at("A"), "domain.A", T)
                                          : PeriodicFunction::constant(0.0, T);
    const double L0 = number_or(dj, "domain", "L0", 0.0);
    if (dj.contains("L0") && !(L0 > 0.0)) fail("domain.L0 must be > 0");

    std::optional<DomainMotion> domain;
    try {
        domain.emplace(c, std::move(L), std::move(A), L0);
    } catch (const std::invalid_argument& e) {
        fail(std::string("domain.") + e.what());
    }

    // -- reaction --
    const json& rj = root.at("reaction");
    if (!rj.is_object()) fail("reaction must be an object");
    reject_unknown_keys(rj, "reaction",
                        {"r1", "r2", "n", "h1_hat", "h2_hat", "g2_hat", "g1_hat", "D1", "D2"});
    ReactionModel m;
    m.r1 = require_number(rj, "reaction", "r1");
    m.r2 = require_number(rj, "reaction", "r2");
    m.n = number_or(rj, "reaction", "n", 1.0);
    m.h1_hat = require_number(rj, "reaction", "h1_hat");
    m.h2_hat = require_number(rj, "reaction", "h2_hat");
    m.g2_hat = require_number(rj, "reaction", "g2_hat");
    m.g1_hat = number_or(rj, "reaction", "g1_hat", 0.0);
    m.D1 = require_number(rj, "reaction", "D1");
    m.D2 = require_number(rj, "reaction", "D2");
    try {
        m.validate();
    } catch (const std::invalid_argument& e) {
        fail(std::string("reaction.") + e.what());
    }

    // -- grid --
    GridSpec gs;
    if (root.contains("grid")) {
        const json& gj = root.at("grid");
        if (!gj.is_object()) fail("grid must be an object");
        reject_unknown_keys(gj, "grid", {"M", "Nt"});
        gs.M = integer_or(gj, "grid", "M", gs.M);
        gs.Nt = integer_or(gj, "grid", "Nt", gs.Nt);
    }
    if (gs.M < 16) fail("grid.M must be >= 16");
    if (gs.Nt < 8) fail("grid.Nt must be >= 8");

    // -- run --
    RunParams rp;
    if (root.contains("run")) {
        const json& uj = root.at("run");
        if (!uj.is_object()) fail("run must be an object");
        reject_unknown_keys(uj, "run", {"periods", "seed_amplitude", "growth_margin"});
        rp.periods = integer_or(uj, "run", "periods", rp.periods);
        if (rp.periods < 1) fail("run.periods must be >= 1");
        if (uj.contains("seed_amplitude")) {
            rp.seed_amplitude = require_number(uj, "run", "seed_amplitude");
            if (!(*rp.seed_amplitude > 0.0)) fail("run.seed_amplitude must be > 0");
        }
        if (uj.contains("growth_margin")) {
            rp.growth_margin = require_number(uj, "run", "growth_margin");
            if (!(*rp.growth_margin > 0.0)) fail("run.growth_margin must be > 0");
        }
    }

    // -- sweep --
    std::vector<SweepAxis> sweep;
    if (root.contains("sweep")) {
        const json& sj = root.at("sweep");
        if (!sj.is_object()) fail("sweep must be an object");
        reject_unknown_keys(sj, "sweep", {"parameters"});
        if (!sj.contains("parameters")) fail("sweep.parameters is required");
        const json& pj = sj.at("parameters");
        if (!pj.is_object()) fail("sweep.parameters must be an object");
        for (auto it = pj.begin(); it != pj.end(); ++it) {
            SweepAxis axis;
            axis.path = it.key();
            axis.values = number_list(it.value(), "sweep.parameters." + it.key());
            if (axis.values.empty()) fail("sweep.parameters." + it.key() + " must be non-empty");
            sweep.push_back(std::move(axis));
        }
    }

    Scenario s{std::move(*domain), m, gs, rp, std::move(sweep)};
    // Validate sweep paths up front so a bad path fails before any run.
    for (const auto& axis : s.sweep) (void)with_override(s, axis.path, axis.values.front());
    return s;
}

Scenario load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

Scenario with_override(const Scenario& s, const std::string& path, double value) {
    Scenario out = s;
    if (path == "domain.c") {
        out.domain = DomainMotion(value, s.domain.length(), s.domain.offset(),
                                  s.domain.ref_length());
        return out;
    }
    ReactionModel m = s.reaction;
    if (path == "reaction.r1") m.r1 = value;
    else if (path == "reaction.r2") m.r2 = value;
    else if (path == "reaction.n") m.n = value;
    else if (path == "reaction.h1_hat") m.h1_hat = value;
    else if (path == "reaction.h2_hat") m.h2_hat = value;
    else if (path == "reaction.g2_hat") m.g2_hat = value;
    else if (path == "reaction.g1_hat") m.g1_hat = value;
    else if (path == "reaction.D1") m.D1 = value;
    else if (path == "reaction.D2") m.D2 = value;
    else fail("sweep: unsupported parameter path '" + path + "'");
    try {
        m.validate();
    } catch (const std::invalid_argument& e) {
        fail("sweep override " + path + ": " + e.what());
    }
    out.reaction = m;
    return out;
}

namespace {
JsonValue periodic_to_json(const PeriodicFunction& f) {
    JsonValue v = JsonValue::object();
    v.set("mean", f.mean);
    JsonValue cs = JsonValue::array();
    for (double a : f.cos_coeffs) cs.push(a);
    JsonValue sn = JsonValue::array();
    for (double b : f.sin_coeffs) sn.push(b);
    v.set("cos", std::move(cs));
    v.set("sin", std::move(sn));
    v.set("period", f.period);
    return v;
}
}  // namespace

JsonValue scenario_to_json(const Scenario& s) {
    JsonValue root = JsonValue::object();
    JsonValue dj = JsonValue::object();
    dj.set("c", s.domain.c());
    dj.set("T", s.domain.period());
    dj.set("L", periodic_to_json(s.domain.length()));
    dj.set("A", periodic_to_json(s.domain.offset()));
    dj.set("L0", s.domain.ref_length());
    root.set("domain", std::move(dj));

    JsonValue rj = JsonValue::object();
    rj.set("r1", s.reaction.r1).set("r2", s.reaction.r2).set("n", s.reaction.n);
    rj.set("h1_hat", s.reaction.h1_hat).set("h2_hat", s.reaction.h2_hat);
    rj.set("g2_hat", s.reaction.g2_hat).set("g1_hat", s.reaction.g1_hat);
    rj.set("D1", s.reaction.D1).set("D2", s.reaction.D2);
    root.set("reaction", std::move(rj));

    JsonValue gj = JsonValue::object();
    gj.set("M", s.grid.M).set("Nt", s.grid.Nt);
    root.set("grid", std::move(gj));

    JsonValue uj = JsonValue::object();
    uj.set("periods", s.run.periods);
    uj.set("seed_amplitude", s.seed_amplitude());
    uj.set("growth_margin", s.growth_margin());
    root.set("run", std::move(uj));
    return root;
}

}  // namespace invasion1d
