// Command-line driver: scenario configuration in, deterministic JSON/CSV out.
//
// Subcommands:
//   eigen     principal periodic eigenvalue of one species' linear part
//   steady    positive periodic steady state of one species
//   check     every analytic invasibility criterion plus the linearization
//   simulate  coupled two-species run with empirical classification
//   sweep     cartesian parameter sweep, one JSON row per scenario

#include "invasion1d/invasion.hpp"
#include "invasion1d/report.hpp"
#include "invasion1d/scenario.hpp"
#include "invasion1d/simulate.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <filesystem>
#include <future>
#include <iostream>
#include <thread>

using namespace invasion1d;

namespace {

struct CommonOpts {
    std::string config_path;
    std::string out_dir;
    int grid_M = 0;
    int grid_Nt = 0;
    int periods = 0;
    double seed_amplitude = 0.0;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--config", o.config_path, "scenario configuration file (JSON)")
        ->required();
    cmd->add_option("--out", o.out_dir, "directory for CSV artifacts");
    cmd->add_option("--grid-M", o.grid_M, "override grid.M");
    cmd->add_option("--grid-Nt", o.grid_Nt, "override grid.Nt");
    cmd->add_option("--periods", o.periods, "override run.periods");
    cmd->add_option("--seed-amplitude", o.seed_amplitude, "override run.seed_amplitude");
}

Scenario load(const CommonOpts& o) {
    Scenario s = load_config(o.config_path);
    if (o.grid_M > 0) s.grid.M = o.grid_M;
    if (o.grid_Nt > 0) s.grid.Nt = o.grid_Nt;
    if (o.periods > 0) s.run.periods = o.periods;
    if (o.seed_amplitude > 0.0) s.run.seed_amplitude = o.seed_amplitude;
    if (s.grid.M < 16) throw ConfigError("grid.M must be >= 16");
    if (s.grid.Nt < 8) throw ConfigError("grid.Nt must be >= 8");
    return s;
}

Grid make_grid(const Scenario& s) {
    return Grid(s.grid.M, s.grid.Nt, s.domain.ref_length(), s.domain.period());
}

std::filesystem::path out_file(const CommonOpts& o, const std::string& name) {
    std::filesystem::create_directories(o.out_dir);
    return std::filesystem::path(o.out_dir) / name;
}

int run_eigen(const CommonOpts& o, int species, bool dump_phi) {
    Scenario s = load(o);
    Grid g = make_grid(s);
    const double D = species == 1 ? s.reaction.D1 : s.reaction.D2;
    EigenResult r = principal_eigenpair(D, s.domain, g);
    JsonValue j = JsonValue::object();
    j.set("config", scenario_to_json(s));
    j.set("species", species);
    j.set("mu", r.mu);
    j.set("iterations", r.iterations);
    j.set("residual", r.residual);
    j.set("period_defect", r.period_defect);
    if (dump_phi && !o.out_dir.empty()) {
        const auto path = out_file(o, "phi.csv");
        write_field_csv(path.string(), r.phi, g);
        j.set("phi_csv", path.string());
    }
    std::cout << j.dump() << "\n";
    return 0;
}

int run_steady(const CommonOpts& o, int species) {
    Scenario s = load(o);
    Grid g = make_grid(s);
    SteadyStateResult r = periodic_steady_state(species, s.reaction, s.domain, g);
    JsonValue j = JsonValue::object();
    j.set("config", scenario_to_json(s));
    j.set("species", species);
    j.set("extinct", r.extinct);
    j.set("mu", r.mu);
    j.set("periods", r.periods);
    j.set("final_delta", r.deltas.empty() ? 0.0 : r.deltas.back());
    j.set("max_value", r.field.max_value());
    if (!o.out_dir.empty()) {
        const auto path = out_file(o, species == 1 ? "u1star.csv" : "u2star.csv");
        write_field_csv(path.string(), r.field, g);
        j.set("field_csv", path.string());
    }
    std::cout << j.dump() << "\n";
    return 0;
}

int run_check(const CommonOpts& o) {
    Scenario s = load(o);
    Grid g = make_grid(s);
    ScenarioAnalysis a = analyze(s.reaction, s.domain, g);
    JsonValue j = analysis_to_json(s, a);
    if (!o.out_dir.empty()) {
        write_field_csv(out_file(o, "u1star.csv").string(), a.u1star.field, g);
        write_field_csv(out_file(o, "u2star.csv").string(), a.u2star.field, g);
        write_field_csv(out_file(o, "phi_hat.csv").string(), a.muhat.phi, g);
    }
    std::cout << j.dump() << "\n";
    return 0;
}

int run_simulate(const CommonOpts& o) {
    Scenario s = load(o);
    Grid g = make_grid(s);
    SteadyStateResult u1s = periodic_steady_state(1, s.reaction, s.domain, g);
    Trajectory t = coupled_run(s.reaction, s.domain, g, u1s,
                               {.seed_amplitude = s.seed_amplitude(), .horizon = s.run.periods});
    ClassifyResult c = classify_invasion(t, s.growth_margin());
    JsonValue j = JsonValue::object();
    j.set("config", scenario_to_json(s));
    j.set("classification", to_string(c.cls));
    j.set("slope_per_period", c.slope_per_period);
    j.set("window_points", c.window_points);
    j.set("fit_points", c.fit_points);
    j.set("periods_recorded", static_cast<int>(t.u2_norm.size()) - 1);
    j.set("seed_amplitude", t.seed_amplitude);
    if (!o.out_dir.empty()) {
        const auto path = out_file(o, "trajectory.csv");
        write_trajectory_csv(path.string(), t);
        j.set("trajectory_csv", path.string());
    }
    std::cout << j.dump() << "\n";
    return 0;
}

JsonValue sweep_row(int index, const Scenario& s,
                    const std::vector<std::pair<std::string, double>>& params) {
    Grid g = make_grid(s);
    ScenarioAnalysis a = analyze(s.reaction, s.domain, g);
    Trajectory t = coupled_run(s.reaction, s.domain, g, a.u1star,
                               {.seed_amplitude = s.seed_amplitude(), .horizon = s.run.periods});
    ClassifyResult c = classify_invasion(t, s.growth_margin());

    JsonValue j = JsonValue::object();
    j.set("index", index);
    JsonValue pj = JsonValue::object();
    for (const auto& [k, v] : params) pj.set(k, v);
    j.set("parameters", std::move(pj));
    j.set("mu1", a.mu1);
    j.set("mu2", a.mu2);
    j.set("mu_hat", a.muhat.mu);
    j.set("beta", a.beta);
    j.set("r2", s.reaction.r2);
    JsonValue vj = JsonValue::object();
    for (const auto& v : a.verdicts) vj.set(v.condition, to_string(v.verdict));
    j.set("verdicts", std::move(vj));
    j.set("linearized", to_string(a.linearized));
    j.set("empirical", to_string(c.cls));
    j.set("slope_per_period", c.slope_per_period);
    j.set("expected_log_growth", (s.reaction.r2 - a.muhat.mu) * s.domain.period());
    bool sound = true;
    for (const auto& v : a.verdicts) sound = sound && a.agrees(v);
    j.set("analytic_verdicts_sound", sound);
    return j;
}

int run_sweep(const CommonOpts& o) {
    Scenario base = load(o);
    if (base.sweep.empty()) throw ConfigError("sweep: config has no sweep.parameters section");

    // cartesian product in declaration order, last axis fastest
    std::vector<std::vector<std::pair<std::string, double>>> combos;
    combos.emplace_back();
    for (const auto& axis : base.sweep) {
        std::vector<std::vector<std::pair<std::string, double>>> next;
        for (const auto& partial : combos)
            for (double v : axis.values) {
                auto row = partial;
                row.emplace_back(axis.path, v);
                next.push_back(std::move(row));
            }
        combos = std::move(next);
    }

    std::vector<Scenario> scenarios;
    scenarios.reserve(combos.size());
    for (const auto& combo : combos) {
        Scenario s = base;
        for (const auto& [path, v] : combo) s = with_override(s, path, v);
        scenarios.push_back(std::move(s));
    }

    const unsigned workers =
        std::min<unsigned>(std::max(1u, std::thread::hardware_concurrency()),
                           static_cast<unsigned>(scenarios.size()));
    std::vector<std::future<JsonValue>> rows(scenarios.size());
    std::atomic<std::size_t> cursor{0};
    std::vector<std::promise<JsonValue>> promises(scenarios.size());
    for (std::size_t i = 0; i < scenarios.size(); ++i) rows[i] = promises[i].get_future();
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&]() {
            while (true) {
                const std::size_t i = cursor.fetch_add(1);
                if (i >= scenarios.size()) return;
                try {
                    promises[i].set_value(
                        sweep_row(static_cast<int>(i), scenarios[i], combos[i]));
                } catch (...) {
                    promises[i].set_exception(std::current_exception());
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& row : rows) std::cout << row.get().dump() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"invasion analysis for reaction-diffusion competition on moving/periodic intervals"};
    app.require_subcommand(1);

    CommonOpts eigen_opts, steady_opts, check_opts, sim_opts, sweep_opts;
    int eigen_species = 2, steady_species = 1;
    bool dump_phi = false;

    CLI::App* eigen_cmd = app.add_subcommand("eigen", "principal periodic eigenvalue");
    add_common(eigen_cmd, eigen_opts);
    eigen_cmd->add_option("--species", eigen_species, "species (1 or 2)")
        ->check(CLI::IsMember({1, 2}));
    eigen_cmd->add_flag("--dump-phi", dump_phi, "write the eigenfunction CSV to --out");

    CLI::App* steady_cmd = app.add_subcommand("steady", "periodic steady state");
    add_common(steady_cmd, steady_opts);
    steady_cmd->add_option("--species", steady_species, "species (1 or 2)")
        ->check(CLI::IsMember({1, 2}));

    CLI::App* check_cmd = app.add_subcommand("check", "analytic invasion criteria");
    add_common(check_cmd, check_opts);

    CLI::App* sim_cmd = app.add_subcommand("simulate", "coupled nonlinear run");
    add_common(sim_cmd, sim_opts);

    CLI::App* sweep_cmd = app.add_subcommand("sweep", "cartesian parameter sweep");
    add_common(sweep_cmd, sweep_opts);

    try {
        app.parse(argc, argv);
        if (eigen_cmd->parsed()) return run_eigen(eigen_opts, eigen_species, dump_phi);
        if (steady_cmd->parsed()) return run_steady(steady_opts, steady_species);
        if (check_cmd->parsed()) return run_check(check_opts);
        if (sim_cmd->parsed()) return run_simulate(sim_opts);
        if (sweep_cmd->parsed()) return run_sweep(sweep_opts);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        JsonValue err = JsonValue::object();
        err.set("error", std::string(e.what()));
        std::cout << err.dump() << "\n";
        return 1;
    }
    return 0;
}
