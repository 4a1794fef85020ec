// pybind11 module exposing the main operations: periodic data, domain
// motion, reaction models, eigenvalue solves, steady states, invasion
// checks, and the coupled simulator.

#include "invasion1d/invasion.hpp"
#include "invasion1d/report.hpp"
#include "invasion1d/scenario.hpp"
#include "invasion1d/simulate.hpp"

#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace invasion1d;

namespace {

py::array_t<double> field_to_numpy(const SpaceTimeField& f) {
    const int rows = f.steps() + 1;
    const int cols = f.nodes();
    py::array_t<double> out({rows, cols});
    auto r = out.mutable_unchecked<2>();
    for (int j = 0; j < rows; ++j)
        for (int i = 0; i < cols; ++i) r(j, i) = f.at_step(j)[static_cast<std::size_t>(i)];
    return out;
}

py::dict verdict_to_dict(const InvasionVerdict& v) {
    py::dict d;
    d["condition"] = v.condition;
    d["verdict"] = std::string(to_string(v.verdict));
    py::dict w;
    for (const auto& [k, x] : v.witnesses) w[py::str(k)] = x;
    d["witnesses"] = w;
    if (!v.note.empty()) d["note"] = v.note;
    return d;
}

PotentialFn wrap_potential(const py::object& q) {
    if (q.is_none()) return {};
    auto fn = q.cast<std::function<double(double, double)>>();
    return [fn](int, double xi, double t) { return fn(xi, t); };
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "invasion analysis for two-species reaction-diffusion competition on "
              "translating and periodically varying intervals";

    py::class_<PeriodicFunction>(m, "PeriodicFunction")
        .def(py::init<double, std::vector<double>, std::vector<double>, double>(),
             py::arg("mean"), py::arg("cos") = std::vector<double>{},
             py::arg("sin") = std::vector<double>{}, py::arg("period") = 1.0)
        .def_static("constant", &PeriodicFunction::constant, py::arg("value"),
                    py::arg("period") = 1.0)
        .def_readonly("period", &PeriodicFunction::period)
        .def_readonly("mean", &PeriodicFunction::mean)
        .def_readonly("cos", &PeriodicFunction::cos_coeffs)
        .def_readonly("sin", &PeriodicFunction::sin_coeffs)
        .def("__call__", &PeriodicFunction::operator(), py::arg("t"))
        .def("derivative", &PeriodicFunction::derivative, py::arg("order") = 1)
        .def("is_constant", &PeriodicFunction::is_constant);

    m.def("period_mean",
          static_cast<double (*)(const PeriodicFunction&)>(&period_mean), py::arg("f"));
    m.def("period_mean",
          static_cast<double (*)(const std::function<double(double)>&, double, int)>(&period_mean),
          py::arg("f"), py::arg("period"), py::arg("samples") = 1024);

    py::class_<DomainMotion>(m, "DomainMotion")
        .def(py::init<double, PeriodicFunction, PeriodicFunction, double>(), py::arg("c"),
             py::arg("L"), py::arg("A"), py::arg("L0") = 0.0)
        .def_property_readonly("c", &DomainMotion::c)
        .def_property_readonly("T", &DomainMotion::period)
        .def_property_readonly("L0", &DomainMotion::ref_length)
        .def("alpha", &DomainMotion::alpha, py::arg("t"))
        .def("advection", &DomainMotion::advection, py::arg("xi"), py::arg("t"))
        .def("coefficients_at", &DomainMotion::coefficients_at, py::arg("xi"), py::arg("t"))
        .def("E", &DomainMotion::E, py::arg("xi"), py::arg("t"))
        .def("delta_E", &DomainMotion::delta_E, py::arg("time_samples") = 256)
        .def("Q_bounds", &DomainMotion::Q_bounds, py::arg("t"))
        .def("overlap_width", &DomainMotion::overlap_width, py::arg("time_samples") = 4096)
        .def("is_constant", &DomainMotion::is_constant);

    py::class_<ReactionModel>(m, "ReactionModel")
        .def(py::init([](double r1, double r2, double n, double h1, double h2, double g2,
                         double g1, double D1, double D2) {
                 ReactionModel m_{r1, r2, n, h1, h2, g2, g1, D1, D2};
                 m_.validate();
                 return m_;
             }),
             py::arg("r1"), py::arg("r2"), py::arg("n") = 1.0, py::arg("h1_hat") = 1.0,
             py::arg("h2_hat") = 1.0, py::arg("g2_hat") = 1.0, py::arg("g1_hat") = 0.0,
             py::arg("D1") = 1.0, py::arg("D2") = 1.0)
        .def_readonly("r1", &ReactionModel::r1)
        .def_readonly("r2", &ReactionModel::r2)
        .def_readonly("n", &ReactionModel::n)
        .def_readonly("D1", &ReactionModel::D1)
        .def_readonly("D2", &ReactionModel::D2)
        .def("K1", &ReactionModel::K1)
        .def("K2", &ReactionModel::K2)
        .def("F1", &ReactionModel::F1, py::arg("u"))
        .def("F2", &ReactionModel::F2, py::arg("u"))
        .def("f1", &ReactionModel::f1, py::arg("u1"), py::arg("u2"))
        .def("f2", &ReactionModel::f2, py::arg("u1"), py::arg("u2"))
        .def("g2_of", &ReactionModel::g2_of, py::arg("u"))
        .def("h1_of", &ReactionModel::h1_of, py::arg("u"))
        .def("h2_of", &ReactionModel::h2_of, py::arg("u"))
        .def("beta_hat", &ReactionModel::beta_hat);

    py::class_<Grid>(m, "Grid")
        .def(py::init<int, int, double, double>(), py::arg("M"), py::arg("Nt"), py::arg("L0"),
             py::arg("T"))
        .def_readonly("M", &Grid::M)
        .def_readonly("Nt", &Grid::Nt)
        .def_readonly("L0", &Grid::L0)
        .def_readonly("T", &Grid::T)
        .def_readonly("dx", &Grid::dx)
        .def_readonly("dt", &Grid::dt)
        .def_readonly("xi", &Grid::xi);

    py::class_<EigenResult>(m, "EigenResult")
        .def_readonly("mu", &EigenResult::mu)
        .def_readonly("iterations", &EigenResult::iterations)
        .def_readonly("residual", &EigenResult::residual)
        .def_readonly("period_defect", &EigenResult::period_defect)
        .def_property_readonly("phi", [](const EigenResult& r) { return field_to_numpy(r.phi); });

    py::class_<SteadyStateResult>(m, "SteadyStateResult")
        .def_readonly("extinct", &SteadyStateResult::extinct)
        .def_readonly("mu", &SteadyStateResult::mu)
        .def_readonly("periods", &SteadyStateResult::periods)
        .def_readonly("deltas", &SteadyStateResult::deltas)
        .def_property_readonly("field",
                               [](const SteadyStateResult& r) { return field_to_numpy(r.field); });

    py::class_<Example3Bounds>(m, "Example3Bounds")
        .def_readonly("lower", &Example3Bounds::lower)
        .def_readonly("upper_integral", &Example3Bounds::upper_integral)
        .def_property_readonly("upper_overlap",
                               [](const Example3Bounds& b) -> py::object {
                                   if (b.upper_overlap) return py::float_(*b.upper_overlap);
                                   return py::none();
                               })
        .def("min_upper", &Example3Bounds::min_upper);

    py::class_<Trajectory>(m, "Trajectory")
        .def_readonly("u2_norm", &Trajectory::u2_norm)
        .def_readonly("u1_dev", &Trajectory::u1_dev)
        .def_readonly("period", &Trajectory::period)
        .def_readonly("K2", &Trajectory::K2)
        .def_readonly("seed_amplitude", &Trajectory::seed_amplitude);

    py::class_<ClassifyResult>(m, "ClassifyResult")
        .def_property_readonly(
            "classification",
            [](const ClassifyResult& c) { return std::string(to_string(c.cls)); })
        .def_readonly("slope_per_period", &ClassifyResult::slope_per_period)
        .def_readonly("window_points", &ClassifyResult::window_points)
        .def_readonly("fit_points", &ClassifyResult::fit_points);

    m.def(
        "principal_eigenpair",
        [](double D, const DomainMotion& d, const Grid& g, const py::object& q) {
            return principal_eigenpair(D, d, g, wrap_potential(q));
        },
        py::arg("D"), py::arg("domain"), py::arg("grid"), py::arg("q") = py::none(),
        "principal periodic eigenvalue and eigenfunction via the period map");

    m.def(
        "periodic_steady_state",
        [](int species, const ReactionModel& m_, const DomainMotion& d, const Grid& g,
           double tol, int max_periods, double init_amplitude) {
            return periodic_steady_state(
                species, m_, d, g,
                {.tol = tol, .max_periods = max_periods, .init_amplitude = init_amplitude});
        },
        py::arg("species"), py::arg("model"), py::arg("domain"), py::arg("grid"),
        py::arg("tol") = 1e-9, py::arg("max_periods") = 2000, py::arg("init_amplitude") = 0.5);

    m.def(
        "mu_hat",
        [](const ReactionModel& m_, const DomainMotion& d, const SteadyStateResult& u1s,
           const Grid& g) { return mu_hat(m_, d, u1s, g); },
        py::arg("model"), py::arg("domain"), py::arg("u1star"), py::arg("grid"));

    m.def("example3_bounds", &example3_bounds, py::arg("D"), py::arg("domain"),
          py::arg("quad_samples") = 1024);

    m.def(
        "coupled_run",
        [](const ReactionModel& m_, const DomainMotion& d, const Grid& g,
           const SteadyStateResult& u1s, double seed_amplitude, int horizon) {
            return coupled_run(m_, d, g, u1s,
                               {.seed_amplitude = seed_amplitude, .horizon = horizon});
        },
        py::arg("model"), py::arg("domain"), py::arg("grid"), py::arg("u1star"),
        py::arg("seed_amplitude") = 0.0, py::arg("horizon") = 200);

    m.def("classify_invasion", &classify_invasion, py::arg("trajectory"),
          py::arg("growth_margin") = 0.0);

    m.def(
        "check_scenario",
        [](const std::string& config_json) {
            Scenario s = parse_config(config_json);
            Grid g(s.grid.M, s.grid.Nt, s.domain.ref_length(), s.domain.period());
            ScenarioAnalysis a = analyze(s.reaction, s.domain, g);
            return analysis_to_json(s, a).dump();
        },
        py::arg("config_json"),
        "run every analytic criterion on a JSON scenario; returns the report as a JSON string");

    m.def(
        "validate_config",
        [](const std::string& config_json) {
            Scenario s = parse_config(config_json);
            return scenario_to_json(s).dump();
        },
        py::arg("config_json"), "parse and validate; returns the resolved config JSON");

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
}
