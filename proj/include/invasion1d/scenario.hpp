#pragma once

#include "invasion1d/domain_motion.hpp"
#include "invasion1d/json_writer.hpp"
#include "invasion1d/reaction.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace invasion1d {

/// Configuration error carrying the offending section/key in the message.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GridSpec {
    int M = 200;
    int Nt = 2000;
};

struct RunParams {
    int periods = 200;                        // coupled-run horizon
    std::optional<double> seed_amplitude;     // default 1e-4 * K2
    std::optional<double> growth_margin;      // default 0.02 / T
};

/// One axis of a parameter sweep: a dotted scalar path (e.g. "reaction.r2",
/// "domain.c") and its values, in declaration order.
struct SweepAxis {
    std::string path;
    std::vector<double> values;
};

struct Scenario {
    DomainMotion domain;
    ReactionModel reaction;
    GridSpec grid;
    RunParams run;
    std::vector<SweepAxis> sweep;

    double seed_amplitude() const;
    double growth_margin() const;
};

/// Parse and validate the JSON scenario configuration.  Unknown keys are
/// rejected, every type invariant is checked, and violations name the
/// section and key.  Defaults: c=0, A=0, L0=L(0), grid 200x2000, run
/// defaults as above.
Scenario parse_config(const std::string& json_text);

/// Read a file and parse it.
Scenario load_config(const std::string& path);

/// Scalar sweep override (paths as in SweepAxis); throws ConfigError for an
/// unsupported path.
Scenario with_override(const Scenario& s, const std::string& path, double value);

/// Fully resolved configuration (defaults applied) for echoing in outputs.
JsonValue scenario_to_json(const Scenario& s);

}  // namespace invasion1d
