#pragma once

#include "invasion1d/invasion.hpp"
#include "invasion1d/scenario.hpp"
#include "invasion1d/simulate.hpp"

#include <string>

namespace invasion1d {

JsonValue verdict_to_json(const InvasionVerdict& v, const ScenarioAnalysis& a);
JsonValue bounds_to_json(const Example3Bounds& b);
JsonValue analysis_to_json(const Scenario& s, const ScenarioAnalysis& a);
JsonValue eigen_to_json(const EigenResult& e);

/// CSV with header "t,xi,value", boundary rows included as exact zeros.
void write_field_csv(const std::string& path, const SpaceTimeField& f, const Grid& g);

/// CSV with header "period,u2_norm,u1_dev".
void write_trajectory_csv(const std::string& path, const Trajectory& t);

}  // namespace invasion1d
