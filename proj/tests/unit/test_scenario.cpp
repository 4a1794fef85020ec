#include "invasion1d/scenario.hpp"
#include "invasion1d/json_writer.hpp"

#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <cstdlib>

using namespace invasion1d;

TEST_SUITE_BEGIN("scenario");

namespace {
const char* kMinimal = R"({
  "domain": {"T": 1.0, "L": 1.0},
  "reaction": {"r1": 6.0, "r2": 6.0, "h1_hat": 1.0, "h2_hat": 1.0, "g2_hat": 0.5,
               "D1": 1.0, "D2": 1.0}
})";
}

TEST_CASE("minimal config parses with all defaults") {
    Scenario s = parse_config(kMinimal);
    CHECK(s.domain.c() == 0.0);
    CHECK(s.domain.offset().is_constant());
    CHECK(s.domain.offset()(0.3) == 0.0);
    CHECK(s.domain.ref_length() == 1.0);
    CHECK(s.reaction.n == 1.0);
    CHECK(s.reaction.g1_hat == 0.0);
    CHECK(s.grid.M == 200);
    CHECK(s.grid.Nt == 2000);
    CHECK(s.run.periods == 200);
    CHECK(s.seed_amplitude() == doctest::Approx(1e-4 * 6.0).epsilon(1e-12));
    CHECK(s.growth_margin() == doctest::Approx(0.02).epsilon(1e-12));
}

TEST_CASE("periodic function forms") {
    Scenario s = parse_config(R"({
      "domain": {"T": 2.0, "c": 0.5,
                 "L": {"mean": 1.0, "sin": [0.1], "period": 2.0},
                 "A": {"sin": [0.0, 0.02]}},
      "reaction": {"r1": 6, "r2": 5, "h1_hat": 1, "h2_hat": 1, "g2_hat": 0.5,
                   "D1": 1, "D2": 2, "n": 2, "g1_hat": 0.1},
      "grid": {"M": 64, "Nt": 128},
      "run": {"periods": 50, "seed_amplitude": 1e-5, "growth_margin": 0.05}
    })");
    CHECK(s.domain.length()(0.5) == doctest::Approx(1.1).epsilon(1e-12));
    CHECK(s.domain.offset().sin_coeffs.size() == 2);
    CHECK(s.reaction.n == 2.0);
    CHECK(s.grid.M == 64);
    CHECK(*s.run.seed_amplitude == 1e-5);
    CHECK(s.growth_margin() == 0.05);
}

TEST_CASE("rejections name the section and key") {
    CHECK_THROWS_WITH_AS(parse_config(R"({"domain": {"T": 1, "L": 1}, "reaction": {},
                                          "bogus": 1})"),
                         doctest::Contains("unknown key 'bogus'"), ConfigError);

    CHECK_THROWS_WITH_AS(
        parse_config(R"({"domain": {"T": 1, "L": 1, "wavelength": 2},
                         "reaction": {"r1": 1, "r2": 1, "h1_hat": 1, "h2_hat": 1,
                                      "g2_hat": 1, "D1": 1, "D2": 1}})"),
        doctest::Contains("domain: unknown key 'wavelength'"), ConfigError);

    // L dipping negative: the violating time is named
    try {
        parse_config(R"({"domain": {"T": 1.0, "L": {"mean": 0.5, "sin": [1.0]}},
                         "reaction": {"r1": 1, "r2": 1, "h1_hat": 1, "h2_hat": 1,
                                      "g2_hat": 1, "D1": 1, "D2": 1}})");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("domain.L must stay positive") != std::string::npos);
        CHECK(msg.find("at t=") != std::string::npos);
    }

    CHECK_THROWS_WITH_AS(parse_config(R"({"domain": {"T": 1, "L": 1},
        "reaction": {"r1": 1, "r2": 1, "h1_hat": 1, "h2_hat": 1, "g2_hat": 1,
                     "D1": 1, "D2": 1}, "grid": {"M": 8}})"),
                         doctest::Contains("grid.M"), ConfigError);

    CHECK_THROWS_WITH_AS(parse_config(R"({"domain": {"T": 1, "L": {"mean": 1, "period": 2}},
        "reaction": {"r1": 1, "r2": 1, "h1_hat": 1, "h2_hat": 1, "g2_hat": 1,
                     "D1": 1, "D2": 1}})"),
                         doctest::Contains("must equal domain.T"), ConfigError);

    CHECK_THROWS_WITH_AS(parse_config(R"({"domain": {"T": 1, "L": 1},
        "reaction": {"r1": 1, "r2": 1, "h1_hat": 1, "h2_hat": 1, "g2_hat": 1,
                     "D1": 1, "D2": -1}})"),
                         doctest::Contains("reaction.D2"), ConfigError);

    CHECK_THROWS_AS(parse_config("not json"), ConfigError);
}

TEST_CASE("sweep axes validate their paths up front") {
    CHECK_THROWS_WITH_AS(parse_config(R"({"domain": {"T": 1, "L": 1},
        "reaction": {"r1": 6, "r2": 6, "h1_hat": 1, "h2_hat": 1, "g2_hat": 0.5,
                     "D1": 1, "D2": 1},
        "sweep": {"parameters": {"reaction.r9": [1, 2]}}})"),
                         doctest::Contains("unsupported parameter path"), ConfigError);

    Scenario s = parse_config(R"({"domain": {"T": 1, "L": 1},
        "reaction": {"r1": 6, "r2": 6, "h1_hat": 1, "h2_hat": 1, "g2_hat": 0.5,
                     "D1": 1, "D2": 1},
        "sweep": {"parameters": {"reaction.r2": [4, 8], "domain.c": [0, 0.5]}}})");
    CHECK(s.sweep.size() == 2);
    Scenario o = with_override(s, "reaction.r2", 8.0);
    CHECK(o.reaction.r2 == 8.0);
    Scenario oc = with_override(s, "domain.c", 0.5);
    CHECK(oc.domain.c() == 0.5);
    CHECK(oc.domain.length()(0.25) == s.domain.length()(0.25));
}

TEST_CASE("resolved config echo is stable and round-trips") {
    Scenario s = parse_config(kMinimal);
    const std::string a = scenario_to_json(s).dump();
    const std::string b = scenario_to_json(parse_config(kMinimal)).dump();
    CHECK(a == b);
    CHECK(a.find("\"L0\":1") != std::string::npos);

    // the echo itself is a valid config (modulo the echo-only keys)
    CHECK(a.find("\"domain\"") != std::string::npos);
}

TEST_CASE("floats print with 17 significant digits") {
    CHECK(JsonValue::format_double(0.1) == "0.10000000000000001");
    CHECK(JsonValue::format_double(1.0) == "1");
    CHECK(JsonValue::format_double(-2.5e-7) == "-2.4999999999999999e-07");
    CHECK(std::strtod(JsonValue::format_double(-2.5e-7).c_str(), nullptr) == -2.5e-7);
    JsonValue o = JsonValue::object();
    o.set("x", 0.1).set("s", "a\"b").set("flag", true).set("none", JsonValue());
    CHECK(o.dump() == R"({"x":0.10000000000000001,"s":"a\"b","flag":true,"none":null})");
}

TEST_SUITE_END();
