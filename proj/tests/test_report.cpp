#include <doctest.h>

#include <json.hpp>

#include "dfc/report.hpp"
#include "dfc/suites.hpp"

using dfc::RunConfig;

TEST_CASE("entry documents expand through the curvature symmetries") {
    const auto parsed = dfc::parse_input(R"({"n":2,"entries":[{"i":1,"j":2,"k":1,"l":2,"value":1.0}]})");
    // A single plane entry on n = 2 is the constant-curvature structure K = 1.
    const std::vector<int> plane{1, 2};
    CHECK(parsed.structure.form().eval(plane, plane) == doctest::Approx(1.0));
    CHECK(parsed.structure.bianchi_certified());

    // Reordered index entries pick up signs; consistent duplicates are fine.
    const auto swapped = dfc::parse_input(
        R"({"n":3,"entries":[{"i":1,"j":2,"k":1,"l":2,"value":2.0},
                             {"i":2,"j":1,"k":1,"l":2,"value":-2.0}]})");
    CHECK(swapped.structure.form().eval(plane, plane) == doctest::Approx(2.0));

    CHECK_THROWS_AS(dfc::parse_input(
                        R"({"n":2,"entries":[{"i":1,"j":2,"k":1,"l":2,"value":1.0},
                                             {"i":2,"j":1,"k":1,"l":2,"value":1.0}]})"),
                    dfc::SymmetryConflict);
    CHECK_THROWS_AS(dfc::parse_input(R"({"n":2,"entries":[{"i":1,"j":1,"k":1,"l":2,"value":0.5}]})"),
                    dfc::SymmetryConflict);
    CHECK_THROWS_AS(dfc::parse_input(R"({"n":12,"entries":[]})"), dfc::DimensionExceeded);
    CHECK_THROWS_AS(dfc::parse_input("not json"), dfc::ParseError);
    CHECK_THROWS_AS(dfc::parse_input(R"({"n":2})"), dfc::ParseError);
}

TEST_CASE("model documents parse to the matching generators") {
    const auto constant = dfc::parse_input(R"({"model":"constant","n":4,"lambda":1.0})");
    CHECK(constant.structure.n() == 4);
    const std::vector<int> plane{1, 2};
    CHECK(constant.structure.form().eval(plane, plane) == doctest::Approx(1.0));

    const auto hyper = dfc::parse_input(
        R"({"model":"hypersurface","principal_curvatures":[1,2,3,4]})");
    CHECK(hyper.structure.n() == 4);

    const auto product = dfc::parse_input(
        R"({"model":"product","a":{"model":"constant","n":2,"lambda":1.0},
            "b":{"model":"constant","n":2,"lambda":1.0}})");
    CHECK(product.structure.n() == 4);

    const auto random = dfc::parse_input(R"({"model":"random","n":5,"seed":7,"terms":5})");
    CHECK(random.structure.bianchi_certified());

    CHECK_THROWS_AS(dfc::parse_input(R"({"model":"moebius","n":4})"), dfc::ParseError);
}

TEST_CASE("invariant report carries the advertised fields and anchor values") {
    const auto parsed = dfc::parse_input(R"({"model":"constant","n":4,"lambda":1.0})");
    RunConfig config;
    config.q_max = 2;
    const dfc::JsonValue report = dfc::run_report(parsed.structure, config, parsed.echo);

    const auto doc = nlohmann::json::parse(report.dump(2));
    CHECK(doc["n"] == 4);
    CHECK(doc["bianchi_residual"].get<double>() <= 1e-12);
    CHECK(doc["h"]["2"].get<double>() == doctest::Approx(6.0));
    CHECK(doc["h"]["4"].get<double>() == doctest::Approx(6.0));
    CHECK(doc["h_dual_residual"].get<double>() <= 1e-9);
    CHECK(doc["lovelock"]["2"]["min_eigenvalue"].get<double>() == doctest::Approx(3.0));
    CHECK(doc["lovelock"]["2"]["max_eigenvalue"].get<double>() == doctest::Approx(3.0));
    CHECK(doc["avez_residual"].get<double>() <= 1e-9);
    CHECK(doc["classifiers"]["einstein_p1_q1"]["verdict"] == true);
    CHECK(doc.contains("positivity"));
    CHECK(doc["config_echo"]["q_max"] == 2);
    CHECK(doc["config_echo"]["input"]["model"] == "constant");

    // Hypersurface anchors through the full report path.
    const auto hyper = dfc::parse_input(
        R"({"model":"hypersurface","principal_curvatures":[1,2,3,4]})");
    const auto hdoc =
        nlohmann::json::parse(dfc::run_report(hyper.structure, config, hyper.echo).dump(2));
    CHECK(hdoc["h"]["2"].get<double>() == doctest::Approx(35.0));
    CHECK(hdoc["h"]["4"].get<double>() == doctest::Approx(144.0));

    // Flat input: all invariants vanish.
    const auto flat = dfc::parse_input(R"({"model":"constant","n":4,"lambda":0.0})");
    const auto fdoc =
        nlohmann::json::parse(dfc::run_report(flat.structure, config, flat.echo).dump(2));
    CHECK(fdoc["h"]["2"].get<double>() == 0.0);
    CHECK(fdoc["h"]["4"].get<double>() == 0.0);
    CHECK(fdoc["lovelock"]["2"]["frobenius_norm"].get<double>() == 0.0);
}

TEST_CASE("uncertified entry input still reports, with a classifier warning") {
    // A lone R(1,2,3,4) entry violates the first Bianchi identity.
    const auto parsed = dfc::parse_input(
        R"({"n":4,"entries":[{"i":1,"j":2,"k":3,"l":4,"value":1.0},
                             {"i":1,"j":3,"k":1,"l":3,"value":2.0}]})");
    CHECK_FALSE(parsed.structure.bianchi_certified());
    RunConfig config;
    config.q_max = 2;
    const auto doc =
        nlohmann::json::parse(dfc::run_report(parsed.structure, config, parsed.echo).dump(2));
    CHECK(doc["bianchi_residual"].get<double>() > 1e-3);
    CHECK(doc["classifiers"]["einstein_p1_q1"].contains("warning"));
    CHECK(doc["h"].contains("2"));
}

TEST_CASE("positivity section appears when requested") {
    const auto parsed = dfc::parse_input(R"({"model":"constant","n":4,"lambda":1.0})");
    RunConfig config;
    config.run_invariants = false;
    config.run_positivity = true;
    config.samples = 50;
    config.p_list = {0, 1, 2};
    const auto doc =
        nlohmann::json::parse(dfc::run_report(parsed.structure, config, parsed.echo).dump(2));
    CHECK(doc["positivity"]["p_curvature_p1"]["verdict"] == "positive");
    CHECK(doc["positivity"]["isotropic"]["min_margin"].get<double>() == doctest::Approx(4.0));
    CHECK(doc["positivity"]["condition_A"]["verdict"] == "positive");
    CHECK(doc["positivity"]["h4_sign"] == "positive");
    CHECK_FALSE(doc.contains("h"));
}

TEST_CASE("reports are byte-deterministic; suite registry validates names") {
    const auto parsed = dfc::parse_input(R"({"model":"random","n":4,"seed":3})");
    RunConfig config;
    config.run_positivity = true;
    config.samples = 25;
    const std::string a = dfc::run_report(parsed.structure, config, parsed.echo).dump(2);
    const std::string b = dfc::run_report(parsed.structure, config, parsed.echo).dump(2);
    CHECK(a == b);

    CHECK_THROWS_AS(dfc::run_property_suite("nonsense", 0, 1e-9), dfc::ConfigError);

    // Zero tolerance documents the floating-point contract: some property
    // must fail because exact equality is unattainable.
    const auto results = dfc::run_property_suite("algebra", 42, 0.0);
    bool any_fail = false;
    for (const auto& r : results) any_fail = any_fail || !r.pass;
    CHECK(any_fail);

    const auto ok = dfc::run_property_suite("algebra", 42, 1e-9);
    bool all_pass = true;
    for (const auto& r : ok) all_pass = all_pass && r.pass;
    CHECK(all_pass);
}

TEST_CASE("17-digit number formatting round-trips doubles") {
    dfc::JsonValue v = dfc::JsonValue::object();
    const double x = 0.1 + 0.2;
    v.set("x", x);
    const auto doc = nlohmann::json::parse(v.dump());
    CHECK(doc["x"].get<double>() == x);
}
