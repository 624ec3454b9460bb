// dfc - curvature invariants of Riemannian double forms.
//
// Subcommands:
//   invariants  - h_{2q} tables, Einstein-Lovelock summaries, classifiers
//   positivity  - sampled pointwise positivity conditions
//   check       - seeded randomized property suites
//
// Reports are JSON with deterministic bytes for a fixed input and
// configuration; progress text goes to stderr.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "dfc/report.hpp"
#include "dfc/suites.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw dfc::ParseError("cannot open input file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw dfc::ConfigError("cannot open output file: " + out_path);
    out << text;
}

dfc::ParsedInput load_structure(const std::string& input_path, const std::string& model_json) {
    if (input_path.empty() == model_json.empty())
        throw dfc::ConfigError("provide exactly one of --input or --model");
    return dfc::parse_input(input_path.empty() ? model_json : read_file(input_path));
}

int run_report_command(const std::string& input_path, const std::string& model_json,
                       const dfc::RunConfig& config, const std::string& out_path) {
    const dfc::ParsedInput parsed = load_structure(input_path, model_json);
    const dfc::JsonValue report = dfc::run_report(parsed.structure, config, parsed.echo);
    emit(report.dump(2), out_path);
    return 0;
}

int run_check_command(const std::string& suite, std::uint64_t seed, double tolerance,
                      const std::string& out_path) {
    const auto results = dfc::run_property_suite(suite, seed, tolerance);
    bool all_pass = true;
    for (const auto& r : results) {
        all_pass = all_pass && r.pass;
        std::fprintf(stderr, "%-60s %s  worst residual %.3e (tol %.1e)\n", r.name.c_str(),
                     r.pass ? "pass" : "FAIL", r.worst_residual, r.tolerance);
    }

    dfc::JsonValue doc = dfc::JsonValue::object();
    doc.set("suite", suite);
    doc.set("seed", seed);
    doc.set("tolerance", tolerance);
    dfc::JsonValue props = dfc::JsonValue::array();
    for (const auto& r : results) {
        dfc::JsonValue p = dfc::JsonValue::object();
        p.set("name", r.name);
        p.set("worst_residual", r.worst_residual);
        p.set("tolerance", r.tolerance);
        p.set("pass", r.pass);
        props.push(std::move(p));
    }
    doc.set("properties", std::move(props));
    doc.set("all_pass", all_pass);
    emit(doc.dump(2), out_path);
    return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"curvature invariants of Riemannian double forms"};
    app.require_subcommand(1);

    std::string input_path;
    std::string model_json;
    std::string out_path;
    std::string suite = "all";
    dfc::RunConfig config;

    auto add_io = [&](CLI::App* cmd) {
        cmd->add_option("--input", input_path, "path to a JSON input document");
        cmd->add_option("--model", model_json, "inline JSON model description");
        cmd->add_option("--out", out_path, "write the report here instead of stdout");
        cmd->add_option("--q-max", config.q_max, "largest q for h_{2q} (default n/2)");
        cmd->add_option("--p", config.p_list, "p values for classifiers and p-curvature");
        cmd->add_option("--tol", config.tolerance, "equality tolerance (default 1e-9)");
        cmd->add_option("--samples", config.samples, "sample count for positivity (default 2000)");
        cmd->add_option("--seed", config.seed, "PRNG seed (default 0)");
    };

    CLI::App* invariants = app.add_subcommand("invariants", "compute the invariant report");
    add_io(invariants);

    CLI::App* positivity = app.add_subcommand("positivity", "sampled positivity conditions");
    add_io(positivity);

    CLI::App* check = app.add_subcommand("check", "run a property suite");
    check->add_option("--suite", suite, "algebra | decomposition | invariants | positivity | all");
    check->add_option("--tol", config.tolerance, "base tolerance (default 1e-9)");
    check->add_option("--seed", config.seed, "PRNG seed (default 0)");
    check->add_option("--out", out_path, "write the report here instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (invariants->parsed()) {
            config.run_invariants = true;
            config.run_positivity = false;
            return run_report_command(input_path, model_json, config, out_path);
        }
        if (positivity->parsed()) {
            config.run_invariants = true;
            config.run_positivity = true;
            return run_report_command(input_path, model_json, config, out_path);
        }
        return run_check_command(suite, config.seed, config.tolerance, out_path);
    } catch (const dfc::Error& e) {
        dfc::JsonValue err = dfc::JsonValue::object();
        dfc::JsonValue detail = dfc::JsonValue::object();
        detail.set("kind", e.kind());
        detail.set("message", std::string(e.what()));
        err.set("error", std::move(detail));
        emit(err.dump(2), out_path);
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
