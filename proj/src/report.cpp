#include "dfc/report.hpp"

#include <cmath>
#include <json.hpp>
#include <string>

#include "dfc/invariants.hpp"
#include "dfc/positivity.hpp"

namespace dfc {

namespace {

using nlohmann::json;

json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

int require_int(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw ParseError(std::string("missing integer field \"") + key + "\"");
    return j[key].get<int>();
}

double require_number(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number())
        throw ParseError(std::string("missing numeric field \"") + key + "\"");
    return j[key].get<double>();
}

ModelSpec model_spec_from_json(const json& j); // forward

std::vector<std::vector<double>> parse_table(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_array())
        throw ParseError(std::string("missing array field \"") + key + "\"");
    std::vector<std::vector<double>> table;
    for (const auto& row : j[key]) {
        if (!row.is_array()) throw ParseError("coefficient table rows must be arrays");
        std::vector<double> r;
        for (const auto& v : row) {
            if (!v.is_number()) throw ParseError("coefficient table entries must be numbers");
            r.push_back(v.get<double>());
        }
        table.push_back(std::move(r));
    }
    return table;
}

ModelSpec model_spec_from_json(const json& j) {
    if (!j.is_object() || !j.contains("model") || !j["model"].is_string())
        throw ParseError("model description needs a \"model\" string field");
    const std::string kind = j["model"].get<std::string>();
    ModelSpec spec;
    if (kind == "constant") {
        spec.kind = ModelSpec::Kind::Constant;
        spec.n = require_int(j, "n");
        spec.lambda = require_number(j, "lambda");
    } else if (kind == "hypersurface") {
        spec.kind = ModelSpec::Kind::Hypersurface;
        if (!j.contains("principal_curvatures") || !j["principal_curvatures"].is_array())
            throw ParseError("hypersurface model needs \"principal_curvatures\"");
        for (const auto& v : j["principal_curvatures"]) {
            if (!v.is_number()) throw ParseError("principal curvatures must be numbers");
            spec.principal_curvatures.push_back(v.get<double>());
        }
        spec.n = static_cast<int>(spec.principal_curvatures.size());
        if (j.contains("n") && j["n"].get<int>() != spec.n)
            throw ParseError("\"n\" disagrees with the principal curvature count");
    } else if (kind == "conformally_flat") {
        spec.kind = ModelSpec::Kind::ConformallyFlat;
        spec.schouten = parse_table(j, "h");
        spec.n = static_cast<int>(spec.schouten.size());
        if (j.contains("n") && j["n"].get<int>() != spec.n)
            throw ParseError("\"n\" disagrees with the coefficient table size");
    } else if (kind == "product") {
        spec.kind = ModelSpec::Kind::Product;
        if (!j.contains("a") || !j.contains("b"))
            throw ParseError("product model needs factors \"a\" and \"b\"");
        spec.factors.push_back(model_spec_from_json(j["a"]));
        spec.factors.push_back(model_spec_from_json(j["b"]));
        spec.n = spec.factors[0].n + spec.factors[1].n;
        if (j.contains("n") && j["n"].get<int>() != spec.n)
            throw ParseError("\"n\" disagrees with the sum of factor dimensions");
    } else if (kind == "random" || kind == "random_einstein") {
        spec.kind = kind == "random" ? ModelSpec::Kind::Random : ModelSpec::Kind::RandomEinstein;
        spec.n = require_int(j, "n");
        if (j.contains("seed")) {
            if (!j["seed"].is_number_unsigned() && !j["seed"].is_number_integer())
                throw ParseError("\"seed\" must be an integer");
            spec.seed = j["seed"].get<std::uint64_t>();
        }
        if (kind == "random" && j.contains("terms")) spec.terms = j["terms"].get<int>();
    } else {
        throw ParseError("unknown model kind \"" + kind + "\"");
    }
    return spec;
}

JsonValue model_echo(const ModelSpec& spec) {
    JsonValue e = JsonValue::object();
    switch (spec.kind) {
        case ModelSpec::Kind::Constant:
            e.set("model", "constant").set("n", spec.n).set("lambda", spec.lambda);
            break;
        case ModelSpec::Kind::Hypersurface: {
            e.set("model", "hypersurface").set("n", spec.n);
            JsonValue arr = JsonValue::array();
            for (double v : spec.principal_curvatures) arr.push(v);
            e.set("principal_curvatures", std::move(arr));
            break;
        }
        case ModelSpec::Kind::ConformallyFlat: {
            e.set("model", "conformally_flat").set("n", spec.n);
            JsonValue rows = JsonValue::array();
            for (const auto& row : spec.schouten) {
                JsonValue r = JsonValue::array();
                for (double v : row) r.push(v);
                rows.push(std::move(r));
            }
            e.set("h", std::move(rows));
            break;
        }
        case ModelSpec::Kind::Product:
            e.set("model", "product").set("n", spec.n);
            e.set("a", model_echo(spec.factors[0]));
            e.set("b", model_echo(spec.factors[1]));
            break;
        case ModelSpec::Kind::Random:
            e.set("model", "random").set("n", spec.n).set("seed", spec.seed);
            e.set("terms", spec.terms > 0 ? spec.terms : spec.n);
            break;
        case ModelSpec::Kind::RandomEinstein:
            e.set("model", "random_einstein").set("n", spec.n).set("seed", spec.seed);
            break;
    }
    return e;
}

CurvatureStructure curvature_from_entries(const json& doc) {
    const int n = require_int(doc, "n");
    if (n > kMaxDimension)
        throw DimensionExceeded("dimension " + std::to_string(n) + " exceeds cap " +
                                std::to_string(kMaxDimension));
    if (n < 2) throw ParseError("entry input needs n >= 2");
    if (!doc["entries"].is_array()) throw ParseError("\"entries\" must be an array");

    DoubleForm r(n, 2, 2);
    std::vector<char> assigned(static_cast<size_t>(r.row_count()) *
                                   static_cast<size_t>(r.col_count()),
                               0);
    const IndexBasis& basis = index_basis(n, 2);

    auto place = [&](int row, int col, double value) {
        const size_t idx =
            static_cast<size_t>(row) * static_cast<size_t>(r.col_count()) + static_cast<size_t>(col);
        if (assigned[idx]) {
            const double old = r.at(row, col);
            if (std::abs(old - value) > 1e-12 * std::max({1.0, std::abs(old), std::abs(value)}))
                throw SymmetryConflict("entry conflicts with a symmetry-expanded value");
        } else {
            assigned[idx] = 1;
            r.at(row, col) = value;
        }
    };

    for (const auto& entry : doc["entries"]) {
        const int i = require_int(entry, "i");
        const int j = require_int(entry, "j");
        const int k = require_int(entry, "k");
        const int l = require_int(entry, "l");
        const double value = require_number(entry, "value");
        for (int v : {i, j, k, l})
            if (v < 1 || v > n) throw ParseError("entry index outside [1, n]");
        if (i == j || k == l) {
            if (value != 0.0)
                throw SymmetryConflict("antisymmetry forces R(i,i,.,.) and R(.,.,k,k) to vanish");
            continue;
        }
        const int si = i < j ? 1 : -1;
        const int sk = k < l ? 1 : -1;
        const std::uint16_t mi = static_cast<std::uint16_t>((1u << (i - 1)) | (1u << (j - 1)));
        const std::uint16_t mj = static_cast<std::uint16_t>((1u << (k - 1)) | (1u << (l - 1)));
        const double canonical = si * sk * value;
        const int row = basis.rank_of(mi);
        const int col = basis.rank_of(mj);
        place(row, col, canonical);
        place(col, row, canonical); // pair symmetry R(k,l,i,j) = R(i,j,k,l)
    }
    return CurvatureStructure(r);
}

JsonValue positivity_report_json(const PositivityReport& rep) {
    JsonValue out = JsonValue::object();
    out.set("condition", rep.condition);
    out.set("samples", rep.samples);
    out.set("min_margin", rep.min_margin);
    out.set("verdict", rep.verdict);
    JsonValue frame = JsonValue::array();
    for (const auto& vec : rep.witness_frame) {
        JsonValue row = JsonValue::array();
        for (double v : vec) row.push(v);
        frame.push(std::move(row));
    }
    out.set("witness_frame", std::move(frame));
    return out;
}

JsonValue classifier_json(const ClassifierResult& res, bool certified) {
    JsonValue out = JsonValue::object();
    out.set("verdict", res.verdict);
    out.set("lambda", res.lambda);
    out.set("direct_residual", res.direct_residual);
    if (res.component_route_available) {
        out.set("component_residual", res.component_residual);
        out.set("routes_agree", res.routes_agree);
    } else {
        out.set("component_residual", nullptr);
    }
    if (!certified)
        out.set("warning", "input does not satisfy the first Bianchi identity at tolerance");
    return out;
}

} // namespace

ModelSpec parse_model_spec(const std::string& json_text) {
    return model_spec_from_json(parse_text(json_text));
}

ParsedInput parse_input(const std::string& json_text) {
    const json doc = parse_text(json_text);
    if (!doc.is_object()) throw ParseError("input document must be a JSON object");
    if (doc.contains("entries")) {
        CurvatureStructure structure = curvature_from_entries(doc);
        JsonValue echo = JsonValue::object();
        echo.set("n", structure.n());
        echo.set("entries", static_cast<std::int64_t>(doc["entries"].size()));
        return {std::move(structure), std::move(echo)};
    }
    if (doc.contains("model")) {
        ModelSpec spec = model_spec_from_json(doc);
        return {build_model(spec), model_echo(spec)};
    }
    throw ParseError("input document needs either \"model\" or \"entries\"");
}

JsonValue run_report(const CurvatureStructure& structure, const RunConfig& config,
                     const JsonValue& input_echo) {
    const int n = structure.n();
    if (config.tolerance <= 0.0) throw ConfigError("tolerance must be positive");
    const int q_max = config.q_max > 0 ? config.q_max : n / 2;
    if (2 * q_max > n) throw ConfigError("q_max must satisfy 2 q_max <= n");

    JsonValue out = JsonValue::object();
    out.set("n", n);
    out.set("bianchi_residual", structure.bianchi_residual());

    if (config.run_invariants) {
        JsonValue h = JsonValue::object();
        JsonValue dual = JsonValue::object();
        JsonValue lovelock = JsonValue::object();
        double worst_dual = 0.0;
        for (int q = 1; q <= q_max; ++q) {
            const GbwRoutes routes = gbw_curvature_routes(structure, q);
            const std::string key = std::to_string(2 * q);
            h.set(key, routes.value);
            dual.set(key, routes.residual);
            worst_dual = std::max(worst_dual, routes.residual);

            const EigenSummary summary = eigen_summary(einstein_lovelock(structure, q));
            JsonValue t = JsonValue::object();
            t.set("min_eigenvalue", summary.min_eigenvalue);
            t.set("max_eigenvalue", summary.max_eigenvalue);
            t.set("frobenius_norm", summary.frobenius_norm);
            lovelock.set(key, std::move(t));
        }
        out.set("h", std::move(h));
        out.set("h_dual_residual", worst_dual);
        out.set("h_dual_pass", worst_dual <= config.tolerance);
        out.set("h_dual_residuals", std::move(dual));
        out.set("lovelock", std::move(lovelock));

        if (n >= 4) {
            const double avez = n % 4 == 0
                                    ? std::abs(avez_h4q(structure, n / 4) -
                                               gbw_curvature(structure, n / 2))
                                    : std::abs(h4_component_formula(structure) -
                                               gbw_curvature(structure, 2));
            out.set("avez_residual", avez);
            out.set("avez_pass", avez <= config.tolerance);
        } else {
            out.set("avez_residual", nullptr);
            out.set("avez_pass", nullptr);
        }

        JsonValue classifiers = JsonValue::object();
        for (int q = 1; q <= q_max; ++q) {
            for (int p : config.p_list) {
                if (p >= 1 && p < 2 * q) {
                    classifiers.set(
                        "einstein_p" + std::to_string(p) + "_q" + std::to_string(q),
                        classifier_json(classify_einstein(structure, p, q, config.tolerance),
                                        structure.bianchi_certified()));
                }
                if (p >= 1 && p <= 2 * q && 4 * q <= n) {
                    classifiers.set(
                        "conformal_class_p" + std::to_string(p) + "_q" + std::to_string(q),
                        classifier_json(
                            classify_conformal_class(structure, p, q, config.tolerance),
                            structure.bianchi_certified()));
                }
            }
        }
        out.set("classifiers", std::move(classifiers));
    }

    JsonValue positivity = JsonValue::object();
    if (config.run_positivity) {
        for (int p : config.p_list) {
            if (p < 0 || p > n - 2) continue;
            positivity.set("p_curvature_p" + std::to_string(p),
                           positivity_report_json(min_p_curvature(structure, p, config.samples,
                                                                  config.seed, config.tolerance)));
        }
        if (n >= 4)
            positivity.set("isotropic",
                           positivity_report_json(isotropic_check(structure, config.samples,
                                                                  config.seed, config.tolerance)));
        if (n >= 3)
            positivity.set("condition_A",
                           positivity_report_json(condition_A_check(structure, config.samples,
                                                                    config.seed, config.tolerance)));
        if (n >= 4) positivity.set("h4_sign", h4_sign(structure, config.tolerance));
    }
    out.set("positivity", std::move(positivity));

    JsonValue echo = JsonValue::object();
    echo.set("input", input_echo);
    echo.set("q_max", q_max);
    JsonValue ps = JsonValue::array();
    for (int p : config.p_list) ps.push(p);
    echo.set("p", std::move(ps));
    echo.set("tolerance", config.tolerance);
    echo.set("samples", config.samples);
    echo.set("seed", config.seed);
    out.set("config_echo", std::move(echo));
    return out;
}

} // namespace dfc
