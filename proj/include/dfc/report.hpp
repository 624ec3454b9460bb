#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dfc/double_form.hpp"
#include "dfc/json_writer.hpp"
#include "dfc/model_spaces.hpp"

namespace dfc {

/// Everything a run needs; flags come in through the CLI, defaults here.
struct RunConfig {
    int q_max = 0; // 0 selects floor(n/2)
    std::vector<int> p_list{1};
    double tolerance = kDefaultTolerance;
    int samples = 2000;
    std::uint64_t seed = 0;
    bool run_invariants = true;
    bool run_positivity = false;
};

struct ParsedInput {
    CurvatureStructure structure;
    JsonValue echo; // normalized description, echoed into reports
};

/// Accepts either {"model": ..., "n": ..., ...} or {"n": ..., "entries":
/// [{"i","j","k","l","value"}, ...]} with 1-based indices. Entry lists are
/// expanded through the pair symmetries of a curvature tensor; conflicting
/// assignments are rejected. The result is not required to satisfy the first
/// Bianchi identity; its residual is measured and reported.
ParsedInput parse_input(const std::string& json_text);

/// Model description without the surrounding document.
ModelSpec parse_model_spec(const std::string& json_text);

/// Invariant/positivity report for one curvature structure. Field layout is
/// part of the tool's interface; numbers carry 17 significant digits and the
/// document bytes are deterministic for fixed (input, config).
JsonValue run_report(const CurvatureStructure& structure, const RunConfig& config,
                     const JsonValue& input_echo);

} // namespace dfc
