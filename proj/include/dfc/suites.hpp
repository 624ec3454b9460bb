#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dfc {

struct PropertyResult {
    std::string name;
    double worst_residual;
    double tolerance;
    bool pass;
};

/// Seeded randomized property checks, grouped by module. Known suites:
/// "algebra", "decomposition", "invariants", "positivity", "all".
/// Results are deterministic for a fixed (suite, seed, tolerance).
std::vector<PropertyResult> run_property_suite(const std::string& suite, std::uint64_t seed,
                                               double base_tolerance);

const std::vector<std::string>& suite_names();

/// Smallest singular value of the column-normalized matrix of g^k
/// multiplication D^{p,q} -> D^{p+k,q+k}; full column rank iff this is
/// bounded away from zero.
double mul_g_min_singular_value(int n, int p, int q, int k);

} // namespace dfc
