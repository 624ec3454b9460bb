#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dfc/double_form.hpp"

namespace dfc {

using Frame = std::vector<std::vector<double>>;

/// Sampled minimum of a pointwise curvature condition. Verdicts are sampled
/// lower bounds ("no violation found in N samples"), never proofs.
struct PositivityReport {
    std::string condition;
    int samples = 0;
    double min_margin = 0.0;
    Frame witness_frame;
    std::string verdict; // "positive" | "nonnegative" | "indefinite"
};

/// Orthonormal k-frames from seeded Gram-Schmidt. Frame i depends only on
/// (seed, i), so enlarging count keeps every earlier frame identical.
std::vector<Frame> sample_frames(int n, int k, int count, std::uint64_t seed);

/// Single frame of the stream above.
Frame sample_frame(int n, int k, std::uint64_t seed, std::uint64_t index);

/// Minimum sampled p-curvature; p = 1 is the Einstein-curvature minimum and
/// p = 0 is plane-independent (h_2).
PositivityReport min_p_curvature(const CurvatureStructure& r, int p, int count,
                                 std::uint64_t seed, double tol = kDefaultTolerance);

/// Isotropic-curvature margin over sampled orthonormal 4-frames:
///   K(e1,e3)+K(e1,e4)+K(e2,e3)+K(e2,e4) - 2|R(e1,e2,e3,e4)|,
/// both orientations of the last pair swept through the absolute value.
PositivityReport isotropic_check(const CurvatureStructure& r, int count, std::uint64_t seed,
                                 double tol = kDefaultTolerance);

/// Condition (A) margin over sampled frames with every index-role assignment:
///   K(e_j,e_k)+K(e_j,e_l) - |R(e_i,e_j,e_k,e_l)|.
PositivityReport condition_A_check(const CurvatureStructure& r, int count, std::uint64_t seed,
                                   double tol = kDefaultTolerance);

/// Replays the report's witness frame against its condition; used by the
/// replay invariant of the suites.
double replay_margin(const CurvatureStructure& r, const PositivityReport& report);

/// Sign of h_4 = h_{2q}|_{q=2} at tolerance; pointwise scalar, no sampling.
std::string h4_sign(const CurvatureStructure& r, double tol = kDefaultTolerance);

} // namespace dfc
