#include "dfc/rng.hpp"

#include <cmath>

namespace dfc {

double Xoshiro256ss::normal() noexcept {
    // Box-Muller on two fresh uniforms; u1 is kept away from zero so the log
    // stays finite.
    double u1 = uniform();
    double u2 = uniform();
    if (u1 < 0x1.0p-53) u1 = 0x1.0p-53;
    const double two_pi = 6.283185307179586476925286766559;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
}

} // namespace dfc
