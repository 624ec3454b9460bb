#include "dfc/decomposition.hpp"

#include <algorithm>
#include <string>

namespace dfc {

ComponentList orthogonal_components(const CurvatureStructure& omega) {
    const DoubleForm& w = omega.form();
    const int n = w.n();
    const int p = w.p();
    if (2 * p > n)
        throw OutOfRange("orthogonal decomposition needs 2p <= n, got p=" + std::to_string(p) +
                         ", n=" + std::to_string(n));

    std::vector<DoubleForm> powers; // powers[j] = c^j w
    powers.reserve(static_cast<size_t>(p) + 1);
    powers.push_back(w);
    for (int j = 1; j <= p; ++j) powers.push_back(contract(powers.back(), 1));

    ComponentList out;
    out.n = n;
    out.p = p;
    out.components.resize(static_cast<size_t>(p) + 1, DoubleForm(n, 0, 0));

    out.components[0] =
        powers[static_cast<size_t>(p)] * (factorial(n - p) / (factorial(p) * factorial(n)));

    for (int k = 1; k <= p; ++k) {
        DoubleForm acc = powers[static_cast<size_t>(p - k)];
        double denom = 1.0;
        for (int r = 1; r <= k; ++r) {
            denom *= n - 2 * k + 2 + (r - 1);
            const double coeff = ((r & 1) ? -1.0 : 1.0) / (denom * factorial(r));
            acc += mul_g(powers[static_cast<size_t>(p - k + r)], r) * coeff;
        }
        const double prefactor = factorial(n - p - k) / (factorial(p - k) * factorial(n - 2 * k));
        out.components[static_cast<size_t>(k)] = acc * prefactor;
    }
    return out;
}

DoubleForm reconstruct(const ComponentList& parts) {
    const int n = parts.n;
    const int p = parts.p;
    if (static_cast<int>(parts.components.size()) != p + 1)
        throw DegreeError("component list of degree p must hold p+1 entries");
    DoubleForm out(n, p, p);
    for (int k = 0; k <= p; ++k) {
        const DoubleForm& c = parts.components[static_cast<size_t>(k)];
        if (c.n() != n || c.p() != k || c.q() != k)
            throw DegreeError("component " + std::to_string(k) + " has inconsistent bidegree");
        out += mul_g(c, p - k);
    }
    return out;
}

DoubleForm conformal_component(const CurvatureStructure& omega) {
    ComponentList parts = orthogonal_components(omega);
    return parts.components[static_cast<size_t>(parts.p)];
}

DoubleForm hodge_via_contractions(const CurvatureStructure& omega) {
    if (!omega.bianchi_certified())
        throw BianchiViolation("contraction formula for the star requires a certified structure");
    const DoubleForm& w = omega.form();
    const int n = w.n();
    const int p = w.p();
    if (p < 1 || p > n) throw OutOfRange("contraction formula needs 1 <= p <= n");

    DoubleForm out(n, n - p, n - p);
    DoubleForm contracted = w; // c^r w, starting at r = 0
    for (int r = 0; r <= p; ++r) {
        if (r > 0) contracted = contract(contracted, 1);
        if (r < std::max(0, 2 * p - n)) continue;
        const double coeff = (((r + p) & 1) ? -1.0 : 1.0) /
                             (factorial(r) * factorial(n - 2 * p + r));
        out += mul_g(contracted, n - 2 * p + r) * coeff;
    }
    return out;
}

} // namespace dfc
