#pragma once

#include <vector>

#include "dfc/double_form.hpp"

namespace dfc {

/// Components of a (p,p) form along D^{p,p} = E^{p,p} + g E^{p-1,p-1} + ...
/// components[k] has bidegree (k,k); the original form is
/// sum_k g^{p-k} . components[k], and every component with k >= 1 is
/// trace-free.
struct ComponentList {
    int n = 0;
    int p = 0;
    std::vector<DoubleForm> components; // index k = 0..p

    const DoubleForm& at_degree(int k) const { return components[static_cast<size_t>(k)]; }
};

/// Explicit closed-form projection onto the orthogonal decomposition.
/// Requires 2p <= n so that every g-power stage exists.
ComponentList orthogonal_components(const CurvatureStructure& omega);

/// sum_k g^{p-k} . components[k].
DoubleForm reconstruct(const ComponentList& parts);

/// Top (trace-free) component; for p = 2 and a Riemann tensor this is the
/// Weyl part, and it depends only on the conformal class.
DoubleForm conformal_component(const CurvatureStructure& omega);

/// Hodge star computed from contractions alone,
///   *w = sum_r (-1)^{r+p}/r! . g^{n-2p+r}/(n-2p+r)! . c^r w,
/// valid for Bianchi-certified structures; cross-checked against the direct
/// star in the test suites.
DoubleForm hodge_via_contractions(const CurvatureStructure& omega);

} // namespace dfc
