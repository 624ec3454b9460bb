#pragma once

#include <vector>

#include "dfc/decomposition.hpp"
#include "dfc/double_form.hpp"

namespace dfc {

/// q-fold Kulkarni-Nomizu power R^q (the Gauss-Kronecker tensor of order 2q).
CurvatureStructure gauss_kronecker(const CurvatureStructure& r, int q);

/// Gauss-Bonnet-Weyl curvature h_{2q}, computed by full contraction and by
/// the dual route *(g^{n-2q} R^q)/(n-2q)!; the residual between routes is the
/// cross-check recorded by reports.
struct GbwRoutes {
    double value;      // c^{2q} R^q / (2q)!
    double dual_value; // *(g^{n-2q} R^q) / (n-2q)!
    double residual;
};
GbwRoutes gbw_curvature_routes(const CurvatureStructure& r, int q);
double gbw_curvature(const CurvatureStructure& r, int q);

/// Einstein-Lovelock tensor T_{2q} = h_{2q} g - c^{2q-1} R^q / (2q-1)!.
DoubleForm einstein_lovelock(const CurvatureStructure& r, int q);

/// Min/max eigenvalue of a symmetric (1,1) form viewed as an n x n matrix.
struct EigenSummary {
    double min_eigenvalue;
    double max_eigenvalue;
    double frobenius_norm;
};
EigenSummary eigen_summary(const DoubleForm& one_one);

/// (p,q)-curvature tensor R_{(p,q)} = *(g^{n-2q-p} R^q)/(n-2q-p)!.
CurvatureStructure pq_curvature_tensor(const CurvatureStructure& r, int p, int q);

/// Evaluation of a (p,p) form on the span of an orthonormal p-frame; the
/// normalization makes a constant-curvature structure report its lambda at
/// every 2-plane.
double sectional(const DoubleForm& form, const std::vector<std::vector<double>>& frame,
                 double tol = kDefaultTolerance);
double sectional(const CurvatureStructure& structure, const std::vector<std::vector<double>>& frame,
                 double tol = kDefaultTolerance);

/// p-curvature s_p(P): the (p,1) tensor evaluated at the plane.
double p_curvature(const CurvatureStructure& r, int p, const std::vector<std::vector<double>>& plane,
                   double tol = kDefaultTolerance);

/// Weitzenboeck curvature operator of degree p: cR for p = 1, otherwise
/// {g.cR/(p-1) - 2R} g^{p-2}/(p-2)!.
CurvatureStructure weitzenboeck(const CurvatureStructure& r, int p);

/// The three-stage decomposition of N_p assembled from the components of R;
/// reconstruct() of the result equals weitzenboeck(r, p).
ComponentList weitzenboeck_components(const CurvatureStructure& r, int p);

/// Conformally flat relation: for R = g.h this equals weitzenboeck at degree
/// (n+p)/2, built from the (p,1) curvature tensor. Parameter combinations
/// with non-integral degrees are rejected.
DoubleForm weitzenboeck_from_p_curvature(const CurvatureStructure& r, int p);

/// Alternating norm sum for h_{4q} at n = 4q:
///   h_{4q} = sum_r (-1)^r / (r!)^2 |c^r R^q|^2.
double avez_h4q(const CurvatureStructure& r, int q);

/// h_{4q} from the components of R^q, valid for all n >= 4q:
///   (n-4q)! h_{4q} = sum_i (-1)^i (n-2i)! |(R^q)_i|^2.
double h4q_component_formula(const CurvatureStructure& r, int q);

/// q = 1 case: (n-4)! h_4 = n!|w0|^2 - (n-2)!|w1|^2 + (n-4)!|w2|^2.
double h4_component_formula(const CurvatureStructure& r);

/// Proportionality verdicts. Both routes are reported where available; the
/// margin fields let callers see how decisively a verdict holds.
struct ClassifierResult {
    bool verdict;
    double lambda;              // fitted proportionality constant (direct route)
    double direct_residual;     // relative residual of the least-squares fit
    double component_residual;  // relative norm of the banned components
    bool component_route_available;
    bool routes_agree;
};

/// (p,q)-Einstein test: c^{2q-p}(R^q) proportional to g^p. Component route
/// (w_i = 0 for 1 <= i <= min(p, n-p)) used when 4q <= n.
ClassifierResult classify_einstein(const CurvatureStructure& r, int p, int q,
                                   double tol = kDefaultTolerance);

/// Conformal class C(p,q) test: R^q divisible by g^p, i.e. the components
/// w_i of R^q vanish for 2q-p < i <= 2q.
ClassifierResult classify_conformal_class(const CurvatureStructure& r, int p, int q,
                                          double tol = kDefaultTolerance);

} // namespace dfc
