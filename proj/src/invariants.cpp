#include "dfc/invariants.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <string>

namespace dfc {

CurvatureStructure gauss_kronecker(const CurvatureStructure& r, int q) {
    if (r.degree() != 2) throw DegreeError("Gauss-Kronecker powers start from a (2,2) structure");
    if (q < 1 || 2 * q > r.n())
        throw OutOfRange("Gauss-Kronecker power needs 1 <= 2q <= n, got q=" + std::to_string(q));
    // Certification is not enforced here: reports run on raw inputs and carry
    // a warning instead. The wrap below re-measures the residual either way.
    DoubleForm acc = r.form();
    for (int i = 1; i < q; ++i) acc = kn_product(acc, r.form());
    return CurvatureStructure(acc, r.tolerance());
}

GbwRoutes gbw_curvature_routes(const CurvatureStructure& r, int q) {
    const int n = r.n();
    if (q < 1 || 2 * q > n)
        throw OutOfRange("h_{2q} needs 1 <= 2q <= n, got q=" + std::to_string(q));
    const DoubleForm rq = gauss_kronecker(r, q).form();
    const double by_contraction = contract(rq, 2 * q).as_scalar() / factorial(2 * q);
    const double by_dual = hodge(mul_g(rq, n - 2 * q)).as_scalar() / factorial(n - 2 * q);
    return {by_contraction, by_dual, std::abs(by_contraction - by_dual)};
}

double gbw_curvature(const CurvatureStructure& r, int q) {
    return gbw_curvature_routes(r, q).value;
}

DoubleForm einstein_lovelock(const CurvatureStructure& r, int q) {
    const int n = r.n();
    if (q < 1 || 2 * q > n)
        throw OutOfRange("T_{2q} needs 1 <= 2q <= n, got q=" + std::to_string(q));
    const DoubleForm rq = gauss_kronecker(r, q).form();
    const double h2q = contract(rq, 2 * q).as_scalar() / factorial(2 * q);
    return g_power(n, 1) * h2q - contract(rq, 2 * q - 1) * (1.0 / factorial(2 * q - 1));
}

EigenSummary eigen_summary(const DoubleForm& one_one) {
    if (one_one.p() != 1 || one_one.q() != 1)
        throw DegreeError("eigen summary is defined for (1,1) forms");
    const int n = one_one.n();
    Eigen::MatrixXd m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = one_one.at(i, j);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(0.5 * (m + m.transpose()));
    const auto& ev = solver.eigenvalues();
    return {ev.minCoeff(), ev.maxCoeff(), m.norm()};
}

CurvatureStructure pq_curvature_tensor(const CurvatureStructure& r, int p, int q) {
    const int n = r.n();
    if (q < 1 || 2 * q > n || p < 0 || p > n - 2 * q)
        throw OutOfRange("(p,q)-curvature tensor needs 1 <= q <= n/2 and 0 <= p <= n-2q");
    const DoubleForm rq = gauss_kronecker(r, q).form();
    return CurvatureStructure(hodge(mul_g(rq, n - 2 * q - p)) * (1.0 / factorial(n - 2 * q - p)),
                              r.tolerance());
}

double sectional(const DoubleForm& form, const std::vector<std::vector<double>>& frame,
                 double tol) {
    if (form.p() != form.q()) throw DegreeError("sectional curvature needs a (p,p) form");
    if (static_cast<int>(frame.size()) != form.p())
        throw InvalidFrame("frame size does not match the form degree");
    for (size_t i = 0; i < frame.size(); ++i) {
        if (static_cast<int>(frame[i].size()) != form.n())
            throw InvalidFrame("frame vector length does not match dimension");
        for (size_t j = 0; j <= i; ++j) {
            double dot = 0.0;
            for (size_t k = 0; k < frame[i].size(); ++k) dot += frame[i][k] * frame[j][k];
            const double expected = (i == j) ? 1.0 : 0.0;
            if (std::abs(dot - expected) > std::max(tol, 1e-9))
                throw InvalidFrame("frame is not orthonormal");
        }
    }
    return eval_frame(form, frame, frame);
}

double sectional(const CurvatureStructure& structure, const std::vector<std::vector<double>>& frame,
                 double tol) {
    return sectional(structure.form(), frame, tol);
}

double p_curvature(const CurvatureStructure& r, int p, const std::vector<std::vector<double>>& plane,
                   double tol) {
    const int n = r.n();
    if (p < 0 || p > n - 2) throw OutOfRange("p-curvature needs 0 <= p <= n-2");
    return sectional(pq_curvature_tensor(r, p, 1), plane, tol);
}

CurvatureStructure weitzenboeck(const CurvatureStructure& r, int p) {
    const int n = r.n();
    if (r.degree() != 2) throw DegreeError("Weitzenboeck operator starts from a (2,2) structure");
    if (p == 1) return CurvatureStructure(contract(r.form(), 1), r.tolerance());
    if (p < 2 || p > n - 2)
        throw OutOfRange("Weitzenboeck degree needs p = 1 or 2 <= p <= n-2, got " +
                         std::to_string(p));
    const DoubleForm ricci = contract(r.form(), 1);
    const DoubleForm core = mul_g(ricci, 1) * (1.0 / (p - 1)) - r.form() * 2.0;
    return CurvatureStructure(mul_g(core, p - 2) * (1.0 / factorial(p - 2)), r.tolerance());
}

ComponentList weitzenboeck_components(const CurvatureStructure& r, int p) {
    const int n = r.n();
    if (p < 2 || p > n - 2)
        throw OutOfRange("Weitzenboeck components need 2 <= p <= n-2, got " + std::to_string(p));
    ComponentList rparts = orthogonal_components(r);

    ComponentList out;
    out.n = n;
    out.p = p;
    out.components.reserve(static_cast<size_t>(p) + 1);
    for (int k = 0; k <= p; ++k) out.components.emplace_back(n, k, k);

    // N_p = (2/(p-2)!) { -g^{p-2} w2 + g^{p-1} (n-2p)/(2(p-1)) w1
    //                    + g^p (n-p)/(p-1) w0 }.
    const double scale = 2.0 / factorial(p - 2);
    out.components[0] = rparts.components[0] * (scale * (n - p) / (p - 1.0));
    out.components[1] = rparts.components[1] * (scale * (n - 2.0 * p) / (2.0 * (p - 1.0)));
    out.components[2] = rparts.components[2] * (-scale);
    return out;
}

DoubleForm weitzenboeck_from_p_curvature(const CurvatureStructure& r, int p) {
    const int n = r.n();
    if (p < 2 || (n + p) % 2 != 0 || p > n - 4)
        throw OutOfRange("conformally flat relation needs 2 <= p <= n-4 with n+p even");
    const int m = (n + p) / 2; // target Weitzenboeck degree, 2 <= m <= n-2
    const DoubleForm rp1 = pq_curvature_tensor(r, p, 1).form();
    const double constant = factorial(p) / ((n - p - 1.0) * factorial(m - 1));
    return mul_g(rp1, (n - p) / 2) * constant;
}

double avez_h4q(const CurvatureStructure& r, int q) {
    const int n = r.n();
    if (q < 1 || n != 4 * q)
        throw OutOfRange("alternating norm formula needs n = 4q, got n=" + std::to_string(n) +
                         ", q=" + std::to_string(q));
    DoubleForm power = gauss_kronecker(r, q).form(); // c^j applied in place below
    double acc = 0.0;
    for (int j = 0; j <= 2 * q; ++j) {
        if (j > 0) power = contract(power, 1);
        const double term = inner(power, power) / (factorial(j) * factorial(j));
        acc += (j & 1) ? -term : term;
    }
    return acc;
}

double h4q_component_formula(const CurvatureStructure& r, int q) {
    const int n = r.n();
    if (q < 1 || n < 4 * q)
        throw OutOfRange("component formula needs n >= 4q, got n=" + std::to_string(n) +
                         ", q=" + std::to_string(q));
    ComponentList parts = orthogonal_components(gauss_kronecker(r, q));
    double acc = 0.0;
    for (int i = 0; i <= 2 * q; ++i) {
        const DoubleForm& wi = parts.components[static_cast<size_t>(i)];
        const double term = factorial(n - 2 * i) * inner(wi, wi);
        acc += (i & 1) ? -term : term;
    }
    return acc / factorial(n - 4 * q);
}

double h4_component_formula(const CurvatureStructure& r) { return h4q_component_formula(r, 1); }

namespace {

ClassifierResult proportionality_result(const DoubleForm& candidate, const DoubleForm& target,
                                        double tol) {
    ClassifierResult res{};
    const double denom = inner(target, target);
    res.lambda = denom > 0.0 ? inner(candidate, target) / denom : 0.0;
    res.direct_residual =
        (candidate - target * res.lambda).norm() / std::max(1.0, candidate.norm());
    res.verdict = res.direct_residual <= tol;
    res.component_route_available = false;
    res.component_residual = 0.0;
    res.routes_agree = true;
    return res;
}

} // namespace

ClassifierResult classify_einstein(const CurvatureStructure& r, int p, int q, double tol) {
    const int n = r.n();
    if (q < 1 || 2 * q > n || p < 1 || p >= 2 * q)
        throw OutOfRange("(p,q)-Einstein test needs 1 <= p < 2q <= n");

    CurvatureStructure rq = gauss_kronecker(r, q);
    ClassifierResult res =
        proportionality_result(contract(rq.form(), 2 * q - p), g_power(n, p), tol);

    if (4 * q <= n) {
        ComponentList parts = orthogonal_components(rq);
        DoubleForm banned(n, 2 * q, 2 * q);
        for (int i = 1; i <= std::min(p, n - p); ++i)
            banned += mul_g(parts.components[static_cast<size_t>(i)], 2 * q - i);
        res.component_route_available = true;
        res.component_residual = banned.norm() / std::max(1.0, rq.form().norm());
        res.routes_agree = (res.component_residual <= tol) == res.verdict;
    }
    return res;
}

ClassifierResult classify_conformal_class(const CurvatureStructure& r, int p, int q, double tol) {
    const int n = r.n();
    if (q < 1 || p < 1 || p > 2 * q || 4 * q > n)
        throw OutOfRange("class C(p,q) test needs 1 <= p <= 2q and 4q <= n");

    CurvatureStructure rq = gauss_kronecker(r, q);
    ComponentList parts = orthogonal_components(rq);
    DoubleForm banned(n, 2 * q, 2 * q);
    for (int i = 2 * q - p + 1; i <= 2 * q; ++i)
        banned += mul_g(parts.components[static_cast<size_t>(i)], 2 * q - i);

    ClassifierResult res{};
    res.component_route_available = true;
    res.component_residual = banned.norm() / std::max(1.0, rq.form().norm());
    res.verdict = res.component_residual <= tol;
    res.direct_residual = res.component_residual;
    res.lambda = 0.0;
    res.routes_agree = true;
    return res;
}

} // namespace dfc
