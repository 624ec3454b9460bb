#include "dfc/suites.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "dfc/decomposition.hpp"
#include "dfc/invariants.hpp"
#include "dfc/model_spaces.hpp"
#include "dfc/positivity.hpp"
#include "dfc/rng.hpp"

namespace dfc {

namespace {

double rel(double residual, double scale) { return residual / std::max(1.0, scale); }

DoubleForm random_form(Xoshiro256ss& rng, int n, int p, int q) {
    DoubleForm f(n, p, q);
    for (int r = 0; r < f.row_count(); ++r)
        for (int c = 0; c < f.col_count(); ++c) f.at(r, c) = rng.uniform_symmetric();
    return f;
}

DoubleForm random_symmetric_form(Xoshiro256ss& rng, int n, int p) {
    DoubleForm f(n, p, p);
    for (int r = 0; r < f.row_count(); ++r)
        for (int c = r; c < f.col_count(); ++c) {
            const double v = rng.uniform_symmetric();
            f.at(r, c) = v;
            f.at(c, r) = v;
        }
    return f;
}

DoubleForm random_sym_one_one(Xoshiro256ss& rng, int n) {
    return random_symmetric_form(rng, n, 1);
}

// Certified (p,p) structures: (1,1) forms are symmetric hence in the kernel,
// higher degrees come from products of certified factors.
DoubleForm random_certified_form(Xoshiro256ss& rng, int n, int p) {
    if (p == 0) return DoubleForm::scalar(n, rng.uniform_symmetric());
    if (p == 1) return random_sym_one_one(rng, n);
    DoubleForm acc = kn_product(random_sym_one_one(rng, n), random_sym_one_one(rng, n));
    for (int d = 2; d < p; ++d) acc = kn_product(acc, random_sym_one_one(rng, n));
    return acc;
}

CurvatureStructure random_riemann(Xoshiro256ss& rng, int n, int terms) {
    std::vector<DoubleForm> gens;
    gens.reserve(static_cast<size_t>(terms));
    const double scale = 1.0 / std::sqrt(static_cast<double>(terms));
    for (int t = 0; t < terms; ++t) gens.push_back(random_sym_one_one(rng, n) * scale);
    return curvature_from_squares(gens);
}

std::vector<std::vector<double>> random_schouten(Xoshiro256ss& rng, int n, bool traceless) {
    std::vector<std::vector<double>> h(static_cast<size_t>(n),
                                       std::vector<double>(static_cast<size_t>(n), 0.0));
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            const double v = rng.uniform_symmetric();
            h[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
            h[static_cast<size_t>(j)][static_cast<size_t>(i)] = v;
        }
    if (traceless) {
        double tr = 0.0;
        for (int i = 0; i < n; ++i) tr += h[static_cast<size_t>(i)][static_cast<size_t>(i)];
        for (int i = 0; i < n; ++i) h[static_cast<size_t>(i)][static_cast<size_t>(i)] -= tr / n;
    }
    return h;
}

struct SuiteContext {
    std::uint64_t seed;
    double base;
    std::uint64_t counter = 0;
    std::vector<PropertyResult> results;

    Xoshiro256ss rng() { return Xoshiro256ss(derive_stream_seed(seed, counter++)); }

    void add(const std::string& name, double tol_multiplier, double worst) {
        const double tol = base * tol_multiplier;
        results.push_back({name, worst, tol, worst <= tol});
    }
};

// ---------------------------------------------------------------------------
// algebra
// ---------------------------------------------------------------------------

void algebra_suite(SuiteContext& ctx) {
    {
        auto rng = ctx.rng();
        double worst = 0.0;
        for (int trial = 0; trial < 40; ++trial) {
            const int n = 3 + static_cast<int>(rng.next() % 4); // 3..6
            const int pa = 1 + static_cast<int>(rng.next() % 2);
            const int pb = 1 + static_cast<int>(rng.next() % 2);
            if (pa + pb > n) continue;
            const DoubleForm a = random_certified_form(rng, n, pa);
            const DoubleForm b = random_certified_form(rng, n, pb);
            const DoubleForm ab = kn_product(a, b);
            worst = std::max(worst, rel((ab - kn_product(b, a)).norm(), ab.norm()));
        }
        ctx.add("algebra/product_commutes_on_symmetric_forms", 1.0, worst);
    }
    {
        auto rng = ctx.rng();
        double worst = 0.0;
        for (int trial = 0; trial < 40; ++trial) {
            const int n = 4 + static_cast<int>(rng.next() % 2); // 4..5
            const DoubleForm a = random_form(rng, n, 1, 1);
            const DoubleForm b = random_form(rng, n, 1, 0);
            const DoubleForm c = random_form(rng, n, 1, 2);
            const DoubleForm lhs = kn_product(kn_product(a, b), c);
            const DoubleForm rhs = kn_product(a, kn_product(b, c));
            worst = std::max(worst, rel((lhs - rhs).norm(), lhs.norm()));
        }
        ctx.add("algebra/product_associative", 1.0, worst);
    }
    {
        auto rng = ctx.rng();
        double worst = 0.0;
        for (int trial = 0; trial < 120; ++trial) {
            const int n = 3 + static_cast<int>(rng.next() % 4); // 3..6
            const int k = 1 + static_cast<int>(rng.next() % 3);
            const int p = static_cast<int>(rng.next() % static_cast<std::uint64_t>(n - k + 1));
            const int q = static_cast<int>(rng.next() % static_cast<std::uint64_t>(n - k + 1));
            const DoubleForm w = random_form(rng, n, p, q);
            const DoubleForm t = random_form(rng, n, p + k, q + k);
            const double lhs = inner(mul_g(w, k), t);
            const double rhs = inner(w, contract(t, k));
            worst = std::max(worst, rel(std::abs(lhs - rhs), std::abs(lhs)));
        }
        ctx.add("algebra/adjointness_gk_ck", 1.0, worst);
    }
    {
        auto rng = ctx.rng();
        double worst = 0.0;
        for (int trial = 0; trial < 60; ++trial) {
            const int n = 3 + static_cast<int>(rng.next() % 4);
            const int p = static_cast<int>(rng.next() % static_cast<std::uint64_t>(n));
            const int q = static_cast<int>(rng.next() % static_cast<std::uint64_t>(n));
            const DoubleForm w = random_form(rng, n, p, q);
            const DoubleForm lhs = mul_g(w, 1);
            // Mixed parity carries the measured sign (-1)^{n(p+q)}; on (p,p)
            // forms, where every downstream use lives, the sign is +1.
            const double sign = (n * (p + q)) % 2 == 0 ? 1.0 : -1.0;
            const DoubleForm rhs = hodge(contract(hodge(w), 1)) * sign;
            worst = std::max(worst, rel((lhs - rhs).norm(), lhs.norm()));
        }
        // k-th power version on (p,p) forms.
        for (int trial = 0; trial < 40; ++trial) {
            const int n = 4 + static_cast<int>(rng.next() % 3); // 4..6
            const int p = 1 + static_cast<int>(rng.next() % 2);
            const int k = 1 + static_cast<int>(rng.next() % static_cast<std::uint64_t>(n - p - 1));
            if (p + k > n) continue;
            const DoubleForm w = random_symmetric_form(rng, n, p);
            const DoubleForm lhs = mul_g(w, k);
            const DoubleForm rhs = hodge(contract(hodge(w), k));
            worst = std::max(worst, rel((lhs - rhs).norm(), lhs.norm()));
        }
        ctx.add("algebra/star_contraction_identity", 1.0, worst);
    }
    {
        auto rng = ctx.rng();
        double worst = 0.0;
        for (int n = 2; n <= 4; ++n)
            for (int p = 0; p <= n; ++p)
                for (int q = 0; q <= n; ++q) {
                    const DoubleForm w = random_form(rng, n, p, q);
                    const double sign = ((p + q) * (n - p - q)) % 2 == 0 ? 1.0 : -1.0;
                    worst = std::max(worst, rel((hodge(hodge(w)) - w * sign).norm(), w.norm()));
                }
        ctx.add("algebra/double_star_sign", 1.0, worst);
    }
    {
        auto rng = ctx.rng();
        double worst = 0.0;
        for (int n = 2; n <= 4; ++n)
            for (int p = 0; p <= n; ++p)
                for (int q = 0; q <= n; ++q) {
                    const DoubleForm w = random_form(rng, n, p, q);
                    const double sign = (p * (n - p)) % 2 == 0 ? 1.0 : -1.0;
                    worst = std::max(
                        worst, rel((hodge_left(hodge_left(w)) - w * sign).norm(), w.norm()));
                    worst = std::max(
                        worst, rel((hodge_right(hodge_left(w)) - hodge(w)).norm(), w.norm()));
                }
        ctx.add("algebra/factor_star_signs_and_composition", 1.0, worst);
    }
    {
        auto rng = ctx.rng();
        double worst = 0.0;
        for (int trial = 0; trial < 60; ++trial) {
            const int n = 3 + static_cast<int>(rng.next() % 4);
            const int p = 1 + static_cast<int>(rng.next() % static_cast<std::uint64_t>(n - 1));
            const int q = 1 + static_cast<int>(rng.next() % static_cast<std::uint64_t>(n - 1));
            const DoubleForm w = random_form(rng, n, p, q);
            const DoubleForm lhs = contract(mul_g(w, 1), 1);
            const DoubleForm rhs = mul_g(contract(w, 1), 1) + w * static_cast<double>(n - p - q);
            worst = std::max(worst, rel((lhs - rhs).norm(), lhs.norm()));
        }
        ctx.add("algebra/contraction_commutator_first_order", 1.0, worst);
    }
    {
        auto rng = ctx.rng();
        double worst = 0.0;
        for (int trial = 0; trial < 30; ++trial) {
            const int n = 4 + static_cast<int>(rng.next() % 3);
            const DoubleForm a = random_certified_form(rng, n, 1);
            const DoubleForm b = random_certified_form(rng, n, 2);
            worst = std::max(worst, bianchi_residual(kn_product(a, b)));
        }
        ctx.add("algebra/bianchi_kernel_closed_under_product", 1.0, worst);
    }
    {
        auto rng = ctx.rng();
        double worst = 0.0;
        for (int trial = 0; trial < 30; ++trial) {
            const int n = 4 + static_cast<int>(rng.next() % 3);
            const int p = 1 + static_cast<int>(rng.next() % 2);
            const DoubleForm certified = random_certified_form(rng, n, p);
            worst = std::max(worst, bianchi_residual(hodge(certified)));
            if (p == 2) {
                const DoubleForm generic = random_symmetric_form(rng, n, p);
                if (bianchi_residual(generic) > 1e-2 && bianchi_residual(hodge(generic)) < 1e-6)
                    worst = std::max(worst, 1.0);
            }
        }
        ctx.add("algebra/star_preserves_bianchi_kernel_both_ways", 1.0, worst);
    }
    {
        double min_sv = 1.0;
        double boundary_excess = 0.0;
        for (int n = 2; n <= 5; ++n)
            for (int p = 0; p <= n; ++p)
                for (int q = 0; q <= n; ++q)
                    for (int k = 1; p + q + k < n + 1; ++k) {
                        if (p + k > n || q + k > n) continue;
                        min_sv = std::min(min_sv, mul_g_min_singular_value(n, p, q, k));
                    }
        // One step past the hypothesis: p+q+k = n+1 shows a genuine kernel.
        boundary_excess = std::max(0.0, mul_g_min_singular_value(4, 2, 2, 1) - 1e-8);
        ctx.add("algebra/mul_g_injective_in_range", 1.0, std::max(0.0, 1e-8 - min_sv));
        ctx.add("algebra/mul_g_boundary_rank_deficit", 1.0, boundary_excess);
    }
}

// ---------------------------------------------------------------------------
// decomposition
// ---------------------------------------------------------------------------

void decomposition_suite(SuiteContext& ctx) {
    {
        auto rng = ctx.rng();
        double worst_roundtrip = 0.0;
        double worst_trace = 0.0;
        double worst_orth = 0.0;
        for (int trial = 0; trial < 60; ++trial) {
            const int n = 4 + static_cast<int>(rng.next() % 3); // 4..6
            const int p = 1 + static_cast<int>(rng.next() % static_cast<std::uint64_t>(n / 2));
            const CurvatureStructure w(random_symmetric_form(rng, n, p));
            const ComponentList parts = orthogonal_components(w);
            worst_roundtrip = std::max(
                worst_roundtrip, rel((reconstruct(parts) - w.form()).norm(), w.form().norm()));
            for (int k = 1; k <= p; ++k)
                worst_trace = std::max(
                    worst_trace,
                    rel(contract(parts.components[static_cast<size_t>(k)], 1).norm(),
                        w.form().norm()));
            for (int i = 0; i <= p; ++i)
                for (int j = i + 1; j <= p; ++j)
                    worst_orth = std::max(
                        worst_orth,
                        rel(std::abs(inner(mul_g(parts.components[static_cast<size_t>(i)], p - i),
                                           mul_g(parts.components[static_cast<size_t>(j)], p - j))),
                            inner(w.form(), w.form())));
        }
        ctx.add("decomposition/roundtrip_reconstruct", 0.1, worst_roundtrip);
        ctx.add("decomposition/components_trace_free", 0.1, worst_trace);
        ctx.add("decomposition/components_orthogonal", 0.1, worst_orth);
    }
    {
        auto rng = ctx.rng();
        double worst = 0.0;
        for (int trial = 0; trial < 30; ++trial) {
            const int n = 4 + static_cast<int>(rng.next() % 3);
            const CurvatureStructure r = random_riemann(rng, n, n);
            const ComponentList parts = orthogonal_components(r);
            const DoubleForm ricci = contract(r.form(), 1);
            const double scal = contract(ricci, 1).as_scalar();
            // Classical Weyl / traceless-Ricci / scalar pieces.
            const DoubleForm w1_expected =
                (ricci - g_power(n, 1) * (scal / n)) * (1.0 / (n - 2));
            const double w0_expected = scal / (2.0 * n * (n - 1));
            const DoubleForm weyl_expected =
                r.form() - mul_g(w1_expected, 1) - g_power(n, 2) * w0_expected;
            worst = std::max(worst, rel((parts.components[1] - w1_expected).norm(),
                                        r.form().norm()));
            worst = std::max(worst,
                             rel(std::abs(parts.components[0].as_scalar() - w0_expected), 1.0));
            worst = std::max(worst, rel((parts.components[2] - weyl_expected).norm(),
                                        r.form().norm()));
        }
        ctx.add("decomposition/classical_riemann_split", 1.0, worst);
    }
    {
        auto rng = ctx.rng();
        double worst = 0.0;
        for (int trial = 0; trial < 30; ++trial) {
            const int n = 3 + static_cast<int>(rng.next() % 4); // 3..6
            const int p = 1 + static_cast<int>(rng.next() % 3); // 1..3
            if (p > n) continue;
            const CurvatureStructure w(random_certified_form(rng, n, p));
            worst = std::max(
                worst, rel((hodge_via_contractions(w) - hodge(w.form())).norm(), w.form().norm()));
        }
        ctx.add("decomposition/star_via_contractions", 1.0, worst);
    }
    {
        auto rng = ctx.rng();
        double worst = 0.0;
        for (int trial = 0; trial < 20; ++trial) {
            const int n = 4 + static_cast<int>(rng.next() % 3);
            const int p = 1 + static_cast<int>(rng.next() % static_cast<std::uint64_t>(n / 2));
            DoubleForm form = random_certified_form(rng, n, p);
            if (p >= 2) form += mul_g(random_certified_form(rng, n, p - 1), 1);
            const CurvatureStructure w(form);
            const ComponentList parts = orthogonal_components(w);
            DoubleForm star_expected(n, n - p, n - p);
            for (int i = 0; i <= std::min(p, n - p); ++i) {
                const double coeff = factorial(p - i) * ((i & 1) ? -1.0 : 1.0) /
                                     factorial(n - p - i);
                star_expected +=
                    mul_g(parts.components[static_cast<size_t>(i)], n - p - i) * coeff;
            }
            worst = std::max(worst,
                             rel((hodge(w.form()) - star_expected).norm(), w.form().norm()));
        }
        ctx.add("decomposition/star_componentwise_formula", 1.0, worst);
    }
    {
        auto rng = ctx.rng();
        double worst = 0.0;
        for (int trial = 0; trial < 10; ++trial) {
            const int n = 4 + static_cast<int>(rng.next() % 3);
            worst = std::max(worst, conformal_component(constant_curvature(n, 1.5)).norm());
            worst = std::max(
                worst, conformal_component(conformally_flat(random_schouten(rng, n, false))).norm());
        }
        ctx.add("decomposition/conformal_models_have_no_top_component", 1.0, worst);
    }
}

// ---------------------------------------------------------------------------
// invariants
// ---------------------------------------------------------------------------

void invariants_suite(SuiteContext& ctx) {
    {
        auto rng = ctx.rng();
        double worst = 0.0;
        for (int trial = 0; trial < 24; ++trial) {
            const int n = 4 + static_cast<int>(rng.next() % 5); // 4..8
            const CurvatureStructure r = random_riemann(rng, n, n);
            for (int q = 1; 2 * q <= n; ++q) {
                const GbwRoutes routes = gbw_curvature_routes(r, q);
                worst = std::max(worst, rel(routes.residual, std::abs(routes.value)));
            }
        }
        ctx.add("invariants/h2q_contraction_vs_dual_route", 1.0, worst);
    }
    {
        auto rng = ctx.rng();
        double worst = 0.0;
        for (int trial = 0; trial < 30; ++trial) {
            const CurvatureStructure r = random_riemann(rng, 4, 4);
            worst = std::max(worst, rel(std::abs(avez_h4q(r, 1) - gbw_curvature(r, 2)), 1.0));
        }
        for (int trial = 0; trial < 4; ++trial) {
            const CurvatureStructure r = random_riemann(rng, 8, 6);
            const double h8 = gbw_curvature(r, 4);
            worst = std::max(worst, rel(std::abs(avez_h4q(r, 2) - h8), std::abs(h8)));
            worst = std::max(worst,
                             rel(std::abs(h4q_component_formula(r, 2) - h8), std::abs(h8)));
        }
        ctx.add("invariants/avez_alternating_norm_sum", 1.0, worst);
    }
    {
        auto rng = ctx.rng();
        double worst = 0.0;
        for (int trial = 0; trial < 24; ++trial) {
            const int n = 4 + static_cast<int>(rng.next() % 5);
            const CurvatureStructure r = random_riemann(rng, n, n);
            worst = std::max(
                worst, rel(std::abs(h4_component_formula(r) - gbw_curvature(r, 2)), 1.0));
        }
        ctx.add("invariants/h4_component_formula", 1.0, worst);
    }
    {
        auto rng = ctx.rng();
        double worst_sign = 0.0;
        double worst_flat = 0.0;
        for (int trial = 0; trial < 30; ++trial) {
            const int n = 4 + static_cast<int>(rng.next() % 5);
            const CurvatureStructure r = random_einstein(n, rng.next());
            const double h4 = h4_component_formula(r);
            worst_sign = std::max(worst_sign, -h4);
            if (h4 < ctx.base && r.form().norm() > 1e-3) worst_flat = std::max(worst_flat, 1.0);
        }
        ctx.add("invariants/einstein_h4_nonnegative", 1.0, worst_sign);
        ctx.add("invariants/einstein_h4_zero_only_if_flat", 1.0, worst_flat);

        auto rng2 = ctx.rng();
        double worst_cf = 0.0;
        for (int trial = 0; trial < 30; ++trial) {
            const int n = 4 + static_cast<int>(rng2.next() % 5);
            const CurvatureStructure r = conformally_flat(random_schouten(rng2, n, true));
            worst_cf = std::max(worst_cf, h4_component_formula(r));
        }
        ctx.add("invariants/scalar_flat_conformally_flat_h4_nonpositive", 1.0, worst_cf);
    }
    {
        auto rng = ctx.rng();
        double worst_star = 0.0;
        double worst_contr = 0.0;
        double worst_sect = 0.0;
        double worst_comp = 0.0;
        for (int trial = 0; trial < 12; ++trial) {
            const int n = 4 + static_cast<int>(rng.next() % 5); // 4..8
            const CurvatureStructure r = random_riemann(rng, n, n);
            const double scal2 = contract(r.form(), 2).as_scalar();
            for (int p = 2; p <= n - 2; ++p) {
                const CurvatureStructure np = weitzenboeck(r, p);
                worst_star = std::max(
                    worst_star, rel((hodge(np.form()) - weitzenboeck(r, n - p).form()).norm(),
                                    np.form().norm()));
                const double expected = p * factorial(n - 2) / factorial(n - p - 1) * scal2;
                worst_contr = std::max(
                    worst_contr,
                    rel(std::abs(contract(np.form(), p).as_scalar() - expected),
                        std::abs(expected)));
                worst_comp = std::max(
                    worst_comp,
                    rel((reconstruct(weitzenboeck_components(r, p)) - np.form()).norm(),
                        np.form().norm()));
                for (int s = 0; s < 4; ++s) {
                    const Frame full = sample_frame(n, n, ctx.seed + trial, static_cast<std::uint64_t>(s));
                    Frame plane(full.begin(), full.begin() + p);
                    double sum = 0.0;
                    for (int a = 0; a < p; ++a)
                        for (int b = p; b < n; ++b)
                            sum += eval_frame(r.form(),
                                              {full[static_cast<size_t>(a)], full[static_cast<size_t>(b)]},
                                              {full[static_cast<size_t>(a)], full[static_cast<size_t>(b)]});
                    worst_sect = std::max(
                        worst_sect, rel(std::abs(sectional(np, plane) - sum), std::abs(sum)));
                }
            }
        }
        ctx.add("invariants/weitzenboeck_star_duality", 10.0, worst_star);
        ctx.add("invariants/weitzenboeck_full_contraction", 10.0, worst_contr);
        ctx.add("invariants/weitzenboeck_sectional_split_sum", 10.0, worst_sect);
        ctx.add("invariants/weitzenboeck_component_assembly", 1.0, worst_comp);
    }
    {
        auto rng = ctx.rng();
        double worst = 0.0;
        for (int trial = 0; trial < 10; ++trial) {
            const int n = 6 + 2 * static_cast<int>(rng.next() % 2); // 6 or 8
            const CurvatureStructure r = conformally_flat(random_schouten(rng, n, false));
            for (int p = 2; p <= n - 4; p += 2) {
                if ((n + p) % 2 != 0) continue;
                const DoubleForm lhs = weitzenboeck(r, (n + p) / 2).form();
                const DoubleForm rhs = weitzenboeck_from_p_curvature(r, p);
                worst = std::max(worst, rel((lhs - rhs).norm(), lhs.norm()));
            }
        }
        ctx.add("invariants/weitzenboeck_conformally_flat_relation", 10.0, worst);
    }
    {
        auto rng = ctx.rng();
        double worst = 0.0;
        for (int trial = 0; trial < 10; ++trial)
            for (int n : {4, 6}) {
                const CurvatureStructure r = random_riemann(rng, n, n);
                worst = std::max(worst, einstein_lovelock(r, n / 2).norm());
            }
        ctx.add("invariants/lovelock_vanishes_in_critical_dimension", 1.0, worst);
    }
    {
        auto rng = ctx.rng();
        double worst_diff = 0.0;
        double worst_sum = 0.0;
        double worst_cf = 0.0;
        for (int trial = 0; trial < 6; ++trial) {
            const int n = 4 + static_cast<int>(rng.next() % 4); // 4..7
            const CurvatureStructure einstein = random_einstein(n, rng.next());
            const double scal2 = contract(einstein.form(), 2).as_scalar();
            for (int p = 2; p <= n - 2; ++p) {
                const double expected = (n - 2.0 * p) / (2.0 * n) * scal2;
                for (int s = 0; s < 6; ++s) {
                    const Frame full =
                        sample_frame(n, n, ctx.seed ^ 0x5eedu, static_cast<std::uint64_t>(16 * trial + s));
                    const Frame plane(full.begin(), full.begin() + p);
                    const Frame coplane(full.begin() + p, full.end());
                    const double diff =
                        p_curvature(einstein, p, plane) - p_curvature(einstein, n - p, coplane);
                    worst_diff = std::max(worst_diff,
                                          rel(std::abs(diff - expected), std::abs(expected)));
                }
            }

            const double lambda = rng.uniform_symmetric();
            const CurvatureStructure constant = constant_curvature(n, lambda == 0 ? 1.0 : lambda);
            const double cscal2 = contract(constant.form(), 2).as_scalar();
            for (int p = 2; p <= n - 2; ++p) {
                const double expected =
                    (2.0 * p * (p - 1) + (n - 2.0 * p) * (n - 1)) / (2.0 * n * (n - 1)) * cscal2;
                const Frame full = sample_frame(n, n, ctx.seed ^ 0xc0u, static_cast<std::uint64_t>(trial));
                const Frame plane(full.begin(), full.begin() + p);
                const Frame coplane(full.begin() + p, full.end());
                const double sum =
                    p_curvature(constant, p, plane) + p_curvature(constant, n - p, coplane);
                worst_sum =
                    std::max(worst_sum, rel(std::abs(sum - expected), std::abs(expected)));
            }
        }
        for (int trial = 0; trial < 6; ++trial) {
            const int n = 4 + 2 * static_cast<int>(rng.next() % 2); // 4 or 6, n = 2p
            const int p = n / 2;
            const CurvatureStructure r = conformally_flat(random_schouten(rng, n, false));
            const double expected =
                (n - 2.0) / (4.0 * (n - 1)) * contract(r.form(), 2).as_scalar();
            for (int s = 0; s < 6; ++s) {
                const Frame full =
                    sample_frame(n, n, ctx.seed ^ 0xcfu, static_cast<std::uint64_t>(8 * trial + s));
                const Frame plane(full.begin(), full.begin() + p);
                const Frame coplane(full.begin() + p, full.end());
                const double sum = p_curvature(r, p, plane) + p_curvature(r, p, coplane);
                worst_cf = std::max(worst_cf, rel(std::abs(sum - expected), std::abs(expected)));
            }
        }
        ctx.add("invariants/einstein_p_curvature_difference", 10.0, worst_diff);
        ctx.add("invariants/constant_p_curvature_sum", 10.0, worst_sum);
        ctx.add("invariants/conformally_flat_half_dimension_sum", 10.0, worst_cf);
    }
    {
        auto rng = ctx.rng();
        double worst = 0.0;
        for (int trial = 0; trial < 8; ++trial) {
            const int n = 4 + static_cast<int>(rng.next() % 4); // 4..7
            const CurvatureStructure r = random_riemann(rng, n, n);
            const double h2 = gbw_curvature(r, 1);
            // s_(0,1) is h_2 regardless of sampling.
            worst = std::max(worst, rel(std::abs(p_curvature(r, 0, {}) - h2), std::abs(h2)));
            const Frame full = sample_frame(n, n, ctx.seed ^ 0xabu, static_cast<std::uint64_t>(trial));
            // s_(n-2,1) at a plane is the sectional curvature of the orthogonal plane.
            const Frame plane(full.begin(), full.begin() + (n - 2));
            const Frame coplane(full.begin() + (n - 2), full.end());
            const double k = eval_frame(r.form(), coplane, coplane);
            worst = std::max(worst,
                             rel(std::abs(p_curvature(r, n - 2, plane) - k), std::abs(k)));
            // s_(1,1) along a direction is the Einstein tensor evaluated there.
            const Frame dir(full.begin(), full.begin() + 1);
            const double t2 = eval_frame(einstein_lovelock(r, 1), dir, dir);
            worst = std::max(worst, rel(std::abs(p_curvature(r, 1, dir) - t2), std::abs(t2)));
        }
        ctx.add("invariants/pq_tensor_special_cases", 10.0, worst);
    }
    {
        auto rng = ctx.rng();
        double worst = 0.0;
        for (int trial = 0; trial < 6; ++trial) {
            const int n = 4 + static_cast<int>(rng.next() % 3); // 4..6
            const CurvatureStructure constant = constant_curvature(n, 0.5 + rng.uniform());
            const CurvatureStructure generic = random_riemann(rng, n, n);
            const CurvatureStructure einstein = random_einstein(n, rng.next());
            const CurvatureStructure cflat = conformally_flat(random_schouten(rng, n, false));

            if (!classify_einstein(constant, 1, 1).verdict) worst = 1.0;
            if (classify_einstein(generic, 1, 1).verdict) worst = 1.0;
            if (!classify_einstein(einstein, 1, 1).verdict) worst = 1.0;
            if (!classify_einstein(constant, 1, 1).routes_agree) worst = 1.0;
            if (!classify_einstein(generic, 1, 1).routes_agree) worst = 1.0;
            if (!classify_conformal_class(cflat, 1, 1).verdict) worst = 1.0;
            if (classify_conformal_class(generic, 1, 1).verdict) worst = 1.0;
            if (!classify_conformal_class(constant, 2, 1).verdict) worst = 1.0;
        }
        ctx.add("invariants/classifier_model_verdicts", 1.0, worst);
    }
    {
        auto rng = ctx.rng();
        double worst = 0.0;
        for (int trial = 0; trial < 10; ++trial) {
            const int n = 4 + static_cast<int>(rng.next() % 5);
            const CurvatureStructure r = random_riemann(rng, n, n);
            for (int q = 1; 2 * q <= n; ++q)
                worst = std::max(worst, gauss_kronecker(r, q).bianchi_residual());
        }
        ctx.add("invariants/gauss_kronecker_bianchi_certified", 1.0, worst);
    }
}

// ---------------------------------------------------------------------------
// positivity
// ---------------------------------------------------------------------------

void positivity_suite(SuiteContext& ctx) {
    {
        auto rng = ctx.rng();
        double worst = 0.0;
        for (int trial = 0; trial < 20; ++trial) {
            const int n = 3 + static_cast<int>(rng.next() % 6); // 3..8
            const int k = 1 + static_cast<int>(rng.next() % static_cast<std::uint64_t>(n));
            const Frame f = sample_frame(n, k, ctx.seed + 7, static_cast<std::uint64_t>(trial));
            for (size_t i = 0; i < f.size(); ++i)
                for (size_t j = 0; j <= i; ++j) {
                    double dot = 0.0;
                    for (int x = 0; x < n; ++x)
                        dot += f[i][static_cast<size_t>(x)] * f[j][static_cast<size_t>(x)];
                    worst = std::max(worst, std::abs(dot - (i == j ? 1.0 : 0.0)));
                }
        }
        ctx.add("positivity/sampled_frames_orthonormal", 0.001, worst);
    }
    {
        auto rng = ctx.rng();
        double worst = 0.0;
        for (int trial = 0; trial < 8; ++trial) {
            const int n = 4 + static_cast<int>(rng.next() % 3);
            const CurvatureStructure r = conformally_flat(random_schouten(rng, n, false));
            const PositivityReport iso = isotropic_check(r, 100, ctx.seed + trial);
            worst = std::max(worst, std::abs(replay_margin(r, iso) - iso.min_margin));
            const PositivityReport pc = min_p_curvature(r, 1, 100, ctx.seed + trial);
            worst = std::max(worst, std::abs(replay_margin(r, pc) - pc.min_margin));
            const PositivityReport ca = condition_A_check(r, 50, ctx.seed + trial);
            worst = std::max(worst, std::abs(replay_margin(r, ca) - ca.min_margin));
        }
        ctx.add("positivity/witness_replay", 0.1, worst);
    }
    {
        auto rng = ctx.rng();
        double worst = 0.0;
        for (int trial = 0; trial < 6; ++trial) {
            const int n = 4 + static_cast<int>(rng.next() % 3);
            const CurvatureStructure r = random_riemann(rng, n, n);
            const double m1 = min_p_curvature(r, 2, 200, ctx.seed).min_margin;
            const double m2 = min_p_curvature(r, 2, 400, ctx.seed).min_margin;
            worst = std::max(worst, m2 - m1); // refining can only decrease the minimum
        }
        ctx.add("positivity/monotone_refinement", 1.0, worst);
    }
    {
        double worst = 0.0;
        for (int n : {4, 5, 6}) {
            const double lambda = 1.25;
            const CurvatureStructure r = constant_curvature(n, lambda);
            for (int p = 0; p <= n - 2; ++p) {
                const double expected = lambda / 2.0 * (n - p) * (n - p - 1);
                const double got = min_p_curvature(r, p, 50, 11).min_margin;
                worst = std::max(worst, rel(std::abs(got - expected), std::abs(expected)));
            }
            const PositivityReport iso = isotropic_check(r, 50, 11);
            worst = std::max(worst, std::abs(iso.min_margin - 4 * lambda));
            const PositivityReport ca = condition_A_check(r, 50, 11);
            worst = std::max(worst, std::abs(ca.min_margin - 2 * lambda));
            if (iso.verdict != "positive" || ca.verdict != "positive") worst = 1.0;
            if (condition_A_check(constant_curvature(n, -1.0), 50, 11).verdict != "indefinite")
                worst = 1.0;
        }
        // Dimension-3 reading of condition (A): constant positive curvature
        // still has margin 2 lambda.
        const PositivityReport ca3 = condition_A_check(constant_curvature(3, 1.0), 50, 11);
        worst = std::max(worst, std::abs(ca3.min_margin - 2.0));
        ctx.add("positivity/constant_curvature_margins", 10.0, worst);
    }
    {
        double worst = 0.0;
        const CurvatureStructure flat = constant_curvature(5, 0.0);
        for (int p = 0; p <= 3; ++p) {
            const PositivityReport rep = min_p_curvature(flat, p, 20, 3);
            worst = std::max(worst, std::abs(rep.min_margin));
            if (rep.verdict != "nonnegative") worst = 1.0;
        }
        worst = std::max(worst, std::abs(isotropic_check(flat, 20, 3).min_margin));
        ctx.add("positivity/flat_margins_vanish", 1.0, worst);
    }
    {
        auto rng = ctx.rng();
        double worst = 0.0;
        if (h4_sign(constant_curvature(4, 1.0)) != "positive") worst = 1.0;
        if (h4_sign(constant_curvature(6, -2.0)) != "positive") worst = 1.0;
        if (h4_sign(constant_curvature(4, 0.0)) != "zero") worst = 1.0;
        for (int trial = 0; trial < 6; ++trial) {
            const int n = 4 + static_cast<int>(rng.next() % 5);
            if (h4_sign(random_einstein(n, rng.next())) == "negative") worst = 1.0;
        }
        ctx.add("positivity/h4_sign_model_verdicts", 1.0, worst);
    }
    {
        // One-directional filter: nonnegative sampled p-curvature at some
        // p >= n/2 should never come with negative h_4.
        auto rng = ctx.rng();
        double worst = 0.0;
        std::vector<CurvatureStructure> zoo;
        zoo.push_back(constant_curvature(4, 1.0));
        zoo.push_back(constant_curvature(6, -1.0));
        zoo.push_back(hypersurface({1.0, 2.0, 0.5, 1.5, 1.0}));
        zoo.push_back(random_riemann(rng, 5, 5));
        zoo.push_back(random_einstein(6, rng.next()));
        zoo.push_back(conformally_flat(random_schouten(rng, 4, false)));
        for (const auto& r : zoo) {
            const int n = r.n();
            if (n < 4) continue;
            const double h4 = gbw_curvature(r, 2);
            for (int p = (n + 1) / 2; p <= n - 2; ++p) {
                const PositivityReport rep = min_p_curvature(r, p, 200, ctx.seed + 5);
                if (rep.min_margin >= 0.0 && h4 < -ctx.base) worst = 1.0;
            }
        }
        ctx.add("positivity/p_curvature_h4_filter", 1.0, worst);
    }
}

} // namespace

double mul_g_min_singular_value(int n, int p, int q, int k) {
    const int rows = static_cast<int>(binomial(n, p + k)) * static_cast<int>(binomial(n, q + k));
    const int cols = static_cast<int>(binomial(n, p)) * static_cast<int>(binomial(n, q));
    if (rows <= 0 || cols <= 0) return 0.0;
    if (rows < cols) return 0.0; // fewer rows than columns: no full column rank
    Eigen::MatrixXd m(rows, cols);
    int col = 0;
    for (int r = 0; r < static_cast<int>(binomial(n, p)); ++r)
        for (int c = 0; c < static_cast<int>(binomial(n, q)); ++c) {
            DoubleForm basis_form(n, p, q);
            basis_form.at(r, c) = 1.0;
            const DoubleForm image = mul_g(basis_form, k);
            const auto& coeffs = image.coefficients();
            for (int i = 0; i < rows; ++i) m(i, col) = coeffs[static_cast<size_t>(i)];
            ++col;
        }
    for (int c = 0; c < cols; ++c) {
        const double norm = m.col(c).norm();
        if (norm > 0.0) m.col(c) /= norm;
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    return svd.singularValues().minCoeff();
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"algebra", "decomposition", "invariants",
                                                "positivity", "all"};
    return names;
}

std::vector<PropertyResult> run_property_suite(const std::string& suite, std::uint64_t seed,
                                               double base_tolerance) {
    SuiteContext ctx{seed, base_tolerance, 0, {}};
    if (suite == "algebra") {
        algebra_suite(ctx);
    } else if (suite == "decomposition") {
        decomposition_suite(ctx);
    } else if (suite == "invariants") {
        invariants_suite(ctx);
    } else if (suite == "positivity") {
        positivity_suite(ctx);
    } else if (suite == "all") {
        algebra_suite(ctx);
        decomposition_suite(ctx);
        invariants_suite(ctx);
        positivity_suite(ctx);
    } else {
        throw ConfigError("unknown suite \"" + suite + "\"");
    }
    return std::move(ctx.results);
}

} // namespace dfc
