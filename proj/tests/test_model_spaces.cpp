#include <doctest.h>

#include "dfc/decomposition.hpp"
#include "dfc/invariants.hpp"
#include "dfc/model_spaces.hpp"
#include "dfc/rng.hpp"
#include "oracles.hpp"

using dfc::CurvatureStructure;
using dfc::DoubleForm;

TEST_CASE("constant curvature model") {
    const CurvatureStructure r = dfc::constant_curvature(5, 1.5);
    CHECK(r.bianchi_certified());

    // Sectional curvature is lambda at coordinate planes.
    const std::vector<int> plane{1, 3};
    CHECK(r.form().eval(plane, plane) == doctest::Approx(1.5));

    // h_{2q} = lambda^q n! / (2^q (n-2q)!).
    for (int q = 1; 2 * q <= 5; ++q) {
        const double expected = std::pow(1.5, q) * dfc::factorial(5) /
                                (std::pow(2.0, q) * dfc::factorial(5 - 2 * q));
        CHECK(dfc::gbw_curvature(r, q) == doctest::Approx(expected).epsilon(1e-12));
    }

    CHECK(dfc::constant_curvature(4, 0.0).form().norm() == 0.0);
}

TEST_CASE("hypersurface model: Gauss equation and symmetric functions") {
    // Unit sphere: all principal curvatures 1.
    const CurvatureStructure sphere = dfc::hypersurface({1, 1, 1, 1});
    CHECK((sphere.form() - dfc::constant_curvature(4, 1.0).form()).norm() == 0.0);

    const CurvatureStructure r = dfc::hypersurface({1, 2, 3, 4});
    CHECK(r.bianchi_certified());
    // h_2 = (2!/2) e_2 = 35 and h_4 = (4!/4) e_4 = 144.
    CHECK(dfc::gbw_curvature(r, 1) == doctest::Approx(35.0).epsilon(1e-12));
    CHECK(dfc::gbw_curvature(r, 2) == doctest::Approx(144.0).epsilon(1e-12));
    CHECK(oracles::elementary_symmetric({1, 2, 3, 4}, 2) == doctest::Approx(35.0));
    CHECK(oracles::elementary_symmetric({1, 2, 3, 4}, 4) == doctest::Approx(24.0));

    // Sectional curvatures are products of principal curvatures.
    const std::vector<int> plane{2, 4};
    CHECK(r.form().eval(plane, plane) == doctest::Approx(8.0));

    CHECK_THROWS_AS(dfc::hypersurface({1.0}), dfc::InvalidParameters);
}

TEST_CASE("conformally flat model") {
    // h = (lambda/2) g reproduces constant curvature lambda.
    const int n = 4;
    const double lambda = 0.8;
    std::vector<std::vector<double>> h(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) h[size_t(i)][size_t(i)] = lambda / 2;
    const CurvatureStructure r = dfc::conformally_flat(h);
    CHECK((r.form() - dfc::constant_curvature(n, lambda).form()).norm() <= 1e-15);

    // h_2 = (n-1) e_1(h): spot check of the symmetric-function statement.
    dfc::Xoshiro256ss rng(67);
    std::vector<std::vector<double>> hr(n, std::vector<double>(n, 0.0));
    double trace = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            const double v = rng.uniform_symmetric();
            hr[size_t(i)][size_t(j)] = v;
            hr[size_t(j)][size_t(i)] = v;
            if (i == j) trace += v;
        }
    const CurvatureStructure rc = dfc::conformally_flat(hr);
    CHECK(dfc::gbw_curvature(rc, 1) == doctest::Approx((n - 1) * trace).epsilon(1e-12));
    CHECK(dfc::conformal_component(rc).norm() <= 1e-13);

    // Traceless h: scalar-flat, and h_4 <= 0.
    for (int i = 0; i < n; ++i) hr[size_t(i)][size_t(i)] -= trace / n;
    const CurvatureStructure rt = dfc::conformally_flat(hr);
    CHECK(std::abs(dfc::gbw_curvature(rt, 1)) <= 1e-12);
    CHECK(dfc::gbw_curvature(rt, 2) <= 1e-12);

    std::vector<std::vector<double>> bad = hr;
    bad[0][1] += 1.0;
    CHECK_THROWS_AS(dfc::conformally_flat(bad), dfc::InvalidParameters);
}

TEST_CASE("product spaces vanish on mixed planes and kill high powers") {
    dfc::ModelSpec s3;
    s3.kind = dfc::ModelSpec::Kind::Constant;
    s3.n = 3;
    s3.lambda = 1.0;
    dfc::ModelSpec flat2;
    flat2.kind = dfc::ModelSpec::Kind::Constant;
    flat2.n = 2;
    flat2.lambda = 0.0;

    const CurvatureStructure r = dfc::product_space(s3, flat2);
    CHECK(r.n() == 5);
    CHECK(r.bianchi_certified());

    // Mixed planes are flat.
    const std::vector<int> mixed{1, 4};
    CHECK(r.form().eval(mixed, mixed) == 0.0);
    const std::vector<int> inside{1, 2};
    CHECK(r.form().eval(inside, inside) == doctest::Approx(1.0));

    // Curvature concentrated on a 3-dimensional factor: R^q = 0 for 2q > 3.
    CHECK(dfc::gauss_kronecker(r, 2).form().norm() <= 1e-14);
    CHECK(std::abs(dfc::gbw_curvature(r, 2)) <= 1e-14);

    // S^2 x S^2: h_2 = 2 and h_4 = 2 (Avez cross-check below pins it).
    dfc::ModelSpec s2 = s3;
    s2.n = 2;
    const CurvatureStructure s2s2 = dfc::product_space(s2, s2);
    CHECK(dfc::gbw_curvature(s2s2, 1) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(dfc::gbw_curvature(s2s2, 2) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(dfc::avez_h4q(s2s2, 1) == doctest::Approx(2.0).epsilon(1e-12));
    // Independent contraction route through the slow oracle.
    const DoubleForm r2 = oracles::kn_product_permutation_sum(s2s2.form(), s2s2.form());
    DoubleForm contracted = r2;
    for (int i = 0; i < 4; ++i) contracted = oracles::contract_direct(contracted);
    CHECK(contracted.as_scalar() / dfc::factorial(4) == doctest::Approx(2.0).epsilon(1e-12));

    // Flat x flat is flat.
    CHECK(dfc::product_space(flat2, flat2).form().norm() == 0.0);

    dfc::ModelSpec big = s3;
    big.n = 6;
    CHECK_THROWS_AS(dfc::product_space(big, big), dfc::DimensionExceeded);
}

TEST_CASE("random curvature: Bianchi-certified, deterministic, rich") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const int n = 3 + static_cast<int>(seed % 4); // 3..6
        const CurvatureStructure r = dfc::random_curvature(n, seed, 0);
        CHECK(r.bianchi_certified());
        CHECK(r.bianchi_residual() <= 1e-10);
    }

    // Same seed, same coefficients.
    const CurvatureStructure a = dfc::random_curvature(5, 99, 3);
    const CurvatureStructure b = dfc::random_curvature(5, 99, 3);
    CHECK((a.form() - b.form()).norm() == 0.0);
    const CurvatureStructure c = dfc::random_curvature(5, 100, 3);
    CHECK((a.form() - c.form()).norm() > 1e-6);

    // Single generator h = g gives R = g.g = g^2, constant curvature 2.
    const CurvatureStructure unit =
        dfc::curvature_from_squares({dfc::g_power(4, 1)});
    CHECK((unit.form() - dfc::g_power(4, 2)).norm() == 0.0);
    const std::vector<int> plane{1, 2};
    CHECK(unit.form().eval(plane, plane) == doctest::Approx(2.0));

    // Generic outputs have every component nonzero.
    const dfc::ComponentList parts = dfc::orthogonal_components(dfc::random_curvature(5, 4, 5));
    CHECK(parts.components[0].norm() > 1e-6);
    CHECK(parts.components[1].norm() > 1e-6);
    CHECK(parts.components[2].norm() > 1e-6);
}

TEST_CASE("random Einstein structures") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const int n = 4 + static_cast<int>(seed % 4); // 4..7
        const CurvatureStructure r = dfc::random_einstein(n, seed);
        CHECK(r.bianchi_certified());

        // Ricci contraction proportional to g.
        const DoubleForm ricci = dfc::contract(r.form(), 1);
        const double lambda = dfc::inner(ricci, dfc::g_power(n, 1)) / n;
        CHECK((ricci - dfc::g_power(n, 1) * lambda).norm() <= 1e-9 * std::max(1.0, ricci.norm()));

        CHECK(dfc::classify_einstein(r, 1, 1).verdict);
        CHECK(dfc::h4_component_formula(r) >= -1e-9);

        // Removing the middle stage from an Einstein structure changes nothing.
        const dfc::ComponentList parts = dfc::orthogonal_components(r);
        CHECK(parts.components[1].norm() <= 1e-12);
    }
}
