#include <doctest.h>

#include <Eigen/Dense>

#include "dfc/double_form.hpp"
#include "dfc/rng.hpp"
#include "dfc/suites.hpp"
#include "oracles.hpp"

using dfc::DoubleForm;

namespace {

DoubleForm random_form(dfc::Xoshiro256ss& rng, int n, int p, int q) {
    DoubleForm f(n, p, q);
    for (int r = 0; r < f.row_count(); ++r)
        for (int c = 0; c < f.col_count(); ++c) f.at(r, c) = rng.uniform_symmetric();
    return f;
}

DoubleForm random_symmetric(dfc::Xoshiro256ss& rng, int n, int p) {
    DoubleForm f(n, p, p);
    for (int r = 0; r < f.row_count(); ++r)
        for (int c = r; c < f.col_count(); ++c) {
            const double v = rng.uniform_symmetric();
            f.at(r, c) = v;
            f.at(c, r) = v;
        }
    return f;
}

std::uint16_t mask_of(std::initializer_list<int> idx) {
    std::uint16_t m = 0;
    for (int i : idx) m |= static_cast<std::uint16_t>(1u << (i - 1));
    return m;
}

} // namespace

TEST_CASE("g^k is k! on the diagonal") {
    const DoubleForm g = dfc::g_power(4, 1);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(g.at(i, j) == (i == j ? 1.0 : 0.0));

    const DoubleForm g2 = dfc::g_power(4, 2);
    CHECK(g2.coeff(mask_of({1, 2}), mask_of({1, 2})) == 2.0);
    CHECK(g2.coeff(mask_of({1, 2}), mask_of({1, 3})) == 0.0);

    CHECK(dfc::g_power(4, 0).as_scalar() == 1.0);
    CHECK_THROWS_AS(dfc::g_power(4, 5), dfc::OutOfRange);
}

TEST_CASE("product unit, metric square, and a hand-expanded shuffle sum") {
    const DoubleForm g = dfc::g_power(3, 1);
    CHECK((dfc::kn_product(g, g) - dfc::g_power(3, 2)).norm() == 0.0);

    // a = e^1 (x) e^1, b = e^2 (x) e^2 over n = 2: the four-term shuffle sum
    // collapses to a(1,1) b(2,2) = 1 at ((1,2),(1,2)).
    DoubleForm a(2, 1, 1);
    a.at(0, 0) = 1.0;
    DoubleForm b(2, 1, 1);
    b.at(1, 1) = 1.0;
    const DoubleForm ab = dfc::kn_product(a, b);
    CHECK(ab.coeff(mask_of({1, 2}), mask_of({1, 2})) == doctest::Approx(1.0));

    dfc::Xoshiro256ss rng(3);
    const DoubleForm w = random_form(rng, 4, 2, 1);
    const DoubleForm unit = DoubleForm::scalar(4, 1.0);
    CHECK((dfc::kn_product(w, unit) - w).norm() == 0.0);
    CHECK((dfc::kn_product(unit, w) - w).norm() == 0.0);

    CHECK_THROWS_AS(dfc::kn_product(w, dfc::g_power(3, 1)), dfc::DimensionMismatch);

    // Degree overflow past n returns the zero form of that bidegree.
    const DoubleForm overflow = dfc::kn_product(dfc::g_power(4, 3), dfc::g_power(4, 2));
    CHECK(overflow.row_count() == 0);
    CHECK(overflow.norm() == 0.0);
}

TEST_CASE("product agrees with the literal permutation-sum definition at n <= 4") {
    dfc::Xoshiro256ss rng(17);
    const struct {
        int n, pa, qa, pb, qb;
    } cases[] = {
        {2, 1, 1, 1, 1}, {3, 1, 1, 1, 1}, {3, 1, 0, 1, 2}, {4, 1, 1, 2, 2},
        {4, 2, 1, 1, 2}, {4, 0, 2, 2, 1}, {4, 2, 2, 2, 2},
    };
    for (const auto& c : cases) {
        const DoubleForm a = random_form(rng, c.n, c.pa, c.qa);
        const DoubleForm b = random_form(rng, c.n, c.pb, c.qb);
        const DoubleForm fast = dfc::kn_product(a, b);
        const DoubleForm slow = oracles::kn_product_permutation_sum(a, b);
        CHECK((fast - slow).norm() <= 1e-12 * std::max(1.0, fast.norm()));
    }
}

TEST_CASE("contraction traces and the brute-force basis-sum oracle") {
    CHECK(dfc::contract(dfc::g_power(4, 1), 1).as_scalar() == doctest::Approx(4.0));

    // c g^2 = 2(n-1) g at n = 4.
    const DoubleForm cg2 = dfc::contract(dfc::g_power(4, 2), 1);
    CHECK((cg2 - dfc::g_power(4, 1) * 6.0).norm() <= 1e-12);

    dfc::Xoshiro256ss rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 3 + static_cast<int>(rng.next() % 2);
        const DoubleForm w = random_form(rng, n, 2, 2);
        CHECK((dfc::contract(w, 1) - oracles::contract_direct(w)).norm() <= 1e-12);
    }

    const DoubleForm scalar = DoubleForm::scalar(4, 2.5);
    CHECK(dfc::contract(scalar, 1).norm() == 0.0);
}

TEST_CASE("inner product: diagonal values and adjointness instance") {
    CHECK(dfc::inner(dfc::g_power(4, 1), dfc::g_power(4, 1)) == doctest::Approx(4.0));
    // <g^2, g^2> at n = 4: six increasing pairs, each with coefficient 2.
    CHECK(dfc::inner(dfc::g_power(4, 2), dfc::g_power(4, 2)) == doctest::Approx(24.0));
    // Distinct bidegrees are orthogonal by convention.
    CHECK(dfc::inner(dfc::g_power(4, 1), dfc::g_power(4, 2)) == 0.0);

    dfc::Xoshiro256ss rng(5);
    const DoubleForm a = random_form(rng, 4, 1, 1);
    const DoubleForm b = random_form(rng, 4, 2, 2);
    CHECK(dfc::inner(dfc::mul_g(a, 1), b) ==
          doctest::Approx(dfc::inner(a, dfc::contract(b, 1))).epsilon(1e-12));
}

TEST_CASE("hodge star on basis elements and the volume form") {
    DoubleForm e11(2, 1, 1);
    e11.at(0, 0) = 1.0; // e^1 (x) e^1
    const DoubleForm star = dfc::hodge(e11);
    CHECK(star.coeff(mask_of({2}), mask_of({2})) == 1.0);
    CHECK(star.norm() == 1.0);

    const DoubleForm vol = dfc::hodge(DoubleForm::scalar(3, 1.0));
    CHECK(vol.p() == 3);
    CHECK(vol.q() == 3);
    CHECK(vol.coeff(mask_of({1, 2, 3}), mask_of({1, 2, 3})) == 1.0);

    // g w = *c*w on D^{1,1}, n = 4.
    dfc::Xoshiro256ss rng(23);
    const DoubleForm w = random_form(rng, 4, 1, 1);
    const DoubleForm lhs = dfc::mul_g(w, 1);
    const DoubleForm rhs = dfc::hodge(dfc::contract(dfc::hodge(w), 1));
    CHECK((lhs - rhs).norm() <= 1e-12 * lhs.norm());

    // Double star carries the global sign (-1)^{(p+q)(n-p-q)} (frozen as a
    // regression on mixed bidegrees).
    for (int n = 2; n <= 4; ++n)
        for (int p = 0; p <= n; ++p)
            for (int q = 0; q <= n; ++q) {
                const DoubleForm f = random_form(rng, n, p, q);
                const double sign = ((p + q) * (n - p - q)) % 2 == 0 ? 1.0 : -1.0;
                CHECK((dfc::hodge(dfc::hodge(f)) - f * sign).norm() <= 1e-15);
            }
}

TEST_CASE("factor stars compose to the full star") {
    dfc::Xoshiro256ss rng(29);
    const DoubleForm w = random_form(rng, 3, 1, 2);
    CHECK((dfc::hodge_right(dfc::hodge_left(w)) - dfc::hodge(w)).norm() == 0.0);
    CHECK((dfc::hodge_left(dfc::hodge_right(w)) - dfc::hodge(w)).norm() == 0.0);

    DoubleForm e11(2, 1, 1);
    e11.at(0, 0) = 1.0;
    const DoubleForm left = dfc::hodge_left(e11);
    CHECK(left.coeff(mask_of({2}), mask_of({1})) == 1.0);

    // Double application of the one-sided star carries the classical sign.
    for (int n = 2; n <= 4; ++n)
        for (int p = 0; p <= n; ++p) {
            const DoubleForm f = random_form(rng, n, p, n >= 1 ? 1 : 0);
            const double sign = (p * (n - p)) % 2 == 0 ? 1.0 : -1.0;
            CHECK((dfc::hodge_left(dfc::hodge_left(f)) - f * sign).norm() <= 1e-15);
        }
}

TEST_CASE("first Bianchi sum: symmetric squares lie in the kernel") {
    CHECK(dfc::first_bianchi(dfc::g_power(4, 1)).norm() == 0.0);

    dfc::Xoshiro256ss rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 3 + static_cast<int>(rng.next() % 3);
        const DoubleForm h = random_symmetric(rng, n, 1);
        CHECK(dfc::bianchi_residual(dfc::kn_product(h, h)) <= 1e-14);
    }

    // Kernel stability under the product.
    const DoubleForm h1 = random_symmetric(rng, 4, 1);
    const DoubleForm h2 = random_symmetric(rng, 4, 1);
    const DoubleForm r1 = dfc::kn_product(h1, h1);
    CHECK(dfc::bianchi_residual(dfc::kn_product(r1, dfc::kn_product(h2, h2))) <= 1e-13);

    CHECK_THROWS_AS(dfc::first_bianchi(DoubleForm::scalar(3, 1.0)), dfc::DegreeError);

    // A generic symmetric (2,2) form is not in the kernel.
    const DoubleForm generic = random_symmetric(rng, 4, 2);
    CHECK(dfc::bianchi_residual(generic) > 1e-3);
}

TEST_CASE("antisymmetric-extension evaluation") {
    const DoubleForm g2 = dfc::g_power(4, 2);
    const std::vector<int> ij{1, 2};
    const std::vector<int> ji{2, 1};
    CHECK(g2.eval(ij, ij) == 2.0);
    CHECK(g2.eval(ij, ji) == -2.0);
    const std::vector<int> rep{1, 1};
    CHECK(g2.eval(rep, ij) == 0.0);
}

TEST_CASE("mul_g injectivity witness and boundary kernel") {
    // n=4, p=q=1, k=1: the 36 x 16 matrix has full column rank 16.
    CHECK(dfc::mul_g_min_singular_value(4, 1, 1, 1) > 1e-8);
    // One step past the hypothesis p+q+k < n+1 the kernel is nontrivial.
    CHECK(dfc::mul_g_min_singular_value(4, 2, 2, 1) <= 1e-8);
    CHECK_THROWS_AS(dfc::mul_g(dfc::g_power(4, 2), 3), dfc::OutOfRange);
}

TEST_CASE("curvature structures check symmetry and measure the Bianchi residual") {
    DoubleForm asym(3, 1, 1);
    asym.at(0, 1) = 1.0;
    CHECK_THROWS_AS(dfc::CurvatureStructure{asym}, dfc::InvalidParameters);

    const dfc::CurvatureStructure certified(dfc::g_power(4, 2));
    CHECK(certified.bianchi_certified());
    CHECK(certified.bianchi_residual() <= 1e-15);

    dfc::Xoshiro256ss rng(37);
    const dfc::CurvatureStructure uncertified(random_symmetric(rng, 4, 2));
    CHECK_FALSE(uncertified.bianchi_certified());
}
