#include "dfc/model_spaces.hpp"

#include <cmath>
#include <string>

#include "dfc/decomposition.hpp"
#include "dfc/rng.hpp"

namespace dfc {

CurvatureStructure build_model(const ModelSpec& spec) {
    switch (spec.kind) {
        case ModelSpec::Kind::Constant:
            return constant_curvature(spec.n, spec.lambda);
        case ModelSpec::Kind::Hypersurface:
            return hypersurface(spec.principal_curvatures);
        case ModelSpec::Kind::ConformallyFlat:
            return conformally_flat(spec.schouten);
        case ModelSpec::Kind::Product:
            if (spec.factors.size() != 2)
                throw InvalidParameters("product model needs exactly two factors");
            return product_space(spec.factors[0], spec.factors[1]);
        case ModelSpec::Kind::Random:
            return random_curvature(spec.n, spec.seed, spec.terms);
        case ModelSpec::Kind::RandomEinstein:
            return random_einstein(spec.n, spec.seed);
    }
    throw InvalidParameters("unknown model kind");
}

CurvatureStructure constant_curvature(int n, double lambda) {
    if (n < 2) throw InvalidParameters("constant curvature needs n >= 2");
    return CurvatureStructure(g_power(n, 2) * (lambda / 2.0));
}

DoubleForm symmetric_one_one(const std::vector<std::vector<double>>& h) {
    const int n = static_cast<int>(h.size());
    DoubleForm b(n, 1, 1);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(h[static_cast<size_t>(i)].size()) != n)
            throw InvalidParameters("coefficient table must be square");
        for (int j = 0; j < n; ++j) {
            const double v = h[static_cast<size_t>(i)][static_cast<size_t>(j)];
            const double vt = h[static_cast<size_t>(j)][static_cast<size_t>(i)];
            if (std::abs(v - vt) > 1e-12 * std::max({1.0, std::abs(v), std::abs(vt)}))
                throw InvalidParameters("coefficient table must be symmetric");
            b.at(i, j) = v;
        }
    }
    return b;
}

CurvatureStructure hypersurface(const std::vector<double>& principal_curvatures) {
    const int n = static_cast<int>(principal_curvatures.size());
    if (n < 2) throw InvalidParameters("hypersurface model needs n >= 2 principal curvatures");
    DoubleForm b(n, 1, 1);
    for (int i = 0; i < n; ++i) b.at(i, i) = principal_curvatures[static_cast<size_t>(i)];
    return CurvatureStructure(kn_product(b, b) * 0.5);
}

CurvatureStructure conformally_flat(const std::vector<std::vector<double>>& h) {
    DoubleForm schouten = symmetric_one_one(h);
    if (schouten.n() < 2) throw InvalidParameters("conformally flat model needs n >= 2");
    return CurvatureStructure(mul_g(schouten, 1));
}

CurvatureStructure product_space(const ModelSpec& a, const ModelSpec& b) {
    CurvatureStructure ra = build_model(a);
    CurvatureStructure rb = build_model(b);
    const int na = ra.n();
    const int nb = rb.n();
    const int n = na + nb;
    if (n > kMaxDimension)
        throw DimensionExceeded("product dimension " + std::to_string(n) + " exceeds cap " +
                                std::to_string(kMaxDimension));
    if (ra.degree() != 2 || rb.degree() != 2)
        throw InvalidParameters("product model expects (2,2) factors");

    DoubleForm out(n, 2, 2);
    const IndexBasis& basis = index_basis(n, 2);
    const IndexBasis& basis_a = index_basis(na, 2);
    const IndexBasis& basis_b = index_basis(nb, 2);
    const std::uint16_t low = static_cast<std::uint16_t>((1u << na) - 1u);

    for (int r = 0; r < out.row_count(); ++r) {
        const std::uint16_t mi = basis.masks[static_cast<size_t>(r)];
        const bool i_low = (mi & ~low) == 0;
        const bool i_high = (mi & low) == 0;
        if (!i_low && !i_high) continue; // mixed plane: flat directions
        for (int c = 0; c < out.col_count(); ++c) {
            const std::uint16_t mj = basis.masks[static_cast<size_t>(c)];
            if (i_low && (mj & ~low) == 0) {
                out.at(r, c) = ra.form().at(basis_a.rank_of(mi), basis_a.rank_of(mj));
            } else if (i_high && (mj & low) == 0) {
                out.at(r, c) = rb.form().at(basis_b.rank_of(static_cast<std::uint16_t>(mi >> na)),
                                            basis_b.rank_of(static_cast<std::uint16_t>(mj >> na)));
            }
        }
    }
    return CurvatureStructure(out);
}

namespace {

DoubleForm random_symmetric(int n, Xoshiro256ss& rng, double scale) {
    DoubleForm h(n, 1, 1);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            const double v = scale * rng.uniform_symmetric();
            h.at(i, j) = v;
            h.at(j, i) = v;
        }
    return h;
}

} // namespace

CurvatureStructure curvature_from_squares(const std::vector<DoubleForm>& generators) {
    if (generators.empty()) throw InvalidParameters("need at least one generator");
    const int n = generators.front().n();
    DoubleForm sum(n, 2, 2);
    for (const DoubleForm& h : generators) {
        if (h.n() != n) throw DimensionMismatch("generators over different dimensions");
        if (h.p() != 1 || h.q() != 1) throw DegreeError("generators must be (1,1) forms");
        sum += kn_product(h, h);
    }
    return CurvatureStructure(sum);
}

CurvatureStructure random_curvature(int n, std::uint64_t seed, int terms) {
    if (n < 2) throw InvalidParameters("random curvature needs n >= 2");
    if (terms <= 0) terms = n;
    Xoshiro256ss rng(seed);
    // 1/sqrt(terms) keeps coefficients O(1) independently of the term count.
    const double scale = 1.0 / std::sqrt(static_cast<double>(terms));
    std::vector<DoubleForm> generators;
    generators.reserve(static_cast<size_t>(terms));
    for (int t = 0; t < terms; ++t) generators.push_back(random_symmetric(n, rng, scale));
    return curvature_from_squares(generators);
}

CurvatureStructure random_einstein(int n, std::uint64_t seed) {
    if (n < 4) throw InvalidParameters("random Einstein structures need n >= 4");
    CurvatureStructure r = random_curvature(n, seed, 0);
    ComponentList parts = orthogonal_components(r);
    return CurvatureStructure(r.form() - mul_g(parts.components[1], 1));
}

} // namespace dfc
