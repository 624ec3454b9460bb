#pragma once

#include <cstdint>
#include <vector>

#include "dfc/double_form.hpp"

namespace dfc {

/// Declarative description of a model curvature structure. These are the
/// closed-form anchors the whole test battery is pinned to.
struct ModelSpec {
    enum class Kind {
        Constant,
        Hypersurface,
        ConformallyFlat,
        Product,
        Random,
        RandomEinstein,
    };

    Kind kind = Kind::Constant;
    int n = 0;
    double lambda = 0.0;                         // Constant
    std::vector<double> principal_curvatures;    // Hypersurface
    std::vector<std::vector<double>> schouten;   // ConformallyFlat (n x n symmetric)
    std::vector<ModelSpec> factors;              // Product (exactly two)
    std::uint64_t seed = 0;                      // Random / RandomEinstein
    int terms = 0;                               // Random; 0 means n
};

CurvatureStructure build_model(const ModelSpec& spec);

/// R = (lambda/2) g^2: sectional curvature lambda at every plane.
CurvatureStructure constant_curvature(int n, double lambda);

/// Gauss-equation curvature of a Euclidean hypersurface with the given
/// principal curvatures: R = B.B/2 for B = diag(lambda_i).
CurvatureStructure hypersurface(const std::vector<double>& principal_curvatures);

/// R = g.h for a symmetric coefficient table h (the Schouten tensor of a
/// conformally flat metric); the top component of R vanishes.
CurvatureStructure conformally_flat(const std::vector<std::vector<double>>& h);

/// Block direct sum of two curvature structures; mixed index pairs vanish.
CurvatureStructure product_space(const ModelSpec& a, const ModelSpec& b);

/// Sum of Kulkarni-Nomizu squares of seeded random symmetric (1,1) forms.
/// Satisfies the first Bianchi identity by construction (re-verified at
/// wrap time) and has generically nonzero components at every stage.
/// terms <= 0 selects the default of n terms.
CurvatureStructure random_curvature(int n, std::uint64_t seed, int terms = 0);

/// random_curvature with the g.omega_1 stage removed: the Ricci contraction
/// is proportional to g. Requires n >= 4.
CurvatureStructure random_einstein(int n, std::uint64_t seed);

/// sum_t h_t . h_t for explicit symmetric (1,1) generators; exposed for the
/// algebraic identities the generators are built on.
CurvatureStructure curvature_from_squares(const std::vector<DoubleForm>& generators);

/// Dense symmetric (1,1) form from an n x n coefficient table.
DoubleForm symmetric_one_one(const std::vector<std::vector<double>>& h);

} // namespace dfc
