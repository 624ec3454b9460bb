#pragma once

#include <span>
#include <vector>

#include "dfc/multi_index.hpp"

namespace dfc {

inline constexpr double kDefaultTolerance = 1e-9;

/// Dense bidegree-(p, q) double form over R^n in an orthonormal frame.
///
/// Coefficients are stored only on pairs of strictly increasing multi-indices
/// (one per basis pair of the exterior powers); values at arbitrary index
/// tuples follow by antisymmetric multilinear extension. The coefficient at
/// (I, J) is the evaluation on (e_I, e_J). Immutable by convention: all
/// operations below are pure and return fresh values.
class DoubleForm {
public:
    DoubleForm() = default;

    /// Zero form. Degrees above n are legal and carry empty storage; they
    /// arise as the zero result of degree-overflowing products.
    DoubleForm(int n, int p, int q);

    static DoubleForm scalar(int n, double value);

    int n() const noexcept { return n_; }
    int p() const noexcept { return p_; }
    int q() const noexcept { return q_; }

    int row_count() const noexcept { return rows_; }
    int col_count() const noexcept { return cols_; }

    bool same_shape(const DoubleForm& o) const noexcept {
        return n_ == o.n_ && p_ == o.p_ && q_ == o.q_;
    }

    bool is_scalar() const noexcept { return p_ == 0 && q_ == 0; }
    double as_scalar() const;

    double at(int row, int col) const { return coeffs_[index(row, col)]; }
    double& at(int row, int col) { return coeffs_[index(row, col)]; }

    double coeff(std::uint16_t mask_i, std::uint16_t mask_j) const;
    void set_coeff(std::uint16_t mask_i, std::uint16_t mask_j, double value);

    /// Evaluation at arbitrary 1-based index tuples (not necessarily sorted);
    /// repeated indices give 0, permutations contribute their sign.
    double eval(std::span<const int> left, std::span<const int> right) const;

    const std::vector<double>& coefficients() const noexcept { return coeffs_; }

    DoubleForm& operator+=(const DoubleForm& o);
    DoubleForm& operator-=(const DoubleForm& o);
    DoubleForm& operator*=(double s);

    friend DoubleForm operator+(DoubleForm a, const DoubleForm& b) { return a += b; }
    friend DoubleForm operator-(DoubleForm a, const DoubleForm& b) { return a -= b; }
    friend DoubleForm operator*(DoubleForm a, double s) { return a *= s; }
    friend DoubleForm operator*(double s, DoubleForm a) { return a *= s; }

    double norm() const;
    double max_abs() const;

    /// Largest |a(I,J) - a(J,I)|; requires p == q.
    double symmetry_residual() const;

private:
    size_t index(int row, int col) const {
        return static_cast<size_t>(row) * static_cast<size_t>(cols_) + static_cast<size_t>(col);
    }

    int n_ = 0;
    int p_ = 0;
    int q_ = 0;
    int rows_ = 1;
    int cols_ = 1;
    std::vector<double> coeffs_{0.0};
};

/// g^k with g^k(e_I, e_J) = k! delta_{IJ} on increasing multi-indices.
DoubleForm g_power(int n, int k);

/// Kulkarni-Nomizu (exterior) product. Degree overflow past n returns the
/// zero form of that bidegree.
DoubleForm kn_product(const DoubleForm& a, const DoubleForm& b);

/// k-fold contraction c^k; lowers both bidegrees by k. Contracting a (0,.)
/// or (.,0) form gives 0.
DoubleForm contract(const DoubleForm& a, int k = 1);

/// Multiplication by g^k; throws OutOfRange past degree n.
DoubleForm mul_g(const DoubleForm& a, int k = 1);

/// Inner product; distinct bidegrees are orthogonal by convention and the
/// increasing basis e_I (x) e_J is orthonormal.
double inner(const DoubleForm& a, const DoubleForm& b);

/// Generalized Hodge star: *(e_I (x) e_J) = sign(I) sign(J) e_{I^c} (x) e_{J^c}.
DoubleForm hodge(const DoubleForm& a);

/// Star on the first (resp. second) tensor factor only.
DoubleForm hodge_left(const DoubleForm& a);
DoubleForm hodge_right(const DoubleForm& a);

/// First Bianchi sum B: D^{p,q} -> D^{p+1,q-1},
/// (B a)(x_1..x_{p+1}; y_2..y_q) = sum_i (-1)^i a(..x^_i..; x_i ^ y_2 ^ .. ^ y_q).
/// Only the kernel is consumed downstream; the sign convention is fixed here.
DoubleForm first_bianchi(const DoubleForm& a);

/// ||B a|| / max(1, ||a||); forms with q = 0 vacuously satisfy the identity.
double bianchi_residual(const DoubleForm& a);

/// Coordinates of v_1 ^ ... ^ v_k in the increasing basis of Lambda^k R^n:
/// one k x k minor per basis index.
std::vector<double> wedge_coordinates(int n, const std::vector<std::vector<double>>& vectors);

/// Evaluation at (v_1 ^ ... ^ v_p, w_1 ^ ... ^ w_q) by multilinear extension.
double eval_frame(const DoubleForm& a, const std::vector<std::vector<double>>& left,
                  const std::vector<std::vector<double>>& right);

/// Symmetric (p,p) double form, optionally certified to satisfy the first
/// Bianchi identity. Construction measures both residuals; symmetry beyond
/// tolerance is rejected, the Bianchi flag is recorded for downstream checks.
class CurvatureStructure {
public:
    explicit CurvatureStructure(DoubleForm form, double tol = kDefaultTolerance);

    const DoubleForm& form() const noexcept { return form_; }
    int n() const noexcept { return form_.n(); }
    int degree() const noexcept { return form_.p(); }

    bool bianchi_certified() const noexcept { return certified_; }
    double bianchi_residual() const noexcept { return bianchi_residual_; }
    double tolerance() const noexcept { return tol_; }

private:
    DoubleForm form_;
    double tol_;
    double bianchi_residual_;
    bool certified_;
};

} // namespace dfc
