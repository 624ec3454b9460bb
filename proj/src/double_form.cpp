#include "dfc/double_form.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <string>

namespace dfc {

namespace {

int basis_count(int n, int d) {
    if (d < 0) return 0;
    if (d > n) return 0;
    return static_cast<int>(binomial(n, d));
}

// All ways of choosing `k` of the set bits of `mask`, as (left, right, sign)
// rank triples over the degree bases. Used by the product kernel.
struct SplitEntry {
    int left_rank;
    int right_rank;
    double sign;
};

std::vector<std::vector<SplitEntry>> split_table(int n, int total, int left) {
    const IndexBasis& whole = index_basis(n, total);
    const IndexBasis& lhs = index_basis(n, left);
    const IndexBasis& rhs = index_basis(n, total - left);

    std::vector<std::vector<SplitEntry>> table(static_cast<size_t>(whole.count()));
    std::vector<int> bits;
    std::vector<int> pos(static_cast<size_t>(left));
    for (int r = 0; r < whole.count(); ++r) {
        std::uint16_t mask = whole.masks[static_cast<size_t>(r)];
        bits.clear();
        for (int i = 0; i < n; ++i)
            if ((mask >> i) & 1u) bits.push_back(i);
        auto& entries = table[static_cast<size_t>(r)];
        entries.reserve(static_cast<size_t>(binomial(total, left)));
        for (int i = 0; i < left; ++i) pos[static_cast<size_t>(i)] = i;
        while (true) {
            std::uint16_t lmask = 0;
            for (int i = 0; i < left; ++i)
                lmask |= static_cast<std::uint16_t>(1u << bits[static_cast<size_t>(pos[static_cast<size_t>(i)])]);
            std::uint16_t rmask = static_cast<std::uint16_t>(mask & ~lmask);
            entries.push_back({lhs.rank_of(lmask), rhs.rank_of(rmask),
                               static_cast<double>(merge_sign(lmask, rmask))});
            if (left == 0) break;
            int i = left - 1;
            while (i >= 0 && pos[static_cast<size_t>(i)] == total - left + i) --i;
            if (i < 0) break;
            ++pos[static_cast<size_t>(i)];
            for (int j = i + 1; j < left; ++j)
                pos[static_cast<size_t>(j)] = pos[static_cast<size_t>(j - 1)] + 1;
        }
    }
    return table;
}

} // namespace

DoubleForm::DoubleForm(int n, int p, int q) : n_(n), p_(p), q_(q) {
    if (n < 0) throw InvalidIndex("negative dimension");
    if (n > kMaxDimension)
        throw DimensionExceeded("dimension " + std::to_string(n) + " exceeds cap " +
                                std::to_string(kMaxDimension));
    if (p < 0 || q < 0) throw DegreeError("negative bidegree");
    rows_ = basis_count(n, p);
    cols_ = basis_count(n, q);
    coeffs_.assign(static_cast<size_t>(rows_) * static_cast<size_t>(cols_), 0.0);
}

DoubleForm DoubleForm::scalar(int n, double value) {
    DoubleForm f(n, 0, 0);
    f.coeffs_[0] = value;
    return f;
}

double DoubleForm::as_scalar() const {
    if (!is_scalar()) throw DegreeError("form of bidegree (" + std::to_string(p_) + "," +
                                        std::to_string(q_) + ") is not a scalar");
    return coeffs_[0];
}

double DoubleForm::coeff(std::uint16_t mask_i, std::uint16_t mask_j) const {
    int r = index_basis(n_, p_).rank_of(mask_i);
    int c = index_basis(n_, q_).rank_of(mask_j);
    if (r < 0 || c < 0) throw InvalidIndex("mask does not name a basis element of this bidegree");
    return at(r, c);
}

void DoubleForm::set_coeff(std::uint16_t mask_i, std::uint16_t mask_j, double value) {
    int r = index_basis(n_, p_).rank_of(mask_i);
    int c = index_basis(n_, q_).rank_of(mask_j);
    if (r < 0 || c < 0) throw InvalidIndex("mask does not name a basis element of this bidegree");
    at(r, c) = value;
}

namespace {

// Sorts a tuple in place, returning the permutation sign, or 0 on repeats.
int sort_sign(std::vector<int>& t) {
    int sign = 1;
    for (size_t i = 1; i < t.size(); ++i) {
        for (size_t j = i; j > 0 && t[j - 1] > t[j]; --j) {
            std::swap(t[j - 1], t[j]);
            sign = -sign;
        }
    }
    for (size_t i = 1; i < t.size(); ++i)
        if (t[i] == t[i - 1]) return 0;
    return sign;
}

} // namespace

double DoubleForm::eval(std::span<const int> left, std::span<const int> right) const {
    if (static_cast<int>(left.size()) != p_ || static_cast<int>(right.size()) != q_)
        throw DegreeError("tuple lengths do not match bidegree");
    std::vector<int> l(left.begin(), left.end());
    std::vector<int> r(right.begin(), right.end());
    for (int v : l)
        if (v < 1 || v > n_) throw InvalidIndex("index outside [1, n]");
    for (int v : r)
        if (v < 1 || v > n_) throw InvalidIndex("index outside [1, n]");
    int sl = sort_sign(l);
    int sr = sort_sign(r);
    if (sl == 0 || sr == 0) return 0.0;
    std::uint16_t ml = 0, mr = 0;
    for (int v : l) ml |= static_cast<std::uint16_t>(1u << (v - 1));
    for (int v : r) mr |= static_cast<std::uint16_t>(1u << (v - 1));
    return sl * sr * coeff(ml, mr);
}

DoubleForm& DoubleForm::operator+=(const DoubleForm& o) {
    if (!same_shape(o)) throw DimensionMismatch("adding forms of different shape");
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

DoubleForm& DoubleForm::operator-=(const DoubleForm& o) {
    if (!same_shape(o)) throw DimensionMismatch("subtracting forms of different shape");
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

DoubleForm& DoubleForm::operator*=(double s) {
    for (double& c : coeffs_) c *= s;
    return *this;
}

double DoubleForm::norm() const {
    double s = 0.0;
    for (double c : coeffs_) s += c * c;
    return std::sqrt(s);
}

double DoubleForm::max_abs() const {
    double m = 0.0;
    for (double c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

double DoubleForm::symmetry_residual() const {
    if (p_ != q_) throw DegreeError("symmetry is defined for (p,p) forms only");
    double worst = 0.0;
    for (int r = 0; r < rows_; ++r)
        for (int c = r + 1; c < cols_; ++c)
            worst = std::max(worst, std::abs(at(r, c) - at(c, r)));
    return worst;
}

DoubleForm g_power(int n, int k) {
    if (k < 0 || k > n)
        throw OutOfRange("g^k needs 0 <= k <= n, got k=" + std::to_string(k) +
                         ", n=" + std::to_string(n));
    DoubleForm out(n, k, k);
    const double diag = factorial(k);
    for (int r = 0; r < out.row_count(); ++r) out.at(r, r) = diag;
    return out;
}

DoubleForm kn_product(const DoubleForm& a, const DoubleForm& b) {
    if (a.n() != b.n()) throw DimensionMismatch("product of forms over different dimensions");
    const int n = a.n();
    const int p = a.p() + b.p();
    const int q = a.q() + b.q();
    DoubleForm out(n, p, q);
    if (p > n || q > n || out.row_count() == 0 || out.col_count() == 0) return out;

    const auto left_splits = split_table(n, p, a.p());
    const auto right_splits = split_table(n, q, a.q());

    for (int r = 0; r < out.row_count(); ++r) {
        const auto& ls = left_splits[static_cast<size_t>(r)];
        for (int c = 0; c < out.col_count(); ++c) {
            const auto& rs = right_splits[static_cast<size_t>(c)];
            double acc = 0.0;
            for (const SplitEntry& le : ls) {
                double partial = 0.0;
                for (const SplitEntry& re : rs)
                    partial += re.sign * a.at(le.left_rank, re.left_rank) *
                               b.at(le.right_rank, re.right_rank);
                acc += le.sign * partial;
            }
            out.at(r, c) = acc;
        }
    }
    return out;
}

namespace {

DoubleForm contract_once(const DoubleForm& a) {
    const int n = a.n();
    if (a.p() == 0 || a.q() == 0) return DoubleForm(n, std::max(a.p() - 1, 0), std::max(a.q() - 1, 0));

    DoubleForm out(n, a.p() - 1, a.q() - 1);
    const IndexBasis& rows = index_basis(n, out.p());
    const IndexBasis& cols = index_basis(n, out.q());
    const IndexBasis& arows = index_basis(n, a.p());
    const IndexBasis& acols = index_basis(n, a.q());

    for (int r = 0; r < out.row_count(); ++r) {
        const std::uint16_t mi = rows.masks[static_cast<size_t>(r)];
        for (int c = 0; c < out.col_count(); ++c) {
            const std::uint16_t mj = cols.masks[static_cast<size_t>(c)];
            double acc = 0.0;
            for (int m = 1; m <= n; ++m) {
                const std::uint16_t bit = static_cast<std::uint16_t>(1u << (m - 1));
                if ((mi & bit) || (mj & bit)) continue;
                const double sign = insert_sign(m, mi) * insert_sign(m, mj);
                acc += sign * a.at(arows.rank_of(static_cast<std::uint16_t>(mi | bit)),
                                   acols.rank_of(static_cast<std::uint16_t>(mj | bit)));
            }
            out.at(r, c) = acc;
        }
    }
    return out;
}

} // namespace

DoubleForm contract(const DoubleForm& a, int k) {
    if (k < 0) throw OutOfRange("negative contraction order");
    DoubleForm out = a;
    for (int i = 0; i < k; ++i) out = contract_once(out);
    return out;
}

DoubleForm mul_g(const DoubleForm& a, int k) {
    if (k < 0) throw OutOfRange("negative multiplication order");
    if (a.p() + k > a.n() || a.q() + k > a.n())
        throw OutOfRange("g^k multiplication overflows degree n=" + std::to_string(a.n()));
    if (k == 0) return a;
    return kn_product(g_power(a.n(), k), a);
}

double inner(const DoubleForm& a, const DoubleForm& b) {
    if (a.n() != b.n()) throw DimensionMismatch("inner product over different dimensions");
    if (a.p() != b.p() || a.q() != b.q()) return 0.0;
    double s = 0.0;
    const auto& ca = a.coefficients();
    const auto& cb = b.coefficients();
    for (size_t i = 0; i < ca.size(); ++i) s += ca[i] * cb[i];
    return s;
}

DoubleForm hodge(const DoubleForm& a) {
    const int n = a.n();
    DoubleForm out(n, n - a.p(), n - a.q());
    if (a.p() > n || a.q() > n) return out;
    const IndexBasis& rows = index_basis(n, a.p());
    const IndexBasis& cols = index_basis(n, a.q());
    const IndexBasis& orows = index_basis(n, out.p());
    const IndexBasis& ocols = index_basis(n, out.q());
    const std::uint16_t full = static_cast<std::uint16_t>((1u << n) - 1u);
    for (int r = 0; r < a.row_count(); ++r) {
        const std::uint16_t mi = rows.masks[static_cast<size_t>(r)];
        const std::uint16_t ci = static_cast<std::uint16_t>(full & ~mi);
        const int sr = merge_sign(mi, ci);
        for (int c = 0; c < a.col_count(); ++c) {
            const std::uint16_t mj = cols.masks[static_cast<size_t>(c)];
            const std::uint16_t cj = static_cast<std::uint16_t>(full & ~mj);
            out.at(orows.rank_of(ci), ocols.rank_of(cj)) = sr * merge_sign(mj, cj) * a.at(r, c);
        }
    }
    return out;
}

DoubleForm hodge_left(const DoubleForm& a) {
    const int n = a.n();
    DoubleForm out(n, n - a.p(), a.q());
    if (a.p() > n || a.q() > n) return out;
    const IndexBasis& rows = index_basis(n, a.p());
    const IndexBasis& orows = index_basis(n, out.p());
    const std::uint16_t full = static_cast<std::uint16_t>((1u << n) - 1u);
    for (int r = 0; r < a.row_count(); ++r) {
        const std::uint16_t mi = rows.masks[static_cast<size_t>(r)];
        const std::uint16_t ci = static_cast<std::uint16_t>(full & ~mi);
        const int sr = merge_sign(mi, ci);
        for (int c = 0; c < a.col_count(); ++c)
            out.at(orows.rank_of(ci), c) = sr * a.at(r, c);
    }
    return out;
}

DoubleForm hodge_right(const DoubleForm& a) {
    const int n = a.n();
    DoubleForm out(n, a.p(), n - a.q());
    if (a.p() > n || a.q() > n) return out;
    const IndexBasis& cols = index_basis(n, a.q());
    const IndexBasis& ocols = index_basis(n, out.q());
    const std::uint16_t full = static_cast<std::uint16_t>((1u << n) - 1u);
    for (int c = 0; c < a.col_count(); ++c) {
        const std::uint16_t mj = cols.masks[static_cast<size_t>(c)];
        const std::uint16_t cj = static_cast<std::uint16_t>(full & ~mj);
        const int sc = merge_sign(mj, cj);
        for (int r = 0; r < a.row_count(); ++r)
            out.at(r, ocols.rank_of(cj)) = sc * a.at(r, c);
    }
    return out;
}

DoubleForm first_bianchi(const DoubleForm& a) {
    if (a.q() < 1) throw DegreeError("first Bianchi sum needs q >= 1");
    const int n = a.n();
    DoubleForm out(n, a.p() + 1, a.q() - 1);
    if (out.p() > n || a.p() > n || a.q() > n) return out;

    const IndexBasis& orows = index_basis(n, out.p());
    const IndexBasis& ocols = index_basis(n, out.q());
    const IndexBasis& arows = index_basis(n, a.p());
    const IndexBasis& acols = index_basis(n, a.q());

    for (int r = 0; r < out.row_count(); ++r) {
        const std::uint16_t mx = orows.masks[static_cast<size_t>(r)];
        for (int c = 0; c < out.col_count(); ++c) {
            const std::uint16_t my = ocols.masks[static_cast<size_t>(c)];
            double acc = 0.0;
            int position = 0;
            for (int x = 1; x <= n; ++x) {
                const std::uint16_t bit = static_cast<std::uint16_t>(1u << (x - 1));
                if (!(mx & bit)) continue;
                ++position; // 1-based position of x inside the increasing tuple
                if (my & bit) continue;
                const double term_sign = ((position & 1) ? -1.0 : 1.0) * insert_sign(x, my);
                acc += term_sign * a.at(arows.rank_of(static_cast<std::uint16_t>(mx & ~bit)),
                                        acols.rank_of(static_cast<std::uint16_t>(my | bit)));
            }
            out.at(r, c) = acc;
        }
    }
    return out;
}

double bianchi_residual(const DoubleForm& a) {
    if (a.q() == 0) return 0.0;
    return first_bianchi(a).norm() / std::max(1.0, a.norm());
}

std::vector<double> wedge_coordinates(int n, const std::vector<std::vector<double>>& vectors) {
    const int k = static_cast<int>(vectors.size());
    if (k > n) throw OutOfRange("cannot wedge more vectors than the dimension");
    for (const auto& v : vectors)
        if (static_cast<int>(v.size()) != n)
            throw DimensionMismatch("vector length does not match dimension");

    const IndexBasis& basis = index_basis(n, k);
    std::vector<double> coords(static_cast<size_t>(basis.count()), 0.0);
    std::vector<double> m(static_cast<size_t>(k) * static_cast<size_t>(k));
    for (int r = 0; r < basis.count(); ++r) {
        const std::uint16_t mask = basis.masks[static_cast<size_t>(r)];
        int row = 0;
        for (int i = 0; i < n; ++i) {
            if (!((mask >> i) & 1u)) continue;
            for (int j = 0; j < k; ++j)
                m[static_cast<size_t>(row) * k + j] = vectors[static_cast<size_t>(j)][static_cast<size_t>(i)];
            ++row;
        }
        // Gaussian elimination with partial pivoting on the k x k minor.
        double det = 1.0;
        for (int col = 0; col < k && det != 0.0; ++col) {
            int pivot = col;
            for (int i = col + 1; i < k; ++i)
                if (std::abs(m[static_cast<size_t>(i) * k + col]) >
                    std::abs(m[static_cast<size_t>(pivot) * k + col]))
                    pivot = i;
            if (pivot != col) {
                for (int j = 0; j < k; ++j)
                    std::swap(m[static_cast<size_t>(pivot) * k + j], m[static_cast<size_t>(col) * k + j]);
                det = -det;
            }
            const double d = m[static_cast<size_t>(col) * k + col];
            if (d == 0.0) {
                det = 0.0;
                break;
            }
            det *= d;
            for (int i = col + 1; i < k; ++i) {
                const double f = m[static_cast<size_t>(i) * k + col] / d;
                for (int j = col; j < k; ++j)
                    m[static_cast<size_t>(i) * k + j] -= f * m[static_cast<size_t>(col) * k + j];
            }
        }
        coords[static_cast<size_t>(r)] = det;
    }
    return coords;
}

double eval_frame(const DoubleForm& a, const std::vector<std::vector<double>>& left,
                  const std::vector<std::vector<double>>& right) {
    if (static_cast<int>(left.size()) != a.p() || static_cast<int>(right.size()) != a.q())
        throw DegreeError("frame sizes do not match bidegree");
    const auto lw = wedge_coordinates(a.n(), left);
    const auto rw = wedge_coordinates(a.n(), right);
    double acc = 0.0;
    for (int r = 0; r < a.row_count(); ++r) {
        if (lw[static_cast<size_t>(r)] == 0.0) continue;
        double partial = 0.0;
        for (int c = 0; c < a.col_count(); ++c)
            partial += a.at(r, c) * rw[static_cast<size_t>(c)];
        acc += lw[static_cast<size_t>(r)] * partial;
    }
    return acc;
}

CurvatureStructure::CurvatureStructure(DoubleForm form, double tol)
    : form_(std::move(form)), tol_(tol) {
    if (form_.p() != form_.q())
        throw DegreeError("curvature structures have equal bidegrees");
    const double sym = form_.symmetry_residual();
    if (sym > tol_ * std::max(1.0, form_.max_abs()))
        throw InvalidParameters("form is not symmetric: residual " + std::to_string(sym));
    bianchi_residual_ = dfc::bianchi_residual(form_);
    certified_ = bianchi_residual_ <= tol_;
}

} // namespace dfc
