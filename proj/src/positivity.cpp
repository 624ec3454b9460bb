#include "dfc/positivity.hpp"

#include <cmath>
#include <string>

#include "dfc/invariants.hpp"
#include "dfc/rng.hpp"

namespace dfc {

namespace {

Frame draw_frame(Xoshiro256ss& rng, int n, int k) {
    while (true) {
        Frame frame(static_cast<size_t>(k), std::vector<double>(static_cast<size_t>(n)));
        for (auto& v : frame)
            for (double& x : v) x = rng.normal();

        // Modified Gram-Schmidt with one re-orthogonalization pass; redraw on
        // near-dependent input.
        bool degenerate = false;
        for (int i = 0; i < k && !degenerate; ++i) {
            auto& vi = frame[static_cast<size_t>(i)];
            for (int pass = 0; pass < 2; ++pass) {
                for (int j = 0; j < i; ++j) {
                    const auto& vj = frame[static_cast<size_t>(j)];
                    double dot = 0.0;
                    for (int x = 0; x < n; ++x)
                        dot += vi[static_cast<size_t>(x)] * vj[static_cast<size_t>(x)];
                    for (int x = 0; x < n; ++x)
                        vi[static_cast<size_t>(x)] -= dot * vj[static_cast<size_t>(x)];
                }
            }
            double norm = 0.0;
            for (double x : vi) norm += x * x;
            norm = std::sqrt(norm);
            if (norm < 1e-6) {
                degenerate = true;
                break;
            }
            for (double& x : vi) x /= norm;
        }
        if (!degenerate) return frame;
    }
}

double margin_p_curvature(const CurvatureStructure& tensor, const Frame& plane) {
    return eval_frame(tensor.form(), plane, plane);
}

double plane_curvature(const DoubleForm& r, const std::vector<double>& u,
                       const std::vector<double>& v) {
    return eval_frame(r, {u, v}, {u, v});
}

double margin_isotropic(const DoubleForm& r, const Frame& f) {
    const double ks = plane_curvature(r, f[0], f[2]) + plane_curvature(r, f[0], f[3]) +
                      plane_curvature(r, f[1], f[2]) + plane_curvature(r, f[1], f[3]);
    const double mixed = eval_frame(r, {f[0], f[1]}, {f[2], f[3]});
    return ks - 2.0 * std::abs(mixed);
}

double margin_condition_A(const DoubleForm& r, const Frame& f) {
    const int m = static_cast<int>(f.size());
    double worst = 0.0;
    bool first = true;
    // Roles j,k,l over distinct frame vectors; i over the remaining vectors,
    // or over {k,l} when the frame has only three (the dimension-3 reading).
    for (int j = 0; j < m; ++j)
        for (int k = 0; k < m; ++k)
            for (int l = 0; l < m; ++l) {
                if (k == j || l == j || l == k) continue;
                const double lhs =
                    plane_curvature(r, f[static_cast<size_t>(j)], f[static_cast<size_t>(k)]) +
                    plane_curvature(r, f[static_cast<size_t>(j)], f[static_cast<size_t>(l)]);
                for (int i = 0; i < m; ++i) {
                    if (i == j) continue;
                    if (m >= 4 && (i == k || i == l)) continue;
                    const double rhs = std::abs(eval_frame(
                        r, {f[static_cast<size_t>(i)], f[static_cast<size_t>(j)]},
                        {f[static_cast<size_t>(k)], f[static_cast<size_t>(l)]}));
                    const double margin = lhs - rhs;
                    if (first || margin < worst) {
                        worst = margin;
                        first = false;
                    }
                }
            }
    return worst;
}

std::string verdict_for(double min_margin, double tol) {
    if (min_margin > tol) return "positive";
    if (min_margin >= -tol) return "nonnegative";
    return "indefinite";
}

template <typename MarginFn>
PositivityReport sampled_minimum(const std::string& condition, int n, int k, int count,
                                 std::uint64_t seed, double tol, MarginFn&& margin) {
    PositivityReport report;
    report.condition = condition;
    report.samples = count;
    bool first = true;
    for (int i = 0; i < count; ++i) {
        Frame frame = sample_frame(n, k, seed, static_cast<std::uint64_t>(i));
        const double m = margin(frame);
        if (first || m < report.min_margin) {
            report.min_margin = m;
            report.witness_frame = std::move(frame);
            first = false;
        }
    }
    report.verdict = verdict_for(report.min_margin, tol);
    return report;
}

} // namespace

Frame sample_frame(int n, int k, std::uint64_t seed, std::uint64_t index) {
    if (k > n) throw OutOfRange("cannot sample a frame larger than the dimension");
    if (k < 0) throw OutOfRange("negative frame size");
    Xoshiro256ss rng(derive_stream_seed(seed, index));
    return draw_frame(rng, n, k);
}

std::vector<Frame> sample_frames(int n, int k, int count, std::uint64_t seed) {
    std::vector<Frame> frames;
    frames.reserve(static_cast<size_t>(std::max(count, 0)));
    for (int i = 0; i < count; ++i)
        frames.push_back(sample_frame(n, k, seed, static_cast<std::uint64_t>(i)));
    return frames;
}

PositivityReport min_p_curvature(const CurvatureStructure& r, int p, int count,
                                 std::uint64_t seed, double tol) {
    const int n = r.n();
    if (p < 0 || p > n - 2) throw OutOfRange("p-curvature needs 0 <= p <= n-2");
    CurvatureStructure tensor = pq_curvature_tensor(r, p, 1);
    if (p == 0) {
        // No plane dependence: the tensor is the scalar h_2.
        PositivityReport report;
        report.condition = "p_curvature[p=0]";
        report.samples = count;
        report.min_margin = tensor.form().as_scalar();
        report.verdict = verdict_for(report.min_margin, tol);
        return report;
    }
    return sampled_minimum("p_curvature[p=" + std::to_string(p) + "]", n, p, count, seed, tol,
                           [&](const Frame& f) { return margin_p_curvature(tensor, f); });
}

PositivityReport isotropic_check(const CurvatureStructure& r, int count, std::uint64_t seed,
                                 double tol) {
    if (r.n() < 4) throw OutOfRange("isotropic curvature needs n >= 4");
    return sampled_minimum("isotropic", r.n(), 4, count, seed, tol,
                           [&](const Frame& f) { return margin_isotropic(r.form(), f); });
}

PositivityReport condition_A_check(const CurvatureStructure& r, int count, std::uint64_t seed,
                                   double tol) {
    const int n = r.n();
    if (n < 3) throw OutOfRange("condition (A) needs n >= 3");
    const int k = std::min(n, 4);
    return sampled_minimum("condition_A", n, k, count, seed, tol,
                           [&](const Frame& f) { return margin_condition_A(r.form(), f); });
}

double replay_margin(const CurvatureStructure& r, const PositivityReport& report) {
    if (report.condition == "isotropic") return margin_isotropic(r.form(), report.witness_frame);
    if (report.condition == "condition_A")
        return margin_condition_A(r.form(), report.witness_frame);
    if (report.condition.rfind("p_curvature", 0) == 0) {
        const int p = static_cast<int>(report.witness_frame.size());
        if (p == 0) return gbw_curvature(r, 1);
        return margin_p_curvature(pq_curvature_tensor(r, p, 1), report.witness_frame);
    }
    throw InvalidParameters("unknown condition: " + report.condition);
}

std::string h4_sign(const CurvatureStructure& r, double tol) {
    if (r.n() < 4) throw OutOfRange("h_4 needs n >= 4");
    const double h4 = gbw_curvature(r, 2);
    if (h4 > tol) return "positive";
    if (h4 >= -tol) return "zero";
    return "negative";
}

} // namespace dfc
