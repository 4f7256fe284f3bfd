#pragma once

// Sufficient conditions for l^p mean inequalities from F_{k,r} comparisons.
//
// If F_{k,r}(x) <= F_{k,r}(y) for every r <= k <= nr, then
//   ||x||_p <= ||y||_p  for 0 <= p <= 1,
// and, when additionally sum x = sum y,
//   ||x||_p >= ||y||_p  for 1 <= p <= r+1.
//
// Hypotheses are compared exactly. Conclusions are always measured on a
// p-grid (never assumed), so the report doubles as a falsifier when the
// inputs come from alternative templates.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "rational.hpp"
#include "spectral.hpp"
#include "sympoly.hpp"
#include "vecnorm.hpp"

namespace symineq {

struct HypothesisCheck {
    int k;
    Rational fx;
    Rational fy;
    bool pass;
};

struct HypothesisReport {
    int r = 0;
    std::size_t n = 0;
    std::vector<HypothesisCheck> checks;  // k = r..nr in order
    bool all_pass = true;
    bool sums_equal = false;
    std::optional<std::size_t> first_failure;  // index into checks
};

/// Compares precomputed coefficient lists F_{0,r}..F_{nr,r} for r <= k <= nr.
inline HypothesisReport compare_hypotheses(std::span<const Rational> fx, std::span<const Rational> fy, int r, std::size_t n,
                                           bool sums_equal) {
    const std::size_t top = n * static_cast<std::size_t>(r);
    if (fx.size() != top + 1 || fy.size() != top + 1)
        throw std::invalid_argument("compare_hypotheses: coefficient lists must have length n r + 1");
    HypothesisReport rep;
    rep.r = r;
    rep.n = n;
    rep.sums_equal = sums_equal;
    for (std::size_t k = static_cast<std::size_t>(r); k <= top; ++k) {
        const bool pass = fx[k] <= fy[k];
        rep.checks.push_back({static_cast<int>(k), fx[k], fy[k], pass});
        if (!pass && !rep.first_failure) rep.first_failure = rep.checks.size() - 1;
    }
    rep.all_pass = !rep.first_failure;
    return rep;
}

inline HypothesisReport check_hypotheses(const RationalVector& x, const RationalVector& y, int r) {
    if (x.size() != y.size()) throw std::invalid_argument("check_hypotheses: vectors have different lengths");
    if (r < 1) throw std::invalid_argument("check_hypotheses: r must be at least 1");
    const auto fx = f_kr_all(x, r);
    const auto fy = f_kr_all(y, r);
    return compare_hypotheses(fx, fy, r, x.size(), x.sum() == y.sum());
}

struct GridPoint {
    double p;
    double nx;      // ||x||_p
    double ny;      // ||y||_p
    double margin;  // slack of the required inequality; >= -tol passes
    bool pass;
};

struct ConclusionOptions {
    int grid_points = 101;
    double tol = 1e-9;
    /// When > r+1, also sample (r+1, explore_to]; those points are reported
    /// as uncertified and never affect the verdict.
    double explore_to = 0.0;
};

struct ConclusionReport {
    int r = 0;
    double tol = 0.0;
    bool sums_equal = false;
    std::vector<GridPoint> grid_low;      // p in [0, 1]:   ||x||_p <= ||y||_p
    std::vector<GridPoint> grid_high;     // p in [1, r+1]: ||x||_p >= ||y||_p
    std::vector<GridPoint> grid_explore;  // uncertified, same direction as grid_high

    bool low_pass() const noexcept {
        return std::all_of(grid_low.begin(), grid_low.end(), [](const GridPoint& g) { return g.pass; });
    }
    bool high_pass() const noexcept {
        return std::all_of(grid_high.begin(), grid_high.end(), [](const GridPoint& g) { return g.pass; });
    }
    /// The high grid only counts when the sums agree.
    bool all_pass() const noexcept { return low_pass() && (!sums_equal || high_pass()); }
};

inline std::vector<double> uniform_grid(double a, double b, int points) {
    if (points < 2) throw std::invalid_argument("uniform_grid: need at least two points");
    std::vector<double> g(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i) g[i] = a + (b - a) * i / (points - 1);
    g.back() = b;
    return g;
}

inline ConclusionReport verify_conclusions(const RationalVector& x, const RationalVector& y, int r,
                                           const ConclusionOptions& opt = {}) {
    if (x.size() != y.size()) throw std::invalid_argument("verify_conclusions: vectors have different lengths");
    if (r < 1) throw std::invalid_argument("verify_conclusions: r must be at least 1");
    if (opt.grid_points < 3) throw std::invalid_argument("verify_conclusions: grid_points must be at least 3");
    if (!(opt.tol > 0)) throw std::invalid_argument("verify_conclusions: tol must be positive");

    const auto xd = x.to_doubles();
    const auto yd = y.to_doubles();
    auto point = [&](double p, bool lower_side) {
        const double nx = lp_mean(std::span<const double>(xd), p);
        const double ny = lp_mean(std::span<const double>(yd), p);
        const double margin = lower_side ? ny - nx : nx - ny;
        return GridPoint{p, nx, ny, margin, margin >= -opt.tol};
    };

    ConclusionReport rep;
    rep.r = r;
    rep.tol = opt.tol;
    rep.sums_equal = x.sum() == y.sum();
    for (double p : uniform_grid(0.0, 1.0, opt.grid_points)) rep.grid_low.push_back(point(p, true));
    for (double p : uniform_grid(1.0, r + 1.0, opt.grid_points)) rep.grid_high.push_back(point(p, false));
    if (opt.explore_to > r + 1.0) {
        const auto g = uniform_grid(r + 1.0, opt.explore_to, opt.grid_points);
        for (std::size_t i = 1; i < g.size(); ++i) rep.grid_explore.push_back(point(g[i], false));
    }
    return rep;
}

struct FullReport {
    std::vector<HypothesisReport> per_r;  // r = 1..r_max
    int certified_r = 0;                  // largest r whose hypotheses all pass; 0 if none
    bool sums_equal = false;
    /// Certified p-interval is [0, certified_upper]: r+1 with equal sums, else 1.
    double certified_upper = 0.0;
    /// (r, index into per_r[r-1].checks) of the first failure above certified_r.
    std::optional<std::pair<int, std::size_t>> failure_witness;
    std::optional<ConclusionReport> conclusions;
};

/// Runs the hypotheses for r = 1..r_max from a coefficient source
/// (r -> F_{0,r}..F_{nr,r}) and measures the conclusions at the certified r
/// on the given vectors.
inline FullReport full_report(const std::function<std::vector<Rational>(const RationalVector&, int)>& coefficients_x,
                              const std::function<std::vector<Rational>(const RationalVector&, int)>& coefficients_y,
                              const RationalVector& x, const RationalVector& y, int r_max,
                              const ConclusionOptions& opt = {}) {
    if (x.size() != y.size()) throw std::invalid_argument("full_report: vectors have different lengths");
    if (r_max < 1) throw std::invalid_argument("full_report: r_max must be at least 1");
    FullReport rep;
    rep.sums_equal = x.sum() == y.sum();
    for (int r = 1; r <= r_max; ++r) {
        const auto fx = coefficients_x(x, r);
        const auto fy = coefficients_y(y, r);
        rep.per_r.push_back(compare_hypotheses(fx, fy, r, x.size(), rep.sums_equal));
        if (rep.per_r.back().all_pass) rep.certified_r = r;
    }
    for (const auto& h : rep.per_r) {
        if (h.r > rep.certified_r && h.first_failure) {
            rep.failure_witness = std::make_pair(h.r, *h.first_failure);
            break;
        }
    }
    if (rep.certified_r > 0) {
        rep.certified_upper = rep.sums_equal ? rep.certified_r + 1.0 : 1.0;
        rep.conclusions = verify_conclusions(x, y, rep.certified_r, opt);
    }
    return rep;
}

inline FullReport full_report(const RationalVector& x, const RationalVector& y, int r_max, const ConclusionOptions& opt = {}) {
    auto coeffs = [](const RationalVector& v, int r) { return f_kr_all(v, r); };
    return full_report(coeffs, coeffs, x, y, r_max, opt);
}

/// Matrix form: hypotheses come exactly from det(sum_j X^j t^j / j!), while
/// the grids run on eigenvalue surrogates of the two symmetric PSD matrices.
inline FullReport full_report(const IntMatrix& gram_x, const IntMatrix& gram_y, int r_max, const ConclusionOptions& opt = {}) {
    if (gram_x.rows() != gram_y.rows()) throw std::invalid_argument("full_report: matrices have different sizes");
    const auto x = eigenvalue_surrogate(gram_x);
    const auto y = eigenvalue_surrogate(gram_y);
    return full_report([&](const RationalVector&, int r) { return f_from_matrix(gram_x, r); },
                       [&](const RationalVector&, int r) { return f_from_matrix(gram_y, r); }, x, y, r_max, opt);
}

inline HypothesisReport check_hypotheses(const IntMatrix& gram_x, const IntMatrix& gram_y, int r) {
    if (gram_x.rows() != gram_y.rows()) throw std::invalid_argument("check_hypotheses: matrices have different sizes");
    if (r < 1) throw std::invalid_argument("check_hypotheses: r must be at least 1");
    const auto fx = f_from_matrix(gram_x, r);
    const auto fy = f_from_matrix(gram_y, r);
    return compare_hypotheses(fx, fy, r, gram_x.rows(), trace(gram_x) == trace(gram_y));
}

}  // namespace symineq
