#pragma once

// Majorization x ≻ y, the Schur–Ostrowski quotient test, the three-way
// scan relating ≻ to the G_{k,r} and M_{k,r} families, the subset-sum limit
// s_r(x) = lim_k M_{k,r}(x)^(1/k), and the psi_lambda comparison family
//
//   psi_lambda(s) = min(s, lambda) + lambda * log_+(s / lambda).

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rational.hpp"
#include "sympoly.hpp"
#include "vecnorm.hpp"

namespace symineq {

struct PartialSumViolation {
    std::size_t k;  // 1-based prefix length
    Rational lhs;   // sum of k largest entries of x
    Rational rhs;   // same for y
};

struct MajorizationVerdict {
    bool holds = false;
    bool sum_equal = false;
    std::optional<PartialSumViolation> first_violation;
};

inline MajorizationVerdict majorizes(const RationalVector& x, const RationalVector& y) {
    if (x.size() != y.size()) throw std::invalid_argument("majorizes: vectors have different lengths");
    const auto sx = partial_sums_desc(x);
    const auto sy = partial_sums_desc(y);
    MajorizationVerdict v;
    v.sum_equal = sx.back() == sy.back();
    for (std::size_t k = 0; k + 1 < sx.size(); ++k) {
        if (sx[k] < sy[k]) {
            v.first_violation = PartialSumViolation{k + 1, sx[k], sy[k]};
            break;
        }
    }
    v.holds = v.sum_equal && !v.first_violation;
    return v;
}

/// T-transform (Robin Hood move) on coordinates i, j with weight lambda in [0, 1]:
/// (x_i, x_j) -> (l x_i + (1-l) x_j, l x_j + (1-l) x_i). The input majorizes the output.
inline RationalVector t_transform(const RationalVector& x, std::size_t i, std::size_t j, const Rational& lambda) {
    if (lambda < 0 || lambda > 1) throw std::invalid_argument("t_transform: lambda must lie in [0, 1]");
    if (i >= x.size() || j >= x.size()) throw std::out_of_range("t_transform: index out of range");
    std::vector<Rational> out(x.begin(), x.end());
    out[i] = lambda * x[i] + (1 - lambda) * x[j];
    out[j] = lambda * x[j] + (1 - lambda) * x[i];
    return RationalVector(std::move(out));
}

// ---------------------------------------------------------------------------
// Exact gradients of G and M for the quotient test

/// dGbar_{k,r}/dx_i = (1/(k-1)!) sum_{T ∋ i} w(|T|) sigma_T^(k-1); see gbar_kr for w.
inline std::vector<Rational> grad_gbar_kr(const RationalVector& x, int k, int r) {
    const std::size_t n = x.size();
    if (n > kSupportSubsetMaxN) throw too_large_error("grad_gbar_kr: n exceeds the subset-enumeration limit");
    std::vector<Rational> grad(n, Rational(0));
    if (k <= 0) return grad;
    std::vector<Integer> weight(n + 1, Integer(0));
    for (std::size_t t = 0; t <= n; ++t)
        for (long j = 0; j <= static_cast<long>(r) - 1 - static_cast<long>(t); ++j) {
            const Integer c = binomial(static_cast<long>(n - t), j);
            weight[t] += (j % 2 == 0) ? c : Integer(-c);
        }
    const std::size_t subsets = std::size_t{1} << n;
    std::vector<Rational> subset_sum(subsets, Rational(0));
    for (std::size_t mask = 1; mask < subsets; ++mask) {
        const std::size_t low = mask & (~mask + 1);
        subset_sum[mask] = subset_sum[mask ^ low] + x[static_cast<std::size_t>(__builtin_ctzll(low))];
        const auto size = static_cast<std::size_t>(__builtin_popcountll(mask));
        if (weight[size] == 0) continue;
        const Rational term = Rational(weight[size]) * pow(subset_sum[mask], static_cast<unsigned long>(k - 1));
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1U) grad[i] += term;
    }
    const Rational scale(Integer(1), factorial(static_cast<unsigned long>(k - 1)));
    for (auto& g : grad) g *= scale;
    return grad;
}

/// dG_{k,r}/dx_i = (sum x)^(k-1) / (k-1)! - dGbar_{k,r}/dx_i.
inline std::vector<Rational> grad_g_kr(const RationalVector& x, int k, int r) {
    auto grad = grad_gbar_kr(x, k, r);
    if (k <= 0) return grad;
    const Rational common = pow(x.sum(), static_cast<unsigned long>(k - 1)) / Rational(factorial(k - 1));
    for (auto& g : grad) g = common - g;
    return grad;
}

/// dM_{k,r}/dx_i = k sum over r-subsets containing i of (subset sum)^(k-1).
inline std::vector<Rational> grad_m_kr(const RationalVector& x, int k, int r) {
    const std::size_t n = x.size();
    std::vector<Rational> grad(n, Rational(0));
    if (k <= 0 || static_cast<std::size_t>(r) > n) return grad;
    if (binomial(static_cast<long>(n), r) > kSubsetLimit) throw too_large_error("grad_m_kr: too many r-subsets");
    std::vector<std::size_t> idx(static_cast<std::size_t>(r));
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    while (true) {
        Rational s = 0;
        for (auto i : idx) s += x[i];
        const Rational term = Rational(k) * pow(s, static_cast<unsigned long>(k - 1));
        for (auto i : idx) grad[i] += term;
        std::size_t pos = idx.size();
        while (pos > 0 && idx[pos - 1] == n - idx.size() + pos - 1) --pos;
        if (pos == 0) break;
        ++idx[pos - 1];
        for (std::size_t j = pos; j < idx.size(); ++j) idx[j] = idx[j - 1] + 1;
    }
    return grad;
}

// ---------------------------------------------------------------------------
// Schur–Ostrowski quotient (dPhi/dx_i - dPhi/dx_j) / (x_j - x_i)

struct SchurFamily {
    Family family;  // E, F, G or M
    int k;
    int r;
};

/// Schur-convex families expect a nonpositive quotient.
inline bool is_schur_convex_family(Family f) { return f == Family::M; }

inline std::vector<Rational> family_gradient(const SchurFamily& fam, const RationalVector& x) {
    switch (fam.family) {
        case Family::E: return grad_f_kr(x, 1, fam.k);
        case Family::F: return grad_f_kr(x, fam.r, fam.k);
        case Family::G: return grad_g_kr(x, fam.k, fam.r);
        case Family::M: return grad_m_kr(x, fam.k, fam.r);
        default: break;
    }
    throw std::invalid_argument("family_gradient: unsupported family " + to_string(fam.family));
}

struct SchurOstrowskiVerdict {
    bool holds = true;
    bool vacuous = false;  // all entries equal, no pair to test
    bool schur_convex_direction = false;
    std::size_t pairs_checked = 0;
    Rational worst_quotient = 0;  // the quotient closest to (or past) the wrong sign
    std::pair<std::size_t, std::size_t> worst_pair{0, 0};
};

/// Exact quotient test at one point: >= 0 for all pairs certifies the
/// Schur-concave direction (E, F, G), <= 0 the Schur-convex one (M).
inline SchurOstrowskiVerdict schur_ostrowski_sample(const SchurFamily& fam, const RationalVector& x) {
    const auto grad = family_gradient(fam, x);
    SchurOstrowskiVerdict v;
    v.schur_convex_direction = is_schur_convex_family(fam.family);
    bool first = true;
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = i + 1; j < x.size(); ++j) {
            if (x[i] == x[j]) continue;
            Rational q = (grad[i] - grad[j]) / (x[j] - x[i]);
            if (v.schur_convex_direction) q = -q;
            ++v.pairs_checked;
            if (first || q < v.worst_quotient) {
                v.worst_quotient = q;
                v.worst_pair = {i, j};
                first = false;
            }
        }
    }
    if (v.pairs_checked == 0) {
        v.vacuous = true;
        return v;
    }
    v.holds = v.worst_quotient >= 0;
    if (v.schur_convex_direction) v.worst_quotient = -v.worst_quotient;
    return v;
}

// ---------------------------------------------------------------------------
// Majorization vs. G / M families

struct FamilyCell {
    int r;
    int k;
    Rational value_x;
    Rational value_y;
    bool ok;
};

struct Theorem2Report {
    bool applicable = false;  // requires sum x = sum y
    int k_max = 0;
    MajorizationVerdict a;
    std::vector<FamilyCell> b_cells;  // G_{k,r}(x) <= G_{k,r}(y)
    std::vector<FamilyCell> c_cells;  // M_{k,r}(x) >= M_{k,r}(y)
    std::optional<std::size_t> b_first_violation;
    std::optional<std::size_t> c_first_violation;

    bool b_holds() const noexcept { return applicable && !b_first_violation; }
    bool c_holds() const noexcept { return applicable && !c_first_violation; }
    /// Families are infinite in k; cells stop at k_max, so agreement here is evidence, not proof.
    bool truncated() const noexcept { return true; }
    bool consistent() const noexcept { return !applicable || (a.holds == b_holds() && a.holds == c_holds()); }
};

/// Cells are ordered by (r, k) with 1 <= r <= n and r <= k <= k_max.
inline Theorem2Report theorem2_scan(const RationalVector& x, const RationalVector& y, int k_max) {
    if (x.size() != y.size()) throw std::invalid_argument("theorem2_scan: vectors have different lengths");
    if (k_max < 1) throw std::invalid_argument("theorem2_scan: k_max must be at least 1");
    Theorem2Report rep;
    rep.k_max = k_max;
    rep.a = majorizes(x, y);
    rep.applicable = rep.a.sum_equal;
    if (!rep.applicable) return rep;
    const int n = static_cast<int>(x.size());
    for (int r = 1; r <= n; ++r) {
        for (int k = r; k <= k_max; ++k) {
            Rational gx = g_kr(x, k, r), gy = g_kr(y, k, r);
            const bool b_ok = gx <= gy;
            rep.b_cells.push_back({r, k, std::move(gx), std::move(gy), b_ok});
            if (!b_ok && !rep.b_first_violation) rep.b_first_violation = rep.b_cells.size() - 1;

            Rational mx = m_kr(x, k, r), my = m_kr(y, k, r);
            const bool c_ok = mx >= my;
            rep.c_cells.push_back({r, k, std::move(mx), std::move(my), c_ok});
            if (!c_ok && !rep.c_first_violation) rep.c_first_violation = rep.c_cells.size() - 1;
        }
    }
    return rep;
}

/// (M_{k,r}(x))^(1/k) for k = 1..k_max; converges to the sum of the r largest entries.
inline std::vector<double> s_r_limit_estimate(const RationalVector& x, int r, int k_max) {
    if (r < 1 || static_cast<std::size_t>(r) > x.size()) throw std::invalid_argument("s_r_limit_estimate: need 1 <= r <= n");
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(std::max(k_max, 0)));
    for (int k = 1; k <= k_max; ++k) {
        const Rational m = m_kr(x, k, r);
        out.push_back(m == 0 ? 0.0 : std::exp(log_of(m) / k));
    }
    return out;
}

// ---------------------------------------------------------------------------
// psi_lambda

class PsiLambda {
public:
    explicit PsiLambda(Rational lambda) : lambda_(std::move(lambda)) {
        if (lambda_ <= 0) throw std::invalid_argument("PsiLambda: lambda must be positive");
    }
    const Rational& lambda() const noexcept { return lambda_; }

    /// min(s, lambda) + lambda * max(0, log(s / lambda)), natural log.
    double operator()(double s) const {
        const double lam = lambda_.get_d();
        if (s <= lam) return s;
        return lam + lam * std::log(s / lam);
    }

private:
    Rational lambda_;
};

inline double psi_sum(const RationalVector& x, const PsiLambda& psi) {
    double total = 0.0;
    for (const auto& v : x) total += psi(v.get_d());
    return total;
}

struct PsiPoint {
    Rational lambda;
    double sum_x;
    double sum_y;
    bool holds;  // sum psi(x_i) <= sum psi(y_i), up to rounding
};

struct PsiReport {
    std::vector<PsiPoint> points;
    bool all_hold() const noexcept {
        return std::all_of(points.begin(), points.end(), [](const PsiPoint& p) { return p.holds; });
    }
};

/// Empirical check of sum psi_lambda(x_i) <= sum psi_lambda(y_i) over a lambda grid.
inline PsiReport psi_compare(const RationalVector& x, const RationalVector& y, const std::vector<Rational>& lambda_grid,
                             double rel_tol = 1e-12) {
    if (x.size() != y.size()) throw std::invalid_argument("psi_compare: vectors have different lengths");
    PsiReport rep;
    for (const auto& lam : lambda_grid) {
        const PsiLambda psi(lam);
        const double sx = psi_sum(x, psi), sy = psi_sum(y, psi);
        rep.points.push_back({lam, sx, sy, sx <= sy + rel_tol * std::max(1.0, std::abs(sy))});
    }
    return rep;
}

}  // namespace symineq
