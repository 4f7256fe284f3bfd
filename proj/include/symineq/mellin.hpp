#pragma once

// Numerical checks of the Mellin-transform identities behind the l^p
// conclusions:
//
//   I_r(p) = int_0^inf log P_r(s) s^-p ds/s,                    0 < p < 1
//   J_r(p) = int_0^inf (s - log P_r(s)) s^-p ds/s,              1 < p < r+1
//
// and, for a >= 0, (1/I_r(p)) int log P_r(a t) t^-p dt/t = a^p (likewise for
// J_r with delta_r(a t)). Integrals are taken in u = log s with a composite
// trapezoid rule whose step is halved until successive sums agree; the
// integrands decay exponentially in u at both ends, which makes the
// trapezoid rule converge geometrically.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>

namespace symineq::mellin {

struct QuadratureResult {
    double value = 0.0;
    double estimated_error = 0.0;
    long node_count = 0;
};

enum class Identity { id1, id2 };

inline std::string to_string(Identity w) { return w == Identity::id1 ? "id1" : "id2"; }

/// log P_r(e^u), P_r(s) = 1 + s + ... + s^r / r!, stable for any real u.
inline double log_taylor_exp(double u, int r) {
    if (u <= 0.0) {
        const double s = std::exp(u);
        double term = 1.0, sum = 0.0;
        for (int j = 1; j <= r; ++j) {
            term *= s / j;
            sum += term;
        }
        return std::log1p(sum);
    }
    // log-sum-exp over j u - log j!
    double best = -std::numeric_limits<double>::infinity();
    for (int j = 0; j <= r; ++j) best = std::max(best, j * u - std::lgamma(j + 1.0));
    double acc = 0.0;
    for (int j = 0; j <= r; ++j) acc += std::exp(j * u - std::lgamma(j + 1.0) - best);
    return best + std::log(acc);
}

/// delta_r(s) = s - log P_r(s) >= 0, which is O(s^(r+1)) near 0.
///
/// For s <= 1 it is evaluated as -log1p(-e^-s R(s)) with the Taylor remainder
/// R(s) = sum_{j>r} s^j / j! summed directly, so no cancellation occurs.
inline double delta_r(double s, int r) {
    if (r < 1) throw std::invalid_argument("delta_r: r must be at least 1");
    if (!(s >= 0.0)) throw std::domain_error("delta_r: s must be nonnegative");
    if (s == 0.0) return 0.0;
    if (s <= 1.0) {
        double term = 1.0;
        for (int j = 1; j <= r + 1; ++j) term *= s / j;
        double remainder = 0.0;
        for (int j = r + 2; term > 1e-18 * remainder; ++j) {
            remainder += term;
            term *= s / j;
        }
        return -std::log1p(-std::exp(-s) * remainder);
    }
    return s - log_taylor_exp(std::log(s), r);
}

namespace detail {

inline double delta_exp(double u, int r) {
    if (u <= 0.0) return delta_r(std::exp(u), r);
    return std::exp(u) - log_taylor_exp(u, r);
}

// Logs of the two integrands. Far left they use the leading terms
// log P_r(s) ~ s and delta_r(s) ~ s^(r+1)/(r+1)!, whose relative error is
// O(s) < 1e-13; near the ends of the p-range the weight e^-pu would
// otherwise overflow while the integrand underflows.
inline constexpr double kLeadingOrderBelow = -30.0;

inline double log_integrand(Identity which, double u, int r) {
    if (which == Identity::id1) {
        if (u <= kLeadingOrderBelow) return u;
        return std::log(log_taylor_exp(u, r));
    }
    if (u > kLeadingOrderBelow) {
        const double d = delta_exp(u, r);
        if (d > 0.0) return std::log(d);
    }
    return (r + 1.0) * u - std::lgamma(r + 2.0);
}

/// int_lo^hi f(u) du by trapezoid halving from step h0 until two
/// consecutive sums agree to rel_tol.
template <typename F>
QuadratureResult trapezoid(F&& f, double lo, double hi, double rel_tol = 1e-13, int max_levels = 14) {
    double h = 0.5;
    long cells = std::max(1L, static_cast<long>(std::ceil((hi - lo) / h)));
    h = (hi - lo) / static_cast<double>(cells);
    double sum = 0.5 * (f(lo) + f(hi));
    for (long i = 1; i < cells; ++i) sum += f(lo + static_cast<double>(i) * h);
    long nodes = cells + 1;
    double estimate = sum * h;
    double error = std::numeric_limits<double>::infinity();
    for (int level = 1; level <= max_levels; ++level) {
        double mid = 0.0;
        for (long i = 0; i < cells; ++i) mid += f(lo + (static_cast<double>(i) + 0.5) * h);
        nodes += cells;
        sum += mid;
        cells *= 2;
        h *= 0.5;
        const double refined = sum * h;
        error = std::abs(refined - estimate);
        estimate = refined;
        if (level >= 3 && error <= rel_tol * std::abs(estimate)) break;
    }
    return {estimate, error, nodes};
}

// Decay margin: the discarded tails are below e^-kTail of the peak scale.
inline constexpr double kTail = 45.0;

inline void require_range(Identity which, int r, double p) {
    if (r < 1) throw std::invalid_argument("mellin: r must be at least 1");
    if (which == Identity::id1 && !(p > 0.0 && p < 1.0))
        throw std::domain_error("mellin: I_r(p) needs 0 < p < 1, got p = " + std::to_string(p));
    if (which == Identity::id2 && !(p > 1.0 && p < r + 1.0))
        throw std::domain_error("mellin: J_r(p) needs 1 < p < r+1, got p = " + std::to_string(p));
}

/// int_{-inf}^{inf} g(u + shift) e^{-p u} du, with g = log P_r(e^.) or delta_r(e^.).
inline QuadratureResult shifted_transform(Identity which, int r, double p, double shift) {
    require_range(which, r, p);
    // Integrand ~ e^{alpha_lo u} as u -> -inf and ~ e^{-alpha_hi u} (times a
    // polynomial in u) as u -> +inf.
    const double alpha_lo = which == Identity::id1 ? 1.0 - p : r + 1.0 - p;
    const double alpha_hi = which == Identity::id1 ? p : p - 1.0;
    const double lo = -shift - kTail / alpha_lo;
    const double hi = -shift + kTail / alpha_hi + 2.0 * std::log1p(kTail / alpha_hi);
    return trapezoid([&](double u) { return std::exp(log_integrand(which, u + shift, r) - p * u); }, lo, hi);
}

}  // namespace detail

inline QuadratureResult integral_I(int r, double p) { return detail::shifted_transform(Identity::id1, r, p, 0.0); }

inline QuadratureResult integral_J(int r, double p) { return detail::shifted_transform(Identity::id2, r, p, 0.0); }

/// Left-hand side of id1/id2: the normalized transform of the a-scaled integrand.
inline double identity_lhs(Identity which, double a, double p, int r) {
    detail::require_range(which, r, p);
    if (!(a >= 0.0)) throw std::domain_error("identity_lhs: a must be nonnegative");
    if (a == 0.0) return 0.0;
    const auto norm = detail::shifted_transform(which, r, p, 0.0);
    const auto scaled = detail::shifted_transform(which, r, p, std::log(a));
    return scaled.value / norm.value;
}

/// |LHS - a^p| / max(a^p, eps).
inline double identity_check(Identity which, double a, double p, int r) {
    const double lhs = identity_lhs(which, a, p, r);
    const double target = a == 0.0 ? 0.0 : std::pow(a, p);
    return std::abs(lhs - target) / std::max(target, std::numeric_limits<double>::min());
}

}  // namespace symineq::mellin
