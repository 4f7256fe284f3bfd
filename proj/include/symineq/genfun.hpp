#pragma once

// Truncated power series in one formal variable t with exact rational
// coefficients, and the per-variable products
//
//   f(x, t) = prod_i  tpl(x_i t)        mod t^(D+1)
//
// that generate F_{k,r} (tpl = degree-r Taylor polynomial of exp) and its
// variants: order-zero templates Q_r and finite catalysts c.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "rational.hpp"
#include "vecnorm.hpp"

namespace symineq {

class TruncatedSeries {
public:
    /// The constant series 1 modulo t^(degree_bound+1).
    explicit TruncatedSeries(std::size_t degree_bound) : coeffs_(degree_bound + 1, Rational(0)) { coeffs_[0] = 1; }

    explicit TruncatedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw std::invalid_argument("TruncatedSeries: need at least one coefficient");
    }

    TruncatedSeries(std::initializer_list<Rational> coeffs) : TruncatedSeries(std::vector<Rational>(coeffs)) {}

    std::size_t degree_bound() const noexcept { return coeffs_.size() - 1; }
    const Rational& operator[](std::size_t k) const { return coeffs_[k]; }
    Rational& operator[](std::size_t k) { return coeffs_[k]; }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

    /// Same series with a new bound: extra coefficients are dropped, missing ones are zero.
    TruncatedSeries truncated(std::size_t degree_bound) const {
        std::vector<Rational> out(degree_bound + 1, Rational(0));
        std::copy_n(coeffs_.begin(), std::min(out.size(), coeffs_.size()), out.begin());
        return TruncatedSeries(std::move(out));
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.coeffs_ == b.coeffs_; }

private:
    std::vector<Rational> coeffs_;
};

/// Exact Cauchy product truncated at the common degree bound.
inline TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.degree_bound() != b.degree_bound())
        throw std::invalid_argument("series_mul: degree bounds differ (" + std::to_string(a.degree_bound()) + " vs " +
                                    std::to_string(b.degree_bound()) + ")");
    const std::size_t d = a.degree_bound();
    std::vector<Rational> out(d + 1, Rational(0));
    for (std::size_t i = 0; i <= d; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; i + j <= d; ++j) out[i + j] += a[i] * b[j];
    }
    return TruncatedSeries(std::move(out));
}

/// log of a series with constant term 1 (result has constant term 0).
inline TruncatedSeries series_log(const TruncatedSeries& f) {
    if (f[0] != 1) throw std::domain_error("series_log: constant term must be 1");
    const std::size_t d = f.degree_bound();
    std::vector<Rational> g(d + 1, Rational(0));
    // k g_k = k f_k - sum_{j=1}^{k-1} j g_j f_{k-j}
    for (std::size_t k = 1; k <= d; ++k) {
        Rational acc = Rational(static_cast<long>(k)) * f[k];
        for (std::size_t j = 1; j < k; ++j) acc -= Rational(static_cast<long>(j)) * g[j] * f[k - j];
        g[k] = acc / static_cast<long>(k);
    }
    return TruncatedSeries(std::move(g));
}

/// exp of a series with constant term 0.
inline TruncatedSeries series_exp(const TruncatedSeries& g) {
    if (g[0] != 0) throw std::domain_error("series_exp: constant term must be 0");
    const std::size_t d = g.degree_bound();
    std::vector<Rational> f(d + 1, Rational(0));
    f[0] = 1;
    // k f_k = sum_{j=1}^{k} j g_j f_{k-j}
    for (std::size_t k = 1; k <= d; ++k) {
        Rational acc = 0;
        for (std::size_t j = 1; j <= k; ++j) acc += Rational(static_cast<long>(j)) * g[j] * f[k - j];
        f[k] = acc / static_cast<long>(k);
    }
    return TruncatedSeries(std::move(f));
}

/// A polynomial s -> sum_j a_j s^j with a_0 = 1 and a_j >= 0.
class SeriesTemplate {
public:
    explicit SeriesTemplate(std::vector<Rational> base_coeffs) : base_(std::move(base_coeffs)) {
        if (base_.empty() || base_[0] != 1) throw std::invalid_argument("SeriesTemplate: a_0 must be 1");
        for (const auto& a : base_)
            if (a < 0) throw std::invalid_argument("SeriesTemplate: coefficients must be nonnegative");
    }

    /// P_r(s) = 1 + s + ... + s^r / r!
    static SeriesTemplate taylor(int r) {
        if (r < 0) throw std::invalid_argument("SeriesTemplate::taylor: r must be nonnegative");
        std::vector<Rational> a(static_cast<std::size_t>(r) + 1);
        for (int j = 0; j <= r; ++j) a[j] = Rational(Integer(1), factorial(static_cast<unsigned long>(j)));
        return SeriesTemplate(std::move(a));
    }

    /// Q_r(s) = P_r(s) + sum_{j>r} a_{r,j} s^j / j!, finitely many extra terms,
    /// each weight in [0, 1). The caller is responsible for the growth condition
    /// on log Q_r that makes the template admissible.
    static SeriesTemplate order_zero(int r, const std::vector<Rational>& extra_weights) {
        std::vector<Rational> a = taylor(r).base_;
        for (std::size_t i = 0; i < extra_weights.size(); ++i) {
            const Rational& w = extra_weights[i];
            if (w < 0 || w >= 1) throw std::invalid_argument("SeriesTemplate::order_zero: weights must lie in [0, 1)");
            const auto j = static_cast<unsigned long>(r) + 1 + i;
            a.push_back(w / Rational(factorial(j)));
        }
        return SeriesTemplate(std::move(a));
    }

    std::size_t degree() const noexcept { return base_.size() - 1; }
    const std::vector<Rational>& base_coeffs() const noexcept { return base_; }

private:
    std::vector<Rational> base_;
};

/// s -> tpl(a s) truncated at degree_bound.
inline TruncatedSeries substitute_scale(const SeriesTemplate& tpl, const Rational& a, std::size_t degree_bound) {
    if (a < 0) throw std::invalid_argument("substitute_scale: scale must be nonnegative");
    std::vector<Rational> out(degree_bound + 1, Rational(0));
    Rational power = 1;
    const auto& base = tpl.base_coeffs();
    for (std::size_t j = 0; j <= degree_bound && j < base.size(); ++j) {
        out[j] = power * base[j];
        power *= a;
    }
    return TruncatedSeries(std::move(out));
}

namespace detail {

// acc <- acc * factor, in place, where factor has finitely many nonzero
// coefficients; iterating k downward lets acc be overwritten as we go.
inline void multiply_in_place(std::vector<Rational>& acc, const std::vector<Rational>& factor) {
    const std::size_t d = acc.size() - 1;
    const std::size_t m = std::min(factor.size() - 1, d);
    for (std::size_t k = d + 1; k-- > 0;) {
        Rational sum = acc[k] * factor[0];
        for (std::size_t j = 1; j <= std::min(m, k); ++j) sum += acc[k - j] * factor[j];
        acc[k] = sum;
    }
}

inline std::vector<Rational> scaled_template(const SeriesTemplate& tpl, const Rational& a) {
    std::vector<Rational> f = tpl.base_coeffs();
    Rational power = 1;
    for (auto& c : f) {
        c *= power;
        power *= a;
    }
    return f;
}

}  // namespace detail

/// prod_i tpl(x_i t) mod t^(D+1).
inline TruncatedSeries product_over_vector(const RationalVector& x, const SeriesTemplate& tpl, std::size_t degree_bound) {
    std::vector<Rational> acc(degree_bound + 1, Rational(0));
    acc[0] = 1;
    for (const auto& xi : x) {
        if (xi == 0) continue;
        detail::multiply_in_place(acc, detail::scaled_template(tpl, xi));
    }
    return TruncatedSeries(std::move(acc));
}

/// Default bound n * deg(tpl): every coefficient beyond it vanishes.
inline TruncatedSeries product_over_vector(const RationalVector& x, const SeriesTemplate& tpl) {
    return product_over_vector(x, tpl, x.size() * tpl.degree());
}

/// Finite catalyst c = (c_0 = 1, c_1, ..., c_J), c_j >= 0.
class Catalyst {
public:
    explicit Catalyst(std::vector<Rational> c) : c_(std::move(c)) {
        if (c_.empty() || c_[0] != 1) throw std::invalid_argument("Catalyst: c_0 must be 1");
        for (const auto& v : c_)
            if (v < 0) throw std::invalid_argument("Catalyst: entries must be nonnegative");
    }
    Catalyst(std::initializer_list<Rational> c) : Catalyst(std::vector<Rational>(c)) {}

    std::size_t size() const noexcept { return c_.size(); }
    const Rational& operator[](std::size_t j) const { return c_[j]; }
    auto begin() const noexcept { return c_.begin(); }
    auto end() const noexcept { return c_.end(); }

private:
    std::vector<Rational> c_;
};

/// x ⊗ c = (x_i c_j), row-major in (i, j).
inline RationalVector tensor(const RationalVector& x, const Catalyst& c) {
    std::vector<Rational> out;
    out.reserve(x.size() * c.size());
    for (const auto& xi : x)
        for (const auto& cj : c) out.push_back(xi * cj);
    return RationalVector(std::move(out));
}

/// prod_i prod_j tpl(c_j x_i t) mod t^(D+1). With the r = 1 template the
/// coefficient of t^k is E_{k,c}(x) = E_k(x ⊗ c).
inline TruncatedSeries catalyst_product(const RationalVector& x, const Catalyst& c, const SeriesTemplate& tpl,
                                        std::size_t degree_bound) {
    // Multiply one catalyst layer at a time: layer j is prod_i tpl(c_j x_i t).
    TruncatedSeries acc(degree_bound);
    for (const auto& cj : c) acc = series_mul(acc, product_over_vector(x.scaled(cj), tpl, degree_bound));
    return acc;
}

}  // namespace symineq
