#pragma once

// Integer matrices Q -> Gram X = Q Q^T -> exact coefficients of
//
//   det(I + tX)                       (E_k of the eigenvalues)
//   det(sum_{j<=r} X^j t^j / j!)      (F_{k,r} of the eigenvalues)
//
// without extracting eigenvalues numerically. For the l^p grids, which do
// need the eigenvalues themselves, eigenvalue_surrogate isolates the real
// roots of the characteristic polynomial by exact Sturm bisection.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "genfun.hpp"
#include "rational.hpp"
#include "vecnorm.hpp"

namespace symineq {

class IntMatrix {
public:
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        for (const auto& row : rows) {
            if (row.size() != cols_) throw std::invalid_argument("IntMatrix: ragged rows");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
        IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_)
                throw std::invalid_argument("IntMatrix: row " + std::to_string(i) + " has " +
                                            std::to_string(rows[i].size()) + " entries, expected " +
                                            std::to_string(m.cols_));
            std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(i * m.cols_));
        }
        return m;
    }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }
    std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::int64_t> data_;
};

/// Q Q^T.
inline IntMatrix gram(const IntMatrix& q) {
    IntMatrix x(q.rows(), q.rows());
    for (std::size_t i = 0; i < q.rows(); ++i)
        for (std::size_t j = 0; j < q.rows(); ++j) {
            std::int64_t s = 0;
            for (std::size_t l = 0; l < q.cols(); ++l) s += q(i, l) * q(j, l);
            x(i, j) = s;
        }
    return x;
}

inline Integer trace(const IntMatrix& x) {
    if (!x.square()) throw std::invalid_argument("trace: matrix is not square");
    Integer t = 0;
    for (std::size_t i = 0; i < x.rows(); ++i) t += Integer(static_cast<long>(x(i, i)));
    return t;
}

namespace detail {

using RationalMatrix = std::vector<std::vector<Rational>>;

inline RationalMatrix to_rational(const IntMatrix& x) {
    RationalMatrix m(x.rows(), std::vector<Rational>(x.cols()));
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j) m[i][j] = Rational(static_cast<long>(x(i, j)));
    return m;
}

inline RationalMatrix matmul(const RationalMatrix& a, const RationalMatrix& b) {
    const std::size_t n = a.size(), m = b.front().size(), inner = b.size();
    RationalMatrix c(n, std::vector<Rational>(m, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < inner; ++l) {
            if (a[i][l] == 0) continue;
            for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
        }
    return c;
}

/// Gaussian elimination over Q with first-nonzero pivoting.
inline Rational determinant(RationalMatrix m) {
    const std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t row = col + 1; row < n; ++row) {
            if (m[row][col] == 0) continue;
            const Rational factor = m[row][col] / m[col][col];
            for (std::size_t j = col; j < n; ++j) m[row][j] -= factor * m[col][j];
        }
    }
    return det;
}

// Dense rational polynomials, coefficient i multiplies z^i. Kept trimmed (no
// trailing zeros); the zero polynomial is the empty vector.
using Poly = std::vector<Rational>;

inline void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Rational eval(const Poly& p, const Rational& z) {
    Rational acc = 0;
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * z + p[i];
    return acc;
}

inline Poly derivative(const Poly& p) {
    Poly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
    trim(d);
    return d;
}

/// Quotient and remainder of a / b, b nonzero.
inline std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
    if (b.empty()) throw std::domain_error("polynomial division by zero");
    trim(a);
    if (a.size() < b.size()) return {Poly{}, a};
    Poly q(a.size() - b.size() + 1, Rational(0));
    for (std::size_t i = q.size(); i-- > 0;) {
        const Rational c = a[i + b.size() - 1] / b.back();
        q[i] = c;
        for (std::size_t j = 0; j < b.size(); ++j) a[i + j] -= c * b[j];
    }
    trim(a);
    trim(q);
    return {q, a};
}

inline Poly monic(Poly p) {
    trim(p);
    if (p.empty()) return p;
    const Rational lead = p.back();
    for (auto& c : p) c /= lead;
    return p;
}

inline Poly gcd(Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

/// Yun's square-free decomposition: p = c * prod_i parts[i]^(i+1).
inline std::vector<Poly> squarefree_parts(const Poly& p) {
    std::vector<Poly> parts;
    Poly a = monic(p);
    Poly b = derivative(a);
    Poly c = gcd(a, b);
    Poly w = divmod(a, c).first;
    Poly y = divmod(b, c).first;
    while (w.size() > 1) {
        Poly wd = derivative(w);
        Poly z = y;
        z.resize(std::max(z.size(), wd.size()), Rational(0));
        for (std::size_t i = 0; i < wd.size(); ++i) z[i] -= wd[i];
        trim(z);
        Poly g = gcd(w, z);
        parts.push_back(g);
        w = divmod(w, g).first;
        y = divmod(z, g).first;
    }
    return parts;
}

inline std::vector<Poly> sturm_chain(const Poly& p) {
    std::vector<Poly> chain{p, derivative(p)};
    while (!chain.back().empty()) {
        Poly r = divmod(chain[chain.size() - 2], chain.back()).second;
        for (auto& c : r) c = -c;
        if (r.empty()) break;
        chain.push_back(std::move(r));
    }
    return chain;
}

inline int sign_changes(const std::vector<Poly>& chain, const Rational& z) {
    int changes = 0, last = 0;
    for (const auto& p : chain) {
        const int s = sgn(eval(p, z));
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

/// Roots of a square-free p in (lo, hi], each narrowed to width <= eps.
inline void isolate_roots(const Poly& p, const std::vector<Poly>& chain, const Rational& lo, const Rational& hi,
                          const Rational& eps, std::vector<Rational>& out) {
    const int count = sign_changes(chain, lo) - sign_changes(chain, hi);
    if (count == 0) return;
    if (count == 1) {
        Rational a = lo, b = hi;
        if (eval(p, b) == 0) {
            out.push_back(b);
            return;
        }
        while (b - a > eps) {
            const Rational mid = (a + b) / 2;
            const int s_mid = sgn(eval(p, mid));
            if (s_mid == 0) {
                out.push_back(mid);
                return;
            }
            // p has exactly one simple root in (a, b], so p(a) and p(b) differ in sign
            if (s_mid == sgn(eval(p, b))) b = mid;
            else a = mid;
        }
        out.push_back((a + b) / 2);
        return;
    }
    const Rational mid = (lo + hi) / 2;
    isolate_roots(p, chain, lo, mid, eps, out);
    isolate_roots(p, chain, mid, hi, eps, out);
}

}  // namespace detail

/// Coefficients of det(I + tX), t^0..t^n, by the Faddeev–LeVerrier recurrence.
///
/// With chi(z) = det(zI - X) = z^n + c_1 z^{n-1} + ... + c_n, the coefficient
/// of t^k in det(I + tX) is (-1)^k c_k.
inline std::vector<Rational> det_I_plus_tA(const IntMatrix& x) {
    if (!x.square()) throw std::invalid_argument("det_I_plus_tA: matrix is not square");
    const std::size_t n = x.rows();
    const auto a = detail::to_rational(x);
    std::vector<Rational> c(n + 1, Rational(0));
    c[0] = 1;
    detail::RationalMatrix m(n, std::vector<Rational>(n, Rational(0)));  // M_0 = 0
    for (std::size_t k = 1; k <= n; ++k) {
        // M_k = A M_{k-1} + c_{k-1} I,  c_k = -tr(A M_k) / k
        auto next = detail::matmul(a, m);
        for (std::size_t i = 0; i < n; ++i) next[i][i] += c[k - 1];
        const auto am = detail::matmul(a, next);
        Rational tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += am[i][i];
        c[k] = -tr / static_cast<long>(k);
        m = std::move(next);
    }
    for (std::size_t k = 1; k <= n; k += 2) c[k] = -c[k];
    return c;
}

/// Coefficients t^0..t^{nr} of det(sum_{j=0}^r X^j t^j / j!): exact determinants
/// at nodes t = 0..nr followed by exact Newton interpolation.
inline std::vector<Rational> f_from_matrix(const IntMatrix& x, int r) {
    if (!x.square()) throw std::invalid_argument("f_from_matrix: matrix is not square");
    if (r < 1) throw std::invalid_argument("f_from_matrix: r must be at least 1");
    const std::size_t n = x.rows();
    const std::size_t degree = n * static_cast<std::size_t>(r);
    const auto a = detail::to_rational(x);

    std::vector<detail::RationalMatrix> powers{detail::to_rational(IntMatrix::identity(n))};
    for (int j = 1; j <= r; ++j) powers.push_back(detail::matmul(powers.back(), a));

    std::vector<Rational> values(degree + 1);
    for (std::size_t node = 0; node <= degree; ++node) {
        const Rational t(static_cast<long>(node));
        detail::RationalMatrix m(n, std::vector<Rational>(n, Rational(0)));
        Rational weight = 1;  // t^j / j!
        for (int j = 0; j <= r; ++j) {
            if (j > 0) weight *= t / j;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t l = 0; l < n; ++l) m[i][l] += weight * powers[j][i][l];
        }
        values[node] = detail::determinant(std::move(m));
    }

    // Divided differences on nodes 0..degree, then expand the Newton form.
    std::vector<Rational> dd = values;
    for (std::size_t level = 1; level <= degree; ++level)
        for (std::size_t i = degree; i >= level; --i) dd[i] = (dd[i] - dd[i - 1]) / static_cast<long>(level);

    std::vector<Rational> coeffs(degree + 1, Rational(0));
    for (std::size_t i = degree + 1; i-- > 0;) {
        // coeffs <- coeffs * (t - i) + dd[i]
        for (std::size_t j = degree; j >= 1; --j) coeffs[j] = coeffs[j - 1] - coeffs[j] * static_cast<long>(i);
        coeffs[0] = dd[i] - coeffs[0] * static_cast<long>(i);
    }
    return coeffs;
}

/// Same coefficients by a second, independent route: with power sums
/// p_m = tr(X^m), log det(P_r(tX)) = sum_m b_m p_m t^m where
/// log P_r(s) = sum_m b_m s^m; exponentiate the truncated series.
inline std::vector<Rational> f_from_traces(const IntMatrix& x, int r) {
    if (!x.square()) throw std::invalid_argument("f_from_traces: matrix is not square");
    if (r < 1) throw std::invalid_argument("f_from_traces: r must be at least 1");
    const std::size_t n = x.rows();
    const std::size_t degree = n * static_cast<std::size_t>(r);
    const auto a = detail::to_rational(x);

    const auto log_p = series_log(substitute_scale(SeriesTemplate::taylor(r), Rational(1), degree));
    std::vector<Rational> g(degree + 1, Rational(0));
    auto power = a;
    for (std::size_t m = 1; m <= degree; ++m) {
        Rational tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += power[i][i];
        g[m] = log_p[m] * tr;
        if (m < degree) power = detail::matmul(power, a);
    }
    return series_exp(TruncatedSeries(std::move(g))).coeffs();
}

struct SpectralSummary {
    std::vector<Rational> e_coeffs;
    std::vector<std::pair<int, std::vector<Rational>>> f_coeffs;  // (r, coefficients)
};

inline SpectralSummary spectral_summary(const IntMatrix& x, const std::vector<int>& orders) {
    SpectralSummary s{det_I_plus_tA(x), {}};
    for (std::size_t k = 0; k < s.e_coeffs.size(); ++k)
        if (s.e_coeffs[k] < 0)
            throw std::logic_error("spectral_summary: negative E_" + std::to_string(k) + " for a Gram matrix");
    for (int r : orders) s.f_coeffs.emplace_back(r, f_from_matrix(x, r));
    return s;
}

/// Sign-flip variants of Q over its nonzero positions (row-major), in binary
/// counting order of the flip mask: Q itself first, then flips of the first
/// nonzero entry, and so on, stopping after `budget` matrices.
inline std::vector<IntMatrix> sign_flip_variants(const IntMatrix& q, std::size_t budget) {
    std::vector<std::pair<std::size_t, std::size_t>> nonzero;
    for (std::size_t i = 0; i < q.rows(); ++i)
        for (std::size_t j = 0; j < q.cols(); ++j)
            if (q(i, j) != 0) nonzero.emplace_back(i, j);
    std::vector<IntMatrix> out;
    const std::size_t bits = nonzero.size();
    for (std::uint64_t mask = 0; out.size() < budget; ++mask) {
        if (bits < 64 && mask >> bits != 0) break;
        IntMatrix v = q;
        for (std::size_t b = 0; b < bits && b < 64; ++b)
            if (mask >> b & 1U) v(nonzero[b].first, nonzero[b].second) *= -1;
        out.push_back(std::move(v));
        if (mask == UINT64_MAX) break;
    }
    return out;
}

/// Rational approximations of the eigenvalues of a symmetric PSD integer
/// matrix, each within 2^-bits of a true eigenvalue (repeated by
/// multiplicity, ascending), with the last entry adjusted so the total equals
/// trace(X) exactly. Negative approximations are clamped to zero.
inline RationalVector eigenvalue_surrogate(const IntMatrix& x, unsigned bits = 128) {
    const auto e = det_I_plus_tA(x);
    const std::size_t n = e.size() - 1;
    if (n == 0) throw std::invalid_argument("eigenvalue_surrogate: empty matrix");
    // chi(z) = sum_k (-1)^k E_k z^(n-k)
    detail::Poly chi(n + 1);
    for (std::size_t k = 0; k <= n; ++k) chi[n - k] = (k % 2 == 0) ? e[k] : Rational(-e[k]);

    Integer denom;
    mpz_ui_pow_ui(denom.get_mpz_t(), 2, bits);
    const Rational eps(Integer(1), denom);
    const Rational hi = Rational(trace(x)) + 1;
    const Rational lo = -1;

    std::vector<Rational> roots;
    const auto parts = detail::squarefree_parts(chi);
    for (std::size_t mult = 0; mult < parts.size(); ++mult) {
        if (parts[mult].size() <= 1) continue;
        std::vector<Rational> found;
        detail::isolate_roots(parts[mult], detail::sturm_chain(parts[mult]), lo, hi, eps, found);
        for (const auto& z : found)
            for (std::size_t m = 0; m <= mult; ++m) roots.push_back(z);
    }
    if (roots.size() != n) throw std::domain_error("eigenvalue_surrogate: matrix has non-real or out-of-range eigenvalues");
    std::sort(roots.begin(), roots.end());
    for (auto& z : roots)
        if (z < 0) z = 0;
    Rational rest = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) rest += roots[i];
    roots.back() = Rational(trace(x)) - rest;
    return RationalVector(std::move(roots));
}

}  // namespace symineq
