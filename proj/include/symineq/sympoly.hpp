#pragma once

// The symmetric polynomial families built on the multinomial expansion of
// (x_1 + ... + x_n)^k / k!:
//
//   E_k        elementary symmetric polynomial (= F_{k,1})
//   F_{k,r}    terms whose exponents are all <= r
//   G_{k,r}    terms involving at least r distinct variables
//   Gbar_{k,r} terms involving fewer than r distinct variables
//   M_{k,r}    sum over r-subsets of (subset sum)^k
//   H_S        terms indexed by an arbitrary exponent set S
//
// Fast paths use generating functions or inclusion-exclusion; the
// enumeration routines here (f_kr_oracle, h_s) are reference sums guarded
// against oversized instances.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "genfun.hpp"
#include "rational.hpp"
#include "vecnorm.hpp"

namespace symineq {

enum class Family { E, F, G, Gbar, DeltaGbar, M, H_S };

inline std::string to_string(Family f) {
    switch (f) {
        case Family::E: return "E";
        case Family::F: return "F";
        case Family::G: return "G";
        case Family::Gbar: return "Gbar";
        case Family::DeltaGbar: return "DeltaGbar";
        case Family::M: return "M";
        case Family::H_S: return "H_S";
    }
    return "?";
}

struct FamilyValue {
    Family family;
    int k;
    int r;  // unused for E
    Rational value;
};

/// Upper bound on |I_k| = C(n+k-1, k) for the enumeration-based routines.
inline constexpr long kCompositionLimit = 2'000'000;
/// Largest n accepted by the 2^n inclusion-exclusion path for G / Gbar.
inline constexpr std::size_t kSupportSubsetMaxN = 20;
/// Upper bound on C(n, r) for the M_{k,r} subset sum.
inline constexpr long kSubsetLimit = 1'000'000;

namespace detail {

inline void require_composition_guard(std::size_t n, int k, const char* who) {
    if (k < 0) throw std::invalid_argument(std::string(who) + ": k must be nonnegative");
    const Integer count = binomial(static_cast<long>(n) + k - 1, k);
    if (count > kCompositionLimit)
        throw too_large_error(std::string(who) + ": " + count.get_str() + " compositions exceed the enumeration limit");
}

inline void compositions_rec(std::vector<int>& p, std::size_t pos, int remaining,
                             const std::function<void(std::span<const int>)>& visit) {
    if (pos + 1 == p.size()) {
        p[pos] = remaining;
        visit(p);
        return;
    }
    for (int v = 0; v <= remaining; ++v) {
        p[pos] = v;
        compositions_rec(p, pos + 1, remaining - v, visit);
    }
}

inline Rational monomial_over_factorials(const RationalVector& x, std::span<const int> p) {
    Rational term = 1;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0) continue;
        term *= pow(x[i], static_cast<unsigned long>(p[i]));
        term /= Rational(factorial(static_cast<unsigned long>(p[i])));
    }
    return term;
}

}  // namespace detail

/// Visits every p in I_k = {p in Z^n : p_i >= 0, sum p_i = k} in lexicographic order.
inline void for_each_composition(std::size_t n, int k, const std::function<void(std::span<const int>)>& visit) {
    if (n == 0) throw std::invalid_argument("for_each_composition: n must be positive");
    detail::require_composition_guard(n, k, "for_each_composition");
    std::vector<int> p(n, 0);
    detail::compositions_rec(p, 0, k, visit);
}

/// Integer majorization p ≻ q on equal-sum tuples.
inline bool integer_majorizes(std::span<const int> p, std::span<const int> q) {
    if (p.size() != q.size()) throw std::invalid_argument("integer_majorizes: length mismatch");
    std::vector<int> a(p.begin(), p.end()), b(q.begin(), q.end());
    std::sort(a.rbegin(), a.rend());
    std::sort(b.rbegin(), b.rend());
    long sa = 0, sb = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        sa += a[i];
        sb += b[i];
        if (sa < sb) return false;
    }
    return sa == sb;
}

// ---------------------------------------------------------------------------
// E_k and F_{k,r}

/// E_0..E_n by multiplying in one linear factor (1 + x_i t) at a time.
inline std::vector<Rational> elementary_all(const RationalVector& x) {
    const std::size_t n = x.size();
    std::vector<Rational> e(n + 1, Rational(0));
    e[0] = 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = i + 1; k >= 1; --k) e[k] += x[i] * e[k - 1];
    return e;
}

/// F_{0,r}..F_{nr,r}, the coefficients of prod_i P_r(x_i t).
inline std::vector<Rational> f_kr_all(const RationalVector& x, int r) {
    if (r < 1) throw std::invalid_argument("f_kr_all: r must be at least 1");
    return product_over_vector(x, SeriesTemplate::taylor(r)).coeffs();
}

/// Direct sum over compositions of k with every part <= r.
inline Rational f_kr_oracle(const RationalVector& x, int r, int k) {
    if (r < 1) throw std::invalid_argument("f_kr_oracle: r must be at least 1");
    Rational total = 0;
    for_each_composition(x.size(), k, [&](std::span<const int> p) {
        if (*std::max_element(p.begin(), p.end()) <= r) total += detail::monomial_over_factorials(x, p);
    });
    return total;
}

struct FSpecialIdentities {
    bool low_degree = true;     // F_{k,r} = E_1^k / k! for k <= r
    bool r_plus_one = true;     // F_{r+1,r} = (E_1^{r+1} - sum x_i^{r+1}) / (r+1)!
    bool top_degree = true;     // F_{nr,r} = E_n^r / (r!)^n
    bool r_plus_one_checked = false;
    bool all() const noexcept { return low_degree && r_plus_one && top_degree; }
};

inline FSpecialIdentities f_special_identities(const RationalVector& x, int r) {
    const auto f = f_kr_all(x, r);
    const auto e = elementary_all(x);
    const std::size_t n = x.size();
    const std::size_t top = n * static_cast<std::size_t>(r);
    FSpecialIdentities out;
    for (std::size_t k = 0; k <= std::min<std::size_t>(r, top); ++k)
        out.low_degree = out.low_degree && f[k] == pow(e[1], k) / Rational(factorial(k));
    if (static_cast<std::size_t>(r) + 1 <= top) {
        out.r_plus_one_checked = true;
        Rational power_sum = 0;
        for (const auto& v : x) power_sum += pow(v, r + 1);
        out.r_plus_one = f[r + 1] == (pow(e[1], r + 1) - power_sum) / Rational(factorial(r + 1));
    }
    out.top_degree = f[top] == pow(e[n], r) / pow(Rational(factorial(r)), n);
    return out;
}

// ---------------------------------------------------------------------------
// G_{k,r}, Gbar_{k,r}, M_{k,r}

/// Gbar_{k,r}: terms of (sum x)^k / k! with fewer than r distinct variables.
///
/// Exactly-supported sums are obtained by inclusion-exclusion,
///   exact(S) = (1/k!) sum_{T ⊆ S} (-1)^{|S|-|T|} (sum_{i in T} x_i)^k,
/// and summing exact(S) over |S| <= r-1 collapses to one weight per |T|:
///   Gbar = (1/k!) sum_T w(|T|) sigma_T^k,  w(t) = sum_{j=0}^{r-1-t} (-1)^j C(n-t, j).
inline Rational gbar_kr(const RationalVector& x, int k, int r) {
    if (k < 0 || r < 1) throw std::invalid_argument("gbar_kr: need k >= 0 and r >= 1");
    const std::size_t n = x.size();
    if (n > kSupportSubsetMaxN) throw too_large_error("gbar_kr: n exceeds the subset-enumeration limit");

    std::vector<Integer> weight(n + 1, Integer(0));
    for (std::size_t t = 0; t <= n; ++t) {
        for (long j = 0; j <= static_cast<long>(r) - 1 - static_cast<long>(t); ++j) {
            const Integer c = binomial(static_cast<long>(n - t), j);
            weight[t] += (j % 2 == 0) ? c : Integer(-c);
        }
    }

    Rational total = 0;
    const std::size_t subsets = std::size_t{1} << n;
    std::vector<Rational> subset_sum(subsets, Rational(0));
    for (std::size_t mask = 0; mask < subsets; ++mask) {
        std::size_t size = 0;
        if (mask != 0) {
            const std::size_t low = mask & (~mask + 1);
            const auto bit = static_cast<std::size_t>(__builtin_ctzll(low));
            subset_sum[mask] = subset_sum[mask ^ low] + x[bit];
            size = static_cast<std::size_t>(__builtin_popcountll(mask));
        }
        if (weight[size] == 0) continue;
        total += Rational(weight[size]) * pow(subset_sum[mask], static_cast<unsigned long>(k));
    }
    return total / Rational(factorial(k));
}

/// G_{k,r} = (sum x)^k / k! - Gbar_{k,r}; zero when k < r.
inline Rational g_kr(const RationalVector& x, int k, int r) {
    if (k < 0 || r < 1) throw std::invalid_argument("g_kr: need k >= 0 and r >= 1");
    return pow(x.sum(), k) / Rational(factorial(k)) - gbar_kr(x, k, r);
}

/// Terms with exactly r distinct variables: Gbar_{k,r+1} - Gbar_{k,r}.
inline Rational delta_gbar_kr(const RationalVector& x, int k, int r) { return gbar_kr(x, k, r + 1) - gbar_kr(x, k, r); }

/// M_{k,r} = sum over i_1 < ... < i_r of (x_{i_1} + ... + x_{i_r})^k; zero when r > n.
inline Rational m_kr(const RationalVector& x, int k, int r) {
    if (k < 0 || r < 1) throw std::invalid_argument("m_kr: need k >= 0 and r >= 1");
    const std::size_t n = x.size();
    if (static_cast<std::size_t>(r) > n) return 0;
    if (binomial(static_cast<long>(n), r) > kSubsetLimit) throw too_large_error("m_kr: too many r-subsets");

    std::vector<std::size_t> idx(static_cast<std::size_t>(r));
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    Rational total = 0;
    while (true) {
        Rational s = 0;
        for (auto i : idx) s += x[i];
        total += pow(s, static_cast<unsigned long>(k));
        // advance to the next r-combination in lexicographic order
        std::size_t pos = idx.size();
        while (pos > 0 && idx[pos - 1] == n - idx.size() + pos - 1) --pos;
        if (pos == 0) break;
        ++idx[pos - 1];
        for (std::size_t j = pos; j < idx.size(); ++j) idx[j] = idx[j - 1] + 1;
    }
    return total;
}

/// Binomial with the boundary conventions used by the M/Gbar identity:
/// C(a, 0) = 1 for every a (including a = -1), C(a, b) = 0 for b < 0 or
/// 0 <= a < b. The case a < 0 < b is never reached for 1 <= r <= n.
inline Integer pascal_binomial(long a, long b) {
    if (b == 0) return 1;
    if (b < 0) return 0;
    if (a < 0) throw std::logic_error("pascal_binomial: negative upper index with positive lower index");
    return binomial(a, b);
}

/// sum_{m=0}^{r-1} C(n-r-1+m, m) Gbar_{k,r+1-m}, which equals M_{k,r} / k! for 1 <= r <= n.
inline Rational m_kr_from_gbar(const RationalVector& x, int k, int r) {
    const long n = static_cast<long>(x.size());
    if (r < 1 || r > n) throw std::invalid_argument("m_kr_from_gbar: need 1 <= r <= n");
    Rational total = 0;
    for (long m = 0; m <= r - 1; ++m)
        total += Rational(pascal_binomial(n - r - 1 + m, m)) * gbar_kr(x, k, static_cast<int>(r + 1 - m));
    return total;
}

/// Uniform evaluator for the named families (H_S needs an index set; see h_s).
inline Rational family_value(Family family, const RationalVector& x, int k, int r) {
    switch (family) {
        case Family::E: {
            const auto e = elementary_all(x);
            return k >= 0 && static_cast<std::size_t>(k) < e.size() ? e[k] : Rational(0);
        }
        case Family::F: {
            const auto f = f_kr_all(x, r);
            return k >= 0 && static_cast<std::size_t>(k) < f.size() ? f[k] : Rational(0);
        }
        case Family::G: return g_kr(x, k, r);
        case Family::Gbar: return gbar_kr(x, k, r);
        case Family::DeltaGbar: return delta_gbar_kr(x, k, r);
        case Family::M: return m_kr(x, k, r);
        case Family::H_S: break;
    }
    throw std::invalid_argument("family_value: H_S requires an explicit index set");
}

// ---------------------------------------------------------------------------
// Generic H_S over an index set S ⊆ I_k

struct IndexSet {
    std::size_t n;
    int k;
    std::function<bool(std::span<const int>)> contains;

    /// {p : max p_i <= r}; H_S is F_{k,r}.
    static IndexSet max_part_at_most(std::size_t n, int k, int r) {
        return {n, k, [r](std::span<const int> p) { return *std::max_element(p.begin(), p.end()) <= r; }};
    }
    /// {p : at least r nonzero entries}; H_S is G_{k,r}.
    static IndexSet nonzero_parts_at_least(std::size_t n, int k, int r) {
        return {n, k, [r](std::span<const int> p) { return std::count_if(p.begin(), p.end(), [](int v) { return v != 0; }) >= r; }};
    }
    static IndexSet all(std::size_t n, int k) {
        return {n, k, [](std::span<const int>) { return true; }};
    }
};

inline Rational h_s(const RationalVector& x, const IndexSet& idx) {
    if (x.size() != idx.n) throw std::invalid_argument("h_s: vector length does not match the index set");
    Rational total = 0;
    for_each_composition(idx.n, idx.k, [&](std::span<const int> p) {
        if (idx.contains(p)) total += detail::monomial_over_factorials(x, p);
    });
    return total;
}

struct IndexSetVerdict {
    bool schur_concave = true;
    // (p, q) with p in S, p ≻ q, q not in S
    std::optional<std::pair<std::vector<int>, std::vector<int>>> witness;
};

/// Checks p in S, q in I_k, p ≻ q  =>  q in S over all pairs.
inline IndexSetVerdict is_schur_concave_index_set(const IndexSet& idx) {
    std::vector<std::vector<int>> members, outsiders;
    for_each_composition(idx.n, idx.k, [&](std::span<const int> p) {
        (idx.contains(p) ? members : outsiders).emplace_back(p.begin(), p.end());
    });
    for (const auto& p : members) {
        for (const auto& q : outsiders) {
            if (integer_majorizes(p, q)) return {false, std::make_pair(p, q)};
        }
    }
    return {};
}

// ---------------------------------------------------------------------------
// Exact gradient of F_{k,r}

/// dF_{k,r}/dx_i = [t^k] t P_r'(x_i t) prod_{j != i} P_r(x_j t), and P_r' = P_{r-1}.
inline std::vector<Rational> grad_f_kr(const RationalVector& x, int r, int k) {
    if (r < 1) throw std::invalid_argument("grad_f_kr: r must be at least 1");
    const std::size_t n = x.size();
    if (k < 0 || static_cast<std::size_t>(k) > n * static_cast<std::size_t>(r))
        throw std::invalid_argument("grad_f_kr: need 0 <= k <= n r");
    std::vector<Rational> grad(n, Rational(0));
    if (k == 0) return grad;
    const auto full = SeriesTemplate::taylor(r);
    const auto derivative = SeriesTemplate::taylor(r - 1);
    const auto d = static_cast<std::size_t>(k - 1);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rational> acc(d + 1, Rational(0));
        acc[0] = 1;
        for (std::size_t j = 0; j < n; ++j) {
            const auto& tpl = j == i ? derivative : full;
            detail::multiply_in_place(acc, detail::scaled_template(tpl, x[j]));
        }
        grad[i] = acc[d];
    }
    return grad;
}

}  // namespace symineq
