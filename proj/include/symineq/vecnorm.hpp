#pragma once

// Nonnegative exact vectors and the l^p *mean* (note the 1/n factor):
//
//   ||x||_p = ( (1/n) sum |x_i|^p )^(1/p),   p != 0
//   ||x||_0 = geometric mean,  ||x||_{+inf} = max,  ||x||_{-inf} = min
//
// with ||x||_p = 0 for p < 0 whenever some entry is zero.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "rational.hpp"

namespace symineq {

class RationalVector {
public:
    RationalVector() = delete;

    explicit RationalVector(std::vector<Rational> entries) : entries_(std::move(entries)) {
        if (entries_.empty()) throw std::invalid_argument("RationalVector: length must be at least 1");
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            // mpq_class(a, b) does not reduce; comparisons assume canonical form
            entries_[i].canonicalize();
            if (entries_[i] < 0)
                throw std::invalid_argument("RationalVector: entry " + std::to_string(i) + " is negative");
        }
    }

    RationalVector(std::initializer_list<Rational> entries) : RationalVector(std::vector<Rational>(entries)) {}

    std::size_t size() const noexcept { return entries_.size(); }
    const Rational& operator[](std::size_t i) const { return entries_[i]; }
    std::span<const Rational> entries() const noexcept { return entries_; }
    auto begin() const noexcept { return entries_.begin(); }
    auto end() const noexcept { return entries_.end(); }

    Rational sum() const {
        Rational s = 0;
        for (const auto& v : entries_) s += v;
        return s;
    }

    /// Entries in nonincreasing order (the decreasing rearrangement x*).
    std::vector<Rational> sorted_desc() const {
        std::vector<Rational> out = entries_;
        std::sort(out.begin(), out.end(), [](const Rational& a, const Rational& b) { return a > b; });
        return out;
    }

    std::vector<double> to_doubles() const {
        std::vector<double> out;
        out.reserve(entries_.size());
        for (const auto& v : entries_) out.push_back(v.get_d());
        return out;
    }

    RationalVector scaled(const Rational& c) const {
        std::vector<Rational> out = entries_;
        for (auto& v : out) v *= c;
        return RationalVector(std::move(out));
    }

    friend bool operator==(const RationalVector& a, const RationalVector& b) { return a.entries_ == b.entries_; }

private:
    std::vector<Rational> entries_;
};

/// Extended real exponent: finite values plus the two infinities.
class PExponent {
public:
    enum class Kind { finite, plus_infinity, minus_infinity };

    constexpr PExponent(double p) : kind_(Kind::finite), value_(p) {  // NOLINT(google-explicit-constructor)
        if (std::isinf(p)) {
            kind_ = p > 0 ? Kind::plus_infinity : Kind::minus_infinity;
        }
    }
    static constexpr PExponent plus_infinity() { return PExponent(std::numeric_limits<double>::infinity()); }
    static constexpr PExponent minus_infinity() { return PExponent(-std::numeric_limits<double>::infinity()); }

    constexpr Kind kind() const noexcept { return kind_; }
    constexpr double value() const noexcept { return value_; }
    constexpr bool is_zero() const noexcept { return kind_ == Kind::finite && value_ == 0.0; }

private:
    Kind kind_;
    double value_;
};

inline double lp_mean(std::span<const double> x, PExponent p) {
    if (x.empty()) throw std::invalid_argument("lp_mean: empty vector");
    const auto [lo, hi] = std::minmax_element(x.begin(), x.end());
    switch (p.kind()) {
        case PExponent::Kind::plus_infinity: return *hi;
        case PExponent::Kind::minus_infinity: return *lo;
        case PExponent::Kind::finite: break;
    }
    const double n = static_cast<double>(x.size());
    if (*hi == 0.0) return 0.0;
    const bool has_zero = *lo == 0.0;
    if (p.is_zero()) {
        if (has_zero) return 0.0;
        double mean_log = 0.0;
        for (double v : x) mean_log += std::log(v);
        return std::exp(mean_log / n);
    }
    const double q = p.value();
    if (q < 0 && has_zero) return 0.0;
    // Factor out the max so the powers stay in range for large |p|.
    const double scale = *hi;
    double acc = 0.0;
    for (double v : x) acc += std::pow(v / scale, q);
    return scale * std::pow(acc / n, 1.0 / q);
}

inline double lp_mean(const RationalVector& x, PExponent p) {
    const auto values = x.to_doubles();
    return lp_mean(std::span<const double>(values), p);
}

/// s_k = sum of the k largest entries, k = 1..n, exact.
inline std::vector<Rational> partial_sums_desc(const RationalVector& x) {
    std::vector<Rational> sums = x.sorted_desc();
    for (std::size_t i = 1; i < sums.size(); ++i) sums[i] += sums[i - 1];
    return sums;
}

}  // namespace symineq
