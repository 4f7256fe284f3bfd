#pragma once

// Exact rational scalar shared by every module, plus the small integer
// combinatorics (factorials, binomials) the polynomial families need.

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace symineq {

using Rational = mpq_class;
using Integer = mpz_class;

/// Raised when an enumeration-based routine would exceed its size guard.
class too_large_error : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Canonical "num/den" form; integers keep the "/1" so every rational
/// serializes with the same shape.
inline std::string to_string(Rational q) {
    q.canonicalize();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Parses "3/7", "-2", "1.9", "1.25e-3", "4". Decimal text is read as an
/// exact decimal fraction, never through a binary float.
inline Rational parse_rational(std::string_view text) {
    auto fail = [&] { throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'"); };
    std::string s(text);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    if (s.empty()) fail();

    if (auto slash = s.find('/'); slash != std::string::npos) {
        Rational num = parse_rational(std::string_view(s).substr(0, slash));
        Rational den = parse_rational(std::string_view(s).substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
        return num / den;
    }

    std::size_t pos = 0;
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') negative = s[pos++] == '-';
    std::string digits;
    long scale = 0;
    bool seen_point = false;
    bool any_digit = false;
    for (; pos < s.size(); ++pos) {
        char c = s[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            digits.push_back(c);
            any_digit = true;
            if (seen_point) ++scale;
        } else if (c == '.' && !seen_point) {
            seen_point = true;
        } else {
            break;
        }
    }
    if (!any_digit) fail();
    long exponent = 0;
    if (pos < s.size()) {
        if (s[pos] != 'e' && s[pos] != 'E') fail();
        ++pos;
        std::string exp_text = s.substr(pos);
        if (exp_text.empty()) fail();
        std::size_t used = 0;
        try {
            exponent = std::stol(exp_text, &used);
        } catch (const std::exception&) {
            fail();
        }
        if (used != exp_text.size() || std::labs(exponent) > 100000) fail();
    }
    Integer mantissa(digits, 10);
    long shift = exponent - scale;
    Integer power;
    mpz_ui_pow_ui(power.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(shift)));
    Rational value = shift >= 0 ? Rational(mantissa * power) : Rational(mantissa, power);
    value.canonicalize();
    return negative ? Rational(-value) : value;
}

inline Integer factorial(unsigned long k) {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), k);
    return out;
}

inline Rational pow(const Rational& base, unsigned long e) {
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), e);
    return out;  // already canonical: gcd(num^e, den^e) = 1
}

/// C(a, b) for a ≥ 0 in the usual sense (zero when b < 0 or b > a).
inline Integer binomial(long a, long b) {
    if (a < 0) throw std::domain_error("binomial: negative upper index");
    if (b < 0 || b > a) return 0;
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return out;
}

/// Natural log of a positive rational that may be far outside double range.
inline double log_of(const Rational& q) {
    if (q <= 0) throw std::domain_error("log_of: nonpositive argument");
    auto log_z = [](const Integer& z) {
        long exp2 = 0;
        double mant = mpz_get_d_2exp(&exp2, z.get_mpz_t());
        return std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
    };
    return log_z(q.get_num()) - log_z(q.get_den());
}

inline double to_double(const Rational& q) { return q.get_d(); }

}  // namespace symineq
