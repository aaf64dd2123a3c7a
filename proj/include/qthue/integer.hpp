// Arbitrary-precision integer and rational types plus the small number-theory
// helpers shared by every module.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>

namespace qthue {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using int128 = __int128;

inline Integer numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline Integer abs(const Integer& v) { return v < 0 ? Integer(-v) : v; }
inline Rational abs(const Rational& v) { return v < 0 ? Rational(-v) : v; }

inline int sign(const Integer& v) { return v.sign(); }
inline int sign(const Rational& v) { return v.sign(); }

inline Integer gcd(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }

/// Largest r with r*r <= n. n must be nonnegative.
inline Integer isqrt(const Integer& n) { return boost::multiprecision::sqrt(n); }

inline bool is_square(const Integer& n, Integer* root = nullptr) {
    if (n < 0) return false;
    Integer r = isqrt(n);
    if (root) *root = r;
    return r * r == n;
}

inline Integer pow(const Integer& base, unsigned exp) { return boost::multiprecision::pow(base, exp); }

inline Rational pow(const Rational& base, unsigned exp) {
    Rational r = 1;
    for (unsigned i = 0; i < exp; ++i) r *= base;
    return r;
}

/// floor(a / b) for b != 0.
inline Integer floor_div(const Integer& a, const Integer& b) {
    Integer q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Integer ceil_div(const Integer& a, const Integer& b) { return -floor_div(-a, b); }

inline Integer floor(const Rational& q) { return floor_div(numerator(q), denominator(q)); }
inline Integer ceil(const Rational& q) { return ceil_div(numerator(q), denominator(q)); }

inline std::string to_string(const Integer& v) { return v.str(); }
inline std::string to_string(const Rational& v) { return v.str(); }

template <class Float = long double>
Float to_float(const Integer& v) { return v.convert_to<Float>(); }

template <class Float = long double>
Float to_float(const Rational& v) { return v.convert_to<Float>(); }

inline bool fits_int64(const Integer& v) {
    return v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max();
}

inline std::int64_t to_int64(const Integer& v) { return v.convert_to<std::int64_t>(); }

// 128-bit helpers used by the hot loops (enumeration, brute-force search).

inline int128 isqrt(int128 n) {
    if (n <= 0) return 0;
    auto r = static_cast<int128>(std::sqrt(static_cast<long double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

inline bool is_square(int128 n, int128* root = nullptr) {
    if (n < 0) return false;
    int128 r = isqrt(n);
    if (root) *root = r;
    return r * r == n;
}

inline Integer to_integer(int128 v) {
    bool neg = v < 0;
    auto u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
    Integer r = static_cast<std::uint64_t>(u >> 64);
    r <<= 64;
    r += static_cast<std::uint64_t>(u);
    return neg ? Integer(-r) : r;
}

inline int128 to_int128(const Integer& v) {
    Integer a = abs(v);
    auto lo = static_cast<std::uint64_t>(a & Integer(std::numeric_limits<std::uint64_t>::max()));
    auto hi = static_cast<std::uint64_t>(a >> 64);
    auto u = (static_cast<unsigned __int128>(hi) << 64) | lo;
    return v < 0 ? -static_cast<int128>(u) : static_cast<int128>(u);
}

inline bool fits_int128(const Integer& v) {
    static const Integer limit = Integer(1) << 126;
    return abs(v) < limit;
}

inline std::string to_string(int128 v) { return to_integer(v).str(); }

}  // namespace qthue
