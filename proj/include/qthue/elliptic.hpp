// Integral points on Y^2 = X^3 + N X: the upper bound on their number and a
// direct search.
#pragma once

#include <qthue/arith.hpp>
#include <qthue/errors.hpp>
#include <qthue/integer.hpp>
#include <qthue/pell.hpp>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <utility>
#include <vector>

namespace qthue {

using BoundFloat = boost::multiprecision::cpp_bin_float_50;

/// eps_d = x + y sqrt(d) for d > 1; the d = 1 term uses eps_1 = 1.
inline BoundFloat fundamental_unit_value(const Integer& d) {
    if (d == 1) return 1;
    auto u = pell_fundamental(d);
    return to_float<BoundFloat>(u.x) + to_float<BoundFloat>(u.y) * sqrt(to_float<BoundFloat>(d));
}

/// 2^(15/2) sqrt(N) sum_{d | N} 2^omega(N/d) eps_d^(3/2) / d, summed by ascending d.
inline BoundFloat curve_bound(const Integer& N) {
    require(N >= 1, "N must be positive");
    if (!squarefree(N)) fail(ErrorCode::NotSquarefree, N.str() + " is not squarefree");
    BoundFloat sum = 0;
    for (const auto& d : divisors(N)) {
        BoundFloat eps = fundamental_unit_value(d);
        sum += pow(BoundFloat(2), omega(N / d)) * pow(eps, BoundFloat(1.5)) / to_float<BoundFloat>(d);
    }
    return pow(BoundFloat(2), BoundFloat(7.5)) * sqrt(to_float<BoundFloat>(N)) * sum;
}

struct CurvePoint {
    Integer X, Y;
    friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

/// All (X, Y) with 0 <= X <= x_max, Y >= 0 and Y^2 = X^3 + N X.
inline std::vector<CurvePoint> curve_points(const Integer& N, const Integer& x_max) {
    require(N >= 1, "N must be positive");
    require(x_max >= 0, "x_max must be nonnegative");
    std::vector<CurvePoint> out;
    const bool narrow = x_max < Integer(1) << 36 && N < Integer(1) << 40;
    if (narrow) {
        const int128 n = to_int128(N), xm = to_int128(x_max);
        for (int128 X = 0; X <= xm; ++X) {
            int128 r;
            if (is_square(X * X * X + n * X, &r)) out.push_back({to_integer(X), to_integer(r)});
        }
    } else {
        for (Integer X = 0; X <= x_max; ++X) {
            Integer r;
            if (is_square(X * X * X + N * X, &r)) out.push_back({X, r});
        }
    }
    return out;
}

}  // namespace qthue
