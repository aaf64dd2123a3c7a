// Integral points on a X^2 + b Y^2 + c Z^2 = 0 and the quadratic
// parametrization through a base point.
#pragma once

#include <qthue/errors.hpp>
#include <qthue/integer.hpp>

#include <algorithm>
#include <array>
#include <optional>
#include <vector>

namespace qthue {

using Triple = std::array<Integer, 3>;

inline Integer conic_value(const Integer& a, const Integer& b, const Integer& c, const Triple& p) {
    return a * p[0] * p[0] + b * p[1] * p[1] + c * p[2] * p[2];
}

/// First primitive nonzero point with coordinates in [0, search_bound], by
/// increasing max-norm then lexicographically. Points without a zero
/// coordinate are preferred; one with a zero coordinate is returned only if
/// the box holds nothing else.
inline std::optional<Triple> conic_point(const Integer& a, const Integer& b, const Integer& c,
                                         const Integer& search_bound) {
    require(a != 0 && b != 0 && c != 0, "conic coefficients must be nonzero");
    require(gcd(gcd(a, b), c) == 1, "conic coefficients must be coprime as a triple");
    std::optional<Triple> fallback;
    for (Integer m = 1; m <= search_bound; ++m) {
        // Points with max-norm m: X, Y range over [0, m], Z solves the equation.
        std::vector<Triple> found;
        for (Integer X = 0; X <= m; ++X)
            for (Integer Y = 0; Y <= m; ++Y) {
                Integer rest = -(a * X * X + b * Y * Y);
                if (rest % c != 0) continue;
                Integer z2 = rest / c, Z;
                if (!is_square(z2, &Z) || Z > m) continue;
                if (X != m && Y != m && Z != m) continue;
                if (X == 0 && Y == 0 && Z == 0) continue;
                if (gcd(gcd(X, Y), Z) != 1) continue;
                found.push_back({X, Y, Z});
            }
        std::sort(found.begin(), found.end());
        for (const auto& p : found) {
            if (p[0] != 0 && p[1] != 0 && p[2] != 0) return p;
            if (!fallback) fallback = p;
        }
    }
    return fallback;
}

struct ConicParametrization {
    Integer a, b, c;
    Triple base_point;
    Integer R1, S1, T1, R2, S2, T2, z1;

    bool relation_pencil() const { return R1 * T2 + R2 * T1 == 2 * S1 * S2; }
    bool relation_second() const { return S2 * S2 - R2 * T2 == -a * c * z1 * z1; }
    bool relation_first() const { return S1 * S1 - R1 * T1 == -b * c * z1 * z1; }
    bool relation_walsh() const { return R1 * T2 - R2 * T1 == 0; }
    bool relations_hold() const { return relation_pencil() && relation_second() && relation_first() && relation_walsh(); }
};

namespace detail {

inline Triple primitive(Triple p) {
    Integer g = gcd(gcd(abs(p[0]), abs(p[1])), abs(p[2]));
    if (g > 1)
        for (auto& v : p) v /= g;
    return p;
}

// Second intersection of the conic with lines from p, until one leaves Z = 0.
inline Triple point_off_z_axis(const Integer& a, const Integer& b, const Integer& c, const Triple& p) {
    const std::array<Triple, 4> dirs{{{1, 0, 1}, {0, 1, 1}, {1, 1, 1}, {1, -1, 1}}};
    for (const auto& dvec : dirs) {
        Integer q = conic_value(a, b, c, dvec);
        Integer bil = a * p[0] * dvec[0] + b * p[1] * dvec[1] + c * p[2] * dvec[2];
        Triple r{q * p[0] - 2 * bil * dvec[0], q * p[1] - 2 * bil * dvec[1], q * p[2] - 2 * bil * dvec[2]};
        if (r[2] != 0) return primitive(r);
    }
    fail(ErrorCode::NormalizationFailure, "no conic point with Z != 0 reachable from the base point");
}

}  // namespace detail

/// Lines through the base point give X ~ R1 x^2 - 2 S1 x y + T1 y^2 and
/// Y ~ R2 x^2 - 2 S2 x y + T2 y^2. A base point with Z = 0 is first moved to
/// one with Z != 0. Coefficients are divided by their content whenever that
/// content also divides z1.
inline ConicParametrization parametrize_conic(const Integer& a, const Integer& b, const Integer& c, const Triple& point) {
    require(a != 0 && b != 0 && c != 0, "conic coefficients must be nonzero");
    require(!(point[0] == 0 && point[1] == 0 && point[2] == 0), "base point must be nonzero");
    require(conic_value(a, b, c, point) == 0, "base point is not on the conic");
    Triple p = detail::primitive(point);
    if (p[2] == 0) p = detail::point_off_z_axis(a, b, c, p);
    const Integer &X0 = p[0], &Y0 = p[1];
    ConicParametrization cp{a, b, c, p, a * X0, -b * Y0, -b * X0, -a * Y0, -a * X0, b * Y0, p[2]};

    Integer g = 0;
    for (const Integer* v : {&cp.R1, &cp.S1, &cp.T1, &cp.R2, &cp.S2, &cp.T2}) g = gcd(g, abs(*v));
    Integer f = gcd(g, abs(cp.z1));
    if (f > 1)
        for (Integer* v : {&cp.R1, &cp.S1, &cp.T1, &cp.R2, &cp.S2, &cp.T2, &cp.z1}) *v /= f;
    if (cp.z1 < 0) cp.z1 = -cp.z1;
    if (!cp.relations_hold()) fail(ErrorCode::NormalizationFailure, "parametrization relations fail");
    return cp;
}

}  // namespace qthue
