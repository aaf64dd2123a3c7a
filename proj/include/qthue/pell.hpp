// Fundamental units of Z[sqrt(d)] from the continued fraction of sqrt(d).
#pragma once

#include <qthue/arith.hpp>
#include <qthue/errors.hpp>
#include <qthue/integer.hpp>

#include <vector>

namespace qthue {

struct PellUnit {
    Integer d, x, y;
    int norm = 1;  // x^2 - d y^2
};

/// Partial quotients of sqrt(d) = [a0; a1, ..., a_r] with a_r = 2 a0 closing the period.
inline std::vector<Integer> sqrt_continued_fraction(const Integer& d) {
    require(d >= 2, "d must be at least 2");
    Integer a0 = isqrt(d);
    require(a0 * a0 != d, "d must not be a square");
    std::vector<Integer> out{a0};
    Integer m = 0, den = 1, a = a0;
    do {
        m = den * a - m;
        den = (d - m * m) / den;
        a = (a0 + m) / den;
        out.push_back(a);
    } while (a != 2 * a0);
    return out;
}

inline std::size_t sqrt_period(const Integer& d) { return sqrt_continued_fraction(d).size() - 1; }

inline PellUnit pell_fundamental(const Integer& d) {
    require(d > 1, "d must exceed 1");
    if (!squarefree(d)) fail(ErrorCode::NotSquarefree, d.str() + " is not squarefree");
    auto cf = sqrt_continued_fraction(d);
    Integer p0 = 1, q0 = 0, p1 = cf[0], q1 = 1;
    // The convergent before the period closes is the fundamental solution.
    for (std::size_t i = 1; i + 1 < cf.size(); ++i) {
        Integer p2 = cf[i] * p1 + p0, q2 = cf[i] * q1 + q0;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
    }
    Integer n = p1 * p1 - d * q1 * q1;
    if (n != 1 && n != -1) fail(ErrorCode::Internal, "continued fraction did not yield a unit");
    return {d, p1, q1, n == 1 ? 1 : -1};
}

}  // namespace qthue
