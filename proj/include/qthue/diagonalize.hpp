// Numeric diagonalization F = u^4 - v^4 of a quartic with J = 0 and negative
// discriminant, and the Z / zeta / relatedness diagnostics built on it.
#pragma once

#include <qthue/errors.hpp>
#include <qthue/quartic_form.hpp>
#include <qthue/roots.hpp>

#include <array>
#include <cmath>
#include <string>

namespace qthue {

/// u = u_alpha x + u_beta y, v = v_gamma x + v_delta y with F ~= u^4 - v^4.
struct ResolventPair {
    double u_alpha = 0, u_beta = 0, v_gamma = 0, v_delta = 0;
    double j_abs = 0;
    /// max |coeff(u^4 - v^4) - coeff(F)| / max |coeff(F)|
    double residual = 0;

    long double u(long double x, long double y) const { return (long double)u_alpha * x + (long double)u_beta * y; }
    long double v(long double x, long double y) const { return (long double)v_gamma * x + (long double)v_delta * y; }
};

struct SolutionDiagnostics {
    double Z = 0;
    double zeta = 0;
    int related_root = 1;  // +1 or -1
};

namespace detail {

using Real4 = std::array<Real, 4>;

inline std::array<Real, 5> power_difference(const Real4& w) {
    const auto& [a, b, c, d] = w;
    return {a * a * a * a - c * c * c * c, 4 * (a * a * a * b - c * c * c * d), 6 * (a * a * b * b - c * c * d * d),
            4 * (a * b * b * b - c * d * d * d), b * b * b * b - d * d * d * d};
}

inline Real coefficient_residual(const Real4& w, const QuarticForm& f) {
    auto got = power_difference(w);
    Real scale = 0, worst = 0;
    for (int i = 0; i < 5; ++i) {
        scale = std::max(scale, Real(abs(to_float<Real>(f[i]))));
        worst = std::max(worst, Real(abs(got[i] - to_float<Real>(f[i]))));
    }
    return worst / scale;
}

// One Gauss-Newton step on the five coefficient equations.
inline Real4 gauss_newton_step(const Real4& w, const QuarticForm& f) {
    const auto& [a, b, c, d] = w;
    auto got = power_difference(w);
    std::array<std::array<Real, 4>, 5> jac{{
        {4 * a * a * a, Real(0), -4 * c * c * c, Real(0)},
        {12 * a * a * b, 4 * a * a * a, -12 * c * c * d, -4 * c * c * c},
        {12 * a * b * b, 12 * a * a * b, -12 * c * d * d, -12 * c * c * d},
        {4 * b * b * b, 12 * a * b * b, -4 * d * d * d, -12 * c * d * d},
        {Real(0), 4 * b * b * b, Real(0), -4 * d * d * d},
    }};
    std::array<Real, 5> r;
    for (int i = 0; i < 5; ++i) r[i] = got[i] - to_float<Real>(f[i]);
    // Normal equations, solved by Gaussian elimination with partial pivoting.
    std::array<std::array<Real, 5>, 4> m{};
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 5; ++k) m[i][j] += jac[k][i] * jac[k][j];
        for (int k = 0; k < 5; ++k) m[i][4] -= jac[k][i] * r[k];
    }
    for (int col = 0; col < 4; ++col) {
        int piv = col;
        for (int row = col + 1; row < 4; ++row)
            if (abs(m[row][col]) > abs(m[piv][col])) piv = row;
        if (m[piv][col] == 0) return w;
        std::swap(m[piv], m[col]);
        for (int row = 0; row < 4; ++row) {
            if (row == col) continue;
            Real factor = m[row][col] / m[col][col];
            for (int k = col; k < 5; ++k) m[row][k] -= factor * m[col][k];
        }
    }
    Real4 next = w;
    for (int i = 0; i < 4; ++i) next[i] += m[i][4] / m[i][i];
    return next;
}

}  // namespace detail

/// Real linear forms u, v with F = u^4 - v^4. Requires J = 0, I < 0 (so that
/// Delta < 0 and F(z,1) has two real and two non-real roots).
inline ResolventPair diagonalize(const QuarticForm& form, double tolerance = 1e-6) {
    auto inv = invariants(form);
    if (inv.J != 0) fail(ErrorCode::NotDiagonalizable, "J != 0 for " + form.str());
    if (inv.Delta == 0) fail(ErrorCode::DegenerateForm, "zero discriminant for " + form.str());
    if (inv.I > 0) fail(ErrorCode::NotDiagonalizable, "I > 0: resolvents are not real for " + form.str());

    // Move a root away from infinity: G(x, y) = F(x, t x + y) has G(1, 0) = F(1, t) != 0.
    Integer shift = 0;
    for (int k = 0; form(1, shift) == 0; ++k) shift = (k % 2 == 0) ? Integer(k / 2 + 1) : Integer(-(k / 2 + 1));
    QuarticForm g = act(form, Matrix2{1, 0, shift, 1});

    auto roots = numeric_roots(g);
    std::vector<Real> reals;
    const NumericRoot* cplx = nullptr;
    for (const auto& r : roots) {
        if (r.multiplicity != 1) fail(ErrorCode::DegenerateForm, "repeated root in " + form.str());
        if (r.is_real)
            reals.push_back(r.re);
        else if (r.im > 0)
            cplx = &r;
    }
    if (reals.size() != 2 || cplx == nullptr)
        fail(ErrorCode::NumericalFailure, "expected two real and two complex roots for " + form.str());
    std::sort(reals.begin(), reals.end());
    const Real r1 = reals[0], r2 = reals[1];

    // u - v = l1 (x - r1 y), u + v = l2 (x - r2 y), u^2 + v^2 proportional to
    // the complex-pair quadratic x^2 - 2 Re(c) x y + |c|^2 y^2.
    Real beta_w = (cplx->re - r1) / (r2 - r1);
    Real alpha_w = 1 - beta_w;
    if (alpha_w <= 0 || beta_w <= 0) fail(ErrorCode::NumericalFailure, "non-real resolvent scaling for " + form.str());
    Real a0 = to_float<Real>(g[0]);
    Real s = pow(2 * abs(a0) / sqrt(alpha_w * beta_w), Real(0.25));
    Real l1 = s * sqrt(alpha_w);
    Real l2 = s * sqrt(beta_w) * (a0 > 0 ? 1 : -1);

    detail::Real4 w{(l1 + l2) / 2, (-l1 * r1 - l2 * r2) / 2, (l2 - l1) / 2, (l1 * r1 - l2 * r2) / 2};
    // Back to the original coordinates: (x, y) -> (x, y - t x).
    Real t = to_float<Real>(shift);
    w = {w[0] - t * w[1], w[1], w[2] - t * w[3], w[3]};
    w = detail::gauss_newton_step(w, form);

    ResolventPair out;
    out.u_alpha = w[0].convert_to<double>();
    out.u_beta = w[1].convert_to<double>();
    out.v_gamma = w[2].convert_to<double>();
    out.v_delta = w[3].convert_to<double>();
    Real j = abs(w[0] * w[3] - w[1] * w[2]);
    out.j_abs = j.convert_to<double>();
    out.residual = detail::coefficient_residual(w, form).convert_to<double>();
    if (!(out.residual <= tolerance))
        fail(ErrorCode::NumericalFailure, "diagonalization residual " + std::to_string(out.residual) + " for " + form.str());
    Real expected = pow(abs(to_float<Real>(inv.Delta)) / 256, Real(1) / 12);
    if (abs(j - expected) > Real("1e-9") * expected)
        fail(ErrorCode::NumericalFailure, "|j| disagrees with the discriminant for " + form.str());
    return out;
}

/// Z = max(|u|, |v|), zeta = |F| / Z^4 and the real fourth root of unity
/// (+1 or -1) nearest to v/u; ties go to +1.
inline SolutionDiagnostics solution_diagnostics(const QuarticForm& form, const ResolventPair& res, const Integer& x,
                                                const Integer& y) {
    Integer value = form(x, y);
    if (value == 0) fail(ErrorCode::ZeroValue, "F(x,y) = 0");
    long double xf = to_float(x), yf = to_float(y);
    long double u = res.u(xf, yf), v = res.v(xf, yf);
    SolutionDiagnostics d;
    long double Z = std::max(std::fabs(u), std::fabs(v));
    d.Z = static_cast<double>(Z);
    d.zeta = static_cast<double>(std::fabs(to_float(value)) / (Z * Z * Z * Z));
    // |u - v| <= |u + v| exactly when u v >= 0.
    d.related_root = (u * v >= 0) ? 1 : -1;
    return d;
}

}  // namespace qthue
