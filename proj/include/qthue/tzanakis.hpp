// The quartic form attached to a class of solutions of X^2 - d Y^4 = k, via
// the conic -X^2 + k Y^2 + t Z^2 = 0, and checks of its stated properties.
#pragma once

#include <qthue/arith.hpp>
#include <qthue/conic.hpp>
#include <qthue/errors.hpp>
#include <qthue/quartic_form.hpp>
#include <qthue/roots.hpp>

#include <string>

namespace qthue {

/// R x^2 - 2 S x y + T y^2.
struct QuadraticForm {
    Integer R, S, T;

    BinaryForm coefficients() const { return {R, -2 * S, T}; }

    // Q(x, r x + y)
    QuadraticForm shear(const Integer& r) const { return {R - 2 * S * r + T * r * r, S - T * r, T}; }
    // Q(x + u y, v y)
    QuadraticForm substitute(const Integer& u, const Integer& v) const {
        return {R, S * v - R * u, R * u * u - 2 * S * u * v + T * v * v};
    }
};

struct PropositionChecks {
    bool two_real_roots = false;  // exactly two, none repeated
    bool J_zero = false;
    bool I_formula = false;
    bool I_negative = false;
    /// I = -48 k d t^4 z1^4, a consequence of the conic relations.
    bool I_cross_check = false;

    bool all() const { return two_real_roots && J_zero && I_formula && I_negative && I_cross_check; }
};

struct TzanakisInstance {
    Integer d, k, s, t;
    /// Parametrization from the base point; all four conic relations hold.
    ConicParametrization conic;
    /// Rescaled pair with S2 = 0 (relations 1-3 hold, z1 rescaled with them).
    QuadraticForm Q1, Q2;
    Integer z1;
    QuarticForm form;
    InvariantTriple invariants;
    Integer I_formula;  // 48 k t^3 T2 R2 z1^2 d
    PropositionChecks checks;
};

/// F = Q1^2 - 2 s Q1 Q2 + k Q2^2 = A1^2 - d A2^2 with A1 = Q1 - s Q2, A2 = t Q2.
inline QuarticForm tzanakis_quartic(const QuadraticForm& q1, const QuadraticForm& q2, const Integer& d,
                                    const Integer& s, const Integer& t) {
    BinaryForm a1 = subtract(q1.coefficients(), multiply({s}, q2.coefficients()));
    BinaryForm a2 = multiply({t}, q2.coefficients());
    BinaryForm f = subtract(multiply(a1, a1), multiply({d}, multiply(a2, a2)));
    return QuarticForm(f[0], f[1], f[2], f[3], f[4]);
}

inline TzanakisInstance tzanakis_form(const Integer& d, const Integer& k, const Integer& s, const Integer& t,
                                      const Integer& search_bound = 200) {
    require(d > 1 && squarefree(d), "d must be a squarefree integer > 1");
    require(k > 0 && squarefree(k), "k must be a positive squarefree integer");
    require(gcd(k, d) == 1, "gcd(k, d) must be 1");
    require(t > 0, "t must be positive");
    require(s * s - d * t * t == k, "s^2 - d t^2 must equal k");

    const Integer a = -1, b = k, c = t;
    auto point = conic_point(a, b, c, search_bound);
    if (!point) fail(ErrorCode::NormalizationFailure, "no conic point within the search bound");

    TzanakisInstance inst{d, k, s, t, parametrize_conic(a, b, c, *point), {}, {}, 0, {}, {}, 0, {}};
    const auto& cp = inst.conic;
    QuadraticForm q1{cp.R1, cp.S1, cp.T1}, q2{cp.R2, cp.S2, cp.T2};

    if (q2.R == 0) {
        Integer r = 1;
        while (q2.shear(r).R == 0) ++r;
        q1 = q1.shear(r);
        q2 = q2.shear(r);
    }
    // (x, y) -> (x + S2 y, R2 y) clears S2 and multiplies z1 by |R2|.
    const Integer u = q2.S, v = q2.R;
    q1 = q1.substitute(u, v);
    q2 = q2.substitute(u, v);
    Integer z1 = cp.z1 * abs(v);
    Integer g = 0;
    for (const Integer* x : {&q1.R, &q1.S, &q1.T, &q2.R, &q2.S, &q2.T}) g = gcd(g, abs(*x));
    Integer f = gcd(g, z1);
    if (f > 1) {
        for (Integer* x : {&q1.R, &q1.S, &q1.T, &q2.R, &q2.S, &q2.T}) *x /= f;
        z1 /= f;
    }
    if (q1.R * q2.T + q2.R * q1.T != 2 * q1.S * q2.S || q2.S * q2.S - q2.R * q2.T != -a * c * z1 * z1 ||
        q1.S * q1.S - q1.R * q1.T != -b * c * z1 * z1)
        fail(ErrorCode::NormalizationFailure, "rescaled pair violates the conic relations");
    inst.Q1 = q1;
    inst.Q2 = q2;
    inst.z1 = z1;

    inst.form = tzanakis_quartic(q1, q2, d, s, t);
    inst.invariants = invariants(inst.form);
    inst.I_formula = 48 * k * t * t * t * q2.T * q2.R * z1 * z1 * d;

    auto& ch = inst.checks;
    ch.J_zero = inst.invariants.J == 0;
    ch.I_formula = inst.invariants.I == inst.I_formula;
    ch.I_negative = inst.invariants.I < 0;
    ch.I_cross_check = inst.invariants.I == -48 * k * d * pow(t, 4) * pow(z1, 4);
    auto roots = real_roots(inst.form);
    bool simple = inst.invariants.Delta != 0;
    ch.two_real_roots = simple && roots.size() == 2;
    // A root at infinity (a0 = 0) is real too.
    if (simple && inst.form[0] == 0) ch.two_real_roots = roots.size() == 1;
    if (!ch.all())
        fail(ErrorCode::PropositionViolation, "Tzanakis form " + inst.form.str() + " fails a property check");
    return inst;
}

}  // namespace qthue
