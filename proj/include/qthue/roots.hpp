// Root machinery for F(z, 1): certified real-root isolation by Sturm sequences
// on exact rationals, continued-fraction convergents of an enclosed real
// number, and high-precision numeric roots (real and complex) with
// multiplicities.
#pragma once

#include <qthue/errors.hpp>
#include <qthue/integer.hpp>
#include <qthue/polynomial.hpp>
#include <qthue/quartic_form.hpp>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

namespace qthue {

using Real = boost::multiprecision::cpp_bin_float_50;
using Complex = boost::multiprecision::cpp_complex_50;

/// Closed interval [lo, hi] isolating exactly one real root. exact means
/// lo == hi is the (rational) root itself.
struct RootEnclosure {
    Rational lo, hi;
    int multiplicity = 1;
    bool exact = false;

    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / 2; }
};

/// F(z, 1) as a polynomial in z.
inline Poly dehomogenize(const QuarticForm& f) {
    return Poly::from_integers({f[4], f[3], f[2], f[1], f[0]});
}

namespace detail {

// Power of two strictly above every root modulus (Cauchy bound).
inline Rational root_bound(const Poly& p) {
    Rational m = 0;
    for (int i = 0; i < p.degree(); ++i) {
        Rational r = p[i] / p.lead();
        if (r < 0) r = -r;
        m = std::max(m, r);
    }
    Rational b = 1;
    while (b <= m + 1) b *= 2;
    return b;
}

// A rational root p/q of a primitive integer polynomial has q | lead, and an
// enclosure narrower than 1/(2 q^2) forces p/q to be a convergent of lo.
inline std::optional<Rational> snap_rational_root(const Poly& p, const Rational& lo, const Rational& hi,
                                                   const Integer& max_den) {
    Integer p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    Rational x = lo;
    for (;;) {
        Integer a = floor(x);
        Integer pn = a * p1 + p0, qn = a * q1 + q0;
        if (qn > max_den) break;
        Rational cand(pn, qn);
        if (cand >= lo && cand <= hi && p(cand) == 0) return cand;
        Rational frac = x - a;
        if (frac == 0) break;
        x = 1 / frac;
        p0 = p1;
        q0 = q1;
        p1 = pn;
        q1 = qn;
    }
    return std::nullopt;
}

inline void isolate_squarefree(const Poly& g, int multiplicity, const Rational& target_width,
                               std::vector<RootEnclosure>& out) {
    if (g.degree() < 1) return;
    auto chain = sturm_chain(g);
    Rational bound = root_bound(g);
    struct Piece {
        Rational lo, hi;
        int vlo, vhi;
    };
    std::vector<Piece> work{{-bound, bound, sign_variations(chain, -bound), sign_variations(chain, bound)}};
    std::vector<RootEnclosure> found;
    while (!work.empty()) {
        Piece piece = work.back();
        work.pop_back();
        int count = piece.vlo - piece.vhi;
        if (count <= 0) continue;
        if (count == 1 && piece.hi - piece.lo <= target_width) {
            found.push_back({piece.lo, piece.hi, multiplicity, false});
            continue;
        }
        Rational mid = (piece.lo + piece.hi) / 2;
        if (g.sign_at(mid) == 0) {
            if (count == 1) {
                found.push_back({mid, mid, multiplicity, true});
                continue;
            }
            // Nudge the split point off the root; roots are finite in number.
            Rational step = (piece.hi - piece.lo) / 1024;
            while (g.sign_at(mid) == 0) mid += step;
        }
        int vmid = sign_variations(chain, mid);
        work.push_back({mid, piece.hi, vmid, piece.vhi});
        work.push_back({piece.lo, mid, piece.vlo, vmid});
    }
    Integer lead_den = abs(g.primitive_integer().back());
    for (auto& e : found) {
        if (!e.exact) {
            if (auto r = snap_rational_root(g, e.lo, e.hi, lead_den)) {
                e.lo = e.hi = *r;
                e.exact = true;
            }
        }
        out.push_back(e);
    }
}

}  // namespace detail

/// Isolating intervals for the distinct real roots of F(z, 1), ascending, each of
/// width at most 2^(-precision_bits/2). Rational roots are returned exactly.
inline std::vector<RootEnclosure> real_roots(const QuarticForm& f, unsigned precision_bits = 256) {
    if (f.is_zero()) fail(ErrorCode::DegenerateForm, "F(z,1) is identically zero");
    Poly p = dehomogenize(f);
    Rational width = Rational(1) / pow(Integer(2), std::max(1u, precision_bits / 2));
    std::vector<RootEnclosure> out;
    for (const auto& [g, m] : squarefree_decomposition(p)) detail::isolate_squarefree(g, m, width, out);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.lo < b.lo; });
    return out;
}

/// Continued-fraction convergents (p, q), 1 <= q <= q_max, of the real number
/// enclosed by [lo, hi]. Throws PrecisionExhausted when the enclosure is too
/// wide to pin down every convergent below q_max.
inline std::vector<std::pair<Integer, Integer>> convergents(const RootEnclosure& enc, const Integer& q_max) {
    std::vector<std::pair<Integer, Integer>> out;
    Integer p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    Rational lo = enc.lo, hi = enc.hi;
    bool hi_infinite = false;
    for (;;) {
        Integer alo = floor(lo);
        bool agree = !hi_infinite && floor(hi) == alo;
        if (!agree) {
            // The true partial quotient is at least alo.
            if (q1 > 0 && alo * q1 + q0 > q_max) return out;
            fail(ErrorCode::PrecisionExhausted, "root enclosure too wide for convergents up to q_max");
        }
        Integer pn = alo * p1 + p0, qn = alo * q1 + q0;
        if (qn > q_max) return out;
        out.emplace_back(pn, qn);
        Rational flo = lo - alo, fhi = hi - alo;
        if (flo == 0 && fhi == 0) return out;
        if (flo == 0) {
            lo = 1 / fhi;
            hi_infinite = true;
        } else {
            lo = 1 / fhi;
            hi = 1 / flo;
        }
        p0 = p1;
        q0 = q1;
        p1 = pn;
        q1 = qn;
    }
}

/// A distinct root of F(z, 1) to ~50 significant digits.
struct NumericRoot {
    Real re, im;
    int multiplicity = 1;
    bool is_real = false;
    std::optional<RootEnclosure> enclosure;  // set for real roots
};

namespace detail {

inline std::vector<Complex> durand_kerner(const Poly& monic_poly) {
    int n = monic_poly.degree();
    std::vector<Complex> coeff(n + 1);
    for (int i = 0; i <= n; ++i) coeff[i] = Complex(to_float<Real>(monic_poly[i]));
    auto eval = [&](const Complex& z) {
        Complex acc = coeff[n];
        for (int i = n - 1; i >= 0; --i) acc = acc * z + coeff[i];
        return acc;
    };
    std::vector<Complex> z(n);
    Complex seed(Real("0.4"), Real("0.9"));
    Real radius = to_float<Real>(root_bound(monic_poly));
    z[0] = seed * radius / 2;
    for (int i = 1; i < n; ++i) z[i] = z[i - 1] * seed;
    const Real tol = Real("1e-45");
    for (int iter = 0; iter < 2000; ++iter) {
        Real change = 0;
        for (int i = 0; i < n; ++i) {
            Complex denom(1);
            for (int j = 0; j < n; ++j)
                if (j != i) denom *= (z[i] - z[j]);
            Complex delta = eval(z[i]) / denom;
            z[i] -= delta;
            change = std::max(change, Real(abs(delta)));
        }
        if (change < tol * (1 + radius)) break;
    }
    return z;
}

}  // namespace detail

/// All distinct roots of F(z, 1) with multiplicities. Real roots carry their
/// certified enclosure and their numeric value is its midpoint.
inline std::vector<NumericRoot> numeric_roots(const QuarticForm& f, unsigned precision_bits = 256) {
    if (f.is_zero()) fail(ErrorCode::DegenerateForm, "F(z,1) is identically zero");
    Poly p = dehomogenize(f);
    std::vector<NumericRoot> out;
    Rational width = Rational(1) / pow(Integer(2), std::max(1u, precision_bits / 2));
    for (const auto& [g, m] : squarefree_decomposition(p)) {
        std::vector<RootEnclosure> reals;
        detail::isolate_squarefree(g, m, width, reals);
        std::vector<Complex> zs = detail::durand_kerner(g.monic());
        // The |reals| roots closest to the real axis are the real ones.
        std::sort(zs.begin(), zs.end(), [](const Complex& a, const Complex& b) {
            return boost::multiprecision::abs(a.imag()) < boost::multiprecision::abs(b.imag());
        });
        for (const auto& e : reals) {
            NumericRoot r;
            r.re = to_float<Real>(e.midpoint());
            r.im = 0;
            r.multiplicity = m;
            r.is_real = true;
            r.enclosure = e;
            out.push_back(std::move(r));
        }
        for (std::size_t i = reals.size(); i < zs.size(); ++i) {
            NumericRoot r;
            r.re = zs[i].real();
            r.im = zs[i].imag();
            r.multiplicity = m;
            out.push_back(std::move(r));
        }
    }
    return out;
}

}  // namespace qthue
