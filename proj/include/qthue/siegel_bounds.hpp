// Gap-principle exponents, the E_i / Theta_i constants, the Phi comparison
// identities, Thue-Siegel thresholds and solution-count bounds.
#pragma once

#include <qthue/arith.hpp>
#include <qthue/errors.hpp>
#include <qthue/integer.hpp>
#include <qthue/log_linear.hpp>
#include <qthue/roots.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qthue {

struct GapExponents {
    int k = 1;
    Rational a1, a2;
};

/// a1(k) = (3^k - 1)/2 + 3^(k-1), a2(k) = (3^k - 1)/2 + 3^(k-1)/4.
inline GapExponents gap_exponents(int k) {
    require(k >= 1, "gap exponents need k >= 1");
    Integer p = pow(Integer(3), static_cast<unsigned>(k));
    Integer p1 = pow(Integer(3), static_cast<unsigned>(k - 1));
    Rational half = Rational(Integer(p - 1)) / 2;
    return {k, half + Rational(p1), half + Rational(p1) / 4};
}

namespace detail {

inline void check_domain(int i, int n, int k, int g) {
    require(i >= 0 && i <= 3, "constant index must be 0..3");
    require(k >= 3, "k must be at least 3");
    if (i == 2) require(n >= 2, "n must be at least 2");
    if (i == 1 || i == 2) require(g == 0 || g == 1, "g must be 0 or 1");
}

}  // namespace detail

/// A constant written as (xi + eta a1(k-1)) / (theta + sigma eta a2(k-1)) with
/// sigma = +1 for the exponents E_i and -1 for the Theta_i.
struct ConstantTriple {
    LogLinearValue xi;
    Rational eta, theta;
    int sigma = 1;

    LogLinearValue at(int k) const {
        auto ge = gap_exponents(k - 1);
        return (xi + LogLinearValue(eta * ge.a1)) / (theta + sigma * eta * ge.a2);
    }
};

inline ConstantTriple exponent_triple(int i, int n, int g) {
    switch (i) {
        case 0: return {0, 4, 1, 1};
        case 1: return {Rational(-2 * g), 4 + g, 4, 1};
        case 2: return {Rational(-8 * n - 14 + 2 * g), 8 * n - 5 + g, 6 * n + 4, 1};
        default: return {Rational(-2), 4, 2, 1};
    }
}

inline ConstantTriple theta_triple(int i, int n, int g) {
    switch (i) {
        case 0: return {Rational(-1), -4, 1, -1};
        case 1: return {Rational(-24 - 8 * g), -(4 + g), 4, -1};
        case 2: return {3 * LogLinearValue::ell() + LogLinearValue(-54 * n - 66 - 8 * g), -(8 * n - 5 + g), 6 * n + 4, -1};
        default: return {Rational(-13), -4, 2, -1};
    }
}

inline Rational exponent_E(int i, int n, int k, int g) {
    detail::check_domain(i, n, k, g);
    auto v = exponent_triple(i, n, g).at(k);
    return v.alpha();
}

inline LogLinearValue theta(int i, int n, int k, int g) {
    detail::check_domain(i, n, k, g);
    return theta_triple(i, n, g).at(k);
}

/// C_i = 2^Theta_i.
inline Real constant_C(int i, int n, int k, int g) {
    auto t = theta(i, n, k, g);
    Real ell = log(Real(3)) / log(Real(2));
    return pow(Real(2), to_float<Real>(t.alpha()) + to_float<Real>(t.beta()) * ell);
}

enum class PhiKind { E0, E1, E2, E3, C0, C1, C2, C3 };

inline constexpr PhiKind all_phi_kinds[] = {PhiKind::E0, PhiKind::E1, PhiKind::E2, PhiKind::E3,
                                            PhiKind::C0, PhiKind::C1, PhiKind::C2, PhiKind::C3};

inline std::string_view to_string(PhiKind w) {
    constexpr std::string_view names[] = {"E0", "E1", "E2", "E3", "C0", "C1", "C2", "C3"};
    return names[static_cast<int>(w)];
}

inline PhiKind parse_phi_kind(std::string_view s) {
    for (auto w : all_phi_kinds)
        if (to_string(w) == s) return w;
    fail(ErrorCode::InvalidArgument, "unknown Phi kind '" + std::string(s) + "'");
}

inline bool is_C(PhiKind w) { return static_cast<int>(w) >= 4; }
inline int phi_index(PhiKind w) { return static_cast<int>(w) % 4; }
inline bool uses_n(PhiKind w) { return phi_index(w) == 2; }
inline bool uses_g(PhiKind w) { return phi_index(w) == 1 || phi_index(w) == 2; }

struct PhiEvaluation {
    LogLinearValue by_triples;
    LogLinearValue by_closed_form;
    bool agree() const { return by_triples == by_closed_form; }
};

namespace detail {

// Cleared-denominator difference of the compared constant (2) and the
// (2, k, 0) constant (1); its nonnegativity means constant 1 <= constant 2.
inline LogLinearValue phi_rule(const ConstantTriple& t1, const ConstantTriple& t2, int k) {
    auto ge = gap_exponents(k - 1);
    LogLinearValue c0 = t2.xi * t1.theta - t1.xi * t2.theta;
    Rational c1 = t2.eta * t1.theta - t1.eta * t2.theta;
    LogLinearValue c2 = t1.sigma > 0 ? t2.xi * t1.eta - t1.xi * t2.eta : t1.xi * t2.eta - t2.xi * t1.eta;
    return c0 + LogLinearValue(c1 * ge.a1) + c2 * ge.a2;
}

// The eight closed-form expansions in powers of 3^k, kept as reference values.
inline LogLinearValue phi_printed(PhiKind w, int n, int k, int g) {
    const Rational T = Rational(pow(Integer(3), static_cast<unsigned>(k)));
    const LogLinearValue l = LogLinearValue::ell();
    const Rational N(n), G(g);
    switch (w) {
        case PhiKind::E0: return LogLinearValue(685 * T - 1017) / 18;
        case PhiKind::E1: return LogLinearValue(225 - 198 * G + (130 + 27 * G) * T) * Rational(2, 9);
        case PhiKind::E2: return LogLinearValue(110 - 55 * N - 2 * G + (-842 + 421 * N + 131 * G) * T / 9);
        case PhiKind::E3: return LogLinearValue(-108 + 79 * T) * Rational(7, 18);
        case PhiKind::C0: return (LogLinearValue(-5688) + 108 * l + (LogLinearValue(4265) - 841 * l) * T) / 36;
        case PhiKind::C1:
            return (LogLinearValue(3816) - 216 * l - LogLinearValue(5868 * G) + 54 * G * l +
                    (LogLinearValue(2824) - 84 * l + LogLinearValue(442 * G) - 21 * l) * T) /
                   36;
        case PhiKind::C2:
            return (LogLinearValue(13536) + 432 * l - LogLinearValue(6768 * N) - 216 * N * l - LogLinearValue(5868 * G) +
                    54 * G * l +
                    (LogLinearValue(-9932) + 336 * l + LogLinearValue(4966 * N) - 168 * N * l + LogLinearValue(442 * G) -
                     21 * G * l) *
                        T) /
                   36;
        case PhiKind::C3: return (LogLinearValue(-598) + (LogLinearValue(493) - 12 * l) * T) * Rational(7, 36);
    }
    fail(ErrorCode::Internal, "unreachable");
}

}  // namespace detail

/// Phi for comparing the (2, k, 0) constant with constant `which`, computed both
/// from the coefficient triples and from the closed-form expansion.
inline PhiEvaluation phi(PhiKind which, int n, int k, int g) {
    const int i = phi_index(which);
    detail::check_domain(i, uses_n(which) ? n : 2, k, uses_g(which) ? g : 0);
    if (!uses_n(which)) n = 2;
    if (!uses_g(which)) g = 0;
    ConstantTriple t1 = is_C(which) ? theta_triple(2, 2, 0) : exponent_triple(2, 2, 0);
    ConstantTriple t2 = is_C(which) ? theta_triple(i, n, g) : exponent_triple(i, n, g);
    return {detail::phi_rule(t1, t2, k), detail::phi_printed(which, n, k, g)};
}

struct PhiPoint {
    PhiKind which;
    int n = 0, k = 0, g = 0;
    LogLinearValue by_triples, by_closed_form;
};

struct PhiScanReport {
    std::size_t points = 0;
    std::vector<PhiPoint> mismatches;
    std::vector<PhiPoint> negatives;  // either evaluation below zero
    std::optional<PhiPoint> minimum;  // smallest triple-rule value
    double minimum_value = 0;

    bool nonnegative() const { return negatives.empty(); }
    bool expansions_agree() const { return mismatches.empty(); }
};

/// Evaluates every Phi on k in [k_lo, k_hi], n in [n_lo, n_hi], g in {0, 1}.
inline PhiScanReport phi_scan(int k_lo, int k_hi, int n_lo, int n_hi) {
    require(k_lo >= 3 && k_lo <= k_hi, "need 3 <= k_lo <= k_hi");
    require(n_lo >= 2 && n_lo <= n_hi, "need 2 <= n_lo <= n_hi");
    PhiScanReport rep;
    for (auto w : all_phi_kinds)
        for (int k = k_lo; k <= k_hi; ++k)
            for (int n = uses_n(w) ? n_lo : 2; n <= (uses_n(w) ? n_hi : 2); ++n)
                for (int g = 0; g <= (uses_g(w) ? 1 : 0); ++g) {
                    auto ev = phi(w, n, k, g);
                    PhiPoint p{w, n, k, g, ev.by_triples, ev.by_closed_form};
                    ++rep.points;
                    if (!ev.agree()) rep.mismatches.push_back(p);
                    if (ev.by_triples.sign() < 0 || ev.by_closed_form.sign() < 0) rep.negatives.push_back(p);
                    double v = ev.by_triples.numeric();
                    if (!rep.minimum || v < rep.minimum_value) {
                        rep.minimum = p;
                        rep.minimum_value = v;
                    }
                }
    return rep;
}

enum class BindingConstraint { QuarterJSquared, SiegelConstant };

inline std::string_view to_string(BindingConstraint b) {
    return b == BindingConstraint::QuarterJSquared ? "h<j^2/4" : "h<C2*j^E2";
}

struct ThresholdReport {
    int k = 0;
    Integer h;
    Real j_min;
    /// Forms with I < I_max (strictly) satisfy both hypotheses.
    Real I_max;
    int bound = 0;
    BindingConstraint binding = BindingConstraint::SiegelConstant;
    /// Both hypotheses are strict, so j_min and I_max are excluded endpoints.
    bool open_boundary = true;
};

/// Smallest |j| at which h < j^2/4 and h < C2(2,k,0) |j|^E2(2,k,0) start to hold,
/// and the matching I_max = -12 j_min^4.
inline ThresholdReport threshold(int k, const Integer& h) {
    require(k >= 3, "k must be at least 3");
    require(h >= 1, "h must be positive");
    const Real E = to_float<Real>(exponent_E(2, 2, k, 0));
    const Real C = constant_C(2, 2, k, 0);
    const Real hr = to_float<Real>(h);
    auto excess = [&](const Real& j) { return C * pow(j, E) - hr; };
    Real lo = 0, hi = 1;
    while (excess(hi) <= 0) hi *= 2;
    const Real rel("1e-40");
    while (hi - lo > rel * hi) {
        Real mid = (lo + hi) / 2;
        (excess(mid) > 0 ? hi : lo) = mid;
    }
    Real j_siegel = (lo + hi) / 2;
    Real j_quarter = 2 * sqrt(hr);
    ThresholdReport r;
    r.k = k;
    r.h = h;
    r.binding = j_siegel >= j_quarter ? BindingConstraint::SiegelConstant : BindingConstraint::QuarterJSquared;
    r.j_min = std::max(j_siegel, j_quarter);
    r.I_max = -12 * pow(r.j_min, 4);
    r.bound = 2 * k;
    return r;
}

/// Smallest 2k, k in [3, k_max], whose threshold admits I.
inline std::optional<int> solution_count_bound(const Integer& I, const Integer& h, int k_max) {
    require(I < 0, "I must be negative");
    require(k_max >= 3, "k_max must be at least 3");
    const Real Ir = to_float<Real>(I);
    for (int k = 3; k <= k_max; ++k)
        if (Ir < threshold(k, h).I_max) return 2 * k;
    return std::nullopt;
}

/// 8 * 4^omega(h).
inline Integer bombieri_schmidt_count(const Integer& h) {
    require(h >= 1, "h must be positive");
    return 8 * pow(Integer(4), static_cast<unsigned>(omega(h)));
}

}  // namespace qthue
