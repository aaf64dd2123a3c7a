// Exact values alpha + beta * log2(3) over the rationals, with certified
// enclosures and exact sign decisions.
#pragma once

#include <qthue/errors.hpp>
#include <qthue/integer.hpp>

#include <string>
#include <tuple>
#include <utility>

namespace qthue {

/// Rational bracket lo < log2(3) < hi. log2(3) = 1 + atanh(1/5) / atanh(1/3),
/// with both series summed in fixed point under directed rounding.
class Log2Of3 {
  public:
    static std::pair<Rational, Rational> initial() {
        return {Rational(Integer(15849625007), Integer("10000000000")),
                Rational(Integer(15849625008), Integer("10000000000"))};
    }

    /// Bracket from the first `terms` terms of each series; width ~ 9^-terms.
    static std::pair<Rational, Rational> bracket(unsigned terms) {
        const unsigned bits = 4 * terms + 64;
        auto [a5_lo, a5_hi] = atanh_inverse(5, terms, bits);
        auto [a3_lo, a3_hi] = atanh_inverse(3, terms, bits);
        return {1 + Rational(a5_lo, a3_hi), 1 + Rational(a5_hi, a3_lo)};
    }

  private:
    // 2^bits * atanh(1/m), rounded down and up.
    static std::pair<Integer, Integer> atanh_inverse(unsigned m, unsigned terms, unsigned bits) {
        const Integer one = Integer(1) << bits;
        const Integer m2 = m * m;
        Integer lo = 0, hi = 0, mpow = m;  // m^(2i+1)
        for (unsigned i = 0; i < terms; ++i, mpow *= m2) {
            Integer den = (2 * i + 1) * mpow;
            lo += one / den;
            hi += ceil_div(one, den);
        }
        // tail < next term * m^2 / (m^2 - 1)
        hi += ceil_div(one * m2, (2 * terms + 1) * mpow * (m2 - 1));
        return {lo, hi};
    }
};

class LogLinearValue {
  public:
    LogLinearValue() = default;
    LogLinearValue(Rational alpha, Rational beta = 0) : alpha_(std::move(alpha)), beta_(std::move(beta)) {}
    LogLinearValue(long long alpha) : alpha_(alpha) {}

    static LogLinearValue ell() { return {0, 1}; }

    const Rational& alpha() const { return alpha_; }
    const Rational& beta() const { return beta_; }
    bool is_rational() const { return beta_ == 0; }

    /// Closed bracket of the value from the given bracket of log2(3).
    std::pair<Rational, Rational> enclosure(const Rational& lo, const Rational& hi) const {
        Rational a = alpha_ + beta_ * lo, b = alpha_ + beta_ * hi;
        return a <= b ? std::make_pair(a, b) : std::make_pair(b, a);
    }
    std::pair<Rational, Rational> enclosure() const {
        auto [lo, hi] = Log2Of3::initial();
        return enclosure(lo, hi);
    }

    double numeric() const {
        auto [llo, lhi] = Log2Of3::bracket(24);
        auto [lo, hi] = enclosure(llo, lhi);
        return to_float<double>((lo + hi) / 2);
    }

    /// Exact sign; terminates because log2(3) is irrational.
    int sign() const {
        if (beta_ == 0) return qthue::sign(alpha_);
        auto [lo, hi] = Log2Of3::initial();
        for (unsigned terms = 16;; terms *= 2) {
            auto [vlo, vhi] = enclosure(lo, hi);
            if (vlo > 0) return 1;
            if (vhi < 0) return -1;
            if (terms > 65536) break;
            std::tie(lo, hi) = Log2Of3::bracket(terms);
        }
        fail(ErrorCode::PrecisionExhausted, "sign of " + str() + " not separated from zero");
    }

    std::string str() const {
        if (beta_ == 0) return alpha_.str();
        if (alpha_ == 0) return beta_.str() + "*l";
        return alpha_.str() + (beta_ < 0 ? " - " : " + ") + abs(beta_).str() + "*l";
    }

    friend LogLinearValue operator+(const LogLinearValue& a, const LogLinearValue& b) {
        return {a.alpha_ + b.alpha_, a.beta_ + b.beta_};
    }
    friend LogLinearValue operator-(const LogLinearValue& a, const LogLinearValue& b) {
        return {a.alpha_ - b.alpha_, a.beta_ - b.beta_};
    }
    friend LogLinearValue operator-(const LogLinearValue& a) { return {-a.alpha_, -a.beta_}; }
    friend LogLinearValue operator*(const Rational& s, const LogLinearValue& a) { return {s * a.alpha_, s * a.beta_}; }
    friend LogLinearValue operator*(const LogLinearValue& a, const Rational& s) { return s * a; }
    friend LogLinearValue operator/(const LogLinearValue& a, const Rational& s) {
        require(s != 0, "division by zero");
        return {a.alpha_ / s, a.beta_ / s};
    }
    friend bool operator==(const LogLinearValue& a, const LogLinearValue& b) {
        return a.alpha_ == b.alpha_ && a.beta_ == b.beta_;
    }

  private:
    Rational alpha_ = 0, beta_ = 0;
};


}  // namespace qthue
