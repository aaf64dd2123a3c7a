// Dense univariate polynomials over Q (coefficient i multiplies z^i): the exact
// algebra behind squarefree decomposition and Sturm sequences.
#pragma once

#include <qthue/errors.hpp>
#include <qthue/integer.hpp>

#include <utility>
#include <vector>

namespace qthue {

class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly from_integers(const std::vector<Integer>& low_first) {
        std::vector<Rational> c(low_first.begin(), low_first.end());
        return Poly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& operator[](std::size_t i) const { return c_[i]; }
    const Rational& lead() const { return c_.back(); }
    const std::vector<Rational>& coeffs() const { return c_; }

    Poly derivative() const {
        std::vector<Rational> d;
        for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<int>(i));
        return Poly(std::move(d));
    }

    Poly monic() const {
        if (is_zero()) return *this;
        std::vector<Rational> d = c_;
        Rational l = lead();
        for (auto& v : d) v /= l;
        return Poly(std::move(d));
    }

    Poly operator-() const {
        std::vector<Rational> d = c_;
        for (auto& v : d) v = -v;
        return Poly(std::move(d));
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> d(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) d[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(d));
    }

    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<Rational> d(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) d[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) d[i] -= b.c_[i];
        return Poly(std::move(d));
    }

    /// Quotient and remainder; divisor must be nonzero.
    static std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den) {
        if (den.is_zero()) fail(ErrorCode::Internal, "polynomial division by zero");
        std::vector<Rational> r = num.c_;
        int dd = den.degree();
        std::vector<Rational> q(std::max(0, num.degree() - dd + 1), Rational(0));
        for (int i = num.degree(); i >= dd; --i) {
            Rational coef = r[i] / den.lead();
            q[i - dd] = coef;
            if (coef == 0) continue;
            for (int j = 0; j <= dd; ++j) r[i - dd + j] -= coef * den.c_[j];
        }
        r.resize(std::max(0, dd));
        return {Poly(std::move(q)), Poly(std::move(r))};
    }

    static Poly gcd(Poly a, Poly b) {
        while (!b.is_zero()) {
            Poly r = divmod(a, b).second;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    Rational operator()(const Rational& z) const {
        Rational acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
        return acc;
    }

    /// Sign of p(n/d) for d > 0, by exact integer arithmetic.
    int sign_at(const Rational& z) const {
        if (is_zero()) return 0;
        return sign((*this)(z));
    }

    /// Scaled to coprime integer coefficients with positive leading coefficient.
    std::vector<Integer> primitive_integer() const {
        std::vector<Integer> out;
        if (is_zero()) return out;
        Integer l = 1;
        for (const auto& v : c_) l = boost::multiprecision::lcm(l, denominator(v));
        Integer g = 0;
        for (const auto& v : c_) {
            out.push_back(numerator(v) * (l / denominator(v)));
            g = qthue::gcd(g, out.back());
        }
        if (out.back() < 0) g = -g;
        for (auto& v : out) v /= g;
        return out;
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Rational> c_;
};

/// Yun's algorithm: p = lead * prod_m factors[m]^m, each factor monic and
/// squarefree, pairwise coprime. Returned as (factor, multiplicity), skipping
/// constant factors.
inline std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p) {
    std::vector<std::pair<Poly, int>> out;
    if (p.degree() < 1) return out;
    Poly dp = p.derivative();
    Poly a = Poly::gcd(p, dp);
    Poly b = Poly::divmod(p, a).first;
    Poly c = Poly::divmod(dp, a).first;
    Poly d = c - b.derivative();
    int m = 1;
    while (b.degree() >= 1) {
        Poly g = Poly::gcd(b, d);
        if (g.degree() >= 1) out.emplace_back(g, m);
        b = Poly::divmod(b, g).first;
        c = Poly::divmod(d, g).first;
        d = c - b.derivative();
        ++m;
    }
    return out;
}

/// Sturm chain p, p', -rem(p, p'), ... with each member scaled to a primitive
/// integer polynomial (positive scaling preserves signs).
inline std::vector<Poly> sturm_chain(const Poly& p) {
    std::vector<Poly> chain{p, p.derivative()};
    while (!chain.back().is_zero() && chain.back().degree() > 0) {
        Poly r = Poly::divmod(chain[chain.size() - 2], chain.back()).second;
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    for (auto& q : chain) {
        if (q.is_zero()) continue;
        auto ints = q.primitive_integer();
        Poly scaled = Poly::from_integers(ints);
        if (sign(scaled.lead()) != sign(q.lead())) scaled = -scaled;
        q = scaled;
    }
    return chain;
}

/// Number of sign changes of the chain evaluated at z (zeros skipped).
inline int sign_variations(const std::vector<Poly>& chain, const Rational& z) {
    int count = 0, last = 0;
    for (const auto& q : chain) {
        int s = q.sign_at(z);
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

}  // namespace qthue
