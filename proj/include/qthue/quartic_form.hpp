// Binary quartic forms a0 x^4 + a1 x^3 y + a2 x^2 y^2 + a3 x y^3 + a4 y^4 with
// exact integer coefficients: invariants, seminvariants, Hessian covariant and
// the GL2(Z) substitution action.
#pragma once

#include <qthue/errors.hpp>
#include <qthue/integer.hpp>

#include <array>
#include <compare>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace qthue {

/// Coefficients of a binary form of arbitrary degree, highest power of x first.
using BinaryForm = std::vector<Integer>;

inline BinaryForm multiply(const BinaryForm& f, const BinaryForm& g) {
    BinaryForm out(f.size() + g.size() - 1, Integer(0));
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j) out[i + j] += f[i] * g[j];
    return out;
}

inline BinaryForm subtract(BinaryForm f, const BinaryForm& g) {
    for (std::size_t i = 0; i < f.size(); ++i) f[i] -= g[i];
    return f;
}

/// 2x2 integer matrix acting by F(x, y) -> F(a x + b y, c x + d y).
struct Matrix2 {
    Integer a = 1, b = 0, c = 0, d = 1;

    Integer det() const { return a * d - b * c; }
    static Matrix2 identity() { return {}; }
    friend bool operator==(const Matrix2&, const Matrix2&) = default;
};

struct InvariantTriple {
    Integer I, J;
    /// (4 I^3 - J^2) / 27, always integral for integral forms.
    Integer Delta;
    friend bool operator==(const InvariantTriple&, const InvariantTriple&) = default;
};

struct SeminvariantPair {
    Integer H, R;
    friend bool operator==(const SeminvariantPair&, const SeminvariantPair&) = default;
};

class QuarticForm {
  public:
    QuarticForm() = default;
    QuarticForm(Integer a0, Integer a1, Integer a2, Integer a3, Integer a4)
        : c_{std::move(a0), std::move(a1), std::move(a2), std::move(a3), std::move(a4)} {}
    explicit QuarticForm(const std::array<Integer, 5>& coeffs) : c_(coeffs) {}

    const Integer& operator[](std::size_t i) const { return c_[i]; }
    const std::array<Integer, 5>& coefficients() const { return c_; }
    BinaryForm as_binary() const { return {c_.begin(), c_.end()}; }

    bool is_zero() const {
        for (const auto& v : c_)
            if (v != 0) return false;
        return true;
    }

    /// Shape a x^4 + e y^4.
    bool is_diagonal() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }

    Integer operator()(const Integer& x, const Integer& y) const {
        // Homogeneous Horner: (((a0 x + a1 y) x + a2 y^2) x + ...)
        Integer yp = y;
        Integer acc = c_[0];
        for (std::size_t i = 1; i < 5; ++i) {
            acc = acc * x + c_[i] * yp;
            yp *= y;
        }
        return acc;
    }

    QuarticForm negated() const { return {-c_[0], -c_[1], -c_[2], -c_[3], -c_[4]}; }

    std::string str() const {
        std::ostringstream os;
        os << '[';
        for (std::size_t i = 0; i < 5; ++i) os << (i ? "," : "") << c_[i];
        os << ']';
        return os.str();
    }

    friend bool operator==(const QuarticForm&, const QuarticForm&) = default;
    friend bool operator<(const QuarticForm& l, const QuarticForm& r) { return l.c_ < r.c_; }

  private:
    std::array<Integer, 5> c_{};
};

inline InvariantTriple invariants(const QuarticForm& f) {
    const auto& [a0, a1, a2, a3, a4] = f.coefficients();
    Integer I = a2 * a2 - 3 * a1 * a3 + 12 * a0 * a4;
    // Last term is 27 a0 a3^2 (weight-consistent); a3^3 would break 27 | 4I^3 - J^2.
    Integer J = 2 * a2 * a2 * a2 - 9 * a1 * a2 * a3 + 27 * a1 * a1 * a4 - 72 * a0 * a2 * a4 + 27 * a0 * a3 * a3;
    Integer disc27 = 4 * I * I * I - J * J;
    if (disc27 % 27 != 0) fail(ErrorCode::Internal, "27 does not divide 4I^3 - J^2 for " + f.str());
    return {I, J, disc27 / 27};
}

inline bool is_diagonalizable(const QuarticForm& f) { return invariants(f).J == 0; }

inline SeminvariantPair seminvariants(const QuarticForm& f) {
    const auto& [a, b, c, d, e] = f.coefficients();
    (void)e;
    return {8 * a * c - 3 * b * b, b * b * b + 8 * a * a * d - 4 * a * b * c};
}

/// F_xx F_yy - F_xy^2.
inline QuarticForm hessian(const QuarticForm& f) {
    const auto& [a0, a1, a2, a3, a4] = f.coefficients();
    BinaryForm fxx{12 * a0, 6 * a1, 2 * a2};
    BinaryForm fyy{2 * a2, 6 * a3, 12 * a4};
    BinaryForm fxy{3 * a1, 4 * a2, 3 * a3};
    BinaryForm h = subtract(multiply(fxx, fyy), multiply(fxy, fxy));
    return QuarticForm(h[0], h[1], h[2], h[3], h[4]);
}

/// Coefficients of F(a x + b y, c x + d y). Requires det = +-1.
inline QuarticForm act(const QuarticForm& f, const Matrix2& m) {
    Integer det = m.det();
    if (det != 1 && det != -1) fail(ErrorCode::InvalidArgument, "matrix is not unimodular");
    BinaryForm u{m.a, m.b}, v{m.c, m.d};
    BinaryForm out(5, Integer(0));
    for (std::size_t i = 0; i < 5; ++i) {
        BinaryForm term{f[i]};
        for (std::size_t p = 0; p < 4 - i; ++p) term = multiply(term, u);
        for (std::size_t p = 0; p < i; ++p) term = multiply(term, v);
        for (std::size_t k = 0; k < 5; ++k) out[k] += term[k];
    }
    return QuarticForm(out[0], out[1], out[2], out[3], out[4]);
}

/// A primitive pair (x, y) with its form value; canonical up to (x,y) ~ (-x,-y).
struct PrimitiveSolution {
    Integer x, y, value;

    friend bool operator==(const PrimitiveSolution&, const PrimitiveSolution&) = default;
};

/// Ordering used by every solution list: (|y|, y, x).
inline bool solution_order(const PrimitiveSolution& l, const PrimitiveSolution& r) {
    Integer ly = abs(l.y), ry = abs(r.y);
    if (ly != ry) return ly < ry;
    if (l.y != r.y) return l.y < r.y;
    return l.x < r.x;
}

struct CanonicalPair {
    Integer x, y;
    friend bool operator==(const CanonicalPair&, const CanonicalPair&) = default;
};

/// Sign-canonical representative (x > 0, or x = 0 and y = 1). With strict set,
/// non-coprime pairs are rejected (nullopt); otherwise they are divided by the gcd.
inline std::optional<CanonicalPair> normalize_solution(Integer x, Integer y, bool strict = true) {
    if (x == 0 && y == 0) fail(ErrorCode::ZeroPair, "(0, 0) has no primitive representative");
    Integer g = gcd(x, y);
    if (g != 1) {
        if (strict) return std::nullopt;
        x /= g;
        y /= g;
    }
    if (x < 0 || (x == 0 && y < 0)) {
        x = -x;
        y = -y;
    }
    return CanonicalPair{x, y};
}

/// Parses "a0,a1,a2,a3,a4" (whitespace and surrounding brackets tolerated).
inline QuarticForm parse_form(std::string_view text) {
    std::string cleaned;
    for (char ch : text)
        if (ch != '[' && ch != ']' && ch != ' ') cleaned.push_back(ch);
    std::array<Integer, 5> c;
    std::size_t idx = 0, start = 0;
    for (std::size_t pos = 0; pos <= cleaned.size(); ++pos) {
        if (pos == cleaned.size() || cleaned[pos] == ',') {
            require(idx < 5, "form has more than five coefficients");
            std::string tok = cleaned.substr(start, pos - start);
            require(!tok.empty(), "empty coefficient in form");
            try {
                c[idx++] = Integer(tok);
            } catch (const std::exception&) {
                fail(ErrorCode::InvalidArgument, "bad coefficient '" + tok + "'");
            }
            start = pos + 1;
        }
    }
    require(idx == 5, "form needs exactly five coefficients");
    return QuarticForm(c);
}

}  // namespace qthue
