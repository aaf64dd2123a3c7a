// Enumeration of integral quartics with J = 0 and a prescribed negative I, by
// looping over the leading seminvariant data (a, b, H) and reconstructing the
// remaining coefficients from the syzygy.
#pragma once

#include <qthue/errors.hpp>
#include <qthue/integer.hpp>
#include <qthue/quartic_form.hpp>

#include <algorithm>
#include <functional>
#include <string>
#include <type_traits>
#include <string_view>
#include <utility>
#include <vector>

namespace qthue {

enum class BConvention {
    Standard,  // -2|a| < b <= 2|a|
    Paper,     // -2|a| < b <= 2
};

inline std::string_view to_string(BConvention c) { return c == BConvention::Standard ? "standard" : "paper"; }

inline BConvention parse_b_convention(std::string_view s) {
    if (s == "standard") return BConvention::Standard;
    if (s == "paper") return BConvention::Paper;
    fail(ErrorCode::InvalidArgument, "unknown b-convention '" + std::string(s) + "'");
}

struct EnumerationTask {
    Integer I_target;
    bool include_negated_leading = true;
    BConvention convention = BConvention::Standard;
    /// Drop forms whose coefficients share a factor (they never take the values +-1).
    bool primitive_only = false;
};

namespace detail {

template <class Int>
Int exact_isqrt(const Int& n) {
    return isqrt(n);
}

template <class Int>
Int floor_div_t(Int a, Int b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

template <class Int>
Int ceil_div_t(Int a, Int b) {
    return Int(-floor_div_t<Int>(Int(-a), b));
}

template <class Int>
Integer as_integer(const Int& v) {
    if constexpr (std::is_same_v<Int, int128>)
        return to_integer(v);
    else
        return v;
}

// Core loop; emit(a, b, c, d, e) receives each reconstructed form.
template <class Int, class Emit>
void enumerate_core(Int I, bool both_signs, BConvention conv, Emit&& emit) {
    const Int minus4I = -4 * I;
    for (Int a = 1; 27 * a * a <= minus4I; ++a) {
        const Int P = minus4I * (minus4I - 27 * a * a);
        const Int b_a_floor = exact_isqrt<Int>(floor_div_t<Int>(4 * P, 9));
        const Int h_min = std::max<Int>(ceil_div_t<Int>(4 * I, 3), -b_a_floor);
        const Int h_max = 0;
        for (int s : {1, -1}) {
            if (s == -1 && !both_signs) break;
            const Int sa = s == 1 ? a : Int(-a);
            const Int b_hi = conv == BConvention::Standard ? 2 * a : std::min<Int>(2, 2 * a);
            for (Int b = -2 * a + 1; b <= b_hi; ++b) {
                const Int b2 = b * b;
                // H = 8 sa c - 3 b^2 within [h_min, h_max].
                Int c_lo, c_hi;
                if (sa > 0) {
                    c_lo = ceil_div_t<Int>(h_min + 3 * b2, 8 * sa);
                    c_hi = floor_div_t<Int>(h_max + 3 * b2, 8 * sa);
                } else {
                    c_lo = ceil_div_t<Int>(h_max + 3 * b2, 8 * sa);
                    c_hi = floor_div_t<Int>(h_min + 3 * b2, 8 * sa);
                }
                for (Int c = c_lo; c <= c_hi; ++c) {
                    const Int H = 8 * sa * c - 3 * b2;
                    // Syzygy at J = 0: -27 R^2 = H^3 - 48 I a^2 H.
                    const Int num = -(H * H * H - 48 * I * sa * sa * H);
                    if (num < 0 || num % 27 != 0) continue;
                    Int r;
                    if (!is_square(Int(num / 27), &r)) continue;
                    for (int rs : {1, -1}) {
                        if (rs == -1 && r == 0) break;
                        const Int R = rs == 1 ? r : Int(-r);
                        const Int dnum = R - b2 * b + 4 * sa * b * c;
                        const Int dden = 8 * sa * sa;
                        if (dnum % dden != 0) continue;
                        const Int d = dnum / dden;
                        const Int enumr = I + 3 * b * d - c * c;
                        if (enumr % (12 * sa) != 0) continue;
                        emit(sa, b, c, d, Int(enumr / (12 * sa)));
                    }
                }
            }
        }
    }
}

}  // namespace detail

/// All forms with J = 0 and I = I_target found by the seminvariant loop, in
/// lexicographic coefficient order. Forms with leading coefficient 0 are not
/// produced. Each emitted form is re-checked exactly.
inline std::vector<QuarticForm> enumerate_forms(const EnumerationTask& task) {
    if (task.I_target >= 0) fail(ErrorCode::InvalidArgument, "I_target must be negative");
    std::vector<QuarticForm> out;
    if (task.I_target % 3 != 0) return out;
    auto push = [&](auto a, auto b, auto c, auto d, auto e) {
        using T = decltype(a);
        QuarticForm f(detail::as_integer<T>(a), detail::as_integer<T>(b), detail::as_integer<T>(c),
                      detail::as_integer<T>(d), detail::as_integer<T>(e));
        if (task.primitive_only) {
            Integer g = 0;
            for (const auto& v : f.coefficients()) g = gcd(g, abs(v));
            if (g != 1) return;
        }
        auto inv = invariants(f);
        if (inv.J != 0 || inv.I != task.I_target)
            fail(ErrorCode::Internal, "enumeration produced " + f.str() + " with wrong invariants");
        out.push_back(std::move(f));
    };
    static const Integer fast_limit("10000000000");
    if (abs(task.I_target) <= fast_limit)
        detail::enumerate_core<int128>(to_int128(task.I_target), task.include_negated_leading, task.convention, push);
    else
        detail::enumerate_core<Integer>(task.I_target, task.include_negated_leading, task.convention, push);
    std::sort(out.begin(), out.end());
    return out;
}

struct EnumeratedForm {
    Integer I;
    QuarticForm form;
};

/// enumerate_forms over every I = 0 mod 3 in [I_min, I_max], by descending I.
inline std::vector<EnumeratedForm> enumerate_range(const Integer& I_min, const Integer& I_max,
                                                   BConvention convention = BConvention::Standard,
                                                   bool primitive_only = false) {
    if (!(I_min <= I_max && I_max < 0)) fail(ErrorCode::InvalidArgument, "need I_min <= I_max < 0");
    std::vector<EnumeratedForm> out;
    Integer top = I_max - ((I_max % 3) + 3) % 3;  // largest multiple of 3 <= I_max
    for (Integer I = top; I >= I_min; I -= 3) {
        for (auto& f : enumerate_forms({I, true, convention, primitive_only})) out.push_back({I, std::move(f)});
    }
    return out;
}

}  // namespace qthue
