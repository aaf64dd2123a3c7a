#pragma once

#include <qthue/quartic_form.hpp>

#include <ostream>
#include <set>
#include <tuple>

namespace qthue {
inline void PrintTo(const QuarticForm& f, std::ostream* os) { *os << f.str(); }
}  // namespace qthue

namespace testing_support {

using Key = std::tuple<long long, long long, long long, long long, long long>;

inline Key key(const qthue::QuarticForm& f) {
    return {qthue::to_int64(f[0]), qthue::to_int64(f[1]), qthue::to_int64(f[2]), qthue::to_int64(f[3]),
            qthue::to_int64(f[4])};
}

struct Pair {
    long long x, y, value;
    auto operator<=>(const Pair&) const = default;
};

// Every primitive (x, y), x > 0 or (x, y) = (0, 1), with 0 < |F| <= h and max(|x|,|y|) <= box.
inline std::set<Pair> naive_solutions(const qthue::QuarticForm& f, long long h, long long box) {
    std::set<Pair> out;
    std::array<__int128, 5> a;
    for (int i = 0; i < 5; ++i) a[i] = qthue::to_int64(f[i]);
    auto gcd = [](long long p, long long q) {
        p = p < 0 ? -p : p;
        q = q < 0 ? -q : q;
        while (q) {
            long long t = p % q;
            p = q;
            q = t;
        }
        return p;
    };
    for (long long x = 0; x <= box; ++x)
        for (long long y = -box; y <= box; ++y) {
            if (x == 0 && y != 1) continue;
            if (gcd(x, y) != 1) continue;
            __int128 X = x, Y = y;
            __int128 v = a[0] * X * X * X * X + a[1] * X * X * X * Y + a[2] * X * X * Y * Y + a[3] * X * Y * Y * Y +
                         a[4] * Y * Y * Y * Y;
            if (v != 0 && v <= h && v >= -h) out.insert({x, y, static_cast<long long>(v)});
        }
    return out;
}

}  // namespace testing_support
