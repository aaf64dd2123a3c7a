#include <qthue/enumerate.hpp>

#include <gtest/gtest.h>

#include "support.hpp"

#include <algorithm>
#include <cmath>

using namespace qthue;
using testing_support::Key;
using testing_support::key;

namespace {

bool contains(const std::vector<QuarticForm>& v, const QuarticForm& f) {
    return std::find(v.begin(), v.end(), f) != v.end();
}

std::vector<Matrix2> small_gl2(int r) {
    std::vector<Matrix2> out;
    for (int a = -r; a <= r; ++a)
        for (int b = -r; b <= r; ++b)
            for (int c = -r; c <= r; ++c)
                for (int d = -r; d <= r; ++d)
                    if (a * d - b * c == 1 || a * d - b * c == -1) out.push_back({a, b, c, d});
    return out;
}

bool has_linear_factor(long long a, long long b, long long c, long long d, long long e) {
    if (a == 0 || e == 0) return true;
    auto divs = [](long long n) {
        std::vector<long long> v;
        for (long long k = 1; k <= std::llabs(n); ++k)
            if (n % k == 0) v.push_back(k);
        return v;
    };
    // p/q root of a z^4 + ... + e: p | e and q | a
    for (long long p : divs(e))
        for (long long q : divs(a))
            for (long long sp : {p, -p}) {
                __int128 v = a * (__int128)sp * sp * sp * sp + b * (__int128)sp * sp * sp * q + c * (__int128)sp * sp * q * q +
                             d * (__int128)sp * q * q * q + e * (__int128)q * q * q * q;
                if (v == 0) return true;
            }
    return false;
}

}  // namespace

TEST(EnumerateForms, Examples) {
    EXPECT_TRUE(enumerate_forms({-3}).empty());
    EXPECT_TRUE(enumerate_forms({-5}).empty());

    auto f12 = enumerate_forms({-12});
    EXPECT_TRUE(contains(f12, {1, 0, 0, 0, -1}));
    EXPECT_TRUE(contains(f12, {-1, 0, 0, 0, 1}));

    auto f24 = enumerate_forms({-24});
    EXPECT_TRUE(contains(f24, {1, 0, 0, 0, -2}));
}

TEST(EnumerateForms, OutputHasRequestedInvariants) {
    for (int I = -3; I >= -600; I -= 3) {
        for (auto conv : {BConvention::Standard, BConvention::Paper})
            for (const auto& f : enumerate_forms({I, true, conv})) {
                auto inv = invariants(f);
                ASSERT_EQ(inv.I, I) << f.str();
                ASSERT_EQ(inv.J, 0) << f.str();
            }
    }
}

TEST(EnumerateForms, NegationClosedAndWithinLoopBounds) {
    for (int I = -3; I >= -900; I -= 3) {
        auto forms = enumerate_forms({I});
        std::set<Key> keys;
        for (const auto& f : forms) keys.insert(key(f));
        ASSERT_EQ(keys.size(), forms.size()) << "duplicate output at I=" << I;
        double a_bound = 2.0 / (3.0 * std::sqrt(3.0)) * std::sqrt(double(-I));
        for (const auto& f : forms) {
            // -F itself, or -F(x, -y) when the half-open b range moves it
            auto g = f.negated();
            ASSERT_TRUE(keys.count(key(g)) || keys.count(key(act(g, {1, 0, 0, -1})))) << f.str();
            ASSERT_NE(f[0], 0);
            ASSERT_LE(to_float<double>(abs(f[0])), a_bound + 1e-9);
            auto H = seminvariants(f).H;
            ASSERT_GE(H, Rational(4 * I, 3) - 1) << f.str();
        }
        ASSERT_TRUE(std::is_sorted(forms.begin(), forms.end(),
                                   [](const auto& l, const auto& r) { return key(l) < key(r); }));
    }
}

// Every J = 0 form with the given I, coefficients in [-12, 12] and no rational
// linear factor is GL2(Z) equivalent to an enumerated form through a matrix with
// entries in [-4, 4]. Forms with a linear factor are equivalent to ones with
// a0 = 0, which the enumeration leaves to the solver.
TEST(EnumerateForms, CompleteAgainstExhaustiveSearch) {
    auto mats = small_gl2(4);
    std::size_t found = 0;
    for (long long I : {-12LL, -24LL, -48LL}) {
        std::set<Key> orbit;
        for (const auto& f : enumerate_forms({I}))
            for (const auto& m : mats) {
                auto g = act(f, m);
                bool small = true;
                for (int i = 0; i < 5; ++i) small = small && abs(g[i]) <= 12;
                if (small) orbit.insert(key(g));
            }
        const long long B = 12;
        for (long long a = -B; a <= B; ++a)
            for (long long b = -B; b <= B; ++b)
                for (long long c = -B; c <= B; ++c)
                    for (long long d = -B; d <= B; ++d)
                        for (long long e = -B; e <= B; ++e) {
                            if (12 * a * e - 3 * b * d + c * c != I) continue;
                            long long J = 72 * a * c * e + 9 * b * c * d - 27 * a * d * d - 27 * e * b * b - 2 * c * c * c;
                            if (J != 0) continue;
                            if (has_linear_factor(a, b, c, d, e)) continue;
                            ++found;
                            ASSERT_TRUE(orbit.count({a, b, c, d, e}))
                                << "I=" << I << " missing class of (" << a << "," << b << "," << c << "," << d << "," << e << ")";
                        }
    }
    EXPECT_GT(found, 0u);
}

TEST(EnumerateRange, UnionOfSingleValues) {
    auto range = enumerate_range(-12, -3);
    std::size_t total = 0;
    for (int I : {-3, -6, -9, -12}) {
        auto single = enumerate_forms({I});
        total += single.size();
        for (const auto& f : single) {
            auto it = std::find_if(range.begin(), range.end(), [&](const auto& e) { return e.I == I && e.form == f; });
            EXPECT_NE(it, range.end());
        }
    }
    EXPECT_EQ(range.size(), total);

    auto r24 = enumerate_range(-24, -24);
    EXPECT_TRUE(std::any_of(r24.begin(), r24.end(), [](const auto& e) { return e.form == QuarticForm(1, 0, 0, 0, -2); }));
    EXPECT_TRUE(enumerate_range(-3, -3).empty());
    EXPECT_THROW(enumerate_range(-3, 0), Error);
}

TEST(EnumerateRange, PrimitiveOnlyDropsContent) {
    auto all = enumerate_range(-600, -3);
    auto prim = enumerate_range(-600, -3, BConvention::Standard, true);
    EXPECT_LT(prim.size(), all.size());
    std::size_t primitive = 0;
    for (const auto& e : all) {
        Integer g = 0;
        for (int i = 0; i < 5; ++i) g = gcd(g, e.form[i]);
        if (g == 1) ++primitive;
    }
    EXPECT_EQ(prim.size(), primitive);
}
