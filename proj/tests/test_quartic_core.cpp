#include <qthue/diagonalize.hpp>
#include <qthue/quartic_form.hpp>
#include <qthue/roots.hpp>

#include <gtest/gtest.h>

#include "support.hpp"

#include <random>

using namespace qthue;

namespace {

// Discriminant of a0 z^4 + ... + a4 from the 7x7 Sylvester matrix of f and f',
// divided by a0. Bareiss elimination keeps everything integral.
Integer sylvester_discriminant(const QuarticForm& f) {
    std::array<Integer, 5> p = f.coefficients();
    std::array<Integer, 4> dp = {4 * p[0], 3 * p[1], 2 * p[2], p[3]};
    std::vector<std::vector<Integer>> m(7, std::vector<Integer>(7, 0));
    for (int r = 0; r < 3; ++r)
        for (int i = 0; i < 5; ++i) m[r][r + i] = p[i];
    for (int r = 0; r < 4; ++r)
        for (int i = 0; i < 4; ++i) m[3 + r][r + i] = dp[i];
    Integer prev = 1;
    int sgn = 1;
    for (int k = 0; k < 6; ++k) {
        if (m[k][k] == 0) {
            int s = k + 1;
            while (s < 7 && m[s][k] == 0) ++s;
            if (s == 7) return 0;
            std::swap(m[k], m[s]);
            sgn = -sgn;
        }
        for (int i = k + 1; i < 7; ++i)
            for (int j = k + 1; j < 7; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    Integer res = sgn * m[6][6];
    return res / p[0];
}

QuarticForm random_form(std::mt19937_64& rng, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    return {d(rng), d(rng), d(rng), d(rng), d(rng)};
}

Matrix2 random_unimodular(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(-3, 3);
    Matrix2 m{1, 0, 0, 1};
    for (int i = 0; i < 4; ++i) {
        Integer r = d(rng);
        Matrix2 step = (i % 2) ? Matrix2{1, r, 0, 1} : Matrix2{1, 0, r, 1};
        m = {m.a * step.a + m.b * step.c, m.a * step.b + m.b * step.d, m.c * step.a + m.d * step.c,
             m.c * step.b + m.d * step.d};
    }
    return m;
}

}  // namespace

TEST(Invariants, Examples) {
    auto a = invariants({1, 0, 0, 0, -2});
    EXPECT_EQ(a.I, -24);
    EXPECT_EQ(a.J, 0);
    EXPECT_EQ(a.Delta, -2048);
    auto b = invariants({0, 0, 0, 0, 1});
    EXPECT_EQ(b.I, 0);
    EXPECT_EQ(b.J, 0);
    EXPECT_EQ(b.Delta, 0);
    auto c = invariants({1, 2, 3, 4, 5});
    EXPECT_EQ(c.I, 45);
    EXPECT_EQ(c.J, -270);
    EXPECT_EQ(c.Delta, 10800);
}

TEST(Invariants, DeltaMatchesResultantDiscriminant) {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 2000; ++i) {
        auto f = random_form(rng, -30, 30);
        if (f[0] == 0) continue;
        auto inv = invariants(f);
        ASSERT_EQ(inv.Delta, sylvester_discriminant(f)) << f.str();
        ASSERT_EQ(27 * inv.Delta, 4 * inv.I * inv.I * inv.I - inv.J * inv.J);
    }
}

TEST(Invariants, UnimodularInvariance) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 500; ++i) {
        auto f = random_form(rng, -20, 20);
        auto m = random_unimodular(rng);
        ASSERT_EQ(m.det(), 1);
        auto g = act(f, m);
        auto a = invariants(f), b = invariants(g);
        ASSERT_EQ(a.I, b.I);
        ASSERT_EQ(a.J, b.J);
        // swapping x and y has determinant -1; I and J have even weight
        auto s = invariants(act(f, {0, 1, 1, 0}));
        ASSERT_EQ(a.I, s.I);
        ASSERT_EQ(a.J, s.J);
    }
}

TEST(Seminvariants, ExamplesAndSyzygy) {
    auto a = seminvariants({1, 0, 0, 0, -1});
    EXPECT_EQ(a.H, 0);
    EXPECT_EQ(a.R, 0);
    auto b = seminvariants({1, 2, 3, 4, 5});
    EXPECT_EQ(b.H, 12);
    EXPECT_EQ(b.R, 16);
    auto c = seminvariants({1, 0, 1, 0, 0});
    EXPECT_EQ(c.H, 8);
    EXPECT_EQ(c.R, 0);

    std::mt19937_64 rng(3);
    for (int i = 0; i < 2000; ++i) {
        auto f = random_form(rng, -40, 40);
        if (f[0] == 0) continue;
        auto inv = invariants(f);
        auto sv = seminvariants(f);
        Integer a0 = f[0];
        Integer Jsyz = -inv.J;
        ASSERT_EQ(sv.H * sv.H * sv.H - 48 * inv.I * a0 * a0 * sv.H + 64 * Jsyz * a0 * a0 * a0, -27 * sv.R * sv.R);
    }
}

TEST(Hessian, Examples) {
    EXPECT_EQ(hessian({1, 0, 0, 0, -2}), QuarticForm(0, 0, -288, 0, 0));
    EXPECT_EQ(hessian({0, 0, 0, 0, 1}), QuarticForm(0, 0, 0, 0, 0));
    // 12x^2 * 12y^2
    EXPECT_EQ(hessian({1, 0, 0, 0, 1}), QuarticForm(0, 0, 144, 0, 0));
}

TEST(Hessian, Covariance) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 300; ++i) {
        auto f = random_form(rng, -10, 10);
        auto m = random_unimodular(rng);
        ASSERT_EQ(hessian(act(f, m)), act(hessian(f), m)) << f.str();
    }
}

TEST(Act, Examples) {
    EXPECT_EQ(act({1, 0, 0, 0, 1}, {1, 0, 0, 1}), QuarticForm(1, 0, 0, 0, 1));
    auto sheared = act({1, 0, 0, 0, 1}, {1, 1, 0, 1});
    EXPECT_EQ(sheared, QuarticForm(1, 4, 6, 4, 2));
    EXPECT_EQ(invariants(sheared).I, 12);
    auto swapped = act({1, 0, 0, 0, -2}, {0, 1, 1, 0});
    EXPECT_EQ(swapped, QuarticForm(-2, 0, 0, 0, 1));
    EXPECT_EQ(invariants(swapped).I, -24);
}

TEST(Diagonalize, DiagonalForms) {
    auto r = diagonalize({1, 0, 0, 0, -2});
    EXPECT_NEAR(r.j_abs, 1.189207115, 1e-6);
    EXPECT_NEAR(std::fabs(r.u_alpha), 1.0, 1e-6);
    EXPECT_NEAR(r.u_beta, 0.0, 1e-6);
    EXPECT_NEAR(r.v_gamma, 0.0, 1e-6);
    EXPECT_NEAR(std::fabs(r.v_delta), 1.189207115, 1e-6);

    auto s = diagonalize({1, 0, 0, 0, -1});
    EXPECT_NEAR(s.j_abs, 1.0, 1e-9);

    try {
        diagonalize({1, 0, 0, 0, 1});
        FAIL() << "expected NotDiagonalizable";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotDiagonalizable);
    }
}

TEST(Diagonalize, ReproducesEnumeratedShapes) {
    // u^4 - v^4 for a handful of sheared diagonal forms
    for (auto base : {QuarticForm(1, 0, 0, 0, -2), QuarticForm(3, 0, 0, 0, -1), QuarticForm(-1, 0, 0, 0, 5)}) {
        for (auto m : {Matrix2{1, 1, 0, 1}, Matrix2{2, 1, 1, 1}, Matrix2{1, 0, -3, 1}}) {
            auto f = act(base, m);
            auto r = diagonalize(f);
            EXPECT_LT(r.residual, 1e-9) << f.str();
            double j_expected = std::pow(std::fabs(to_float<double>(invariants(f).Delta)) / 256.0, 1.0 / 12);
            EXPECT_NEAR(r.j_abs, j_expected, 1e-6 * j_expected);
        }
    }
}

TEST(SolutionDiagnostics, Examples) {
    QuarticForm f{1, 0, 0, 0, -2};
    auto res = diagonalize(f);
    auto a = solution_diagnostics(f, res, 1, 0);
    EXPECT_NEAR(a.Z, 1.0, 1e-9);
    EXPECT_NEAR(a.zeta, 1.0, 1e-9);
    EXPECT_EQ(a.related_root, 1);
    auto b = solution_diagnostics(f, res, 1, 1);
    auto c = solution_diagnostics(f, res, 1, -1);
    EXPECT_NEAR(b.Z, 1.189207115, 1e-6);
    EXPECT_NEAR(b.zeta, 0.5, 1e-9);
    // which of (1,1), (1,-1) lands on -1 depends on the sign chosen for v
    EXPECT_NE(b.related_root, c.related_root);

    try {
        solution_diagnostics({1, 0, 0, 0, -1}, diagonalize({1, 0, 0, 0, -1}), 1, 1);
        FAIL() << "expected ZeroValue";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::ZeroValue);
    }
}

TEST(NormalizeSolution, Examples) {
    EXPECT_EQ(*normalize_solution(-1, 1), (CanonicalPair{1, -1}));
    EXPECT_EQ(*normalize_solution(0, -1), (CanonicalPair{0, 1}));
    EXPECT_FALSE(normalize_solution(2, 4).has_value());
    EXPECT_EQ(*normalize_solution(-2, 4, false), (CanonicalPair{1, -2}));
    EXPECT_THROW(normalize_solution(0, 0), Error);
}

TEST(ParseForm, AcceptsAndRejects) {
    EXPECT_EQ(parse_form("[1, 0,0,0,-2]"), QuarticForm(1, 0, 0, 0, -2));
    EXPECT_THROW(parse_form("1,2"), Error);
    EXPECT_THROW(parse_form("1,2,x,4,5"), Error);
}

TEST(RealRoots, Examples) {
    auto a = real_roots({1, 0, 0, 0, -1});
    ASSERT_EQ(a.size(), 2u);
    EXPECT_TRUE(a[0].exact);
    EXPECT_EQ(a[0].lo, -1);
    EXPECT_EQ(a[1].lo, 1);

    auto b = real_roots({1, 0, 0, 0, -2});
    ASSERT_EQ(b.size(), 2u);
    for (const auto& r : b) {
        double mid = to_float<double>(r.midpoint());
        EXPECT_NEAR(std::fabs(mid), 1.189207115002721, 1e-12);
        // x^4 - 2 changes sign across the enclosure
        EXPECT_NE(sign(Rational(pow(r.lo, 4) - 2)), sign(Rational(pow(r.hi, 4) - 2)));
    }
    EXPECT_TRUE(real_roots({1, 0, 0, 0, 1}).empty());
}

TEST(RealRoots, CountMatchesDiscriminantSign) {
    // Delta < 0 iff exactly two real roots (for squarefree quartics)
    std::mt19937_64 rng(13);
    for (int i = 0; i < 300; ++i) {
        auto f = random_form(rng, -9, 9);
        if (f[0] == 0) continue;
        auto inv = invariants(f);
        if (inv.Delta == 0) continue;
        auto roots = real_roots(f);
        if (inv.Delta < 0)
            ASSERT_EQ(roots.size(), 2u) << f.str();
        else
            ASSERT_TRUE(roots.size() == 0 || roots.size() == 4) << f.str();
    }
}

TEST(Convergents, Examples) {
    Rational lo(Integer("141421356237309504880"), Integer("100000000000000000000"));
    Rational hi(Integer("141421356237309504881"), Integer("100000000000000000000"));
    auto c = convergents({lo, hi, 1, false}, 50);
    std::vector<std::pair<Integer, Integer>> want = {{1, 1}, {3, 2}, {7, 5}, {17, 12}, {41, 29}};
    EXPECT_EQ(c, want);

    auto two = convergents({2, 2, 1, true}, 10);
    ASSERT_EQ(two.size(), 1u);
    EXPECT_EQ(two[0], (std::pair<Integer, Integer>{2, 1}));

    auto r = real_roots({1, 0, 0, 0, -2});
    auto q = convergents(r[1], 100);
    EXPECT_NE(std::find(q.begin(), q.end(), std::pair<Integer, Integer>{6, 5}), q.end());
}
