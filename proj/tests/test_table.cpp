#include <qthue/gap_verify.hpp>
#include <qthue/table.hpp>

#include <gtest/gtest.h>

#include "support.hpp"

using namespace qthue;
using testing_support::naive_solutions;

TEST(Table, SmallRangeAgreesWithDirectSearch) {
    auto t = run_table(-12, -3);
    EXPECT_EQ(t.failures, 0u);
    ASSERT_FALSE(t.forms.empty());
    for (const auto& f : t.forms) {
        std::size_t plus = 0, minus = 0;
        for (const auto& p : naive_solutions(f.form, 1, 200)) (p.value == 1 ? plus : minus)++;
        EXPECT_EQ(f.plus.size(), plus) << f.form.str();
        EXPECT_EQ(f.minus.size(), minus) << f.form.str();
        auto b = brute_solve(f.form, 1, 200);
        EXPECT_EQ(f.plus.size(), b.plus.size());
        EXPECT_EQ(f.minus.size(), b.minus.size());
    }
    EXPECT_TRUE(run_table(-3, -3).forms.empty());
    EXPECT_TRUE(run_table(-3, -3).rows.empty());
}

TEST(Table, HistogramProperties) {
    auto t = run_table(-600, -3, 1, BConvention::Standard, 4);
    EXPECT_EQ(t.failures, 0u);
    std::size_t total = 0;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> cells;
    for (const auto& r : t.rows) {
        total += r.num_forms;
        cells[{r.plus_count, r.minus_count}] = r.num_forms;
        EXPECT_LE(r.plus_count, 3u);
        EXPECT_LE(r.minus_count, 3u);
    }
    EXPECT_EQ(total, t.forms.size());
    for (const auto& [k, n] : cells) {
        auto mirror = cells.find(std::make_pair(k.second, k.first));
        ASSERT_NE(mirror, cells.end());
        EXPECT_EQ(mirror->second, n);
    }
    for (const auto& f : t.forms) {
        EXPECT_LE(f.plus.size() + f.minus.size(), 8u);
        if (f.plus.size() == 3 || f.minus.size() == 3) EXPECT_TRUE(f.form.is_diagonal()) << f.form.str();
    }
}

TEST(Table, ThreadCountDoesNotChangeResults) {
    auto input = enumerate_range(-300, -3);
    auto one = solve_batch(input, {}, 1);
    auto many = solve_batch(input, {}, 6);
    ASSERT_EQ(one.size(), many.size());
    for (std::size_t i = 0; i < one.size(); ++i) {
        EXPECT_EQ(one[i].form, many[i].form);
        EXPECT_EQ(one[i].plus, many[i].plus);
        EXPECT_EQ(one[i].minus, many[i].minus);
    }
    EXPECT_EQ(histogram(one), histogram(many));
}

TEST(GapVerify, Examples) {
    QuarticForm small{1, 0, 0, 0, -2};
    auto a = gap_verify(small, 1, solve(small));
    EXPECT_TRUE(a.vacuous());
    EXPECT_NEAR(a.j_abs, 1.189207, 1e-5);

    QuarticForm wide{1, 0, 0, 0, -250};
    auto s = solve(wide);
    ASSERT_EQ(s.size(), 1u);
    auto b = gap_verify(wide, 1, s);
    EXPECT_TRUE(b.hypotheses_hold);
    EXPECT_NEAR(b.j_abs, std::pow(250.0, 0.25), 1e-6);
    EXPECT_TRUE(b.ok());
    EXPECT_EQ(b.checks, 0u);
}

TEST(GapVerify, HoldsOnEnumeratedForms) {
    auto t = run_table(-600, -3, 1, BConvention::Standard, 4);
    std::size_t non_vacuous = 0;
    for (const auto& f : t.forms) {
        ASSERT_TRUE(f.solutions.has_value());
        auto rep = gap_verify(f.form, 1, *f.solutions);
        EXPECT_TRUE(rep.ok()) << f.form.str() << ": " << (rep.ok() ? "" : rep.violations.front());
        if (!rep.vacuous()) ++non_vacuous;
    }
    EXPECT_GT(non_vacuous, 0u);
}
