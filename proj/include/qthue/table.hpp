// Batch driver: enumerate forms over a range of I, solve |F| = h for each on a
// worker pool, and histogram the (plus, minus) solution counts.
#pragma once

#include <qthue/enumerate.hpp>
#include <qthue/solver.hpp>

#include <algorithm>
#include <atomic>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace qthue {

struct TableRow {
    std::size_t plus_count = 0, minus_count = 0, num_forms = 0;
    friend bool operator==(const TableRow&, const TableRow&) = default;
};

struct FormResult {
    Integer I;
    QuarticForm form;
    /// Solutions of F = h and F = -h (values strictly below h in modulus dropped).
    std::vector<PrimitiveSolution> plus, minus;
    /// Full solve output for 0 < |F| <= h; empty when the solve failed.
    std::optional<SolutionSet> solutions;
    std::string error;

    bool ok() const { return error.empty(); }
};

struct TableResult {
    std::vector<FormResult> forms;  // by descending I, then coefficients
    std::vector<TableRow> rows;     // by (plus_count, minus_count)
    std::size_t failures = 0;
};

inline std::vector<TableRow> histogram(const std::vector<FormResult>& forms) {
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> h;
    for (const auto& f : forms)
        if (f.ok()) ++h[{f.plus.size(), f.minus.size()}];
    std::vector<TableRow> rows;
    for (const auto& [key, n] : h) rows.push_back({key.first, key.second, n});
    return rows;
}

inline FormResult solve_form(const Integer& I, const QuarticForm& form, const SolverConfig& cfg) {
    FormResult r{I, form, {}, {}, std::nullopt, {}};
    try {
        auto s = solve(form, cfg);
        for (const auto& p : s.plus)
            if (p.value == cfg.h) r.plus.push_back(p);
        for (const auto& p : s.minus)
            if (p.value == -cfg.h) r.minus.push_back(p);
        r.solutions = std::move(s);
    } catch (const Error& e) {
        r.error = e.what();
    }
    return r;
}

/// Solves every form with `jobs` threads; results land in input order, so the
/// output is the same for any thread count.
inline std::vector<FormResult> solve_batch(const std::vector<EnumeratedForm>& input, const SolverConfig& cfg,
                                           unsigned jobs = 1) {
    std::vector<FormResult> out(input.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < input.size(); i = next++) out[i] = solve_form(input[i].I, input[i].form, cfg);
    };
    jobs = std::max(1u, jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return out;
}

inline TableResult run_table(const Integer& I_min, const Integer& I_max, const Integer& h = 1,
                             BConvention convention = BConvention::Standard, unsigned jobs = 1,
                             bool primitive_only = false) {
    SolverConfig cfg;
    cfg.h = h;
    TableResult t;
    t.forms = solve_batch(enumerate_range(I_min, I_max, convention, primitive_only), cfg, jobs);
    t.rows = histogram(t.forms);
    t.failures = std::count_if(t.forms.begin(), t.forms.end(), [](const FormResult& f) { return !f.ok(); });
    return t;
}

}  // namespace qthue
