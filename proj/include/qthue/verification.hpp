// Reproducibility checks shared by the `verify` subcommand and the acceptance
// runner. Each check returns a verdict and a one-line summary.
#pragma once

#include <qthue/elliptic.hpp>
#include <qthue/gap_verify.hpp>
#include <qthue/pell.hpp>
#include <qthue/siegel_bounds.hpp>
#include <qthue/table.hpp>
#include <qthue/tzanakis.hpp>

#include <chrono>
#include <map>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace qthue::verify {

enum class Verdict { Pass, Fail, Vacuous };

inline std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "PASS";
        case Verdict::Fail: return "FAIL";
        case Verdict::Vacuous: return "VACUOUS";
    }
    return "?";
}

struct CheckResult {
    int id = 0;
    std::string name;
    Verdict verdict = Verdict::Fail;
    std::string detail;
    double seconds = 0;

    std::string line() const {
        std::ostringstream os;
        os << '[' << to_string(verdict) << "] " << id << ' ' << name << ": " << detail << " (" << std::fixed;
        os.precision(2);
        os << seconds << "s)";
        return os.str();
    }
};

namespace detail {

class Stopwatch {
  public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline CheckResult finish(int id, std::string name, bool ok, std::string detail, const Stopwatch& sw,
                          double budget = 0) {
    CheckResult r{id, std::move(name), ok ? Verdict::Pass : Verdict::Fail, std::move(detail), sw.seconds()};
    if (budget > 0 && r.seconds > budget) {
        r.verdict = Verdict::Fail;
        r.detail += "; over the " + std::to_string(static_cast<int>(budget)) + "s budget";
    }
    return r;
}

inline QuarticForm random_form(std::mt19937_64& rng, int lo, int hi) {
    std::uniform_int_distribution<int> dist(lo, hi);
    std::array<Integer, 5> c;
    for (auto& v : c) v = dist(rng);
    return QuarticForm(c);
}

}  // namespace detail

/// Discriminant of a quartic from its sixteen-term expansion.
inline Integer classical_discriminant(const QuarticForm& f) {
    const auto& [a, b, c, d, e] = f.coefficients();
    return 256 * a * a * a * e * e * e - 192 * a * a * b * d * e * e - 128 * a * a * c * c * e * e +
           144 * a * a * c * d * d * e - 27 * a * a * d * d * d * d + 144 * a * b * b * c * e * e -
           6 * a * b * b * d * d * e - 80 * a * b * c * c * d * e + 18 * a * b * c * d * d * d +
           16 * a * c * c * c * c * e - 4 * a * c * c * c * d * d - 27 * b * b * b * b * e * e +
           18 * b * b * b * c * d * e - 4 * b * b * b * d * d * d - 4 * b * b * c * c * c * e + b * b * c * c * d * d;
}

inline CheckResult invariant_identity(std::uint64_t seed, int samples = 100000) {
    detail::Stopwatch sw;
    std::mt19937_64 rng(seed);
    int bad = 0;
    for (int i = 0; i < samples; ++i) {
        auto f = detail::random_form(rng, -50, 50);
        const auto& [a0, a1, a2, a3, a4] = f.coefficients();
        Integer I = a2 * a2 - 3 * a1 * a3 + 12 * a0 * a4;
        Integer J = 2 * a2 * a2 * a2 - 9 * a1 * a2 * a3 + 27 * a1 * a1 * a4 - 72 * a0 * a2 * a4 + 27 * a0 * a3 * a3;
        Integer D = classical_discriminant(f);
        if (27 * D != 4 * I * I * I - J * J || invariants(f).Delta != D) ++bad;
    }
    return detail::finish(1, "invariant-identity", bad == 0,
                          std::to_string(samples) + " random forms, " + std::to_string(bad) + " failures", sw, 10);
}

inline CheckResult syzygy(std::uint64_t seed, int samples = 10000) {
    detail::Stopwatch sw;
    std::mt19937_64 rng(seed ^ 0x5eed);
    int bad = 0, done = 0;
    while (done < samples) {
        auto f = detail::random_form(rng, -50, 50);
        if (f[0] == 0) continue;
        ++done;
        auto inv = invariants(f);
        auto sv = seminvariants(f);
        const Integer& a = f[0];
        Integer J_syz = -inv.J;
        if (sv.H * sv.H * sv.H - 48 * inv.I * a * a * sv.H + 64 * J_syz * a * a * a != -27 * sv.R * sv.R) ++bad;
    }
    return detail::finish(2, "syzygy", bad == 0,
                          std::to_string(samples) + " random forms with a0 != 0, " + std::to_string(bad) + " failures",
                          sw, 5);
}

inline CheckResult closed_form_constants(int k_lo = 3, int k_hi = 40) {
    detail::Stopwatch sw;
    int bad = 0;
    for (int k = k_lo; k <= k_hi; ++k) {
        Rational T = Rational(pow(Integer(3), static_cast<unsigned>(k)));
        Rational E = (110 * T - 1278) / (77 * T + 378);
        LogLinearValue Th = (108 * LogLinearValue::ell() - LogLinearValue(6066 + 110 * T)) / (378 + 77 * T);
        if (exponent_E(2, 2, k, 0) != E || !(theta(2, 2, k, 0) == Th)) ++bad;
    }
    return detail::finish(3, "closed-form-constants", bad == 0,
                          "E2(2,k,0) and Theta2(2,k,0) closed forms for k in [" + std::to_string(k_lo) + "," +
                              std::to_string(k_hi) + "], " + std::to_string(bad) + " mismatches",
                          sw);
}

inline CheckResult phi_suite(int k_hi = 25, int n_hi = 25) {
    detail::Stopwatch sw;
    auto rep = phi_scan(3, k_hi, 2, n_hi);
    std::ostringstream os;
    os << rep.points << " grid points, " << rep.negatives.size() << " negative, " << rep.mismatches.size()
       << " expansion mismatches";
    if (!rep.mismatches.empty()) {
        std::map<std::string, std::size_t> by_kind;
        for (const auto& m : rep.mismatches) ++by_kind[std::string(to_string(m.which))];
        os << " (";
        bool first = true;
        for (const auto& [kind, n] : by_kind) {
            os << (first ? "" : ", ") << kind << ":" << n;
            first = false;
        }
        const auto& m = rep.mismatches.front();
        os << "; e.g. " << to_string(m.which) << " at k=" << m.k << " closed-form-minus-rule = "
           << (m.by_closed_form - m.by_triples).str() << ")";
    }
    if (rep.minimum)
        os << "; minimum " << rep.minimum_value << " at " << to_string(rep.minimum->which) << " k=" << rep.minimum->k;
    return detail::finish(4, "phi-expansions", rep.nonnegative() && rep.expansions_agree(), os.str(), sw, 5);
}

inline CheckResult threshold_check() {
    detail::Stopwatch sw;
    auto r4 = threshold(4, 1);
    auto r3 = threshold(3, 1);
    double I4 = r4.I_max.convert_to<double>();
    std::ostringstream os;
    os << "threshold(4,1): j_min=" << r4.j_min.convert_to<double>() << " I_max=" << I4
       << " (window [-2630,-2570]); threshold(3,1): I_max=" << r3.I_max.convert_to<double>() << " (reported only)";
    return detail::finish(5, "threshold", I4 >= -2630 && I4 <= -2570, os.str(), sw);
}

struct TableSummary {
    std::vector<TableRow> standard_rows, paper_rows;
    std::size_t standard_forms = 0, paper_forms = 0;
};

inline const std::vector<TableRow>& paper_table_target() {
    static const std::vector<TableRow> rows{{0, 0, 7346}, {0, 1, 1003}, {0, 2, 97}, {0, 3, 5}, {1, 0, 1003},
                                            {1, 1, 146},  {1, 2, 3},    {2, 0, 97}, {2, 1, 3},  {3, 0, 5}};
    return rows;
}

inline std::string rows_string(const std::vector<TableRow>& rows) {
    std::ostringstream os;
    bool first = true;
    for (const auto& r : rows) {
        os << (first ? "" : " ") << '(' << r.plus_count << ',' << r.minus_count << "):" << r.num_forms;
        first = false;
    }
    return os.str();
}

/// Properties required of any table run, plus the comparison with the
/// published histogram under both b-conventions (forms with b <= 2 form the
/// narrow-convention subset of the standard run).
inline CheckResult table_check(const TableResult& t, double seconds_spent) {
    detail::Stopwatch sw;
    std::vector<std::string> problems;
    std::size_t total_solutions_max = 0, per_sign_max = 0;
    for (const auto& f : t.forms) {
        if (!f.ok()) {
            problems.push_back(f.form.str() + ": " + f.error);
            continue;
        }
        per_sign_max = std::max({per_sign_max, f.plus.size(), f.minus.size()});
        total_solutions_max = std::max(total_solutions_max, f.plus.size() + f.minus.size());
        if ((f.plus.size() == 3 || f.minus.size() == 3) && !f.form.is_diagonal())
            problems.push_back(f.form.str() + " has three solutions but is not diagonal");
    }
    if (per_sign_max > 3) problems.push_back("a form has more than three solutions of one sign");
    if (total_solutions_max > 8) problems.push_back("a form has more than eight solutions");
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> h;
    for (const auto& r : t.rows) h[{r.plus_count, r.minus_count}] = r.num_forms;
    for (const auto& [key, n] : h) {
        auto it = h.find({key.second, key.first});
        if (it == h.end() || it->second != n) problems.push_back("histogram is not symmetric");
    }

    std::vector<FormResult> narrow, primitive;
    for (const auto& f : t.forms) {
        if (f.form[1] <= 2) narrow.push_back(f);
        Integer g = 0;
        for (const auto& v : f.form.coefficients()) g = gcd(g, abs(v));
        if (g == 1) primitive.push_back(f);
    }
    auto narrow_rows = histogram(narrow), primitive_rows = histogram(primitive);
    const auto& target = paper_table_target();
    auto verdict = [&](const std::vector<TableRow>& rows) { return rows == target ? " MATCH" : " differs"; };

    std::ostringstream os;
    os << t.forms.size() << " forms, max per sign " << per_sign_max << ", max total " << total_solutions_max
       << ", " << problems.size() << " problems";
    if (!problems.empty()) os << " [" << problems.front() << "]";
    os << "; target 9708 forms " << rows_string(paper_table_target()) << "; standard b-range: " << t.forms.size()
       << " forms " << rows_string(t.rows) << verdict(t.rows) << "; b<=2 range: " << narrow.size() << " forms "
       << rows_string(narrow_rows) << verdict(narrow_rows) << "; standard, primitive forms only: " << primitive.size()
       << " forms " << rows_string(primitive_rows) << verdict(primitive_rows);
    auto r = detail::finish(6, "solution-table", problems.empty(), os.str(), sw);
    r.seconds += seconds_spent;
    if (r.seconds > 7200) r.verdict = Verdict::Fail;
    return r;
}

/// Compares solve against brute_solve on a box for pseudo-random forms.
inline CheckResult solver_oracle(std::uint64_t seed, int forms = 200, const Integer& box = 10000) {
    detail::Stopwatch sw;
    std::mt19937_64 rng(seed ^ 0x0bac1e);
    int compared = 0, skipped = 0, bad = 0;
    std::string first_bad;
    const Integer hs[] = {1, 2, 5};
    while (compared < forms) {
        auto f = detail::random_form(rng, -20, 20);
        if (f.is_zero()) continue;
        std::vector<SolutionSet> solved;
        try {
            for (const auto& h : hs) {
                SolverConfig cfg;
                cfg.h = h;
                solved.push_back(solve(f, cfg));
            }
        } catch (const Error& e) {
            if (e.code() != ErrorCode::DegenerateForm) throw;
            ++skipped;  // infinitely many solutions; nothing finite to compare
            continue;
        }
        ++compared;
        auto brute = brute_solve(f, 5, box).all();
        for (std::size_t i = 0; i < 3; ++i) {
            std::vector<PrimitiveSolution> want, got;
            for (const auto& s : brute)
                if (abs(s.value) <= hs[i]) want.push_back(s);
            for (const auto& s : solved[i].all())
                if (abs(s.x) <= box && abs(s.y) <= box) got.push_back(s);
            if (want != got) {
                ++bad;
                if (first_bad.empty()) first_bad = f.str() + " h=" + hs[i].str();
            }
        }
    }
    std::string detail = std::to_string(compared) + " forms x h in {1,2,5}, box " + box.str() + ", " +
                         std::to_string(bad) + " mismatches, " + std::to_string(skipped) +
                         " degenerate forms resampled";
    if (!first_bad.empty()) detail += " [first: " + first_bad + "]";
    return detail::finish(7, "solver-oracle", bad == 0, detail, sw, 600);
}

inline CheckResult gap_suite(const TableResult& t) {
    detail::Stopwatch sw;
    std::size_t non_vacuous = 0, checks = 0, violations = 0, skipped = 0;
    std::string first;
    for (const auto& f : t.forms) {
        if (!f.solutions) {
            ++skipped;
            continue;
        }
        auto rep = gap_verify(f.form, 1, *f.solutions);
        if (rep.vacuous()) continue;
        ++non_vacuous;
        checks += rep.checks;
        violations += rep.violations.size();
        if (!rep.ok() && first.empty()) first = f.form.str() + ": " + rep.violations.front();
    }
    std::ostringstream os;
    os << t.forms.size() << " forms, " << non_vacuous << " with hypotheses holding, " << checks
       << " inequalities checked, " << violations << " violations";
    if (skipped) os << ", " << skipped << " unsolved forms skipped";
    if (!first.empty()) os << " [" << first << "]";
    auto r = detail::finish(8, "gap-principles", violations == 0 && skipped == 0, os.str(), sw);
    if (r.verdict == Verdict::Pass && non_vacuous == 0) r.verdict = Verdict::Vacuous;
    return r;
}

/// Smallest y in [1, y_limit] with d y^2 +- 1 a square, if any.
inline std::optional<Integer> pell_brute_force(std::int64_t d, std::int64_t y_limit) {
    for (std::int64_t y = 1; y <= y_limit; ++y) {
        int128 v = static_cast<int128>(d) * y * y;
        if (is_square(v + 1) || is_square(v - 1)) return Integer(y);
    }
    return std::nullopt;
}

inline CheckResult pell_check(std::int64_t d_max = 100, std::int64_t y_max = 100000) {
    detail::Stopwatch sw;
    int tested = 0, bad = 0;
    std::string first;
    for (std::int64_t d = 2; d <= d_max; ++d) {
        if (!squarefree(d)) continue;
        ++tested;
        auto u = pell_fundamental(d);
        bool exact = u.x * u.x - d * u.y * u.y == u.norm;
        auto brute = pell_brute_force(d, y_max);
        bool minimal = u.y <= y_max ? (brute && *brute == u.y) : !brute;
        bool parity = (u.norm == -1) == (sqrt_period(d) % 2 == 1);
        if (!(exact && minimal && parity)) {
            ++bad;
            if (first.empty()) first = "d=" + std::to_string(d);
        }
    }
    std::string detail = std::to_string(tested) + " squarefree d in [2," + std::to_string(d_max) +
                         "], brute force to y=" + std::to_string(y_max) + ", " + std::to_string(bad) + " failures";
    if (!first.empty()) detail += " [" + first + "]";
    return detail::finish(9, "pell-units", bad == 0, detail, sw, 30);
}

inline CheckResult elliptic_check(const Integer& x_max = 1000000) {
    detail::Stopwatch sw;
    std::vector<std::string> problems;
    std::ostringstream os;
    for (int N : {1, 2, 3, 5, 6, 7, 10, 13, 30}) {
        auto pts = curve_points(N, x_max);
        auto bound = curve_bound(N);
        os << "N=" << N << ":" << pts.size() << "<=" << static_cast<long long>(bound.convert_to<double>()) << ' ';
        if (BoundFloat(pts.size()) > bound) problems.push_back("count above bound for N=" + std::to_string(N));
    }
    double b2 = curve_bound(2).convert_to<double>();
    if (std::abs(b2 - 992.19) > 0.01) problems.push_back("curve_bound(2) = " + std::to_string(b2));
    std::vector<CurvePoint> want{{0, 0}, {1, 2}, {3, 6}, {12, 42}};
    if (curve_points(3, 100) != want) problems.push_back("curve_points(3,100) differs");
    os << "curve_bound(2)=" << b2 << "; " << problems.size() << " problems";
    if (!problems.empty()) os << " [" << problems.front() << "]";
    return detail::finish(10, "elliptic-bounds", problems.empty(), os.str(), sw);
}

inline const std::vector<std::array<int, 4>>& tzanakis_instances() {
    static const std::vector<std::array<int, 4>> list{{2, 1, 3, 2}, {3, 1, 2, 1},  {2, 7, 3, 1}, {7, 2, 3, 1},
                                                      {5, 11, 4, 1}, {13, 3, 4, 1}, {5, 1, 9, 4}};
    return list;
}

inline CheckResult tzanakis_check() {
    detail::Stopwatch sw;
    int passed = 0;
    std::vector<std::string> problems;
    for (const auto& [d, k, s, t] : tzanakis_instances()) {
        try {
            auto inst = tzanakis_form(d, k, s, t);
            if (inst.checks.all()) ++passed;
        } catch (const Error& e) {
            problems.push_back("(" + std::to_string(d) + "," + std::to_string(k) + "," + std::to_string(s) + "," +
                               std::to_string(t) + "): " + e.what());
        }
    }
    std::string detail = std::to_string(passed) + "/" + std::to_string(tzanakis_instances().size()) +
                         " instances pass J=0, the I formula, I<0 and two simple real roots";
    if (!problems.empty()) detail += " [" + problems.front() + "]";
    return detail::finish(11, "tzanakis-forms", problems.empty() && passed >= 5, detail, sw);
}

}  // namespace qthue::verify
