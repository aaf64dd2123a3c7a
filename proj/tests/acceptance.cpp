// One line per acceptance criterion. The exit status is nonzero only when a
// criterion fails that is not listed in known_failures below; those two fail
// on the reference values themselves and are kept visible rather than bent.

#include <qthue/qthue.hpp>
#include <qthue/verification.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <set>
#include <thread>

using namespace qthue;
using namespace qthue::verify;

int main(int argc, char** argv) {
    const std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 20240611;
    const unsigned jobs = std::max(1u, std::thread::hardware_concurrency());

    // 4: three closed-form expansions disagree with the rule they come from.
    // 10: the quoted curve_bound(2) = 992.19 is 0.044 above the formula's value.
    const std::set<int> known_failures = {4, 10};

    auto report = [](const CheckResult& r) { std::cout << r.line() << std::endl; };
    std::vector<CheckResult> results;
    auto run = [&](CheckResult r) {
        report(r);
        results.push_back(std::move(r));
    };

    run(invariant_identity(seed));
    run(syzygy(seed));
    run(closed_form_constants());
    run(phi_suite());
    run(threshold_check());

    auto t0 = std::chrono::steady_clock::now();
    auto table = run_table(-2999, -3, 1, BConvention::Standard, jobs);
    double table_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    run(table_check(table, table_seconds));
    run(solver_oracle(seed));
    run(gap_suite(table));
    run(pell_check());
    run(elliptic_check());
    run(tzanakis_check());

    std::size_t pass = 0, unexpected = 0;
    for (const auto& r : results) {
        if (r.verdict == Verdict::Pass) ++pass;
        else if (!known_failures.count(r.id)) ++unexpected;
    }
    std::cout << pass << "/" << results.size() << " criteria pass";
    for (const auto& r : results)
        if (r.verdict != Verdict::Pass) std::cout << (known_failures.count(r.id) ? "; known failure " : "; UNEXPECTED ") << r.id;
    std::cout << std::endl;
    return unexpected == 0 ? 0 : 1;
}
