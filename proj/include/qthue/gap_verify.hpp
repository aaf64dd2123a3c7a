// Empirical check of the zeta bound and the two gap principles on a solved form.
#pragma once

#include <qthue/diagonalize.hpp>
#include <qthue/solver.hpp>

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace qthue {

struct GapReport {
    double j_abs = 0;
    /// |j| > 2 sqrt(h), equivalently h < |j|^2 / 4.
    bool hypotheses_hold = false;
    std::size_t checks = 0;
    std::vector<std::string> violations;

    bool vacuous() const { return !hypotheses_hold; }
    bool ok() const { return violations.empty(); }
};

inline GapReport gap_verify(const QuarticForm& form, const Integer& h, const SolutionSet& solutions,
                            double slack = 1e-6) {
    GapReport rep;
    auto res = diagonalize(form);
    rep.j_abs = res.j_abs;
    const double hd = to_float<double>(h);
    rep.hypotheses_hold = res.j_abs > 2 * std::sqrt(hd);
    if (!rep.hypotheses_hold) return rep;

    struct Item {
        PrimitiveSolution s;
        SolutionDiagnostics d;
    };
    std::vector<Item> items;
    for (const auto& s : solutions.all()) items.push_back({s, solution_diagnostics(form, res, s.x, s.y)});
    auto by_zeta_desc = [](const Item& a, const Item& b) { return a.d.zeta > b.d.zeta; };
    std::stable_sort(items.begin(), items.end(), by_zeta_desc);

    auto name = [](const PrimitiveSolution& s) { return "(" + s.x.str() + "," + s.y.str() + ")"; };

    // Every solution but the one with largest zeta has zeta < 1.
    for (std::size_t i = 1; i < items.size(); ++i) {
        ++rep.checks;
        if (!(items[i].d.zeta < 1))
            rep.violations.push_back("zeta" + name(items[i].s) + " = " + std::to_string(items[i].d.zeta) + " >= 1");
    }

    for (int root : {1, -1}) {
        std::vector<Item> cls;
        for (const auto& it : items)
            if (it.d.related_root == root) cls.push_back(it);
        if (cls.size() < 3) continue;  // the reduced class needs two members
        cls.erase(cls.begin());
        const double lower = res.j_abs / (2 * std::pow(hd, 0.25));
        for (std::size_t i = 1; i < cls.size(); ++i) {
            ++rep.checks;
            if (cls[i].d.Z < lower * (1 - slack))
                rep.violations.push_back("Z" + name(cls[i].s) + " below |j|/(2h^(1/4))");
            ++rep.checks;
            double grown = res.j_abs / (2 * hd) * std::pow(cls[i - 1].d.Z, 3);
            if (cls[i].d.Z < grown * (1 - slack))
                rep.violations.push_back("Z" + name(cls[i].s) + " below (|j|/2h) Z" + name(cls[i - 1].s) + "^3");
        }
    }
    return rep;
}

}  // namespace qthue
