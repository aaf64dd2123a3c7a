// Command-line front end. Every subcommand prints one JSON document (or JSON
// lines for streams); --format csv flattens the same data.

#include <qthue/qthue.hpp>
#include <qthue/verification.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

using json = nlohmann::ordered_json;
using namespace qthue;

namespace {

struct Globals {
    std::string format = "json";
    unsigned jobs = 1;
    std::uint64_t seed = 20240611;
};

json jint(const Integer& v) {
    if (fits_int64(v)) return to_int64(v);
    return v.str();
}

json form_json(const QuarticForm& f) {
    json a = json::array();
    for (const auto& c : f.coefficients()) a.push_back(jint(c));
    return a;
}

json pairs_json(const std::vector<PrimitiveSolution>& v) {
    json a = json::array();
    for (const auto& s : v) a.push_back(json::array({jint(s.x), jint(s.y)}));
    return a;
}

std::string csv_cell(const json& v) {
    std::string s = v.is_string() ? v.get<std::string>() : v.dump();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
}

void emit_csv_rows(const json& rows) {
    if (rows.empty()) return;
    bool first = true;
    for (auto it = rows[0].begin(); it != rows[0].end(); ++it) {
        std::cout << (first ? "" : ",") << it.key();
        first = false;
    }
    std::cout << '\n';
    for (const auto& r : rows) {
        first = true;
        for (auto it = r.begin(); it != r.end(); ++it) {
            std::cout << (first ? "" : ",") << csv_cell(it.value());
            first = false;
        }
        std::cout << '\n';
    }
}

// An array of objects becomes a table; an object becomes a one-row table.
void emit(const Globals& g, const json& doc) {
    if (g.format == "json") {
        std::cout << doc.dump() << '\n';
        return;
    }
    if (doc.is_array())
        emit_csv_rows(doc);
    else
        emit_csv_rows(json::array({doc}));
}

void emit_lines(const Globals& g, const json& rows) {
    if (g.format == "json")
        for (const auto& r : rows) std::cout << r.dump() << '\n';
    else
        emit_csv_rows(rows);
}

json certificate_json(const SearchCertificate& c) {
    json roots = json::array();
    for (const auto& r : c.roots) {
        json j{{"re", r.re}, {"im", r.im}, {"multiplicity", r.multiplicity}, {"treatment", std::string(to_string(r.treatment))}};
        if (r.enclosure) j["enclosure"] = json::array({r.enclosure->lo.str(), r.enclosure->hi.str()});
        if (r.y_limit != 0) j["y_limit"] = jint(r.y_limit);
        roots.push_back(j);
    }
    return {{"Y0", jint(c.Y0)}, {"q_max", jint(c.q_max)}, {"shift", jint(c.shift)}, {"roots", roots}};
}

json threshold_json(const ThresholdReport& r) {
    return {{"k", r.k},
            {"h", jint(r.h)},
            {"j_min", r.j_min.convert_to<double>()},
            {"I_max", r.I_max.convert_to<double>()},
            {"bound", r.bound},
            {"binding", std::string(to_string(r.binding))},
            {"open_boundary", r.open_boundary}};
}

json form_result_json(const FormResult& f) {
    json j{{"I", jint(f.I)}, {"form", form_json(f.form)}, {"plus", pairs_json(f.plus)}, {"minus", pairs_json(f.minus)}};
    j["status"] = f.ok() ? std::string("ok") : f.error;
    return j;
}

json rows_json(const std::vector<TableRow>& rows) {
    json a = json::array();
    for (const auto& r : rows)
        a.push_back({{"plus_count", r.plus_count}, {"minus_count", r.minus_count}, {"num_forms", r.num_forms}});
    return a;
}

int run_verify(const Globals& g, const std::string& suite, const Integer& i_min) {
    using namespace qthue::verify;
    std::vector<CheckResult> results;
    std::optional<TableResult> table;
    double table_seconds = 0;
    auto need_table = [&]() -> const TableResult& {
        if (!table) {
            auto t0 = std::chrono::steady_clock::now();
            table = run_table(i_min, -3, 1, BConvention::Standard, g.jobs);
            table_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        }
        return *table;
    };
    if (suite == "invariants") {
        results.push_back(invariant_identity(g.seed));
        results.push_back(syzygy(g.seed));
    } else if (suite == "phi") {
        results.push_back(closed_form_constants());
        results.push_back(phi_suite());
    } else if (suite == "thresholds") {
        results.push_back(threshold_check());
    } else if (suite == "gap") {
        results.push_back(gap_suite(need_table()));
    } else if (suite == "table") {
        const auto& t = need_table();
        results.push_back(table_check(t, table_seconds));
        results.push_back(solver_oracle(g.seed));
    } else if (suite == "elliptic") {
        results.push_back(pell_check());
        results.push_back(elliptic_check());
        results.push_back(tzanakis_check());
    } else {
        fail(ErrorCode::InvalidArgument, "unknown suite '" + suite + "'");
    }
    json out = json::array();
    bool failed = false, vacuous = false;
    for (const auto& r : results) {
        out.push_back({{"criterion", r.id},
                       {"name", r.name},
                       {"verdict", std::string(to_string(r.verdict))},
                       {"detail", r.detail},
                       {"seconds", r.seconds}});
        failed |= r.verdict == Verdict::Fail;
        vacuous |= r.verdict == Verdict::Vacuous;
    }
    emit_lines(g, out);
    return failed ? 1 : vacuous ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quartic Thue equations, J = 0 forms and Thue-Siegel bounds"};
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);
    Globals g;
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--jobs", g.jobs, "Worker threads for batch commands")->check(CLI::PositiveNumber);
    app.add_option("--seed", g.seed, "Seed for randomized verification suites");

    std::string form_text, conv_text = "standard", results_path, suite;
    std::string h_text = "1", qmax_text = "1000000000000", i_text, imin_text = "-3000", imax_text = "-3";
    std::string d_text, k_text, s_text, t_text, n_text, xmax_text = "100000", yex_text = "0";
    int k_int = 4, kmax = 25, nmax = 25, k_max_bound = 10;
    unsigned bits = 256;
    bool primitive_only = false;

    auto* c_inv = app.add_subcommand("invariants", "I, J, Delta, H and R of a form");
    c_inv->add_option("--form", form_text, "a0,a1,a2,a3,a4")->required();

    auto* c_enum = app.add_subcommand("enumerate", "Forms with J = 0 and I in a range");
    c_enum->add_option("--i-min", imin_text)->required();
    c_enum->add_option("--i-max", imax_text)->required();
    c_enum->add_option("--b-convention", conv_text)->check(CLI::IsMember({"standard", "paper"}));
    c_enum->add_flag("--primitive-only", primitive_only, "Skip forms with a common coefficient factor");

    auto* c_solve = app.add_subcommand("solve", "Primitive solutions of 0 < |F(x,y)| <= h");
    c_solve->add_option("--form", form_text)->required();
    c_solve->add_option("--h", h_text);
    c_solve->add_option("--qmax", qmax_text);
    c_solve->add_option("--y-exhaustive", yex_text);
    c_solve->add_option("--bits", bits);

    auto* c_table = app.add_subcommand("table", "Histogram of solution counts of F = +-h over a range of I");
    c_table->add_option("--i-min", imin_text);
    c_table->add_option("--i-max", imax_text);
    c_table->add_option("--h", h_text);
    c_table->add_option("--b-convention", conv_text)->check(CLI::IsMember({"standard", "paper"}));
    c_table->add_flag("--primitive-only", primitive_only);
    c_table->add_option("--results", results_path, "Write per-form JSON lines here");

    auto* c_thr = app.add_subcommand("threshold", "I threshold for the 2k solution bound");
    c_thr->add_option("--k", k_int)->required();
    c_thr->add_option("--h", h_text);

    auto* c_phi = app.add_subcommand("phi-scan", "Evaluate every Phi comparison on a grid");
    c_phi->add_option("--kmax", kmax);
    c_phi->add_option("--nmax", nmax);

    auto* c_bound = app.add_subcommand("bound", "Solution-count bound for a given I and h");
    c_bound->add_option("--i", i_text)->required();
    c_bound->add_option("--h", h_text);
    c_bound->add_option("--kmax", k_max_bound);

    auto* c_pell = app.add_subcommand("pell", "Fundamental unit of Z[sqrt(d)]");
    c_pell->add_option("--d", d_text)->required();

    auto* c_cb = app.add_subcommand("curve-bound", "Upper bound on integral points of Y^2 = X^3 + N X");
    c_cb->add_option("--n", n_text)->required();

    auto* c_cp = app.add_subcommand("curve-points", "Integral points of Y^2 = X^3 + N X with 0 <= X <= xmax");
    c_cp->add_option("--n", n_text)->required();
    c_cp->add_option("--xmax", xmax_text);

    auto* c_tz = app.add_subcommand("tzanakis", "Quartic form attached to s + t sqrt(d) with s^2 - d t^2 = k");
    c_tz->add_option("--d", d_text)->required();
    c_tz->add_option("--k", k_text)->required();
    c_tz->add_option("--s", s_text)->required();
    c_tz->add_option("--t", t_text)->required();

    auto* c_ver = app.add_subcommand("verify", "Run a reproducibility suite");
    c_ver->add_option("suite", suite, "invariants|phi|thresholds|gap|table|elliptic")->required();
    c_ver->add_option("--i-min", imin_text, "Lower end of the I range for table-based suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*c_inv) {
            auto f = parse_form(form_text);
            auto inv = invariants(f);
            auto sv = seminvariants(f);
            emit(g, {{"form", form_json(f)},
                     {"I", jint(inv.I)},
                     {"J", jint(inv.J)},
                     {"Delta", jint(inv.Delta)},
                     {"H", jint(sv.H)},
                     {"R", jint(sv.R)},
                     {"diagonalizable", inv.J == 0}});
        } else if (*c_enum) {
            json rows = json::array();
            for (const auto& e :
                 enumerate_range(Integer(imin_text), Integer(imax_text), parse_b_convention(conv_text), primitive_only))
                rows.push_back({{"I", jint(e.I)}, {"form", form_json(e.form)}});
            emit_lines(g, rows);
        } else if (*c_solve) {
            auto f = parse_form(form_text);
            SolverConfig cfg;
            cfg.h = Integer(h_text);
            cfg.q_max = Integer(qmax_text);
            cfg.y_exhaustive = Integer(yex_text);
            cfg.root_precision_bits = bits;
            auto s = solve(f, cfg);
            if (g.format == "csv") {
                json rows = json::array();
                for (const auto& p : s.all())
                    rows.push_back({{"sign", p.value > 0 ? "plus" : "minus"}, {"x", jint(p.x)}, {"y", jint(p.y)}, {"value", jint(p.value)}});
                emit_csv_rows(rows);
            } else {
                emit(g, {{"form", form_json(f)},
                         {"h", jint(cfg.h)},
                         {"plus", pairs_json(s.plus)},
                         {"minus", pairs_json(s.minus)},
                         {"certificate", certificate_json(s.certificate)}});
            }
        } else if (*c_table) {
            auto t = run_table(Integer(imin_text), Integer(imax_text), Integer(h_text), parse_b_convention(conv_text),
                               g.jobs, primitive_only);
            if (!results_path.empty()) {
                std::ofstream out(results_path);
                if (!out) fail(ErrorCode::InvalidArgument, "cannot write " + results_path);
                for (const auto& f : t.forms) out << form_result_json(f).dump() << '\n';
            }
            if (g.format == "csv")
                emit_csv_rows(rows_json(t.rows));
            else
                emit(g, {{"i_min", imin_text},
                         {"i_max", imax_text},
                         {"b_convention", conv_text},
                         {"primitive_only", primitive_only},
                         {"forms", t.forms.size()},
                         {"failures", t.failures},
                         {"rows", rows_json(t.rows)}});
        } else if (*c_thr) {
            emit(g, threshold_json(threshold(k_int, Integer(h_text))));
        } else if (*c_phi) {
            auto rep = phi_scan(3, kmax, 2, nmax);
            json mism = json::array();
            for (const auto& m : rep.mismatches)
                mism.push_back({{"which", std::string(to_string(m.which))}, {"k", m.k}, {"n", m.n}, {"g", m.g},
                                {"triple_rule", m.by_triples.str()}, {"closed_form", m.by_closed_form.str()}});
            json doc{{"points", rep.points},
                     {"negatives", rep.negatives.size()},
                     {"nonnegative", rep.nonnegative()},
                     {"expansions_agree", rep.expansions_agree()},
                     {"minimum", rep.minimum_value}};
            if (rep.minimum)
                doc["minimum_at"] = {{"which", std::string(to_string(rep.minimum->which))}, {"k", rep.minimum->k},
                                     {"n", rep.minimum->n}, {"g", rep.minimum->g}};
            if (g.format == "json") doc["mismatches"] = mism;
            emit(g, doc);
            return rep.nonnegative() && rep.expansions_agree() ? 0 : 1;
        } else if (*c_bound) {
            Integer I(i_text), h(h_text);
            auto b = solution_count_bound(I, h, k_max_bound);
            emit(g, {{"I", jint(I)},
                     {"h", jint(h)},
                     {"k_max", k_max_bound},
                     {"bound", b ? json(*b) : json(nullptr)},
                     {"bombieri_schmidt", jint(bombieri_schmidt_count(h))}});
        } else if (*c_pell) {
            auto u = pell_fundamental(Integer(d_text));
            emit(g, {{"d", jint(u.d)}, {"x", jint(u.x)}, {"y", jint(u.y)}, {"norm", u.norm}, {"period", sqrt_period(u.d)}});
        } else if (*c_cb) {
            Integer N(n_text);
            auto b = curve_bound(N);
            emit(g, {{"N", jint(N)}, {"bound", b.convert_to<double>()}, {"bound_text", b.str(20)}});
        } else if (*c_cp) {
            json rows = json::array();
            for (const auto& p : curve_points(Integer(n_text), Integer(xmax_text)))
                rows.push_back({{"X", jint(p.X)}, {"Y", jint(p.Y)}});
            if (g.format == "csv")
                emit_csv_rows(rows);
            else
                emit(g, {{"N", n_text}, {"x_max", xmax_text}, {"count", rows.size()}, {"points", rows}});
        } else if (*c_tz) {
            auto in = tzanakis_form(Integer(d_text), Integer(k_text), Integer(s_text), Integer(t_text));
            const auto& cp = in.conic;
            emit(g, {{"d", jint(in.d)},
                     {"k", jint(in.k)},
                     {"s", jint(in.s)},
                     {"t", jint(in.t)},
                     {"base_point", json::array({jint(cp.base_point[0]), jint(cp.base_point[1]), jint(cp.base_point[2])})},
                     {"conic", {{"R1", jint(cp.R1)}, {"S1", jint(cp.S1)}, {"T1", jint(cp.T1)}, {"R2", jint(cp.R2)},
                                {"S2", jint(cp.S2)}, {"T2", jint(cp.T2)}, {"z1", jint(cp.z1)}}},
                     {"rescaled", {{"R1", jint(in.Q1.R)}, {"S1", jint(in.Q1.S)}, {"T1", jint(in.Q1.T)},
                                   {"R2", jint(in.Q2.R)}, {"S2", jint(in.Q2.S)}, {"T2", jint(in.Q2.T)}, {"z1", jint(in.z1)}}},
                     {"form", form_json(in.form)},
                     {"I", jint(in.invariants.I)},
                     {"J", jint(in.invariants.J)},
                     {"I_formula", jint(in.I_formula)},
                     {"checks", {{"two_real_roots", in.checks.two_real_roots}, {"J_zero", in.checks.J_zero},
                                 {"I_formula", in.checks.I_formula}, {"I_negative", in.checks.I_negative}}}});
        } else if (*c_ver) {
            return run_verify(g, suite, Integer(imin_text) == -3000 ? Integer(-2999) : Integer(imin_text));
        }
    } catch (const std::exception& e) {
        std::cerr << json{{"error", e.what()}}.dump() << '\n';
        return 1;
    }
    return 0;
}
