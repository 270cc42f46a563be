#include "ramanujan/builtin_data.hpp"
#include "ramanujan/connection.hpp"
#include "ramanujan/flow.hpp"
#include "ramanujan/formal.hpp"
#include "ramanujan/parse.hpp"
#include "ramanujan/qseries.hpp"
#include "ramanujan/report.hpp"
#include "ramanujan/symplectic.hpp"
#include "ramanujan/vector_field.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace ramanujan;
using ordered_json = nlohmann::ordered_json;

RFMat lift(const RatMat& m) {
    RFMat out = rf_zeros(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = RatFunc(m.at(i, j));
    return out;
}

std::string zero_detail(const QSeries& s) {
    if (s.is_zero()) return "identically zero mod q^" + std::to_string(s.order());
    return "first nonzero coefficient at q^" + std::to_string(*s.first_nonzero());
}

void run_qseries(Report& r, unsigned order, const std::string& p = "") {
    RamanujanResiduals res = verify_ramanujan(order);
    r.add_check(p + "ramanujan-residual-e2", res.r2.is_zero(), zero_detail(res.r2));
    r.add_check(p + "ramanujan-residual-e4", res.r4.is_zero(), zero_detail(res.r4));
    r.add_check(p + "ramanujan-residual-e6", res.r6.is_zero(), zero_detail(res.r6));
    r.add_check(p + "chazy-residual", verify_chazy(order).is_zero(),
                "theta^3 E2 - E2 theta^2 E2 + (3/2)(theta E2)^2, " + zero_detail(verify_chazy(order)));
    bool ints = eisenstein(2, order).has_integer_coefficients() &&
                eisenstein(4, order).has_integer_coefficients() &&
                eisenstein(6, order).has_integer_coefficients();
    r.add_check(p + "integer-coefficients", ints,
                "E2, E4, E6 lie in Z[[q]] mod q^" + std::to_string(order));
    r.add_check(p + "printed-label-reading", true,
                "the printed system labels its last two left sides theta E_3 and theta E_4; "
                "both readings are recorded, and the residuals above verify the "
                "weight-consistent reading theta E_4 = (E2 E4 - E6)/3, "
                "theta E_6 = (E2 E6 - E4^2)/2 (no weight-3 series exists)");
}

void run_symplectic(Report& r, unsigned gmax, unsigned trials, const std::string& p = "") {
    std::mt19937_64 rng(20260818u);
    bool completion = true, dual = true, torsor = true;
    std::string first_failure;
    for (unsigned g = 1; g <= gmax; ++g) {
        SymplecticSpace space = SymplecticSpace::standard(g);
        for (unsigned t = 0; t < trials; ++t) {
            try {
                RatMat f = random_lagrangian_frame(g, rng);
                SymplecticBasis b = complete_to_symplectic(space, f);
                completion = completion && b.omega_block() == f;

                SymplecticBasis sb = random_symplectic_basis(g, rng);
                SymplecticBasis d = dual_lagrangian_basis(space, sb.omega_block(), sb.eta_block());
                dual = dual && d.eta_block() == sb.eta_block() &&
                       space.subspace(d.omega_block()) == space.subspace(sb.omega_block());

                SymplecticBasis base = random_symplectic_basis(g, rng);
                GroupElement pe = random_parabolic(g, rng);
                SymplecticBasis moved = act_parabolic(space, base, pe);
                GroupElement back = transition_parabolic(space, base, moved);
                torsor = torsor && back.matrix() == pe.matrix() &&
                         act_parabolic(space, base, back) == moved;
            } catch (const std::exception& e) {
                completion = dual = torsor = false;
                if (first_failure.empty())
                    first_failure = "g=" + std::to_string(g) + " trial " + std::to_string(t) +
                                    ": " + e.what();
            }
        }
    }
    std::string scope = "g <= " + std::to_string(gmax) + ", " + std::to_string(trials) +
                        " exact trials per g" +
                        (first_failure.empty() ? "" : "; first failure " + first_failure);
    r.add_check(p + "completion-fixes-omega", completion,
                "complete_to_symplectic returns a valid basis with omega block F; " + scope);
    r.add_check(p + "dual-basis-roundtrip", dual,
                "dual_lagrangian_basis keeps the eta frame and the omega span; " + scope);
    r.add_check(p + "torsor-freeness-transitivity", torsor,
                "transition_parabolic recovers the acting element exactly; " + scope);
}

void run_connection(Report& r, const std::string& chart, ordered_json* data,
                    const std::string& p = "") {
    ConnectionChart derived = derived_chart(chart);
    ConnectionChart printed = printed_chart(chart);
    std::vector<ChartDiffEntry> diff = diff_charts(printed, derived);

    if (chart == "e") {
        r.add_check(p + "matches-printed", diff.empty(),
                    "pullback of the weierstrass chart reproduces the printed matrices "
                    "entry-for-entry (" +
                        std::to_string(diff.size()) + " entries differ)");
    } else {
        r.add_check(p + "printed-diff-emitted", true,
                    std::to_string(diff.size()) +
                        " entries differ from the printed sheet (reported, not asserted; "
                        "the derived chart is the one satisfying every invariant below)");
    }

    std::map<std::string, bool> compat = check_symplectic_compatibility(derived);
    bool all_compat = true;
    for (const auto& [coord, ok] : compat) all_compat = all_compat && ok;
    r.add_check(p + "symplectic-compatibility", all_compat,
                "omega(c)^T J + J omega(c) + (d_c J) = 0 for every coordinate");
    r.add_check(p + "flatness", check_flatness(derived),
                "curvature vanishes for every coordinate pair");

    if (chart == "b") {
        PolyVectorField v = ramanujan_field("b");
        RFMat contraction = contract(derived, v.coeffs);
        RFMat expected = rf_zeros(2, 2);
        expected[1][0] = RatFunc(1);
        r.add_check(p + "field-contraction", contraction == expected,
                    "nabla_v sends the frame to its lower shift [[0,0],[1,0]]");
        bool skew = true;
        for (const std::string& c : derived.domain().coords) {
            const RFMat& m = derived.omega(c);
            skew = skew && m[1][1] == -m[0][0];
        }
        r.add_check(p + "trace-pairing", skew, "omega_22 = -omega_11 for every coordinate");
    }

    std::vector<unsigned long> primes =
        chart == "b" ? std::vector<unsigned long>{2} : std::vector<unsigned long>{2, 3};
    bool support = true;
    for (const std::string& c : derived.domain().coords)
        for (const auto& row : derived.omega(c))
            for (const RatFunc& entry : row)
                support = support &&
                          clear_delta(entry, derived.domain().delta)
                              .coefficients_supported_by(primes);
    std::string prime_list = chart == "b" ? "{2}" : "{2, 3}";
    r.add_check(p + "denominator-support", support,
                "after clearing delta every coefficient denominator is supported by " + prime_list);

    if (data != nullptr) {
        ordered_json rows = ordered_json::array();
        for (const ChartDiffEntry& d : diff) {
            ordered_json row;
            row["coord"] = d.coord;
            row["row"] = d.row;
            row["col"] = d.col;
            row["printed"] = d.left;
            row["derived"] = d.right;
            rows.push_back(std::move(row));
        }
        (*data)["printed-vs-derived-" + chart] = std::move(rows);
    }
}

void run_solve(Report& r, const std::string& chart, ordered_json* data,
               const std::string& p = "") {
    ConnectionChart derived = derived_chart(chart);
    std::map<std::pair<unsigned, unsigned>, PolyVectorField> sol;
    std::string err;
    try {
        sol = solve_higher_ramanujan(derived);
    } catch (const std::exception& e) {
        err = e.what();
    }
    bool unique = err.empty() && sol.size() == 1;
    r.add_check(p + "unique-solution", unique,
                unique ? "the 4g^2-equation linear system has exactly one solution"
                       : "solve failed: " + err);
    if (!unique) return;

    const PolyVectorField& v = sol.at({1, 1});
    PolyVectorField expected = ramanujan_field(chart);
    r.add_check(p + "matches-expected-field", v == expected, "derived field " + v.str());
    bool poly = true;
    for (const RatFunc& c : v.coeffs) poly = poly && c.is_polynomial();
    r.add_check(p + "polynomial-components", poly,
                "every component is regular on the whole chart");
    if (data != nullptr) {
        ordered_json field = ordered_json::object();
        for (std::size_t k = 0; k < v.chart.size(); ++k) field[v.chart[k]] = v.coeffs[k].str();
        (*data)["field-" + chart] = std::move(field);
    }
}

void run_field_identities(Report& r, const std::string& p = "") {
    PolyVectorField vb = ramanujan_field("b");
    r.add_check(p + "pushforward-b-to-e", pushforward(vb, iso_b_to_e()) == ramanujan_field("e"),
                "the polynomial substitution identifies the two printed presentations");
    PolyVectorField scaled = pushforward(vb, weight_scaling_iso());
    RatFunc factor = parse_ratfunc("1/u^2");
    bool scaling = true;
    for (std::size_t k = 0; k < vb.coeffs.size(); ++k)
        scaling = scaling && scaled.coeffs[k] == factor * vb.coeffs[k];
    r.add_check(p + "scaling-weight", scaling,
                "pushforward along the weight scaling multiplies the field by u^-2");
}

void run_formal(Report& r, unsigned gmax, unsigned trials, const std::string& p = "") {
    bool comm = true, flat = true;
    for (unsigned g = 1; g <= gmax; ++g) {
        comm = comm && check_commutation(g);
        flat = flat && check_pairing_flatness(g);
    }
    std::string scope = " for g <= " + std::to_string(gmax);
    r.add_check(p + "commutation", comm, "all derivation pairs commute on the basis" + scope);
    r.add_check(p + "pairing-flatness", flat, "the pairing is flat for every derivation" + scope);

    std::mt19937_64 rng(618u);
    bool levi = true;
    for (unsigned g = 1; g <= gmax; ++g)
        for (unsigned t = 0; t < trials; ++t)
            levi = levi && check_levi_pushforward(g, lift(random_invertible(g, rng)));
    r.add_check(p + "levi-pushforward", levi,
                "transformation law holds for " + std::to_string(trials) +
                    " random invertible A per g" + scope);

    bool eta = true;
    for (unsigned g = 1; g <= gmax; ++g) {
        EtaObstructionResult zero =
            check_parabolic_eta_obstruction(g, rf_identity(g), rf_zeros(g, g));
        eta = eta && zero.closed_form_matches && zero.all_zero && zero.b_is_zero;
        for (unsigned t = 0; t < trials; ++t) {
            RFMat a = lift(random_invertible(g, rng));
            RFMat b = lift(random_invertible(g, rng)); // invertible, hence nonzero
            EtaObstructionResult res = check_parabolic_eta_obstruction(g, a, b);
            eta = eta && res.closed_form_matches && !res.all_zero &&
                  res.all_zero == res.b_is_zero;
        }
    }
    r.add_check(p + "eta-obstruction-iff", eta,
                "the eta-block obstruction vanishes exactly when B = 0" + scope);
}

void run_flow(Report& r, const std::string& chart, double q0, double q1, double tol,
              unsigned order, const std::string& dump_csv, ordered_json* data,
              const std::string& p = "") {
    std::vector<std::string> coords = chart == "e" ? std::vector<std::string>{"e2", "e4", "e6"}
                                                   : std::vector<std::string>{"b2", "b4", "b6"};
    auto point_at = [&](double q, double& tail) {
        std::vector<Cplx> out;
        tail = 0.0;
        if (chart == "e") {
            for (unsigned w : {2u, 4u, 6u}) {
                SeriesValue v = evaluate(eisenstein(w, order), q);
                out.push_back(v.value);
                tail = std::max(tail, v.tail_estimate);
            }
        } else {
            ChazyTriple t = chazy_triple(order);
            for (const QSeries* s : {&t.b2, &t.b4, &t.b6}) {
                SeriesValue v = evaluate(*s, q);
                out.push_back(v.value);
                tail = std::max(tail, v.tail_estimate);
            }
        }
        return out;
    };

    double tail0 = 0.0, tail1 = 0.0;
    std::vector<Cplx> start = point_at(q0, tail0);
    std::vector<Cplx> oracle = point_at(q1, tail1);

    FlowOptions opts;
    opts.tol = tol;
    opts.record_trace = !dump_csv.empty();
    FlowResult res = integrate(ramanujan_field(chart), {coords, start, std::log(q0)},
                               std::log(q1 / q0), opts);

    double max_err = 0.0;
    for (std::size_t c = 0; c < coords.size(); ++c)
        max_err = std::max(max_err, std::abs(res.state.point[c] - oracle[c]));
    double bound = 100.0 * tol;

    std::ostringstream detail;
    detail.precision(3);
    detail << "max_abs_err=" << std::scientific << max_err << " over " << res.steps_accepted
           << " accepted steps, bound 100*tol=" << bound;
    r.add_check(p + "endpoint-vs-series", max_err <= bound, detail.str());
    double tail = std::max(tail0, tail1);
    std::ostringstream tail_detail;
    tail_detail.precision(3);
    tail_detail << "order-" << order << " truncation tail estimate " << std::scientific << tail;
    r.add_check(p + "series-tail-negligible", tail < bound / 10, tail_detail.str());

    if (!dump_csv.empty()) {
        std::ofstream out(dump_csv);
        if (!out) throw std::runtime_error("flow: cannot write " + dump_csv);
        out << trace_csv(coords, res.trace);
    }

    if (data != nullptr) {
        auto as_pairs = [](const std::vector<Cplx>& pt) {
            ordered_json list = ordered_json::array();
            for (const Cplx& z : pt) list.push_back({z.real(), z.imag()});
            return list;
        };
        ordered_json flow;
        flow["endpoint"] = as_pairs(res.state.point);
        flow["oracle"] = as_pairs(oracle);
        flow["max_abs_err"] = max_err;
        flow["steps"] = res.steps_accepted;
        flow["steps_rejected"] = res.steps_rejected;
        if (!dump_csv.empty()) flow["trace_csv"] = dump_csv;
        (*data)["flow-" + chart] = std::move(flow);
    }
}

int emit(Report& r, const ordered_json& data, bool json, bool quiet) {
    if (!data.empty()) r.data_json = data.dump();
    std::string body = r.to_json();
    if (!quiet) std::cout << body;
    if (!json && !quiet) std::cerr << r.summary();
    if (std::optional<std::string> dir = report_directory()) {
        std::string path = write_report(r, *dir);
        if (!json && !quiet) std::cerr << "report written to " << path << "\n";
    }
    return r.all_pass() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification tools for the coupled Eisenstein system: q-series "
                 "identities, connection-chart rederivation, vector-field solving, formal "
                 "symplectic calculus, and numerical flow."};
    app.require_subcommand(1);

    bool json = false, quiet = false;
    unsigned order = 200, g = 4, trials = 100, flow_order = 64;
    std::string chart, dump_csv;
    double q0 = 0.01, q1 = 0.02, tol = 1e-10;

    auto add_common = [&](CLI::App* sub) {
        sub->add_flag("--json", json, "print only the JSON report");
        sub->add_flag("--quiet", quiet, "no console output; rely on the exit code");
    };

    CLI::App* vq = app.add_subcommand(
        "verify-qseries", "series residuals of the coupled system and the third-order equation");
    vq->add_option("--order", order, "series truncation order")
        ->check(CLI::Range(2u, 100000u))
        ->capture_default_str();
    add_common(vq);

    CLI::App* sy = app.add_subcommand("symplectic-selftest",
                                      "randomized exact checks for bases, duals and torsors");
    sy->add_option("--g", g, "largest genus")->check(CLI::Range(1u, 8u))->capture_default_str();
    sy->add_option("--trials", trials, "trials per genus")
        ->check(CLI::Range(1u, 100000u))
        ->capture_default_str();
    add_common(sy);

    CLI::App* rc = app.add_subcommand("rederive-connection",
                                      "pull the base chart back and compare with the printed one");
    rc->add_option("--chart", chart, "target chart")->required()->check(CLI::IsMember({"e", "b"}));
    add_common(rc);

    CLI::App* sf = app.add_subcommand("solve-field",
                                      "solve the defining linear system for the vector field");
    sf->add_option("--chart", chart, "chart to solve on")
        ->required()
        ->check(CLI::IsMember({"e", "b"}));
    add_common(sf);

    CLI::App* fc = app.add_subcommand("formal-check",
                                      "rewrite-rule identities of the formal connection");
    fc->add_option("--g", g, "largest genus")->check(CLI::Range(1u, 8u))->capture_default_str();
    fc->add_option("--trials", trials, "random matrices per genus")
        ->check(CLI::Range(1u, 100000u))
        ->capture_default_str();
    add_common(fc);

    CLI::App* fl = app.add_subcommand("flow", "integrate the field and compare with the series");
    fl->add_option("--chart", chart, "chart to integrate on")
        ->required()
        ->check(CLI::IsMember({"e", "b"}));
    fl->add_option("--q0", q0, "start point on the q-disc")
        ->check(CLI::Range(1e-6, 0.5))
        ->capture_default_str();
    fl->add_option("--q1", q1, "end point on the q-disc")
        ->check(CLI::Range(1e-6, 0.5))
        ->capture_default_str();
    fl->add_option("--tol", tol, "local error tolerance per unit flow time")
        ->check(CLI::Range(1e-14, 1e-2))
        ->capture_default_str();
    fl->add_option("--order", flow_order, "series order for the endpoint oracle")
        ->check(CLI::Range(8u, 4096u))
        ->capture_default_str();
    fl->add_option("--dump-csv", dump_csv, "write the accepted trajectory as CSV");
    add_common(fl);

    CLI::App* all = app.add_subcommand("all", "every check above in one report");
    all->add_option("--order", order, "series truncation order")
        ->check(CLI::Range(2u, 100000u))
        ->capture_default_str();
    all->add_option("--g", g, "largest genus")->check(CLI::Range(1u, 8u))->capture_default_str();
    all->add_option("--tol", tol, "flow tolerance")
        ->check(CLI::Range(1e-14, 1e-2))
        ->capture_default_str();
    all->add_option("--trials", trials, "randomized trials per genus")
        ->check(CLI::Range(1u, 100000u))
        ->capture_default_str();
    add_common(all);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        Report r;
        ordered_json data = ordered_json::object();
        if (*vq) {
            r.subcommand = "verify-qseries";
            r.add_input("order", std::to_string(order));
            run_qseries(r, order);
        } else if (*sy) {
            r.subcommand = "symplectic-selftest";
            r.add_input("g", std::to_string(g));
            r.add_input("trials", std::to_string(trials));
            run_symplectic(r, g, trials);
        } else if (*rc) {
            r.subcommand = "rederive-connection";
            r.add_input("chart", chart);
            run_connection(r, chart, &data);
        } else if (*sf) {
            r.subcommand = "solve-field";
            r.add_input("chart", chart);
            run_solve(r, chart, &data);
        } else if (*fc) {
            r.subcommand = "formal-check";
            r.add_input("g", std::to_string(g));
            r.add_input("trials", std::to_string(trials));
            run_formal(r, g, trials);
        } else if (*fl) {
            r.subcommand = "flow";
            r.add_input("chart", chart);
            r.add_input("q0", std::to_string(q0));
            r.add_input("q1", std::to_string(q1));
            r.add_input("tol", std::to_string(tol));
            r.add_input("order", std::to_string(flow_order));
            if (!dump_csv.empty()) r.add_input("dump-csv", dump_csv);
            run_flow(r, chart, q0, q1, tol, flow_order, dump_csv, &data);
        } else if (*all) {
            r.subcommand = "all";
            r.add_input("order", std::to_string(order));
            r.add_input("g", std::to_string(g));
            r.add_input("tol", std::to_string(tol));
            r.add_input("trials", std::to_string(trials));
            run_qseries(r, order, "qseries/");
            run_symplectic(r, g, trials, "symplectic/");
            run_connection(r, "e", &data, "connection-e/");
            run_connection(r, "b", &data, "connection-b/");
            run_solve(r, "e", &data, "field-e/");
            run_solve(r, "b", &data, "field-b/");
            run_field_identities(r, "field/");
            run_formal(r, g, trials, "formal/");
            run_flow(r, "e", 0.01, 0.02, tol, 64, "", &data, "flow-e/");
            run_flow(r, "b", 0.01, 0.02, tol, 64, "", &data, "flow-b/");
        }
        return emit(r, data, json, quiet);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
