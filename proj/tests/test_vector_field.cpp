#include "doctest.h"

#include "ramanujan/builtin_data.hpp"
#include "ramanujan/parse.hpp"
#include "ramanujan/qseries.hpp"
#include "ramanujan/vector_field.hpp"

#include <random>
#include <stdexcept>

using namespace ramanujan;

namespace {

RatFunc F(const std::string& s) { return parse_ratfunc(s); }

const std::vector<std::string> kBChart = {"b2", "b4", "b6"};

MultiPoly random_poly(std::mt19937& rng, const std::vector<std::string>& vars) {
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<unsigned> expo(0, 2);
    std::vector<std::pair<ExpVec, Rat>> terms;
    for (int t = 0; t < 3; ++t) {
        ExpVec e(vars.size());
        for (auto& x : e) x = expo(rng);
        terms.emplace_back(e, Rat(coeff(rng)));
    }
    return MultiPoly::from_terms(vars, terms);
}

PolyVectorField random_field(std::mt19937& rng, const std::vector<std::string>& vars) {
    std::vector<RatFunc> comps;
    for (std::size_t i = 0; i < vars.size(); ++i) comps.emplace_back(random_poly(rng, vars));
    return PolyVectorField(vars, comps);
}

// Evaluate a polynomial at power-series arguments (one series per variable).
QSeries eval_poly_series(const MultiPoly& p, const std::map<std::string, QSeries>& point,
                         unsigned order) {
    QSeries acc(order);
    for (const auto& [e, c] : p.terms()) {
        QSeries term = QSeries::constant(c, order);
        for (std::size_t j = 0; j < e.size(); ++j)
            for (std::uint32_t k = 0; k < e[j]; ++k) term = term * point.at(p.vars()[j]);
        acc = acc + term;
    }
    return acc;
}

} // namespace

TEST_SUITE("vector_field") {

TEST_CASE("printed field components") {
    PolyVectorField vb = ramanujan_field("b");
    CHECK(vb.chart == kBChart);
    CHECK(vb.coeffs[0] == F("2*b4"));
    CHECK(vb.coeffs[1] == F("3*b6"));
    CHECK(vb.coeffs[2] == F("b2*b6 - b4^2"));

    PolyVectorField ve = ramanujan_field("e");
    CHECK(ve.coeffs[0] == F("(e2^2 - e4)/12"));
    CHECK(ve.coeffs[1] == F("(e2*e4 - e6)/3"));
    CHECK(ve.coeffs[2] == F("(e2*e6 - e4^2)/2"));

    CHECK_THROWS_AS(ramanujan_field("weierstrass"), std::invalid_argument);
    CHECK_THROWS_AS(PolyVectorField({"x", "y"}, {F("1")}), std::invalid_argument);
}

TEST_CASE("lie bracket basics") {
    PolyVectorField v = ramanujan_field("b");
    CHECK(lie_bracket(v, v).is_zero());

    PolyVectorField d2({"b2", "b4", "b6"}, {F("1"), F("0"), F("0")});
    PolyVectorField d4({"b2", "b4", "b6"}, {F("0"), F("1"), F("0")});
    CHECK(lie_bracket(d2, d4).is_zero());

    // [b2 d/db2, d/db2] = -d/db2 by direct expansion
    PolyVectorField b2d2({"b2", "b4", "b6"}, {F("b2"), F("0"), F("0")});
    PolyVectorField bracket = lie_bracket(b2d2, d2);
    CHECK(bracket.coeffs[0] == F("-1"));
    CHECK(bracket.coeffs[1] == F("0"));
    CHECK(bracket.coeffs[2] == F("0"));

    CHECK_THROWS_AS(lie_bracket(v, ramanujan_field("e")), std::invalid_argument);
}

TEST_CASE("lie bracket is antisymmetric, bilinear, and satisfies jacobi") {
    std::mt19937 rng(20260818);
    for (int trial = 0; trial < 30; ++trial) {
        PolyVectorField u = random_field(rng, kBChart);
        PolyVectorField v = random_field(rng, kBChart);
        PolyVectorField w = random_field(rng, kBChart);

        PolyVectorField uv = lie_bracket(u, v);
        PolyVectorField vu = lie_bracket(v, u);
        for (std::size_t c = 0; c < 3; ++c) CHECK(uv.coeffs[c] == -vu.coeffs[c]);

        // bilinearity in the first slot: [u + 3v, w] = [u, w] + 3[v, w]
        std::vector<RatFunc> sum;
        for (std::size_t c = 0; c < 3; ++c) sum.push_back(u.coeffs[c] + F("3") * v.coeffs[c]);
        PolyVectorField lhs = lie_bracket(PolyVectorField(kBChart, sum), w);
        PolyVectorField uw = lie_bracket(u, w), vw = lie_bracket(v, w);
        for (std::size_t c = 0; c < 3; ++c)
            CHECK(lhs.coeffs[c] == uw.coeffs[c] + F("3") * vw.coeffs[c]);

        // jacobi: [u,[v,w]] + [v,[w,u]] + [w,[u,v]] = 0
        PolyVectorField j1 = lie_bracket(u, lie_bracket(v, w));
        PolyVectorField j2 = lie_bracket(v, lie_bracket(w, u));
        PolyVectorField j3 = lie_bracket(w, lie_bracket(u, v));
        for (std::size_t c = 0; c < 3; ++c)
            CHECK((j1.coeffs[c] + j2.coeffs[c] + j3.coeffs[c]).is_zero());
    }
}

TEST_CASE("chart isomorphisms validate their inverses") {
    CHECK_NOTHROW(iso_b_to_e());
    CHECK_NOTHROW(weight_scaling_iso());
    CHECK_NOTHROW(ChartIso::identity(kBChart));

    // a wrong inverse is rejected in both composition orders
    CHECK_THROWS_AS(ChartIso({"x"}, {"y"}, {{"y", F("x^2")}}, {{"x", F("y")}}),
                    std::invalid_argument);
    // missing assignments are rejected
    CHECK_THROWS_AS(ChartIso({"x"}, {"y"}, {}, {{"x", F("y")}}), std::invalid_argument);
    // dimension mismatch is rejected
    CHECK_THROWS_AS(ChartIso({"x", "z"}, {"y"}, {{"y", F("x")}}, {{"x", F("y")}, {"z", F("1")}}),
                    std::invalid_argument);

    // a valid non-trivial iso with a formal parameter: x -> u*x + 1
    CHECK_NOTHROW(ChartIso({"x"}, {"y"}, {{"y", F("u*x + 1")}}, {{"x", F("(y - 1)/u")}}));
}

TEST_CASE("pushforward along the chart substitution matches the printed field") {
    PolyVectorField pushed = pushforward(ramanujan_field("b"), iso_b_to_e());
    CHECK(pushed == ramanujan_field("e"));

    // first component by hand: v(e2) = v(b2) = 2*b4 -> (e2^2 - e4)/12
    CHECK(substitute_through(F("2*b4"), iso_b_to_e().inverse()) == F("(e2^2 - e4)/12"));
}

TEST_CASE("pushforward along the identity is the identity") {
    PolyVectorField v = ramanujan_field("b");
    CHECK(pushforward(v, ChartIso::identity(kBChart)) == v);
    CHECK_THROWS_AS(pushforward(v, ChartIso::identity({"e2", "e4", "e6"})),
                    std::invalid_argument);
}

TEST_CASE("scaling the chart rescales the field with weight -2") {
    PolyVectorField v = ramanujan_field("b");
    PolyVectorField scaled = pushforward(v, weight_scaling_iso());
    RatFunc u2 = F("1/u^2");
    for (std::size_t c = 0; c < 3; ++c) CHECK(scaled.coeffs[c] == u2 * v.coeffs[c]);
}

TEST_CASE("pushforward is functorial") {
    ChartIso s = weight_scaling_iso();
    ChartIso f = iso_b_to_e();
    ChartIso sf = compose(s, f);
    CHECK(sf.source_coords() == kBChart);
    CHECK(sf.target_coords() == std::vector<std::string>{"e2", "e4", "e6"});

    std::mt19937 rng(7);
    for (int trial = 0; trial < 5; ++trial) {
        PolyVectorField v = random_field(rng, kBChart);
        CHECK(pushforward(v, sf) == pushforward(pushforward(v, s), f));
    }
    CHECK_THROWS_AS(compose(f, s), std::invalid_argument);
}

TEST_CASE("solver rederives the printed fields from connection data") {
    auto fields_b = solve_higher_ramanujan(derived_chart("b"));
    CHECK(fields_b.size() == 1);
    CHECK(fields_b.at({1, 1}) == ramanujan_field("b"));

    auto fields_e = solve_higher_ramanujan(printed_chart("e"));
    CHECK(fields_e.size() == 1);
    CHECK(fields_e.at({1, 1}) == ramanujan_field("e"));
}

TEST_CASE("solver preconditions and failure modes") {
    // two coordinates where 2g^2 + g = 3 are required
    CHECK_THROWS_AS(solve_higher_ramanujan(printed_chart("weierstrass")), std::invalid_argument);

    // incompatible connection matrices are rejected before solving
    std::map<std::string, RFMat> ident = {
        {"x", rf_identity(2)}, {"y", rf_identity(2)}, {"z", rf_identity(2)}};
    ConnectionChart bad(ChartDomain{"t", {"x", "y", "z"}, parse_poly("1")}, 1, ident);
    CHECK_THROWS_AS(solve_higher_ramanujan(bad), std::invalid_argument);

    // the zero connection is compatible but the system is inconsistent
    std::map<std::string, RFMat> zero = {
        {"x", rf_zeros(2, 2)}, {"y", rf_zeros(2, 2)}, {"z", rf_zeros(2, 2)}};
    ConnectionChart flat0(ChartDomain{"t", {"x", "y", "z"}, parse_poly("1")}, 1, zero);
    CHECK_THROWS_AS(solve_higher_ramanujan(flat0), std::domain_error);
}

TEST_CASE("solved fields are regular with constrained coefficients") {
    PolyVectorField vb = solve_higher_ramanujan(derived_chart("b")).at({1, 1});
    MultiPoly db = builtin_domain("b").delta;
    for (const RatFunc& c : vb.coeffs) {
        CHECK(c.is_polynomial());
        CHECK(clear_delta(c, db, 0).has_integer_coefficients());
    }

    PolyVectorField ve = solve_higher_ramanujan(printed_chart("e")).at({1, 1});
    MultiPoly de = builtin_domain("e").delta;
    for (const RatFunc& c : ve.coeffs) {
        CHECK(c.is_polynomial());
        CHECK(clear_delta(c, de, 0).coefficients_supported_by({2, 3}));
    }
}

TEST_CASE("commutation checks") {
    PolyVectorField v = ramanujan_field("b");
    CHECK(verify_commutation({v}));

    std::vector<RatFunc> doubled;
    for (const RatFunc& c : v.coeffs) doubled.push_back(F("2") * c);
    CHECK(verify_commutation({v, PolyVectorField(kBChart, doubled)}));

    PolyVectorField d2(kBChart, {F("1"), F("0"), F("0")});
    CHECK_FALSE(verify_commutation({v, d2}));
}

TEST_CASE("series solutions are integral curves of the field") {
    const unsigned order = 80;
    ChazyTriple t = chazy_triple(order);
    std::map<std::string, QSeries> point = {{"b2", t.b2}, {"b4", t.b4}, {"b6", t.b6}};

    PolyVectorField v = ramanujan_field("b");
    std::vector<QSeries> lhs = {t.b2.theta(), t.b4.theta(), t.b6.theta()};
    for (std::size_t c = 0; c < 3; ++c) {
        QSeries rhs = eval_poly_series(v.coeffs[c].num(), point, order);
        CHECK((lhs[c] - rhs).is_zero());
    }

    // same statement on the other chart under the coordinate change
    ChartIso iso = iso_b_to_e();
    std::map<std::string, QSeries> epoint;
    for (const std::string& c : iso.target_coords())
        epoint.emplace(c, eval_poly_series(iso.forward().at(c).num(), point, order));
    // the e-coordinates of the curve are the classical weight-2,4,6 series
    CHECK((epoint.at("e2") - eisenstein(2, order)).is_zero());
    CHECK((epoint.at("e4") - eisenstein(4, order)).is_zero());
    CHECK((epoint.at("e6") - eisenstein(6, order)).is_zero());

    PolyVectorField ve = ramanujan_field("e");
    for (std::size_t c = 0; c < 3; ++c) {
        const std::string& name = iso.target_coords()[c];
        QSeries num = eval_poly_series(ve.coeffs[c].num(), epoint, order);
        QSeries den = QSeries::constant(ve.coeffs[c].den().constant_value(), order);
        CHECK((epoint.at(name).theta() - num * den.inverse()).is_zero());
    }
}

} // TEST_SUITE
