#include "ramanujan/parse.hpp"
#include "ramanujan/ratfunc.hpp"

#include <doctest.h>

#include <random>

using namespace ramanujan;

namespace {

RatFunc F(const char* s) { return parse_ratfunc(s); }

MultiPoly random_poly(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nterms(0, 3), expd(0, 2), numd(-6, 6), dend(1, 3);
    std::vector<std::pair<ExpVec, Rat>> terms;
    const int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        ExpVec e{static_cast<std::uint32_t>(expd(rng)), static_cast<std::uint32_t>(expd(rng))};
        terms.emplace_back(e, Rat(numd(rng), dend(rng)));
    }
    return MultiPoly::from_terms({"x", "y"}, terms);
}

RatFunc random_ratfunc(std::mt19937_64& rng) {
    MultiPoly num = random_poly(rng);
    MultiPoly den = random_poly(rng);
    while (den.is_zero()) den = random_poly(rng);
    return RatFunc(num, den);
}

} // namespace

TEST_SUITE("ratfunc") {

TEST_CASE("quotients reduce to lowest terms") {
    RatFunc f(parse_poly("x^2 - y^2"), parse_poly("x - y"));
    CHECK(f.is_polynomial());
    CHECK(f == F("x + y"));
    RatFunc g = F("(x^2 - 1)/(x - 1)");
    CHECK(g == F("x + 1"));
}

TEST_CASE("denominator is integer-primitive with positive leading coefficient") {
    RatFunc f(MultiPoly::variable("x"), Rat(-2) * MultiPoly::variable("y"));
    CHECK(f.den() == parse_poly("y"));
    CHECK(f.num() == parse_poly("-1/2*x"));
    RatFunc g(parse_poly("3*x"), parse_poly("3/2*y"));
    CHECK(g.den() == parse_poly("y"));
    CHECK(g.num() == parse_poly("2*x"));
}

TEST_CASE("zero and division guards") {
    CHECK(RatFunc().is_zero());
    CHECK(RatFunc().den() == MultiPoly::constant(Rat(1)));
    CHECK_THROWS_AS(RatFunc(parse_poly("x"), MultiPoly()), std::domain_error);
    CHECK_THROWS_AS(F("x") / RatFunc(), std::domain_error);
    CHECK_THROWS_AS(RatFunc().inverse(), std::domain_error);
}

TEST_CASE("field axioms on random elements") {
    std::mt19937_64 rng(20260818);
    for (int i = 0; i < 400; ++i) {
        RatFunc a = random_ratfunc(rng), b = random_ratfunc(rng), c = random_ratfunc(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == RatFunc());
        if (!a.is_zero()) {
            CHECK(a * a.inverse() == RatFunc(1));
            CHECK(a / a == RatFunc(1));
        }
    }
}

TEST_CASE("pow with negative exponents") {
    RatFunc f = F("(x + 1)/(x - 1)");
    CHECK(f.pow(0) == RatFunc(1));
    CHECK(f.pow(2) == f * f);
    CHECK(f.pow(-1) == f.inverse());
    CHECK(f.pow(-3) == (f * f * f).inverse());
    CHECK_THROWS_AS(RatFunc().pow(-1), std::domain_error);
}

TEST_CASE("differentiation satisfies quotient and Leibniz rules") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 200; ++i) {
        RatFunc f = random_ratfunc(rng), g = random_ratfunc(rng);
        CHECK((f * g).diff("x") == f.diff("x") * g + f * g.diff("x"));
        CHECK((f + g).diff("y") == f.diff("y") + g.diff("y"));
        if (!f.is_zero())
            CHECK(f.inverse().diff("x") == -(f.diff("x")) * (f * f).inverse());
    }
    CHECK(F("1/x").diff("x") == F("-1/x^2"));
    CHECK(F("x^2/y").diff("y") == F("-x^2/y^2"));
}

TEST_CASE("substitution is a morphism and composes") {
    std::map<std::string, RatFunc> s{{"x", F("(u + 1)/u")}, {"y", F("u^2")}};
    std::mt19937_64 rng(29);
    for (int i = 0; i < 100; ++i) {
        RatFunc f = random_ratfunc(rng), g = random_ratfunc(rng);
        std::map<std::string, std::complex<double>> denpt; // guard: den may vanish after subst
        bool fok = true, gok = true;
        RatFunc fs, gs;
        try { fs = substitute(f, s); } catch (const std::domain_error&) { fok = false; }
        try { gs = substitute(g, s); } catch (const std::domain_error&) { gok = false; }
        if (!fok || !gok) continue;
        CHECK(substitute(f + g, s) == fs + gs);
        CHECK(substitute(f * g, s) == fs * gs);
    }
    // identity substitution is the identity map
    std::map<std::string, RatFunc> id{{"x", F("x")}, {"y", F("y")}};
    RatFunc h = F("(x^2 - y)/(x*y + 1)");
    CHECK(substitute(h, id) == h);
    // denominator collapsing to zero is an error
    CHECK_THROWS_AS(substitute(F("1/(x - 1)"), std::map<std::string, RatFunc>{{"x", RatFunc(1)}}),
                    std::domain_error);
    // unassigned variable is an error
    CHECK_THROWS_AS(substitute(F("x*y"), std::map<std::string, RatFunc>{{"x", F("u")}}),
                    std::invalid_argument);
}

TEST_CASE("evaluation matches the quotient of evaluations") {
    RatFunc f = F("(x^2 + y)/(x - y)");
    std::map<std::string, Rat> pt{{"x", Rat(3)}, {"y", Rat(1)}};
    CHECK(f.eval(pt) == Rat(10, 2));
    CHECK_THROWS_AS(f.eval(std::map<std::string, Rat>{{"x", Rat(1)}, {"y", Rat(1)}}),
                    std::domain_error);
    std::map<std::string, std::complex<double>> cpt{{"x", {3.0, 0.0}}, {"y", {1.0, 0.0}}};
    CHECK(std::abs(f.eval(cpt) - std::complex<double>(5.0, 0.0)) < 1e-12);
}

TEST_CASE("parser handles nested quotients and precedence") {
    CHECK(F("1/2*x") == RatFunc(parse_poly("1/2*x")));
    CHECK(F("1/(2*x)") == RatFunc(MultiPoly::constant(Rat(1)), parse_poly("2*x")));
    CHECK(F("-x^2") == -F("x^2"));
    CHECK(F("(-x)^2") == F("x^2"));
    CHECK(F("x^-1") == F("1/x"));
    CHECK(F("2^3") == RatFunc(8));
    CHECK_THROWS_AS(F("x +"), std::invalid_argument);
    CHECK_THROWS_AS(F("(x"), std::invalid_argument);
    CHECK_THROWS_AS(F("x$"), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly("1/x"), std::invalid_argument);
}

TEST_CASE("text form round trips through the parser") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 200; ++i) {
        RatFunc f = random_ratfunc(rng);
        CHECK(parse_ratfunc(f.str()) == f);
    }
    // denominator content migrates to the numerator in canonical form
    CHECK(F("(x^2 - 1)/(2*x)").str() == "(1/2*x^2 - 1/2)/(x)");
    CHECK(F("x + 1").str() == "x + 1");
}

} // TEST_SUITE
