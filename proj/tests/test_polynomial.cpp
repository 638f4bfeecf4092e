#include "properties.hpp"

#include <doctest.h>

using namespace testing;

namespace {

MultiPoly u1() { return MultiPoly::variable(2, 0); }
MultiPoly u2() { return MultiPoly::variable(2, 1); }
MultiPoly c2(const char* c) { return MultiPoly::constant(2, R(c)); }

}  // namespace

TEST_SUITE("polynomials") {

TEST_CASE("evaluation") {
    CHECK(evaluate(parabola_poly(), V({"2", "4"})) == 0);
    CHECK(evaluate(circle_poly(), V({"3/5", "4/5"})) == 0);
    CHECK(evaluate(circle_poly(), V({"0", "0"})) == -1);
    const std::vector<double> x = {0.5, -0.25};
    CHECK(evaluate(circle_poly(), std::span<const double>(x)) == doctest::Approx(-0.6875));
    CHECK_THROWS(evaluate(circle_poly(), V({"1", "2", "3"})));
}

TEST_CASE("gradients") {
    const auto g = gradient(parabola_poly());
    CHECK(g[0] == P(2, {{"-2", {1, 0}}}));
    CHECK(g[1] == c2("1"));
    const auto gc = gradient(circle_poly());
    CHECK(gc[0] == P(2, {{"2", {1, 0}}}));
    CHECK(gc[1] == P(2, {{"2", {0, 1}}}));
    const auto gh = gradient(hyperboloid_poly());
    CHECK(gh[0] == P(3, {{"72", {1, 0, 0}}}));
    CHECK(gh[1] == P(3, {{"18", {0, 1, 0}}}));
    CHECK(gh[2] == P(3, {{"-8", {0, 0, 1}}}));
}

TEST_CASE("substitute_line hand expansions") {
    const UniPolyOverU g = substitute_line(parabola_poly(), V({"1", "1"}));
    REQUIRE(g.degree() == 2);
    CHECK(g.coefficient(2) == c2("-1"));
    CHECK(g.coefficient(1) == c2("1") - c2("2") * u1());
    CHECK(g.coefficient(0) == u2() - u1() * u1());
    const UniPolyOverU h = substitute_line(circle_poly(), V({"1", "1"}));
    REQUIRE(h.degree() == 2);
    CHECK(h.coefficient(2) == c2("2"));
    CHECK(h.coefficient(1) == c2("2") * (u1() + u2()));
    CHECK(h.coefficient(0) == u1() * u1() + u2() * u2() - c2("1"));
    const UniPolyOverU z = substitute_line(circle_poly(), V({"0", "0"}));
    CHECK(z.degree() == 0);
    CHECK(z.coefficient(0) == circle_poly());
}

TEST_CASE("substitution agrees with evaluation and keeps the degree profile") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 30; ++t) {
        const int d = 2 + t % 3;
        const MultiPoly f = random_poly(rng, d);
        const RationalVector dir = {random_rational(rng, 3, 3), random_rational(rng, 3, 3)};
        const UniPolyOverU g = substitute_line(f, dir);
        CHECK(g.coefficient(0) == f);
        for (int i = 0; i <= g.degree(); ++i) {
            CHECK(g.coefficient(static_cast<std::size_t>(i)).degree() <= d - i);
        }
        const RationalVector u = {random_rational(rng, 4, 7), random_rational(rng, 4, 7)};
        const Rational lam = random_rational(rng, 4, 7);
        CHECK(g.evaluate(u, lam) == evaluate(f, add(u, scale(lam, dir))));
    }
}

TEST_CASE("resultant examples") {
    const UniPolyOverU g1 = substitute_line(parabola_poly(), V({"1", "1"}));
    const UniPolyOverU g2 = substitute_line(parabola_poly(), V({"-1", "1"}));
    CHECK(sylvester_resultant(g1, g1).is_zero());
    const MultiPoly res = sylvester_resultant(g1, g2);
    CHECK(proportional(res, c2("-16") * u1() * u1() * parabola_poly()));
    const UniPolyOverU h1 = substitute_line(circle_poly(), V({"1", "1"}));
    const UniPolyOverU h2 = substitute_line(circle_poly(), V({"-1", "1"}));
    CHECK(proportional(sylvester_resultant(h1, h2), c2("32") * u1() * u1() * circle_poly()));
    CHECK_THROWS(sylvester_resultant(UniPolyOverU(2, {c2("1")}), UniPolyOverU(2, {c2("2")})));
}

TEST_CASE("Sylvester matrix layout") {
    const UniPolyOverU g1 = substitute_line(parabola_poly(), V({"1", "1"}));
    const UniPolyOverU g2 = substitute_line(parabola_poly(), V({"-1", "1"}));
    const auto m = sylvester_matrix(g1, g2);
    REQUIRE(m.size() == 4);
    CHECK(m[0][0] == g1.coefficient(2));
    CHECK(m[0][2] == g1.coefficient(0));
    CHECK(m[1][1] == g1.coefficient(2));
    CHECK(m[2][0] == g2.coefficient(2));
    CHECK(m[3][3] == g2.coefficient(0));
    CHECK(m[0][3].is_zero());
}

TEST_CASE("resultant degree bound and common roots") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 12; ++t) {
        const int d = 2 + t % 2;
        const MultiPoly f = random_poly(rng, d);
        const UniPolyOverU g1 = substitute_line(f, V({"1", "1"}));
        const UniPolyOverU g2 = substitute_line(f, V({"1", "-1"}));
        if (g1.degree() < 1 || g2.degree() < 1) {
            continue;
        }
        const MultiPoly res = sylvester_resultant(g1, g2);
        CHECK(res.degree() <= d * d);
        CHECK(exact_divide(res, f).has_value());
    }
    // resultant zero <=> common root: g1 = t^2 - u1, g2 = t - u2 vanish together iff u1 = u2^2
    const UniPolyOverU a(2, {-u1(), c2("0"), c2("1")});
    const UniPolyOverU b(2, {-u2(), c2("1")});
    const MultiPoly res = sylvester_resultant(a, b);
    CHECK(proportional(res, u2() * u2() - u1()));
    CHECK(evaluate(res, V({"9/4", "3/2"})) == 0);
    CHECK(evaluate(res, V({"2", "3/2"})) != 0);
}

TEST_CASE("property: resultant divisibility on random conics and cubics") {
    const Check c = resultant_divisibility(20, 2024);
    INFO(c.failure);
    CHECK(c.ok);
    CHECK(c.cases >= 30);
}

TEST_CASE("exact division") {
    const MultiPoly p = c2("-16") * u1() * u1() * parabola_poly();
    CHECK(*exact_divide(p, parabola_poly()) == c2("-16") * u1() * u1());
    CHECK(*exact_divide(p, p) == c2("1"));
    CHECK_FALSE(exact_divide(u1(), u2()).has_value());
    CHECK_THROWS(exact_divide(u1(), MultiPoly(2)));
}

TEST_CASE("normalize") {
    CHECK(normalize(c2("-6") * u1() + c2("3/2")) == c2("4") * u1() - c2("1"));
    CHECK(normalize(c2("-16") * u1() * u1()) == u1() * u1());
}

TEST_CASE("univariate gcd and real roots") {
    // (x - 1)(x + 2)(x - 1/3) with a repeated factor
    const UniPoly a({R("-1"), R("1")});
    const UniPoly b({R("2"), R("1")});
    const UniPoly c({R("-1/3"), R("1")});
    const UniPoly p = a * a * b * c;
    CHECK(gcd(p, a * c) == a * c);
    CHECK(squarefree_part(p) == a * b * c);
    const auto roots = real_roots(p, Rational(1, 1000000));
    REQUIRE(roots.size() == 3);
    CHECK(roots[0].exact());
    CHECK(roots[0].lo == -2);
    CHECK(roots[1].lo == Rational(1, 3));
    CHECK(roots[2].lo == 1);
    // x^2 - 2: two irrational roots isolated to the requested width
    const auto r2 = real_roots(UniPoly({R("-2"), R("0"), R("1")}), Rational(1, 1000000000));
    REQUIRE(r2.size() == 2);
    CHECK_FALSE(r2[1].exact());
    CHECK(Rational(r2[1].hi - r2[1].lo) <= Rational(1, 1000000000));
    CHECK(r2[1].approx() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
    CHECK(real_roots(UniPoly({R("1"), R("0"), R("1")}), Rational(1, 1000)).empty());
}

TEST_CASE("composition and powers") {
    const MultiPoly x = u1();
    const std::vector<MultiPoly> img = {u1() + u2(), u1() - u2()};
    CHECK(compose(x * x, img) == (u1() + u2()) * (u1() + u2()));
    CHECK((u1() + c2("1")).pow(3) == (u1() + c2("1")) * (u1() + c2("1")) * (u1() + c2("1")));
    CHECK(to_univariate(P(2, {{"3", {2, 0}}, {"1", {0, 0}}}), 0) == UniPoly({R("1"), R("0"), R("3")}));
}

}
