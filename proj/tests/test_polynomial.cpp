#include "delpezzo/poly_algebra.hpp"
#include "delpezzo/poly_parse.hpp"
#include "delpezzo/polynomial.hpp"

#include "test_helpers.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace delpezzo;

namespace {
const std::vector<std::string> XY{"x", "y"};
const std::vector<std::string> XYZ{"x", "y", "z"};

Polynomial P(const std::string& s, const std::vector<std::string>& vars) {
    return parse_polynomial(s, vars);
}
}  // namespace

TEST_CASE("arithmetic basics") {
    CHECK(P("x+y", XY) * P("x-y", XY) == P("x^2-y^2", XY));
    Polynomial p = P("3*x^2*y - 1/2*y + 7", XY);
    CHECK(p + Polynomial(XY) == p);
    CHECK(P("y^2-x^4", XY) - P("y^2", XY) == P("-x^4", XY));
    CHECK_THROWS_AS(P("x", XY) + P("x", XYZ), std::invalid_argument);
}

TEST_CASE("differentiate") {
    CHECK(P("x^2*y", XY).derivative("x") == P("2*x*y", XY));
    CHECK(P("x^3", XY).derivative("y").is_zero());
    const std::vector<std::string> V{"x", "y", "z", "t"};
    CHECK(P("t^2 - z^3 - x^6 - y^6", V).derivative("t") == P("2*t", V));
    CHECK_THROWS_AS(P("x", XY).derivative("q"), std::invalid_argument);
}

TEST_CASE("substitute") {
    // c -> c^2 style substitutions
    Polynomial g = P("z^3 + x^6", XYZ);
    Polynomial c2 = parse_polynomial("c^2");
    Polynomial out = g.substitute({{"z", c2}});
    CHECK(out == parse_polynomial("c^6 + x^6", {"x", "y", "c"}));

    Polynomial q = parse_polynomial("d^2 + a", {"d", "a"});
    Polynomial d4 = parse_polynomial("d^4", {"d"});
    // result lists unbound variables first, then variables of the bindings
    CHECK(q.substitute({{"d", d4}}) == parse_polynomial("d^8 + a", {"a", "d"}));

    // identity binding
    Polynomial p = P("x^2*y - y", XY);
    CHECK(p.substitute({{"x", parse_polynomial("x")}}) == parse_polynomial("x^2*y - y", {"y", "x"}));
}

TEST_CASE("translate to origin") {
    CHECK(P("x^2+y", XY).translate_to_origin(AffinePoint({Rational(1), Rational(0)})) ==
          P("x^2+2*x+1+y", XY));
    Polynomial p = P("x^3*y - 2*y^2 + x", XY);
    CHECK(p.translate_to_origin(AffinePoint({Rational(0), Rational(0)})) == p);
    // (x-2)(x-3) at (2,0) -> x^2 - x, expanded by hand
    Polynomial f = P("x^2 - 5*x + 6", XY);
    CHECK(f.translate_to_origin(AffinePoint({Rational(2), Rational(0)})) == P("x^2 - x", XY));
}

TEST_CASE("gcd examples") {
    CHECK(gcd(P("x^2-y^2", XY), P("x-y", XY)) == P("x-y", XY));
    CHECK(gcd(P("x^2", XY), P("y^2", XY)) == P("1", XY));
    Polynomial a = P("x+y", XYZ).pow(2) * P("z", XYZ);
    Polynomial b = P("x+y", XYZ) * P("z^2", XYZ);
    Polynomial g = gcd(a, b);
    // derived check: the gcd divides both arguments exactly and is the
    // expected product up to the grlex-monic normalization
    CHECK(divides(g, a));
    CHECK(divides(g, b));
    CHECK(g == P("x*z + y*z", XYZ));
    CHECK(gcd(Polynomial(XY), P("2*x", XY)) == P("x", XY));
    CHECK(gcd(Polynomial(XY), Polynomial(XY)).is_zero());
}

TEST_CASE("squarefree") {
    CHECK_FALSE(is_squarefree(P("x^2*y", XY)));
    CHECK(is_squarefree(P("x^2-y^2", XY)));
    Polynomial sq = P("x+y+z", XYZ) * P("x+y+z", XYZ);
    CHECK_FALSE(is_squarefree(sq));
    // squarefree despite a factor free of x
    CHECK(is_squarefree(P("x*y+x", XY)));
    CHECK_THROWS_AS(is_squarefree(Polynomial(XY)), std::domain_error);
}

TEST_CASE("resultant examples") {
    // 3x3 Sylvester determinant, frozen by hand:
    // rows (1,0,y),(1,y,0),(0,1,y) -> y^2 + y
    CHECK(resultant(P("x^2+y", XY), P("x+y", XY), "x") == P("y^2+y", XY));
    // rows (1,-1),(1,1) -> det = 2 under the p-rows-first descending convention
    CHECK(resultant(P("x-1", XY), P("x+1", XY), "x") == P("2", XY));
    Polynomial p = P("x^3 - y*x + 2", XY);
    CHECK(resultant(p, p, "x").is_zero());
    CHECK_THROWS_AS(resultant(P("y", XY), P("x", XY), "x"), std::invalid_argument);
}

TEST_CASE("resultant matches cofactor determinant oracle") {
    std::mt19937_64 rng(20260809);
    const std::vector<std::string> vars{"x", "y"};
    int done = 0;
    while (done < 12) {
        Polynomial p = testutil::random_poly(rng, vars, 4, 3, false);
        Polynomial q = testutil::random_poly(rng, vars, 4, 3, false);
        if (p.degree_in(0) < 1 || q.degree_in(0) < 1) continue;
        auto m = sylvester_matrix(p, q, 0);
        CHECK(resultant(p, q, "x") == testutil::cofactor_determinant(m, vars));
        ++done;
    }
}

TEST_CASE("ring properties on random polynomials") {
    std::mt19937_64 rng(42);
    for (int iter = 0; iter < 40; ++iter) {
        Polynomial p = testutil::random_poly(rng, XYZ);
        Polynomial q = testutil::random_poly(rng, XYZ);
        Polynomial r = testutil::random_poly(rng, XYZ);
        CHECK(p * q == q * p);
        CHECK(p * (q + r) == p * q + p * r);
        // Leibniz rule
        for (std::size_t v = 0; v < 3; ++v) {
            CHECK((p * q).derivative(v) == p.derivative(v) * q + p * q.derivative(v));
        }
    }
}

TEST_CASE("substitute is a ring homomorphism") {
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 20; ++iter) {
        Polynomial p = testutil::random_poly(rng, XY, 4, 3);
        Polynomial q = testutil::random_poly(rng, XY, 4, 3);
        std::map<std::string, Polynomial> b{
            {"x", testutil::random_poly(rng, {"u", "v"}, 3, 2)},
            {"y", testutil::random_poly(rng, {"u", "v"}, 3, 2)}};
        CHECK((p * q).substitute(b) == p.substitute(b) * q.substitute(b));
        CHECK((p + q).substitute(b) == p.substitute(b) + q.substitute(b));
    }
}

TEST_CASE("gcd divides both arguments") {
    std::mt19937_64 rng(99);
    for (int iter = 0; iter < 15; ++iter) {
        Polynomial p = testutil::random_poly(rng, XY, 3, 3);
        Polynomial q = testutil::random_poly(rng, XY, 3, 3);
        Polynomial common = testutil::random_poly(rng, XY, 2, 2, false);
        if (common.is_zero()) continue;
        Polynomial a = p * common;
        Polynomial b = q * common;
        if (a.is_zero() && b.is_zero()) continue;
        Polynomial g = gcd(a, b);
        CHECK(divides(g, a));
        CHECK(divides(g, b));
        // the planted factor must divide the gcd
        CHECK(divides(common * (Rational(1) / common.leading_term().second), g));
    }
}

TEST_CASE("resultant vanishes exactly on planted common factors") {
    std::mt19937_64 rng(1234);
    int planted = 0, coprime = 0;
    while (planted < 8 || coprime < 8) {
        Polynomial p = testutil::random_poly(rng, XY, 3, 2, false);
        Polynomial q = testutil::random_poly(rng, XY, 3, 2, false);
        Polynomial f = testutil::random_poly(rng, XY, 2, 2, false);
        if (!f.involves(0)) continue;
        if (planted < 8) {
            Polynomial a = p * f;
            Polynomial b = q * f;
            if (a.degree_in(0) >= 1 && b.degree_in(0) >= 1) {
                CHECK(resultant(a, b, "x").is_zero());
                ++planted;
            }
        }
        if (coprime < 8 && p.degree_in(0) >= 1 && q.degree_in(0) >= 1) {
            Polynomial g = gcd(p, q);
            bool common_in_x = g.degree_in(0) >= 1;
            CHECK(resultant(p, q, "x").is_zero() == common_in_x);
            ++coprime;
        }
    }
}

TEST_CASE("parser round trip") {
    std::vector<std::string> samples{
        "t^2 - 1/2*x^6 - y^6 - z^3",
        "0",
        "-x",
        "3/4",
        "x^2*y - 2*x*y^2 + 1/3",
        "- 5*x + x*y*x",  // repeated factor x*y*x -> x^2*y
    };
    for (const auto& s : samples) {
        Polynomial p = parse_polynomial(s);
        Polynomial again = parse_polynomial(p.str(), p.variables());
        CHECK(p == again);
    }
    std::mt19937_64 rng(555);
    for (int iter = 0; iter < 30; ++iter) {
        Polynomial p = testutil::random_poly(rng, XYZ, 6, 5);
        CHECK(parse_polynomial(p.str(), XYZ) == p);
    }
}

TEST_CASE("parser reports line and column") {
    try {
        parse_polynomial("x^2 +\n @y", {"x", "y"});
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.column == 2);
    }
    CHECK_THROWS_AS(parse_polynomial("x + q", {"x", "y"}), ParseError);
    CHECK_THROWS_AS(parse_polynomial(""), ParseError);
}

TEST_CASE("evaluation and points") {
    Polynomial p = P("x^2 + y", XY);
    CHECK(p.evaluate(AffinePoint({Rational(3), Rational(1)})) == Rational(10));
    CHECK_THROWS_AS(p.evaluate(AffinePoint({Rational(1)})), std::invalid_argument);
}
