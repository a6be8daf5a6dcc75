#include <doctest.h>

#include "poly.hpp"
#include "test_util.hpp"

using namespace lndkit;
using testutil::P;

TEST_CASE("term order is graded lex with x before y") {
    CHECK(P("y + x").str() == "x + y");
    CHECK(P("1 + y^2 + x").str() == "y^2 + x + 1");
    CHECK(P("x*y + x^2 + y^2").str() == "x^2 + x*y + y^2");
    CHECK(P("y^3 + x^2").str() == "y^3 + x^2");
}

TEST_CASE("printing is canonical") {
    CHECK(Poly().str() == "0");
    CHECK(P("0").str() == "0");
    CHECK(P("2*x - 2*x").str() == "0");
    CHECK(P("-1").str() == "-1");
    CHECK(P("x - y").str() == "x - y");
    CHECK(P("-x + y").str() == "-x + y");
    CHECK(P("x^2*y - 2/3*y").str() == "x^2*y - 2/3*y");
    CHECK(P("1/2*x").str() == "1/2*x");
    CHECK(P("-x^2").str() == "-x^2");
    CHECK(P("x^1*y^0").str() == "x");
    CHECK(P("3*x^2*y^4").str() == "3*x^2*y^4");
}

TEST_CASE("printing round-trips through the parser") {
    const char* samples[] = {
        "0", "7", "-3/5", "x", "-y", "x^2 - 2*y", "x^3 + 3*x^2*y + 3*x*y^2 + y^3",
        "1/2*x*y - 7*y^5 + 2",
    };
    for (const char* s : samples) {
        Poly p = P(s);
        CHECK(parse_poly(p.str()) == p);
        CHECK(P(p.str()).str() == p.str());
    }
}

TEST_CASE("arithmetic") {
    Poly a = P("x + y");
    Poly b = P("x - y");
    CHECK(a * b == P("x^2 - y^2"));
    CHECK(a + b == P("2*x"));
    CHECK(a - b == P("2*y"));
    CHECK(-a == P("-x - y"));
    CHECK(a.pow(0) == P("1"));
    CHECK(a.pow(3) == P("x^3 + 3*x^2*y + 3*x*y^2 + y^3"));
    CHECK(a.scaled(rat(-2, 3)) == P("-2/3*x - 2/3*y"));
    CHECK(P("x*y") * Poly() == Poly());
}

TEST_CASE("degrees and coefficients") {
    Poly p = P("x^3*y + 2*x*y^2 - 5");
    CHECK(p.degree() == 4);
    CHECK(p.degree_x() == 3);
    CHECK(p.degree_y() == 2);
    CHECK(p.coeff({3, 1}) == rat(1));
    CHECK(p.coeff({1, 2}) == rat(2));
    CHECK(p.coeff({2, 2}) == rat(0));
    CHECK(p.constant_term() == rat(-5));
    CHECK(Poly().degree() == -1);
    CHECK(P("4").degree() == 0);
    CHECK(P("y^2").degree_x() == 0);
}

TEST_CASE("partial derivatives") {
    Poly p = P("x^3*y^2 + x + 7");
    CHECK(p.partial_x() == P("3*x^2*y^2 + 1"));
    CHECK(p.partial_y() == P("2*x^3*y"));
    CHECK(P("5").partial_x() == Poly());
}

TEST_CASE("substitution is a ring morphism") {
    Poly p = P("x^2 - 2*y");
    CHECK(p.substitute(P("y"), P("x")) == P("y^2 - 2*x"));
    CHECK(p.substitute(P("x + y^3"), P("y")) == P("y^6 + 2*x*y^3 + x^2 - 2*y"));
    // composing substitutions agrees with substituting compositions
    Poly q = P("x*y + 1");
    Poly u = P("x + y"), v = P("x - y");
    Poly once = q.substitute(u, v);
    CHECK(once == P("x^2 - y^2 + 1"));
    CHECK(p.substitute(q, q) == p.substitute(P("x*y + 1"), P("x*y + 1")));
}

TEST_CASE("evaluation") {
    Poly p = P("x^2*y - 1/2");
    CHECK(p.at(rat(2), rat(3)) == rat(23, 2));
    CHECK(p.at(rat(0), rat(5)) == rat(-1, 2));
}

TEST_CASE("restriction to a line") {
    // p(t, lambda*t) as coefficients of ascending powers of t
    Poly p = P("x^2 + x*y + 3");
    auto c = p.on_line(rat(2));
    REQUIRE(c.size() == 3);
    CHECK(c[0] == rat(3));
    CHECK(c[1] == rat(0));
    CHECK(c[2] == rat(3));
}

TEST_CASE("homogeneous components") {
    Poly p = P("x^2 + x*y + x - 4");
    CHECK(p.homogeneous_component(2) == P("x^2 + x*y"));
    CHECK(p.homogeneous_component(1) == P("x"));
    CHECK(p.homogeneous_component(0) == P("-4"));
    CHECK(p.homogeneous_component(5) == Poly());
    CHECK(!p.is_homogeneous());
    CHECK(P("x^2 - y^2").is_homogeneous());
    CHECK(Poly().is_homogeneous());
}

TEST_CASE("jacobian determinant") {
    CHECK(jacobian_det(P("x"), P("y")) == P("1"));
    CHECK(jacobian_det(P("y"), P("x")) == P("-1"));
    CHECK(jacobian_det(P("x^2 - 2*y"), P("x")) == P("2"));
    // jac(f, f) = 0 and jac is alternating
    Poly f = P("x^2*y + y^3"), g = P("x - y^2");
    CHECK(jacobian_det(f, f) == Poly());
    CHECK(jacobian_det(f, g) == -jacobian_det(g, f));
}

TEST_CASE("leading form detects pure powers of a linear form") {
    auto lf = leading_form(P("x^2 + 2*x*y + y^2 + x - 3"));
    REQUIRE(lf.pure.has_value());
    CHECK(lf.degree == 2);
    CHECK(lf.pure->linear == P("x + y"));
    CHECK(lf.pure->scale == rat(1));
    CHECK(lf.pure->exponent == 2);

    auto ly = leading_form(P("3*y^2 + x"));
    REQUIRE(ly.pure.has_value());
    CHECK(ly.pure->linear == P("y"));
    CHECK(ly.pure->scale == rat(3));

    auto lx = leading_form(P("2*x^3 - y"));
    REQUIRE(lx.pure.has_value());
    CHECK(lx.pure->linear == P("x"));
    CHECK(lx.pure->scale == rat(2));
    CHECK(lx.pure->exponent == 3);

    auto lsh = leading_form(P("x^2 - 4*x*y + 4*y^2"));
    REQUIRE(lsh.pure.has_value());
    CHECK(lsh.pure->linear == P("x - 2*y"));
}

TEST_CASE("leading form failure reasons") {
    CHECK(leading_form(P("5")).absent_reason == LeadingForm::AbsentReason::DegreeZero);
    // x*y carries no x^2 term, so no power of a linear form in x matches
    CHECK(leading_form(P("x*y")).absent_reason == LeadingForm::AbsentReason::MixedFactors);
    CHECK(leading_form(P("x^2*y + 1")).absent_reason == LeadingForm::AbsentReason::MixedFactors);
    // full x-degree but two distinct roots
    CHECK(leading_form(P("x^2 - y^2")).absent_reason == LeadingForm::AbsentReason::DistinctFactors);
    CHECK(leading_form(P("x^3 + y^3")).absent_reason == LeadingForm::AbsentReason::DistinctFactors);
    CHECK_THROWS_AS(leading_form(Poly()), Error);
}

TEST_CASE("from_terms merges and drops zeros") {
    Poly p = Poly::from_terms({{{1, 0}, rat(2)}, {{0, 1}, rat(1)}, {{1, 0}, rat(-2)}});
    CHECK(p == P("y"));
    CHECK(Poly::from_terms({{{2, 2}, rat(0)}}) == Poly());
}
