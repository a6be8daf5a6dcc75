#include <doctest.h>

#include "test_util.hpp"
#include "triangularize.hpp"

using namespace lndkit;
using testutil::D;
using testutil::P;

TEST_CASE("triangular shape predicate") {
    CHECK(is_triangular(Derivation::ddx()));
    CHECK(is_triangular(Derivation::ddy()));
    CHECK(is_triangular(D("3", "x^2 - 1")));
    CHECK(is_triangular(Derivation()));
    CHECK(!is_triangular(D("y", "0")));
    CHECK(!is_triangular(D("0", "y")));
    CHECK(!is_triangular(D("x", "0")));
    CHECK(!is_triangular(D("0", "x*y")));
}

TEST_CASE("commuting pair from an independent tail") {
    CommutingPair p = commuting_independent_pair(span_reduce({Derivation::ddx(), Derivation::ddy()}));
    CHECK(p.d1 == Derivation::ddy());
    CHECK(p.d2 == Derivation::ddx());
    CHECK(p.a == P("x"));
    CHECK(p.c == P("y"));
    CHECK(bracket(p.d1, p.d2).is_zero());
    CHECK(jacobian_det(p.a, p.c).is_constant());
}

TEST_CASE("commuting pair by repairing a dependent chain") {
    // the full triangular algebra: the chain from d/dx collapses onto
    // the kernel direction of x d/dy and is replaced by its bracket
    CommutingPair p =
        commuting_independent_pair(span_reduce({Derivation::ddx(), D("0", "x"), Derivation::ddy()}));
    CHECK(p.d1 == D("0", "-1"));
    CHECK(p.d2 == Derivation::ddx());
    CHECK(p.a == P("x"));
    CHECK(p.c == P("y"));

    // a quadratic vertical field needs two bracket steps
    CommutingPair q = commuting_independent_pair(span_reduce({D("0", "x^2"), Derivation::ddx()}));
    CHECK(q.d1 == D("0", "2"));
    CHECK(q.d2 == Derivation::ddx());
    CHECK(q.a == P("x"));
    CHECK(q.c == P("y"));
    CHECK(bracket(q.d1, q.d2).is_zero());
}

TEST_CASE("pair search failures carry certificates") {
    CHECK_THROWS_AS(commuting_independent_pair(span_reduce({D("0", "x"), D("0", "1")})), Error);
    try {
        commuting_independent_pair(span_reduce({D("0", "x"), D("y", "0")}));
        FAIL("expected a non-nilpotent witness");
    } catch (const NotLndError& e) {
        CHECK(e.culprit() == D("-x", "y"));
        CHECK(e.reason() == LndVerdict::Reason::EigenvectorFound);
    }
    // both generators are locally nilpotent, but the bracket chain
    // surfaces a semisimple-times-power element of the algebra
    try {
        commuting_independent_pair(span_reduce({D("0", "x^2"), D("y^2", "0")}));
        FAIL("expected a non-nilpotent witness");
    } catch (const NotLndError& e) {
        CHECK(e.reason() == LndVerdict::Reason::KernelGeneratorNotCoordinate);
        CHECK(e.culprit() == D("2*x^4", "-8*x^3*y"));
    }
}

TEST_CASE("homogeneous quadratics as scaled squares") {
    LinearSquareForm a = linear_square_form(P("x^2"));
    CHECK(a.linear == P("x"));
    CHECK(a.scale == rat(1));
    LinearSquareForm b = linear_square_form(P("4*y^2"));
    CHECK(b.linear == P("y"));
    CHECK(b.scale == rat(4));
    LinearSquareForm c = linear_square_form(P("x^2 + 2*x*y + y^2"));
    CHECK(c.linear == P("x + y"));
    CHECK(c.scale == rat(1));
    LinearSquareForm d = linear_square_form(P("9*x^2 - 12*x*y + 4*y^2"));
    CHECK(d.linear == P("x - 2/3*y"));
    CHECK(d.scale == rat(9));

    CHECK_THROWS_AS(linear_square_form(P("x^2 - y^2")), Error);
    CHECK_THROWS_AS(linear_square_form(P("x*y")), Error);
    CHECK_THROWS_AS(linear_square_form(P("x^2 + x")), Error);
    CHECK_THROWS_AS(linear_square_form(P("x^3")), Error);
    try {
        linear_square_form(P("x^2 + y^2"));
        FAIL("expected rejection");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotASquare);
    }
}

static void check_result(const TriangularizationResult& r, const std::vector<Derivation>& gens) {
    CHECK(r.verified);
    for (const auto& img : r.images) CHECK(is_triangular(img));
    REQUIRE(r.images.size() == gens.size());
    for (size_t i = 0; i < gens.size(); ++i) CHECK(r.theta.conjugate(gens[i]) == r.images[i]);
    ConjugationCheck c = verify_conjugation(r.theta, gens);
    CHECK(c.ok());
}

TEST_CASE("triangularization cases") {
    SUBCASE("zero") {
        auto r = triangularize({Derivation()});
        CHECK(r.kind == TriCase::Zero);
        CHECK(r.verified);
        CHECK(r.theta.is_identity_chain());
    }
    SUBCASE("rank one") {
        std::vector<Derivation> gens = {D("y^2", "0")};
        auto r = triangularize(gens);
        CHECK(r.kind == TriCase::RankOneAbelian);
        check_result(r, gens);
        CHECK(r.images[0] == D("0", "x^2"));
    }
    SUBCASE("rank one, several generators") {
        std::vector<Derivation> gens = {D("y^2", "0"), D("y^3 - 2", "0")};
        auto r = triangularize(gens);
        CHECK(r.kind == TriCase::RankOneAbelian);
        check_result(r, gens);
    }
    SUBCASE("rank two abelian") {
        std::vector<Derivation> gens = {Derivation::ddx(), Derivation::ddy()};
        auto r = triangularize(gens);
        CHECK(r.kind == TriCase::RankTwoAbelian);
        check_result(r, gens);
    }
    SUBCASE("rank two nonabelian, already triangular") {
        std::vector<Derivation> gens = {Derivation::ddx(), D("0", "x^2")};
        auto r = triangularize(gens);
        CHECK(r.kind == TriCase::RankTwoNonabelian);
        check_result(r, gens);
        CHECK(r.theta.is_identity_chain());
        CHECK(r.closure.dimension == 4);
    }
    SUBCASE("rank two nonabelian through the swap") {
        std::vector<Derivation> gens = {Derivation::ddy(), D("y^2", "0")};
        auto r = triangularize(gens);
        CHECK(r.kind == TriCase::RankTwoNonabelian);
        check_result(r, gens);
        CHECK(r.theta.apply(P("y")) == P("x"));
    }
    SUBCASE("rank two nonabelian through an affine change") {
        std::vector<Derivation> gens = {Derivation::ddx(),
                                        D("-(x + y)^2", "(x + y)^2")};
        auto r = triangularize(gens);
        CHECK(r.kind == TriCase::RankTwoNonabelian);
        check_result(r, gens);
        CHECK(r.theta.apply(P("x + y")) == P("x"));
        CHECK(r.closure.dimension == 4);
    }
}

TEST_CASE("triangularization through a sheared frame") {
    PolyAut frame({ShearY{rat(1), 2}, AffineLinear::swap_xy()});
    std::vector<Derivation> gens;
    for (auto base : {Derivation::ddx(), D("0", "x^2"), D("0", "x - 1")})
        gens.push_back(frame.conjugate(base));
    CHECK(!is_triangular(gens[0]));
    auto r = triangularize(gens);
    check_result(r, gens);
    CHECK(!r.closure.capped);
    SeriesReport s = lower_central_series(r.closure.basis);
    CHECK(s.nilpotent);
}

TEST_CASE("non-nilpotent inputs are rejected up front") {
    try {
        triangularize({D("x", "0")});
        FAIL("expected rejection");
    } catch (const NotLndError& e) {
        CHECK(e.culprit() == D("x", "0"));
        CHECK(e.reason() == LndVerdict::Reason::NonzeroDivergence);
    }
    CHECK_THROWS_AS(triangularize({D("0", "x"), D("y", "0")}), NotLndError);
}

TEST_CASE("verification is independent of construction") {
    // wrong map: images stay nontriangular
    ConjugationCheck bad = verify_conjugation(PolyAut::identity(), {D("y^2", "0")});
    CHECK(!bad.ok());
    CHECK(!bad.all_triangular);
    // right map found by the pipeline
    auto r = triangularize({D("y^2", "0")});
    ConjugationCheck good = verify_conjugation(r.theta, {D("y^2", "0")});
    CHECK(good.ok());
    CHECK(good.images == r.images);
    // a map that triangularizes a different algebra does not help here
    ConjugationCheck wrong = verify_conjugation(r.theta, {D("0", "y")});
    CHECK(!wrong.ok());
}
